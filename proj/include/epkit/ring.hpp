#pragma once

// Unital rings with involution, realized exactly: Z_n with identity
// involution, and k x k matrix rings over Q, Q(i), GF(p), or Z_n with
// (conjugate-)transpose. Elements are immutable values; all arithmetic is
// exact and equality is bit-exact on canonical forms.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "epkit/linalg.hpp"
#include "epkit/matrix.hpp"

namespace epkit {

// Maps to CLI exit code 2: bad ring specs, malformed elements, enumeration
// cap violations, unmet operation preconditions.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violation of a uniqueness-by-theory guarantee discovered at run time
// (a search finding two distinct inverses of a kind that must be unique).
// Maps to CLI exit code 1.
struct IntegrityFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RingKind { ModularIntegers, MatrixRing };
enum class ScalarKind { Rationals, GaussianRationals, PrimeField, ModularIntegers };
enum class Involution { Identity, Transpose, ConjTranspose };

struct RingSpec {
    RingKind kind = RingKind::MatrixRing;
    std::size_t dim = 1;                        // k; 1 for modular integers
    ScalarKind scalar = ScalarKind::Rationals;  // entry type
    std::uint64_t modulus = 0;                  // PrimeField / ModularIntegers only
    Involution involution = Involution::Transpose;

    bool operator==(const RingSpec&) const = default;

    bool finite() const {
        return scalar == ScalarKind::PrimeField || scalar == ScalarKind::ModularIntegers;
    }
    bool commutative() const { return kind == RingKind::ModularIntegers || dim == 1; }
    // Entries form a field, so elimination-based linear algebra is legal.
    bool field_entries() const {
        switch (scalar) {
            case ScalarKind::Rationals:
            case ScalarKind::GaussianRationals:
            case ScalarKind::PrimeField:
                return true;
            case ScalarKind::ModularIntegers:
                return is_prime_u64(modulus);
        }
        return false;
    }
    // Full matrix ring over a field: a prime (indeed semiprime) ring.
    bool prime_flagged() const { return field_entries(); }

    // Element count when finite and no larger than cap.
    std::optional<std::uint64_t> element_count(std::uint64_t cap) const;

    std::string name() const;
};

// Throws UsageError on invalid combinations (identity involution on a
// noncommutative ring, conjugate-transpose without gaussian scalars,
// composite GF modulus, modulus < 2, dim < 1).
void validate_ring_spec(const RingSpec& spec);

// Grammar: Zmod:<n> | Mat:<k>:Q | Mat:<k>:Qi | Mat:<k>:GF<p> | Mat:<k>:Zmod<n>.
RingSpec parse_ring_spec(const std::string& text);

using Payload = std::variant<Matrix<Rat>, Matrix<Gauss>, Matrix<Mod>>;

struct Element {
    RingSpec ring;
    Payload payload;

    bool operator==(const Element& o) const {
        return ring == o.ring && payload == o.payload;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }
};

Element zero_of(const RingSpec& ring);
Element one_of(const RingSpec& ring);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Element& a, const Element& b);

Element star(const Element& a);
Element commutator(const Element& a, const Element& b);  // ab - ba
Element power(const Element& a, unsigned n);             // n >= 1
bool is_zero(const Element& a);
bool is_one(const Element& a);

struct ElementClass {
    bool hermitian = false;
    bool idempotent = false;
    bool projection = false;
    bool unit = false;
    bool left_invertible = false;
    bool right_invertible = false;
    std::optional<Element> inverse;  // two-sided witness when unit
};

ElementClass classify(const Element& a);

// Two-sided inverse when a is a unit (determinant-unit test, exact).
std::optional<Element> unit_inverse(const Element& a);

inline constexpr std::uint64_t kDefaultEnumCap = 1000000;

// Deterministic total enumeration of a finite ring, lexicographic on the
// canonical row-major payload (entry (0,0) most significant).
class Enumeration {
public:
    Enumeration(const RingSpec& ring, std::uint64_t cap = kDefaultEnumCap);
    std::uint64_t size() const { return size_; }
    Element at(std::uint64_t index) const;
    std::uint64_t index_of(const Element& a) const;

private:
    RingSpec ring_;
    std::uint64_t size_;
};

// Zmod: a bare integer. Matrix rings: [[..],..] row lists (entries may be
// quoted) or a JSON object {"rows":k,"cols":k,"entries":[[..],..]}.
Element parse_element(const RingSpec& ring, const std::string& text);

// Canonical rendering; parse_element(ring, element_to_string(a)) == a.
std::string element_to_string(const Element& a);

}  // namespace epkit
