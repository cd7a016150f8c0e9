#include "epkit/ring.hpp"

#include <cctype>
#include <type_traits>

#include <json.hpp>

namespace epkit {

namespace {

using nlohmann::json;

// Apply f to the payload matrix, wrapping the result back into a payload.
template <typename F>
Payload map_payload(const Payload& p, F f) {
    return std::visit([&](const auto& m) -> Payload { return f(m); }, p);
}

// Apply f to two payloads of the same alternative.
template <typename F>
Payload zip_payload(const Payload& x, const Payload& y, F f) {
    return std::visit(
        [&](const auto& a, const auto& b) -> Payload {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, std::decay_t<decltype(b)>>)
                return f(a, b);
            else
                throw std::logic_error("mixed payload kinds");
        },
        x, y);
}

void check_same_ring(const Element& a, const Element& b) {
    if (!(a.ring == b.ring)) throw UsageError("elements belong to different rings");
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    if (text.empty()) throw UsageError("missing " + what);
    std::uint64_t v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw UsageError("bad " + what + ": " + text);
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > (std::uint64_t(1) << 62)) throw UsageError(what + " too large: " + text);
    }
    return v;
}

}  // namespace

std::optional<std::uint64_t> RingSpec::element_count(std::uint64_t cap) const {
    if (!finite()) return std::nullopt;
    unsigned __int128 count = 1;
    for (std::size_t i = 0; i < dim * dim; ++i) {
        count *= modulus;
        if (count > cap) return std::nullopt;
    }
    return static_cast<std::uint64_t>(count);
}

std::string RingSpec::name() const {
    if (kind == RingKind::ModularIntegers) return "Zmod:" + std::to_string(modulus);
    std::string s = "Mat:" + std::to_string(dim) + ":";
    switch (scalar) {
        case ScalarKind::Rationals: return s + "Q";
        case ScalarKind::GaussianRationals: return s + "Qi";
        case ScalarKind::PrimeField: return s + "GF" + std::to_string(modulus);
        case ScalarKind::ModularIntegers: return s + "Zmod" + std::to_string(modulus);
    }
    throw std::logic_error("unreachable");
}

void validate_ring_spec(const RingSpec& spec) {
    if (spec.dim < 1) throw UsageError("ring dim must be >= 1");
    if (spec.kind == RingKind::ModularIntegers && spec.dim != 1)
        throw UsageError("modular-integer rings have dim 1");
    bool modular = spec.scalar == ScalarKind::PrimeField ||
                   spec.scalar == ScalarKind::ModularIntegers;
    if (modular && spec.modulus < 2) throw UsageError("modulus must be >= 2");
    if (!modular && spec.modulus != 0)
        throw UsageError("modulus set on a characteristic-zero ring");
    if (spec.scalar == ScalarKind::PrimeField && !is_prime_u64(spec.modulus))
        throw UsageError("GF modulus must be prime: " + std::to_string(spec.modulus));
    switch (spec.involution) {
        case Involution::Identity:
            if (!spec.commutative())
                throw UsageError("identity involution requires a commutative ring");
            break;
        case Involution::ConjTranspose:
            if (spec.scalar != ScalarKind::GaussianRationals)
                throw UsageError("conjugate-transpose requires gaussian-rational scalars");
            break;
        case Involution::Transpose:
            if (spec.scalar == ScalarKind::GaussianRationals)
                throw UsageError("gaussian-rational rings use conjugate-transpose");
            break;
    }
}

RingSpec parse_ring_spec(const std::string& text) {
    RingSpec spec;
    if (text.rfind("Zmod:", 0) == 0) {
        spec.kind = RingKind::ModularIntegers;
        spec.dim = 1;
        spec.scalar = ScalarKind::ModularIntegers;
        spec.modulus = parse_uint(text.substr(5), "modulus");
        spec.involution = Involution::Identity;
        validate_ring_spec(spec);
        return spec;
    }
    if (text.rfind("Mat:", 0) == 0) {
        std::size_t second = text.find(':', 4);
        if (second == std::string::npos)
            throw UsageError("bad ring spec (want Mat:<k>:<scalar>): " + text);
        spec.kind = RingKind::MatrixRing;
        spec.dim = static_cast<std::size_t>(parse_uint(text.substr(4, second - 4), "dim"));
        std::string sc = text.substr(second + 1);
        if (sc == "Q") {
            spec.scalar = ScalarKind::Rationals;
            spec.involution = Involution::Transpose;
        } else if (sc == "Qi") {
            spec.scalar = ScalarKind::GaussianRationals;
            spec.involution = Involution::ConjTranspose;
        } else if (sc.rfind("GF", 0) == 0) {
            spec.scalar = ScalarKind::PrimeField;
            spec.modulus = parse_uint(sc.substr(2), "GF modulus");
            spec.involution = Involution::Transpose;
        } else if (sc.rfind("Zmod", 0) == 0) {
            spec.scalar = ScalarKind::ModularIntegers;
            spec.modulus = parse_uint(sc.substr(4), "modulus");
            spec.involution = Involution::Transpose;
        } else {
            throw UsageError("unknown scalar kind: " + sc);
        }
        validate_ring_spec(spec);
        return spec;
    }
    throw UsageError("bad ring spec (want Zmod:<n> or Mat:<k>:<scalar>): " + text);
}

Element zero_of(const RingSpec& ring) {
    std::size_t k = ring.dim;
    switch (ring.scalar) {
        case ScalarKind::Rationals:
            return {ring, Matrix<Rat>::zero(k, k, Rat(0))};
        case ScalarKind::GaussianRationals:
            return {ring, Matrix<Gauss>::zero(k, k, Gauss())};
        case ScalarKind::PrimeField:
        case ScalarKind::ModularIntegers:
            return {ring, Matrix<Mod>::zero(k, k, Mod(0, ring.modulus))};
    }
    throw std::logic_error("unreachable");
}

Element one_of(const RingSpec& ring) {
    std::size_t k = ring.dim;
    switch (ring.scalar) {
        case ScalarKind::Rationals:
            return {ring, Matrix<Rat>::identity(k, Rat(0))};
        case ScalarKind::GaussianRationals:
            return {ring, Matrix<Gauss>::identity(k, Gauss())};
        case ScalarKind::PrimeField:
        case ScalarKind::ModularIntegers:
            return {ring, Matrix<Mod>::identity(k, Mod(0, ring.modulus))};
    }
    throw std::logic_error("unreachable");
}

Element operator+(const Element& a, const Element& b) {
    check_same_ring(a, b);
    return {a.ring, zip_payload(a.payload, b.payload,
                                [](const auto& x, const auto& y) { return x + y; })};
}

Element operator-(const Element& a, const Element& b) {
    check_same_ring(a, b);
    return {a.ring, zip_payload(a.payload, b.payload,
                                [](const auto& x, const auto& y) { return x - y; })};
}

Element operator-(const Element& a) {
    return {a.ring, map_payload(a.payload, [](const auto& x) { return -x; })};
}

Element operator*(const Element& a, const Element& b) {
    check_same_ring(a, b);
    return {a.ring, zip_payload(a.payload, b.payload,
                                [](const auto& x, const auto& y) { return x * y; })};
}

// All realized involutions are conjugate-transposition of the payload:
// plain transpose when conjugation is trivial (Rat, Mod), and the identity
// map on 1 x 1 commutative payloads.
Element star(const Element& a) {
    return {a.ring, map_payload(a.payload, [](const auto& x) { return x.conj_transpose(); })};
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element power(const Element& a, unsigned n) {
    if (n == 0) throw UsageError("power exponent must be >= 1");
    Element acc = a;
    for (unsigned i = 1; i < n; ++i) acc = acc * a;
    return acc;
}

bool is_zero(const Element& a) {
    return std::visit([](const auto& m) { return m.all_zero(); }, a.payload);
}

bool is_one(const Element& a) { return a == one_of(a.ring); }

std::optional<Element> unit_inverse(const Element& a) {
    return std::visit(
        [&](const auto& m) -> std::optional<Element> {
            using M = std::decay_t<decltype(m)>;
            std::optional<M> inv;
            if constexpr (std::is_same_v<M, Matrix<Mod>>) {
                inv = mod_inverse(m);
            } else {
                inv = field_inverse(m);
            }
            if (!inv) return std::nullopt;
            return Element{a.ring, std::move(*inv)};
        },
        a.payload);
}

ElementClass classify(const Element& a) {
    ElementClass c;
    c.hermitian = star(a) == a;
    c.idempotent = a * a == a;
    c.projection = c.hermitian && c.idempotent;
    c.inverse = unit_inverse(a);
    c.unit = c.inverse.has_value();
    // Square matrices over a commutative base: one-sided invertibility
    // already forces a unit determinant, hence a two-sided inverse.
    c.left_invertible = c.unit;
    c.right_invertible = c.unit;
    return c;
}

Enumeration::Enumeration(const RingSpec& ring, std::uint64_t cap) : ring_(ring) {
    if (!ring.finite()) throw UsageError("cannot enumerate infinite ring " + ring.name());
    auto n = ring.element_count(cap);
    if (!n)
        throw UsageError("ring " + ring.name() + " exceeds enumeration cap " +
                         std::to_string(cap));
    size_ = *n;
}

Element Enumeration::at(std::uint64_t index) const {
    if (index >= size_) throw UsageError("enumeration index out of range");
    Element e = zero_of(ring_);
    auto& m = std::get<Matrix<Mod>>(e.payload);
    std::size_t cells = ring_.dim * ring_.dim;
    std::uint64_t rest = index;
    for (std::size_t j = cells; j-- > 0;) {
        m.flat()[j] = Mod(rest % ring_.modulus, ring_.modulus);
        rest /= ring_.modulus;
    }
    return e;
}

std::uint64_t Enumeration::index_of(const Element& a) const {
    if (!(a.ring == ring_)) throw UsageError("element from a different ring");
    const auto& m = std::get<Matrix<Mod>>(a.payload);
    std::uint64_t idx = 0;
    for (const Mod& s : m.flat()) idx = idx * ring_.modulus + s.v;
    return idx;
}

namespace {

template <typename S, typename FromInt, typename FromStr>
Matrix<S> matrix_from_json_entries(const json& entries, std::size_t k, const S& model,
                                   FromInt from_int, FromStr from_str) {
    if (!entries.is_array() || entries.size() != k)
        throw UsageError("element must have " + std::to_string(k) + " rows");
    Matrix<S> m = Matrix<S>::zero(k, k, model);
    for (std::size_t i = 0; i < k; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != k)
            throw UsageError("element row " + std::to_string(i) + " must have " +
                             std::to_string(k) + " entries");
        for (std::size_t j = 0; j < k; ++j) {
            const json& cell = row[j];
            if (cell.is_number_integer())
                m.at(i, j) = from_int(cell.get<long long>());
            else if (cell.is_string())
                m.at(i, j) = from_str(cell.get<std::string>());
            else
                throw UsageError("matrix entries must be integers or strings");
        }
    }
    return m;
}

Payload payload_from_entries(const RingSpec& ring, const json& entries) {
    std::size_t k = ring.dim;
    try {
        switch (ring.scalar) {
            case ScalarKind::Rationals:
                return matrix_from_json_entries<Rat>(
                    entries, k, Rat(0), [](long long v) { return Rat(static_cast<long>(v)); },
                    [](const std::string& s) { return parse_rat(s); });
            case ScalarKind::GaussianRationals:
                return matrix_from_json_entries<Gauss>(
                    entries, k, Gauss(),
                    [](long long v) { return Gauss(Rat(static_cast<long>(v))); },
                    [](const std::string& s) { return parse_gauss(s); });
            case ScalarKind::PrimeField:
            case ScalarKind::ModularIntegers:
                return matrix_from_json_entries<Mod>(
                    entries, k, Mod(0, ring.modulus),
                    [&](long long v) { return Mod::from_signed(v, ring.modulus); },
                    [&](const std::string& s) { return parse_mod(s, ring.modulus); });
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad matrix entry: ") + e.what());
    }
    throw std::logic_error("unreachable");
}

// The canonical rendering [[0,1],[0,1]] or [[1/2,1/2],...] is not always
// strict JSON (bare fractions), so quote bare tokens before parsing.
json tolerant_rows(const std::string& text) {
    std::string fixed;
    fixed.reserve(text.size() + 16);
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == ',') {
            fixed += c;
            ++i;
            continue;
        }
        if (c == '"') {
            std::size_t end = text.find('"', i + 1);
            if (end == std::string::npos) throw UsageError("unterminated string in element");
            fixed.append(text, i, end - i + 1);
            i = end + 1;
            continue;
        }
        // bare token: run to the next delimiter, then quote it
        std::size_t end = i;
        while (end < text.size() && text[end] != ',' && text[end] != ']' && text[end] != '[' &&
               !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        fixed += '"';
        fixed.append(text, i, end - i);
        fixed += '"';
        i = end;
    }
    json j = json::parse(fixed, nullptr, false);
    if (j.is_discarded()) throw UsageError("malformed element literal: " + text);
    return j;
}

}  // namespace

Element parse_element(const RingSpec& ring, const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw UsageError("empty element literal");
    char lead = text[first];

    if (ring.kind == RingKind::ModularIntegers) {
        if (lead == '[' || lead == '{')
            throw UsageError("elements of " + ring.name() + " are bare integers");
        try {
            Mod v = parse_mod(text.substr(first), ring.modulus);
            Matrix<Mod> m = Matrix<Mod>::zero(1, 1, Mod(0, ring.modulus));
            m.at(0, 0) = v;
            return {ring, std::move(m)};
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad element literal: ") + e.what());
        }
    }

    if (lead == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw UsageError("malformed element JSON");
        if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
            throw UsageError("element object needs rows, cols, entries");
        if (j["rows"] != ring.dim || j["cols"] != ring.dim)
            throw UsageError("element shape does not match ring " + ring.name());
        return {ring, payload_from_entries(ring, j["entries"])};
    }
    if (lead == '[') return {ring, payload_from_entries(ring, tolerant_rows(text))};
    throw UsageError("bad element literal for " + ring.name());
}

std::string element_to_string(const Element& a) {
    if (a.ring.kind == RingKind::ModularIntegers)
        return scalar_to_string(std::get<Matrix<Mod>>(a.payload).at(0, 0));
    return std::visit([](const auto& m) { return matrix_to_string(m); }, a.payload);
}

}  // namespace epkit
