#pragma once

// Exact scalar types: arbitrary-precision rationals, gaussian rationals,
// and residues mod n. All arithmetic is exact; equality is bit-exact on
// canonical forms (mpq_class keeps fractions reduced, Mod keeps values in
// [0, n)).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace epkit {

using Rat = mpq_class;

// a + b*i with exact rational parts.
struct Gauss {
    Rat re, im;

    Gauss() : re(0), im(0) {}
    Gauss(Rat r) : re(std::move(r)), im(0) {}
    Gauss(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    friend Gauss operator+(const Gauss& a, const Gauss& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Gauss operator-(const Gauss& a, const Gauss& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const Gauss& a, const Gauss& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Residue mod n, canonical value in [0, n). The modulus travels with the
// value so matrices over Z_n need no external context.
struct Mod {
    std::uint64_t v = 0;
    std::uint64_t n = 0;

    Mod() = default;
    Mod(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), n(modulus) {}

    static Mod from_signed(long long value, std::uint64_t modulus) {
        long long r = value % static_cast<long long>(modulus);
        if (r < 0) r += static_cast<long long>(modulus);
        return Mod(static_cast<std::uint64_t>(r), modulus);
    }

    friend Mod operator+(const Mod& a, const Mod& b) {
        check(a, b);
        unsigned __int128 s = static_cast<unsigned __int128>(a.v) + b.v;
        return Mod(static_cast<std::uint64_t>(s % a.n), a.n);
    }
    friend Mod operator-(const Mod& a, const Mod& b) {
        check(a, b);
        return Mod(a.v >= b.v ? a.v - b.v : a.v + a.n - b.v, a.n);
    }
    friend Mod operator-(const Mod& a) {
        return Mod(a.v == 0 ? 0 : a.n - a.v, a.n);
    }
    friend Mod operator*(const Mod& a, const Mod& b) {
        check(a, b);
        unsigned __int128 p = static_cast<unsigned __int128>(a.v) * b.v;
        return Mod(static_cast<std::uint64_t>(p % a.n), a.n);
    }
    friend bool operator==(const Mod& a, const Mod& b) { return a.v == b.v && a.n == b.n; }

  private:
    static void check(const Mod& a, const Mod& b) {
        if (a.n == 0 || a.n != b.n) throw std::logic_error("mixed or unset moduli");
    }
};

// --- uniform scalar interface used by Matrix / linalg templates ---

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Gauss zero_like(const Gauss&) { return Gauss(); }
inline Gauss one_like(const Gauss&) { return Gauss(Rat(1)); }
inline Mod zero_like(const Mod& s) { return Mod(0, s.n); }
inline Mod one_like(const Mod& s) { return Mod(1, s.n); }

inline Rat conj_scalar(const Rat& s) { return s; }
inline Gauss conj_scalar(const Gauss& s) { return {s.re, -s.im}; }
inline Mod conj_scalar(const Mod& s) { return s; }

inline bool is_zero(const Rat& s) { return s == 0; }
inline bool is_zero(const Gauss& s) { return s.re == 0 && s.im == 0; }
inline bool is_zero(const Mod& s) { return s.v == 0; }

// Multiplicative inverse where one exists (all nonzero rationals/gaussians,
// units mod n).
inline std::optional<Rat> invert(const Rat& s) {
    if (s == 0) return std::nullopt;
    return Rat(1) / s;
}
inline std::optional<Gauss> invert(const Gauss& s) {
    Rat norm = s.re * s.re + s.im * s.im;
    if (norm == 0) return std::nullopt;
    return Gauss{s.re / norm, -s.im / norm};
}
std::optional<Mod> invert(const Mod& s);

bool is_prime_u64(std::uint64_t n);

std::string scalar_to_string(const Rat& s);
std::string scalar_to_string(const Gauss& s);
std::string scalar_to_string(const Mod& s);

Rat parse_rat(const std::string& text);
Gauss parse_gauss(const std::string& text);
Mod parse_mod(const std::string& text, std::uint64_t modulus);

}  // namespace epkit
