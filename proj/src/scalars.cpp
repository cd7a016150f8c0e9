#include "epkit/scalars.hpp"

#include <cctype>

namespace epkit {

namespace {

// Extended gcd on unsigned inputs; returns g and x with a*x ≡ g (mod n).
std::uint64_t ext_gcd_mod(std::uint64_t a, std::uint64_t n, std::uint64_t& inv_out) {
    long long old_r = static_cast<long long>(a), r = static_cast<long long>(n);
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    long long x = old_s % static_cast<long long>(n);
    if (x < 0) x += static_cast<long long>(n);
    inv_out = static_cast<std::uint64_t>(x);
    return static_cast<std::uint64_t>(old_r);
}

}  // namespace

std::optional<Mod> invert(const Mod& s) {
    if (s.n == 0) throw std::logic_error("unset modulus");
    if (s.n == 1) return Mod(0, 1);
    std::uint64_t inv = 0;
    if (ext_gcd_mod(s.v % s.n, s.n, inv) != 1) return std::nullopt;
    return Mod(inv, s.n);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string scalar_to_string(const Rat& s) { return s.get_str(); }

std::string scalar_to_string(const Gauss& s) {
    if (s.im == 0) return s.re.get_str();
    std::string imag = Rat(abs(s.im)).get_str() + "*i";
    std::string sign = s.im < 0 ? "-" : "+";
    if (s.re == 0) return (s.im < 0 ? "-" : "") + imag;
    return s.re.get_str() + sign + imag;
}

std::string scalar_to_string(const Mod& s) { return std::to_string(s.v); }

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    // mpq_set_str takes a leading '-' but not '+'
    std::string body = text[0] == '+' ? text.substr(1) : text;
    if (body.empty()) throw std::invalid_argument("bad rational literal: " + text);
    Rat r;
    if (r.set_str(body, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

// Accepts "a", "a+b*i", "a-b*i", "b*i", "-b*i", "i", "-i", with rational a, b.
Gauss parse_gauss(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty gaussian literal");
    if (text == "i") return Gauss(Rat(0), Rat(1));
    if (text == "-i") return Gauss(Rat(0), Rat(-1));
    // Split at the last '+' or '-' not at position 0 and not inside an exponent-free
    // rational (rationals here contain only digits, '/', and a leading sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if (text[i] == '+' || text[i] == '-') {
            split = i;
            break;
        }
    }
    bool has_imag = text.size() >= 2 && text.compare(text.size() - 2, 2, "*i") == 0;
    if (!has_imag) {
        if (text.back() == 'i') throw std::invalid_argument("bad gaussian literal: " + text);
        return Gauss(parse_rat(text));
    }
    std::string body = text.substr(0, text.size() - 2);
    if (split == std::string::npos || split >= body.size()) {
        // pure imaginary, possibly signed
        return Gauss(Rat(0), parse_rat(body));
    }
    std::string re_part = text.substr(0, split);
    std::string im_part = body.substr(split);  // includes sign
    if (im_part == "+" ) im_part = "1";
    else if (im_part == "-") im_part = "-1";
    return Gauss(parse_rat(re_part), parse_rat(im_part));
}

Mod parse_mod(const std::string& text, std::uint64_t modulus) {
    if (text.empty()) throw std::invalid_argument("empty residue literal");
    std::size_t pos = 0;
    bool neg = text[0] == '-';
    if (neg || text[0] == '+') pos = 1;
    if (pos >= text.size()) throw std::invalid_argument("bad residue literal: " + text);
    long long value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("bad residue literal: " + text);
        value = value * 10 + (text[pos] - '0');
        if (value > (1LL << 62)) throw std::invalid_argument("residue literal too large: " + text);
    }
    return Mod::from_signed(neg ? -value : value, modulus);
}

}  // namespace epkit
