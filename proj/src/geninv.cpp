#include "epkit/geninv.hpp"

#include <type_traits>

namespace epkit {

namespace {

// --- closed forms over field entries (payload level) ---

// Moore-Penrose from a = FG: x = G* (GG*)^-1 (F*F)^-1 F*. Complete over
// any field with involution: either Gram matrix singular means no MP.
template <typename S>
std::optional<Matrix<S>> mp_closed(const Matrix<S>& m) {
    RankFactor<S> f = rank_factor(m);
    if (f.c.cols() == 0) return Matrix<S>::zero(m.rows(), m.cols(), m.model());
    Matrix<S> gs = f.r.conj_transpose();
    Matrix<S> fs = f.c.conj_transpose();
    auto ggs = field_inverse(f.r * gs);
    if (!ggs) return std::nullopt;
    auto fsf = field_inverse(fs * f.c);
    if (!fsf) return std::nullopt;
    return gs * *ggs * *fsf * fs;
}

// Group inverse from a = FG: exists iff GF invertible; x = F (GF)^-2 G.
template <typename S>
std::optional<Matrix<S>> group_closed(const Matrix<S>& m) {
    RankFactor<S> f = rank_factor(m);
    if (f.c.cols() == 0) return Matrix<S>::zero(m.rows(), m.cols(), m.model());
    auto gf = field_inverse(f.r * f.c);
    if (!gf) return std::nullopt;
    return f.c * *gf * *gf * f.r;
}

// A {1}-inverse from a = FG without using the involution: L F = I via an
// invertible row selection of F, G R = I via an invertible column
// selection of G, and x = R L. Total over field matrices.
template <typename S>
Matrix<S> one_closed(const Matrix<S>& m) {
    RankFactor<S> f = rank_factor(m);
    std::size_t r = f.c.cols(), k = m.rows();
    if (r == 0) return Matrix<S>::zero(k, k, m.model());
    Matrix<S> ct = f.c.transpose();
    std::vector<std::size_t> prows = rref_in_place(ct);  // independent rows of F
    Matrix<S> fp = Matrix<S>::zero(r, r, m.model());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) fp.at(i, j) = f.c.at(prows[i], j);
    auto fpi = field_inverse(fp);
    if (!fpi) throw std::logic_error("pivot row selection not invertible");
    Matrix<S> left = Matrix<S>::zero(r, k, m.model());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) left.at(i, prows[j]) = fpi->at(i, j);

    Matrix<S> gw = f.r;
    std::vector<std::size_t> pcols = rref_in_place(gw);  // independent columns of G
    Matrix<S> gq = Matrix<S>::zero(r, r, m.model());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gq.at(i, j) = f.r.at(i, pcols[j]);
    auto gqi = field_inverse(gq);
    if (!gqi) throw std::logic_error("pivot column selection not invertible");
    Matrix<S> right = Matrix<S>::zero(k, r, m.model());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) right.at(pcols[i], j) = gqi->at(i, j);

    return right * left;
}

template <typename F>
std::optional<Element> on_payload(const Element& a, F f) {
    return std::visit(
        [&](const auto& m) -> std::optional<Element> {
            auto x = f(m);
            if (!x) return std::nullopt;
            return Element{a.ring, std::move(*x)};
        },
        a.payload);
}

// --- equation sets ---

using Eq = std::pair<const char*, bool (*)(const Element&, const Element&, const Element&)>;

bool eq_axa(const Element& a, const Element& x, const Element&) { return a * x * a == a; }
bool eq_xax(const Element& a, const Element& x, const Element&) { return x * a * x == x; }
bool eq_ax_h(const Element& a, const Element& x, const Element&) {
    Element ax = a * x;
    return star(ax) == ax;
}
bool eq_xa_h(const Element& a, const Element& x, const Element&) {
    Element xa = x * a;
    return star(xa) == xa;
}
bool eq_comm(const Element& a, const Element& x, const Element&) { return a * x == x * a; }
bool eq_xaa(const Element& a, const Element& x, const Element&) { return x * a * a == a; }
bool eq_axx(const Element& a, const Element& x, const Element&) { return a * x * x == x; }
bool eq_aax(const Element& a, const Element& x, const Element&) { return a * a * x == a; }
bool eq_xxa(const Element& a, const Element& x, const Element&) { return x * x * a == x; }

const std::vector<Eq>& equations_for(InverseKind kind) {
    static const std::vector<Eq> one = {{"axa=a", eq_axa}};
    static const std::vector<Eq> mp = {{"axa=a", eq_axa},
                                       {"xax=x", eq_xax},
                                       {"(ax)*=ax", eq_ax_h},
                                       {"(xa)*=xa", eq_xa_h}};
    static const std::vector<Eq> group = {
        {"axa=a", eq_axa}, {"xax=x", eq_xax}, {"ax=xa", eq_comm}};
    static const std::vector<Eq> core = {{"axa=a", eq_axa},
                                         {"xax=x", eq_xax},
                                         {"(ax)*=ax", eq_ax_h},
                                         {"xa^2=a", eq_xaa},
                                         {"ax^2=x", eq_axx}};
    static const std::vector<Eq> dual = {{"axa=a", eq_axa},
                                         {"xax=x", eq_xax},
                                         {"(xa)*=xa", eq_xa_h},
                                         {"a^2x=a", eq_aax},
                                         {"x^2a=x", eq_xxa}};
    switch (kind) {
        case InverseKind::One: return one;
        case InverseKind::MoorePenrose: return mp;
        case InverseKind::Group: return group;
        case InverseKind::Core: return core;
        case InverseKind::DualCore: return dual;
    }
    throw std::logic_error("unreachable");
}

bool satisfies(const Element& a, const Element& x, InverseKind kind) {
    for (const Eq& eq : equations_for(kind))
        if (!eq.second(a, x, a)) return false;
    return true;
}

// Exhaustive search; unique=true raises IntegrityFault on two solutions.
std::optional<Element> search(const Element& a, InverseKind kind, bool unique,
                              std::uint64_t cap) {
    Enumeration e(a.ring, cap);
    std::optional<Element> found;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        Element x = e.at(i);
        if (!satisfies(a, x, kind)) continue;
        if (!unique) return x;
        if (found)
            throw IntegrityFault("two distinct " + inverse_kind_name(kind) + " inverses of " +
                                 element_to_string(a) + " in " + a.ring.name());
        found = x;
    }
    return found;
}

// Accept a closed-form candidate only when certified; nullopt means the
// caller must decide absence by other means.
std::optional<Element> certified_or_nothing(const Element& a,
                                            const std::optional<Element>& cand,
                                            InverseKind kind) {
    if (cand && satisfies(a, *cand, kind)) return cand;
    return std::nullopt;
}

}  // namespace

std::string inverse_kind_name(InverseKind kind) {
    switch (kind) {
        case InverseKind::One: return "one";
        case InverseKind::MoorePenrose: return "mp";
        case InverseKind::Group: return "group";
        case InverseKind::Core: return "core";
        case InverseKind::DualCore: return "dual-core";
    }
    throw std::logic_error("unreachable");
}

std::vector<Certificate> verify_inverse(const Element& a, const Element& x, InverseKind kind) {
    if (!(a.ring == x.ring)) throw UsageError("elements belong to different rings");
    std::vector<Certificate> out;
    for (const Eq& eq : equations_for(kind)) out.push_back({eq.first, eq.second(a, x, a)});
    return out;
}

bool all_hold(const std::vector<Certificate>& certs) {
    for (const Certificate& c : certs)
        if (!c.holds) return false;
    return true;
}

std::optional<Element> one_inverse(const Element& a, std::uint64_t cap) {
    if (a.ring.field_entries()) {
        Element x = *on_payload(a, [](const auto& m) -> std::optional<std::decay_t<decltype(m)>> {
            return one_closed(m);
        });
        if (!satisfies(a, x, InverseKind::One))
            throw IntegrityFault("constructed {1}-inverse failed certification");
        return x;
    }
    return search(a, InverseKind::One, false, cap);
}

std::optional<Element> moore_penrose(const Element& a, std::uint64_t cap) {
    if (a.ring.field_entries()) {
        auto cand = on_payload(a, [](const auto& m) { return mp_closed(m); });
        if (auto ok = certified_or_nothing(a, cand, InverseKind::MoorePenrose)) return ok;
        if (cand)
            throw IntegrityFault("closed-form Moore-Penrose candidate failed certification");
        if (!a.ring.finite()) {
            // Gram matrices over Q / Q(i) are positive definite, so this
            // cannot happen for a nonzero rank factorization.
            throw IntegrityFault("Moore-Penrose absent over an ordered-field realization");
        }
        return search(a, InverseKind::MoorePenrose, true, cap);
    }
    return search(a, InverseKind::MoorePenrose, true, cap);
}

std::optional<Element> group_inverse(const Element& a, std::uint64_t cap) {
    if (a.ring.field_entries()) {
        auto cand = on_payload(a, [](const auto& m) { return group_closed(m); });
        if (auto ok = certified_or_nothing(a, cand, InverseKind::Group)) return ok;
        if (cand) throw IntegrityFault("closed-form group candidate failed certification");
        if (!a.ring.finite()) return std::nullopt;  // GF singular: rank(a^2) < rank(a)
        return search(a, InverseKind::Group, true, cap);
    }
    return search(a, InverseKind::Group, true, cap);
}

std::optional<Element> core_inverse(const Element& a, std::uint64_t cap) {
    if (a.ring.field_entries()) {
        auto g = group_inverse(a, cap);
        auto d = moore_penrose(a, cap);
        if (g && d) {
            Element cand = *g * a * *d;
            if (satisfies(a, cand, InverseKind::Core)) return cand;
            if (!a.ring.finite())
                throw IntegrityFault("core candidate a^# a a+ failed certification over " +
                                     a.ring.name());
        }
        if (!a.ring.finite()) return std::nullopt;  // needs a^# (and a+, always present here)
        return search(a, InverseKind::Core, true, cap);
    }
    return search(a, InverseKind::Core, true, cap);
}

std::optional<Element> dual_core_inverse(const Element& a, std::uint64_t cap) {
    auto c = core_inverse(star(a), cap);
    if (!c) return std::nullopt;
    Element x = star(*c);
    if (!satisfies(a, x, InverseKind::DualCore))
        throw IntegrityFault("star-dual core value failed dual certification");
    return x;
}

namespace {

InverseInfo make_info(const Element& a, std::optional<Element> value, InverseKind kind,
                      const std::string& absence) {
    InverseInfo info;
    if (value) {
        info.certificates = verify_inverse(a, *value, kind);
        info.value = std::move(value);
    } else {
        info.absence = absence;
    }
    return info;
}

std::string absence_reason(const Element& a, InverseKind kind) {
    if (a.ring.finite()) {
        auto n = a.ring.element_count(~std::uint64_t(0));
        return "no solution to the " + inverse_kind_name(kind) +
               " equations (exhaustive search over " + std::to_string(n ? *n : 0) +
               " elements)";
    }
    switch (kind) {
        case InverseKind::Group:
            return "rank(a^2) < rank(a)";
        case InverseKind::Core:
            return "no group inverse (rank(a^2) < rank(a))";
        case InverseKind::DualCore:
            return "no group inverse for a* (rank(a^2) < rank(a))";
        default:
            return "no solution";
    }
}

}  // namespace

InverseBundle inverse_bundle(const Element& a, std::uint64_t cap) {
    InverseBundle b{a, {}, {}, {}, {}, {}};
    b.one = make_info(a, one_inverse(a, cap), InverseKind::One,
                      absence_reason(a, InverseKind::One));
    b.mp = make_info(a, moore_penrose(a, cap), InverseKind::MoorePenrose,
                     absence_reason(a, InverseKind::MoorePenrose));
    b.group = make_info(a, group_inverse(a, cap), InverseKind::Group,
                        absence_reason(a, InverseKind::Group));
    b.core = make_info(a, core_inverse(a, cap), InverseKind::Core,
                       absence_reason(a, InverseKind::Core));
    b.dual_core = make_info(a, dual_core_inverse(a, cap), InverseKind::DualCore,
                            absence_reason(a, InverseKind::DualCore));
    return b;
}

Decomposition decomposition(const Element& a, DecompKind kind, std::uint64_t cap) {
    Element one = one_of(a.ring);
    switch (kind) {
        case DecompKind::Group: {
            auto g = group_inverse(a, cap);
            if (!g) throw UsageError("group decomposition needs a group-invertible element");
            Element p = one - a * *g;
            if (p * p != p || !is_zero(a * p) || !is_zero(p * a))
                throw IntegrityFault("group decomposition idempotent checks failed");
            auto w = unit_inverse(a + p);
            if (!w) throw IntegrityFault("a + p is not a unit in the group decomposition");
            if (*w - p != *g) throw IntegrityFault("(a+p)^-1 - p did not re-derive the group inverse");
            return {kind, p, *w};
        }
        case DecompKind::Ep: {
            auto d = moore_penrose(a, cap);
            auto g = group_inverse(a, cap);
            if (!d || !g || *d != *g)
                throw UsageError("ep decomposition needs an EP element");
            Element p = one - a * *d;
            if (star(p) != p || p * p != p || !is_zero(a * p) || !is_zero(p * a))
                throw IntegrityFault("ep decomposition projection checks failed");
            auto w = unit_inverse(a + p);
            if (!w) throw IntegrityFault("a + p is not a unit in the ep decomposition");
            if (*w - p != *d) throw IntegrityFault("(a+p)^-1 - p did not re-derive a+");
            return {kind, p, *w};
        }
        case DecompKind::Core: {
            auto c = core_inverse(a, cap);
            if (!c) throw UsageError("core decomposition needs a core-invertible element");
            Element p = one - a * *c;
            if (star(p) != p || p * p != p || !is_zero(p * a))
                throw IntegrityFault("core decomposition projection checks failed");
            auto w = unit_inverse(a * (one - p) + p);
            if (!w) throw IntegrityFault("a(1-p) + p is not a unit in the core decomposition");
            if (*w != p + *c)
                throw IntegrityFault("(a(1-p)+p)^-1 did not equal p + core inverse");
            return {kind, p, *w};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace epkit
