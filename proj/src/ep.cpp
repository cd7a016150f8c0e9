#include "epkit/ep.hpp"

#include <string>

namespace epkit {

namespace {

std::string where(const Element& a) {
    return element_to_string(a) + " in " + a.ring.name();
}

bool hermitian_eq(const Element& e) { return star(e) == e; }

// Baseline plus the commutation cross-check shared by every entry point.
// When the Moore-Penrose inverse exists, [a, a-dagger] = 0 is itself
// equivalent to the baseline; a mismatch means the library contradicts
// itself and must not be reported as data.
bool baseline_checked(const Element& a, const std::optional<Element>& mp,
                      const std::optional<Element>& group) {
    bool ep = mp.has_value() && group.has_value() && *mp == *group;
    if (mp.has_value()) {
        bool commutes = is_zero(commutator(a, *mp));
        if (commutes != ep)
            throw IntegrityFault("commutation cross-check disagrees with the baseline at " +
                                 where(a));
    }
    return ep;
}

}  // namespace

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        case Tri::Inapplicable: return "inapplicable";
    }
    return "invalid";
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Independent: return "independent";
        case Provenance::Constructive: return "constructive";
        case Provenance::Derived: return "derived";
    }
    return "invalid";
}

bool ep_baseline(const Element& a, std::uint64_t cap) {
    return baseline_checked(a, moore_penrose(a, cap), group_inverse(a, cap));
}

EpContext make_ep_context(const Element& a, std::uint64_t cap) {
    EpContext c;
    c.a = a;
    c.cap = cap;
    c.mp = moore_penrose(a, cap);
    c.group = group_inverse(a, cap);
    c.core = core_inverse(a, cap);
    c.ep = baseline_checked(a, c.mp, c.group);

    const Element as = star(a);
    const Element asq = a * a;
    c.a_right = subset_handle(SubsetKind::RightIdeal, a, cap);
    c.a_left = subset_handle(SubsetKind::LeftIdeal, a, cap);
    c.a_rann = subset_handle(SubsetKind::RightAnnihilator, a, cap);
    c.a_lann = subset_handle(SubsetKind::LeftAnnihilator, a, cap);
    c.astar_right = subset_handle(SubsetKind::RightIdeal, as, cap);
    c.astar_left = subset_handle(SubsetKind::LeftIdeal, as, cap);
    c.asq_right = subset_handle(SubsetKind::RightIdeal, asq, cap);
    c.asq_left = subset_handle(SubsetKind::LeftIdeal, asq, cap);
    c.asq_rann = subset_handle(SubsetKind::RightAnnihilator, asq, cap);
    c.asq_lann = subset_handle(SubsetKind::LeftAnnihilator, asq, cap);
    if (c.mp.has_value()) {
        c.mp_right = subset_handle(SubsetKind::RightIdeal, *c.mp, cap);
        c.mp_left = subset_handle(SubsetKind::LeftIdeal, *c.mp, cap);
    }
    return c;
}

CharVerdict exists_element(const EpContext& c,
                           const std::function<bool(const Element&)>& pred,
                           const std::vector<Element>& candidates) {
    CharVerdict v;
    if (c.a.ring.finite()) {
        Enumeration en(c.a.ring, c.cap);
        for (std::uint64_t i = 0; i < en.size(); ++i) {
            Element x = en.at(i);
            if (pred(x)) {
                v.value = Tri::True;
                v.provenance = Provenance::Independent;
                v.witness = std::move(x);
                return v;
            }
        }
        v.value = Tri::False;
        v.provenance = Provenance::Independent;
        return v;
    }
    for (const Element& cand : candidates) {
        if (pred(cand)) {
            v.value = Tri::True;
            v.provenance = Provenance::Constructive;
            v.witness = cand;
            return v;
        }
    }
    if (c.ep)
        throw IntegrityFault(
            "existential condition lost its constructive witness at the baseline element " +
            where(c.a));
    v.value = Tri::False;
    v.provenance = Provenance::Derived;
    return v;
}

Tri n_ep(const Element& a, unsigned n, std::uint64_t cap) {
    if (n == 0) throw UsageError("the commutation index must be at least 1");
    std::optional<Element> mp = moore_penrose(a, cap);
    if (!mp.has_value()) return Tri::Inapplicable;
    Element an = power(a, n);
    return is_zero(commutator(an * *mp, *mp * an)) ? Tri::True : Tri::False;
}

std::string solution_family_name(SolutionFamily f) {
    switch (f) {
        case SolutionFamily::ThreeEqLeft: return "three-eq-left-set";
        case SolutionFamily::RightIdeal1: return "right-ideal-set-1";
        case SolutionFamily::RightIdeal2: return "right-ideal-set-2";
        case SolutionFamily::RightIdeal3: return "right-ideal-set-3";
        case SolutionFamily::RightIdeal4: return "right-ideal-set-4";
        case SolutionFamily::ThreeEqRight: return "three-eq-right-set";
        case SolutionFamily::LeftIdeal1: return "left-ideal-set-1";
        case SolutionFamily::LeftIdeal2: return "left-ideal-set-2";
        case SolutionFamily::LeftIdeal3: return "left-ideal-set-3";
        case SolutionFamily::LeftIdeal4: return "left-ideal-set-4";
        case SolutionFamily::ThreeEqCommuting: return "three-eq-commuting-set";
        case SolutionFamily::TwoEqLeft: return "two-eq-left-set";
        case SolutionFamily::TwoEqRight: return "two-eq-right-set";
        case SolutionFamily::CoreFactor: return "core-factor-set";
    }
    return "invalid";
}

namespace {

void require_anchor(const EpContext& c) {
    if (!c.ep)
        throw UsageError("solution-set families are anchored at baseline elements; " +
                         where(c.a) + " fails the baseline");
}

}  // namespace

bool solution_member(const EpContext& c, SolutionFamily f, const Element& x) {
    require_anchor(c);
    const Element& a = c.a;
    switch (f) {
        case SolutionFamily::ThreeEqLeft:
            return hermitian_eq(x * a) && x * a * a == a && a * x * x == x;
        case SolutionFamily::RightIdeal1:
            return a * x * a == a &&
                   subset_included(subset_handle(SubsetKind::RightIdeal, x, c.cap), c.a_right);
        case SolutionFamily::RightIdeal2:
            return x * a * x == x &&
                   subset_equal(subset_handle(SubsetKind::RightIdeal, x, c.cap), c.a_right);
        case SolutionFamily::RightIdeal3:
            return a * x * a == a &&
                   subset_included(c.a_lann, subset_handle(SubsetKind::LeftAnnihilator, x, c.cap));
        case SolutionFamily::RightIdeal4:
            return x * a * x == x &&
                   subset_equal(c.a_lann, subset_handle(SubsetKind::LeftAnnihilator, x, c.cap));
        case SolutionFamily::ThreeEqRight:
            return hermitian_eq(a * x) && a * a * x == a && x * x * a == x;
        case SolutionFamily::LeftIdeal1:
            return a * x * a == a &&
                   subset_included(subset_handle(SubsetKind::LeftIdeal, x, c.cap), c.a_left);
        case SolutionFamily::LeftIdeal2:
            return x * a * x == x &&
                   subset_equal(subset_handle(SubsetKind::LeftIdeal, x, c.cap), c.a_left);
        case SolutionFamily::LeftIdeal3:
            return a * x * a == a &&
                   subset_included(c.a_rann, subset_handle(SubsetKind::RightAnnihilator, x, c.cap));
        case SolutionFamily::LeftIdeal4:
            return x * a * x == x &&
                   subset_equal(c.a_rann, subset_handle(SubsetKind::RightAnnihilator, x, c.cap));
        case SolutionFamily::ThreeEqCommuting:
            return a * a * x == a && a * x == x * a && hermitian_eq(a * x);
        case SolutionFamily::TwoEqLeft:
            return x * a * a == a && hermitian_eq(x * a);
        case SolutionFamily::TwoEqRight:
            return a * a * x == a && hermitian_eq(a * x);
        case SolutionFamily::CoreFactor:
            return x * a == *c.core;
    }
    throw UsageError("invalid solution-set family");
}

Element solution_generator(const EpContext& c, SolutionFamily f, const Element& param) {
    require_anchor(c);
    const Element& a = c.a;
    const Element& dag = *c.mp;
    const Element one = one_of(a.ring);
    const Element p = a * dag;
    switch (f) {
        case SolutionFamily::ThreeEqLeft:
        case SolutionFamily::RightIdeal1:
        case SolutionFamily::RightIdeal2:
        case SolutionFamily::RightIdeal3:
        case SolutionFamily::RightIdeal4:
            return dag + p * param * (one - p);
        case SolutionFamily::ThreeEqRight:
        case SolutionFamily::LeftIdeal1:
        case SolutionFamily::LeftIdeal2:
        case SolutionFamily::LeftIdeal3:
        case SolutionFamily::LeftIdeal4:
            return dag + (one - p) * param * p;
        case SolutionFamily::ThreeEqCommuting:
            return dag + (one - p) * param * (one - p);
        case SolutionFamily::TwoEqLeft:
            return dag + param * (one - p);
        case SolutionFamily::TwoEqRight:
            return dag + (one - p) * param;
        case SolutionFamily::CoreFactor:
            return *c.core * *c.core + param * (one - a * *c.core);
    }
    throw UsageError("invalid solution-set family");
}

namespace {

SolutionSetReport solution_set_inner(const EpContext& c, const Enumeration& en,
                                     SolutionFamily f) {
    SolutionSetReport rep;
    rep.family = f;
    rep.anchor = c.a;
    std::vector<bool> mem(en.size(), false);
    std::vector<bool> gen(en.size(), false);
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        Element x = en.at(i);
        if (solution_member(c, f, x)) {
            mem[i] = true;
            rep.members.push_back(std::move(x));
        }
    }
    for (std::uint64_t i = 0; i < en.size(); ++i)
        gen[en.index_of(solution_generator(c, f, en.at(i)))] = true;
    for (std::uint64_t i = 0; i < en.size(); ++i)
        if (gen[i]) rep.generated.push_back(en.at(i));
    rep.equal = mem == gen;
    return rep;
}

}  // namespace

SolutionSetReport solution_set(const Element& a, SolutionFamily f, std::uint64_t cap) {
    if (!a.ring.finite())
        throw UsageError("solution-set enumeration needs a finite ring; " + a.ring.name() +
                         " is infinite");
    EpContext c = make_ep_context(a, cap);
    require_anchor(c);
    Enumeration en(a.ring, cap);
    return solution_set_inner(c, en, f);
}

SingletonClaimReport singleton_claims(const RingSpec& ring, std::uint64_t cap) {
    if (!ring.finite())
        throw UsageError("singleton claims are checked by enumeration; " + ring.name() +
                         " is infinite");
    if (!ring.prime_flagged())
        throw UsageError("singleton claims hold over prime-flagged rings only and " +
                         ring.name() + " is not flagged (they genuinely fail there)");

    // The ten projector-pinched sets are singletons exactly at zero and at
    // units; the commuting set drops the zero alternative.
    static constexpr SolutionFamily kPinched[] = {
        SolutionFamily::ThreeEqLeft, SolutionFamily::RightIdeal1,
        SolutionFamily::RightIdeal2, SolutionFamily::RightIdeal3,
        SolutionFamily::RightIdeal4, SolutionFamily::ThreeEqRight,
        SolutionFamily::LeftIdeal1,  SolutionFamily::LeftIdeal2,
        SolutionFamily::LeftIdeal3,  SolutionFamily::LeftIdeal4,
    };

    SingletonClaimReport rep;
    Enumeration en(ring, cap);
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        Element a = en.at(i);
        EpContext c = make_ep_context(a, cap);
        if (!c.ep) continue;
        ++rep.elements_checked;
        const bool zero = is_zero(a);
        const bool unit = classify(a).unit;
        auto check = [&](SolutionFamily f, bool expected_singleton) {
            ++rep.claims_checked;
            SolutionSetReport ss = solution_set_inner(c, en, f);
            if (!ss.equal)
                rep.violations.push_back(solution_family_name(f) + " at " + where(a) +
                                         ": generator form misses the solution set");
            bool singleton = ss.members.size() == 1;
            if (singleton != expected_singleton)
                rep.violations.push_back(
                    solution_family_name(f) + " at " + where(a) + ": size " +
                    std::to_string(ss.members.size()) + " but zero=" +
                    (zero ? "yes" : "no") + ", unit=" + (unit ? "yes" : "no"));
        };
        for (SolutionFamily f : kPinched) check(f, zero || unit);
        check(SolutionFamily::ThreeEqCommuting, unit);
    }
    return rep;
}

UnitConstruction unit_construction(const Element& a, std::uint64_t cap) {
    std::optional<Element> mp = moore_penrose(a, cap);
    std::optional<Element> group = group_inverse(a, cap);
    if (!baseline_checked(a, mp, group))
        throw UsageError("the unit construction is defined at baseline elements; " + where(a) +
                         " fails the baseline");
    std::optional<Element> core = core_inverse(a, cap);
    if (!core.has_value())
        throw IntegrityFault("baseline element without a core inverse at " + where(a));

    const Element& sharp = *group;
    const Element one = one_of(a.ring);
    UnitConstruction uc{sharp * sharp + one - a * sharp, a * a + one - a * sharp, sharp};
    if (!is_one(uc.unit * uc.unit_inverse) || !is_one(uc.unit_inverse * uc.unit))
        throw IntegrityFault("unit certification failed at " + where(a));
    uc.product = uc.unit * a;
    if (uc.product != *mp || uc.product != sharp || uc.product != *core)
        throw IntegrityFault("unit times the element misses the inverses at " + where(a));
    return uc;
}

LeftFactor ep_left_invertible_factor(const Element& a, std::uint64_t cap) {
    UnitConstruction uc = unit_construction(a, cap);
    return {uc.unit, uc.unit_inverse};
}

}  // namespace epkit
