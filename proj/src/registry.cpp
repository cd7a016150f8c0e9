#include "epkit/registry.hpp"

namespace epkit {

namespace {

std::string where(const EpContext& c) {
    return element_to_string(c.a) + " in " + c.a.ring.name();
}

CharVerdict direct(bool value) {
    CharVerdict v;
    v.value = value ? Tri::True : Tri::False;
    v.provenance = Provenance::Constructive;
    return v;
}

bool herm(const Element& e) { return star(e) == e; }

// The Moore-Penrose inverse is the constructive witness for the plain
// existential conditions: at baseline elements it coincides with the group
// inverse and satisfies every listed equation set.
std::vector<Element> dagger_candidates(const EpContext& c) {
    std::vector<Element> v;
    if (c.mp.has_value()) v.push_back(*c.mp);
    return v;
}

// The factor conditions use the explicit unit (a-sharp)^2 + 1 - a a-sharp,
// which maps a onto a-sharp; available whenever the group inverse is.
std::vector<Element> unit_candidates(const EpContext& c) {
    std::vector<Element> v;
    if (c.group.has_value()) {
        const Element& s = *c.group;
        v.push_back(s * s + one_of(c.a.ring) - c.a * s);
    }
    return v;
}

Element need(const std::optional<Element>& v, const char* what, const EpContext& c) {
    if (!v.has_value())
        throw IntegrityFault(std::string(what) + " missing where theory guarantees it at " +
                             where(c));
    return *v;
}

// How the starred side of a range condition compares against the anchor.
enum class Rel { Eq, StarInA, AInStar };

bool rel_holds(Rel rel, const SubsetHandle& starred, const SubsetHandle& anchor) {
    switch (rel) {
        case Rel::Eq: return subset_equal(starred, anchor);
        case Rel::StarInA: return subset_included(starred, anchor);
        case Rel::AInStar: return subset_included(anchor, starred);
    }
    return false;
}

// Existential range conditions. The left family constrains xR / lann x and
// compares Rx* / rann x* against the anchor; the right family mirrors this
// with Rx / rann x and x*R / lann x*. outer picks axa = a over xax = x;
// ideals picks the ideal pair over the annihilator pair.
CharVerdict range_exists(const EpContext& c, bool left_family, bool outer, bool ideals,
                         Rel rel) {
    auto pred = [&c, left_family, outer, ideals, rel](const Element& x) {
        const Element& a = c.a;
        if (outer ? (a * x * a != a) : (x * a * x != x)) return false;
        if (left_family) {
            if (ideals) {
                if (!subset_equal(subset_handle(SubsetKind::RightIdeal, x, c.cap), c.a_right))
                    return false;
                return rel_holds(rel, subset_handle(SubsetKind::LeftIdeal, star(x), c.cap),
                                 c.a_left);
            }
            if (!subset_equal(subset_handle(SubsetKind::LeftAnnihilator, x, c.cap), c.a_lann))
                return false;
            return rel_holds(rel, subset_handle(SubsetKind::RightAnnihilator, star(x), c.cap),
                             c.a_rann);
        }
        if (ideals) {
            if (!subset_equal(subset_handle(SubsetKind::LeftIdeal, x, c.cap), c.a_left))
                return false;
            return rel_holds(rel, subset_handle(SubsetKind::RightIdeal, star(x), c.cap),
                             c.a_right);
        }
        if (!subset_equal(subset_handle(SubsetKind::RightAnnihilator, x, c.cap), c.a_rann))
            return false;
        return rel_holds(rel, subset_handle(SubsetKind::LeftAnnihilator, star(x), c.cap),
                         c.a_lann);
    };
    return exists_element(c, pred, dagger_candidates(c));
}

CharVerdict n_ep_entry(const EpContext& c, unsigned n) {
    const Element& d = *c.mp;
    Element an = power(c.a, n);
    bool commutes = is_zero(commutator(an * d, d * an));
    return direct(c.group.has_value() && commutes);
}

std::vector<Characterization> build_table() {
    std::vector<Characterization> t;
    auto add = [&t](std::string id, std::string cond, Gate g,
                    std::function<CharVerdict(const EpContext&)> f) {
        t.push_back({std::move(id), std::move(cond), g, std::move(f)});
    };

    // Ungated existential conditions.
    add("three-eq-left", "exists x: (xa)* = xa, x a^2 = a, a x^2 = x", Gate::None,
        [](const EpContext& c) {
            auto pred = [&c](const Element& x) {
                const Element& a = c.a;
                return herm(x * a) && x * a * a == a && a * x * x == x;
            };
            return exists_element(c, pred, dagger_candidates(c));
        });
    add("three-eq-right", "exists y: (ay)* = ay, a^2 y = a, y^2 a = y", Gate::None,
        [](const EpContext& c) {
            auto pred = [&c](const Element& y) {
                const Element& a = c.a;
                return herm(a * y) && a * a * y == a && y * y * a == y;
            };
            return exists_element(c, pred, dagger_candidates(c));
        });
    add("three-eq-commuting", "exists x: a^2 x = a, ax = xa, (ax)* = ax", Gate::None,
        [](const EpContext& c) {
            auto pred = [&c](const Element& x) {
                const Element& a = c.a;
                return a * a * x == a && a * x == x * a && herm(a * x);
            };
            return exists_element(c, pred, dagger_candidates(c));
        });

    add("range-left-2", "exists x: axa = a, xR = aR, Rx* = Ra", Gate::None,
        [](const EpContext& c) { return range_exists(c, true, true, true, Rel::Eq); });
    add("range-left-3", "exists x: axa = a, xR = aR, Rx* included in Ra", Gate::None,
        [](const EpContext& c) { return range_exists(c, true, true, true, Rel::StarInA); });
    add("range-left-4", "exists x: xax = x, xR = aR, Rx* = Ra", Gate::None,
        [](const EpContext& c) { return range_exists(c, true, false, true, Rel::Eq); });
    add("range-left-5", "exists x: xax = x, xR = aR, Ra included in Rx*", Gate::None,
        [](const EpContext& c) { return range_exists(c, true, false, true, Rel::AInStar); });
    add("range-left-6", "exists x: axa = a, lann x = lann a, rann x* = rann a", Gate::None,
        [](const EpContext& c) { return range_exists(c, true, true, false, Rel::Eq); });
    add("range-left-7", "exists x: axa = a, lann x = lann a, rann a included in rann x*",
        Gate::None,
        [](const EpContext& c) { return range_exists(c, true, true, false, Rel::AInStar); });
    add("range-left-8", "exists x: xax = x, lann x = lann a, rann x* = rann a", Gate::None,
        [](const EpContext& c) { return range_exists(c, true, false, false, Rel::Eq); });
    add("range-left-9", "exists x: xax = x, lann x = lann a, rann x* included in rann a",
        Gate::None,
        [](const EpContext& c) { return range_exists(c, true, false, false, Rel::StarInA); });

    add("range-right-2", "exists y: aya = a, Ry = Ra, y*R = aR", Gate::None,
        [](const EpContext& c) { return range_exists(c, false, true, true, Rel::Eq); });
    add("range-right-3", "exists y: aya = a, Ry = Ra, y*R included in aR", Gate::None,
        [](const EpContext& c) { return range_exists(c, false, true, true, Rel::StarInA); });
    add("range-right-4", "exists y: yay = y, Ry = Ra, y*R = aR", Gate::None,
        [](const EpContext& c) { return range_exists(c, false, false, true, Rel::Eq); });
    add("range-right-5", "exists y: yay = y, Ry = Ra, aR included in y*R", Gate::None,
        [](const EpContext& c) { return range_exists(c, false, false, true, Rel::AInStar); });
    add("range-right-6", "exists y: aya = a, rann y = rann a, lann y* = lann a", Gate::None,
        [](const EpContext& c) { return range_exists(c, false, true, false, Rel::Eq); });
    add("range-right-7", "exists y: aya = a, rann y = rann a, lann a included in lann y*",
        Gate::None,
        [](const EpContext& c) { return range_exists(c, false, true, false, Rel::AInStar); });
    add("range-right-8", "exists y: yay = y, rann y = rann a, lann y* = lann a", Gate::None,
        [](const EpContext& c) { return range_exists(c, false, false, false, Rel::Eq); });
    add("range-right-9", "exists y: yay = y, rann y = rann a, lann y* included in lann a",
        Gate::None,
        [](const EpContext& c) { return range_exists(c, false, false, false, Rel::StarInA); });

    add("two-cond-left",
        "lann(a^2) included in lann a, and exists x: x a^2 = a, (xa)* = xa", Gate::None,
        [](const EpContext& c) {
            if (!subset_included(c.asq_lann, c.a_lann)) return direct(false);
            auto pred = [&c](const Element& x) {
                const Element& a = c.a;
                return x * a * a == a && herm(x * a);
            };
            return exists_element(c, pred, dagger_candidates(c));
        });
    add("two-cond-right",
        "rann(a^2) included in rann a, and exists x: a^2 x = a, (ax)* = ax", Gate::None,
        [](const EpContext& c) {
            if (!subset_included(c.asq_rann, c.a_rann)) return direct(false);
            auto pred = [&c](const Element& x) {
                const Element& a = c.a;
                return a * a * x == a && herm(a * x);
            };
            return exists_element(c, pred, dagger_candidates(c));
        });

    // Group-gated conditions.
    add("group-hermitian", "(a a-sharp)* = a a-sharp", Gate::Group,
        [](const EpContext& c) { return direct(herm(c.a * *c.group)); });
    add("incl-group-1", "aR included in a*R", Gate::Group,
        [](const EpContext& c) { return direct(subset_included(c.a_right, c.astar_right)); });
    add("incl-group-2", "Ra included in Ra*", Gate::Group,
        [](const EpContext& c) { return direct(subset_included(c.a_left, c.astar_left)); });
    add("incl-group-3", "a*R included in aR", Gate::Group,
        [](const EpContext& c) { return direct(subset_included(c.astar_right, c.a_right)); });
    add("incl-group-4", "Ra* included in Ra", Gate::Group,
        [](const EpContext& c) { return direct(subset_included(c.astar_left, c.a_left)); });
    add("range-eq-group-right", "aR = a*R", Gate::Group,
        [](const EpContext& c) { return direct(subset_equal(c.a_right, c.astar_right)); });
    add("range-eq-group-left", "Ra = Ra*", Gate::Group,
        [](const EpContext& c) { return direct(subset_equal(c.a_left, c.astar_left)); });

    // Moore-Penrose-gated conditions.
    add("range-eq-mp-right", "aR = a*R", Gate::Mp,
        [](const EpContext& c) { return direct(subset_equal(c.a_right, c.astar_right)); });
    add("range-eq-mp-left", "Ra = Ra*", Gate::Mp,
        [](const EpContext& c) { return direct(subset_equal(c.a_left, c.astar_left)); });
    add("mp-commute", "[a, a-dagger] = 0", Gate::Mp, [](const EpContext& c) {
        return direct(is_zero(commutator(c.a, *c.mp)));
    });
    add("mp-commutators-2", "[a-dagger a, a] = 0 and [a-dagger, a a-dagger] = 0", Gate::Mp,
        [](const EpContext& c) {
            const Element& d = *c.mp;
            return direct(is_zero(commutator(d * c.a, c.a)) &&
                          is_zero(commutator(d, c.a * d)));
        });
    add("mp-commutators-3", "[a-dagger a, a] = 0 and [a, a a-dagger] = 0", Gate::Mp,
        [](const EpContext& c) {
            const Element& d = *c.mp;
            return direct(is_zero(commutator(d * c.a, c.a)) &&
                          is_zero(commutator(c.a, c.a * d)));
        });
    add("mp-commutators-4", "[a-dagger a, a-dagger] = 0 and [a-dagger, a a-dagger] = 0",
        Gate::Mp, [](const EpContext& c) {
            const Element& d = *c.mp;
            return direct(is_zero(commutator(d * c.a, d)) &&
                          is_zero(commutator(d, c.a * d)));
        });
    add("mp-commutators-5", "[a-dagger a, a-dagger] = 0 and [a, a a-dagger] = 0", Gate::Mp,
        [](const EpContext& c) {
            const Element& d = *c.mp;
            return direct(is_zero(commutator(d * c.a, d)) &&
                          is_zero(commutator(c.a, c.a * d)));
        });
    add("power-range-right-2", "aR = a^2 R and [a-dagger a, a-dagger] = 0", Gate::Mp,
        [](const EpContext& c) {
            return direct(subset_equal(c.a_right, c.asq_right) &&
                          is_zero(commutator(*c.mp * c.a, *c.mp)));
        });
    add("power-range-right-3", "aR = a^2 R and [a-dagger a, a] = 0", Gate::Mp,
        [](const EpContext& c) {
            return direct(subset_equal(c.a_right, c.asq_right) &&
                          is_zero(commutator(*c.mp * c.a, c.a)));
        });
    add("power-range-right-4", "aR = a^2 R and aR included in a-dagger R", Gate::Mp,
        [](const EpContext& c) {
            return direct(subset_equal(c.a_right, c.asq_right) &&
                          subset_included(c.a_right, *c.mp_right));
        });
    add("power-range-right-5", "aR = a^2 R and aR included in a*R", Gate::Mp,
        [](const EpContext& c) {
            return direct(subset_equal(c.a_right, c.asq_right) &&
                          subset_included(c.a_right, c.astar_right));
        });
    add("power-range-left-2", "Ra = R a^2 and [a a-dagger, a-dagger] = 0", Gate::Mp,
        [](const EpContext& c) {
            return direct(subset_equal(c.a_left, c.asq_left) &&
                          is_zero(commutator(c.a * *c.mp, *c.mp)));
        });
    add("power-range-left-3", "Ra = R a^2 and [a a-dagger, a] = 0", Gate::Mp,
        [](const EpContext& c) {
            return direct(subset_equal(c.a_left, c.asq_left) &&
                          is_zero(commutator(c.a * *c.mp, c.a)));
        });
    add("power-range-left-4", "Ra = R a^2 and Ra included in R a-dagger", Gate::Mp,
        [](const EpContext& c) {
            return direct(subset_equal(c.a_left, c.asq_left) &&
                          subset_included(c.a_left, *c.mp_left));
        });
    add("power-range-left-5", "Ra = R a^2 and Ra included in R a*", Gate::Mp,
        [](const EpContext& c) {
            return direct(subset_equal(c.a_left, c.asq_left) &&
                          subset_included(c.a_left, c.astar_left));
        });
    add("factor-mp-unit", "exists a unit u: a-dagger = u a", Gate::Mp,
        [](const EpContext& c) {
            auto pred = [&c](const Element& u) {
                return classify(u).unit && *c.mp == u * c.a;
            };
            return exists_element(c, pred, unit_candidates(c));
        });
    add("factor-mp-left", "exists left-invertible v: a-dagger = v a", Gate::Mp,
        [](const EpContext& c) {
            auto pred = [&c](const Element& v) {
                return classify(v).left_invertible && *c.mp == v * c.a;
            };
            return exists_element(c, pred, unit_candidates(c));
        });
    add("n-ep-1", "group inverse exists and [a a-dagger, a-dagger a] = 0", Gate::Mp,
        [](const EpContext& c) { return n_ep_entry(c, 1); });
    add("n-ep-2", "group inverse exists and [a^2 a-dagger, a-dagger a^2] = 0", Gate::Mp,
        [](const EpContext& c) { return n_ep_entry(c, 2); });
    add("n-ep-3", "group inverse exists and [a^3 a-dagger, a-dagger a^3] = 0", Gate::Mp,
        [](const EpContext& c) { return n_ep_entry(c, 3); });

    // Core-gated conditions.
    add("core-cond-2", "((core a) a)* = (core a) a", Gate::Core,
        [](const EpContext& c) { return direct(herm(*c.core * c.a)); });
    add("core-cond-3", "core(core a) = a", Gate::Core, [](const EpContext& c) {
        Element cc = need(core_inverse(*c.core, c.cap), "core inverse of the core inverse", c);
        return direct(cc == c.a);
    });
    add("core-cond-4", "(core a)-dagger = a", Gate::Core, [](const EpContext& c) {
        Element m =
            need(moore_penrose(*c.core, c.cap), "Moore-Penrose inverse of the core inverse", c);
        return direct(m == c.a);
    });
    add("core-cond-5", "(core a)-sharp = a", Gate::Core, [](const EpContext& c) {
        Element g = need(group_inverse(*c.core, c.cap), "group inverse of the core inverse", c);
        return direct(g == c.a);
    });
    add("core-cond-8", "a (1 - a core a) = 0", Gate::Core, [](const EpContext& c) {
        Element p = one_of(c.a.ring) - c.a * *c.core;
        CharVerdict v = direct(is_zero(c.a * p));
        v.witness = std::move(p);
        return v;
    });
    add("incl-core-1", "aR included in a*R", Gate::Core,
        [](const EpContext& c) { return direct(subset_included(c.a_right, c.astar_right)); });
    add("incl-core-2", "Ra included in Ra*", Gate::Core,
        [](const EpContext& c) { return direct(subset_included(c.a_left, c.astar_left)); });
    add("incl-core-3", "a*R included in aR", Gate::Core,
        [](const EpContext& c) { return direct(subset_included(c.astar_right, c.a_right)); });
    add("incl-core-4", "Ra* included in Ra", Gate::Core,
        [](const EpContext& c) { return direct(subset_included(c.astar_left, c.a_left)); });
    add("core-commutator", "[core a, ((core a) a)* a] = 0", Gate::Core,
        [](const EpContext& c) {
            Element e = star(*c.core * c.a) * c.a;
            return direct(is_zero(commutator(*c.core, e)));
        });
    add("factor-core-unit", "exists a unit u: core a = u a", Gate::Core,
        [](const EpContext& c) {
            auto pred = [&c](const Element& u) {
                return classify(u).unit && *c.core == u * c.a;
            };
            return exists_element(c, pred, unit_candidates(c));
        });
    add("factor-core-any", "exists b: core a = b a", Gate::Core, [](const EpContext& c) {
        auto pred = [&c](const Element& b) { return *c.core == b * c.a; };
        return exists_element(c, pred, unit_candidates(c));
    });
    add("core-commute", "[a, core a] = 0", Gate::Core, [](const EpContext& c) {
        return direct(is_zero(commutator(c.a, *c.core)));
    });
    add("group-eq-core", "a-sharp = core a", Gate::Core, [](const EpContext& c) {
        Element g = need(c.group, "group inverse alongside the core inverse", c);
        return direct(g == *c.core);
    });

    // Conditions gated on both a-dagger and a-sharp.
    add("core-cond-6", "core(a-dagger) = a", Gate::MpGroup, [](const EpContext& c) {
        Element cd =
            need(core_inverse(*c.mp, c.cap), "core inverse of the Moore-Penrose inverse", c);
        return direct(cd == c.a);
    });
    add("core-cond-7", "core(a-dagger) = (core a)-dagger", Gate::MpGroup,
        [](const EpContext& c) {
            Element cd = need(core_inverse(*c.mp, c.cap),
                              "core inverse of the Moore-Penrose inverse", c);
            Element core = need(c.core, "core inverse alongside dagger and sharp", c);
            Element m = need(moore_penrose(core, c.cap),
                             "Moore-Penrose inverse of the core inverse", c);
            return direct(cd == m);
        });
    add("mp-eq-core", "a-dagger = core a", Gate::MpGroup, [](const EpContext& c) {
        Element core = need(c.core, "core inverse alongside dagger and sharp", c);
        return direct(*c.mp == core);
    });

    return t;
}

}  // namespace

std::string gate_name(Gate g) {
    switch (g) {
        case Gate::None: return "none";
        case Gate::Group: return "group";
        case Gate::Mp: return "moore-penrose";
        case Gate::Core: return "core";
        case Gate::MpGroup: return "moore-penrose-and-group";
    }
    return "invalid";
}

bool gate_admits(Gate g, const EpContext& c) {
    switch (g) {
        case Gate::None: return true;
        case Gate::Group: return c.group.has_value();
        case Gate::Mp: return c.mp.has_value();
        case Gate::Core: return c.core.has_value();
        case Gate::MpGroup: return c.mp.has_value() && c.group.has_value();
    }
    return false;
}

const std::vector<Characterization>& characterizations() {
    static const std::vector<Characterization> table = build_table();
    return table;
}

const Characterization* find_characterization(std::string_view id) {
    for (const Characterization& ch : characterizations())
        if (ch.id == id) return &ch;
    return nullptr;
}

CharVerdict evaluate_characterization(const Characterization& ch, const EpContext& c) {
    if (!gate_admits(ch.gate, c)) return CharVerdict{};
    return ch.evaluate(c);
}

RegistryStats registry_stats() {
    RegistryStats s;
    for (const Characterization& ch : characterizations()) {
        ++s.total;
        switch (ch.gate) {
            case Gate::None: ++s.ungated; break;
            case Gate::Group: ++s.group_gated; break;
            case Gate::Mp: ++s.mp_gated; break;
            case Gate::Core: ++s.core_gated; break;
            case Gate::MpGroup: ++s.mp_group_gated; break;
        }
    }
    return s;
}

}  // namespace epkit
