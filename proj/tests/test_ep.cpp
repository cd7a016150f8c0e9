#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "epkit/ep.hpp"
#include "epkit/registry.hpp"

using namespace epkit;

namespace {

Element el(const RingSpec& ring, const std::string& text) { return parse_element(ring, text); }

const RingSpec kQ2 = parse_ring_spec("Mat:2:Q");
const RingSpec kGF2 = parse_ring_spec("Mat:2:GF2");
const RingSpec kGF3 = parse_ring_spec("Mat:2:GF3");

}  // namespace

TEST_CASE("registry is total, content-addressed, and gate-partitioned") {
    RegistryStats s = registry_stats();
    CHECK(s.total == 65);
    CHECK(s.ungated == 21);
    CHECK(s.group_gated == 7);
    CHECK(s.mp_gated == 20);
    CHECK(s.core_gated == 14);
    CHECK(s.mp_group_gated == 3);

    std::set<std::string> ids;
    for (const Characterization& ch : characterizations()) {
        CHECK(!ch.id.empty());
        CHECK(!ch.condition.empty());
        ids.insert(ch.id);
    }
    CHECK(ids.size() == 65);

    const Characterization* mp = find_characterization("mp-commute");
    REQUIRE(mp != nullptr);
    CHECK(mp->gate == Gate::Mp);
    CHECK(gate_name(mp->gate) == "moore-penrose");
    CHECK(find_characterization("no-such-condition") == nullptr);
}

TEST_CASE("rational example where core and group inverses disagree") {
    Element a = el(kQ2, "[[0,1],[0,1]]");
    EpContext c = make_ep_context(a);

    REQUIRE(c.mp.has_value());
    REQUIRE(c.group.has_value());
    REQUIRE(c.core.has_value());
    CHECK(element_to_string(*c.mp) == "[[0,0],[1/2,1/2]]");
    CHECK(*c.group == a);
    CHECK(element_to_string(*c.core) == "[[1/2,1/2],[1/2,1/2]]");
    CHECK(!c.ep);
    CHECK(!ep_baseline(a));

    // Every gate admits this element, and every condition must come out
    // false: each one is an exact equivalence with the baseline.
    for (const Characterization& ch : characterizations()) {
        CharVerdict v = evaluate_characterization(ch, c);
        CAPTURE(ch.id);
        CHECK(v.value == Tri::False);
    }

    SUBCASE("direct conditions evaluate constructively") {
        CharVerdict v = evaluate_characterization(*find_characterization("mp-commute"), c);
        CHECK(v.value == Tri::False);
        CHECK(v.provenance == Provenance::Constructive);
    }
    SUBCASE("existential conditions fall back to derived") {
        CharVerdict v = evaluate_characterization(*find_characterization("three-eq-left"), c);
        CHECK(v.value == Tri::False);
        CHECK(v.provenance == Provenance::Derived);
        CHECK(!v.witness.has_value());
    }
    SUBCASE("the vanishing-product condition exposes its one-sided projection") {
        CharVerdict v = evaluate_characterization(*find_characterization("core-cond-8"), c);
        CHECK(v.value == Tri::False);
        REQUIRE(v.witness.has_value());
        CHECK(element_to_string(*v.witness) == "[[1/2,-1/2],[-1/2,1/2]]");
        CHECK(is_zero(*v.witness * a));   // annihilates from the left
        CHECK(!is_zero(a * *v.witness));  // but not from the right
    }
    SUBCASE("the unit construction rejects it") {
        CHECK_THROWS_AS(unit_construction(a), UsageError);
        CHECK_THROWS_AS(ep_left_invertible_factor(a), UsageError);
    }
}

TEST_CASE("nilpotent matrix separates the bare commutation test from the gated entry") {
    Element n = el(kQ2, "[[0,1],[0,0]]");
    EpContext c = make_ep_context(n);
    REQUIRE(c.mp.has_value());
    CHECK(!c.group.has_value());
    CHECK(!c.core.has_value());
    CHECK(!c.ep);

    // a a-dagger and a-dagger a are complementary diagonal projections here,
    // so the power-1 commutation holds even though the element is far from
    // the baseline; the registry entry stays false because it also demands
    // the group inverse.
    CHECK(n_ep(n, 1) == Tri::True);
    CharVerdict gated = evaluate_characterization(*find_characterization("n-ep-1"), c);
    CHECK(gated.value == Tri::False);

    CHECK(n_ep(n, 2) == Tri::True);  // a^2 = 0 makes both products vanish
    CHECK_THROWS_AS(n_ep(n, 0), UsageError);

    CHECK(evaluate_characterization(*find_characterization("group-hermitian"), c).value ==
          Tri::Inapplicable);
    CHECK(evaluate_characterization(*find_characterization("core-cond-2"), c).value ==
          Tri::Inapplicable);
    CHECK(evaluate_characterization(*find_characterization("mp-eq-core"), c).value ==
          Tri::Inapplicable);
    CHECK(evaluate_characterization(*find_characterization("three-eq-left"), c).value ==
          Tri::False);

    SUBCASE("missing Moore-Penrose inverse means inapplicable commutation") {
        RingSpec z12 = parse_ring_spec("Zmod:12");
        CHECK(n_ep(el(z12, "2"), 1) == Tri::Inapplicable);
    }
}

TEST_CASE("baseline diagonal over the rationals takes constructive witnesses") {
    Element d = el(kQ2, "[[2,0],[0,0]]");
    EpContext c = make_ep_context(d);
    CHECK(c.ep);

    for (const Characterization& ch : characterizations()) {
        CharVerdict v = evaluate_characterization(ch, c);
        CAPTURE(ch.id);
        CHECK(v.value == Tri::True);
    }

    CharVerdict three = evaluate_characterization(*find_characterization("three-eq-left"), c);
    CHECK(three.provenance == Provenance::Constructive);
    REQUIRE(three.witness.has_value());
    CHECK(*three.witness == *c.mp);

    CharVerdict factor = evaluate_characterization(*find_characterization("factor-mp-unit"), c);
    REQUIRE(factor.witness.has_value());
    CHECK(classify(*factor.witness).unit);
    CHECK(*factor.witness * d == *c.mp);
    CHECK(element_to_string(*factor.witness) == "[[1/4,0],[0,1]]");

    UnitConstruction uc = unit_construction(d);
    CHECK(element_to_string(uc.unit) == "[[1/4,0],[0,1]]");
    CHECK(element_to_string(uc.unit_inverse) == "[[4,0],[0,1]]");
    CHECK(element_to_string(uc.product) == "[[1/2,0],[0,0]]");
    CHECK(is_one(uc.unit * uc.unit_inverse));
    CHECK(uc.product == *c.mp);

    LeftFactor lf = ep_left_invertible_factor(d);
    CHECK(is_one(lf.left_inverse * lf.factor));
    CHECK(lf.factor * d == *c.mp);
}

TEST_CASE("exhaustive biconditional sweep over both 2x2 field rings") {
    struct Expect {
        RingSpec ring;
        std::uint64_t mp, group, core, ep;
    };
    const Expect plans[] = {
        {kGF2, 11, 13, 11, 9},
        {kGF3, 81, 73, 73, 57},
    };

    for (const Expect& plan : plans) {
        CAPTURE(plan.ring.name());
        Enumeration en(plan.ring);
        std::uint64_t mp_count = 0, group_count = 0, core_count = 0, ep_count = 0;
        std::uint64_t applicable = 0;
        for (std::uint64_t i = 0; i < en.size(); ++i) {
            Element a = en.at(i);
            EpContext c = make_ep_context(a);
            mp_count += c.mp.has_value();
            group_count += c.group.has_value();
            core_count += c.core.has_value();
            ep_count += c.ep;

            // Star symmetry of the baseline.
            CHECK(ep_baseline(star(a)) == c.ep);

            // Frozen observation: with a Moore-Penrose inverse present, the
            // lone commutation [a-dagger a, a-dagger] = 0 already singles
            // out exactly the baseline elements in these rings.
            if (c.mp.has_value())
                CHECK(is_zero(commutator(*c.mp * a, *c.mp)) == c.ep);

            for (const Characterization& ch : characterizations()) {
                CharVerdict v = evaluate_characterization(ch, c);
                CAPTURE(ch.id);
                CAPTURE(element_to_string(a));
                if (v.value == Tri::Inapplicable) {
                    CHECK(!gate_admits(ch.gate, c));
                    continue;
                }
                ++applicable;
                // Finite rings never need the derived fallback.
                CHECK(v.provenance != Provenance::Derived);
                CHECK((v.value == Tri::True) == c.ep);
            }
        }
        CHECK(mp_count == plan.mp);
        CHECK(group_count == plan.group);
        CHECK(core_count == plan.core);
        CHECK(ep_count == plan.ep);
        CHECK(applicable > 0);
    }
}

TEST_CASE("commutative modular rings: every regular element passes") {
    SUBCASE("all six residues mod 6") {
        RingSpec z6 = parse_ring_spec("Zmod:6");
        Enumeration en(z6);
        for (std::uint64_t i = 0; i < en.size(); ++i) {
            Element a = en.at(i);
            EpContext c = make_ep_context(a);
            CHECK(c.ep);
            for (const Characterization& ch : characterizations()) {
                CharVerdict v = evaluate_characterization(ch, c);
                CAPTURE(ch.id);
                CAPTURE(element_to_string(a));
                CHECK(v.value == Tri::True);
            }
        }
    }
    SUBCASE("mod 12 splits at the non-regular residues") {
        RingSpec z12 = parse_ring_spec("Zmod:12");
        Enumeration en(z12);
        std::uint64_t ep_count = 0;
        for (std::uint64_t i = 0; i < en.size(); ++i) {
            Element a = en.at(i);
            EpContext c = make_ep_context(a);
            bool regular = c.mp.has_value();
            std::uint64_t v = i;  // canonical order is the residue itself
            bool expected_regular = !(v == 2 || v == 6 || v == 10);
            CHECK(regular == expected_regular);
            CHECK(c.ep == expected_regular);
            ep_count += c.ep;
            for (const Characterization& ch : characterizations()) {
                CharVerdict verdict = evaluate_characterization(ch, c);
                CAPTURE(ch.id);
                CAPTURE(element_to_string(a));
                if (verdict.value != Tri::Inapplicable)
                    CHECK((verdict.value == Tri::True) == c.ep);
            }
        }
        CHECK(ep_count == 9);
    }
}

TEST_CASE("unit construction across rings") {
    SUBCASE("residue ring") {
        RingSpec z6 = parse_ring_spec("Zmod:6");
        UnitConstruction uc = unit_construction(el(z6, "2"));
        CHECK(element_to_string(uc.unit) == "1");
        CHECK(element_to_string(uc.product) == "2");
    }
    SUBCASE("finite field matrices agree with the searched inverses") {
        Enumeration en(kGF3);
        std::uint64_t built = 0;
        for (std::uint64_t i = 0; i < en.size(); ++i) {
            Element a = en.at(i);
            if (!ep_baseline(a)) continue;
            UnitConstruction uc = unit_construction(a);
            CHECK(classify(uc.unit).unit);
            CHECK(uc.product == *moore_penrose(a));
            ++built;
        }
        CHECK(built == 57);
    }
}
