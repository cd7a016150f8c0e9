#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "epkit/geninv.hpp"

using namespace epkit;

namespace {

Element el(const char* ring, const char* text) {
    return parse_element(parse_ring_spec(ring), text);
}

// Reference path: plain enumeration against the defining equations,
// independent of the closed-form engine.
std::vector<Element> find_all(const Element& a, InverseKind kind) {
    Enumeration e(a.ring);
    std::vector<Element> out;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        Element x = e.at(i);
        if (all_hold(verify_inverse(a, x, kind))) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("worked example over the rationals") {
    Element a = el("Mat:2:Q", "[[0,1],[0,1]]");

    auto mp = moore_penrose(a);
    REQUIRE(mp.has_value());
    CHECK(element_to_string(*mp) == "[[0,0],[1/2,1/2]]");

    auto g = group_inverse(a);
    REQUIRE(g.has_value());
    CHECK(*g == a);

    auto c = core_inverse(a);
    REQUIRE(c.has_value());
    CHECK(element_to_string(*c) == "[[1/2,1/2],[1/2,1/2]]");
    CHECK(all_hold(verify_inverse(a, *c, InverseKind::Core)));

    auto dc = dual_core_inverse(a);
    REQUIRE(dc.has_value());
    CHECK(element_to_string(*dc) == "[[0,0],[0,1]]");
    CHECK(all_hold(verify_inverse(a, *dc, InverseKind::DualCore)));

    // not EP: the group and Moore-Penrose inverses differ
    CHECK(*g != *mp);
    CHECK(*c != *g);

    auto one = one_inverse(a);
    REQUIRE(one.has_value());
    CHECK(a * *one * a == a);
}

TEST_CASE("nilpotent element has Moore-Penrose but no group inverse") {
    Element n = el("Mat:2:Q", "[[0,1],[0,0]]");
    auto mp = moore_penrose(n);
    REQUIRE(mp.has_value());
    CHECK(element_to_string(*mp) == "[[0,0],[1,0]]");
    CHECK(!group_inverse(n).has_value());
    CHECK(!core_inverse(n).has_value());
    CHECK(!dual_core_inverse(n).has_value());

    InverseBundle b = inverse_bundle(n);
    CHECK(b.mp.value.has_value());
    CHECK(all_hold(b.mp.certificates));
    CHECK(!b.group.value.has_value());
    CHECK(b.group.absence.find("rank") != std::string::npos);
    CHECK(b.one.value.has_value());
}

TEST_CASE("verify_inverse reports failing equations") {
    Element a = el("Mat:2:Q", "[[0,1],[0,1]]");
    auto certs = verify_inverse(a, zero_of(a.ring), InverseKind::MoorePenrose);
    CHECK(!all_hold(certs));
    CHECK(certs[0].equation == "axa=a");
    CHECK(!certs[0].holds);
    CHECK(certs[2].holds);  // (a*0)* = 0 = a*0

    // group inverse candidate that commutes but fails xax=x
    auto certs2 = verify_inverse(a, a + a, InverseKind::Group);
    CHECK(!all_hold(certs2));
}

TEST_CASE("gaussian-rational example with conjugate transpose") {
    Element b = el("Mat:2:Qi", "[[1,i],[0,0]]");
    auto mp = moore_penrose(b);
    REQUIRE(mp.has_value());
    CHECK(element_to_string(*mp) == "[[1/2,0],[-1/2*i,0]]");
    auto g = group_inverse(b);
    REQUIRE(g.has_value());
    CHECK(*g == b);  // idempotent
    auto c = core_inverse(b);
    REQUIRE(c.has_value());
    CHECK(element_to_string(*c) == "[[1,0],[0,0]]");
    auto dc = dual_core_inverse(b);
    REQUIRE(dc.has_value());
    CHECK(all_hold(verify_inverse(b, *dc, InverseKind::DualCore)));
    CHECK(*mp != *g);  // not EP
}

TEST_CASE("modular scalars: every Zmod:6 element is its own inverse") {
    RingSpec z6 = parse_ring_spec("Zmod:6");
    Enumeration e(z6);
    for (std::uint64_t i = 0; i < 6; ++i) {
        Element a = e.at(i);
        CHECK(moore_penrose(a) == a);
        CHECK(group_inverse(a) == a);
        CHECK(core_inverse(a) == a);
        CHECK(dual_core_inverse(a) == a);
    }
    CHECK(one_inverse(parse_element(z6, "2")) == parse_element(z6, "2"));
}

TEST_CASE("Zmod:12 has non-regular elements") {
    RingSpec z12 = parse_ring_spec("Zmod:12");
    for (int v : {2, 6, 10}) {
        Element a = parse_element(z12, std::to_string(v));
        CHECK(!one_inverse(a).has_value());
        CHECK(!moore_penrose(a).has_value());
        CHECK(!group_inverse(a).has_value());
        CHECK(!core_inverse(a).has_value());
        InverseBundle b = inverse_bundle(a);
        CHECK(b.one.absence.find("exhaustive") != std::string::npos);
    }
    for (int v : {0, 1, 3, 4, 5, 7, 8, 9, 11}) {
        Element a = parse_element(z12, std::to_string(v));
        CHECK(moore_penrose(a) == a);
        CHECK(group_inverse(a) == a);
    }
}

TEST_CASE("existence counts over small matrix rings") {
    // M2(GF(2)): 11 Moore-Penrose, 13 group, 11 core, 11 dual core
    Enumeration e2(parse_ring_spec("Mat:2:GF2"));
    int mp = 0, gr = 0, co = 0, dc = 0, one = 0;
    for (std::uint64_t i = 0; i < e2.size(); ++i) {
        Element a = e2.at(i);
        if (moore_penrose(a)) ++mp;
        if (group_inverse(a)) ++gr;
        if (core_inverse(a)) ++co;
        if (dual_core_inverse(a)) ++dc;
        if (one_inverse(a)) ++one;
    }
    CHECK(mp == 11);
    CHECK(gr == 13);
    CHECK(co == 11);
    CHECK(dc == 11);
    CHECK(one == 16);  // matrix rings over fields are regular

    // M2(GF(3)): every element has a Moore-Penrose inverse; 73 group/core
    Enumeration e3(parse_ring_spec("Mat:2:GF3"));
    mp = gr = co = dc = 0;
    for (std::uint64_t i = 0; i < e3.size(); ++i) {
        Element a = e3.at(i);
        if (moore_penrose(a)) ++mp;
        if (group_inverse(a)) ++gr;
        if (core_inverse(a)) ++co;
        if (dual_core_inverse(a)) ++dc;
    }
    CHECK(mp == 81);
    CHECK(gr == 73);
    CHECK(co == 73);
    CHECK(dc == 73);
}

TEST_CASE("finite-field values match the paper-style examples reduced mod p") {
    Element a2 = el("Mat:2:GF2", "[[0,1],[0,1]]");
    CHECK(!moore_penrose(a2).has_value());  // GF(2) lacks this MP inverse
    auto g2 = group_inverse(a2);
    REQUIRE(g2.has_value());
    CHECK(*g2 == a2);
    CHECK(!core_inverse(a2).has_value());

    // core inverse can exist without Moore-Penrose over GF(2)
    Element w = el("Mat:2:GF2", "[[0,0],[1,1]]");
    CHECK(!moore_penrose(w).has_value());
    auto cw = core_inverse(w);
    REQUIRE(cw.has_value());
    CHECK(element_to_string(*cw) == "[[0,0],[0,1]]");
    CHECK(all_hold(verify_inverse(w, *cw, InverseKind::Core)));

    Element a3 = el("Mat:2:GF3", "[[0,1],[0,1]]");
    auto mp3 = moore_penrose(a3);
    REQUIRE(mp3.has_value());
    CHECK(element_to_string(*mp3) == "[[0,0],[2,2]]");
    CHECK(group_inverse(a3) == a3);
    auto c3 = core_inverse(a3);
    REQUIRE(c3.has_value());
    CHECK(element_to_string(*c3) == "[[2,2],[2,2]]");

    Element n3 = el("Mat:2:GF3", "[[0,1],[0,0]]");
    auto mpn = moore_penrose(n3);
    REQUIRE(mpn.has_value());
    CHECK(element_to_string(*mpn) == "[[0,0],[1,0]]");
    CHECK(!group_inverse(n3).has_value());
    CHECK(!core_inverse(n3).has_value());
}

TEST_CASE("closed forms agree with exhaustive search everywhere") {
    for (const char* rs : {"Mat:2:GF2", "Mat:2:GF3"}) {
        Enumeration e(parse_ring_spec(rs));
        for (std::uint64_t i = 0; i < e.size(); ++i) {
            Element a = e.at(i);
            for (InverseKind k : {InverseKind::MoorePenrose, InverseKind::Group,
                                  InverseKind::Core, InverseKind::DualCore}) {
                std::vector<Element> all = find_all(a, k);
                REQUIRE(all.size() <= 1);  // uniqueness by search
                std::optional<Element> engine;
                switch (k) {
                    case InverseKind::MoorePenrose: engine = moore_penrose(a); break;
                    case InverseKind::Group: engine = group_inverse(a); break;
                    case InverseKind::Core: engine = core_inverse(a); break;
                    case InverseKind::DualCore: engine = dual_core_inverse(a); break;
                    default: break;
                }
                CHECK(engine.has_value() == !all.empty());
                if (engine) CHECK(*engine == all[0]);
            }
            // {1}-inverse existence agreement (value may legitimately differ)
            CHECK(one_inverse(a).has_value() == !find_all(a, InverseKind::One).empty());
        }
    }
}

TEST_CASE("group decomposition in a commutative ring") {
    RingSpec z6 = parse_ring_spec("Zmod:6");
    Element a = parse_element(z6, "2");
    Decomposition d = decomposition(a, DecompKind::Group);
    CHECK(element_to_string(d.p) == "3");
    CHECK(element_to_string(d.inverse_witness) == "5");
    CHECK(d.inverse_witness - d.p == *group_inverse(a));
    CHECK((a + d.p) * d.inverse_witness == one_of(z6));
}

TEST_CASE("core decomposition of the worked example") {
    Element a = el("Mat:2:Q", "[[0,1],[0,1]]");
    Decomposition d = decomposition(a, DecompKind::Core);
    CHECK(element_to_string(d.p) == "[[1/2,-1/2],[-1/2,1/2]]");
    CHECK(is_zero(d.p * a));
    CHECK(!is_zero(a * d.p));
    CHECK(d.inverse_witness == d.p + *core_inverse(a));
    CHECK(star(d.p) == d.p);
    CHECK(d.p * d.p == d.p);
}

TEST_CASE("ep decomposition needs an EP element") {
    Element a = el("Mat:2:Q", "[[0,1],[0,1]]");
    CHECK_THROWS_AS(decomposition(a, DecompKind::Ep), UsageError);
    CHECK_THROWS_AS(decomposition(el("Mat:2:Q", "[[0,1],[0,0]]"), DecompKind::Group),
                    UsageError);

    Element h = el("Mat:2:Q", "[[2,0],[0,0]]");
    Decomposition d = decomposition(h, DecompKind::Ep);
    CHECK(element_to_string(d.p) == "[[0,0],[0,1]]");
    CHECK(element_to_string(d.inverse_witness) == "[[1/2,0],[0,1]]");
    CHECK(d.inverse_witness - d.p == *moore_penrose(h));

    Decomposition one_d = decomposition(one_of(parse_ring_spec("Mat:2:Q")), DecompKind::Ep);
    CHECK(is_zero(one_d.p));
    CHECK(is_one(one_d.inverse_witness));
}
