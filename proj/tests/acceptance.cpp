// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion is checked at exact (rational / modular) equality; the
// timed criteria enforce their wall-clock budgets.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "epkit/geninv.hpp"
#include "epkit/registry.hpp"
#include "epkit/verifier.hpp"

using namespace epkit;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double seconds,
            double bound_seconds, const std::string& detail) {
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name << " ("
         << seconds << "s";
    if (bound_seconds > 0) line << ", bound " << bound_seconds << "s";
    line << ")";
    if (!pass && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << "\n";
    if (!pass) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& name, double bound_seconds, Fn&& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (bound_seconds > 0 && seconds >= bound_seconds) {
        pass = false;
        if (detail.empty()) detail = "over time bound";
    }
    report(number, name, pass, seconds, bound_seconds, detail);
}

bool expect(bool ok, std::string& detail, const std::string& complaint) {
    if (!ok && detail.empty()) detail = complaint;
    return ok;
}

const std::vector<std::string>& finite_ring_names() {
    static const std::vector<std::string> names = {"Mat:2:GF2", "Mat:2:GF3", "Zmod:6",
                                                   "Zmod:12"};
    return names;
}

}  // namespace

int main() {
    criterion(1, "golden rational example", 1.0, [](std::string& detail) {
        RingSpec ring = parse_ring_spec("Mat:2:Q");
        Element a = parse_element(ring, "[[0,1],[0,1]]");
        auto group = group_inverse(a);
        auto core = core_inverse(a);
        bool ok = expect(group && *group == a, detail, "group inverse is not the element");
        ok &= expect(core && element_to_string(*core) == "[[1/2,1/2],[1/2,1/2]]", detail,
                     "core inverse mismatch");
        ok &= expect(!ep_baseline(a), detail, "element wrongly reported as baseline");
        if (!ok) return false;
        Element p = one_of(ring) - a * *core;
        ok &= expect(element_to_string(p) == "[[1/2,-1/2],[-1/2,1/2]]", detail,
                     "complementary projection mismatch");
        ok &= expect(is_zero(p * a), detail, "projection fails to annihilate on the left");
        ok &= expect(!is_zero(a * p), detail, "projection wrongly annihilates on the right");
        return ok;
    });

    criterion(2, "exhaustive biconditional sweep", 30.0, [](std::string& detail) {
        bool ok = true;
        for (const char* name : {"Mat:2:GF2", "Mat:2:GF3"}) {
            TheoremReport r = run_suite(build_corpus(parse_ring_spec(name)));
            ok &= expect(r.characterizations.size() == 65, detail,
                         std::string(name) + ": registry walk incomplete");
            ok &= expect(r.disagreements == 0 && r.counterexamples.empty(), detail,
                         std::string(name) + ": " + std::to_string(r.disagreements) +
                             " disagreements");
            std::uint64_t derived = 0;
            for (const auto& t : r.characterizations) derived += t.derived;
            ok &= expect(derived == 0, detail,
                         std::string(name) + ": finite ring fell back to derived verdicts");
            ok &= expect(r.violations == 0, detail,
                         std::string(name) + ": structural violations");
        }
        return ok;
    });

    criterion(3, "solution-set equalities", 10.0, [](std::string& detail) {
        Corpus corpus = build_corpus(parse_ring_spec("Mat:2:GF2"));
        std::uint64_t anchors = 0, mismatches = 0;
        for (const Element& a : corpus.elements) {
            if (!ep_baseline(a)) continue;
            ++anchors;
            for (SolutionFamily f : kSolutionFamilies)
                if (!solution_set(a, f).equal) ++mismatches;
        }
        bool ok = expect(anchors == 9, detail, "anchor count drifted");
        ok &= expect(mismatches == 0, detail,
                     std::to_string(mismatches) + " generator/set mismatches");
        return ok;
    });

    criterion(4, "singleton claims", 0.0, [](std::string& detail) {
        SingletonClaimReport two = singleton_claims(parse_ring_spec("Mat:2:GF2"));
        SingletonClaimReport three = singleton_claims(parse_ring_spec("Mat:2:GF3"));
        bool ok = expect(two.claims_checked == 9 * 11 && two.violations.empty(), detail,
                         "claims fail over the binary field");
        ok &= expect(three.claims_checked == 57 * 11 && three.violations.empty(), detail,
                     "claims fail over the ternary field");
        return ok;
    });

    criterion(5, "structural identities", 0.0, [](std::string& detail) {
        bool ok = true;
        for (const std::string& name : finite_ring_names()) {
            Corpus corpus = build_corpus(parse_ring_spec(name));
            for (const Element& a : corpus.elements) {
                auto core = core_inverse(a);
                if (!core) continue;
                const Element& k = *core;
                auto group = group_inverse(a);
                ok &= expect(group && *group == k * k * a, detail,
                             name + ": group differs from squared-core-times-element at " +
                                 element_to_string(a));
                Element asq_core = a * a * k;
                auto core2 = core_inverse(k);
                auto mp2 = moore_penrose(k);
                auto group2 = group_inverse(k);
                ok &= expect(core2 && *core2 == asq_core && mp2 && *mp2 == asq_core &&
                                 group2 && *group2 == asq_core,
                             detail, name + ": inverses of the core inverse drift at " +
                                         element_to_string(a));
                auto mp = moore_penrose(a);
                if (mp) {
                    auto core_of_mp = core_inverse(*mp);
                    ok &= expect(core_of_mp && *core_of_mp == star(k * a) * a, detail,
                                 name + ": core of the pseudoinverse drifts at " +
                                     element_to_string(a));
                }
                Element one = one_of(a.ring);
                Decomposition d = decomposition(a, DecompKind::Core);
                ok &= expect(star(d.p) == d.p && d.p * d.p == d.p && is_zero(d.p * a) &&
                                 is_one(d.inverse_witness * (a * (one - d.p) + d.p)) &&
                                 d.inverse_witness == d.p + k,
                             detail,
                             name + ": core decomposition round trip fails at " +
                                 element_to_string(a));
                if (group) {
                    Decomposition dg = decomposition(a, DecompKind::Group);
                    ok &= expect(dg.p * dg.p == dg.p && is_zero(dg.p * a) &&
                                     is_zero(a * dg.p) && is_one((a + dg.p) *
                                     dg.inverse_witness) && dg.inverse_witness - dg.p == *group,
                                 detail,
                                 name + ": group decomposition round trip fails at " +
                                     element_to_string(a));
                }
                if (mp && group && *mp == *group) {
                    Decomposition de = decomposition(a, DecompKind::Ep);
                    ok &= expect(star(de.p) == de.p && is_one((a + de.p) * de.inverse_witness),
                                 detail,
                                 name + ": projection decomposition round trip fails at " +
                                     element_to_string(a));
                }
            }
        }
        return ok;
    });

    criterion(6, "unit construction", 0.0, [](std::string& detail) {
        bool ok = true;
        auto sweep = [&](const Corpus& corpus, const std::string& name) {
            for (const Element& a : corpus.elements) {
                auto mp = moore_penrose(a);
                auto group = group_inverse(a);
                if (!mp || !group || *mp != *group) continue;
                Element one = one_of(a.ring);
                Element u = *group * *group + one - a * *group;
                Element v = a * a + one - a * *group;
                ok &= expect(is_one(u * v) && is_one(v * u), detail,
                             name + ": constructed unit fails at " + element_to_string(a));
                auto core = core_inverse(a);
                ok &= expect(u * a == *mp && core && u * a == *core, detail,
                             name + ": unit times element misses the inverses at " +
                                 element_to_string(a));
            }
        };
        for (const std::string& name : finite_ring_names())
            sweep(build_corpus(parse_ring_spec(name)), name);
        sweep(build_random_corpus(parse_ring_spec("Mat:3:Q"), 42, 100), "Mat:3:Q random");
        return ok;
    });

    criterion(7, "uniqueness by search", 0.0, [](std::string& detail) {
        bool ok = true;
        for (const std::string& name : finite_ring_names()) {
            Enumeration en(parse_ring_spec(name));
            for (std::uint64_t i = 0; i < en.size(); ++i) {
                Element a = en.at(i);
                for (InverseKind kind :
                     {InverseKind::MoorePenrose, InverseKind::Group, InverseKind::Core}) {
                    std::uint64_t found = 0;
                    for (std::uint64_t j = 0; j < en.size(); ++j)
                        if (all_hold(verify_inverse(a, en.at(j), kind))) ++found;
                    ok &= expect(found <= 1, detail,
                                 name + ": " + inverse_kind_name(kind) +
                                     " has multiple solutions at " + element_to_string(a));
                }
            }
        }
        return ok;
    });

    criterion(8, "random rational corpus determinism", 60.0, [](std::string& detail) {
        RingSpec ring = parse_ring_spec("Mat:3:Q");
        TheoremReport first = run_suite(build_random_corpus(ring, 42, 100));
        bool ok = expect(first.element_count == 100, detail, "corpus size drifted");
        ok &= expect(first.disagreements == 0, detail, "characterization disagreements");
        ok &= expect(first.violations == 0, detail, "structural violations");
        TheoremReport second = run_suite(build_random_corpus(ring, 42, 100));
        ok &= expect(emit_report(first, true) == emit_report(second, true), detail,
                     "json report bytes differ across runs");
        ok &= expect(emit_report(first, false) == emit_report(second, false), detail,
                     "text report bytes differ across runs");
        return ok;
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
