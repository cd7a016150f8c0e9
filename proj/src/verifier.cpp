#include "epkit/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "epkit/geninv.hpp"
#include "epkit/subsets.hpp"

using nlohmann::ordered_json;

namespace epkit {

namespace {

// Entries come from the raw stream through explicit modulus arithmetic;
// std::uniform_int_distribution is implementation-defined and would break
// the byte-stability contract across standard libraries.
long long span_draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

long long entry_draw(const RingSpec& ring, std::mt19937_64& rng) {
    if (ring.scalar == ScalarKind::PrimeField || ring.scalar == ScalarKind::ModularIntegers) {
        std::uint64_t m = std::min<std::uint64_t>(ring.modulus, 19);
        return static_cast<long long>(rng() % m);
    }
    return span_draw(rng, -9, 9);
}

Element from_ints(const RingSpec& ring, const std::vector<std::vector<long long>>& cells) {
    std::uint64_t m = ring.finite() ? ring.modulus : 0;
    std::string text = "[";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        text += r ? ",[" : "[";
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            long long v = cells[r][c];
            if (m) v = ((v % static_cast<long long>(m)) + static_cast<long long>(m)) %
                       static_cast<long long>(m);
            if (c) text += ",";
            text += std::to_string(v);
        }
        text += "]";
    }
    text += "]";
    return parse_element(ring, text);
}

std::vector<std::vector<long long>> int_matrix(const RingSpec& ring, std::mt19937_64& rng,
                                               std::size_t rows, std::size_t cols) {
    std::vector<std::vector<long long>> cells(rows, std::vector<long long>(cols, 0));
    for (auto& row : cells)
        for (auto& v : row) v = entry_draw(ring, rng);
    return cells;
}

Element profile_dense(const RingSpec& ring, std::mt19937_64& rng) {
    return from_ints(ring, int_matrix(ring, rng, ring.dim, ring.dim));
}

Element profile_rank_deficient(const RingSpec& ring, std::mt19937_64& rng) {
    std::size_t k = ring.dim;
    std::size_t r = 1 + static_cast<std::size_t>(rng() % (k - 1));
    auto u = int_matrix(ring, rng, k, r);
    auto v = int_matrix(ring, rng, r, k);
    std::vector<std::vector<long long>> cells(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < r; ++t) cells[i][j] += u[i][t] * v[t][j];
    return from_ints(ring, cells);
}

Element profile_nilpotent(const RingSpec& ring, std::mt19937_64& rng) {
    std::size_t k = ring.dim;
    std::vector<std::vector<long long>> cells(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) cells[i][j] = entry_draw(ring, rng);
    return from_ints(ring, cells);
}

Element profile_hermitian(const RingSpec& ring, std::mt19937_64& rng) {
    Element b = profile_dense(ring, rng);
    return b + star(b);
}

Element profile_idempotent(const RingSpec& ring, std::mt19937_64& rng) {
    std::size_t k = ring.dim;
    Element s = one_of(ring);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Element candidate = profile_dense(ring, rng);
        if (classify(candidate).unit) {
            s = candidate;
            break;
        }
    }
    std::vector<std::vector<long long>> diag(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) diag[i][i] = static_cast<long long>(rng() % 2);
    Element d = from_ints(ring, diag);
    return s * d * *unit_inverse(s);
}

struct Profile {
    const char* label;
    Element (*make)(const RingSpec&, std::mt19937_64&);
};

constexpr Profile kProfiles[] = {
    {"dense", profile_dense},           {"rank-deficient", profile_rank_deficient},
    {"nilpotent", profile_nilpotent},   {"hermitian", profile_hermitian},
    {"idempotent", profile_idempotent},
};

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ",";
        out += ids[i];
    }
    return out;
}

std::string at_element(const Element& a) { return element_to_string(a); }

void record(StructuralCheck& check, bool ok, const std::string& complaint) {
    ++check.checked;
    if (!ok) check.violations.push_back(complaint);
}

StructuralCheck involution_laws(const Corpus& corpus) {
    StructuralCheck check{"involution-laws", 0, {}, false, ""};
    const auto& es = corpus.elements;
    if (es.empty()) return check;
    auto probe = [&](const Element& a, const Element& b) {
        bool ok = star(star(a)) == a && star(a + b) == star(a) + star(b) &&
                  star(a * b) == star(b) * star(a);
        record(check, ok,
               "involution law fails at (" + at_element(a) + ", " + at_element(b) + ")");
    };
    std::size_t n = es.size();
    if (n * n <= 20000) {
        for (const auto& a : es)
            for (const auto& b : es) probe(a, b);
    } else {
        for (std::size_t i = 0; i < n; ++i) probe(es[i], es[(i + 1) % n]);
    }
    return check;
}

StructuralCheck annihilator_duality(const RingSpec& ring, std::uint64_t cap) {
    StructuralCheck check{"annihilator-duality", 0, {}, false, ""};
    if (!ring.finite()) {
        check.skipped = true;
        check.note = "needs a finite ring to enumerate annihilators";
        return check;
    }
    Enumeration en(ring, cap);
    std::size_t n = static_cast<std::size_t>(en.size());
    struct Slot {
        SubsetHandle right_ideal, left_ideal, left_ann, right_ann;
        bool regular = false;
    };
    std::vector<Slot> slots(n);
    for (std::size_t i = 0; i < n; ++i) {
        Element a = en.at(i);
        slots[i].right_ideal = subset_handle_list(SubsetKind::RightIdeal, a, cap);
        slots[i].left_ideal = subset_handle_list(SubsetKind::LeftIdeal, a, cap);
        slots[i].left_ann = subset_handle_list(SubsetKind::LeftAnnihilator, a, cap);
        slots[i].right_ann = subset_handle_list(SubsetKind::RightAnnihilator, a, cap);
        slots[i].regular = one_inverse(a, cap).has_value();
    }
    auto pair_check = [&](std::size_t i, std::size_t j) {
        const Slot& a = slots[i];
        const Slot& b = slots[j];
        std::string tag =
            " at (" + at_element(en.at(i)) + ", " + at_element(en.at(j)) + ")";
        bool right_fwd = !subset_included(a.right_ideal, b.right_ideal) ||
                         subset_included(b.left_ann, a.left_ann);
        record(check, right_fwd, "right-ideal inclusion lost its annihilator reversal" + tag);
        bool left_fwd = !subset_included(a.left_ideal, b.left_ideal) ||
                        subset_included(b.right_ann, a.right_ann);
        record(check, left_fwd, "left-ideal inclusion lost its annihilator reversal" + tag);
        if (b.regular) {
            bool right_bwd = !subset_included(b.left_ann, a.left_ann) ||
                             subset_included(a.right_ideal, b.right_ideal);
            record(check, right_bwd,
                   "annihilator inclusion failed to recover the right ideals" + tag);
            bool left_bwd = !subset_included(b.right_ann, a.right_ann) ||
                            subset_included(a.left_ideal, b.left_ideal);
            record(check, left_bwd,
                   "annihilator inclusion failed to recover the left ideals" + tag);
        }
    };
    if (n <= 300) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pair_check(i, j);
    } else {
        for (std::size_t i = 0; i < n; ++i) pair_check(i, (i * 7 + 3) % n);
    }
    return check;
}

StructuralCheck inverse_certificates(const Corpus& corpus,
                                     const std::vector<InverseBundle>& bundles) {
    StructuralCheck check{"inverse-certificates", 0, {}, false, ""};
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        const InverseBundle& b = bundles[i];
        auto probe = [&](const InverseInfo& info, const char* kind) {
            if (!info.value) return;
            record(check, all_hold(info.certificates),
                   std::string(kind) + " certificate set fails at " +
                       at_element(corpus.elements[i]));
        };
        probe(b.one, "one-inverse");
        probe(b.mp, "moore-penrose");
        probe(b.group, "group");
        probe(b.core, "core");
        probe(b.dual_core, "dual-core");
    }
    return check;
}

StructuralCheck core_identities(const Corpus& corpus,
                                const std::vector<std::optional<EpContext>>& contexts,
                                std::uint64_t cap) {
    StructuralCheck check{"core-identities", 0, {}, false, ""};
    for (std::size_t i = 0; i < corpus.elements.size(); ++i) {
        if (!contexts[i] || !contexts[i]->core) continue;
        const EpContext& c = *contexts[i];
        const Element& a = c.a;
        const Element& k = *c.core;
        std::string tag = " at " + at_element(a);
        if (!c.group) {
            record(check, false, "core inverse present without a group inverse" + tag);
            continue;
        }
        Element re_squared = k * k * a;
        record(check, *c.group == re_squared,
               "group inverse differs from squared-core-times-element" + tag);
        Element asq_core = a * a * k;
        auto core_of_core = core_inverse(k, cap);
        record(check, core_of_core && *core_of_core == asq_core,
               "core of the core inverse misses element-squared-times-core" + tag);
        auto mp_of_core = moore_penrose(k, cap);
        record(check, mp_of_core && *mp_of_core == asq_core,
               "moore-penrose of the core inverse misses element-squared-times-core" + tag);
        auto group_of_core = group_inverse(k, cap);
        record(check, group_of_core && *group_of_core == asq_core,
               "group inverse of the core inverse misses element-squared-times-core" + tag);
        if (c.mp) {
            auto core_of_mp = core_inverse(*c.mp, cap);
            record(check, core_of_mp && *core_of_mp == star(k * a) * a,
                   "core of the moore-penrose inverse misses its closed form" + tag);
        }
    }
    return check;
}

StructuralCheck decomposition_check(const Corpus& corpus,
                                    const std::vector<std::optional<EpContext>>& contexts,
                                    DecompKind kind, std::uint64_t cap) {
    const char* name = kind == DecompKind::Group    ? "decomposition-group"
                       : kind == DecompKind::Ep     ? "decomposition-ep"
                                                    : "decomposition-core";
    StructuralCheck check{name, 0, {}, false, ""};
    for (std::size_t i = 0; i < corpus.elements.size(); ++i) {
        if (!contexts[i]) continue;
        const EpContext& c = *contexts[i];
        bool applicable = kind == DecompKind::Group ? c.group.has_value()
                          : kind == DecompKind::Ep  ? c.ep
                                                    : c.core.has_value();
        if (!applicable) continue;
        const Element& a = c.a;
        Element one = one_of(a.ring);
        std::string tag = " at " + at_element(a);
        try {
            Decomposition d = decomposition(a, kind, cap);
            const Element& p = d.p;
            const Element& w = d.inverse_witness;
            bool ok = p * p == p && is_zero(p * a);
            if (kind != DecompKind::Core) ok = ok && is_zero(a * p);
            if (kind != DecompKind::Group) ok = ok && star(p) == p;
            Element unit = kind == DecompKind::Core ? a * (one - p) + p : a + p;
            ok = ok && is_one(w * unit) && is_one(unit * w);
            if (kind == DecompKind::Group) ok = ok && w - p == *c.group;
            if (kind == DecompKind::Ep) ok = ok && w - p == *c.mp;
            if (kind == DecompKind::Core) ok = ok && w == p + *c.core;
            record(check, ok, "decomposition parts fail their defining relations" + tag);
        } catch (const IntegrityFault& fault) {
            record(check, false, std::string(fault.what()));
        }
    }
    return check;
}

StructuralCheck unit_construction_check(const Corpus& corpus,
                                        const std::vector<std::optional<EpContext>>& contexts,
                                        std::uint64_t cap) {
    StructuralCheck check{"unit-construction", 0, {}, false, ""};
    for (std::size_t i = 0; i < corpus.elements.size(); ++i) {
        if (!contexts[i] || !contexts[i]->ep) continue;
        const EpContext& c = *contexts[i];
        std::string tag = " at " + at_element(c.a);
        try {
            UnitConstruction uc = unit_construction(c.a, cap);
            bool ok = is_one(uc.unit * uc.unit_inverse) && is_one(uc.unit_inverse * uc.unit) &&
                      uc.unit * c.a == *c.mp && uc.product == *c.core;
            record(check, ok, "constructed unit misses its certified relations" + tag);
        } catch (const IntegrityFault& fault) {
            record(check, false, std::string(fault.what()));
        }
    }
    return check;
}

StructuralCheck uniqueness_search(const RingSpec& ring, std::uint64_t cap) {
    StructuralCheck check{"uniqueness-search", 0, {}, false, ""};
    if (!ring.finite()) {
        check.skipped = true;
        check.note = "needs a finite ring to search for duplicate inverses";
        return check;
    }
    Enumeration en(ring, cap);
    constexpr InverseKind kinds[] = {InverseKind::MoorePenrose, InverseKind::Group,
                                     InverseKind::Core, InverseKind::DualCore};
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        Element a = en.at(i);
        for (InverseKind kind : kinds) {
            std::uint64_t found = 0;
            for (std::uint64_t j = 0; j < en.size(); ++j)
                if (all_hold(verify_inverse(a, en.at(j), kind))) ++found;
            record(check, found <= 1,
                   "two distinct " + inverse_kind_name(kind) + " inverses at " +
                       at_element(a));
        }
    }
    return check;
}

StructuralCheck star_symmetry(const Corpus& corpus,
                              const std::vector<std::optional<EpContext>>& contexts,
                              std::uint64_t cap) {
    StructuralCheck check{"star-symmetry", 0, {}, false, ""};
    for (std::size_t i = 0; i < corpus.elements.size(); ++i) {
        if (!contexts[i]) continue;
        const EpContext& c = *contexts[i];
        std::string tag = " at " + at_element(c.a);
        try {
            bool mirrored = corpus.ring.finite() ? ep_baseline(star(c.a), cap)
                                                 : make_ep_context(star(c.a), cap).ep;
            record(check, mirrored == c.ep,
                   "baseline verdict changes under the involution" + tag);
        } catch (const IntegrityFault& fault) {
            record(check, false, std::string(fault.what()));
        }
    }
    return check;
}

StructuralCheck solution_sets_check(const Corpus& corpus,
                                    const std::vector<std::optional<EpContext>>& contexts,
                                    std::uint64_t cap) {
    StructuralCheck check{"solution-sets", 0, {}, false, ""};
    if (!corpus.ring.finite()) {
        check.skipped = true;
        check.note = "solution sets are enumerable over finite rings only";
        return check;
    }
    for (std::size_t i = 0; i < corpus.elements.size(); ++i) {
        if (!contexts[i] || !contexts[i]->ep) continue;
        const Element& a = corpus.elements[i];
        for (SolutionFamily f : kSolutionFamilies) {
            SolutionSetReport rep = solution_set(a, f, cap);
            record(check, rep.equal,
                   std::string(solution_family_name(f)) +
                       " differs from its generator form at " + at_element(a));
        }
    }
    return check;
}

StructuralCheck singleton_claims_check(const RingSpec& ring, std::uint64_t cap) {
    StructuralCheck check{"singleton-claims", 0, {}, false, ""};
    if (!ring.finite()) {
        check.skipped = true;
        check.note = "needs a finite ring";
        return check;
    }
    if (!ring.prime_flagged()) {
        check.skipped = true;
        check.note = "ring is not prime-flagged; the claims genuinely fail on composite moduli";
        return check;
    }
    SingletonClaimReport rep = singleton_claims(ring, cap);
    check.checked = rep.claims_checked;
    check.violations = rep.violations;
    return check;
}

ordered_json report_json(const TheoremReport& r) {
    ordered_json j;
    j["schema"] = "epkit-report/1";
    j["suite"] = r.suite;
    j["corpus"] = r.corpus;
    j["element_count"] = r.element_count;
    j["characterizations"] = ordered_json::array();
    for (const auto& t : r.characterizations)
        j["characterizations"].push_back({{"id", t.id},
                                          {"agree", t.agree},
                                          {"disagree", t.disagree},
                                          {"inapplicable", t.inapplicable},
                                          {"derived", t.derived}});
    j["structural"] = ordered_json::array();
    for (const auto& s : r.structural)
        j["structural"].push_back({{"name", s.name},
                                   {"checked", s.checked},
                                   {"violations", s.violations},
                                   {"skipped", s.skipped},
                                   {"note", s.note}});
    j["counterexamples"] = ordered_json::array();
    for (const auto& c : r.counterexamples)
        j["counterexamples"].push_back({{"element", c.element},
                                        {"characterization", c.characterization},
                                        {"expected", c.expected},
                                        {"got", c.got}});
    j["observations"] = ordered_json::array();
    for (const auto& [name, value] : r.observations)
        j["observations"].push_back({{"name", name}, {"value", value}});
    j["disagreements"] = r.disagreements;
    j["violations"] = r.violations;
    return j;
}

}  // namespace

Corpus build_corpus(const RingSpec& ring, std::uint64_t cap) {
    Corpus corpus;
    corpus.ring = ring;
    auto n = ring.element_count(cap);
    if (!n)
        throw UsageError(ring.name() + " cannot be enumerated exhaustively within the cap");
    Enumeration en(ring, cap);
    corpus.elements.reserve(static_cast<std::size_t>(*n));
    for (std::uint64_t i = 0; i < en.size(); ++i) corpus.elements.push_back(en.at(i));
    corpus.descriptor = "exhaustive:" + ring.name();
    return corpus;
}

Corpus build_random_corpus(const RingSpec& ring, std::uint64_t seed, std::uint64_t count) {
    if (count == 0) throw UsageError("a random corpus needs count >= 1");
    Corpus corpus;
    corpus.ring = ring;
    corpus.random = true;
    corpus.seed = seed;
    corpus.requested = count;
    std::mt19937_64 rng(seed);
    bool matrix = ring.kind == RingKind::MatrixRing && ring.dim >= 2;
    corpus.elements.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t i = 0; i < count; ++i) {
        const Profile& p = kProfiles[matrix ? i % 5 : 0];
        corpus.elements.push_back(p.make(ring, rng));
        corpus.profile_labels.emplace_back(p.label);
    }
    corpus.descriptor = "random:" + ring.name() + ":seed=" + std::to_string(seed) +
                        ":count=" + std::to_string(count);
    return corpus;
}

TheoremReport run_suite(const Corpus& corpus, const SuiteSelection& suite, std::uint64_t cap) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremReport rep;
    rep.suite = suite.all ? "all" : join_ids(suite.ids);
    rep.corpus = corpus.descriptor;
    rep.element_count = corpus.elements.size();

    std::vector<const Characterization*> selected;
    if (suite.all) {
        for (const auto& ch : characterizations()) selected.push_back(&ch);
    } else {
        std::vector<std::string> seen;
        for (const auto& id : suite.ids) {
            const Characterization* ch = find_characterization(id);
            if (!ch) throw UsageError("unknown characterization id: " + id);
            if (std::find(seen.begin(), seen.end(), ch->id) == seen.end())
                seen.push_back(ch->id);
        }
        for (const auto& ch : characterizations())
            if (std::find(seen.begin(), seen.end(), ch.id) != seen.end())
                selected.push_back(&ch);
    }
    rep.characterizations.reserve(selected.size());
    for (const Characterization* ch : selected)
        rep.characterizations.push_back({ch->id, 0, 0, 0, 0});

    StructuralCheck crosscheck{"baseline-crosscheck", 0, {}, false, ""};
    std::vector<std::optional<EpContext>> contexts;
    std::vector<InverseBundle> bundles;
    contexts.reserve(corpus.elements.size());
    bundles.reserve(corpus.elements.size());
    for (const Element& a : corpus.elements) {
        bundles.push_back(inverse_bundle(a, cap));
        try {
            contexts.emplace_back(make_ep_context(a, cap));
            if (contexts.back()->mp) ++crosscheck.checked;
        } catch (const IntegrityFault& fault) {
            crosscheck.violations.push_back(std::string(fault.what()));
            contexts.emplace_back(std::nullopt);
            continue;
        }
        const EpContext& c = *contexts.back();
        for (std::size_t s = 0; s < selected.size(); ++s) {
            CharacterizationTally& tally = rep.characterizations[s];
            CharVerdict v = evaluate_characterization(*selected[s], c);
            if (v.value == Tri::Inapplicable) {
                ++tally.inapplicable;
                continue;
            }
            bool val = v.value == Tri::True;
            if (val != c.ep) {
                ++tally.disagree;
                rep.counterexamples.push_back({at_element(a), selected[s]->id,
                                               c.ep ? "true" : "false",
                                               val ? "true" : "false"});
            } else if (v.provenance == Provenance::Derived) {
                ++tally.derived;
            } else {
                ++tally.agree;
            }
        }
    }

    if (suite.all) {
        rep.structural.push_back(involution_laws(corpus));
        rep.structural.push_back(annihilator_duality(corpus.ring, cap));
        rep.structural.push_back(inverse_certificates(corpus, bundles));
        rep.structural.push_back(core_identities(corpus, contexts, cap));
        rep.structural.push_back(decomposition_check(corpus, contexts, DecompKind::Group, cap));
        rep.structural.push_back(decomposition_check(corpus, contexts, DecompKind::Ep, cap));
        rep.structural.push_back(decomposition_check(corpus, contexts, DecompKind::Core, cap));
        rep.structural.push_back(unit_construction_check(corpus, contexts, cap));
        rep.structural.push_back(uniqueness_search(corpus.ring, cap));
        rep.structural.push_back(star_symmetry(corpus, contexts, cap));
        rep.structural.push_back(solution_sets_check(corpus, contexts, cap));
        rep.structural.push_back(singleton_claims_check(corpus.ring, cap));
    }
    rep.structural.push_back(crosscheck);

    std::uint64_t with_one = 0, with_mp = 0, with_group = 0, with_core = 0, with_dual = 0;
    std::uint64_t ep_count = 0, unit_count = 0, commute_holders = 0;
    bool commute_matches = true;
    for (std::size_t i = 0; i < corpus.elements.size(); ++i) {
        const InverseBundle& b = bundles[i];
        if (b.one.value) ++with_one;
        if (b.mp.value) ++with_mp;
        if (b.group.value) ++with_group;
        if (b.core.value) ++with_core;
        if (b.dual_core.value) ++with_dual;
        if (classify(corpus.elements[i]).unit) ++unit_count;
        if (!contexts[i]) continue;
        const EpContext& c = *contexts[i];
        if (c.ep) ++ep_count;
        if (c.mp) {
            bool holds = is_zero(commutator(*c.mp * c.a, *c.mp));
            if (holds) ++commute_holders;
            if (holds != c.ep) commute_matches = false;
        }
    }
    auto obs = [&](const char* name, std::uint64_t n) {
        rep.observations.emplace_back(name, std::to_string(n));
    };
    obs("elements-with-one-inverse", with_one);
    obs("elements-with-moore-penrose", with_mp);
    obs("elements-with-group", with_group);
    obs("elements-with-core", with_core);
    obs("elements-with-dual-core", with_dual);
    obs("ep-elements", ep_count);
    obs("units", unit_count);
    obs("mp-star-commutation-holders", commute_holders);
    rep.observations.emplace_back("mp-star-commutation-equals-ep",
                                  commute_matches ? "true" : "false");
    if (corpus.random) {
        for (const Profile& p : kProfiles) {
            std::uint64_t n = static_cast<std::uint64_t>(
                std::count(corpus.profile_labels.begin(), corpus.profile_labels.end(),
                           std::string(p.label)));
            if (n) rep.observations.emplace_back(std::string("profile-") + p.label,
                                                 std::to_string(n));
        }
    }

    std::sort(rep.counterexamples.begin(), rep.counterexamples.end(),
              [](const Counterexample& x, const Counterexample& y) {
                  return std::tie(x.element, x.characterization) <
                         std::tie(y.element, y.characterization);
              });
    for (const auto& t : rep.characterizations) rep.disagreements += t.disagree;
    for (const auto& s : rep.structural) rep.violations += s.violations.size();
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string emit_report(const TheoremReport& r, bool json) {
    if (json) return report_json(r).dump(2) + "\n";
    std::ostringstream out;
    out << "theorem verification report\n";
    out << "suite: " << r.suite << "\n";
    out << "corpus: " << r.corpus << "\n";
    out << "elements: " << r.element_count << "\n";
    out << "disagreements: " << r.disagreements << "\n";
    out << "violations: " << r.violations << "\n";
    out << "\ncharacterizations (agree/disagree/inapplicable/derived)\n";
    std::size_t width = 0;
    for (const auto& t : r.characterizations) width = std::max(width, t.id.size());
    for (const auto& t : r.characterizations) {
        out << "  " << t.id << std::string(width - t.id.size() + 2, ' ') << t.agree << "/"
            << t.disagree << "/" << t.inapplicable << "/" << t.derived << "\n";
    }
    out << "\nstructural checks\n";
    for (const auto& s : r.structural) {
        if (s.skipped) {
            out << "  " << s.name << ": skipped (" << s.note << ")\n";
            continue;
        }
        out << "  " << s.name << ": checked " << s.checked << ", violations "
            << s.violations.size() << "\n";
        for (const auto& v : s.violations) out << "    - " << v << "\n";
    }
    out << "\ncounterexamples\n";
    if (r.counterexamples.empty()) {
        out << "  none\n";
    } else {
        for (const auto& c : r.counterexamples)
            out << "  - element " << c.element << ", characterization " << c.characterization
                << ", expected " << c.expected << ", got " << c.got << "\n";
    }
    out << "\nobservations\n";
    for (const auto& [name, value] : r.observations)
        out << "  " << name << ": " << value << "\n";
    return out.str();
}

TheoremReport report_from_json(const std::string& bytes) {
    ordered_json j;
    try {
        j = ordered_json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("report does not parse as json: ") + e.what());
    }
    if (j.value("schema", "") != "epkit-report/1")
        throw UsageError("unknown report schema: " + j.value("schema", "(missing)"));
    TheoremReport r;
    r.suite = j.at("suite").get<std::string>();
    r.corpus = j.at("corpus").get<std::string>();
    r.element_count = j.at("element_count").get<std::uint64_t>();
    for (const auto& t : j.at("characterizations"))
        r.characterizations.push_back({t.at("id").get<std::string>(),
                                       t.at("agree").get<std::uint64_t>(),
                                       t.at("disagree").get<std::uint64_t>(),
                                       t.at("inapplicable").get<std::uint64_t>(),
                                       t.at("derived").get<std::uint64_t>()});
    for (const auto& s : j.at("structural")) {
        StructuralCheck check{s.at("name").get<std::string>(),
                              s.at("checked").get<std::uint64_t>(),
                              {},
                              s.at("skipped").get<bool>(),
                              s.at("note").get<std::string>()};
        for (const auto& v : s.at("violations")) check.violations.push_back(v.get<std::string>());
        r.structural.push_back(std::move(check));
    }
    for (const auto& c : j.at("counterexamples"))
        r.counterexamples.push_back(
            {c.at("element").get<std::string>(), c.at("characterization").get<std::string>(),
             c.at("expected").get<std::string>(), c.at("got").get<std::string>()});
    for (const auto& o : j.at("observations"))
        r.observations.emplace_back(o.at("name").get<std::string>(),
                                    o.at("value").get<std::string>());
    r.disagreements = j.at("disagreements").get<std::uint64_t>();
    r.violations = j.at("violations").get<std::uint64_t>();
    return r;
}

}  // namespace epkit
