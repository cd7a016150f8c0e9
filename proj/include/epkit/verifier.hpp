#pragma once

// Corpus construction and suite execution: runs every registered
// characterization plus the structural identity battery over a corpus of
// ring elements and reports agreement with the baseline verdict.
//
// Corpora are either exhaustive (every element of a finite ring, canonical
// order) or random (structured matrix profiles drawn reproducibly from a
// 64-bit seed). Reports serialize deterministically: identical corpus and
// suite produce byte-identical output, wall time is reported out of band.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epkit/ep.hpp"
#include "epkit/registry.hpp"

namespace epkit {

struct Corpus {
    RingSpec ring;
    bool random = false;
    std::uint64_t seed = 0;
    std::uint64_t requested = 0;  // random case: count asked for
    std::vector<Element> elements;
    std::vector<std::string> profile_labels;  // random corpora: generator profile per element
    std::string descriptor;                   // canonical label, part of the report
};

// Exhaustive corpus over a finite ring in canonical enumeration order.
// Throws UsageError when the ring is infinite or larger than cap.
Corpus build_corpus(const RingSpec& ring, std::uint64_t cap = kDefaultEnumCap);

// Reproducible random corpus. Matrix rings cycle five profiles (dense,
// rank-deficient product, strictly upper triangular, Hermitian sum,
// conjugated idempotent); scalar rings draw plain residues. All entry
// draws map the raw 64-bit stream through explicit modulus arithmetic so
// the stream is identical on every platform.
Corpus build_random_corpus(const RingSpec& ring, std::uint64_t seed, std::uint64_t count);

struct SuiteSelection {
    bool all = true;
    std::vector<std::string> ids;  // consulted only when all == false

    static SuiteSelection everything() { return {}; }
    static SuiteSelection only(std::vector<std::string> ids) {
        return {false, std::move(ids)};
    }
};

struct CharacterizationTally {
    std::string id;
    std::uint64_t agree = 0;
    std::uint64_t disagree = 0;
    std::uint64_t inapplicable = 0;
    std::uint64_t derived = 0;  // verdicts resting on the theorem, not on search
};

struct Counterexample {
    std::string element;
    std::string characterization;
    std::string expected;
    std::string got;
};

struct StructuralCheck {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<std::string> violations;
    bool skipped = false;
    std::string note;
};

struct TheoremReport {
    std::string suite;
    std::string corpus;
    std::uint64_t element_count = 0;
    std::vector<CharacterizationTally> characterizations;
    std::vector<StructuralCheck> structural;
    std::vector<Counterexample> counterexamples;  // sorted (element, id)
    std::vector<std::pair<std::string, std::string>> observations;
    std::uint64_t disagreements = 0;  // sum of per-characterization disagree
    std::uint64_t violations = 0;     // sum of structural violation counts
    double wall_seconds = 0.0;        // excluded from serialized bytes
};

// Walks the corpus: per element the inverse bundle, the baseline verdict,
// and every selected characterization; with the full selection also the
// structural battery (involution laws, annihilator duality, core
// identities, decompositions, unit construction, uniqueness search, star
// symmetry, solution sets, singleton claims). Disagreements are recorded,
// never thrown.
TheoremReport run_suite(const Corpus& corpus, const SuiteSelection& suite = {},
                        std::uint64_t cap = kDefaultEnumCap);

// Deterministic serialization; json=false renders the text form. Both
// forms cover the same fields, wall_seconds stays out of either.
std::string emit_report(const TheoremReport& report, bool json);

// Inverse of the json form of emit_report (wall_seconds comes back zero).
TheoremReport report_from_json(const std::string& bytes);

}  // namespace epkit
