#pragma once

// Characterization registry: every equation-level condition the library can
// test for equivalence with the baseline, in a fixed order, each carrying a
// stable content-describing id, the gate that decides applicability, and an
// evaluator producing a tri-state verdict with provenance. The verifier
// walks this table; the CLI looks conditions up by id.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "epkit/ep.hpp"

namespace epkit {

// Gates name the inverse whose existence the condition presupposes. Ungated
// conditions are self-contained existential statements.
enum class Gate { None, Group, Mp, Core, MpGroup };

std::string gate_name(Gate g);

bool gate_admits(Gate g, const EpContext& c);

struct Characterization {
    std::string id;         // stable kebab-case name
    std::string condition;  // the tested statement, human-readable
    Gate gate;
    std::function<CharVerdict(const EpContext&)> evaluate;
};

// The full table, fixed order, built once.
const std::vector<Characterization>& characterizations();

// Lookup by id; null when absent.
const Characterization* find_characterization(std::string_view id);

// Applies the gate, then the evaluator. Elements outside the gate come back
// inapplicable without touching the evaluator.
CharVerdict evaluate_characterization(const Characterization& ch, const EpContext& c);

struct RegistryStats {
    std::size_t total = 0;
    std::size_t ungated = 0;
    std::size_t group_gated = 0;
    std::size_t mp_gated = 0;
    std::size_t core_gated = 0;
    std::size_t mp_group_gated = 0;
};

RegistryStats registry_stats();

}  // namespace epkit
