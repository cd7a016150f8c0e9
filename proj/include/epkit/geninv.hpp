#pragma once

// Generalized inverses: {1}-inverses, Moore-Penrose, group, core, and dual
// core, each certified against its defining equation set.
//
// Engine policy. Over matrix rings with field entries, closed forms drive
// the computation (rank factorization a = FG; a-dagger from Gram-matrix
// inverses, group inverse from (GF)^-2, core from the certified candidate
// a^# a a-dagger). Every closed-form value is certified before acceptance.
// Over finite rings exhaustive search is the authority: it confirms every
// absence claim and raises IntegrityFault if a by-theory-unique inverse
// ever has two distinct solutions. Dual core values come from the star
// duality (dual core of a) = (core of a*)* and are re-certified.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epkit/ring.hpp"

namespace epkit {

enum class InverseKind { One, MoorePenrose, Group, Core, DualCore };

std::string inverse_kind_name(InverseKind kind);

struct Certificate {
    std::string equation;
    bool holds;
};

// Evaluates the defining equations of the kind for the pair (a, x).
std::vector<Certificate> verify_inverse(const Element& a, const Element& x, InverseKind kind);

bool all_hold(const std::vector<Certificate>& certs);

// Each computed inverse with its certificates; absent inverses carry the
// reason (failing rank condition, exhausted search, missing prerequisite).
struct InverseInfo {
    std::optional<Element> value;
    std::vector<Certificate> certificates;
    std::string absence;
};

std::optional<Element> one_inverse(const Element& a, std::uint64_t cap = kDefaultEnumCap);
std::optional<Element> moore_penrose(const Element& a, std::uint64_t cap = kDefaultEnumCap);
std::optional<Element> group_inverse(const Element& a, std::uint64_t cap = kDefaultEnumCap);
std::optional<Element> core_inverse(const Element& a, std::uint64_t cap = kDefaultEnumCap);
std::optional<Element> dual_core_inverse(const Element& a, std::uint64_t cap = kDefaultEnumCap);

struct InverseBundle {
    Element element;
    InverseInfo one, mp, group, core, dual_core;
};

InverseBundle inverse_bundle(const Element& a, std::uint64_t cap = kDefaultEnumCap);

// Idempotent / projection decompositions attached to the group, EP, and
// core situations. p is the complementary (co-)projection and
// inverse_witness the constructed unit inverse.
enum class DecompKind { Group, Ep, Core };

struct Decomposition {
    DecompKind kind;
    Element p;
    Element inverse_witness;
};

// Throws UsageError when the required inverse (group / MP+EP / core) is
// missing, IntegrityFault if a certified identity fails to re-derive.
Decomposition decomposition(const Element& a, DecompKind kind,
                            std::uint64_t cap = kDefaultEnumCap);

}  // namespace epkit
