#pragma once

// Principal ideals aR / Ra and annihilators a° / °a as comparable handles.
//
// Two realizations. Over matrix rings with field entries, each of these
// sets is cut out by a subspace constraint (on columns for aR and a°, on
// rows for Ra and °a), so the handle stores a canonical rref row-basis of
// that subspace and set inclusion is subspace inclusion. Over the
// remaining (necessarily finite) rings the handle stores an explicit
// membership bitset over the canonical enumeration.

#include <cstdint>
#include <vector>

#include "epkit/ring.hpp"

namespace epkit {

enum class SubsetKind { RightIdeal, RightAnnihilator, LeftIdeal, LeftAnnihilator };

// aR and a° constrain columns; Ra and °a constrain rows. Only handles of
// the same chirality are comparable as subsets of R.
inline bool right_type(SubsetKind k) {
    return k == SubsetKind::RightIdeal || k == SubsetKind::RightAnnihilator;
}

struct SubsetHandle {
    SubsetKind kind;
    Element generator;
    bool by_list = false;
    Payload basis;              // field realization: subspace basis, one vector per row
    std::vector<bool> members;  // list realization: bit per enumeration index
};

// Default policy: subspace basis when the ring has field entries,
// otherwise explicit enumeration (throws UsageError past the cap).
SubsetHandle subset_handle(SubsetKind kind, const Element& a,
                           std::uint64_t cap = kDefaultEnumCap);

// Forced list realization on any finite ring; used to cross-check the
// subspace realization.
SubsetHandle subset_handle_list(SubsetKind kind, const Element& a,
                                std::uint64_t cap = kDefaultEnumCap);

// Set inclusion / equality. Requires same ring, same chirality, same
// realization; violations throw UsageError.
bool subset_included(const SubsetHandle& s, const SubsetHandle& t);
bool subset_equal(const SubsetHandle& s, const SubsetHandle& t);

// Membership of one element.
bool subset_member(const SubsetHandle& s, const Element& x);

}  // namespace epkit
