#include "epkit/subsets.hpp"

#include <type_traits>

namespace epkit {

namespace {

template <typename S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.cols()) throw std::logic_error("vstack width mismatch");
    Matrix<S> out = Matrix<S>::zero(a.rows() + b.rows(), a.cols(),
                                    a.has_model() ? a.model() : b.model());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

// Canonical row-basis of the subspace that cuts out the set.
template <typename S>
Matrix<S> defining_basis(SubsetKind kind, const Matrix<S>& m) {
    switch (kind) {
        case SubsetKind::RightIdeal: return col_basis(m);        // column space
        case SubsetKind::RightAnnihilator: return null_basis(m); // {v : m v = 0}
        case SubsetKind::LeftIdeal: return row_basis(m);         // row space
        case SubsetKind::LeftAnnihilator: return left_null_basis(m);
    }
    throw std::logic_error("unreachable");
}

// Span inclusion for rref-canonical bases: rows of s lie in span(t) iff
// re-reducing the stack does not grow the basis.
template <typename S>
bool span_included(const Matrix<S>& s, const Matrix<S>& t) {
    return row_basis(vstack(t, s)) == t;
}

// The subspace of the member x that the handle constrains.
template <typename S>
Matrix<S> member_span(SubsetKind kind, const Matrix<S>& x) {
    return right_type(kind) ? col_basis(x) : row_basis(x);
}

void check_comparable(const SubsetHandle& s, const SubsetHandle& t) {
    if (!(s.generator.ring == t.generator.ring))
        throw UsageError("subset handles from different rings");
    if (right_type(s.kind) != right_type(t.kind))
        throw UsageError("incompatible subset kinds (left-type vs right-type)");
    if (s.by_list != t.by_list)
        throw UsageError("subset handles with mixed realizations");
}

}  // namespace

SubsetHandle subset_handle_list(SubsetKind kind, const Element& a, std::uint64_t cap) {
    SubsetHandle h;
    h.kind = kind;
    h.generator = a;
    h.by_list = true;
    Enumeration e(a.ring, cap);
    h.members.assign(e.size(), false);
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        Element x = e.at(i);
        switch (kind) {
            case SubsetKind::RightIdeal: h.members[e.index_of(a * x)] = true; break;
            case SubsetKind::LeftIdeal: h.members[e.index_of(x * a)] = true; break;
            case SubsetKind::RightAnnihilator:
                if (is_zero(a * x)) h.members[i] = true;
                break;
            case SubsetKind::LeftAnnihilator:
                if (is_zero(x * a)) h.members[i] = true;
                break;
        }
    }
    return h;
}

SubsetHandle subset_handle(SubsetKind kind, const Element& a, std::uint64_t cap) {
    if (!a.ring.field_entries()) return subset_handle_list(kind, a, cap);
    SubsetHandle h;
    h.kind = kind;
    h.generator = a;
    h.basis = std::visit(
        [&](const auto& m) -> Payload { return defining_basis(kind, m); }, a.payload);
    return h;
}

bool subset_included(const SubsetHandle& s, const SubsetHandle& t) {
    check_comparable(s, t);
    if (s.by_list) {
        for (std::size_t i = 0; i < s.members.size(); ++i)
            if (s.members[i] && !t.members[i]) return false;
        return true;
    }
    return std::visit(
        [](const auto& bs, const auto& bt) -> bool {
            if constexpr (std::is_same_v<std::decay_t<decltype(bs)>,
                                         std::decay_t<decltype(bt)>>)
                return span_included(bs, bt);
            else
                throw std::logic_error("mixed payload kinds");
        },
        s.basis, t.basis);
}

bool subset_equal(const SubsetHandle& s, const SubsetHandle& t) {
    check_comparable(s, t);
    if (s.by_list) return s.members == t.members;
    // canonical bases: equality is matrix equality
    return s.basis == t.basis;
}

bool subset_member(const SubsetHandle& s, const Element& x) {
    if (!(s.generator.ring == x.ring))
        throw UsageError("element from a different ring");
    if (s.by_list) {
        Enumeration e(x.ring);
        return s.members[e.index_of(x)];
    }
    return std::visit(
        [&](const auto& bs, const auto& mx) -> bool {
            if constexpr (std::is_same_v<std::decay_t<decltype(bs)>,
                                         std::decay_t<decltype(mx)>>)
                return span_included(member_span(s.kind, mx), bs);
            else
                throw std::logic_error("mixed payload kinds");
        },
        s.basis, x.payload);
}

}  // namespace epkit
