#pragma once

#include "solgap/group.hpp"

namespace solgap {

/// A nonzero subspace of Q^d held by its canonical representative: the
/// reduced row echelon basis, rows = basis vectors.
class SubspaceQ {
public:
    /// Rows of `span` spanning the space; reduced to the canonical basis.
    static SubspaceQ from_spanning_rows(const MatQ& span);
    static SubspaceQ full(Eigen::Index d);

    Eigen::Index ambient_dimension() const { return basis_.cols(); }
    Eigen::Index dim() const { return basis_.rows(); }
    /// Canonical basis, one vector per row.
    const MatQ& basis_rows() const { return basis_; }

    bool contains(const VecQ& v) const;
    /// Coordinates of v in the canonical basis; throws when v is outside.
    VecQ coordinates(const VecQ& v) const;

    friend bool operator==(const SubspaceQ& a, const SubspaceQ& b) { return a.basis_ == b.basis_; }

    /// Deterministic ordering: by dimension, then pivot columns, then
    /// entries, all exact.
    static bool lex_less(const SubspaceQ& a, const SubspaceQ& b);

private:
    SubspaceQ() = default;
    MatQ basis_;                        // RREF, dim x ambient
    std::vector<Eigen::Index> pivots_;
};

/// True iff g maps the subspace into itself (exact membership checks).
bool is_invariant(const SubspaceQ& w, const MatQ& g);
bool is_invariant_under_all(const SubspaceQ& w, const std::vector<MatQ>& gens);

/// Smallest subspace containing `seed` and stable under every generator.
SubspaceQ spin(const VecQ& seed, const std::vector<MatQ>& gens);

/// Generators expressed in the basis of the invariant subspace W; weights
/// carried over. Throws "subspace not invariant" when W is not invariant.
GroupSpec restrict_action(const GroupSpec& spec, const SubspaceQ& w);

}  // namespace solgap
