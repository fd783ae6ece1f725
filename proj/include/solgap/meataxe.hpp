#pragma once

#include "solgap/subspace.hpp"

namespace solgap {

/// Q-basis of the linear span of the group inside d x d matrices, from
/// closing {I, generators} under multiplication by generators. Inverses
/// come along for free (Cayley-Hamilton).
std::vector<MatQ> enveloping_algebra_basis(const GroupSpec& spec);

/// Jacobson radical of the span of `algebra_basis` inside End(Q^d). In
/// characteristic zero this is the radical of the trace form.
std::vector<MatQ> algebra_radical(const std::vector<MatQ>& algebra_basis);

/// Largest semisimple submodule: the annihilator of the radical.
SubspaceQ socle(const GroupSpec& spec);

struct MinimalSubspace {
    SubspaceQ space;
    /// dim End = 1 was verified, so the piece is a simple module. Pieces
    /// without this flag may secretly be isotypic sums; the gap verdict
    /// treats them conservatively.
    bool simple_certified = false;
};

struct MinimalSubspaceReport {
    std::vector<MinimalSubspace> subspaces;  // canonical lex order
    /// True when every piece is certified simple and pairwise
    /// non-isomorphic: the list is then literally every minimal
    /// invariant subspace. Otherwise it is a set of representatives.
    bool literally_complete = false;
};

/// Minimal nonzero invariant subspaces of Q^d under the generators of
/// `spec` (which the gap criterion feeds already transposed), by socle
/// computation and endomorphism splitting. Throws "dimension unsupported"
/// above the bound.
MinimalSubspaceReport minimal_invariant_subspaces(const GroupSpec& spec,
                                                  Eigen::Index dim_bound = 8,
                                                  std::uint64_t rng_seed = 0);

/// Solution space of the intertwining equations: all phi with
/// phi * g|_M = g|_N * phi for every generator, as dim(N) x dim(M)
/// matrices in the subspace coordinates.
std::vector<MatQ> module_homs(const GroupSpec& spec, const SubspaceQ& m, const SubspaceQ& n);

}  // namespace solgap
