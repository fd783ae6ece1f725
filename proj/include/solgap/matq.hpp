#pragma once

#include "solgap/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<solgap::Rat> : GenericNumTraits<solgap::Rat> {
    using Real = solgap::Rat;
    using NonInteger = solgap::Rat;
    using Nested = solgap::Rat;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60
    };
    static solgap::Rat epsilon() { return solgap::Rat(0); }
    static solgap::Rat dummy_precision() { return solgap::Rat(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace solgap {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

MatQ identity_q(Eigen::Index d);
MatQ zero_q(Eigen::Index rows, Eigen::Index cols);

/// Builds a d x d matrix from rows of rational literals.
MatQ mat_from_strings(const std::vector<std::vector<std::string>>& rows);

bool is_zero(const MatQ& m);

/// Canonical dedup key: entries are already in lowest terms, so the
/// serialized entry list is collision-free under exact equality.
std::string mat_key(const MatQ& m);
std::string vec_key(const VecQ& v);

Rat det_exact(const MatQ& m);

/// Exact inverse by Gauss-Jordan elimination over Q; throws on a
/// singular input.
MatQ inverse_exact(const MatQ& m);

/// Reduced row echelon form (leading entries 1, cleared columns).
/// Returns the echelon matrix together with the pivot columns.
struct Echelon {
    MatQ mat;
    std::vector<Eigen::Index> pivots;
};
Echelon rref(MatQ m);

Eigen::Index rank_exact(const MatQ& m);

/// Basis of the right kernel {x : m x = 0}, as matrix columns.
MatQ kernel_basis(const MatQ& m);

/// Solves a x = b exactly; returns false when inconsistent.
bool solve_exact(const MatQ& a, const VecQ& b, VecQ& x);

/// True iff every entry of m lies in Z[1/S] and det(m) is a unit of
/// Z[1/S] (i.e. +- a product of powers of primes of S).
bool in_GLd_ZS(const MatQ& m, const PrimeSet& s);

bool is_s_unit(const Rat& r, const PrimeSet& s);

/// Exact test of m^t J m = J for the standard symplectic form; throws
/// "not even-dimensional" on odd d.
bool is_symplectic(const MatQ& m);

MatQ symplectic_form(Eigen::Index two_n);

}  // namespace solgap
