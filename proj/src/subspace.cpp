#include "solgap/subspace.hpp"

namespace solgap {

SubspaceQ SubspaceQ::from_spanning_rows(const MatQ& span) {
    Echelon e = rref(span);
    const auto dim = static_cast<Eigen::Index>(e.pivots.size());
    if (dim == 0) throw std::invalid_argument("zero subspace");
    SubspaceQ w;
    w.basis_ = e.mat.block(0, 0, dim, span.cols());
    w.pivots_ = std::move(e.pivots);
    return w;
}

SubspaceQ SubspaceQ::full(Eigen::Index d) { return from_spanning_rows(identity_q(d)); }

bool SubspaceQ::contains(const VecQ& v) const {
    // reduce v against the echelon basis
    VecQ r = v;
    for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
        const Eigen::Index p = pivots_[static_cast<std::size_t>(i)];
        if (r(p).is_zero()) continue;
        Rat f = r(p);
        for (Eigen::Index c = 0; c < basis_.cols(); ++c) r(c) -= f * basis_(i, c);
    }
    for (Eigen::Index c = 0; c < r.size(); ++c)
        if (!r(c).is_zero()) return false;
    return true;
}

VecQ SubspaceQ::coordinates(const VecQ& v) const {
    VecQ coords(basis_.rows());
    VecQ r = v;
    for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
        const Eigen::Index p = pivots_[static_cast<std::size_t>(i)];
        coords(i) = r(p);
        if (r(p).is_zero()) continue;
        Rat f = r(p);
        for (Eigen::Index c = 0; c < basis_.cols(); ++c) r(c) -= f * basis_(i, c);
    }
    for (Eigen::Index c = 0; c < r.size(); ++c)
        if (!r(c).is_zero()) throw std::invalid_argument("vector outside subspace");
    return coords;
}

bool SubspaceQ::lex_less(const SubspaceQ& a, const SubspaceQ& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.pivots_ != b.pivots_) return a.pivots_ < b.pivots_;
    for (Eigen::Index i = 0; i < a.basis_.rows(); ++i)
        for (Eigen::Index j = 0; j < a.basis_.cols(); ++j)
            if (!(a.basis_(i, j) == b.basis_(i, j))) return a.basis_(i, j) < b.basis_(i, j);
    return false;
}

bool is_invariant(const SubspaceQ& w, const MatQ& g) {
    for (Eigen::Index i = 0; i < w.dim(); ++i) {
        VecQ img = VecQ(g * w.basis_rows().row(i).transpose());
        if (!w.contains(img)) return false;
    }
    return true;
}

bool is_invariant_under_all(const SubspaceQ& w, const std::vector<MatQ>& gens) {
    for (const MatQ& g : gens)
        if (!is_invariant(w, g)) return false;
    return true;
}

SubspaceQ spin(const VecQ& seed, const std::vector<MatQ>& gens) {
    const Eigen::Index d = seed.size();
    MatQ rows = zero_q(0, d);  // kept in echelon-reduced form

    auto try_add = [&](const VecQ& v) -> bool {
        MatQ grown(rows.rows() + 1, d);
        grown.block(0, 0, rows.rows(), d) = rows;
        grown.row(rows.rows()) = v.transpose();
        Echelon e = rref(grown);
        if (static_cast<Eigen::Index>(e.pivots.size()) == rows.rows()) return false;
        rows = e.mat.block(0, 0, static_cast<Eigen::Index>(e.pivots.size()), d);
        return true;
    };

    if (!try_add(seed)) throw std::invalid_argument("spin of zero vector");
    std::vector<VecQ> queue{seed};
    while (!queue.empty()) {
        VecQ v = queue.back();
        queue.pop_back();
        for (const MatQ& g : gens) {
            VecQ img = VecQ(g * v);
            if (try_add(img)) queue.push_back(img);
        }
    }
    return SubspaceQ::from_spanning_rows(rows);
}

GroupSpec restrict_action(const GroupSpec& spec, const SubspaceQ& w) {
    if (w.ambient_dimension() != spec.dimension)
        throw std::invalid_argument("subspace ambient dimension mismatch");
    GroupSpec restricted;
    restricted.prime_set = spec.prime_set;
    restricted.dimension = w.dim();
    restricted.weights = spec.weights;
    for (const MatQ& g : spec.generators) {
        MatQ r(w.dim(), w.dim());
        for (Eigen::Index i = 0; i < w.dim(); ++i) {
            VecQ img = VecQ(g * w.basis_rows().row(i).transpose());
            VecQ coords;
            try {
                coords = w.coordinates(img);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("subspace not invariant");
            }
            // basis vector i maps to sum_j coords(j) * basis vector j:
            // in column-vector convention that is column i of the matrix
            r.col(i) = coords;
        }
        restricted.generators.push_back(std::move(r));
    }
    return restricted;
}

}  // namespace solgap
