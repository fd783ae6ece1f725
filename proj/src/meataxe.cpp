#include "solgap/meataxe.hpp"

#include "solgap/polyq.hpp"

#include <algorithm>
#include <random>

namespace solgap {

namespace {

VecQ vectorize(const MatQ& m) {
    VecQ v(m.rows() * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
    return v;
}

// Incremental span tracker over vectorized matrices.
class SpanTracker {
public:
    explicit SpanTracker(Eigen::Index len) : rows_(zero_q(0, len)) {}

    bool add(const VecQ& v) {
        MatQ grown(rows_.rows() + 1, rows_.cols());
        grown.block(0, 0, rows_.rows(), rows_.cols()) = rows_;
        grown.row(rows_.rows()) = v.transpose();
        Echelon e = rref(std::move(grown));
        if (static_cast<Eigen::Index>(e.pivots.size()) == rows_.rows()) return false;
        rows_ = e.mat.block(0, 0, static_cast<Eigen::Index>(e.pivots.size()), rows_.cols());
        return true;
    }

    Eigen::Index dim() const { return rows_.rows(); }

private:
    MatQ rows_;
};

MatQ kronecker(const MatQ& a, const MatQ& b) {
    MatQ k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index p = 0; p < b.rows(); ++p)
                for (Eigen::Index q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
}

Rat trace_of(const MatQ& m) {
    Rat t(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

SubspaceQ ambient_subspace(const SubspaceQ& parent, const MatQ& coord_columns) {
    // columns of coord_columns are vectors in parent coordinates
    MatQ rows(coord_columns.cols(), parent.ambient_dimension());
    for (Eigen::Index c = 0; c < coord_columns.cols(); ++c) {
        VecQ ambient = VecQ(parent.basis_rows().transpose() * coord_columns.col(c));
        rows.row(c) = ambient.transpose();
    }
    return SubspaceQ::from_spanning_rows(rows);
}

}  // namespace

std::vector<MatQ> enveloping_algebra_basis(const GroupSpec& spec) {
    const Eigen::Index d = spec.dimension;
    SpanTracker span(d * d);
    std::vector<MatQ> basis;
    std::vector<MatQ> queue;

    MatQ id = identity_q(d);
    span.add(vectorize(id));
    basis.push_back(id);
    queue.push_back(id);

    while (!queue.empty()) {
        MatQ m = std::move(queue.back());
        queue.pop_back();
        for (const MatQ& g : spec.generators) {
            MatQ p = MatQ(m * g);
            if (span.add(vectorize(p))) {
                basis.push_back(p);
                queue.push_back(std::move(p));
            }
        }
    }
    return basis;
}

std::vector<MatQ> algebra_radical(const std::vector<MatQ>& algebra_basis) {
    const auto n = static_cast<Eigen::Index>(algebra_basis.size());
    MatQ gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            gram(i, j) = trace_of(MatQ(algebra_basis[static_cast<std::size_t>(i)] *
                                       algebra_basis[static_cast<std::size_t>(j)]));
    MatQ ker = kernel_basis(gram);
    std::vector<MatQ> rad;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        MatQ r = zero_q(algebra_basis.front().rows(), algebra_basis.front().cols());
        for (Eigen::Index i = 0; i < n; ++i)
            if (!ker(i, c).is_zero()) r += MatQ(algebra_basis[static_cast<std::size_t>(i)] * ker(i, c));
        rad.push_back(std::move(r));
    }
    return rad;
}

SubspaceQ socle(const GroupSpec& spec) {
    std::vector<MatQ> rad = algebra_radical(enveloping_algebra_basis(spec));
    const Eigen::Index d = spec.dimension;
    if (rad.empty()) return SubspaceQ::full(d);
    MatQ stacked(static_cast<Eigen::Index>(rad.size()) * d, d);
    for (std::size_t i = 0; i < rad.size(); ++i)
        stacked.block(static_cast<Eigen::Index>(i) * d, 0, d, d) = rad[i];
    MatQ ker = kernel_basis(stacked);
    if (ker.cols() == 0)
        throw std::logic_error("socle is zero; radical annihilator computation is inconsistent");
    return SubspaceQ::from_spanning_rows(MatQ(ker.transpose()));
}

std::vector<MatQ> module_homs(const GroupSpec& spec, const SubspaceQ& m, const SubspaceQ& n) {
    GroupSpec rm = restrict_action(spec, m);
    GroupSpec rn = restrict_action(spec, n);
    const Eigen::Index dm = m.dim(), dn = n.dim();
    // phi * g_M = g_N * phi, vectorized as (g_M^t (x) I - I (x) g_N) vec(phi) = 0
    MatQ stacked(static_cast<Eigen::Index>(spec.generators.size()) * dm * dn, dm * dn);
    MatQ id_m = identity_q(dm), id_n = identity_q(dn);
    for (std::size_t gi = 0; gi < spec.generators.size(); ++gi) {
        MatQ block = MatQ(kronecker(MatQ(rm.generators[gi].transpose()), id_n) -
                          kronecker(id_m, rn.generators[gi]));
        stacked.block(static_cast<Eigen::Index>(gi) * dm * dn, 0, dm * dn, dm * dn) = block;
    }
    MatQ ker = kernel_basis(stacked);
    std::vector<MatQ> homs;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        MatQ phi(dn, dm);
        // vec by columns of phi: vec index = col * dn + row
        for (Eigen::Index col = 0; col < dm; ++col)
            for (Eigen::Index row = 0; row < dn; ++row) phi(row, col) = ker(col * dn + row, c);
        homs.push_back(std::move(phi));
    }
    return homs;
}

namespace {

struct Splitter {
    const GroupSpec& spec;
    std::mt19937_64 rng;
    std::vector<MinimalSubspace> out;

    void decompose(const SubspaceQ& m) {
        std::vector<MatQ> endos = module_homs(spec, m, m);
        if (endos.size() == 1) {
            out.push_back({m, true});
            return;
        }
        GroupSpec rm = restrict_action(spec, m);
        std::vector<MatQ> candidates;
        for (const MatQ& e : endos) candidates.push_back(e);
        for (std::size_t i = 0; i + 1 < endos.size() && i < 6; ++i)
            for (std::size_t j = i + 1; j < endos.size() && j < 6; ++j) {
                candidates.push_back(MatQ(endos[i] + endos[j]));
                candidates.push_back(MatQ(endos[i] - endos[j]));
            }
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int r = 0; r < 40; ++r) {
            MatQ combo = zero_q(m.dim(), m.dim());
            for (const MatQ& e : endos) combo += MatQ(e * Rat(coeff(rng)));
            candidates.push_back(std::move(combo));
        }

        for (const MatQ& phi : candidates) {
            if (is_zero(phi)) continue;
            PolyQ mp = min_poly(phi);
            if (mp.degree() < 2) continue;
            auto split = coprime_split(mp);
            if (!split) continue;
            MatQ k1 = kernel_basis(split->first.eval(phi));
            MatQ k2 = kernel_basis(split->second.eval(phi));
            if (k1.cols() == 0 || k2.cols() == 0) continue;
            if (k1.cols() + k2.cols() != m.dim()) continue;
            decompose(ambient_subspace(m, k1));
            decompose(ambient_subspace(m, k2));
            return;
        }
        out.push_back({m, false});
    }
};

}  // namespace

MinimalSubspaceReport minimal_invariant_subspaces(const GroupSpec& spec, Eigen::Index dim_bound,
                                                  std::uint64_t rng_seed) {
    if (spec.dimension > dim_bound) throw std::invalid_argument("dimension unsupported");

    Splitter splitter{spec, std::mt19937_64(rng_seed ^ 0x50C1E0ULL), {}};
    splitter.decompose(socle(spec));

    MinimalSubspaceReport report;
    report.subspaces = std::move(splitter.out);
    std::sort(report.subspaces.begin(), report.subspaces.end(),
              [](const MinimalSubspace& a, const MinimalSubspace& b) {
                  return SubspaceQ::lex_less(a.space, b.space);
              });

    report.literally_complete = true;
    for (const auto& piece : report.subspaces)
        if (!piece.simple_certified) report.literally_complete = false;
    if (report.literally_complete) {
        for (std::size_t i = 0; i < report.subspaces.size() && report.literally_complete; ++i)
            for (std::size_t j = 0; j < report.subspaces.size(); ++j) {
                if (i == j) continue;
                if (!module_homs(spec, report.subspaces[i].space, report.subspaces[j].space).empty()) {
                    report.literally_complete = false;
                    break;
                }
            }
    }
    return report;
}

}  // namespace solgap
