#include "solgap/matq.hpp"

#include <sstream>

namespace solgap {

MatQ identity_q(Eigen::Index d) {
    MatQ m = zero_q(d, d);
    for (Eigen::Index i = 0; i < d; ++i) m(i, i) = Rat(1);
    return m;
}

MatQ zero_q(Eigen::Index rows, Eigen::Index cols) {
    MatQ m(rows, cols);
    m.setConstant(Rat(0));
    return m;
}

MatQ mat_from_strings(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty matrix literal");
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.front().size());
    MatQ m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix literal");
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Rat::parse(rows[i][j]);
    }
    return m;
}

bool is_zero(const MatQ& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

std::string mat_key(const MatQ& m) {
    std::ostringstream os;
    os << m.rows() << 'x' << m.cols() << ':';
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << m(i, j) << ',';
    return os.str();
}

std::string vec_key(const VecQ& v) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < v.size(); ++i) os << v(i) << ',';
    return os.str();
}

Rat det_exact(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    MatQ a = m;
    const Eigen::Index n = a.rows();
    Rat det(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!a(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        Rat inv_p = a(col, col).inv();
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            Rat f = a(r, col) * inv_p;
            for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

MatQ inverse_exact(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const Eigen::Index n = m.rows();
    MatQ a = m;
    MatQ inv = identity_q(n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!a(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        Rat inv_p = a(col, col).inv();
        for (Eigen::Index c = 0; c < n; ++c) {
            a(col, c) *= inv_p;
            inv(col, c) *= inv_p;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            Rat f = a(r, col);
            for (Eigen::Index c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

Echelon rref(MatQ m) {
    Echelon e;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < rows; ++r)
            if (!m(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        Rat inv_p = m(row, col).inv();
        for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv_p;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Rat f = m(r, col);
            for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.mat = std::move(m);
    return e;
}

Eigen::Index rank_exact(const MatQ& m) {
    return static_cast<Eigen::Index>(rref(m).pivots.size());
}

MatQ kernel_basis(const MatQ& m) {
    Echelon e = rref(m);
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> free_cols;
    {
        std::size_t pi = 0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (pi < e.pivots.size() && e.pivots[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    MatQ basis = zero_q(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        Eigen::Index fc = free_cols[k];
        basis(fc, static_cast<Eigen::Index>(k)) = Rat(1);
        for (std::size_t pi = 0; pi < e.pivots.size(); ++pi)
            basis(e.pivots[pi], static_cast<Eigen::Index>(k)) = -e.mat(static_cast<Eigen::Index>(pi), fc);
    }
    return basis;
}

bool solve_exact(const MatQ& a, const VecQ& b, VecQ& x) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    MatQ aug(rows, cols + 1);
    aug.block(0, 0, rows, cols) = a;
    aug.col(cols) = b;
    Echelon e = rref(std::move(aug));
    x = VecQ(cols);
    x.setConstant(Rat(0));
    for (std::size_t pi = 0; pi < e.pivots.size(); ++pi) {
        if (e.pivots[pi] == cols) return false;  // pivot in the rhs column
        x(e.pivots[pi]) = e.mat(static_cast<Eigen::Index>(pi), cols);
    }
    return true;
}

bool is_s_unit(const Rat& r, const PrimeSet& s) {
    if (r.is_zero()) return false;
    BigInt num = r.numerator(), den = r.denominator();
    if (num < 0) num = -num;
    for (std::int64_t p : s.primes()) {
        while (num % p == 0) num /= p;
        while (den % p == 0) den /= p;
    }
    return num == 1 && den == 1;
}

bool in_GLd_ZS(const MatQ& m, const PrimeSet& s) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!is_s_integer(m(i, j), s)) return false;
    return is_s_unit(det_exact(m), s);
}

MatQ symplectic_form(Eigen::Index two_n) {
    if (two_n % 2 != 0) throw std::invalid_argument("not even-dimensional");
    const Eigen::Index n = two_n / 2;
    MatQ j = zero_q(two_n, two_n);
    for (Eigen::Index i = 0; i < n; ++i) {
        j(i, n + i) = Rat(1);
        j(n + i, i) = Rat(-1);
    }
    return j;
}

bool is_symplectic(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("not even-dimensional");
    if (m.rows() % 2 != 0) throw std::invalid_argument("not even-dimensional");
    MatQ j = symplectic_form(m.rows());
    MatQ lhs = m.transpose() * j * m;
    return is_zero(MatQ(lhs - j));
}

}  // namespace solgap
