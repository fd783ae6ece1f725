#include "solgap/polyq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace solgap {

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::constant(Rat c) { return PolyQ(std::vector<Rat>{std::move(c)}); }

PolyQ PolyQ::x() { return monomial(1); }

PolyQ PolyQ::monomial(std::size_t degree, Rat c) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = std::move(c);
    return PolyQ(std::move(v));
}

Rat PolyQ::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return PolyQ(std::move(v));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::scaled(const Rat& f) const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= f;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
}

Rat PolyQ::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

MatQ PolyQ::eval(const MatQ& m) const {
    const Eigen::Index d = m.rows();
    MatQ acc = zero_q(d, d);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = MatQ(acc * m);
        for (Eigen::Index i = 0; i < d; ++i) acc(i, i) += *it;
    }
    return acc;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rat> v(c_.size() - 1, Rat(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long long>(i));
    return PolyQ(std::move(v));
}

std::string PolyQ::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i > 0) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

PolyDivMod divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    if (a.degree() < b.degree()) return {PolyQ(), a};
    std::vector<Rat> quot(a.coeffs().size() - db, Rat(0));
    Rat lead_inv = b.leading().inv();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        Rat f = rem[i] * lead_inv;
        quot[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

bool divides(const PolyQ& b, const PolyQ& a, PolyQ* q) {
    auto dm = divmod(a, b);
    if (!dm.rem.is_zero()) return false;
    if (q) *q = std::move(dm.quot);
    return true;
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

PolyQ squarefree_part(const PolyQ& f) {
    if (f.degree() <= 0) return f;
    PolyQ g = poly_gcd(f, f.derivative());
    return divmod(f, g).quot.monic();
}

std::int64_t euler_phi(std::int64_t k) {
    std::int64_t result = k, n = k;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const PolyQ& cyclotomic(std::int64_t k) {
    static std::map<std::int64_t, PolyQ> cache;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    // x^k - 1 divided by the cyclotomics of all proper divisors
    std::vector<Rat> xk(static_cast<std::size_t>(k) + 1, Rat(0));
    xk[0] = Rat(-1);
    xk[static_cast<std::size_t>(k)] = Rat(1);
    PolyQ num((std::vector<Rat>(xk)));
    for (std::int64_t d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        num = divmod(num, cyclotomic(d)).quot;
    }
    return cache.emplace(k, std::move(num)).first->second;
}

std::vector<std::int64_t> cyclotomic_orders_up_to_dim(std::int64_t d) {
    std::vector<std::int64_t> orders;
    // phi(k) >= sqrt(k/2), so k <= 2 d^2 + 2 is a safe scan bound
    for (std::int64_t k = 1; k <= 2 * d * d + 2; ++k)
        if (euler_phi(k) <= d) orders.push_back(k);
    return orders;
}

PolyQ char_poly(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char poly of non-square matrix");
    const Eigen::Index d = m.rows();
    // Faddeev-LeVerrier: exact over Q.
    std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1, Rat(0));
    coeffs[static_cast<std::size_t>(d)] = Rat(1);
    MatQ mk = identity_q(d);
    for (Eigen::Index k = 1; k <= d; ++k) {
        mk = MatQ(m * mk);
        Rat trace(0);
        for (Eigen::Index i = 0; i < d; ++i) trace += mk(i, i);
        Rat ck = -(trace / Rat(static_cast<long long>(k)));
        coeffs[static_cast<std::size_t>(d - k)] = ck;
        for (Eigen::Index i = 0; i < d; ++i) mk(i, i) += ck;
    }
    return PolyQ(std::move(coeffs));
}

PolyQ min_poly(const MatQ& m) {
    const Eigen::Index d = m.rows();
    const Eigen::Index n2 = d * d;
    // stack I, m, m^2, ... as columns until linearly dependent
    MatQ powers = zero_q(n2, d + 1);
    MatQ cur = identity_q(d);
    for (Eigen::Index k = 0; k <= d; ++k) {
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                powers(i * d + j, k) = cur(i, j);
        MatQ sub = powers.block(0, 0, n2, k + 1);
        MatQ ker = kernel_basis(sub);
        if (ker.cols() > 0) {
            std::vector<Rat> coeffs(static_cast<std::size_t>(k) + 1, Rat(0));
            for (Eigen::Index i = 0; i <= k; ++i) coeffs[static_cast<std::size_t>(i)] = ker(i, 0);
            return PolyQ(std::move(coeffs)).monic();
        }
        cur = MatQ(cur * m);
    }
    throw std::logic_error("min_poly: no dependency up to dimension bound");
}

namespace {

// Divisors of |n|, positive only; bails out when factoring gets expensive.
std::optional<std::vector<BigInt>> divisors(BigInt n, std::size_t cap = 4096) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<BigInt, int>> factors;
    BigInt d = 2;
    std::int64_t steps = 0;
    while (d * d <= n) {
        if (++steps > 2'000'000) return std::nullopt;
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            factors.emplace_back(d, e);
        }
        ++d;
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<BigInt> divs{BigInt(1)};
    for (auto& [p, e] : factors) {
        std::size_t sz = divs.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) {
                divs.push_back(divs[j] * pk);
                if (divs.size() > cap) return std::nullopt;
            }
        }
    }
    return divs;
}

// Clears denominators and content: returns integer coefficients with
// gcd 1 and positive leading coefficient.
std::vector<BigInt> primitive_integer_coeffs(const PolyQ& f) {
    BigInt lcm_den = 1;
    for (const Rat& c : f.coeffs())
        lcm_den = boost::multiprecision::lcm(lcm_den, c.denominator());
    std::vector<BigInt> v;
    v.reserve(f.coeffs().size());
    BigInt content = 0;
    for (const Rat& c : f.coeffs()) {
        BigInt z = c.numerator() * (lcm_den / c.denominator());
        content = boost::multiprecision::gcd(content, z);
        v.push_back(std::move(z));
    }
    if (content == 0) content = 1;
    for (auto& z : v) z /= content;
    if (!v.empty() && v.back() < 0)
        for (auto& z : v) z = -z;
    return v;
}

}  // namespace

std::optional<std::vector<Rat>> rational_roots(const PolyQ& f) {
    if (f.is_zero()) return std::nullopt;
    std::vector<BigInt> zc = primitive_integer_coeffs(f);
    // strip x^k factors: 0 is a root with the stripped multiplicity
    std::vector<Rat> roots;
    std::size_t lead_zero = 0;
    while (lead_zero < zc.size() && zc[lead_zero] == 0) ++lead_zero;
    if (lead_zero > 0) {
        roots.push_back(Rat(0));
        zc.erase(zc.begin(), zc.begin() + static_cast<std::ptrdiff_t>(lead_zero));
    }
    if (zc.size() <= 1) return roots;
    auto num_divs = divisors(zc.front());
    auto den_divs = divisors(zc.back());
    if (!num_divs || !den_divs) return std::nullopt;
    for (const BigInt& p : *num_divs) {
        for (const BigInt& q : *den_divs) {
            for (int sign : {1, -1}) {
                Rat cand(sign > 0 ? p : BigInt(-p), q);
                if (f.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    return roots;
}

namespace {

// Quartic-only: monic integer factorization into two quadratics by
// divisor-pair enumeration on the constant term.
std::optional<std::pair<PolyQ, PolyQ>> quartic_quadratic_split(const PolyQ& f) {
    if (f.degree() != 4) return std::nullopt;
    std::vector<BigInt> zc = primitive_integer_coeffs(f);
    // pass to the monic integer polynomial A^3 f(y/A), y = A x
    BigInt a4 = zc[4];
    BigInt g3 = zc[3], g2 = zc[2] * a4, g1 = zc[1] * a4 * a4, g0 = zc[0] * a4 * a4 * a4;
    auto divs = divisors(g0);
    if (!divs) return std::nullopt;
    for (const BigInt& babs : *divs) {
        for (int sign : {1, -1}) {
            BigInt b = sign > 0 ? babs : BigInt(-babs);
            if (b == 0) continue;
            if (g0 % b != 0) continue;
            BigInt d = g0 / b;
            // (y^2 + a y + b)(y^2 + c y + d):
            //   a + c = g3,  b + d + a c = g2,  a d + b c = g1
            if (b == d) {
                // a(d - b) degenerates; solve a + c = g3 with a c = g2 - b - d
                BigInt s = g3, prod = g2 - b - d;
                // a, c are integer roots of t^2 - s t + prod
                BigInt disc = s * s - 4 * prod;
                if (disc < 0) continue;
                BigInt r = boost::multiprecision::sqrt(disc);
                if (r * r != disc) continue;
                if ((s + r) % 2 != 0) continue;
                BigInt a = (s + r) / 2, c = s - a;
                if (a * d + b * c != g1) std::swap(a, c);
                if (a * d + b * c != g1) continue;
                PolyQ q1(std::vector<Rat>{Rat(b, 1), Rat(a, 1), Rat(1)});
                PolyQ q2(std::vector<Rat>{Rat(d, 1), Rat(c, 1), Rat(1)});
                if (!(q1 * q2 == PolyQ(std::vector<Rat>{Rat(g0, 1), Rat(g1, 1), Rat(g2, 1), Rat(g3, 1), Rat(1)})))
                    continue;
                // undo the y = A x substitution: x-roots scale back by 1/A
                PolyQ p1(std::vector<Rat>{Rat(b, 1), Rat(a, 1) * Rat(a4, 1), Rat(a4, 1) * Rat(a4, 1)});
                PolyQ p2(std::vector<Rat>{Rat(d, 1), Rat(c, 1) * Rat(a4, 1), Rat(a4, 1) * Rat(a4, 1)});
                if (poly_gcd(p1, p2).degree() != 0) continue;
                return std::make_pair(p1.monic(), p2.monic());
            }
            BigInt num = g1 - g3 * b;
            BigInt den = d - b;
            if (num % den != 0) continue;
            BigInt a = num / den;
            BigInt c = g3 - a;
            if (b + d + a * c != g2) continue;
            if (a * d + b * c != g1) continue;
            PolyQ p1(std::vector<Rat>{Rat(b, 1), Rat(a, 1) * Rat(a4, 1), Rat(a4, 1) * Rat(a4, 1)});
            PolyQ p2(std::vector<Rat>{Rat(d, 1), Rat(c, 1) * Rat(a4, 1), Rat(a4, 1) * Rat(a4, 1)});
            if (poly_gcd(p1, p2).degree() != 0) continue;
            return std::make_pair(p1.monic(), p2.monic());
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<PolyQ, PolyQ>> coprime_split(const PolyQ& f) {
    if (f.degree() < 2) return std::nullopt;
    PolyQ g = f.monic();
    // a repeated-factor split first: gcd(f, f') vs the rest
    PolyQ sf = squarefree_part(g);
    if (auto roots = rational_roots(sf)) {
        for (const Rat& r : *roots) {
            PolyQ lin(std::vector<Rat>{-r, Rat(1)});
            PolyQ f1 = PolyQ::constant(Rat(1));
            PolyQ rest = g;
            PolyQ quot;
            while (divides(lin, rest, &quot)) {
                f1 = f1 * lin;
                rest = quot;
            }
            if (f1.degree() >= 1 && rest.degree() >= 1) return std::make_pair(f1, rest);
        }
    }
    if (sf.degree() == 4 && sf == g) {
        if (auto qs = quartic_quadratic_split(g)) return qs;
    }
    return std::nullopt;
}

}  // namespace solgap
