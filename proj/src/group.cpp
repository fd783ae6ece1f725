#include "solgap/group.hpp"

#include "solgap/polyq.hpp"

#include <numeric>

namespace solgap {

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& letter : r) letter = -letter;
    return r;
}

void GroupSpec::validate(bool require_s_integral) const {
    if (dimension < 1) throw std::invalid_argument("group dimension must be positive");
    if (generators.empty()) throw std::invalid_argument("generator list is empty");
    if (weights.size() != generators.size())
        throw std::invalid_argument("weight count does not match generator count");
    std::unordered_map<std::string, std::size_t> seen;
    Rat total(0);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const MatQ& g = generators[i];
        if (g.rows() != dimension || g.cols() != dimension)
            throw std::invalid_argument("generator " + std::to_string(i) + " has wrong shape");
        if (require_s_integral) {
            if (!in_GLd_ZS(g, prime_set))
                throw std::invalid_argument("generator " + std::to_string(i) +
                                            " is not in GL_d(Z[1/S]) for the given prime set");
        } else if (det_exact(g).is_zero()) {
            throw std::invalid_argument("generator " + std::to_string(i) + " is singular");
        }
        if (!seen.emplace(mat_key(g), i).second)
            throw std::invalid_argument("generator " + std::to_string(i) + " duplicates an earlier generator");
        if (weights[i].sign() < 0)
            throw std::invalid_argument("weight " + std::to_string(i) + " is negative");
        total += weights[i];
    }
    if (!(total == Rat(1))) throw std::invalid_argument("weights do not sum to 1");
}

GroupSpec GroupSpec::transposed() const {
    GroupSpec t = *this;
    for (auto& g : t.generators) g = MatQ(g.transpose());
    return t;
}

MatQ GroupSpec::generator(std::int32_t letter) const {
    if (letter == 0) throw std::invalid_argument("word letter 0 is invalid");
    std::size_t idx = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
    if (idx >= generators.size()) throw std::invalid_argument("word letter out of range");
    return letter > 0 ? generators[idx] : inverse_exact(generators[idx]);
}

MatQ word_eval(const GroupSpec& spec, const Word& word) {
    MatQ acc = identity_q(spec.dimension);
    for (std::int32_t letter : word) acc = MatQ(acc * spec.generator(letter));
    return acc;
}

GroupBall bfs_ball(const GroupSpec& spec, int radius, std::size_t cap) {
    if (radius < 0) throw std::invalid_argument("negative ball radius");
    if (cap < 1) throw std::invalid_argument("ball cap must be positive");

    std::vector<MatQ> letters;
    std::vector<std::int32_t> letter_ids;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        letters.push_back(spec.generators[i]);
        letter_ids.push_back(static_cast<std::int32_t>(i + 1));
        letters.push_back(inverse_exact(spec.generators[i]));
        letter_ids.push_back(-static_cast<std::int32_t>(i + 1));
    }

    GroupBall ball;
    ball.radius = radius;
    ball.elements.push_back(identity_q(spec.dimension));
    ball.word_witnesses.emplace_back();
    ball.index.emplace(mat_key(ball.elements[0]), 0);

    std::vector<std::size_t> frontier{0};
    for (int depth = 1; depth <= radius && !frontier.empty(); ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            for (std::size_t li = 0; li < letters.size(); ++li) {
                MatQ m = MatQ(ball.elements[idx] * letters[li]);
                std::string key = mat_key(m);
                if (ball.index.contains(key)) continue;
                if (ball.elements.size() >= cap) {
                    ball.truncated = true;
                    return ball;
                }
                std::size_t pos = ball.elements.size();
                ball.index.emplace(std::move(key), pos);
                ball.elements.push_back(std::move(m));
                Word w = ball.word_witnesses[idx];
                w.push_back(letter_ids[li]);
                ball.word_witnesses.push_back(std::move(w));
                next.push_back(pos);
            }
        }
        frontier = std::move(next);
    }
    return ball;
}

namespace {

MatQ mat_pow(const MatQ& m, std::int64_t e) {
    MatQ acc = identity_q(m.rows());
    MatQ base = m;
    while (e > 0) {
        if (e & 1) acc = MatQ(acc * base);
        e >>= 1;
        if (e) base = MatQ(base * base);
    }
    return acc;
}

Rat trace_of(const MatQ& m) {
    Rat t(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

bool trace_outside_torsion_range(const Rat& t, Eigen::Index d) {
    // torsion elements of GL_d(Q) have integer traces in [-d, d]
    if (!t.is_integer()) return true;
    return t.abs() > Rat(static_cast<long long>(d));
}

// Divides out every cyclotomic factor; returns the remaining factor and
// the lcm of the cyclotomic orders removed.
std::pair<PolyQ, std::int64_t> strip_cyclotomic_factors(PolyQ chi, Eigen::Index d) {
    std::int64_t s = 1;
    for (std::int64_t k : cyclotomic_orders_up_to_dim(d)) {
        const PolyQ& phi = cyclotomic(k);
        PolyQ quot;
        bool used = false;
        while (chi.degree() >= phi.degree() && divides(phi, chi, &quot)) {
            chi = quot;
            used = true;
        }
        if (used) s = std::lcm(s, k);
    }
    return {chi.monic(), s};
}

}  // namespace

OrderCertificate element_order_certificate(const MatQ& m) {
    const Eigen::Index d = m.rows();
    if (det_exact(m).is_zero()) throw std::invalid_argument("order certificate of singular matrix");

    Rat tr = trace_of(m);
    if (trace_outside_torsion_range(tr, d))
        return {OrderCertificate::Kind::TraceWitness, 0, 1, tr};

    auto [rest, s] = strip_cyclotomic_factors(char_poly(m), d);
    if (rest.degree() >= 1)
        return {OrderCertificate::Kind::NonCyclotomic, 0, 0, Rat(0)};

    MatQ ms = mat_pow(m, s);
    if (is_zero(MatQ(ms - identity_q(d))))
        return {OrderCertificate::Kind::Finite, s, 0, Rat(0)};
    return {OrderCertificate::Kind::UnipotentPart, s, 0, Rat(0)};
}

bool verify_order_certificate(const MatQ& m, const OrderCertificate& cert) {
    const Eigen::Index d = m.rows();
    switch (cert.kind) {
        case OrderCertificate::Kind::Finite:
            return cert.order >= 1 && is_zero(MatQ(mat_pow(m, cert.order) - identity_q(d)));
        case OrderCertificate::Kind::TraceWitness: {
            Rat tr = trace_of(mat_pow(m, cert.power_j));
            return tr == cert.trace && trace_outside_torsion_range(tr, d);
        }
        case OrderCertificate::Kind::UnipotentPart: {
            MatQ u = MatQ(mat_pow(m, cert.order) - identity_q(d));
            if (is_zero(u)) return false;
            MatQ acc = u;
            for (Eigen::Index i = 1; i < d; ++i) acc = MatQ(acc * u);
            return is_zero(acc);  // nilpotent and nonzero: infinite order
        }
        case OrderCertificate::Kind::NonCyclotomic: {
            auto [rest, s] = strip_cyclotomic_factors(char_poly(m), d);
            (void)s;
            return rest.degree() >= 1;
        }
    }
    return false;
}

std::string OrderCertificate::describe() const {
    switch (kind) {
        case Kind::Finite: return "finite of order " + std::to_string(order);
        case Kind::TraceWitness:
            return "trace of power " + std::to_string(power_j) + " is " + trace.str() +
                   ", outside the torsion range";
        case Kind::UnipotentPart:
            return "power " + std::to_string(order) + " is unipotent and not the identity";
        case Kind::NonCyclotomic: return "characteristic polynomial has a non-cyclotomic factor";
    }
    return "";
}

FinitenessResult is_finite_group(const GroupSpec& spec, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("finiteness cap must be positive");

    auto check_word = [&](const Word& w) -> std::optional<FinitenessResult> {
        OrderCertificate cert = element_order_certificate(word_eval(spec, w));
        if (!cert.is_finite())
            return FinitenessResult{FinitenessResult::Kind::Infinite, 0, w, cert};
        return std::nullopt;
    };

    const auto k = static_cast<std::int32_t>(spec.generators.size());
    for (std::int32_t i = 1; i <= k; ++i)
        if (auto r = check_word({i})) return *r;
    for (std::int32_t i = 1; i <= k; ++i)
        for (std::int32_t j = 1; j <= k; ++j) {
            if (auto r = check_word({i, j})) return *r;
            if (i != j)
                if (auto r = check_word({i, -j})) return *r;
        }

    GroupBall ball = bfs_ball(spec, static_cast<int>(cap), cap);
    if (ball.truncated) return {FinitenessResult::Kind::Unknown, 0, {}, std::nullopt};

    // BFS exhausted below the cap: certify closure under multiplication
    for (const MatQ& g : spec.generators)
        for (const MatQ& el : ball.elements)
            if (!ball.index.contains(mat_key(MatQ(el * g))))
                return {FinitenessResult::Kind::Unknown, 0, {}, std::nullopt};
    return {FinitenessResult::Kind::Finite, ball.elements.size(), {}, std::nullopt};
}

}  // namespace solgap
