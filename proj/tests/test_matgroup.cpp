#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solgap/group.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>

using namespace solgap;

namespace {

GroupSpec make_spec(const PrimeSet& s, const std::vector<std::vector<std::vector<std::string>>>& gens) {
    GroupSpec spec;
    spec.prime_set = s;
    spec.generators.reserve(gens.size());
    for (const auto& g : gens) spec.generators.push_back(mat_from_strings(g));
    spec.dimension = spec.generators.front().rows();
    Rat w(1, static_cast<long long>(gens.size()));
    spec.weights.assign(gens.size(), w);
    return spec;
}

GroupSpec t_spec() { return make_spec(PrimeSet({2}), {{{"1", "1"}, {"0", "1"}}}); }

GroupSpec sanov_spec() {
    return make_spec(PrimeSet({2}), {{{"1", "2"}, {"0", "1"}}, {{"1", "0"}, {"2", "1"}}});
}

}  // namespace

TEST_CASE("exact inverse and determinant") {
    MatQ t = mat_from_strings({{"1", "1"}, {"0", "1"}});
    MatQ ti = inverse_exact(t);
    CHECK(is_zero(MatQ(t * ti - identity_q(2))));
    CHECK(det_exact(t) == Rat(1));
    MatQ d = mat_from_strings({{"2", "0"}, {"0", "1/2"}});
    CHECK(det_exact(d) == Rat(1));
    CHECK_THROWS_AS(inverse_exact(mat_from_strings({{"1", "2"}, {"2", "4"}})), std::invalid_argument);
}

TEST_CASE("GL_d(Z[1/S]) membership") {
    PrimeSet s2({2});
    CHECK(in_GLd_ZS(mat_from_strings({{"1", "1"}, {"0", "1"}}), s2));
    // oracle: det = 1, entries in Z[1/2] by direct factorization
    CHECK(in_GLd_ZS(mat_from_strings({{"2", "0"}, {"0", "1/2"}}), s2));
    CHECK_FALSE(in_GLd_ZS(mat_from_strings({{"3", "0"}, {"0", "1"}}), s2));
    CHECK_FALSE(in_GLd_ZS(mat_from_strings({{"1/3", "0"}, {"0", "3"}}), s2));
}

TEST_CASE("GL_d(Z[1/S]) membership is multiplicative on random products") {
    PrimeSet s23({2, 3});
    std::vector<MatQ> pool{
        mat_from_strings({{"1", "1"}, {"0", "1"}}),
        mat_from_strings({{"0", "-1"}, {"1", "0"}}),
        mat_from_strings({{"2", "0"}, {"0", "1/2"}}),
        mat_from_strings({{"1/3", "0"}, {"2", "3"}}),
    };
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        MatQ a = pool[rng() % pool.size()];
        MatQ b = pool[rng() % pool.size()];
        REQUIRE(in_GLd_ZS(a, s23));
        REQUIRE(in_GLd_ZS(b, s23));
        CHECK(in_GLd_ZS(MatQ(a * b), s23));
        CHECK(in_GLd_ZS(inverse_exact(a), s23));
    }
}

TEST_CASE("symplectic membership") {
    CHECK(is_symplectic(identity_q(2)));
    MatQ j = symplectic_form(2);
    // oracle: direct multiply of J^t J J against J
    CHECK(is_zero(MatQ(MatQ(j.transpose() * j * j) - j)));
    CHECK(is_symplectic(j));
    CHECK(is_symplectic(mat_from_strings({{"1", "1"}, {"0", "1"}})));
    CHECK_FALSE(is_symplectic(mat_from_strings({{"2", "0"}, {"0", "1"}})));
    CHECK_THROWS_WITH_AS(is_symplectic(identity_q(3)), "not even-dimensional", std::invalid_argument);

    MatQ j4 = symplectic_form(4);
    CHECK(is_symplectic(j4));
    // closure under product and inverse on random symplectic words
    std::vector<MatQ> gens{j, mat_from_strings({{"1", "1"}, {"0", "1"}})};
    std::mt19937_64 rng(5);
    MatQ acc = identity_q(2);
    for (int iter = 0; iter < 40; ++iter) {
        acc = MatQ(acc * gens[rng() % gens.size()]);
        CHECK(is_symplectic(acc));
        CHECK(is_symplectic(inverse_exact(acc)));
    }
}

TEST_CASE("word evaluation") {
    GroupSpec spec = t_spec();
    CHECK(is_zero(MatQ(word_eval(spec, {}) - identity_q(2))));
    CHECK(is_zero(MatQ(word_eval(spec, {1, -1}) - identity_q(2))));
    CHECK(word_eval(spec, {1, 1})(0, 1) == Rat(2));
    CHECK_THROWS_AS(word_eval(spec, {2}), std::invalid_argument);
}

TEST_CASE("bfs ball of a cyclic group") {
    GroupSpec spec = t_spec();
    // oracle: direct power enumeration, T^k for -3 <= k <= 3
    GroupBall ball = bfs_ball(spec, 3, 1000);
    CHECK(ball.elements.size() == 7);
    CHECK_FALSE(ball.truncated);
    std::set<std::string> expected;
    MatQ t = spec.generators[0];
    for (int k = -3; k <= 3; ++k) {
        MatQ m = identity_q(2);
        MatQ f = k >= 0 ? t : inverse_exact(t);
        for (int i = 0; i < std::abs(k); ++i) m = MatQ(m * f);
        expected.insert(mat_key(m));
    }
    std::set<std::string> got;
    for (const auto& m : ball.elements) got.insert(mat_key(m));
    CHECK(got == expected);
}

TEST_CASE("bfs ball of the trivial group") {
    GroupSpec spec = make_spec(PrimeSet({2}), {{{"1", "0"}, {"0", "1"}}});
    CHECK(bfs_ball(spec, 5, 10).elements.size() == 1);
}

TEST_CASE("bfs ball of the Sanov free group matches an independent oracle") {
    GroupSpec spec = sanov_spec();

    // independent oracle: int64 BFS, no shared code with bfs_ball
    auto mul = [](std::array<std::int64_t, 4> a, std::array<std::int64_t, 4> b) {
        return std::array<std::int64_t, 4>{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                								 a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    };
    std::array<std::int64_t, 4> A{1, 2, 0, 1}, Ai{1, -2, 0, 1}, B{1, 0, 2, 1}, Bi{1, 0, -2, 1};
    std::vector<std::array<std::int64_t, 4>> letters{A, Ai, B, Bi};
    std::map<int, std::size_t> ball_sizes;
    std::set<std::array<std::int64_t, 4>> seen{{1, 0, 0, 1}};
    std::vector<std::array<std::int64_t, 4>> frontier{{1, 0, 0, 1}};
    for (int depth = 1; depth <= 3; ++depth) {
        std::vector<std::array<std::int64_t, 4>> next;
        for (const auto& m : frontier)
            for (const auto& l : letters) {
                auto p = mul(m, l);
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
        ball_sizes[depth] = seen.size();
    }
    // free group of rank 2: |ball(r)| = 1 + 2(3^r - 1)
    CHECK(ball_sizes[1] == 5);
    CHECK(ball_sizes[2] == 17);
    CHECK(ball_sizes[3] == 53);

    CHECK(bfs_ball(spec, 1, 100000).elements.size() == ball_sizes[1]);
    CHECK(bfs_ball(spec, 2, 100000).elements.size() == ball_sizes[2]);
    CHECK(bfs_ball(spec, 3, 100000).elements.size() == ball_sizes[3]);
}

TEST_CASE("bfs ball monotonicity and closure consistency") {
    GroupSpec spec = sanov_spec();
    GroupBall small = bfs_ball(spec, 2, 100000);
    GroupBall big = bfs_ball(spec, 3, 100000);
    CHECK(small.elements.size() <= big.elements.size());
    for (const auto& m : small.elements) {
        CHECK(big.index.contains(mat_key(m)));
        for (const auto& g : spec.generators)
            CHECK(big.index.contains(mat_key(MatQ(m * g))));
    }
    for (std::size_t i = 0; i < small.elements.size(); ++i) {
        CHECK(static_cast<int>(small.word_witnesses[i].size()) <= small.radius);
        CHECK(is_zero(MatQ(word_eval(spec, small.word_witnesses[i]) - small.elements[i])));
    }
}

TEST_CASE("bfs ball truncation flag") {
    GroupBall ball = bfs_ball(sanov_spec(), 6, 20);
    CHECK(ball.truncated);
    CHECK(ball.elements.size() <= 20);
}

TEST_CASE("element order certificates") {
    auto id_cert = element_order_certificate(identity_q(3));
    CHECK(id_cert.is_finite());
    CHECK(id_cert.order == 1);

    auto rot = element_order_certificate(mat_from_strings({{"0", "-1"}, {"1", "0"}}));
    CHECK(rot.is_finite());
    CHECK(rot.order == 4);

    // oracle: char poly x^2 - 3x + 1 has a real root > 1 (trace bound)
    auto fib = element_order_certificate(mat_from_strings({{"2", "1"}, {"1", "1"}}));
    CHECK_FALSE(fib.is_finite());
    CHECK(fib.kind == OrderCertificate::Kind::TraceWitness);
    CHECK(verify_order_certificate(mat_from_strings({{"2", "1"}, {"1", "1"}}), fib));

    auto unip = element_order_certificate(mat_from_strings({{"1", "1"}, {"0", "1"}}));
    CHECK_FALSE(unip.is_finite());
    CHECK(unip.kind == OrderCertificate::Kind::UnipotentPart);
    CHECK(verify_order_certificate(mat_from_strings({{"1", "1"}, {"0", "1"}}), unip));

    // all eigenvalues on the unit circle but not roots of unity
    auto salem = element_order_certificate(mat_from_strings({{"0", "-1"}, {"1", "3/2"}}));
    CHECK_FALSE(salem.is_finite());
    CHECK(verify_order_certificate(mat_from_strings({{"0", "-1"}, {"1", "3/2"}}), salem));

    auto rot6 = element_order_certificate(mat_from_strings({{"0", "-1"}, {"1", "1"}}));
    CHECK(rot6.is_finite());
    CHECK(rot6.order == 6);
}

TEST_CASE("finiteness decision") {
    auto fin = is_finite_group(make_spec(PrimeSet{}, {{{"0", "-1"}, {"1", "0"}}}), 100);
    CHECK(fin.kind == FinitenessResult::Kind::Finite);
    CHECK(fin.order == 4);

    auto inf_t = is_finite_group(t_spec(), 100);
    CHECK(inf_t.kind == FinitenessResult::Kind::Infinite);
    REQUIRE(inf_t.witness.has_value());
    CHECK(verify_order_certificate(word_eval(t_spec(), inf_t.witness_word), *inf_t.witness));

    auto inf_fib = is_finite_group(make_spec(PrimeSet{}, {{{"2", "1"}, {"1", "1"}}}), 100);
    CHECK(inf_fib.kind == FinitenessResult::Kind::Infinite);

    // dihedral-like finite group generated by two order-2 reflections
    auto dihedral = is_finite_group(
        make_spec(PrimeSet{}, {{{"0", "1"}, {"1", "0"}}, {{"-1", "0"}, {"0", "1"}}}), 100);
    CHECK(dihedral.kind == FinitenessResult::Kind::Finite);
    CHECK(dihedral.order == 8);
}
