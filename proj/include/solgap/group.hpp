#pragma once

#include "solgap/matq.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace solgap {

/// A word in the generators: 1-based indices, negative for inverses.
using Word = std::vector<std::int32_t>;

Word inverse_word(const Word& w);

/// The random-walk datum: a prime set S, generator matrices in
/// GL_d(Z[1/S]) and the probability weights of nu on them.
struct GroupSpec {
    PrimeSet prime_set;
    Eigen::Index dimension = 0;
    std::vector<MatQ> generators;
    std::vector<Rat> weights;

    /// Restrictions of a spec to an invariant subspace live in GL(Q) but
    /// not necessarily in GL(Z[1/S]); they skip the lattice check.
    void validate(bool require_s_integral = true) const;

    GroupSpec transposed() const;
    MatQ generator(std::int32_t letter) const;  // letter may be negative
};

MatQ word_eval(const GroupSpec& spec, const Word& word);

struct GroupBall {
    std::vector<MatQ> elements;       // BFS shortlex order; [0] is I
    std::vector<Word> word_witnesses; // shortlex-minimal word per element
    std::unordered_map<std::string, std::size_t> index; // mat_key -> position
    int radius = 0;
    bool truncated = false;
};

/// All distinct elements of word length <= radius over the generators and
/// their inverses, deduplicated by exact canonical form. Aborts with the
/// truncated flag once the element count exceeds cap.
GroupBall bfs_ball(const GroupSpec& spec, int radius, std::size_t cap);

struct OrderCertificate {
    enum class Kind {
        Finite,          // m^order = I, order minimal
        TraceWitness,    // tr(m^power_j) outside the finite torsion range
        UnipotentPart,   // m^s != I with (m^s - I)^d = 0
        NonCyclotomic,   // char poly keeps a non-cyclotomic factor
    };
    Kind kind;
    std::int64_t order = 0;     // Finite: the order; UnipotentPart: s
    std::int64_t power_j = 0;   // TraceWitness: the power inspected
    Rat trace;                  // TraceWitness payload

    bool is_finite() const { return kind == Kind::Finite; }
    std::string describe() const;
};

/// Complete exact decision of torsion for m in GL_d(Q): either the exact
/// finite order, or a re-verifiable witness of infinite order.
OrderCertificate element_order_certificate(const MatQ& m);

/// Re-runs the checks backing a certificate against the matrix.
bool verify_order_certificate(const MatQ& m, const OrderCertificate& cert);

struct FinitenessResult {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind;
    std::size_t order = 0;                      // Finite
    Word witness_word;                          // Infinite: word of the witness
    std::optional<OrderCertificate> witness;    // Infinite
};

/// Layered finiteness decision: order certificates on short words first,
/// then BFS closure within cap, else Unknown.
FinitenessResult is_finite_group(const GroupSpec& spec, std::size_t cap);

}  // namespace solgap
