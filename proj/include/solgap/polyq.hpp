#pragma once

#include "solgap/matq.hpp"

#include <optional>
#include <vector>

namespace solgap {

/// Polynomial over Q, coefficients in ascending degree, trailing zeros
/// trimmed. The zero polynomial is the empty vector.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs);
    static PolyQ constant(Rat c);
    static PolyQ x();
    static PolyQ monomial(std::size_t degree, Rat c = Rat(1));

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const;

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ operator-() const;
    PolyQ scaled(const Rat& f) const;
    PolyQ monic() const;

    friend bool operator==(const PolyQ&, const PolyQ&) = default;

    Rat eval(const Rat& x) const;
    MatQ eval(const MatQ& m) const;
    PolyQ derivative() const;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder of exact division; divisor must be nonzero.
struct PolyDivMod {
    PolyQ quot, rem;
};
PolyDivMod divmod(const PolyQ& a, const PolyQ& b);

/// True iff b divides a exactly; quotient returned through q when given.
bool divides(const PolyQ& b, const PolyQ& a, PolyQ* q = nullptr);

/// Monic gcd.
PolyQ poly_gcd(PolyQ a, PolyQ b);

/// Squarefree part f / gcd(f, f').
PolyQ squarefree_part(const PolyQ& f);

/// The k-th cyclotomic polynomial (exact, cached).
const PolyQ& cyclotomic(std::int64_t k);

/// All k with Euler phi(k) <= d -- the cyclotomic orders that can divide
/// a degree-d characteristic polynomial.
std::vector<std::int64_t> cyclotomic_orders_up_to_dim(std::int64_t d);

std::int64_t euler_phi(std::int64_t k);

/// Characteristic polynomial of a square rational matrix
/// (Faddeev-LeVerrier, exact).
PolyQ char_poly(const MatQ& m);

/// Minimal polynomial of m, from the first linear dependency among
/// I, m, m^2, ...
PolyQ min_poly(const MatQ& m);

/// Rational roots of f, found through the rational root theorem on the
/// primitive integer form. Gives up (nullopt) when the constant or
/// leading coefficient is too expensive to factor at desk scale.
std::optional<std::vector<Rat>> rational_roots(const PolyQ& f);

/// Attempts a factorization of f into two nontrivial coprime factors.
/// Complete for splits exposed by rational roots and, for quartics, by
/// integer quadratic pairs; returns nullopt when no split was found
/// (which is not a proof of irreducibility).
std::optional<std::pair<PolyQ, PolyQ>> coprime_split(const PolyQ& f);

}  // namespace solgap
