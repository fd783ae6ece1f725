#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace solgap {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (the backend normalizes on every operation).
///
/// This is a deliberately narrow wrapper: boost's number types have greedy
/// template constructors that wreck Eigen's scalar-promotion SFINAE, so the
/// raw backend must never appear as an Eigen scalar.
class Rat {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rat() = default;
    Rat(int v) : v_(v) {}
    Rat(long v) : v_(v) {}
    Rat(long long v) : v_(static_cast<std::int64_t>(v)) {}
    Rat(long long num, long long den);
    Rat(BigInt num, BigInt den);
    explicit Rat(Backend v) : v_(std::move(v)) {}

    static Rat parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    const Backend& backend() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(Backend(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = a.v_.compare(b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inv() const;

    /// Largest integer <= *this, as a BigInt.
    BigInt floor() const;

    double to_double() const;

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

    std::size_t hash() const;

private:
    Backend v_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

/// The finite places of S; the archimedean place is always implicit.
/// Entries are validated primes, kept sorted and distinct. May be empty
/// (S = {infinity}, the purely real case).
class PrimeSet {
public:
    PrimeSet() = default;
    explicit PrimeSet(std::vector<std::int64_t> primes);

    const std::vector<std::int64_t>& primes() const { return primes_; }
    bool contains(std::int64_t p) const;
    bool empty() const { return primes_.empty(); }
    std::size_t size() const { return primes_.size(); }

    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

private:
    std::vector<std::int64_t> primes_;
};

bool is_prime(std::int64_t n);

/// A place of Q: a finite prime or infinity.
class Place {
public:
    static Place infinity() { return Place(0); }
    static Place finite(std::int64_t p);

    bool is_infinite() const { return p_ == 0; }
    std::int64_t prime() const;

    friend bool operator==(const Place&, const Place&) = default;

private:
    explicit Place(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

/// An element of Q/Z represented by its unique value in [0,1).
/// e(phase) = exp(2*pi*i*value), materialized as a complex number only in
/// the Heisenberg lab; everything here stays exact.
class Phase {
public:
    Phase() = default;
    /// Reduces an arbitrary rational mod 1 into [0,1).
    static Phase reduce(const Rat& r);

    const Rat& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    friend Phase operator+(const Phase& a, const Phase& b) {
        return Phase::reduce(a.v_ + b.v_);
    }
    friend bool operator==(const Phase&, const Phase&) = default;

private:
    Rat v_;
};

/// An element of Z[1/S]: a rational whose denominator factors over the
/// prime set. The constructor enforces the support condition.
struct SRational {
    SRational(Rat v, PrimeSet s);

    Rat value;
    PrimeSet primes;
};

/// p-adic valuation of q; std::nullopt encodes +infinity (q = 0).
std::optional<std::int64_t> padic_valuation(const Rat& q, std::int64_t p);

/// The unique r = a/p^k in [0,1) with q - r p-integral.
Phase fractional_part_p(const Rat& q, std::int64_t p);

/// Value of the standard character e_p at x: mod-1 reduction at the
/// archimedean place, p-adic fractional part at a finite place.
Phase character_phase(const Rat& x, const Place& place);

/// True iff every prime factor of the denominator of q lies in S.
bool is_s_integer(const Rat& q, const PrimeSet& s);

/// q minus the sum of its p-adic fractional parts over the primes of S.
/// For q in Z[1/S] the result is an integer; this is the one-dimensional
/// annihilator identity behind the solenoid duality.
Rat diagonal_annihilator_defect(const SRational& q);
Rat diagonal_annihilator_defect(const Rat& q, const PrimeSet& s);

/// Inverse of a mod m (m > 1, gcd(a, m) = 1).
BigInt mod_inverse(const BigInt& a, const BigInt& m);

}  // namespace solgap

template <>
struct std::hash<solgap::Rat> {
    std::size_t operator()(const solgap::Rat& r) const { return r.hash(); }
};
