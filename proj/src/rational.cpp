#include "solgap/rational.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace solgap {

Rat::Rat(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = Backend(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

Rat::Rat(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = Backend(std::move(num), std::move(den));
}

Rat Rat::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto parse_int = [&](std::string_view part) -> BigInt {
        std::string_view digits = part;
        bool neg = false;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
            neg = digits.front() == '-';
            digits.remove_prefix(1);
        }
        if (digits.empty()) throw std::invalid_argument("malformed integer literal '" + std::string(part) + "'");
        for (char c : digits)
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed integer literal '" + std::string(part) + "'");
        BigInt v(std::string(digits));
        return neg ? BigInt(-v) : v;
    };

    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s), BigInt(1));
    if (s.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    BigInt num = parse_int(trim(s.substr(0, slash)));
    BigInt den = parse_int(trim(s.substr(slash + 1)));
    if (den <= 0)
        throw std::invalid_argument("malformed rational '" + std::string(text) +
                                    "' (denominator must be a positive integer)");
    return Rat(std::move(num), std::move(den));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero rational");
    return Rat(Rat::Backend(a.v_ / b.v_));
}

Rat Rat::inv() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero rational");
    return Rat(denominator(), numerator());
}

BigInt Rat::floor() const {
    BigInt num = numerator(), den = denominator();
    BigInt q = num / den;            // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

double Rat::to_double() const { return v_.convert_to<double>(); }

std::string Rat::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

std::size_t Rat::hash() const {
    std::size_t seed = std::hash<std::string>{}(str());
    return seed;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeSet::PrimeSet(std::vector<std::int64_t> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime(primes_[i]))
            throw std::invalid_argument("prime set entry " + std::to_string(primes_[i]) + " is not prime");
        if (i > 0 && primes_[i] == primes_[i - 1])
            throw std::invalid_argument("prime set entry " + std::to_string(primes_[i]) + " repeated");
    }
}

bool PrimeSet::contains(std::int64_t p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

Place Place::finite(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("place " + std::to_string(p) + " is not prime");
    return Place(p);
}

std::int64_t Place::prime() const {
    if (is_infinite()) throw std::logic_error("archimedean place has no prime");
    return p_;
}

Phase Phase::reduce(const Rat& r) {
    Phase ph;
    ph.v_ = r - Rat(r.floor(), BigInt(1));
    return ph;
}

SRational::SRational(Rat v, PrimeSet s) : value(std::move(v)), primes(std::move(s)) {
    if (!is_s_integer(value, primes))
        throw std::invalid_argument("rational " + value.str() + " is not an S-integer for the given prime set");
}

std::optional<std::int64_t> padic_valuation(const Rat& q, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("valuation at non-prime " + std::to_string(p));
    if (q.is_zero()) return std::nullopt;
    std::int64_t v = 0;
    BigInt num = q.numerator(), den = q.denominator();
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

Phase fractional_part_p(const Rat& q, std::int64_t p) {
    auto v = padic_valuation(q, p);
    if (!v || *v >= 0) return Phase();
    std::int64_t k = -*v;
    BigInt pk = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k));
    // q = num / (p^k * b) with p coprime to num and b; the fractional part
    // is c/p^k where c = num * b^{-1} mod p^k.
    BigInt b = q.denominator() / pk;
    BigInt c = (q.numerator() % pk) * mod_inverse(b % pk, pk) % pk;
    if (c < 0) c += pk;
    return Phase::reduce(Rat(std::move(c), std::move(pk)));
}

Phase character_phase(const Rat& x, const Place& place) {
    if (place.is_infinite()) return Phase::reduce(x);
    return fractional_part_p(x, place.prime());
}

bool is_s_integer(const Rat& q, const PrimeSet& s) {
    BigInt den = q.denominator();
    for (std::int64_t p : s.primes())
        while (den % p == 0) den /= p;
    return den == 1;
}

Rat diagonal_annihilator_defect(const Rat& q, const PrimeSet& s) {
    Rat defect = q;
    for (std::int64_t p : s.primes())
        defect -= fractional_part_p(q, p).value();
    return defect;
}

Rat diagonal_annihilator_defect(const SRational& q) {
    return diagonal_annihilator_defect(q.value, q.primes);
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    BigInt t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    if (t0 < 0) t0 += m;
    return t0;
}

}  // namespace solgap
