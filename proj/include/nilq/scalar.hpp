#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nilq {

/// Exact rational coefficient. mpq_class keeps gcd(num,den)=1 and den>0.
using Rational = mpq_class;

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct unit_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct divisibility_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exponents of one scalar term: q and t are Laurent; u and alpha are
/// polynomial in normal use but the representation does not forbid negative
/// powers (the Cherednik suite specializes u = alpha^-1).
struct ParamExp {
    int32_t q = 0;
    int32_t t = 0;
    int32_t u = 0;
    int32_t a = 0;

    friend bool operator==(const ParamExp&, const ParamExp&) = default;
    bool operator<(const ParamExp& o) const
    {
        if (q != o.q) return q < o.q;
        if (t != o.t) return t > o.t;
        if (u != o.u) return u > o.u;
        return a > o.a;
    }
};

/// Coefficients of the m-th cyclotomic polynomial, index = power of q.
const std::vector<mpz_class>& cyclotomic(int m);

/// Euler phi = degree of the m-th cyclotomic polynomial.
int cyclotomic_degree(int m);

/// Rational-coefficient Laurent polynomial in the central parameters
/// q, t, u, alpha, optionally reduced in Q[q]/Phi_m(q).
class ParamScalar {
public:
    using TermMap = std::map<ParamExp, Rational>;

    ParamScalar() = default;
    explicit ParamScalar(const Rational& c, std::optional<int> modulus = std::nullopt)
        : modulus_(modulus)
    {
        Rational v = c;
        v.canonicalize();
        if (v != 0) terms_[ParamExp{}] = v;
        reduce_();
    }
    ParamScalar(const Rational& c, ParamExp e, std::optional<int> modulus = std::nullopt)
        : modulus_(modulus)
    {
        Rational v = c;
        v.canonicalize();
        if (v != 0) terms_[e] = v;
        reduce_();
    }

    static ParamScalar zero(std::optional<int> modulus = std::nullopt)
    {
        ParamScalar s;
        s.modulus_ = modulus;
        return s;
    }
    static ParamScalar one(std::optional<int> modulus = std::nullopt)
    {
        return ParamScalar(Rational(1), modulus);
    }
    static ParamScalar integer(long v, std::optional<int> modulus = std::nullopt)
    {
        return ParamScalar(Rational(v), modulus);
    }
    static ParamScalar q_power(int k, std::optional<int> modulus = std::nullopt)
    {
        return ParamScalar(Rational(1), ParamExp{k, 0, 0, 0}, modulus);
    }
    static ParamScalar t_power(int k) { return ParamScalar(Rational(1), ParamExp{0, k, 0, 0}); }
    static ParamScalar u_power(int k) { return ParamScalar(Rational(1), ParamExp{0, 0, k, 0}); }
    static ParamScalar alpha_power(int k) { return ParamScalar(Rational(1), ParamExp{0, 0, 0, k}); }

    const TermMap& terms() const { return terms_; }
    std::optional<int> modulus() const { return modulus_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const
    {
        return terms_.size() == 1 && terms_.begin()->first == ParamExp{} &&
               terms_.begin()->second == 1;
    }
    /// Single term c * q^a t^b u^c alpha^d?
    bool is_monomial() const { return terms_.size() == 1; }

    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar operator*(const ParamScalar& o) const;
    ParamScalar operator-() const;

    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend bool operator==(const ParamScalar& a, const ParamScalar& b)
    {
        return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
    }

    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
    ParamScalar& operator*=(const Rational& c);

    /// Multiplicative inverse. Defined for monomials in q,t (times a
    /// rational) and, when a modulus is set, for any nonzero element
    /// involving only q.
    ParamScalar inverse() const;

    /// Re-interpret under a cyclotomic modulus (or lift it with nullopt).
    ParamScalar with_modulus(std::optional<int> m) const;

    /// Substitute u -> alpha^-1 (used by the Cherednik suite).
    ParamScalar substitute_u_alpha_inv() const;

    std::string str() const;

private:
    void reduce_();
    TermMap terms_;
    std::optional<int> modulus_;
};

void check_same_modulus(const ParamScalar& a, const ParamScalar& b);

/// Gaussian binomial [n k]_q as a polynomial in q, via the Pascal-type
/// recursion [n k] = q^k [n-1 k] + [n-1 k-1]. Zero for k < 0 or k > n.
ParamScalar gaussian_binomial(int n, int k);

/// Brute-force form of the same polynomial: sum of q^{(k)a_1+(k-1)a_2+...}
/// over (k+1)-tuples of non-negative integers with sum n-k.
ParamScalar gaussian_binomial_tuple_sum(int n, int k);

} // namespace nilq
