#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilq/scalar.hpp"

namespace nilq {

enum class Commutation { odd, q_mode };

/// Ring parameters: x_j x_i = c x_i x_j for i < j, with c = -1 (odd mode)
/// or c = q (q mode). Scalars may carry a cyclotomic modulus.
struct RingConfig {
    int n = 1;
    Commutation commutation = Commutation::odd;
    std::optional<int> modulus;

    friend bool operator==(const RingConfig&, const RingConfig&) = default;
};

using Exponents = std::vector<int32_t>;

/// One letter of a word: variable index (1-based) with an integer exponent.
struct Letter {
    int var;
    int exp;
};

/// Normal-ordered sparse polynomial in x_1..x_n over ParamScalar.
/// Monomials are stored as Laurent exponent vectors; the canonical word is
/// x_1^{e_1} x_2^{e_2} ... x_n^{e_n}.
class SkewPoly {
public:
    using TermMap = std::map<Exponents, ParamScalar>;

    SkewPoly() = default;
    explicit SkewPoly(RingConfig cfg) : cfg_(std::move(cfg)) {}

    static SkewPoly zero(const RingConfig& cfg) { return SkewPoly(cfg); }
    static SkewPoly constant(const RingConfig& cfg, const ParamScalar& c);
    static SkewPoly one(const RingConfig& cfg)
    {
        return constant(cfg, ParamScalar::one(cfg.modulus));
    }
    static SkewPoly monomial(const RingConfig& cfg, const Exponents& e, const ParamScalar& c);
    /// x_i^k as an element.
    static SkewPoly variable(const RingConfig& cfg, int i, int k = 1);

    const RingConfig& config() const { return cfg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const ParamScalar& c);

    SkewPoly& operator+=(const SkewPoly& o);
    SkewPoly& operator-=(const SkewPoly& o);
    SkewPoly operator-() const;
    friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
    friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
    friend bool operator==(const SkewPoly& a, const SkewPoly& b)
    {
        return a.cfg_ == b.cfg_ && a.terms_ == b.terms_;
    }

    SkewPoly scaled(const ParamScalar& c) const;

    int degree() const; // max total degree over terms; 0 for the zero polynomial
    bool is_polynomial() const; // no negative exponents
    bool homogeneous() const;

    std::string str() const;

private:
    RingConfig cfg_;
    TermMap terms_;
};

/// Product of the letters of `word`, brought to normal order. Each swap of
/// adjacent letters x_j x_i with j > i contributes one factor of c (counted
/// with exponent multiplicity).
SkewPoly normal_order(const std::vector<Letter>& word, const RingConfig& cfg);

/// Coefficient picked up when x_i^k is moved from the far left to its slot
/// in a normal-ordered monomial with exponents e (i.e. past x_1..x_{i-1}).
ParamScalar reorder_coeff_left(const RingConfig& cfg, const Exponents& e, int i, int k);

SkewPoly multiply(const SkewPoly& f, const SkewPoly& g);

/// Left multiplication by x_i^k.
SkewPoly mul_var_left(int i, int k, const SkewPoly& f);
/// Right multiplication by x_i^k.
SkewPoly mul_var_right(const SkewPoly& f, int i, int k);

/// Plain exponent swap s_{i,k}: exchanges the i-th and k-th exponents of
/// every monomial, coefficient unchanged. An involution.
SkewPoly transposition(int i, int k, const SkewPoly& f);

/// Ring-automorphism reflection: x_i <-> x_k extended multiplicatively
/// (odd mode), i.e. the exponent swap with the reordering sign
/// (-1)^{e_i e_k + (e_i+e_k)(e_{i+1}+...+e_{k-1})}.
SkewPoly reflection(int i, int k, const SkewPoly& f);

/// (-1)-shift: multiplies each term by (-1)^{e_i}.
SkewPoly shift_tau(int i, const SkewPoly& f);

/// Braid action in q mode: sigma_i on generators, extended monomial-wise.
/// With inverse=true applies the two-sided operator inverse.
SkewPoly braid_sigma(int i, const SkewPoly& f, bool inverse = false);

/// Exact division by the central binomial x_i^2 - x_k^2 (odd mode).
/// Throws divisibility_error when f is not a multiple.
SkewPoly divide_square_diff(const SkewPoly& f, int i, int k);

/// Exact division by x_i^k (always possible with Laurent exponents).
SkewPoly divide_var_power(const SkewPoly& f, int i, int k);

/// All normal-ordered monomial exponent vectors with n variables and total
/// degree 0..max_deg, in (degree, lex) order.
std::vector<Exponents> monomial_basis(int n, int max_deg);

} // namespace nilq
