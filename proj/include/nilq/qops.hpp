#pragma once

#include "nilq/skew.hpp"

namespace nilq {

struct QPolyContext {
    RingConfig config;

    explicit QPolyContext(RingConfig cfg) : config(std::move(cfg))
    {
        if (config.commutation != Commutation::q_mode)
            throw config_error("QPolyContext: q mode required");
    }
};

/// A word in the free algebra on x_1..x_n (letters are 1-based indices).
using Word = std::vector<uint8_t>;

/// Linear combination of free words. The q-divided-difference calculus is
/// a calculus of operators on word representatives: the twist map does not
/// preserve the defining ideal when q^2 != 1, so compositions are evaluated
/// here and only the final result is brought to normal order.
class FreePoly {
public:
    using TermMap = std::map<Word, ParamScalar>;

    FreePoly() = default;
    explicit FreePoly(RingConfig cfg) : cfg_(std::move(cfg))
    {
        if (cfg_.commutation != Commutation::q_mode)
            throw config_error("FreePoly: q mode required");
    }

    const RingConfig& config() const { return cfg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const ParamScalar& c);
    FreePoly& operator+=(const FreePoly& o);
    FreePoly& operator-=(const FreePoly& o);
    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
    FreePoly scaled(const ParamScalar& c) const;

    /// The ascending word of each normal-ordered monomial of f.
    static FreePoly lift(const SkewPoly& f);
    /// Normal order every word.
    SkewPoly normalize() const;

private:
    RingConfig cfg_;
    TermMap terms_;
};

/// Left multiplication by the letter x_i on word representatives.
FreePoly free_mul_var(int i, const FreePoly& f);

/// q-divided difference by left-peeling words with the sigma twist.
FreePoly free_qdel(int i, const FreePoly& f);

/// Letterwise braid twist (a free-algebra endomorphism); dir = +1 or -1.
FreePoly free_sigma(int i, int dir, const FreePoly& f);

/// q-divided difference on ring elements: acts on the ascending word of
/// each normal-ordered monomial.
SkewPoly q_divided_difference(int i, const SkewPoly& f);

/// Elementary q-symmetric polynomial e_k (twisted: uses q^{j-1} x_j).
SkewPoly elementary_qsym(int k, bool twisted, const QPolyContext& ctx);

/// Closed forms for the divided difference of pure powers.
SkewPoly qdel_power_closed_form(int i, int k, bool upper, const QPolyContext& ctx);

} // namespace nilq
