#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nilq/oddops.hpp"
#include "nilq/qops.hpp"
#include "nilq/skew.hpp"

namespace nilq {

enum class GenKind {
    identity,
    mul_x,      // left multiplication by x_i
    mul_x_inv,  // left multiplication by x_i^-1
    reflect,    // ring-automorphism reflection s_{i,k} (odd)
    swap_exp,   // plain exponent swap (odd)
    tau,        // (-1)-shift
    del_odd,    // odd divided difference del_{i,k}
    r,          // r_{i,k}
    delta,      // super-derivative delta_i
    p,          // p_i
    eta,        // Dunkl operator
    dvar,       // D_i
    r2,
    euler,
    lap_delta,
    cherednik,  // Y_i
    q_del,      // q divided difference (q mode)
    sigma,      // braid twist (q mode)
    sigma_inv,
};

struct Generator {
    GenKind kind = GenKind::identity;
    int i = 0;
    int k = 0;
};

/// Operator AST: generators closed under composition, sum, scalar multiple,
/// commutator and anticommutator. Compose applies right-to-left.
struct OperatorExpr {
    enum class Kind { generator, compose, sum, scale, commutator, anticommutator };

    Kind kind = Kind::generator;
    Generator gen;
    ParamScalar coeff;
    std::vector<OperatorExpr> children;

    static OperatorExpr generator(GenKind g, int i = 0, int k = 0)
    {
        OperatorExpr e;
        e.kind = Kind::generator;
        e.gen = Generator{g, i, k};
        return e;
    }
    static OperatorExpr identity() { return generator(GenKind::identity); }
    static OperatorExpr compose(std::vector<OperatorExpr> parts)
    {
        OperatorExpr e;
        e.kind = Kind::compose;
        e.children = std::move(parts);
        return e;
    }
    static OperatorExpr sum(std::vector<OperatorExpr> parts)
    {
        OperatorExpr e;
        e.kind = Kind::sum;
        e.children = std::move(parts);
        return e;
    }
    static OperatorExpr scale(ParamScalar c, OperatorExpr inner)
    {
        OperatorExpr e;
        e.kind = Kind::scale;
        e.coeff = std::move(c);
        e.children.push_back(std::move(inner));
        return e;
    }
    static OperatorExpr commutator(OperatorExpr a, OperatorExpr b)
    {
        OperatorExpr e;
        e.kind = Kind::commutator;
        e.children = {std::move(a), std::move(b)};
        return e;
    }
    static OperatorExpr anticommutator(OperatorExpr a, OperatorExpr b)
    {
        OperatorExpr e;
        e.kind = Kind::anticommutator;
        e.children = {std::move(a), std::move(b)};
        return e;
    }

    friend OperatorExpr operator*(OperatorExpr a, OperatorExpr b)
    {
        return compose({std::move(a), std::move(b)});
    }
    friend OperatorExpr operator+(OperatorExpr a, OperatorExpr b)
    {
        return sum({std::move(a), std::move(b)});
    }
    friend OperatorExpr operator-(OperatorExpr a, OperatorExpr b)
    {
        return sum({std::move(a), scale(ParamScalar::integer(-1), std::move(b))});
    }
};

/// Evaluation context: ring plus the central parameter values.
struct EvalContext {
    RingConfig config;
    ParamScalar t = ParamScalar::t_power(1);
    ParamScalar u = ParamScalar::u_power(1);
    ParamScalar alpha = ParamScalar::alpha_power(1);

    explicit EvalContext(RingConfig cfg);

    /// Cherednik specialization u -> alpha^-1.
    EvalContext& specialize_u_alpha_inv();

    OddOpContext odd() const;
};

/// Apply the operator to a ring element. In q mode the whole expression is
/// evaluated on word representatives and only the result is normal-ordered.
SkewPoly eval_expr(const OperatorExpr& e, const SkewPoly& f, const EvalContext& ctx);

/// Word-level evaluation (q mode).
FreePoly eval_expr_words(const OperatorExpr& e, const FreePoly& f, const EvalContext& ctx);

struct RelationReport {
    std::string suite;
    std::string name;
    int n = 0;
    int max_deg = 0;
    std::optional<int> modulus;
    long basis_size = 0;
    bool pass = false;
    std::string counterexample_monomial; // empty when passing
    std::string counterexample_residual;
    double millis = 0.0;

    std::string text() const;
    std::string json(bool with_time) const;
};

/// Thread count for basis sweeps: NILQ_WORKERS env var, else hardware.
int sweep_workers();

/// Evaluate `residual` on every monomial basis element of degree <= max_deg
/// (in (degree, lex) order) and report the first nonzero value.
RelationReport check_zero_fn(const std::string& name, const RingConfig& config, int max_deg,
                             const std::function<SkewPoly(const SkewPoly&)>& residual);

/// Expression form of the zero check.
RelationReport check_zero(const std::string& name, const OperatorExpr& e, const EvalContext& ctx,
                          int max_deg);

} // namespace nilq
