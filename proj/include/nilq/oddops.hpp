#pragma once

#include "nilq/skew.hpp"

namespace nilq {

/// Central parameters used by the odd operator family. The defaults are the
/// symbolic generators; suites may specialize (e.g. u = alpha^-1).
struct OddOpContext {
    RingConfig config;
    ParamScalar t = ParamScalar::t_power(1);
    ParamScalar u = ParamScalar::u_power(1);
    ParamScalar alpha = ParamScalar::alpha_power(1);

    explicit OddOpContext(RingConfig cfg) : config(std::move(cfg))
    {
        if (config.commutation != Commutation::odd)
            throw config_error("OddOpContext: odd mode required");
        if (config.modulus) {
            t = t.with_modulus(config.modulus);
            u = u.with_modulus(config.modulus);
            alpha = alpha.with_modulus(config.modulus);
        }
    }
};

/// Odd divided difference for any pair of distinct indices, computed from
/// the closed bracket form per parity component and exact central division.
/// Lowers degree by one; the internal reflection is the ring automorphism.
SkewPoly odd_divided_difference(int i, int k, const SkewPoly& f);

/// r_{i,k}: divided difference composed with the reflection. Computes both
/// the composite and the explicit bracket form and insists they agree.
SkewPoly r_op(int i, int k, const SkewPoly& f);

/// Super-derivative delta_i: kills monomials with even x_i exponent,
/// decrements odd ones with the sign of the variables passed over.
SkewPoly delta_op(int i, const SkewPoly& f);

/// p_i: exponent-times-sign partial, the degree -1 companion of tau_i.
SkewPoly p_op(int i, const SkewPoly& f);

/// Dunkl operator t*delta_i + u*sum_{k != i} r_{i,k}.
SkewPoly eta_op(int i, const SkewPoly& f, const OddOpContext& ctx);

/// Variant t*p_i + u*sum_{k != i} r_{i,k}.
SkewPoly dvar_op(int i, const SkewPoly& f, const OddOpContext& ctx);

enum class Sl2Op { r2, euler, laplacian };

/// The sl2 triple members: r^2 = (2t)^-1 sum x_i^2, the Euler operator
/// (degree + n/2 + (u/t) * sum over unordered pairs of reflections),
/// and the Laplacian -(2t)^-1 sum D_i^2.
SkewPoly sl2_op(Sl2Op which, const SkewPoly& f, const OddOpContext& ctx);

/// Left and right side of the Dunkl Laplacian comparison:
/// (sum_i eta_i^2 f, t^2 sum_i x_i^-2 (1 - tau_i) f).
std::pair<SkewPoly, SkewPoly> laplacian_sides(const SkewPoly& f, const OddOpContext& ctx);

/// Cherednik operator -alpha x_i eta_i + sum_{k<i} reflections - (n-1).
SkewPoly cherednik_op(int i, const SkewPoly& f, const OddOpContext& ctx);

struct FactorizationReport {
    int n = 0;
    bool pass = false;
    std::string residual;
};

/// Checks x_1^n - x_2^n = (x_1 + a x_2) sum_k v_k a^k x_1^{n-1-k} x_2^k
/// in the skew ring with a^n = -1/v_{n-1}, for odd n.
FactorizationReport factorization_check(int n);

} // namespace nilq
