#include "nilq/oddops.hpp"

#include <numeric>

namespace nilq {

namespace {

void require_odd(const SkewPoly& f, const char* who)
{
    if (f.config().commutation != Commutation::odd)
        throw config_error(std::string(who) + ": odd mode required");
}

// Split into even-degree and odd-degree parts.
std::pair<SkewPoly, SkewPoly> parity_split(const SkewPoly& f)
{
    SkewPoly even(f.config()), odd(f.config());
    for (auto& [e, c] : f.terms()) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        (((d % 2) + 2) % 2 == 0 ? even : odd).add_term(e, c);
    }
    return {even, odd};
}

SkewPoly var_diff(const RingConfig& cfg, int a, int b)
{
    return SkewPoly::variable(cfg, a) - SkewPoly::variable(cfg, b);
}

} // namespace

SkewPoly odd_divided_difference(int i, int k, const SkewPoly& f)
{
    require_odd(f, "odd_divided_difference");
    if (i == k) throw std::out_of_range("odd_divided_difference: indices must differ");
    const RingConfig& cfg = f.config();
    SkewPoly xki = var_diff(cfg, k, i);
    SkewPoly out(cfg);
    auto [even, odd] = parity_split(f);
    for (int p = 0; p < 2; ++p) {
        const SkewPoly& part = (p == 0) ? even : odd;
        if (part.is_zero()) continue;
        SkewPoly bracket = multiply(xki, part);
        SkewPoly refl = reflection(i, k, part);
        SkewPoly right = multiply(refl, xki);
        if (p == 0)
            bracket -= right;
        else
            bracket += right;
        // divide by x_k^2 - x_i^2 (central)
        out += divide_square_diff(bracket, k, i);
    }
    return out;
}

SkewPoly r_op(int i, int k, const SkewPoly& f)
{
    require_odd(f, "r_op");
    SkewPoly composite = odd_divided_difference(i, k, reflection(i, k, f));

    // Explicit bracket: (x_i - x_k) s(f) - x_i tau_i(f) + x_k tau_k(f),
    // divided by x_i^2 - x_k^2.
    const RingConfig& cfg = f.config();
    SkewPoly bracket = multiply(var_diff(cfg, i, k), reflection(i, k, f));
    bracket -= mul_var_left(i, 1, shift_tau(i, f));
    bracket += mul_var_left(k, 1, shift_tau(k, f));
    SkewPoly explicit_form = divide_square_diff(bracket, i, k);

    if (!(composite == explicit_form))
        throw std::logic_error("r_op: composite and explicit forms disagree");
    return composite;
}

SkewPoly delta_op(int i, const SkewPoly& f)
{
    require_odd(f, "delta_op");
    const RingConfig& cfg = f.config();
    if (i < 1 || i > cfg.n) throw std::out_of_range("delta_op: index out of range");
    SkewPoly r(cfg);
    for (auto& [e, c] : f.terms()) {
        if ((((e[i - 1] % 2) + 2) % 2) == 0) continue;
        long pre = 0;
        for (int j = 0; j < i - 1; ++j) pre += e[j];
        Exponents m = e;
        m[i - 1] -= 1;
        r.add_term(m, (((pre % 2) + 2) % 2 == 0) ? c : -c);
    }
    return r;
}

SkewPoly p_op(int i, const SkewPoly& f)
{
    require_odd(f, "p_op");
    const RingConfig& cfg = f.config();
    if (i < 1 || i > cfg.n) throw std::out_of_range("p_op: index out of range");
    if (!f.is_polynomial()) throw config_error("p_op: polynomial input required");
    SkewPoly r(cfg);
    for (auto& [e, c] : f.terms()) {
        if (e[i - 1] == 0) continue;
        long pre = 0;
        for (int j = 0; j < i - 1; ++j) pre += e[j];
        Exponents m = e;
        m[i - 1] -= 1;
        ParamScalar coeff = c;
        coeff *= Rational(e[i - 1]);
        r.add_term(m, (((pre % 2) + 2) % 2 == 0) ? coeff : -coeff);
    }
    return r;
}

SkewPoly eta_op(int i, const SkewPoly& f, const OddOpContext& ctx)
{
    require_odd(f, "eta_op");
    SkewPoly acc = delta_op(i, f).scaled(ctx.t);
    SkewPoly rsum(f.config());
    for (int k = 1; k <= ctx.config.n; ++k) {
        if (k == i) continue;
        rsum += r_op(i, k, f);
    }
    acc += rsum.scaled(ctx.u);
    return acc;
}

SkewPoly dvar_op(int i, const SkewPoly& f, const OddOpContext& ctx)
{
    require_odd(f, "dvar_op");
    SkewPoly acc = p_op(i, f).scaled(ctx.t);
    SkewPoly rsum(f.config());
    for (int k = 1; k <= ctx.config.n; ++k) {
        if (k == i) continue;
        rsum += r_op(i, k, f);
    }
    acc += rsum.scaled(ctx.u);
    return acc;
}

SkewPoly sl2_op(Sl2Op which, const SkewPoly& f, const OddOpContext& ctx)
{
    require_odd(f, "sl2_op");
    const RingConfig& cfg = f.config();
    const int n = cfg.n;
    ParamScalar half_inv_t = (ParamScalar::integer(2, cfg.modulus) * ctx.t).inverse();
    switch (which) {
    case Sl2Op::r2: {
        SkewPoly acc(cfg);
        for (int i = 1; i <= n; ++i) acc += mul_var_left(i, 2, f);
        return acc.scaled(half_inv_t);
    }
    case Sl2Op::euler: {
        SkewPoly acc(cfg);
        for (int i = 1; i <= n; ++i) acc += mul_var_left(i, 1, p_op(i, f));
        ParamScalar half_n(Rational(n, 2), cfg.modulus);
        acc += f.scaled(half_n);
        SkewPoly refl_sum(cfg);
        for (int i = 1; i <= n; ++i)
            for (int k = i + 1; k <= n; ++k) refl_sum += reflection(i, k, f);
        acc += refl_sum.scaled(ctx.u * ctx.t.inverse());
        return acc;
    }
    case Sl2Op::laplacian: {
        SkewPoly acc(cfg);
        for (int i = 1; i <= n; ++i) acc += dvar_op(i, dvar_op(i, f, ctx), ctx);
        return (-acc).scaled(half_inv_t);
    }
    }
    throw std::logic_error("sl2_op: unknown operator");
}

std::pair<SkewPoly, SkewPoly> laplacian_sides(const SkewPoly& f, const OddOpContext& ctx)
{
    require_odd(f, "laplacian_sides");
    const RingConfig& cfg = f.config();
    SkewPoly lhs(cfg);
    for (int i = 1; i <= cfg.n; ++i) lhs += eta_op(i, eta_op(i, f, ctx), ctx);
    SkewPoly rhs(cfg);
    for (int i = 1; i <= cfg.n; ++i) rhs += mul_var_left(i, -2, f - shift_tau(i, f));
    rhs = rhs.scaled(ctx.t * ctx.t);
    return {lhs, rhs};
}

SkewPoly cherednik_op(int i, const SkewPoly& f, const OddOpContext& ctx)
{
    require_odd(f, "cherednik_op");
    const RingConfig& cfg = f.config();
    SkewPoly acc = mul_var_left(i, 1, eta_op(i, f, ctx)).scaled(-ctx.alpha);
    for (int k = 1; k < i; ++k) acc += reflection(i, k, f);
    acc -= f.scaled(ParamScalar::integer(cfg.n - 1, cfg.modulus));
    return acc;
}

FactorizationReport factorization_check(int n)
{
    if (n < 1 || n % 2 == 0)
        throw config_error("factorization_check: n must be odd and positive");
    RingConfig cfg{2, Commutation::odd, std::nullopt};
    auto v = [](int k) -> int { return (k % 4 == 0 || k % 4 == 3) ? 1 : -1; };

    // The formal unit a is carried in the u slot; a^n = -1/v_{n-1}.
    SkewPoly sum(cfg);
    for (int k = 0; k <= n - 1; ++k) {
        Exponents e{n - 1 - k, k};
        ParamScalar c(Rational(v(k)), ParamExp{0, 0, k, 0});
        sum.add_term(e, c);
    }
    SkewPoly lead = SkewPoly::variable(cfg, 1) +
                    SkewPoly::monomial(cfg, Exponents{0, 1}, ParamScalar::u_power(1));
    SkewPoly rhs = multiply(lead, sum);

    // Reduce a^e with e >= n via a^n = -v_{n-1} (v is +-1).
    const int vn1 = v(n - 1);
    SkewPoly reduced(cfg);
    for (auto& [e, c] : rhs.terms()) {
        for (auto& [pe, coeff] : c.terms()) {
            int eu = pe.u;
            int folds = eu / n;
            int rem = eu % n;
            Rational factor = coeff;
            for (int j = 0; j < folds; ++j) factor *= Rational(-vn1);
            if (pe.q != 0 || pe.t != 0 || pe.a != 0)
                throw std::logic_error("factorization_check: unexpected parameters");
            reduced.add_term(e, ParamScalar(factor, ParamExp{0, 0, rem, 0}));
        }
    }

    SkewPoly lhs = SkewPoly::monomial(cfg, Exponents{n, 0}, ParamScalar::one()) -
                   SkewPoly::monomial(cfg, Exponents{0, n}, ParamScalar::one());
    SkewPoly residual = lhs - reduced;

    FactorizationReport rep;
    rep.n = n;
    rep.pass = residual.is_zero();
    rep.residual = residual.str();
    return rep;
}

} // namespace nilq
