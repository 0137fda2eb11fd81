#include "nilq/expr.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace nilq {

EvalContext::EvalContext(RingConfig cfg) : config(std::move(cfg))
{
    if (config.modulus) {
        t = t.with_modulus(config.modulus);
        u = u.with_modulus(config.modulus);
        alpha = alpha.with_modulus(config.modulus);
    }
}

EvalContext& EvalContext::specialize_u_alpha_inv()
{
    u = alpha.inverse();
    return *this;
}

OddOpContext EvalContext::odd() const
{
    OddOpContext c(config);
    c.t = t;
    c.u = u;
    c.alpha = alpha;
    return c;
}

namespace {

bool odd_generator(GenKind g)
{
    switch (g) {
    case GenKind::q_del:
    case GenKind::sigma:
    case GenKind::sigma_inv:
        return false;
    default:
        return true;
    }
}

bool q_generator(GenKind g)
{
    switch (g) {
    case GenKind::identity:
    case GenKind::mul_x:
    case GenKind::q_del:
    case GenKind::sigma:
    case GenKind::sigma_inv:
        return true;
    default:
        return false;
    }
}

SkewPoly eval_gen_odd(const Generator& g, const SkewPoly& f, const EvalContext& ctx)
{
    switch (g.kind) {
    case GenKind::identity:
        return f;
    case GenKind::mul_x:
        return mul_var_left(g.i, 1, f);
    case GenKind::mul_x_inv:
        return mul_var_left(g.i, -1, f);
    case GenKind::reflect:
        return reflection(g.i, g.k, f);
    case GenKind::swap_exp:
        return transposition(g.i, g.k, f);
    case GenKind::tau:
        return shift_tau(g.i, f);
    case GenKind::del_odd:
        return odd_divided_difference(g.i, g.k ? g.k : g.i + 1, f);
    case GenKind::r:
        return r_op(g.i, g.k ? g.k : g.i + 1, f);
    case GenKind::delta:
        return delta_op(g.i, f);
    case GenKind::p:
        return p_op(g.i, f);
    case GenKind::eta:
        return eta_op(g.i, f, ctx.odd());
    case GenKind::dvar:
        return dvar_op(g.i, f, ctx.odd());
    case GenKind::r2:
        return sl2_op(Sl2Op::r2, f, ctx.odd());
    case GenKind::euler:
        return sl2_op(Sl2Op::euler, f, ctx.odd());
    case GenKind::lap_delta:
        return sl2_op(Sl2Op::laplacian, f, ctx.odd());
    case GenKind::cherednik:
        return cherednik_op(g.i, f, ctx.odd());
    default:
        throw config_error("operator not available in odd mode");
    }
}

FreePoly eval_gen_q(const Generator& g, const FreePoly& f)
{
    switch (g.kind) {
    case GenKind::identity:
        return f;
    case GenKind::mul_x:
        return free_mul_var(g.i, f);
    case GenKind::q_del:
        return free_qdel(g.i, f);
    case GenKind::sigma:
        return free_sigma(g.i, +1, f);
    case GenKind::sigma_inv:
        return free_sigma(g.i, -1, f);
    default:
        throw config_error("operator not available in q mode");
    }
}

} // namespace

SkewPoly eval_expr_odd(const OperatorExpr& e, const SkewPoly& f, const EvalContext& ctx)
{
    switch (e.kind) {
    case OperatorExpr::Kind::generator:
        if (!odd_generator(e.gen.kind)) throw config_error("q-mode generator in odd context");
        return eval_gen_odd(e.gen, f, ctx);
    case OperatorExpr::Kind::compose: {
        SkewPoly cur = f;
        for (auto it = e.children.rbegin(); it != e.children.rend(); ++it)
            cur = eval_expr_odd(*it, cur, ctx);
        return cur;
    }
    case OperatorExpr::Kind::sum: {
        SkewPoly acc(f.config());
        for (auto& c : e.children) acc += eval_expr_odd(c, f, ctx);
        return acc;
    }
    case OperatorExpr::Kind::scale:
        return eval_expr_odd(e.children[0], f, ctx)
            .scaled(e.coeff.with_modulus(ctx.config.modulus));
    case OperatorExpr::Kind::commutator:
        return eval_expr_odd(e.children[0], eval_expr_odd(e.children[1], f, ctx), ctx) -
               eval_expr_odd(e.children[1], eval_expr_odd(e.children[0], f, ctx), ctx);
    case OperatorExpr::Kind::anticommutator:
        return eval_expr_odd(e.children[0], eval_expr_odd(e.children[1], f, ctx), ctx) +
               eval_expr_odd(e.children[1], eval_expr_odd(e.children[0], f, ctx), ctx);
    }
    throw std::logic_error("eval_expr_odd: unknown node");
}

FreePoly eval_expr_words(const OperatorExpr& e, const FreePoly& f, const EvalContext& ctx)
{
    switch (e.kind) {
    case OperatorExpr::Kind::generator:
        if (!q_generator(e.gen.kind)) throw config_error("odd-mode generator in q context");
        return eval_gen_q(e.gen, f);
    case OperatorExpr::Kind::compose: {
        FreePoly cur = f;
        for (auto it = e.children.rbegin(); it != e.children.rend(); ++it)
            cur = eval_expr_words(*it, cur, ctx);
        return cur;
    }
    case OperatorExpr::Kind::sum: {
        FreePoly acc(f.config());
        for (auto& c : e.children) acc += eval_expr_words(c, f, ctx);
        return acc;
    }
    case OperatorExpr::Kind::scale:
        return eval_expr_words(e.children[0], f, ctx)
            .scaled(e.coeff.with_modulus(ctx.config.modulus));
    case OperatorExpr::Kind::commutator:
        return eval_expr_words(e.children[0], eval_expr_words(e.children[1], f, ctx), ctx) -
               eval_expr_words(e.children[1], eval_expr_words(e.children[0], f, ctx), ctx);
    case OperatorExpr::Kind::anticommutator:
        return eval_expr_words(e.children[0], eval_expr_words(e.children[1], f, ctx), ctx) +
               eval_expr_words(e.children[1], eval_expr_words(e.children[0], f, ctx), ctx);
    }
    throw std::logic_error("eval_expr_words: unknown node");
}

SkewPoly eval_expr(const OperatorExpr& e, const SkewPoly& f, const EvalContext& ctx)
{
    if (ctx.config.commutation == Commutation::q_mode)
        return eval_expr_words(e, FreePoly::lift(f), ctx).normalize();
    return eval_expr_odd(e, f, ctx);
}

int sweep_workers()
{
    if (const char* env = std::getenv("NILQ_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

RelationReport check_zero_fn(const std::string& name, const RingConfig& config, int max_deg,
                             const std::function<SkewPoly(const SkewPoly&)>& residual)
{
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Exponents> basis = monomial_basis(config.n, max_deg);
    const size_t count = basis.size();
    std::vector<uint8_t> failed(count, 0);
    std::vector<std::string> residuals(count);

    int workers = sweep_workers();
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    std::atomic<size_t> next{0};
    auto run = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= count) return;
            SkewPoly f =
                SkewPoly::monomial(config, basis[idx], ParamScalar::one(config.modulus));
            SkewPoly res = residual(f);
            if (!res.is_zero()) {
                failed[idx] = 1;
                residuals[idx] = res.str();
            }
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }

    RelationReport rep;
    rep.name = name;
    rep.n = config.n;
    rep.max_deg = max_deg;
    rep.modulus = config.modulus;
    rep.basis_size = static_cast<long>(count);
    rep.pass = true;
    for (size_t i = 0; i < count; ++i) {
        if (failed[i]) {
            rep.pass = false;
            rep.counterexample_monomial =
                SkewPoly::monomial(config, basis[i], ParamScalar::one(config.modulus)).str();
            rep.counterexample_residual = residuals[i];
            break;
        }
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
    return rep;
}

RelationReport check_zero(const std::string& name, const OperatorExpr& e, const EvalContext& ctx,
                          int max_deg)
{
    return check_zero_fn(name, ctx.config, max_deg,
                         [&](const SkewPoly& f) { return eval_expr(e, f, ctx); });
}

std::string RelationReport::text() const
{
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "  " << suite << (suite.empty() ? "" : ".") << name
       << "  (n=" << n << ", max_deg=" << max_deg;
    if (modulus) os << ", modulus=" << *modulus;
    os << ", basis=" << basis_size << ")";
    if (!pass && !counterexample_monomial.empty())
        os << "  counterexample: " << counterexample_monomial
           << " -> " << counterexample_residual;
    return os.str();
}

std::string RelationReport::json(bool with_time) const
{
    auto esc = [](const std::string& s) {
        std::string o;
        for (char c : s) {
            if (c == '"' || c == '\\') o += '\\';
            o += c;
        }
        return o;
    };
    std::ostringstream os;
    os << "{\"suite\":\"" << esc(suite) << "\",\"relation\":\"" << esc(name) << "\",\"n\":" << n
       << ",\"max_deg\":" << max_deg << ",\"modulus\":";
    if (modulus)
        os << *modulus;
    else
        os << "null";
    os << ",\"basis\":" << basis_size << ",\"pass\":" << (pass ? "true" : "false");
    if (!pass) {
        os << ",\"counterexample\":{\"monomial\":\"" << esc(counterexample_monomial)
           << "\",\"residual\":\"" << esc(counterexample_residual) << "\"}";
    } else {
        os << ",\"counterexample\":null";
    }
    if (with_time) os << ",\"ms\":" << static_cast<long>(millis);
    os << "}";
    return os.str();
}

} // namespace nilq
