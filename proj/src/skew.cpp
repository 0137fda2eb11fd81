#include "nilq/skew.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilq {

namespace {

void check_index(const RingConfig& cfg, int i)
{
    if (i < 1 || i > cfg.n) throw std::out_of_range("variable index out of range");
}

// c^w where c is the commutation unit of the ring.
ParamScalar unit_power(const RingConfig& cfg, long w)
{
    if (cfg.commutation == Commutation::odd)
        return ParamScalar(Rational((w % 2 + 2) % 2 == 0 ? 1 : -1), cfg.modulus);
    return ParamScalar::q_power(static_cast<int>(w), cfg.modulus);
}

} // namespace

SkewPoly SkewPoly::constant(const RingConfig& cfg, const ParamScalar& c)
{
    SkewPoly p(cfg);
    p.add_term(Exponents(cfg.n, 0), c);
    return p;
}

SkewPoly SkewPoly::monomial(const RingConfig& cfg, const Exponents& e, const ParamScalar& c)
{
    if (static_cast<int>(e.size()) != cfg.n)
        throw config_error("monomial: exponent vector length != n");
    SkewPoly p(cfg);
    p.add_term(e, c);
    return p;
}

SkewPoly SkewPoly::variable(const RingConfig& cfg, int i, int k)
{
    check_index(cfg, i);
    Exponents e(cfg.n, 0);
    e[i - 1] = k;
    return monomial(cfg, e, ParamScalar::one(cfg.modulus));
}

void SkewPoly::add_term(const Exponents& e, const ParamScalar& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& o)
{
    if (!(cfg_ == o.cfg_)) throw config_error("skew addition: ring config mismatch");
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& o)
{
    if (!(cfg_ == o.cfg_)) throw config_error("skew subtraction: ring config mismatch");
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SkewPoly SkewPoly::operator-() const
{
    SkewPoly r(cfg_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

SkewPoly SkewPoly::scaled(const ParamScalar& c) const
{
    SkewPoly r(cfg_);
    if (c.is_zero()) return r;
    for (auto& [e, v] : terms_) {
        ParamScalar w = v * c;
        if (!w.is_zero()) r.terms_[e] = w;
    }
    return r;
}

int SkewPoly::degree() const
{
    int d = 0;
    for (auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0)));
    return d;
}

bool SkewPoly::is_polynomial() const
{
    for (auto& [e, c] : terms_)
        for (int v : e)
            if (v < 0) return false;
    return true;
}

bool SkewPoly::homogeneous() const
{
    if (terms_.empty()) return true;
    int d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
    for (auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

ParamScalar reorder_coeff_left(const RingConfig& cfg, const Exponents& e, int i, int k)
{
    long w = 0;
    for (int j = 0; j < i - 1; ++j) w += static_cast<long>(e[j]) * k;
    return unit_power(cfg, w);
}

SkewPoly normal_order(const std::vector<Letter>& word, const RingConfig& cfg)
{
    Exponents e(cfg.n, 0);
    long w = 0;
    for (const Letter& l : word) {
        check_index(cfg, l.var);
        // The new letter enters at the right and slides left past every
        // variable with a larger index.
        for (int j = l.var; j < cfg.n; ++j) w += static_cast<long>(e[j]) * l.exp;
        e[l.var - 1] += l.exp;
    }
    return SkewPoly::monomial(cfg, e, unit_power(cfg, w));
}

SkewPoly multiply(const SkewPoly& f, const SkewPoly& g)
{
    if (!(f.config() == g.config())) throw config_error("multiply: ring config mismatch");
    const RingConfig& cfg = f.config();
    SkewPoly r(cfg);
    const int n = cfg.n;
    for (auto& [e, c] : f.terms())
        for (auto& [d, b] : g.terms()) {
            long w = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) w += static_cast<long>(d[i]) * e[j];
            Exponents m(n);
            for (int i = 0; i < n; ++i) m[i] = e[i] + d[i];
            r.add_term(m, c * b * unit_power(cfg, w));
        }
    return r;
}

SkewPoly mul_var_left(int i, int k, const SkewPoly& f)
{
    const RingConfig& cfg = f.config();
    check_index(cfg, i);
    SkewPoly r(cfg);
    for (auto& [e, c] : f.terms()) {
        long w = 0;
        for (int j = 0; j < i - 1; ++j) w += static_cast<long>(e[j]) * k;
        Exponents m = e;
        m[i - 1] += k;
        r.add_term(m, c * unit_power(cfg, w));
    }
    return r;
}

SkewPoly mul_var_right(const SkewPoly& f, int i, int k)
{
    const RingConfig& cfg = f.config();
    check_index(cfg, i);
    SkewPoly r(cfg);
    for (auto& [e, c] : f.terms()) {
        long w = 0;
        for (int j = i; j < cfg.n; ++j) w += static_cast<long>(e[j]) * k;
        Exponents m = e;
        m[i - 1] += k;
        r.add_term(m, c * unit_power(cfg, w));
    }
    return r;
}

SkewPoly transposition(int i, int k, const SkewPoly& f)
{
    const RingConfig& cfg = f.config();
    check_index(cfg, i);
    check_index(cfg, k);
    if (i == k) throw std::out_of_range("transposition: indices must differ");
    SkewPoly r(cfg);
    for (auto& [e, c] : f.terms()) {
        Exponents m = e;
        std::swap(m[i - 1], m[k - 1]);
        r.add_term(m, c);
    }
    return r;
}

SkewPoly reflection(int i, int k, const SkewPoly& f)
{
    const RingConfig& cfg = f.config();
    if (cfg.commutation != Commutation::odd)
        throw config_error("reflection: defined in odd mode (use braid_sigma in q mode)");
    check_index(cfg, i);
    check_index(cfg, k);
    if (i == k) throw std::out_of_range("reflection: indices must differ");
    if (i > k) std::swap(i, k);
    SkewPoly r(cfg);
    for (auto& [e, c] : f.terms()) {
        long ei = e[i - 1], ek = e[k - 1];
        long mid = 0;
        for (int j = i; j < k - 1; ++j) mid += e[j];
        long sign_exp = ei * ek + (ei + ek) * mid;
        Exponents m = e;
        std::swap(m[i - 1], m[k - 1]);
        ParamScalar coeff = c;
        if (sign_exp % 2 != 0) coeff = -coeff;
        r.add_term(m, coeff);
    }
    return r;
}

SkewPoly shift_tau(int i, const SkewPoly& f)
{
    const RingConfig& cfg = f.config();
    check_index(cfg, i);
    SkewPoly r(cfg);
    for (auto& [e, c] : f.terms()) {
        ParamScalar coeff = c;
        if (((e[i - 1] % 2) + 2) % 2 != 0) coeff = -coeff;
        r.add_term(e, coeff);
    }
    return r;
}

SkewPoly braid_sigma(int i, const SkewPoly& f, bool inverse)
{
    const RingConfig& cfg = f.config();
    if (cfg.commutation != Commutation::q_mode)
        throw config_error("braid_sigma: q mode only");
    if (i < 1 || i + 1 > cfg.n) throw std::out_of_range("braid_sigma: index out of range");
    const int n = cfg.n;

    // Forward action on a normal-ordered monomial: map letters
    // x_i -> q x_{i+1}, x_{i+1} -> q^-1 x_i, x_j -> q^{sgn(j-i)} x_j,
    // then restore normal order (one adjacent block swap).
    auto forward_qexp = [&](const Exponents& e) -> long {
        long ei = e[i - 1], ei1 = e[i];
        long w = ei - ei1 + ei * ei1;
        for (int j = 0; j < i - 1; ++j) w -= e[j];
        for (int j = i + 1; j < n; ++j) w += e[j];
        return w;
    };

    SkewPoly r(cfg);
    for (auto& [e, c] : f.terms()) {
        Exponents m = e;
        std::swap(m[i - 1], m[i]);
        long w;
        if (!inverse) {
            w = forward_qexp(e);
        } else {
            // Two-sided operator inverse: sigma maps the swapped monomial
            // onto this one, so divide by that coefficient.
            w = -forward_qexp(m);
        }
        r.add_term(m, c * ParamScalar::q_power(static_cast<int>(w), cfg.modulus));
    }
    return r;
}

SkewPoly divide_square_diff(const SkewPoly& f, int i, int k)
{
    const RingConfig& cfg = f.config();
    if (cfg.commutation != Commutation::odd)
        throw config_error("divide_square_diff: odd mode only");
    check_index(cfg, i);
    check_index(cfg, k);
    if (i == k) throw std::out_of_range("divide_square_diff: indices must differ");
    if (f.is_zero()) return f;

    // Lift negative x_i / x_k exponents with central even powers first.
    int min_i = 0, min_k = 0;
    for (auto& [e, c] : f.terms()) {
        min_i = std::min(min_i, static_cast<int>(e[i - 1]));
        min_k = std::min(min_k, static_cast<int>(e[k - 1]));
    }
    int lift_i = (min_i < 0) ? (-min_i + 1) / 2 : 0;
    int lift_k = (min_k < 0) ? (-min_k + 1) / 2 : 0;
    if (lift_i > 0 || lift_k > 0) {
        SkewPoly lifted = mul_var_left(i, 2 * lift_i, mul_var_left(k, 2 * lift_k, f));
        SkewPoly g = divide_square_diff(lifted, i, k);
        return mul_var_left(i, -2 * lift_i, mul_var_left(k, -2 * lift_k, g));
    }

    // Synthetic division in the central variable x_i^2: repeatedly cancel
    // the term with the largest x_i exponent.
    SkewPoly rem = f;
    SkewPoly quot(cfg);
    while (!rem.is_zero()) {
        auto best = rem.terms().end();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
            if (best == rem.terms().end() || it->first[i - 1] > best->first[i - 1]) best = it;
        }
        if (best->first[i - 1] < 2)
            throw divisibility_error("divide_square_diff: not an exact multiple");
        Exponents ge = best->first;
        ge[i - 1] -= 2;
        ParamScalar gc = best->second;
        quot.add_term(ge, gc);
        // rem -= g_term * (x_i^2 - x_k^2); both squares are central.
        Exponents back_i = ge, back_k = ge;
        back_i[i - 1] += 2;
        back_k[k - 1] += 2;
        rem.add_term(back_i, -gc);
        rem.add_term(back_k, gc);
    }
    return quot;
}

SkewPoly divide_var_power(const SkewPoly& f, int i, int k)
{
    return mul_var_right(f, i, -k);
}

std::vector<Exponents> monomial_basis(int n, int max_deg)
{
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    for (int d = 0; d <= max_deg; ++d) rec(rec, 0, d);
    return out;
}

std::string SkewPoly::str() const
{
    if (terms_.empty()) return "0";
    // Flatten into (monomial, scalar-term) pairs; monomials in descending
    // lex order so lower-index variables print first.
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents& e = it->first;
        for (auto& [pe, coeff] : it->second.terms()) {
            Rational a = coeff;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::vector<std::string> factors;
            auto add_pow = [&factors](const std::string& name, int k) {
                if (k == 0) return;
                std::string s = name;
                if (k != 1) s += "^" + std::to_string(k);
                factors.push_back(s);
            };
            add_pow("q", pe.q);
            add_pow("t", pe.t);
            add_pow("u", pe.u);
            add_pow("alpha", pe.a);
            for (int v = 0; v < static_cast<int>(e.size()); ++v)
                add_pow("x" + std::to_string(v + 1), e[v]);
            if (a != 1 || factors.empty()) {
                os << a.get_str();
                if (!factors.empty()) os << "*";
            }
            for (size_t j = 0; j < factors.size(); ++j) {
                if (j) os << "*";
                os << factors[j];
            }
        }
    }
    return os.str();
}

} // namespace nilq
