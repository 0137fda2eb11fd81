#include "nilq/qops.hpp"

namespace nilq {

void FreePoly::add_term(const Word& w, const ParamScalar& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreePoly& FreePoly::operator+=(const FreePoly& o)
{
    if (!(cfg_ == o.cfg_)) throw config_error("free addition: ring config mismatch");
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o)
{
    if (!(cfg_ == o.cfg_)) throw config_error("free subtraction: ring config mismatch");
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreePoly FreePoly::scaled(const ParamScalar& c) const
{
    FreePoly r(cfg_);
    if (c.is_zero()) return r;
    for (auto& [w, v] : terms_) {
        ParamScalar p = v * c;
        if (!p.is_zero()) r.terms_[w] = p;
    }
    return r;
}

FreePoly FreePoly::lift(const SkewPoly& f)
{
    FreePoly r(f.config());
    for (auto& [e, c] : f.terms()) {
        Word w;
        for (int v = 0; v < static_cast<int>(e.size()); ++v) {
            if (e[v] < 0) throw config_error("FreePoly::lift: polynomial input required");
            for (int j = 0; j < e[v]; ++j) w.push_back(static_cast<uint8_t>(v + 1));
        }
        r.add_term(w, c);
    }
    return r;
}

SkewPoly FreePoly::normalize() const
{
    SkewPoly r(cfg_);
    for (auto& [w, c] : terms_) {
        std::vector<Letter> letters;
        letters.reserve(w.size());
        for (uint8_t v : w) letters.push_back(Letter{v, 1});
        SkewPoly m = normal_order(letters, cfg_);
        r += m.scaled(c);
    }
    return r;
}

FreePoly free_mul_var(int i, const FreePoly& f)
{
    const RingConfig& cfg = f.config();
    if (i < 1 || i > cfg.n) throw std::out_of_range("free_mul_var: index out of range");
    FreePoly r(cfg);
    for (auto& [w, c] : f.terms()) {
        Word m;
        m.reserve(w.size() + 1);
        m.push_back(static_cast<uint8_t>(i));
        m.insert(m.end(), w.begin(), w.end());
        r.add_term(m, c);
    }
    return r;
}

namespace {

// sigma_i on a single letter: scalar times a letter.
std::pair<int, int> sigma_letter(int i, int dir, int v)
{
    // returns (q exponent, image letter)
    if (dir > 0) {
        if (v == i) return {1, i + 1};
        if (v == i + 1) return {-1, i};
        if (v > i + 1) return {1, v};
        return {-1, v};
    }
    if (v == i) return {1, i + 1};
    if (v == i + 1) return {-1, i};
    if (v > i + 1) return {-1, v};
    return {1, v};
}

} // namespace

FreePoly free_sigma(int i, int dir, const FreePoly& f)
{
    const RingConfig& cfg = f.config();
    if (i < 1 || i + 1 > cfg.n) throw std::out_of_range("free_sigma: index out of range");
    FreePoly r(cfg);
    for (auto& [w, c] : f.terms()) {
        Word m;
        m.reserve(w.size());
        int qe = 0;
        for (uint8_t v : w) {
            auto [e, img] = sigma_letter(i, dir, v);
            qe += e;
            m.push_back(static_cast<uint8_t>(img));
        }
        r.add_term(m, c * ParamScalar::q_power(qe, cfg.modulus));
    }
    return r;
}

namespace {

// Recursive word peel: del(x_i) = q, del(x_{i+1}) = -1, 0 otherwise, with
// del(l w) = del(l) w + sigma(l) del(w).
void peel_word(int i, const Word& w, size_t pos, const ParamScalar& carry, FreePoly& out,
               const RingConfig& cfg)
{
    if (pos == w.size()) return;
    int v = w[pos];
    if (v == i || v == i + 1) {
        ParamScalar c = carry;
        if (v == i)
            c *= ParamScalar::q_power(1, cfg.modulus);
        else
            c *= ParamScalar::integer(-1, cfg.modulus);
        Word rest(w.begin(), w.end());
        rest.erase(rest.begin() + pos);
        out.add_term(rest, c);
    }
    auto [e, img] = sigma_letter(i, +1, v);
    // carry sigma over this letter, rewrite it in place, continue peeling.
    if (img == v && e == 0) {
        peel_word(i, w, pos + 1, carry, out, cfg);
    } else {
        Word m = w;
        m[pos] = static_cast<uint8_t>(img);
        peel_word(i, m, pos + 1, carry * ParamScalar::q_power(e, cfg.modulus), out, cfg);
    }
}

} // namespace

FreePoly free_qdel(int i, const FreePoly& f)
{
    const RingConfig& cfg = f.config();
    if (i < 1 || i + 1 > cfg.n) throw std::out_of_range("free_qdel: index out of range");
    FreePoly r(cfg);
    for (auto& [w, c] : f.terms()) peel_word(i, w, 0, c, r, cfg);
    return r;
}

SkewPoly q_divided_difference(int i, const SkewPoly& f)
{
    if (f.config().commutation != Commutation::q_mode)
        throw config_error("q_divided_difference: q mode required");
    return free_qdel(i, FreePoly::lift(f)).normalize();
}

SkewPoly elementary_qsym(int k, bool twisted, const QPolyContext& ctx)
{
    const RingConfig& cfg = ctx.config;
    const int n = cfg.n;
    SkewPoly out(cfg);
    if (k < 0 || k > n) return out;
    if (k == 0) return SkewPoly::one(cfg);
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            Exponents e(n, 0);
            int qe = 0;
            for (int j : idx) {
                e[j - 1] = 1;
                qe += j - 1;
            }
            out.add_term(e, twisted ? ParamScalar::q_power(qe, cfg.modulus)
                                    : ParamScalar::one(cfg.modulus));
            return;
        }
        for (int j = start; j <= n - (k - pos - 1); ++j) {
            idx[pos] = j;
            self(self, pos + 1, j + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

SkewPoly qdel_power_closed_form(int i, int k, bool upper, const QPolyContext& ctx)
{
    const RingConfig& cfg = ctx.config;
    SkewPoly out(cfg);
    if (k < 1) return out;
    for (int j = 0; j <= k - 1; ++j) {
        Exponents e(cfg.n, 0);
        e[i - 1] = j;
        e[i] = k - 1 - j;
        if (!upper) {
            // del_i(x_i^k) = sum q^{jk - 2j - j^2 + k} x_i^j x_{i+1}^{k-1-j}
            out.add_term(e, ParamScalar::q_power(j * k - 2 * j - j * j + k, cfg.modulus));
        } else {
            // del_i(x_{i+1}^k) = -sum q^{-j} x_i^j x_{i+1}^{k-1-j}
            out.add_term(e, -ParamScalar::q_power(-j, cfg.modulus));
        }
    }
    return out;
}

} // namespace nilq
