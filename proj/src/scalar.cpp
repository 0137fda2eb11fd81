#include "nilq/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace nilq {

namespace {

// Divide p (dense, index = q-power) by the monic d in place, keep remainder.
void poly_rem(std::vector<mpq_class>& p, const std::vector<mpz_class>& d)
{
    const size_t dd = d.size() - 1;
    while (p.size() > dd) {
        mpq_class lead = p.back();
        size_t shift = p.size() - 1 - dd;
        if (lead != 0) {
            for (size_t j = 0; j <= dd; ++j) p[shift + j] -= lead * mpq_class(d[j]);
        }
        p.pop_back();
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b)
{
    if (a.empty() || b.empty()) return {};
    std::vector<mpq_class> r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Extended Euclid over Q[q]: returns (g, s) with s*a = g mod b, g = gcd(a,b).
std::pair<std::vector<mpq_class>, std::vector<mpq_class>> poly_half_egcd(
    std::vector<mpq_class> a, std::vector<mpq_class> b)
{
    std::vector<mpq_class> s0{mpq_class(1)}, s1;
    while (!b.empty()) {
        // a = q*b + r
        std::vector<mpq_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
        std::vector<mpq_class> r = a;
        while (r.size() >= b.size() && !r.empty()) {
            mpq_class c = r.back() / b.back();
            size_t shift = r.size() - b.size();
            q[shift] = c;
            for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        std::vector<mpq_class> s2 = s0;
        std::vector<mpq_class> qs = poly_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), mpq_class(0));
        for (size_t j = 0; j < qs.size(); ++j) s2[j] -= qs[j];
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
    }
    return {a, s0};
}

} // namespace

const std::vector<mpz_class>& cyclotomic(int m)
{
    static std::map<int, std::vector<mpz_class>> cache;
    if (m < 1) throw config_error("cyclotomic: modulus must be >= 1");
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // q^m - 1 divided by the product of Phi_d over proper divisors d of m.
    std::vector<mpq_class> num(m + 1, mpq_class(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& phi_d = cyclotomic(d);
        // exact division num /= phi_d
        std::vector<mpq_class> quot(num.size() - phi_d.size() + 1, mpq_class(0));
        std::vector<mpq_class> rem = num;
        while (rem.size() >= phi_d.size() && !rem.empty()) {
            mpq_class c = rem.back() / mpq_class(phi_d.back());
            size_t shift = rem.size() - phi_d.size();
            quot[shift] = c;
            for (size_t j = 0; j < phi_d.size(); ++j) rem[shift + j] -= c * mpq_class(phi_d[j]);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        num = quot;
    }
    std::vector<mpz_class> out;
    out.reserve(num.size());
    for (auto& c : num) {
        if (c.get_den() != 1) throw std::logic_error("cyclotomic: non-integer coefficient");
        out.push_back(c.get_num());
    }
    cache[m] = std::move(out);
    return cache[m];
}

int cyclotomic_degree(int m) { return static_cast<int>(cyclotomic(m).size()) - 1; }

void check_same_modulus(const ParamScalar& a, const ParamScalar& b)
{
    if (a.modulus() != b.modulus())
        throw config_error("scalar arithmetic: cyclotomic modulus mismatch");
}

void ParamScalar::reduce_()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    if (!modulus_) return;
    const int m = *modulus_;
    const auto& phi = cyclotomic(m);

    // Group by the (t,u,alpha) profile, reduce the q-part mod Phi_m.
    // q^m = 1 in the quotient, so negative powers fold in first.
    std::map<std::tuple<int32_t, int32_t, int32_t>, std::vector<mpq_class>> groups;
    for (auto& [e, c] : terms_) {
        int eq = ((e.q % m) + m) % m;
        auto& poly = groups[{e.t, e.u, e.a}];
        if (static_cast<int>(poly.size()) <= eq) poly.resize(eq + 1, mpq_class(0));
        poly[eq] += c;
    }
    terms_.clear();
    for (auto& [key, poly] : groups) {
        poly_rem(poly, phi);
        for (int eq = 0; eq < static_cast<int>(poly.size()); ++eq) {
            if (poly[eq] == 0) continue;
            ParamExp e{eq, std::get<0>(key), std::get<1>(key), std::get<2>(key)};
            terms_[e] = poly[eq];
        }
    }
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o)
{
    check_same_modulus(*this, o);
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_[e] = c;
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o)
{
    check_same_modulus(*this, o);
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_[e] = -c;
        else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const
{
    check_same_modulus(*this, o);
    ParamScalar r;
    r.modulus_ = modulus_;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            ParamExp e{e1.q + e2.q, e1.t + e2.t, e1.u + e2.u, e1.a + e2.a};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_[e] = c1 * c2;
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    r.reduce_();
    return r;
}

ParamScalar ParamScalar::operator-() const
{
    ParamScalar r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ParamScalar& ParamScalar::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

ParamScalar ParamScalar::inverse() const
{
    if (is_zero()) throw unit_error("inverse of zero");
    if (terms_.size() == 1) {
        const auto& [e, c] = *terms_.begin();
        // With a modulus set, the negative q power folds back in via q^m = 1.
        return ParamScalar(Rational(1) / c, ParamExp{-e.q, -e.t, -e.u, -e.a}, modulus_);
    }
    if (!modulus_) throw unit_error("inverse: not a monomial and no cyclotomic modulus set");
    // Invertible in Q[q]/Phi_m when the element involves only q.
    std::vector<mpq_class> poly;
    for (auto& [e, c] : terms_) {
        if (e.t != 0 || e.u != 0 || e.a != 0)
            throw unit_error("inverse: element mixes q with other parameters");
        if (static_cast<int>(poly.size()) <= e.q) poly.resize(e.q + 1, mpq_class(0));
        poly[e.q] = c;
    }
    const auto& phi = cyclotomic(*modulus_);
    std::vector<mpq_class> phiq;
    phiq.reserve(phi.size());
    for (auto& z : phi) phiq.push_back(mpq_class(z));
    auto [g, s] = poly_half_egcd(poly, phiq);
    if (g.size() != 1) throw unit_error("inverse: element not a unit in the cyclotomic quotient");
    ParamScalar r;
    r.modulus_ = modulus_;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        if (s[i] == 0) continue;
        r.terms_[ParamExp{i, 0, 0, 0}] = s[i] / g[0];
    }
    r.reduce_();
    return r;
}

ParamScalar ParamScalar::with_modulus(std::optional<int> m) const
{
    ParamScalar r;
    r.modulus_ = m;
    r.terms_ = terms_;
    r.reduce_();
    return r;
}

ParamScalar ParamScalar::substitute_u_alpha_inv() const
{
    ParamScalar r;
    r.modulus_ = modulus_;
    for (auto& [e, c] : terms_) {
        ParamExp f{e.q, e.t, 0, e.a - e.u};
        auto it = r.terms_.find(f);
        if (it == r.terms_.end())
            r.terms_[f] = c;
        else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    r.reduce_();
    return r;
}

std::string ParamScalar::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Rational a = c;
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
        auto add_pow = [&factors](const char* name, int k) {
            if (k == 0) return;
            std::string f = name;
            if (k != 1) f += "^" + std::to_string(k);
            factors.push_back(f);
        };
        add_pow("q", e.q);
        add_pow("t", e.t);
        add_pow("u", e.u);
        add_pow("alpha", e.a);
        if (a != 1 || factors.empty()) {
            os << a.get_str();
            if (!factors.empty()) os << "*";
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

ParamScalar gaussian_binomial(int n, int k)
{
    if (k < 0 || k > n || n < 0) return ParamScalar::zero();
    std::vector<ParamScalar> row(k + 1, ParamScalar::zero());
    row[0] = ParamScalar::one();
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            // [i j] = q^j [i-1 j] + [i-1 j-1]
            row[j] = ParamScalar::q_power(j) * row[j] + row[j - 1];
        }
    }
    return row[k];
}

ParamScalar gaussian_binomial_tuple_sum(int n, int k)
{
    if (k < 0 || k > n || n < 0) return ParamScalar::zero();
    ParamScalar total = ParamScalar::zero();
    // (k+1)-tuples of non-negative integers summing to n-k; weight
    // k*a_1 + (k-1)*a_2 + ... + 1*a_k + 0*a_{k+1}.
    const int target = n - k;
    auto rec = [&](auto&& self, int pos, int rem, int weight) -> void {
        if (pos == k) {
            total += ParamScalar::q_power(weight);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            self(self, pos + 1, rem - v, weight + (k - pos) * v);
        }
    };
    rec(rec, 0, target, 0);
    return total;
}

} // namespace nilq
