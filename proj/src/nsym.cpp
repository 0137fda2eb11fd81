#include "nilq/nsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilq {

int comp_weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

Composition comp_normalize(const Composition& c)
{
    Composition out;
    out.reserve(c.size());
    for (int p : c) {
        if (p < 0) throw config_error("composition entries must be non-negative");
        if (p > 0) out.push_back(p);
    }
    return out;
}

NSymElement NSymElement::one(std::optional<int> modulus)
{
    NSymElement e(modulus);
    e.add_term({}, ParamScalar::one(modulus));
    return e;
}

NSymElement NSymElement::h(const Composition& alpha, std::optional<int> modulus)
{
    NSymElement e(modulus);
    e.add_term(comp_normalize(alpha), ParamScalar::one(modulus));
    return e;
}

void NSymElement::add_term(const Composition& c, const ParamScalar& coeff)
{
    if (coeff.is_zero()) return;
    if (coeff.modulus() != modulus_) throw config_error("nsym term: modulus mismatch");
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_[c] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NSymElement& NSymElement::operator+=(const NSymElement& o)
{
    if (modulus_ != o.modulus_) throw config_error("nsym addition: modulus mismatch");
    for (auto& [c, v] : o.terms_) add_term(c, v);
    return *this;
}

NSymElement& NSymElement::operator-=(const NSymElement& o)
{
    if (modulus_ != o.modulus_) throw config_error("nsym subtraction: modulus mismatch");
    for (auto& [c, v] : o.terms_) add_term(c, -v);
    return *this;
}

NSymElement NSymElement::scaled(const ParamScalar& c) const
{
    NSymElement r(modulus_);
    if (c.is_zero()) return r;
    for (auto& [w, v] : terms_) {
        ParamScalar p = v * c;
        if (!p.is_zero()) r.terms_[w] = p;
    }
    return r;
}

int NSymElement::max_degree() const
{
    int d = 0;
    for (auto& [c, v] : terms_) d = std::max(d, comp_weight(c));
    return d;
}

NSymElement NSymElement::graded_part(int d) const
{
    NSymElement r(modulus_);
    for (auto& [c, v] : terms_)
        if (comp_weight(c) == d) r.terms_[c] = v;
    return r;
}

std::string NSymElement::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [c, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")*";
        if (c.empty()) {
            os << "1";
        } else {
            os << "h[";
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << ",";
                os << c[i];
            }
            os << "]";
        }
    }
    return os.str();
}

NSymElement nsym_product(const NSymElement& a, const NSymElement& b)
{
    if (a.modulus() != b.modulus()) throw config_error("nsym product: modulus mismatch");
    NSymElement r(a.modulus());
    for (auto& [c1, v1] : a.terms())
        for (auto& [c2, v2] : b.terms()) {
            Composition c = c1;
            c.insert(c.end(), c2.begin(), c2.end());
            r.add_term(c, v1 * v2);
        }
    return r;
}

void TensorElement::add_term(const Key& k, const ParamScalar& coeff)
{
    if (coeff.is_zero()) return;
    if (coeff.modulus() != modulus_) throw config_error("tensor term: modulus mismatch");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    if (modulus_ != o.modulus_) throw config_error("tensor addition: modulus mismatch");
    for (auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    if (modulus_ != o.modulus_) throw config_error("tensor subtraction: modulus mismatch");
    for (auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b)
{
    if (a.modulus() != b.modulus()) throw config_error("tensor product: modulus mismatch");
    TensorElement r(a.modulus());
    for (auto& [k1, v1] : a.terms())
        for (auto& [k2, v2] : b.terms()) {
            int twist = comp_weight(k1.second) * comp_weight(k2.first);
            Composition left = k1.first;
            left.insert(left.end(), k2.first.begin(), k2.first.end());
            Composition right = k1.second;
            right.insert(right.end(), k2.second.begin(), k2.second.end());
            r.add_term({left, right}, v1 * v2 * ParamScalar::q_power(twist, a.modulus()));
        }
    return r;
}

TensorElement coproduct(const NSymElement& a)
{
    TensorElement r(a.modulus());
    for (auto& [c, v] : a.terms()) {
        TensorElement acc(a.modulus());
        acc.add_term({{}, {}}, ParamScalar::one(a.modulus()));
        for (int part : c) {
            TensorElement dh(a.modulus());
            for (int k = 0; k <= part; ++k) {
                Composition l = (k > 0) ? Composition{k} : Composition{};
                Composition rr = (part - k > 0) ? Composition{part - k} : Composition{};
                dh.add_term({l, rr}, ParamScalar::one(a.modulus()));
            }
            acc = tensor_product(acc, dh);
        }
        for (auto& [k, w] : acc.terms()) r.add_term(k, w * v);
    }
    return r;
}

ParamScalar counit(const NSymElement& a)
{
    auto it = a.terms().find(Composition{});
    return it == a.terms().end() ? ParamScalar::zero(a.modulus()) : it->second;
}

ParamScalar pairing_matrix(const Composition& lambda, const Composition& mu,
                           std::optional<int> modulus)
{
    if (comp_weight(lambda) != comp_weight(mu)) return ParamScalar::zero(modulus);
    if (lambda.empty()) return ParamScalar::one(modulus);
    const int rows = static_cast<int>(lambda.size());
    const int cols = static_cast<int>(mu.size());

    ParamScalar total = ParamScalar::zero(modulus);
    std::vector<std::vector<int>> a(rows, std::vector<int>(cols, 0));
    std::vector<int> col_left(mu.begin(), mu.end());

    // Crossing count of the minimal diagram of a matrix: strands from a
    // higher row to a lower column cross strands from a lower row to a
    // higher column exactly once per pair.
    auto crossings = [&]() {
        long w = 0;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                for (int i2 = i + 1; i2 < rows; ++i2)
                    for (int j2 = 0; j2 < j; ++j2) w += static_cast<long>(a[i][j]) * a[i2][j2];
            }
        return w;
    };

    auto rec = [&](auto&& self, int i, int j, int row_left) -> void {
        if (i == rows) {
            total += ParamScalar::q_power(static_cast<int>(crossings()), modulus);
            return;
        }
        if (j == cols) {
            if (row_left == 0) self(self, i + 1, 0, i + 1 < rows ? lambda[i + 1] : 0);
            return;
        }
        int hi = std::min(row_left, col_left[j]);
        for (int v = 0; v <= hi; ++v) {
            a[i][j] = v;
            col_left[j] -= v;
            self(self, i, j + 1, row_left - v);
            col_left[j] += v;
            a[i][j] = 0;
        }
    };
    rec(rec, 0, 0, lambda[0]);
    return total;
}

namespace {

std::vector<int> young_generators(const Composition& c)
{
    // Adjacent transposition positions p (1-based) inside the blocks of c.
    std::vector<int> gens;
    int pos = 0;
    for (int part : c) {
        for (int p = pos + 1; p < pos + part; ++p) gens.push_back(p);
        pos += part;
    }
    return gens;
}

long inversions(const std::vector<int>& w)
{
    long inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

} // namespace

ParamScalar pairing_coset_oracle(const Composition& lambda, const Composition& mu,
                                 std::optional<int> modulus)
{
    const int n = comp_weight(lambda);
    if (n != comp_weight(mu)) return ParamScalar::zero(modulus);
    if (n == 0) return ParamScalar::one(modulus);
    if (n > 8) throw config_error("pairing_coset_oracle: factorial enumeration bound exceeded");

    std::vector<int> left_gens = young_generators(lambda);
    std::vector<int> right_gens = young_generators(mu);

    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::map<std::vector<int>, bool> visited;

    ParamScalar total = ParamScalar::zero(modulus);
    std::vector<int> w = base;
    do {
        if (visited.count(w)) continue;
        // BFS over the double coset S_lambda w S_mu.
        long min_len = inversions(w);
        std::vector<std::vector<int>> queue{w};
        visited[w] = true;
        while (!queue.empty()) {
            std::vector<int> cur = queue.back();
            queue.pop_back();
            min_len = std::min(min_len, inversions(cur));
            for (int p : left_gens) {
                // left multiplication swaps the values p and p+1
                std::vector<int> nxt = cur;
                for (auto& v : nxt) {
                    if (v == p)
                        v = p + 1;
                    else if (v == p + 1)
                        v = p;
                }
                if (!visited.count(nxt)) {
                    visited[nxt] = true;
                    queue.push_back(nxt);
                }
            }
            for (int p : right_gens) {
                // right multiplication swaps the positions p and p+1
                std::vector<int> nxt = cur;
                std::swap(nxt[p - 1], nxt[p]);
                if (!visited.count(nxt)) {
                    visited[nxt] = true;
                    queue.push_back(nxt);
                }
            }
        }
        total += ParamScalar::q_power(static_cast<int>(min_len), modulus);
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
}

ParamScalar pairing(const NSymElement& a, const NSymElement& b, bool use_oracle)
{
    if (a.modulus() != b.modulus()) throw config_error("pairing: modulus mismatch");
    ParamScalar total = ParamScalar::zero(a.modulus());
    for (auto& [la, va] : a.terms())
        for (auto& [mu, vb] : b.terms()) {
            if (comp_weight(la) != comp_weight(mu)) continue;
            ParamScalar p = use_oracle ? pairing_coset_oracle(la, mu, a.modulus())
                                       : pairing_matrix(la, mu, a.modulus());
            total += va * vb * p;
        }
    return total;
}

ParamScalar tensor_pairing(const TensorElement& a, const TensorElement& b, bool use_oracle)
{
    if (a.modulus() != b.modulus()) throw config_error("tensor_pairing: modulus mismatch");
    auto basis_pair = [&](const Composition& x, const Composition& y) {
        return use_oracle ? pairing_coset_oracle(x, y, a.modulus())
                          : pairing_matrix(x, y, a.modulus());
    };
    ParamScalar total = ParamScalar::zero(a.modulus());
    for (auto& [k1, v1] : a.terms())
        for (auto& [k2, v2] : b.terms()) {
            if (comp_weight(k1.first) != comp_weight(k2.first)) continue;
            if (comp_weight(k1.second) != comp_weight(k2.second)) continue;
            total += v1 * v2 * basis_pair(k1.first, k2.first) * basis_pair(k1.second, k2.second);
        }
    return total;
}

std::vector<Composition> compositions_of(int d)
{
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

NSymElement elementary_e(int k, std::optional<int> modulus)
{
    if (k < 0) return NSymElement::zero(modulus);
    if (k == 0) return NSymElement::one(modulus);
    NSymElement e(modulus);
    for (const Composition& alpha : compositions_of(k)) {
        int len = static_cast<int>(alpha.size());
        Rational sign(((k - len) % 2 == 0) ? 1 : -1);
        e.add_term(alpha, ParamScalar(sign, modulus));
    }
    return e.scaled(ParamScalar::q_power(-(k * (k - 1)) / 2, modulus));
}

namespace {

ParamScalar insertion_recursive(const Composition& lambda, int k, const NSymElement& x,
                                const Composition& prefix)
{
    auto modulus = x.modulus();
    if (k < 0) return ParamScalar::zero(modulus);
    if (lambda.empty()) {
        if (k > 0) return ParamScalar::zero(modulus);
        return pairing(NSymElement::h(prefix, modulus), x);
    }
    const int n = lambda[0];
    Composition rest(lambda.begin() + 1, lambda.end());

    ParamScalar out = ParamScalar::zero(modulus);
    // strand from the leading platform into the e_k block
    if (k >= 1) {
        Composition pre1 = prefix;
        if (n - 1 > 0) pre1.push_back(n - 1);
        out += ParamScalar::q_power((k - 1) * (n - 1), modulus) *
               insertion_recursive(rest, k - 1, x, pre1);
    }
    // no strand into the e_k block
    Composition pre2 = prefix;
    pre2.push_back(n);
    out += ParamScalar::q_power(k * n, modulus) * insertion_recursive(rest, k, x, pre2);
    return out;
}

ParamScalar insertion_explicit(const Composition& lambda, int k, const NSymElement& x,
                               const Composition& prefix)
{
    auto modulus = x.modulus();
    const int z = static_cast<int>(lambda.size());
    if (k < 0 || k > z) return ParamScalar::zero(modulus);
    ParamScalar out = ParamScalar::zero(modulus);
    // binary sequences of length z with k ones
    std::vector<int> sigma(z, 0);
    auto rec = [&](auto&& self, int pos, int ones) -> void {
        if (z - pos < k - ones) return;
        if (pos == z) {
            if (ones != k) return;
            long weight = 0;
            int running = 0;
            Composition terminal = prefix;
            for (int j = 0; j < z; ++j) {
                running += sigma[j];
                weight += static_cast<long>(lambda[j] - sigma[j]) * (k - running);
                if (lambda[j] - sigma[j] > 0) terminal.push_back(lambda[j] - sigma[j]);
            }
            out += ParamScalar::q_power(static_cast<int>(weight), modulus) *
                   pairing(NSymElement::h(terminal, modulus), x);
            return;
        }
        sigma[pos] = 0;
        self(self, pos + 1, ones);
        if (ones < k) {
            sigma[pos] = 1;
            self(self, pos + 1, ones + 1);
            sigma[pos] = 0;
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace

ParamScalar insertion_pairing(const Composition& lambda, int k, const NSymElement& x,
                              const Composition& prefix, InsertionRoute route)
{
    Composition l = comp_normalize(lambda);
    Composition p = comp_normalize(prefix);
    switch (route) {
    case InsertionRoute::recursive:
        return insertion_recursive(l, k, x, p);
    case InsertionRoute::explicit_formula:
        return insertion_explicit(l, k, x, p);
    case InsertionRoute::direct:
        if (!p.empty())
            throw config_error("insertion_pairing: direct route requires an empty prefix");
        return pairing(NSymElement::h(l, x.modulus()),
                       nsym_product(elementary_e(k, x.modulus()), x));
    }
    throw std::logic_error("insertion_pairing: unknown route");
}

bool radical_equiv(const NSymElement& a, const NSymElement& b, int max_deg)
{
    if (a.modulus() != b.modulus()) throw config_error("radical_equiv: modulus mismatch");
    NSymElement diff = a - b;
    if (diff.is_zero()) return true;
    if (diff.max_degree() > max_deg)
        throw config_error("radical_equiv: difference exceeds the stated degree bound");
    for (int d = 0; d <= diff.max_degree(); ++d) {
        NSymElement part = diff.graded_part(d);
        if (part.is_zero()) continue;
        for (const Composition& mu : compositions_of(d)) {
            if (!pairing(part, NSymElement::h(mu, a.modulus())).is_zero()) return false;
        }
    }
    return true;
}

} // namespace nilq
