#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilq/scalar.hpp"

namespace nilq {

/// Composition: finite sequence of positive integers. The empty composition
/// is the unit word.
using Composition = std::vector<int>;

int comp_weight(const Composition& c);

/// Drop zero entries (transient h_0 factors from the insertion formulas).
Composition comp_normalize(const Composition& c);

/// Linear combination of compositions (words in the h generators).
class NSymElement {
public:
    using TermMap = std::map<Composition, ParamScalar>;

    NSymElement() = default;
    explicit NSymElement(std::optional<int> modulus) : modulus_(modulus) {}

    static NSymElement zero(std::optional<int> modulus = std::nullopt)
    {
        return NSymElement(modulus);
    }
    static NSymElement one(std::optional<int> modulus = std::nullopt);
    /// h_alpha (entries must be positive; zeros are dropped).
    static NSymElement h(const Composition& alpha, std::optional<int> modulus = std::nullopt);

    const TermMap& terms() const { return terms_; }
    std::optional<int> modulus() const { return modulus_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Composition& c, const ParamScalar& coeff);
    NSymElement& operator+=(const NSymElement& o);
    NSymElement& operator-=(const NSymElement& o);
    friend NSymElement operator+(NSymElement a, const NSymElement& b) { return a += b; }
    friend NSymElement operator-(NSymElement a, const NSymElement& b) { return a -= b; }
    friend bool operator==(const NSymElement& a, const NSymElement& b)
    {
        return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
    }
    NSymElement scaled(const ParamScalar& c) const;

    int max_degree() const;
    NSymElement graded_part(int d) const;

    std::string str() const;

private:
    TermMap terms_;
    std::optional<int> modulus_;
};

/// Concatenation product, bilinear.
NSymElement nsym_product(const NSymElement& a, const NSymElement& b);

/// Element of the twisted tensor square.
class TensorElement {
public:
    using Key = std::pair<Composition, Composition>;
    using TermMap = std::map<Key, ParamScalar>;

    TensorElement() = default;
    explicit TensorElement(std::optional<int> modulus) : modulus_(modulus) {}

    const TermMap& terms() const { return terms_; }
    std::optional<int> modulus() const { return modulus_; }

    void add_term(const Key& k, const ParamScalar& coeff);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend bool operator==(const TensorElement& a, const TensorElement& b)
    {
        return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
    }
    bool is_zero() const { return terms_.empty(); }

private:
    TermMap terms_;
    std::optional<int> modulus_;
};

/// Twisted multiplication (w (x) x)(y (x) z) = q^{deg x deg y} (wy (x) xz).
TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

/// Coproduct: h_n -> sum h_k (x) h_{n-k}, extended as a q-algebra map.
TensorElement coproduct(const NSymElement& a);

/// Counit: coefficient of the empty composition.
ParamScalar counit(const NSymElement& a);

/// Bilinear form on basis words via the crossing-matrix model: matrices
/// with row sums lambda, column sums mu, weight q^{sum of inversion pairs}.
ParamScalar pairing_matrix(const Composition& lambda, const Composition& mu,
                           std::optional<int> modulus = std::nullopt);

/// Independent route: minimal double-coset representatives in S_n.
ParamScalar pairing_coset_oracle(const Composition& lambda, const Composition& mu,
                                 std::optional<int> modulus = std::nullopt);

/// Bilinear extension over elements (mixed degrees pair to zero).
ParamScalar pairing(const NSymElement& a, const NSymElement& b, bool use_oracle = false);

/// (w (x) x, y (x) z) = (w,y)(x,z).
ParamScalar tensor_pairing(const TensorElement& a, const TensorElement& b,
                           bool use_oracle = false);

/// e_k = q^{-C(k,2)} sum over compositions of k of (-1)^{len-k} h_alpha.
NSymElement elementary_e(int k, std::optional<int> modulus = std::nullopt);

enum class InsertionRoute { recursive, explicit_formula, direct };

/// (h_lambda, e_k x) with a composition prefix inserted into every terminal
/// bilinear form. The direct route expands e_k and uses the pairing and is
/// only available with an empty prefix.
ParamScalar insertion_pairing(const Composition& lambda, int k, const NSymElement& x,
                              const Composition& prefix, InsertionRoute route);

/// True iff (a - b, h_mu) = 0 for every composition mu of each degree
/// <= max_deg.
bool radical_equiv(const NSymElement& a, const NSymElement& b, int max_deg);

/// All compositions of d (2^{d-1} of them; just the empty one for d = 0).
std::vector<Composition> compositions_of(int d);

} // namespace nilq
