#include "nilq/parse.hpp"

#include <cctype>

namespace nilq {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }
    size_t pos() const { return pos_; }

    bool at_ident()
    {
        skip_ws();
        return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
    }
    std::string ident()
    {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
        if (start == pos_) fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }
    bool at_digit()
    {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    mpz_class integer()
    {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }
    int small_int()
    {
        mpz_class v = integer();
        if (!v.fits_sint_p()) fail("integer out of range");
        return static_cast<int>(v.get_si());
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

int parse_exponent(Cursor& c)
{
    if (c.accept('^')) return c.small_int();
    return 1;
}

Rational parse_rational(Cursor& c)
{
    mpz_class num = c.integer();
    if (c.accept('/')) {
        mpz_class den = c.integer();
        if (den == 0) c.fail("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return Rational(num);
}

// ------------------------------------------------------------- polynomials

struct PolyFactorSet {
    Rational coeff = 1;
    ParamExp params;
    Exponents exps;
};

void parse_poly_factor(Cursor& c, PolyFactorSet& acc, const RingConfig& cfg)
{
    if (c.at_digit() || c.peek() == '-' || c.peek() == '+') {
        acc.coeff *= parse_rational(c);
        return;
    }
    if (!c.at_ident()) c.fail("expected factor");
    size_t at = c.pos();
    std::string name = c.ident();
    if (name == "q") {
        acc.params.q += parse_exponent(c);
        return;
    }
    if (name == "t") {
        acc.params.t += parse_exponent(c);
        return;
    }
    if (name == "u") {
        acc.params.u += parse_exponent(c);
        return;
    }
    if (name == "alpha") {
        acc.params.a += parse_exponent(c);
        return;
    }
    if (name.size() > 1 && name[0] == 'x') {
        int idx = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw parse_error("bad variable name '" + name + "'", at);
            idx = idx * 10 + (name[i] - '0');
        }
        if (idx < 1 || idx > cfg.n)
            throw parse_error("variable index out of range for n=" + std::to_string(cfg.n), at);
        acc.exps[idx - 1] += parse_exponent(c);
        return;
    }
    throw parse_error("unknown factor '" + name + "'", at);
}

} // namespace

SkewPoly parse_poly(const std::string& text, const RingConfig& cfg)
{
    Cursor c(text);
    SkewPoly out(cfg);
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (c.accept('+'))
            sign = 1;
        else if (!first)
            c.fail("expected '+' or '-'");
        PolyFactorSet f;
        f.exps.assign(cfg.n, 0);
        parse_poly_factor(c, f, cfg);
        while (c.accept('*')) parse_poly_factor(c, f, cfg);
        ParamScalar coeff(f.coeff * sign, f.params, cfg.modulus);
        out.add_term(f.exps, coeff);
        first = false;
    }
    if (first) Cursor(text).fail("empty polynomial");
    return out;
}

// --------------------------------------------------------------- operators

namespace {

OperatorExpr parse_op_expr(Cursor& c);

std::vector<int> parse_int_args(Cursor& c, size_t min_args, size_t max_args)
{
    c.expect('(');
    std::vector<int> args;
    if (!c.accept(')')) {
        args.push_back(c.small_int());
        while (c.accept(',')) args.push_back(c.small_int());
        c.expect(')');
    }
    if (args.size() < min_args || args.size() > max_args)
        c.fail("wrong number of arguments");
    return args;
}

OperatorExpr parse_op_factor(Cursor& c)
{
    if (c.accept('(')) {
        OperatorExpr e = parse_op_expr(c);
        c.expect(')');
        return e;
    }
    if (c.at_digit()) {
        Rational r = parse_rational(c);
        return OperatorExpr::scale(ParamScalar(r), OperatorExpr::identity());
    }
    if (!c.at_ident()) c.fail("expected operator or scalar");
    size_t at = c.pos();
    std::string name = c.ident();

    auto scalar_pow = [&](char which) {
        int k = parse_exponent(c);
        ParamExp e;
        if (which == 'q') e.q = k;
        if (which == 't') e.t = k;
        if (which == 'u') e.u = k;
        if (which == 'a') e.a = k;
        return OperatorExpr::scale(ParamScalar(Rational(1), e), OperatorExpr::identity());
    };
    if (name == "q") return scalar_pow('q');
    if (name == "t") return scalar_pow('t');
    if (name == "u") return scalar_pow('u');
    if (name == "alpha") return scalar_pow('a');

    if (name == "id") return OperatorExpr::identity();
    if (name == "r2") return OperatorExpr::generator(GenKind::r2);
    if (name == "euler") return OperatorExpr::generator(GenKind::euler);
    if (name == "lap") return OperatorExpr::generator(GenKind::lap_delta);

    if (name == "com" || name == "acom") {
        c.expect('(');
        OperatorExpr a = parse_op_expr(c);
        c.expect(',');
        OperatorExpr b = parse_op_expr(c);
        c.expect(')');
        return name == "com" ? OperatorExpr::commutator(std::move(a), std::move(b))
                             : OperatorExpr::anticommutator(std::move(a), std::move(b));
    }

    auto one_or_two = [&](GenKind kind, bool pair_allowed) {
        auto args = parse_int_args(c, 1, pair_allowed ? 2 : 1);
        int i = args[0];
        int k = args.size() > 1 ? args[1] : 0;
        return OperatorExpr::generator(kind, i, k);
    };
    if (name == "x") return one_or_two(GenKind::mul_x, false);
    if (name == "xinv") return one_or_two(GenKind::mul_x_inv, false);
    if (name == "s") {
        auto args = parse_int_args(c, 2, 2);
        return OperatorExpr::generator(GenKind::reflect, args[0], args[1]);
    }
    if (name == "swap") {
        auto args = parse_int_args(c, 2, 2);
        return OperatorExpr::generator(GenKind::swap_exp, args[0], args[1]);
    }
    if (name == "tau") return one_or_two(GenKind::tau, false);
    if (name == "del") return one_or_two(GenKind::del_odd, true);
    if (name == "r") return one_or_two(GenKind::r, true);
    if (name == "delta") return one_or_two(GenKind::delta, false);
    if (name == "p") return one_or_two(GenKind::p, false);
    if (name == "D") return one_or_two(GenKind::dvar, false);
    if (name == "eta") return one_or_two(GenKind::eta, false);
    if (name == "Y") return one_or_two(GenKind::cherednik, false);
    if (name == "qdel") return one_or_two(GenKind::q_del, false);
    if (name == "sigma") return one_or_two(GenKind::sigma, false);
    if (name == "sigmainv") return one_or_two(GenKind::sigma_inv, false);

    throw parse_error("unknown operator '" + name + "'", at);
}

OperatorExpr parse_op_term(Cursor& c)
{
    OperatorExpr e = parse_op_factor(c);
    std::vector<OperatorExpr> chain{std::move(e)};
    while (c.accept('*')) chain.push_back(parse_op_factor(c));
    if (chain.size() == 1) return std::move(chain[0]);
    return OperatorExpr::compose(std::move(chain));
}

OperatorExpr parse_op_expr(Cursor& c)
{
    std::vector<OperatorExpr> parts;
    bool neg = c.accept('-');
    if (!neg) c.accept('+');
    OperatorExpr first = parse_op_term(c);
    if (neg) first = OperatorExpr::scale(ParamScalar::integer(-1), std::move(first));
    parts.push_back(std::move(first));
    for (;;) {
        if (c.accept('+')) {
            parts.push_back(parse_op_term(c));
        } else if (c.accept('-')) {
            parts.push_back(
                OperatorExpr::scale(ParamScalar::integer(-1), parse_op_term(c)));
        } else {
            break;
        }
    }
    if (parts.size() == 1) return std::move(parts[0]);
    return OperatorExpr::sum(std::move(parts));
}

} // namespace

OperatorExpr parse_operator(const std::string& text)
{
    Cursor c(text);
    OperatorExpr e = parse_op_expr(c);
    if (!c.done()) c.fail("trailing input");
    return e;
}

// -------------------------------------------------------------------- nsym

namespace {

Composition parse_bracket_list(Cursor& c)
{
    c.expect('[');
    Composition parts;
    if (!c.accept(']')) {
        parts.push_back(c.small_int());
        while (c.accept(',')) parts.push_back(c.small_int());
        c.expect(']');
    }
    return parts;
}

NSymElement parse_nsym_factor(Cursor& c, std::optional<int> modulus)
{
    if (c.at_digit()) {
        Rational r = parse_rational(c);
        return NSymElement::one(modulus).scaled(ParamScalar(r, modulus));
    }
    if (!c.at_ident()) c.fail("expected h[..], e[..] or scalar");
    size_t at = c.pos();
    std::string name = c.ident();
    if (name == "q") {
        int k = parse_exponent(c);
        return NSymElement::one(modulus).scaled(ParamScalar::q_power(k, modulus));
    }
    if (name == "h") {
        Composition parts = parse_bracket_list(c);
        for (int p : parts)
            if (p < 1) throw parse_error("h parts must be positive", at);
        return NSymElement::h(parts, modulus);
    }
    if (name == "e") {
        Composition parts = parse_bracket_list(c);
        NSymElement acc = NSymElement::one(modulus);
        for (int p : parts) acc = nsym_product(acc, elementary_e(p, modulus));
        return acc;
    }
    throw parse_error("unknown element '" + name + "'", at);
}

} // namespace

NSymElement parse_nsym(const std::string& text, std::optional<int> modulus)
{
    Cursor c(text);
    NSymElement out = NSymElement::zero(modulus);
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (c.accept('+'))
            sign = 1;
        else if (!first)
            c.fail("expected '+' or '-'");
        NSymElement term = parse_nsym_factor(c, modulus);
        while (c.accept('*')) term = nsym_product(term, parse_nsym_factor(c, modulus));
        if (sign < 0) term = term.scaled(ParamScalar::integer(-1, modulus));
        out += term;
        first = false;
    }
    if (first) Cursor(text).fail("empty expression");
    return out;
}

} // namespace nilq
