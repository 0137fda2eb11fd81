#pragma once

#include <string>

#include "nilq/expr.hpp"
#include "nilq/nsym.hpp"
#include "nilq/skew.hpp"

namespace nilq {

struct parse_error : std::invalid_argument {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos)
    {
    }
};

/// Polynomial text: terms like `3*q^2*x1^2*x2^-1` joined by `+`/`-`.
/// Variables are x1..xn; larger indices are rejected.
SkewPoly parse_poly(const std::string& text, const RingConfig& cfg);

/// Operator text: function-style generators (`eta(1)`, `r(1,3)`, `qdel(2)`),
/// `*` for composition, `+`/`-` for sums, `com(a,b)` / `acom(a,b)`, scalar
/// factors (integers, rationals, `q^k`, `t^k`, `u^k`, `alpha^k`), `id`.
OperatorExpr parse_operator(const std::string& text);

/// NSym text: `h[1,2,1]`, `e[2]`, products by `*`, integer/q coefficients.
NSymElement parse_nsym(const std::string& text, std::optional<int> modulus);

} // namespace nilq
