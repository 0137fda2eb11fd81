#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilq/expr.hpp"
#include "nilq/nsym.hpp"

namespace nilq {

struct SuiteParams {
    std::optional<int> n;
    std::optional<int> max_deg;
    std::optional<int> modulus;
};

const std::vector<std::string>& suite_names();

/// Runs every relation of the named suite; throws config_error for unknown
/// suite names.
std::vector<RelationReport> run_suite(const std::string& name, const SuiteParams& params = {});

/// Expression-level relations usable for perturbation fuzzing.
struct NamedRelation {
    std::string name;
    OperatorExpr expr;
    EvalContext ctx;
    int max_deg;
};

std::vector<NamedRelation> relation_pool();

/// Perturbs one relation (seeded) and checks that the sweep now fails with
/// a concrete counterexample.
RelationReport perturbed_control(const NamedRelation& rel, unsigned seed);

} // namespace nilq
