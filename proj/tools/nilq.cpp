#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilq/parse.hpp"
#include "nilq/suites.hpp"

namespace {

nilq::Commutation parse_mode(const std::string& mode)
{
    if (mode == "odd") return nilq::Commutation::odd;
    if (mode == "q") return nilq::Commutation::q_mode;
    throw CLI::ValidationError("--mode", "must be 'odd' or 'q'");
}

std::string read_argument_or_stdin(const std::string& arg)
{
    if (arg != "-") return arg;
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"skew/q polynomial operator calculus and identity checker"};
    app.require_subcommand(1);

    std::string mode = "odd";
    int n = 2;
    int modulus = 0;
    int max_deg = -1;
    bool json = false;
    bool times = false;
    bool oracle = false;

    auto* apply = app.add_subcommand("apply", "apply an operator expression to a polynomial");
    std::string op_text, poly_text;
    apply->add_option("--mode", mode, "ring mode: odd or q")->capture_default_str();
    apply->add_option("--n", n, "number of variables")->capture_default_str();
    apply->add_option("--modulus", modulus, "cyclotomic modulus for q (0 = symbolic)");
    apply->add_option("expr", op_text, "operator expression, e.g. \"eta(1)\"")->required();
    apply->add_option("poly", poly_text, "polynomial, or - for stdin")->required();

    auto* pair = app.add_subcommand("pair", "bilinear form of two NSym expressions");
    std::string left_text, right_text;
    pair->add_option("--modulus", modulus, "cyclotomic modulus for q (0 = symbolic)");
    pair->add_flag("--oracle", oracle, "force the double-coset enumeration");
    pair->add_option("left", left_text, "e.g. \"h[1,2,1]\"")->required();
    pair->add_option("right", right_text, "e.g. \"h[2,2]\"")->required();

    auto* verify = app.add_subcommand("verify", "run a named relation suite");
    std::string suite_name;
    verify->add_option("suite", suite_name, "suite name (see `nilq suites`)")->required();
    verify->add_option("--n", n, "number of variables (suite default when omitted)")
        ->default_val(-1);
    verify->add_option("--max-deg", max_deg, "sweep degree bound (suite default when omitted)");
    verify->add_option("--modulus", modulus, "cyclotomic modulus for q (0 = symbolic)");
    verify->add_flag("--json", json, "emit one JSON record per relation");
    verify->add_flag("--times", times, "include wall time in JSON records");

    auto* suites = app.add_subcommand("suites", "list the available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::optional<int> mod;
    if (modulus > 0) mod = modulus;

    try {
        if (apply->parsed()) {
            nilq::RingConfig cfg{n, parse_mode(mode), mod};
            nilq::OperatorExpr expr = nilq::parse_operator(op_text);
            nilq::SkewPoly poly =
                nilq::parse_poly(read_argument_or_stdin(poly_text), cfg);
            nilq::EvalContext ctx(cfg);
            std::cout << nilq::eval_expr(expr, poly, ctx).str() << "\n";
            return 0;
        }
        if (pair->parsed()) {
            nilq::NSymElement left = nilq::parse_nsym(left_text, mod);
            nilq::NSymElement right = nilq::parse_nsym(right_text, mod);
            nilq::ParamScalar value = nilq::pairing(left, right, oracle);
            if (value.is_zero() && !left.is_zero() && !right.is_zero() &&
                left.max_degree() != right.max_degree()) {
                std::cerr << "note: degrees differ; mixed-degree pairs vanish by grading\n";
            }
            std::cout << value.str() << "\n";
            return 0;
        }
        if (verify->parsed()) {
            nilq::SuiteParams params;
            if (n >= 1) params.n = n;
            if (max_deg >= 0) params.max_deg = max_deg;
            params.modulus = mod;
            std::vector<nilq::RelationReport> reports;
            try {
                reports = nilq::run_suite(suite_name, params);
            } catch (const nilq::config_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            bool all_pass = true;
            for (const auto& rep : reports) {
                all_pass = all_pass && rep.pass;
                std::cout << (json ? rep.json(times) : rep.text()) << "\n";
            }
            if (!json)
                std::cout << (all_pass ? "SUITE PASS" : "SUITE FAIL") << " (" << reports.size()
                          << " relations)\n";
            return all_pass ? 0 : 1;
        }
        if (suites->parsed()) {
            for (const auto& name : nilq::suite_names()) std::cout << name << "\n";
            return 0;
        }
    } catch (const nilq::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
