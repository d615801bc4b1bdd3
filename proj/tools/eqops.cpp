// eqops: evaluate expressions, print operation tables, run the verification suites.
// Exit codes: 0 success, 1 a check failed, 2 bad arguments or input.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqsteenrod/expr.hpp"
#include "eqsteenrod/suites.hpp"

using namespace eqsteenrod;

namespace {

int cmd_eval(const std::string& expr, long trunc, bool json)
{
    PowerOps ops;
    EvalValue v = evaluate_expression(expr, ops, trunc);
    if (json)
        std::cout << to_json(v).dump(2) << "\n";
    else
        std::cout << format(v) << "\n";
    return 0;
}

int cmd_table(const std::string& gen, long trunc)
{
    PowerOps ops;
    AlgElement g = parse_element(gen);
    std::cout << "i\teps\tQ^{i rho - eps} " << gen << "\n";
    for (const auto& row : export_table(ops, g, trunc))
        std::cout << row.i << "\t" << row.eps << "\t" << format(row.value) << "\n";
    return 0;
}

int cmd_verify(const SuiteConfig& cfg, bool json)
{
    RunReport rep = run_suites(cfg);
    if (json)
        std::cout << to_json(rep).dump(2) << "\n";
    else
        std::cout << to_text(rep);
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Power operations on the C2-equivariant dual Steenrod algebra"};
    app.require_subcommand(1);

    std::string expr;
    long eval_trunc = kDefaultPrecision;
    bool eval_json = false;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression and print its normal form");
    eval->add_option("expr", expr, "Expression, e.g. \"Q[2] tau_1\" or \"series(tau_0)\"")->required();
    eval->add_option("--trunc", eval_trunc, "Series precision (t-exponent bound)")->check(CLI::Range(2L, 1L << 16));
    eval->add_flag("--json", eval_json, "JSON output");

    std::string gen;
    long table_trunc = kDefaultPrecision;
    auto* table = app.add_subcommand("table", "Print rows (i, eps, Q^{i rho - eps} g)");
    table->add_option("gen", gen, "Element, usually a generator")->required();
    table->add_option("--trunc", table_trunc, "Rows with i - eps below this bound")->check(CLI::Range(2L, 1L << 16));

    std::vector<std::string> suites;
    std::optional<long> verify_trunc;
    std::vector<long> deg;
    int imax = 8;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites (all by default)");
    verify->add_option("suites", suites, "Suite names");
    verify->add_option("--trunc", verify_trunc, "Precision for every suite (default: per-suite)");
    verify->add_option("--deg", deg, "Degree bound: fixed part, sign part")->expected(2);
    verify->add_option("--imax", imax, "Generator index ceiling");
    verify->add_flag("--json", verify_json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*eval)
            return cmd_eval(expr, eval_trunc, eval_json);
        if (*table)
            return cmd_table(gen, table_trunc);
        SuiteConfig cfg;
        cfg.precision = verify_trunc;
        if (!deg.empty())
            cfg.degree_max = DegreeBox{deg[0], deg[1]};
        cfg.index_max = imax;
        cfg.suites = suites;
        return cmd_verify(cfg, verify_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
