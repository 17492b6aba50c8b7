#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace faulhaber;
using namespace faulhaber::cli;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_domain = 2;

void report_error(const char* type, const std::string& message)
{
    std::cerr << json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
}

std::string slurp(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Faulhaber power sums"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

    unsigned m = 1, r = 1;
    std::string basis = "n";
    auto* powersum = app.add_subcommand("powersum", "sum^r n^m in a chosen basis");
    powersum->add_option("--m", m, "Exponent")->required();
    powersum->add_option("--r", r, "Repetitions")->capture_default_str();
    powersum->add_option("--basis", basis, "n | faulhaber | cfactorial | stirling")
        ->check(CLI::IsMember({"n", "faulhaber", "cfactorial", "stirling"}))
        ->capture_default_str();

    std::string w_text, method = "recurrence";
    unsigned k = 0;
    bool cross_check = false;
    auto* coeffs = app.add_subcommand("coeffs", "A_0..A_k for a rational w");
    coeffs->add_option("--w", w_text, "w as P/Q")->required();
    coeffs->add_option("--k", k, "Largest index")->required();
    coeffs->add_option("--method", method, "recurrence | jacobi | explicit | determinant | symbolic")
        ->check(CLI::IsMember({"recurrence", "jacobi", "explicit", "determinant", "symbolic"}))
        ->capture_default_str();
    coeffs->add_flag("--cross-check", cross_check, "Run every applicable method and diff");

    long dr = 0, ds = 1, lo = 0;
    std::string values_path, anchor_text;
    auto* decompose = app.add_subcommand("decompose", "Split a table into reflective parts");
    decompose->add_option("--r", dr, "g is r-reflective")->required();
    decompose->add_option("--s", ds, "h is anti-s-reflective")->required();
    decompose->add_option("--values", values_path, "File of whitespace-separated rationals, - for stdin")
        ->required();
    decompose->add_option("--lo", lo, "Argument of the first value")->capture_default_str();
    decompose->add_option("--anchor", anchor_text, "h(0) when r is even and s is odd");

    std::string alpha_text;
    unsigned terms = 4;
    std::vector<unsigned long> check;
    unsigned long bits = 200;
    auto* asymptotic = app.add_subcommand("asymptotic", "Series for sum k^alpha in u = n^2 + n");
    asymptotic->add_option("--alpha", alpha_text, "alpha as P/Q")->required();
    asymptotic->add_option("--terms", terms, "Last index p")->capture_default_str();
    asymptotic->add_option("--check", check, "Telescoping check on (N1, N2]")->expected(2);
    asymptotic->add_option("--bits", bits, "Working precision of the check")->capture_default_str();

    std::string c_scale_text = "1/4";
    bool alt_x5 = false;
    auto* riddle = app.add_subcommand("riddle", "Decode the name in the power-sum riddle");
    riddle->add_option("--c-scale", c_scale_text, "Multiplier for the c list")->capture_default_str();
    riddle->add_flag("--alt-x5", alt_x5, "Also report x_5 with A_26 a_11 / D");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--suite", suite, "tables | invariants | riddle | gf | all")
        ->check(CLI::IsMember({"tables", "invariants", "riddle", "gf", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        CommandOutput out;
        if (*powersum) {
            out = run_powersum(m, r, basis);
        } else if (*coeffs) {
            const Rational w = Rational::parse(w_text);
            out = cross_check ? run_coeffs_cross_check(w, k) : run_coeffs(w, k, method);
        } else if (*decompose) {
            std::optional<Rational> anchor;
            if (!anchor_text.empty())
                anchor = Rational::parse(anchor_text);
            out = run_decompose(dr, ds, lo, read_values(slurp(values_path)), anchor);
        } else if (*asymptotic) {
            std::optional<TelescopeArgs> t;
            if (!check.empty())
                t = TelescopeArgs{check[0], check[1], bits};
            out = run_asymptotic(Rational::parse(alpha_text), terms, t);
        } else if (*riddle) {
            out = run_riddle(Rational::parse(c_scale_text), alt_x5);
        } else if (*verify) {
            out = run_verify(suite);
        }
        if (pretty)
            std::cout << render_pretty(out.document);
        else
            std::cout << out.document.dump(2) << '\n';
        return out.status;
    } catch (const DomainError& e) {
        report_error("domain", e.what());
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        report_error("usage", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        report_error("internal", e.what());
        return exit_domain;
    }
}
