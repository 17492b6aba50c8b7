#pragma once

#include <optional>
#include <string>
#include <vector>

#include "document.hpp"
#include "faulhaber/exactnum.hpp"

namespace faulhaber::cli {

/// A command's document plus the process exit status it implies
/// (0 success, 3 a check that ran and failed).
struct CommandOutput {
    json document;
    int status = 0;
};

/// basis: n, faulhaber, cfactorial or stirling.
CommandOutput run_powersum(unsigned m, unsigned r, const std::string& basis);

/// method: recurrence, jacobi, explicit, determinant or symbolic.
CommandOutput run_coeffs(const Rational& w, unsigned k, const std::string& method);
CommandOutput run_coeffs_cross_check(const Rational& w, unsigned k);

/// values: f(lo), f(lo + 1), ...
CommandOutput run_decompose(long r, long s, long lo, const std::vector<Rational>& values,
                            std::optional<Rational> anchor);

struct TelescopeArgs {
    unsigned long n1 = 0, n2 = 0, bits = 200;
};
CommandOutput run_asymptotic(const Rational& alpha, unsigned terms, std::optional<TelescopeArgs> check);

CommandOutput run_riddle(const Rational& c_scale, bool alt_x5);

CommandOutput run_verify(const std::string& suite);

/// Whitespace-separated rationals.
std::vector<Rational> read_values(const std::string& text);

/// Human-readable rendering of any document.
std::string render_pretty(const json& doc);

} // namespace faulhaber::cli
