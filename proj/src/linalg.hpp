#pragma once

#include <optional>
#include <vector>

#include "faulhaber/exactnum.hpp"

namespace faulhaber::detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact Gaussian elimination, first nonzero pivot in column order.
Rational determinant(Matrix a);

struct LinearSolution {
    std::vector<Rational> particular; // free variables set to 0
    std::vector<std::size_t> free_columns;
};

/// Solves a x = b. Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(Matrix a, std::vector<Rational> b);

} // namespace faulhaber::detail
