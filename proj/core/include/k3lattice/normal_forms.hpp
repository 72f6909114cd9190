#pragma once

#include <optional>
#include <vector>

#include "k3lattice/matrix.hpp"

namespace k3l {

/// Exact determinant via fraction-free (Bareiss) elimination.
Rational determinant(const ExactMatrix& m);

/// Exact inverse; throws std::invalid_argument on singular or non-square input.
ExactMatrix inverse(const ExactMatrix& m);

/// Solves m x = b exactly; std::nullopt when inconsistent. m need not be square,
/// but must have full column rank for the solution to be unique.
std::optional<std::vector<Rational>> solve_exact(const ExactMatrix& m, const std::vector<Rational>& b);

/// Column-style Hermite normal form of an integer matrix: unimodular column
/// operations only, so the integer column span is preserved. Pivots are
/// positive, entries to the left of each pivot reduced into [0, pivot), and
/// zero columns are dropped (the result has rank-many columns).
ExactMatrix hermite_normal_form(const ExactMatrix& m);

/// Whether v lies in the integer column span of basis_cols (full column rank).
bool in_integer_column_span(const ExactMatrix& basis_cols, const std::vector<Rational>& v);

struct SmithDecomposition {
    ExactMatrix u;  // unimodular, rows x rows
    ExactMatrix d;  // diagonal, nonnegative, d[i] | d[i+1]
    ExactMatrix v;  // unimodular, cols x cols
};

/// Smith normal form with transforms: u * m * v = d. Integer entries required.
SmithDecomposition smith_normal_form(const ExactMatrix& m);

/// Diagonal of the SNF with unit factors dropped, in ascending divisibility order.
std::vector<Int> invariant_factors(const ExactMatrix& m);

/// Invariant factors of Z/c1 + Z/c2 + ... given the cyclic orders ci.
std::vector<Int> cyclic_invariant_factors(const std::vector<Int>& orders);

}  // namespace k3l
