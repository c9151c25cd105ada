#pragma once

// Symbolic form of the lambda matrix. Every entry lambda_{i,j}(y) is a linear
// form in y_0..y_{n-1}; evaluating lambda_matrix at the unit vectors recovers
// its integer coefficients (lifted to the symmetric range around zero).

#include <cstddef>
#include <string>
#include <vector>

#include "fusion_exp/field.hpp"

namespace fexp {

/// Coefficient of y_k at index k.
using LinearForm = std::vector<long>;
/// n x n matrix of linear forms, row-major nesting [i][j].
using SymbolicLambda = std::vector<std::vector<LinearForm>>;

SymbolicLambda symbolic_lambda(const FieldParamsPtr& field);

/// "y0-y3", "-y1+y4", "2*y2", "0".
std::string format_linear_form(const LinearForm& form);

/// The reference moduli X, X^2+1, X^3+X+1, X^4+X+1, X^5+X^2+1, each realized
/// over the smallest prime >= 31 for which it is irreducible.
struct ReferenceModulus {
  std::size_t n;
  std::vector<long> f_low;
};

const std::vector<ReferenceModulus>& reference_moduli();

/// Field for reference_moduli()[n-1]. Throws kUnsupportedN outside 1..5.
FieldParamsPtr reference_field(std::size_t n);

}  // namespace fexp
