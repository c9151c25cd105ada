#include "fusion_exp/symbolic.hpp"

namespace fexp {

SymbolicLambda symbolic_lambda(const FieldParamsPtr& field) {
  const std::size_t n = field->n();
  const Int& q = field->q();
  const Int half = q / 2;
  SymbolicLambda out(n, std::vector<LinearForm>(n, LinearForm(n, 0)));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Int> unit(n, Int(0));
    unit[k] = 1;
    const LambdaMatrix lambda = lambda_matrix(FieldElement(field, unit));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Int c = lambda.at(i, j);
        if (c > half) c -= q;
        out[i][j][k] = c.get_si();
      }
    }
  }
  return out;
}

std::string format_linear_form(const LinearForm& form) {
  std::string out;
  for (std::size_t k = 0; k < form.size(); ++k) {
    const long c = form[k];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const long mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "y" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

const std::vector<ReferenceModulus>& reference_moduli() {
  static const std::vector<ReferenceModulus> moduli{
      {1, {0}},
      {2, {1, 0}},
      {3, {1, 1, 0}},
      {4, {1, 1, 0, 0}},
      {5, {1, 0, 1, 0, 0}},
  };
  return moduli;
}

FieldParamsPtr reference_field(std::size_t n) {
  if (n < 1 || n > reference_moduli().size()) {
    throw Error(ErrorCode::kUnsupportedN,
                "no reference modulus for n = " + std::to_string(n));
  }
  const auto& ref = reference_moduli()[n - 1];
  std::vector<Int> f(ref.f_low.begin(), ref.f_low.end());
  std::vector<Int> monic = f;
  monic.emplace_back(1);
  for (Int q = 31;; ++q) {
    if (is_prime(q) && is_irreducible(q, monic)) {
      return make_field_params(q, n, f);
    }
  }
}

}  // namespace fexp
