#include "fusion_exp/zq_poly.hpp"

#include <utility>

#include "fusion_exp/error.hpp"

namespace fexp::zq {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b, const Int& q) {
  Poly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] - b[i], q);
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, const Int& q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) c = mod(c, q);
  trim(out);
  return out;
}

void divmod(const Poly& a, const Poly& b, const Int& q, Poly& quot,
            Poly& rem) {
  if (b.empty()) throw Error(ErrorCode::kZeroInverse, "polynomial division by zero");
  Int lead_inv;
  inv_mod(lead_inv, b.back(), q);
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, Int(0));
  for (long k = degree(rem) - degree(b); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k) + b.size() - 1;
    if (top >= rem.size() || rem[top] == 0) continue;
    Int c = mod(rem[top] * lead_inv, q);
    quot[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[k + i] = mod(rem[k + i] - c * b[i], q);
    }
  }
  trim(rem);
  trim(quot);
}

Poly rem(const Poly& a, const Poly& b, const Int& q) {
  Poly quot, r;
  divmod(a, b, q, quot, r);
  return r;
}

Poly gcd(Poly a, Poly b, const Int& q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Int lead_inv;
  inv_mod(lead_inv, a.back(), q);
  for (auto& c : a) c = mod(c * lead_inv, q);
  return a;
}

Poly powmod(const Poly& base, const Int& e, const Poly& m, const Int& q) {
  Poly result{Int(1)};
  result = rem(result, m, q);
  Poly b = rem(base, m, q);
  for (std::size_t i = bit_length(e); i-- > 0;) {
    result = rem(mul(result, result, q), m, q);
    if (test_bit(e, i)) result = rem(mul(result, b, q), m, q);
  }
  return result;
}

}  // namespace fexp::zq
