#pragma once

// Dense polynomials over Z_q, little-endian coefficient vectors with no
// trailing zeros (the zero polynomial is the empty vector). Used for the
// irreducibility test and for field inversion.

#include <vector>

#include "fusion_exp/bigint.hpp"

namespace fexp::zq {

using Poly = std::vector<Int>;

void trim(Poly& p);
inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

Poly sub(const Poly& a, const Poly& b, const Int& q);
Poly mul(const Poly& a, const Poly& b, const Int& q);

/// Quotient and remainder of a / b; b must be nonzero.
void divmod(const Poly& a, const Poly& b, const Int& q, Poly& quot, Poly& rem);
Poly rem(const Poly& a, const Poly& b, const Int& q);

/// Monic gcd (empty if both inputs are zero).
Poly gcd(Poly a, Poly b, const Int& q);

/// base^e mod m.
Poly powmod(const Poly& base, const Int& e, const Poly& m, const Int& q);

}  // namespace fexp::zq
