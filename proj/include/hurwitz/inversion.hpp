#pragma once

// Inverses for the Hurwitz product and for composition.
//
// The recursive forms work in any ring. The closed Bell-polynomial forms divide
// by factorials, so they run in the rational closure of the ring (Z lifts to
// Q, Z/nZ stays put) and map the answer back with an integrality check.

#include "hurwitz/seq.hpp"

namespace seqalg {

/// b_0 = 1/a_0, b_n = -(1/a_0) sum_{h=1..n} C(n,h) a_h b_{n-h}.
Seq hurwitz_inverse(const Seq& a);

/// b_n = n! B_n(x_1..x_n) / a_0 with x_j = -a_j / (a_0 j!), B_n the complete
/// ordinary Bell polynomial.
Seq hurwitz_inverse_bell(const Seq& a);

/// Reversion, g with a o g = g o a = (0, 1, 0, ...). Needs a_0 = 0 and a_1 a
/// unit. Solved term by term: g_n enters (a o g)_n only through a_1 g_n.
Seq comp_inverse(const Seq& a);

/// Reversion from the Lagrange closed form
///   g_n = (n-1)!/a_1^n sum_j (-1)^j C(n+j-1, j) B_{n-1,j}(abar),
/// abar_i = a_{i+1} / (a_1 (i+1)!).
Seq comp_inverse_closed(const Seq& a);

/// a^{-1} = shift_minus(comp_inverse(shift_plus(0, a))) o shift_plus(0, a).
Seq hurwitz_inverse_via_relinv(const Seq& a);

/// comp_inverse(shift_plus(0, a)), N + 1 terms, from the recursion
///   g_{n+1} = n! sum_k (a^{-1}_k / k!) B_{n,k}(g_1/1!, g_2/2!, ...).
Seq comp_inverse_via_cinv(const Seq& a);

}  // namespace seqalg
