#pragma once

// The group U_R of sequences with a_0 = 1 under the Hurwitz product, its basis
// b^(1) = (1,1,1,...), b^(i) = (1,0,..,0,1,0,...) with the second 1 at index i,
// and the isomorphism tau from (H_R, +) onto (U_R, Hurwitz product).

#include "hurwitz/seq.hpp"

#include <gmpxx.h>

namespace seqalg {

/// A Seq whose first term is 1; NotUnitHeaded otherwise.
class UnitSeq {
public:
    explicit UnitSeq(Seq s);

    const Seq& seq() const noexcept { return s_; }
    operator const Seq&() const noexcept { return s_; }
    std::size_t size() const noexcept { return s_.size(); }
    const Value& operator[](std::size_t n) const { return s_[n]; }
    friend bool operator==(const UnitSeq& a, const UnitSeq& b) { return a.s_ == b.s_; }

private:
    Seq s_;
};

/// b^(i) truncated to n terms, i >= 1.
UnitSeq basis_element(const Ring& ring, unsigned long i, std::size_t n);

/// (ik)! / (k! (i!)^k), the number of ways to split ik points into k blocks of size i.
mpz_class block_partition_count(unsigned long i, unsigned long k);

/// (b^(i))^e for any ring element e, n terms. For i = 1 term m is e^m; for
/// i >= 2 term ik is block_partition_count(i, k) * e(e-1)...(e-k+1) and the
/// other terms vanish.
UnitSeq basis_power(unsigned long i, const Value& e, std::size_t n);

/// tau^(n)(x) = prod_{k=1..n-1} (b^(k))^{x_{k-1}}; x must have n-1 terms.
UnitSeq tau_forward(const Seq& x, std::size_t n);

/// The x with tau_forward(x, a.size()) = a. Needs a_0 = 1 and at least two terms.
Seq tau_inverse(const Seq& a);

}  // namespace seqalg
