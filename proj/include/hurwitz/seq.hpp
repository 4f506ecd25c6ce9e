#pragma once

// Truncated elements of H_R. Term n of a Seq is a_n, the coefficient of
// t^n/n! in the exponential generating function; this is the only stored
// convention. Every binary operation returns min(N_a, N_b) terms because term
// n of each product depends only on input terms 0..n.

#include "hurwitz/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace seqalg {

class Seq {
public:
    /// Requires at least one term, all in `ring`.
    Seq(Ring ring, std::vector<Value> terms);
    static Seq from_integers(const Ring& ring, std::initializer_list<long> terms);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const Value& operator[](std::size_t n) const { return terms_[n]; }
    std::span<const Value> terms() const noexcept { return terms_; }

    /// The first min(n, size()) terms; n must be at least 1.
    Seq truncated(std::size_t n) const;

    friend bool operator==(const Seq& a, const Seq& b);

private:
    Ring ring_;
    std::vector<Value> terms_;
};

std::ostream& operator<<(std::ostream& os, const Seq& s);

// Named sequences, each of length n.
Seq zero_seq(const Ring& ring, std::size_t n);
/// (1, 0, 0, ...), the identity for the Hurwitz and Cauchy products.
Seq hurwitz_identity(const Ring& ring, std::size_t n);
/// (0, 1, 0, ...), the identity for composition.
Seq composition_identity(const Ring& ring, std::size_t n);
/// (1, 1, 1, ...), the identity for the Hadamard product.
Seq all_ones(const Ring& ring, std::size_t n);
/// (r^n)
Seq beta(const Value& r, std::size_t n);
/// (0!, 1!, 2!, ...)
Seq factorials(const Ring& ring, std::size_t n);

Seq operator+(const Seq& a, const Seq& b);
Seq operator-(const Seq& a);
Seq operator-(const Seq& a, const Seq& b);

Seq hadamard(const Seq& a, const Seq& b);
/// Binomial convolution: c_n = sum_h C(n, h) a_h b_{n-h}.
Seq hurwitz(const Seq& a, const Seq& b);
/// Ordinary convolution: c_n = sum_h a_h b_{n-h}.
Seq cauchy(const Seq& a, const Seq& b);
/// m-fold Hurwitz product; m = 0 gives the identity.
Seq hurwitz_power(const Seq& a, unsigned long m);

/// Scales term n by n!, carrying Cauchy products to Hurwitz products.
Seq gamma(const Seq& a);
/// Divides term n by n!; FactorialNotInvertible(n) when n! is not a unit.
Seq gamma_inv(const Seq& a);

/// (a_1, a_2, ...); needs at least two terms.
Seq shift_minus(const Seq& a);
/// (u, a_0, a_1, ...)
Seq shift_plus(const Value& u, const Seq& a);

/// Composition of exponential generating functions, a o b; b_0 must be 0.
/// d_n = sum_k a_k B^_{n,k}(b_1, b_2, ...), evaluated without division.
Seq compose_egf(const Seq& a, const Seq& b);
/// Composition of ordinary generating functions; b_0 must be 0.
Seq compose_ogf(const Seq& a, const Seq& b);

}  // namespace seqalg
