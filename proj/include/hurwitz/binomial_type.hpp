#pragma once

// Polynomial sequences of binomial type, q(x + y) = q(x) * q(y) under the
// Hurwitz product. Every such family is tau(x u) for a scalar sequence u, and
// is also p^(a)(x) = a^x for a unit-headed a.

#include "hurwitz/tau.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace seqalg {

/// A Seq over a polynomial ring R[x] whose first term is 1.
class PolySeq {
public:
    explicit PolySeq(Seq s);

    const Seq& seq() const noexcept { return s_; }
    operator const Seq&() const noexcept { return s_; }
    std::size_t size() const noexcept { return s_.size(); }
    const Value& operator[](std::size_t n) const { return s_[n]; }
    /// R, the coefficient ring.
    const Ring& scalars() const { return s_.ring().base(); }
    const std::string& variable() const { return s_.ring().variable(); }
    friend bool operator==(const PolySeq& a, const PolySeq& b) { return a.s_ == b.s_; }

private:
    Seq s_;
};

/// p_n(x) = sum_k x(x-1)...(x-k+1) B^_{n,k}(a_1, a_2, ...), min(n, a.size()) terms.
PolySeq pa_polynomials(const Seq& a, std::size_t n, std::string_view var = "x");

/// Coefficient of x^j in p_n^(a)(x) from the Stirling expansion
///   c_j = sum_h (-1)^h n!/(h+j)! s1(h+j, j) B_{n,h+j}(a_1/1!, a_2/2!, ...).
/// When the needed factorials are not units even after lifting to Q, the
/// equal division-free form n!/k! B_{n,k}(a_i/i!) = B^_{n,k}(a) is used.
Value pa_coefficient(const Seq& a, std::size_t n, std::size_t j);

/// tau(x u) over R[x], n terms; needs at least n - 1 terms of u.
PolySeq binomial_from_u(const Seq& u, std::size_t n, std::string_view var = "x");

/// The u with tau(x u) = q, q.size() - 1 terms, from the x coefficients alone:
///   u_{m-1} = c_{1,m} + sum_{k | m, 1 < k < m} (-1)^{m/k} m! / ((m/k) (k!)^{m/k}) u_{k-1}.
/// With `verify`, tau(x u) is recomputed and must reproduce q in full, otherwise
/// NotBinomialType.
Seq u_from_binomial(const PolySeq& q, bool verify = true);

/// m! / ((m/k) (k!)^{m/k}) for k | m.
mpz_class divisor_weight(unsigned long m, unsigned long k);

struct BinomialCheck {
    bool holds = true;
    /// First n with q_n(x + y) != (q(x) * q(y))_n, and both sides in R[x][y].
    std::optional<std::size_t> index;
    std::optional<Value> lhs, rhs;
};

BinomialCheck is_binomial_type(const PolySeq& q);

/// a with p^(a) = q, a_n = q_n(1); NotBinomialType unless is_binomial_type(q).
UnitSeq a_from_binomial(const PolySeq& q);

/// "powers", "laguerre", "touchard", "pochhammer" over Z[x] and "abel" over
/// Z[a][x], each from its closed form, n terms.
PolySeq named_family(std::string_view name, std::size_t n);

}  // namespace seqalg
