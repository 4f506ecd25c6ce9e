#include "hurwitz/tau.hpp"

#include "hurwitz/comb.hpp"
#include "hurwitz/error.hpp"

#include <cassert>

namespace seqalg {

namespace {

void require_unit_head(const Seq& s)
{
    if (!s[0].is_one())
        throw Error(ErrorKind::NotUnitHeaded, "first term is " + s[0].to_string() + ", expected 1");
}

}  // namespace

UnitSeq::UnitSeq(Seq s) : s_(std::move(s)) { require_unit_head(s_); }

UnitSeq basis_element(const Ring& ring, unsigned long i, std::size_t n)
{
    if (i == 0)
        throw Error(ErrorKind::IndexOutOfRange, "basis elements are indexed from 1");
    if (i == 1)
        return UnitSeq(all_ones(ring, n));
    std::vector<Value> t(n, ring.zero());
    t[0] = ring.one();
    if (i < n)
        t[i] = ring.one();
    return UnitSeq(Seq(ring, std::move(t)));
}

mpz_class block_partition_count(unsigned long i, unsigned long k)
{
    mpz_class denominator = factorial(k);
    const mpz_class fi = factorial(i);
    for (unsigned long h = 0; h < k; ++h)
        denominator *= fi;
    const mpz_class numerator = factorial(i * k);
    assert(mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()));
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return out;
}

UnitSeq basis_power(unsigned long i, const Value& e, std::size_t n)
{
    const Ring& ring = e.ring();
    if (i == 0)
        throw Error(ErrorKind::IndexOutOfRange, "basis elements are indexed from 1");
    if (i == 1)
        return UnitSeq(beta(e, n));
    std::vector<Value> t(n, ring.zero());
    Value falling = ring.one();
    for (unsigned long k = 0; k * i < n; ++k) {
        if (k > 0)
            falling *= e - ring.from_integer(static_cast<long>(k - 1));
        t[k * i] = scale(falling, block_partition_count(i, k));
    }
    return UnitSeq(Seq(ring, std::move(t)));
}

UnitSeq tau_forward(const Seq& x, std::size_t n)
{
    if (n < 2)
        throw Error(ErrorKind::LengthTooShort, "tau needs n >= 2");
    if (x.size() != n - 1)
        throw Error(ErrorKind::LengthMismatch,
                    "tau^(" + std::to_string(n) + ") takes " + std::to_string(n - 1) + " terms, got " +
                        std::to_string(x.size()));
    Seq product = basis_power(1, x[0], n);
    for (std::size_t k = 2; k < n; ++k) {
        if (!x[k - 1].is_zero())
            product = hurwitz(product, basis_power(k, x[k - 1], n));
    }
    return UnitSeq(std::move(product));
}

Seq tau_inverse(const Seq& a)
{
    require_unit_head(a);
    if (a.size() < 2)
        throw Error(ErrorKind::LengthTooShort, "tau inverse needs at least two terms");
    const Ring& ring = a.ring();
    const std::size_t n = a.size();
    std::vector<Value> x{a[1]};
    // x_{i-1} enters term i of tau_forward linearly with coefficient 1 and is
    // absent from earlier terms, so it is a_i minus the image of the rest.
    for (std::size_t i = 2; i < n; ++i) {
        std::vector<Value> trial = x;
        trial.push_back(ring.zero());
        const Value t = tau_forward(Seq(ring, std::move(trial)), i + 1)[i];
        x.push_back(a[i] - t);
    }
    return Seq(ring, std::move(x));
}

}  // namespace seqalg
