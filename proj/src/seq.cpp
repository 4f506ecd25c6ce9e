#include "hurwitz/seq.hpp"

#include "hurwitz/comb.hpp"
#include "hurwitz/error.hpp"

#include <algorithm>
#include <ostream>

namespace seqalg {

namespace {

void require_same_ring(const Seq& a, const Seq& b, std::string_view op)
{
    if (!(a.ring() == b.ring()))
        throw Error(ErrorKind::RingMismatch, std::string(op) + " of sequences over " +
                                                 a.ring().to_string() + " and " + b.ring().to_string());
}

std::size_t common_length(const Seq& a, const Seq& b) { return std::min(a.size(), b.size()); }

void require_zero_head(const Seq& b)
{
    if (!b[0].is_zero())
        throw Error(ErrorKind::NotZeroOfOrderOne, "inner sequence starts with " + b[0].to_string());
}

}  // namespace

Seq::Seq(Ring ring, std::vector<Value> terms) : ring_(std::move(ring)), terms_(std::move(terms))
{
    if (terms_.empty())
        throw Error(ErrorKind::LengthTooShort, "a sequence needs at least one term");
    for (std::size_t n = 0; n < terms_.size(); ++n) {
        if (!(terms_[n].ring() == ring_))
            throw Error(ErrorKind::RingMismatch, "term " + std::to_string(n) + " lies in " +
                                                     terms_[n].ring().to_string() + ", expected " +
                                                     ring_.to_string());
    }
}

Seq Seq::from_integers(const Ring& ring, std::initializer_list<long> terms)
{
    std::vector<Value> v;
    v.reserve(terms.size());
    for (long k : terms)
        v.push_back(ring.from_integer(k));
    return Seq(ring, std::move(v));
}

Seq Seq::truncated(std::size_t n) const
{
    if (n == 0)
        throw Error(ErrorKind::LengthTooShort, "truncation to zero terms");
    if (n >= terms_.size())
        return *this;
    return Seq(ring_, std::vector<Value>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)));
}

bool operator==(const Seq& a, const Seq& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

std::ostream& operator<<(std::ostream& os, const Seq& s)
{
    os << '(';
    for (std::size_t n = 0; n < s.size(); ++n)
        os << (n ? ", " : "") << s[n];
    return os << ')';
}

// ---------------------------------------------------------------------------

Seq zero_seq(const Ring& ring, std::size_t n) { return Seq(ring, std::vector<Value>(n, ring.zero())); }

Seq hurwitz_identity(const Ring& ring, std::size_t n)
{
    std::vector<Value> t(n, ring.zero());
    if (n > 0)
        t[0] = ring.one();
    return Seq(ring, std::move(t));
}

Seq composition_identity(const Ring& ring, std::size_t n)
{
    std::vector<Value> t(n, ring.zero());
    if (n > 1)
        t[1] = ring.one();
    return Seq(ring, std::move(t));
}

Seq all_ones(const Ring& ring, std::size_t n) { return Seq(ring, std::vector<Value>(n, ring.one())); }

Seq beta(const Value& r, std::size_t n)
{
    std::vector<Value> t;
    t.reserve(n);
    Value p = r.ring().one();
    for (std::size_t i = 0; i < n; ++i) {
        t.push_back(p);
        p *= r;
    }
    return Seq(r.ring(), std::move(t));
}

Seq factorials(const Ring& ring, std::size_t n)
{
    std::vector<Value> t;
    t.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        t.push_back(ring.from_integer(factorial(i)));
    return Seq(ring, std::move(t));
}

// ---------------------------------------------------------------------------

Seq operator+(const Seq& a, const Seq& b)
{
    require_same_ring(a, b, "sum");
    const std::size_t n = common_length(a, b);
    std::vector<Value> t;
    t.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        t.push_back(a[i] + b[i]);
    return Seq(a.ring(), std::move(t));
}

Seq operator-(const Seq& a)
{
    std::vector<Value> t;
    t.reserve(a.size());
    for (const auto& v : a.terms())
        t.push_back(-v);
    return Seq(a.ring(), std::move(t));
}

Seq operator-(const Seq& a, const Seq& b) { return a + (-b); }

Seq hadamard(const Seq& a, const Seq& b)
{
    require_same_ring(a, b, "Hadamard product");
    const std::size_t n = common_length(a, b);
    std::vector<Value> t;
    t.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        t.push_back(a[i] * b[i]);
    return Seq(a.ring(), std::move(t));
}

Seq hurwitz(const Seq& a, const Seq& b)
{
    require_same_ring(a, b, "Hurwitz product");
    const Ring& ring = a.ring();
    const std::size_t n = common_length(a, b);
    std::vector<Value> t(n, ring.zero());
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t h = 0; h <= m; ++h) {
            if (a[h].is_zero() || b[m - h].is_zero())
                continue;
            t[m] += scale(a[h] * b[m - h], binomial(m, h));
        }
    }
    return Seq(ring, std::move(t));
}

Seq cauchy(const Seq& a, const Seq& b)
{
    require_same_ring(a, b, "Cauchy product");
    const Ring& ring = a.ring();
    const std::size_t n = common_length(a, b);
    std::vector<Value> t(n, ring.zero());
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t h = 0; h <= m; ++h) {
            if (!a[h].is_zero() && !b[m - h].is_zero())
                t[m] += a[h] * b[m - h];
        }
    }
    return Seq(ring, std::move(t));
}

Seq hurwitz_power(const Seq& a, unsigned long m)
{
    Seq result = hurwitz_identity(a.ring(), a.size());
    Seq base = a;
    while (m > 0) {
        if (m & 1UL)
            result = hurwitz(result, base);
        m >>= 1;
        if (m > 0)
            base = hurwitz(base, base);
    }
    return result;
}

Seq gamma(const Seq& a)
{
    std::vector<Value> t;
    t.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n)
        t.push_back(scale(a[n], factorial(n)));
    return Seq(a.ring(), std::move(t));
}

Seq gamma_inv(const Seq& a)
{
    std::vector<Value> t;
    t.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        const Value f = a.ring().from_integer(factorial(n));
        if (!is_unit(f))
            throw Error(ErrorKind::FactorialNotInvertible,
                        std::to_string(n) + "! in " + a.ring().to_string());
        t.push_back(a[n] * inverse(f));
    }
    return Seq(a.ring(), std::move(t));
}

Seq shift_minus(const Seq& a)
{
    if (a.size() < 2)
        throw Error(ErrorKind::LengthTooShort, "shift needs at least two terms");
    return Seq(a.ring(), std::vector<Value>(a.terms().begin() + 1, a.terms().end()));
}

Seq shift_plus(const Value& u, const Seq& a)
{
    if (!(u.ring() == a.ring()))
        throw Error(ErrorKind::RingMismatch,
                    "prepending a value of " + u.ring().to_string() + " to a sequence over " + a.ring().to_string());
    std::vector<Value> t;
    t.reserve(a.size() + 1);
    t.push_back(u);
    t.insert(t.end(), a.terms().begin(), a.terms().end());
    return Seq(a.ring(), std::move(t));
}

namespace {

Seq compose_with(const Seq& a, const Seq& b, BellTable::Kind kind)
{
    require_same_ring(a, b, "composition");
    require_zero_head(b);
    const std::size_t n = common_length(a, b);
    const BellArguments args(b.ring(), std::vector<Value>(b.terms().begin() + 1, b.terms().end()));
    BellTable table(kind, b.ring());
    std::vector<Value> t;
    t.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        if (m > 0)
            table.extend(args);
        Value sum = a.ring().zero();
        for (std::size_t k = 0; k <= m; ++k) {
            if (!a[k].is_zero() && !table(m, k).is_zero())
                sum += a[k] * table(m, k);
        }
        t.push_back(std::move(sum));
    }
    return Seq(a.ring(), std::move(t));
}

}  // namespace

Seq compose_egf(const Seq& a, const Seq& b) { return compose_with(a, b, BellTable::Kind::Exponential); }

Seq compose_ogf(const Seq& a, const Seq& b) { return compose_with(a, b, BellTable::Kind::Ordinary); }

}  // namespace seqalg
