#include "hurwitz/inversion.hpp"

#include "hurwitz/comb.hpp"
#include "hurwitz/error.hpp"

namespace seqalg {

namespace {

Value head_inverse(const Seq& a)
{
    if (!is_unit(a[0]))
        throw Error(ErrorKind::NotAUnit, "a_0 = " + a[0].to_string() + " in " + a.ring().to_string());
    return inverse(a[0]);
}

void require_reversible(const Seq& a)
{
    if (a.size() < 2)
        throw Error(ErrorKind::LengthTooShort, "reversion needs at least two terms");
    if (!a[0].is_zero())
        throw Error(ErrorKind::NotInvertibleForComposition, "a_0 = " + a[0].to_string() + " is not 0");
    if (!is_unit(a[1]))
        throw Error(ErrorKind::NotInvertibleForComposition,
                    "a_1 = " + a[1].to_string() + " is not a unit of " + a.ring().to_string());
}

// 1/n! in a ring where every needed factorial must be a unit.
Value inverse_factorial(const Ring& ring, unsigned long n)
{
    const Value f = ring.from_integer(factorial(n));
    if (!is_unit(f))
        throw Error(ErrorKind::FactorialNotInvertible, std::to_string(n) + "! in " + ring.to_string());
    return inverse(f);
}

Seq lifted(const Seq& a)
{
    std::vector<Value> t;
    t.reserve(a.size());
    for (const auto& v : a.terms())
        t.push_back(lift_to_rationals(v));
    return Seq(rational_closure(a.ring()), std::move(t));
}

Seq retracted(const std::vector<Value>& terms, const Ring& target)
{
    std::vector<Value> t;
    t.reserve(terms.size());
    for (const auto& v : terms)
        t.push_back(retract(v, target));
    return Seq(target, std::move(t));
}

}  // namespace

Seq hurwitz_inverse(const Seq& a)
{
    const Value inv0 = head_inverse(a);
    std::vector<Value> b{inv0};
    b.reserve(a.size());
    for (std::size_t n = 1; n < a.size(); ++n) {
        Value sum = a.ring().zero();
        for (std::size_t h = 1; h <= n; ++h) {
            if (!a[h].is_zero())
                sum += scale(a[h] * b[n - h], binomial(n, h));
        }
        b.push_back(-(inv0 * sum));
    }
    return Seq(a.ring(), std::move(b));
}

Seq hurwitz_inverse_bell(const Seq& a)
{
    head_inverse(a);
    const Seq q = lifted(a);
    const Ring& ring = q.ring();
    const Value inv0 = inverse(q[0]);
    const std::size_t n_max = a.size() - 1;

    std::vector<Value> x;
    for (std::size_t j = 1; j <= n_max; ++j)
        x.push_back(-(q[j] * inv0 * inverse_factorial(ring, j)));
    const BellTable table = ordinary_bell_table(BellArguments(ring, std::move(x)), n_max);

    std::vector<Value> b;
    for (std::size_t n = 0; n <= n_max; ++n) {
        Value complete = ring.zero();
        for (std::size_t k = 0; k <= n; ++k)
            complete += table(n, k);
        b.push_back(scale(complete, factorial(n)) * inv0);
    }
    return retracted(b, a.ring());
}

Seq comp_inverse(const Seq& a)
{
    require_reversible(a);
    const Ring& ring = a.ring();
    const Value inv1 = inverse(a[1]);
    std::vector<Value> g{ring.zero(), inv1};
    BellTable table(BellTable::Kind::Exponential, ring);
    table.extend(BellArguments(ring, {inv1}));  // row 1: B^_{1,1} = g_1
    for (std::size_t n = 2; n < a.size(); ++n) {
        // g_n is unknown; as an argument it only reaches entry (n, 1)
        table.extend(BellArguments(ring, std::vector<Value>(g.begin() + 1, g.end())));
        Value sum = ring.zero();
        for (std::size_t k = 2; k <= n; ++k) {
            if (!a[k].is_zero())
                sum += a[k] * table(n, k);
        }
        g.push_back(-(inv1 * sum));
        table.set_linear_entry(g.back());
    }
    return Seq(ring, std::move(g));
}

Seq comp_inverse_closed(const Seq& a)
{
    require_reversible(a);
    const Seq q = lifted(a);
    const Ring& ring = q.ring();
    const Value inv1 = inverse(q[1]);
    const std::size_t n_max = a.size() - 1;

    std::vector<Value> abar;
    for (std::size_t i = 1; i + 1 <= n_max; ++i)
        abar.push_back(q[i + 1] * inv1 * inverse_factorial(ring, i + 1));
    const BellTable table = ordinary_bell_table(BellArguments(ring, std::move(abar)), n_max - 1);

    std::vector<Value> g{ring.zero()};
    Value inv1_power = inv1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Value sum = ring.zero();
        for (std::size_t j = 0; j < n; ++j) {
            const Value term = scale(table(n - 1, j), binomial(n + j - 1, j));
            sum += j % 2 ? -term : term;
        }
        g.push_back(scale(sum, factorial(n - 1)) * inv1_power);
        inv1_power *= inv1;
    }
    return retracted(g, a.ring());
}

Seq hurwitz_inverse_via_relinv(const Seq& a)
{
    head_inverse(a);
    const Seq lambda = shift_plus(a.ring().zero(), a);
    return compose_egf(shift_minus(comp_inverse(lambda)), lambda);
}

Seq comp_inverse_via_cinv(const Seq& a)
{
    head_inverse(a);
    const Seq q = lifted(a);
    const Ring& ring = q.ring();
    const Seq inv = hurwitz_inverse(q);

    std::vector<Value> weights;  // a^{-1}_k / k!
    for (std::size_t k = 0; k < q.size(); ++k)
        weights.push_back(inv[k] * inverse_factorial(ring, k));

    std::vector<Value> g{ring.zero()}, gbar;  // gbar_i = g_i / i!, i >= 1
    BellTable table(BellTable::Kind::Ordinary, ring);
    for (std::size_t n = 0; n < q.size(); ++n) {
        if (n > 0)
            table.extend(BellArguments(ring, gbar));
        Value sum = ring.zero();
        for (std::size_t k = 0; k <= n; ++k)
            sum += weights[k] * table(n, k);
        g.push_back(scale(sum, factorial(n)));
        if (n + 1 < q.size())
            gbar.push_back(g.back() * inverse_factorial(ring, n + 1));
    }
    return retracted(g, a.ring());
}

}  // namespace seqalg
