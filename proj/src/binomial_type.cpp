#include "hurwitz/binomial_type.hpp"

#include "hurwitz/comb.hpp"
#include "hurwitz/error.hpp"

namespace seqalg {

namespace {

void require_unit_head(const Seq& a)
{
    if (!a[0].is_one())
        throw Error(ErrorKind::NotUnitHeaded, "first term is " + a[0].to_string() + ", expected 1");
}

std::vector<Value> tail(const Seq& a) { return std::vector<Value>(a.terms().begin() + 1, a.terms().end()); }

bool factorials_invertible(const Ring& ring, unsigned long n)
{
    for (unsigned long k = 2; k <= n; ++k)
        if (!is_unit(ring.from_integer(static_cast<long>(k))))
            return false;
    return true;
}

std::string fresh_variable(const Ring& ring)
{
    for (int i = 0;; ++i) {
        std::string name = i ? "y" + std::to_string(i) : "y";
        try {
            variable(ring, name);
        } catch (const Error&) {
            return name;
        }
    }
}

}  // namespace

PolySeq::PolySeq(Seq s) : s_(std::move(s))
{
    if (!s_.ring().is_polynomial())
        throw Error(ErrorKind::RingMismatch, "a polynomial sequence needs a polynomial ring, got " +
                                                 s_.ring().to_string());
    require_unit_head(s_);
}

PolySeq pa_polynomials(const Seq& a, std::size_t n, std::string_view var)
{
    require_unit_head(a);
    const std::size_t len = std::min(n, a.size());
    if (len == 0)
        throw Error(ErrorKind::LengthTooShort, "zero terms requested");
    const Ring& ring = a.ring();
    const Ring poly = Ring::polynomials(ring, std::string(var));
    const Value x = poly.generator();
    const BellTable table = exponential_bell_table(BellArguments(ring, tail(a)), len - 1);

    std::vector<Value> falling{poly.one()};
    for (std::size_t k = 1; k < len; ++k)
        falling.push_back(falling.back() * (x - poly.from_integer(static_cast<long>(k - 1))));

    std::vector<Value> p;
    for (std::size_t m = 0; m < len; ++m) {
        Value sum = poly.zero();
        for (std::size_t k = 0; k <= m; ++k) {
            if (!table(m, k).is_zero())
                sum += embed(table(m, k), poly) * falling[k];
        }
        p.push_back(std::move(sum));
    }
    return PolySeq(Seq(poly, std::move(p)));
}

Value pa_coefficient(const Seq& a, std::size_t n, std::size_t j)
{
    require_unit_head(a);
    if (n >= a.size() || j > n)
        throw Error(ErrorKind::IndexOutOfRange, "coefficient of x^" + std::to_string(j) + " in p_" +
                                                    std::to_string(n) + " from " + std::to_string(a.size()) +
                                                    " terms");
    const auto s1 = stirling1_unsigned_table(n);
    const Ring closure = rational_closure(a.ring());

    if (factorials_invertible(closure, n)) {
        std::vector<Value> scaled;  // a_i / i!
        for (std::size_t i = 1; i <= n; ++i)
            scaled.push_back(lift_to_rationals(a[i]) * inverse(closure.from_integer(factorial(i))));
        const BellTable table = ordinary_bell_table(BellArguments(closure, std::move(scaled)), n);
        Value c = closure.zero();
        for (std::size_t h = 0; h + j <= n; ++h) {
            const mpz_class weight = factorial(n) / factorial(h + j) * s1[h + j][j];
            const Value term = scale(table(n, h + j), weight);
            c += h % 2 ? -term : term;
        }
        return retract(c, a.ring());
    }

    const BellTable table = exponential_bell_table(BellArguments(a.ring(), tail(a)), n);
    Value c = a.ring().zero();
    for (std::size_t k = j; k <= n; ++k) {
        const Value term = scale(table(n, k), s1[k][j]);
        c += (k - j) % 2 ? -term : term;
    }
    return c;
}

PolySeq binomial_from_u(const Seq& u, std::size_t n, std::string_view var)
{
    const Ring poly = Ring::polynomials(u.ring(), std::string(var));
    if (n == 0)
        throw Error(ErrorKind::LengthTooShort, "zero terms requested");
    if (n == 1)
        return PolySeq(hurwitz_identity(poly, 1));
    if (u.size() < n - 1)
        throw Error(ErrorKind::LengthTooShort, std::to_string(n) + " polynomials need " + std::to_string(n - 1) +
                                                   " terms of u, got " + std::to_string(u.size()));
    const Value x = poly.generator();
    std::vector<Value> xu;
    for (std::size_t i = 0; i + 1 < n; ++i)
        xu.push_back(x * embed(u[i], poly));
    return PolySeq(tau_forward(Seq(poly, std::move(xu)), n));
}

mpz_class divisor_weight(unsigned long m, unsigned long k)
{
    if (k == 0 || m % k != 0)
        throw Error(ErrorKind::IndexOutOfRange, std::to_string(k) + " does not divide " + std::to_string(m));
    const unsigned long blocks = m / k;
    // splittings of m points into blocks of size k, times cyclic orders of the blocks
    return block_partition_count(k, blocks) * factorial(blocks - 1);
}

Seq u_from_binomial(const PolySeq& q, bool verify)
{
    const std::size_t len = q.size();
    if (len < 2)
        throw Error(ErrorKind::LengthTooShort, "recovering u needs at least two polynomials");
    for (std::size_t n = 1; n < len; ++n) {
        const Value constant = q[n].polynomial().coefficient(0);
        if (!constant.is_zero())
            throw Error(ErrorKind::NonzeroConstantTerm, "q_" + std::to_string(n) + " has constant term " +
                                                            constant.to_string());
    }

    const Ring& ring = q.scalars();
    std::vector<Value> u;
    for (unsigned long m = 1; m < len; ++m) {
        Value v = q[m].polynomial().coefficient(1);
        for (unsigned long k = 2; k < m; ++k) {
            if (m % k != 0)
                continue;
            const Value term = scale(u[k - 1], divisor_weight(m, k));
            v += (m / k) % 2 ? -term : term;
        }
        u.push_back(std::move(v));
    }
    Seq result(ring, std::move(u));

    if (verify) {
        const PolySeq back = binomial_from_u(result, len, q.variable());
        for (std::size_t n = 0; n < len; ++n) {
            if (!(back[n] == q[n]))
                throw Error(ErrorKind::NotBinomialType, "tau(x u) gives " + back[n].to_string() + " at index " +
                                                            std::to_string(n) + ", expected " + q[n].to_string());
        }
    }
    return result;
}

BinomialCheck is_binomial_type(const PolySeq& q)
{
    const Ring& poly = q.seq().ring();
    const Ring both = Ring::polynomials(poly, fresh_variable(poly));
    const Value x = embed(poly.generator(), both);
    const Value y = both.generator();

    std::vector<Value> shifted, at_x, at_y;
    for (const auto& p : q.seq().terms()) {
        shifted.push_back(evaluate_into(p.polynomial(), x + y));
        at_x.push_back(embed(p, both));
        at_y.push_back(evaluate_into(p.polynomial(), y));
    }
    const Seq product = hurwitz(Seq(both, at_x), Seq(both, at_y));

    BinomialCheck check;
    for (std::size_t n = 0; n < q.size(); ++n) {
        if (!(shifted[n] == product[n])) {
            check.holds = false;
            check.index = n;
            check.lhs = shifted[n];
            check.rhs = product[n];
            break;
        }
    }
    return check;
}

UnitSeq a_from_binomial(const PolySeq& q)
{
    const BinomialCheck check = is_binomial_type(q);
    if (!check.holds)
        throw Error(ErrorKind::NotBinomialType, "q(x+y) and q(x)*q(y) differ at index " +
                                                    std::to_string(*check.index));
    std::vector<Value> a;
    for (const auto& p : q.seq().terms())
        a.push_back(evaluate(p.polynomial(), q.scalars().one()));
    return UnitSeq(Seq(q.scalars(), std::move(a)));
}

PolySeq named_family(std::string_view name, std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::LengthTooShort, "zero terms requested");
    const Ring z = Ring::integers();

    if (name == "abel") {
        const std::vector<std::string> names{"a", "x"};
        const Ring ring = polynomial_tower(z, names);
        const Value a = variable(ring, "a"), x = variable(ring, "x");
        std::vector<Value> t{ring.one()};
        for (std::size_t m = 1; m < n; ++m)
            t.push_back(x * pow(x - ring.from_integer(static_cast<long>(m)) * a, m - 1));
        return PolySeq(Seq(ring, std::move(t)));
    }

    const Ring ring = Ring::polynomials(z, "x");
    const Value x = ring.generator();
    std::vector<Value> t;
    if (name == "powers") {
        for (std::size_t m = 0; m < n; ++m)
            t.push_back(pow(x, m));
    } else if (name == "touchard") {
        const auto s2 = stirling2_table(n);
        for (std::size_t m = 0; m < n; ++m) {
            Value p = ring.zero();
            for (std::size_t k = 0; k <= m; ++k)
                p += scale(pow(x, k), s2[m][k]);
            t.push_back(std::move(p));
        }
    } else if (name == "pochhammer") {
        Value p = ring.one();
        for (std::size_t m = 0; m < n; ++m) {
            t.push_back(p);
            p *= x + ring.from_integer(static_cast<long>(m));
        }
    } else if (name == "laguerre") {
        // L_n(x) = sum_k n!/k! C(n-1, k-1) (-x)^k, with L_0 = 1
        t.push_back(ring.one());
        for (std::size_t m = 1; m < n; ++m) {
            Value p = ring.zero();
            for (std::size_t k = 1; k <= m; ++k)
                p += scale(pow(-x, k), factorial(m) / factorial(k) * binomial(m - 1, k - 1));
            t.push_back(std::move(p));
        }
    } else {
        throw Error(ErrorKind::ParseError, "unknown family '" + std::string(name) +
                                               "' (powers, laguerre, touchard, abel, pochhammer)");
    }
    return PolySeq(Seq(ring, std::move(t)));
}

}  // namespace seqalg
