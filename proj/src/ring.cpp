#include "hurwitz/ring.hpp"

#include "hurwitz/error.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

namespace seqalg {

struct Ring::Node {
    Kind kind;
    mpz_class modulus;
    std::optional<Ring> base;
    std::string variable;
    std::size_t depth = 0;
};

namespace {

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

bool is_decimal(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

mpz_class reduce_mod(const mpz_class& k, const mpz_class& n)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), n.get_mpz_t());
    return r;
}

void require_same_ring(const Value& a, const Value& b, std::string_view op)
{
    if (!(a.ring() == b.ring())) {
        throw Error(ErrorKind::RingMismatch, std::string(op) + " of " + a.ring().to_string() +
                                                 " and " + b.ring().to_string());
    }
}

[[noreturn]] void wrong_payload(const Ring& ring, std::string_view wanted)
{
    throw Error(ErrorKind::RingMismatch,
                "value of " + ring.to_string() + " has no " + std::string(wanted) + " payload");
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring

Ring Ring::integers()
{
    static const Ring instance(std::make_shared<const Node>(Node{Kind::Integers, 0, {}, {}, 0}));
    return instance;
}

Ring Ring::rationals()
{
    static const Ring instance(std::make_shared<const Node>(Node{Kind::Rationals, 0, {}, {}, 0}));
    return instance;
}

Ring Ring::integers_mod(const mpz_class& n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidRing, "Zmod modulus must be at least 2, got " + n.get_str());
    return Ring(std::make_shared<const Node>(Node{Kind::IntegersMod, n, {}, {}, 0}));
}

Ring Ring::polynomials(const Ring& base, std::string variable)
{
    if (!is_identifier(variable))
        throw Error(ErrorKind::InvalidRing, "bad variable name '" + variable + "'");
    if (base.has_variable(variable))
        throw Error(ErrorKind::InvalidRing,
                    "variable '" + variable + "' already used in " + base.to_string());
    const std::size_t depth = base.depth() + 1;
    return Ring(std::make_shared<const Node>(
        Node{Kind::Polynomials, 0, base, std::move(variable), depth}));
}

Ring Ring::parse(std::string_view text)
{
    if (text == "Z")
        return integers();
    if (text == "Q")
        return rationals();
    if (text.starts_with("Zmod:")) {
        const auto digits = text.substr(5);
        if (!is_decimal(digits))
            throw Error(ErrorKind::InvalidRing, "bad modulus in '" + std::string(text) + "'");
        return integers_mod(mpz_class(std::string(digits)));
    }
    if (text.starts_with("Poly:")) {
        const auto rest = text.substr(5);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw Error(ErrorKind::InvalidRing, "missing base ring in '" + std::string(text) + "'");
        return polynomials(parse(rest.substr(colon + 1)), std::string(rest.substr(0, colon)));
    }
    throw Error(ErrorKind::InvalidRing, "unknown ring '" + std::string(text) + "'");
}

Ring::Kind Ring::kind() const noexcept { return node_->kind; }

const mpz_class& Ring::modulus() const
{
    if (kind() != Kind::IntegersMod)
        throw Error(ErrorKind::RingMismatch, to_string() + " has no modulus");
    return node_->modulus;
}

const Ring& Ring::base() const
{
    if (!is_polynomial())
        throw Error(ErrorKind::RingMismatch, to_string() + " is not a polynomial ring");
    return *node_->base;
}

const std::string& Ring::variable() const
{
    if (!is_polynomial())
        throw Error(ErrorKind::RingMismatch, to_string() + " is not a polynomial ring");
    return node_->variable;
}

std::size_t Ring::depth() const noexcept { return node_->depth; }

const Ring& Ring::scalars() const noexcept
{
    const Ring* r = this;
    while (r->node_->base)
        r = &*r->node_->base;
    return *r;
}

bool Ring::has_variable(std::string_view name) const noexcept
{
    for (const Ring* r = this; r->node_->base; r = &*r->node_->base)
        if (r->node_->variable == name)
            return true;
    return false;
}

std::string Ring::to_string() const
{
    switch (kind()) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::IntegersMod: return "Zmod:" + node_->modulus.get_str();
    case Kind::Polynomials: return "Poly:" + node_->variable + ":" + node_->base->to_string();
    }
    return {};
}

bool operator==(const Ring& a, const Ring& b) noexcept
{
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind())
        return false;
    switch (a.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::Rationals: return true;
    case Ring::Kind::IntegersMod: return a.node_->modulus == b.node_->modulus;
    case Ring::Kind::Polynomials:
        return a.node_->variable == b.node_->variable && *a.node_->base == *b.node_->base;
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const Ring& ring) { return os << ring.to_string(); }

Value Ring::zero() const { return from_integer(0L); }

Value Ring::one() const { return from_integer(1L); }

Value Ring::from_integer(long k) const { return from_integer(mpz_class(k)); }

Value Ring::from_integer(const mpz_class& k) const
{
    switch (kind()) {
    case Kind::Integers: return Value(*this, k);
    case Kind::Rationals: return Value(*this, mpq_class(k));
    case Kind::IntegersMod: return Value(*this, reduce_mod(k, node_->modulus));
    case Kind::Polynomials: return Value::from_polynomial(Polynomial(*this, {base().from_integer(k)}));
    }
    return Value(*this, k);
}

Value Ring::from_rational(const mpq_class& fraction) const
{
    if (fraction.get_den() == 0)
        throw Error(ErrorKind::NotAUnit, "0 as a denominator");
    mpq_class q(fraction);
    q.canonicalize();
    switch (kind()) {
    case Kind::Rationals: return Value(*this, q);
    case Kind::Polynomials: return Value::from_polynomial(Polynomial(*this, {base().from_rational(q)}));
    case Kind::Integers:
    case Kind::IntegersMod: break;
    }
    return from_integer(q.get_num()) * inverse(from_integer(q.get_den()));
}

Value Ring::generator() const
{
    return Value::from_polynomial(Polynomial(*this, {base().zero(), base().one()}));
}

// ---------------------------------------------------------------------------
// Value

Value Value::from_polynomial(Polynomial p)
{
    Ring ring = p.ring();
    return Value(std::move(ring), std::make_shared<const Polynomial>(std::move(p)));
}

bool Value::is_zero() const
{
    switch (ring_.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod: return std::get<mpz_class>(rep_) == 0;
    case Ring::Kind::Rationals: return std::get<mpq_class>(rep_) == 0;
    case Ring::Kind::Polynomials: return polynomial().is_zero();
    }
    return false;
}

bool Value::is_one() const
{
    switch (ring_.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod: return std::get<mpz_class>(rep_) == 1;
    case Ring::Kind::Rationals: return std::get<mpq_class>(rep_) == 1;
    case Ring::Kind::Polynomials: {
        const auto c = polynomial().coefficients();
        return c.size() == 1 && c[0].is_one();
    }
    }
    return false;
}

const mpz_class& Value::integer() const
{
    if (const auto* z = std::get_if<mpz_class>(&rep_))
        return *z;
    wrong_payload(ring_, "integer");
}

const mpq_class& Value::rational() const
{
    if (const auto* q = std::get_if<mpq_class>(&rep_))
        return *q;
    wrong_payload(ring_, "rational");
}

const Polynomial& Value::polynomial() const
{
    if (const auto* p = std::get_if<std::shared_ptr<const Polynomial>>(&rep_))
        return **p;
    wrong_payload(ring_, "polynomial");
}

Value Value::operator-() const
{
    switch (ring_.kind()) {
    case Ring::Kind::Integers: return Value(ring_, mpz_class(-integer()));
    case Ring::Kind::Rationals: return Value(ring_, mpq_class(-rational()));
    case Ring::Kind::IntegersMod:
        return Value(ring_, reduce_mod(mpz_class(-integer()), ring_.modulus()));
    case Ring::Kind::Polynomials: return from_polynomial(-polynomial());
    }
    return *this;
}

Value& Value::operator+=(const Value& rhs)
{
    require_same_ring(*this, rhs, "sum");
    switch (ring_.kind()) {
    case Ring::Kind::Integers: std::get<mpz_class>(rep_) += rhs.integer(); break;
    case Ring::Kind::Rationals: std::get<mpq_class>(rep_) += rhs.rational(); break;
    case Ring::Kind::IntegersMod: {
        auto& z = std::get<mpz_class>(rep_);
        z += rhs.integer();
        if (z >= ring_.modulus())
            z -= ring_.modulus();
        break;
    }
    case Ring::Kind::Polynomials:
        rep_ = std::make_shared<const Polynomial>(polynomial() + rhs.polynomial());
        break;
    }
    return *this;
}

Value& Value::operator-=(const Value& rhs)
{
    require_same_ring(*this, rhs, "difference");
    switch (ring_.kind()) {
    case Ring::Kind::Integers: std::get<mpz_class>(rep_) -= rhs.integer(); break;
    case Ring::Kind::Rationals: std::get<mpq_class>(rep_) -= rhs.rational(); break;
    case Ring::Kind::IntegersMod: {
        auto& z = std::get<mpz_class>(rep_);
        z -= rhs.integer();
        if (z < 0)
            z += ring_.modulus();
        break;
    }
    case Ring::Kind::Polynomials:
        rep_ = std::make_shared<const Polynomial>(polynomial() - rhs.polynomial());
        break;
    }
    return *this;
}

Value& Value::operator*=(const Value& rhs)
{
    require_same_ring(*this, rhs, "product");
    switch (ring_.kind()) {
    case Ring::Kind::Integers: std::get<mpz_class>(rep_) *= rhs.integer(); break;
    case Ring::Kind::Rationals: std::get<mpq_class>(rep_) *= rhs.rational(); break;
    case Ring::Kind::IntegersMod: {
        auto& z = std::get<mpz_class>(rep_);
        z *= rhs.integer();
        z = reduce_mod(z, ring_.modulus());
        break;
    }
    case Ring::Kind::Polynomials:
        rep_ = std::make_shared<const Polynomial>(polynomial() * rhs.polynomial());
        break;
    }
    return *this;
}

bool operator==(const Value& a, const Value& b)
{
    if (!(a.ring() == b.ring()))
        return false;
    switch (a.ring().kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod: return a.integer() == b.integer();
    case Ring::Kind::Rationals: return a.rational() == b.rational();
    case Ring::Kind::Polynomials: return a.polynomial() == b.polynomial();
    }
    return false;
}

namespace {

struct Monomial {
    std::vector<std::size_t> exponents;  // outermost variable first
    Value scalar;
};

void collect_monomials(const Value& v, std::vector<std::size_t>& prefix, std::vector<Monomial>& out)
{
    if (!v.ring().is_polynomial()) {
        if (!v.is_zero())
            out.push_back({prefix, v});
        return;
    }
    const auto coeffs = v.polynomial().coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        prefix.push_back(i);
        collect_monomials(coeffs[i], prefix, out);
        prefix.pop_back();
    }
}

std::string scalar_string(const Value& v)
{
    if (v.ring().kind() == Ring::Kind::Rationals)
        return v.rational().get_str();
    return v.integer().get_str();
}

}  // namespace

std::string Value::to_string() const
{
    if (!ring_.is_polynomial())
        return scalar_string(*this);

    std::vector<std::string> names;
    for (const Ring* r = &ring_; r->is_polynomial(); r = &r->base())
        names.push_back(r->variable());

    std::vector<std::size_t> prefix;
    std::vector<Monomial> monomials;
    collect_monomials(*this, prefix, monomials);
    if (monomials.empty())
        return "0";

    std::string out;
    for (const auto& m : monomials) {
        std::string vars;
        for (std::size_t level = names.size(); level-- > 0;) {
            const std::size_t e = m.exponents[level];
            if (e == 0)
                continue;
            if (!vars.empty())
                vars += '*';
            vars += names[level];
            if (e > 1)
                vars += '^' + std::to_string(e);
        }
        std::string term;
        if (vars.empty())
            term = scalar_string(m.scalar);
        else if (m.scalar.is_one())
            term = vars;
        else if ((-m.scalar).is_one() && m.scalar.ring().kind() != Ring::Kind::IntegersMod)
            term = "-" + vars;
        else
            term = scalar_string(m.scalar) + "*" + vars;

        if (!out.empty() && term.front() != '-')
            out += '+';
        out += term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring))
{
    if (!ring_.is_polynomial())
        throw Error(ErrorKind::RingMismatch, ring_.to_string() + " is not a polynomial ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Value> coefficients)
    : Polynomial(std::move(ring))
{
    const Ring& b = base();
    for (const auto& c : coefficients) {
        if (!(c.ring() == b))
            throw Error(ErrorKind::RingMismatch, "coefficient in " + c.ring().to_string() +
                                                     " for polynomial over " + b.to_string());
    }
    coeffs_ = std::move(coefficients);
    normalize();
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Value Polynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : base().zero();
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(ring_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        r.coeffs_.push_back(-c);
    return r;
}

namespace {

void require_same_poly_ring(const Polynomial& a, const Polynomial& b)
{
    if (!(a.ring() == b.ring()))
        throw Error(ErrorKind::RingMismatch,
                    "polynomials in " + a.ring().to_string() + " and " + b.ring().to_string());
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    require_same_poly_ring(a, b);
    const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
    const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
    Polynomial r(a.ring_);
    r.coeffs_ = longer.coeffs_;
    for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i)
        r.coeffs_[i] += shorter.coeffs_[i];
    r.normalize();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_poly_ring(a, b);
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero())
        return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.base().zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (!b.coeffs_[j].is_zero())
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Free functions

Value evaluate(const Polynomial& p, const Value& at)
{
    if (!(at.ring() == p.base()))
        throw Error(ErrorKind::RingMismatch, "evaluating a polynomial over " + p.base().to_string() +
                                                 " at a value of " + at.ring().to_string());
    return evaluate_into(p, at);
}

Value evaluate_into(const Polynomial& p, const Value& at)
{
    const Ring& target = at.ring();
    Value acc = target.zero();
    const auto coeffs = p.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * at + embed(coeffs[i], target);
    return acc;
}

Value embed(const Value& v, const Ring& target)
{
    if (v.ring() == target)
        return v;
    if (!target.is_polynomial() || target.depth() <= v.ring().depth())
        throw Error(ErrorKind::RingMismatch,
                    "cannot embed " + v.ring().to_string() + " into " + target.to_string());
    Value inner = embed(v, target.base());
    if (inner.is_zero())
        return Value::from_polynomial(Polynomial(target));
    return Value::from_polynomial(Polynomial(target, {std::move(inner)}));
}

bool is_unit(const Value& v)
{
    switch (v.ring().kind()) {
    case Ring::Kind::Integers: return abs(v.integer()) == 1;
    case Ring::Kind::Rationals: return v.rational() != 0;
    case Ring::Kind::IntegersMod: {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), v.integer().get_mpz_t(), v.ring().modulus().get_mpz_t());
        return g == 1;
    }
    case Ring::Kind::Polynomials: {
        const auto c = v.polynomial().coefficients();
        return c.size() == 1 && is_unit(c[0]);
    }
    }
    return false;
}

Value inverse(const Value& v)
{
    if (!is_unit(v))
        throw Error(ErrorKind::NotAUnit, v.to_string() + " in " + v.ring().to_string());
    switch (v.ring().kind()) {
    case Ring::Kind::Integers: return v;
    case Ring::Kind::Rationals: return Value(v.ring(), mpq_class(1 / v.rational()));
    case Ring::Kind::IntegersMod: {
        mpz_class r;
        mpz_invert(r.get_mpz_t(), v.integer().get_mpz_t(), v.ring().modulus().get_mpz_t());
        return Value(v.ring(), r);
    }
    case Ring::Kind::Polynomials:
        return Value::from_polynomial(Polynomial(v.ring(), {inverse(v.polynomial().coefficients()[0])}));
    }
    return v;
}

Value pow(const Value& v, unsigned long exponent)
{
    Value result = v.ring().one();
    Value base = v;
    while (exponent > 0) {
        if (exponent & 1UL)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

Value scale(const Value& v, const mpz_class& k) { return v * v.ring().from_integer(k); }

Ring polynomial_tower(const Ring& base, std::span<const std::string> names)
{
    Ring ring = base;
    for (const auto& name : names)
        ring = Ring::polynomials(ring, name);
    return ring;
}

Value variable(const Ring& ring, std::string_view name)
{
    for (const Ring* r = &ring; r->is_polynomial(); r = &r->base()) {
        if (r->variable() == name)
            return embed(r->generator(), ring);
    }
    throw Error(ErrorKind::RingMismatch, "no variable '" + std::string(name) + "' in " + ring.to_string());
}

Ring rational_closure(const Ring& ring)
{
    switch (ring.kind()) {
    case Ring::Kind::Integers: return Ring::rationals();
    case Ring::Kind::Polynomials: {
        Ring base = rational_closure(ring.base());
        if (base == ring.base())
            return ring;
        return Ring::polynomials(base, ring.variable());
    }
    case Ring::Kind::Rationals:
    case Ring::Kind::IntegersMod: break;
    }
    return ring;
}

Value lift_to_rationals(const Value& v)
{
    const Ring target = rational_closure(v.ring());
    if (target == v.ring())
        return v;
    if (v.ring().kind() == Ring::Kind::Integers)
        return target.from_integer(v.integer());
    std::vector<Value> coeffs;
    for (const auto& c : v.polynomial().coefficients())
        coeffs.push_back(lift_to_rationals(c));
    return Value::from_polynomial(Polynomial(target, std::move(coeffs)));
}

Value retract(const Value& v, const Ring& target)
{
    if (v.ring() == target)
        return v;
    if (target.kind() == Ring::Kind::Integers && v.ring().kind() == Ring::Kind::Rationals) {
        if (v.rational().get_den() != 1)
            throw Error(ErrorKind::RetractFailed, v.to_string() + " is not an integer");
        return target.from_integer(v.rational().get_num());
    }
    if (target.is_polynomial() && v.ring().is_polynomial() && target.variable() == v.ring().variable()) {
        std::vector<Value> coeffs;
        for (const auto& c : v.polynomial().coefficients())
            coeffs.push_back(retract(c, target.base()));
        return Value::from_polynomial(Polynomial(target, std::move(coeffs)));
    }
    throw Error(ErrorKind::RingMismatch,
                "cannot retract " + v.ring().to_string() + " to " + target.to_string());
}

}  // namespace seqalg
