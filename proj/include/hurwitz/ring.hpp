#pragma once

// Exact commutative rings with identity: Z, Q, Z/nZ and polynomial rings
// nested over any of them. Ring descriptors are runtime values so that rings
// can be read from files and command lines; every algorithm in the library is
// written once against Value.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace seqalg {

class Value;
class Polynomial;

/// Descriptor of a commutative ring with 1. Cheap to copy; immutable.
class Ring {
public:
    enum class Kind { Integers, Rationals, IntegersMod, Polynomials };

    static Ring integers();
    static Ring rationals();
    /// Z/nZ; requires n >= 2.
    static Ring integers_mod(const mpz_class& n);
    /// base[variable]; the variable must not already name a level of base.
    static Ring polynomials(const Ring& base, std::string variable);

    /// Parses "Z", "Q", "Zmod:<n>" and "Poly:<var>:<base>".
    static Ring parse(std::string_view text);

    Kind kind() const noexcept;
    bool is_polynomial() const noexcept { return kind() == Kind::Polynomials; }
    const mpz_class& modulus() const;
    const Ring& base() const;
    const std::string& variable() const;

    /// Number of polynomial levels above the scalar ring.
    std::size_t depth() const noexcept;
    /// The innermost non-polynomial ring.
    const Ring& scalars() const noexcept;
    /// True if some nesting level uses this variable name.
    bool has_variable(std::string_view name) const noexcept;

    std::string to_string() const;

    Value zero() const;
    Value one() const;
    /// Image of k under the unique unital map Z -> R.
    Value from_integer(const mpz_class& k) const;
    Value from_integer(long k) const;
    /// Image of a fraction; fails unless the denominator maps to a unit.
    Value from_rational(const mpq_class& q) const;
    /// The polynomial variable of this level, as an element of this ring.
    Value generator() const;

    friend bool operator==(const Ring& a, const Ring& b) noexcept;

private:
    struct Node;
    explicit Ring(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Ring& ring);

/// An element of a Ring. Representations are canonical, so structural
/// equality is ring equality.
class Value {
public:
    /// Wraps a polynomial as an element of its polynomial ring.
    static Value from_polynomial(Polynomial p);

    const Ring& ring() const noexcept { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    /// Integer payload (Integers) or residue in [0, n) (IntegersMod).
    const mpz_class& integer() const;
    /// Reduced fraction with positive denominator (Rationals).
    const mpq_class& rational() const;
    const Polynomial& polynomial() const;

    /// Canonical literal, e.g. "-3/2" or "x*y^2-2*y+1".
    std::string to_string() const;

    Value operator-() const;
    Value& operator+=(const Value& rhs);
    Value& operator-=(const Value& rhs);
    Value& operator*=(const Value& rhs);

    friend Value operator+(Value lhs, const Value& rhs) { return lhs += rhs; }
    friend Value operator-(Value lhs, const Value& rhs) { return lhs -= rhs; }
    friend Value operator*(Value lhs, const Value& rhs) { return lhs *= rhs; }
    friend bool operator==(const Value& a, const Value& b);

private:
    using Rep = std::variant<mpz_class, mpq_class, std::shared_ptr<const Polynomial>>;

    Value(Ring ring, Rep rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

    Ring ring_;
    Rep rep_;

    friend class Ring;
    friend class Polynomial;
    friend Value embed(const Value& v, const Ring& target);
    friend Value inverse(const Value& v);
};

std::ostream& operator<<(std::ostream& os, const Value& v);

/// Dense univariate polynomial, an element of the polynomial ring `ring`.
/// The zero polynomial has no coefficients and no degree.
class Polynomial {
public:
    /// The zero polynomial of `ring`, which must be a polynomial ring.
    explicit Polynomial(Ring ring);
    Polynomial(Ring ring, std::vector<Value> coefficients);

    const Ring& ring() const noexcept { return ring_; }
    const Ring& base() const { return ring_.base(); }
    std::span<const Value> coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept;
    /// Coefficient of x^i; zero past the degree.
    Value coefficient(std::size_t i) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void normalize();

    Ring ring_;
    std::vector<Value> coeffs_;
};

/// Evaluation homomorphism base[x] -> base at `at`.
Value evaluate(const Polynomial& p, const Value& at);

/// Evaluates a polynomial at a point of any ring the base embeds into; this is
/// how substitutions such as x -> x + y are carried out.
Value evaluate_into(const Polynomial& p, const Value& at);

/// Maps v into `target`, which must be v's ring or a polynomial tower over it.
Value embed(const Value& v, const Ring& target);

bool is_unit(const Value& v);
/// Throws NotAUnit unless is_unit(v).
Value inverse(const Value& v);
Value pow(const Value& v, unsigned long exponent);

/// k * v without leaving the ring.
Value scale(const Value& v, const mpz_class& k);

/// base[names[0]][names[1]]...; the first name is the innermost variable.
Ring polynomial_tower(const Ring& base, std::span<const std::string> names);
/// The variable `name` of some nesting level of `ring`, as an element of `ring`.
Value variable(const Ring& ring, std::string_view name);

/// The ring with the innermost Z replaced by Q (other rings unchanged).
Ring rational_closure(const Ring& ring);
/// Z -> Q lift, applied through polynomial levels.
Value lift_to_rationals(const Value& v);
/// Inverse of lift_to_rationals; fails with RetractFailed on a non-integral value.
Value retract(const Value& v, const Ring& target);

}  // namespace seqalg
