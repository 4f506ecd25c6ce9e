#pragma once

// Integer combinatorics and partial Bell polynomials evaluated over any Ring.

#include "hurwitz/ring.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace seqalg {

mpz_class factorial(unsigned long n);
/// Zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

/// Rows 0..n_max of the Stirling triangles; row n has entries k = 0..n.
std::vector<std::vector<mpz_class>> stirling2_table(std::size_t n_max);
std::vector<std::vector<mpz_class>> stirling1_unsigned_table(std::size_t n_max);

mpz_class stirling2(unsigned long n, unsigned long k);
mpz_class stirling1_unsigned(unsigned long n, unsigned long k);

/// The argument list x_1, x_2, ... of a Bell polynomial. Indexing is 1-based;
/// entries past the stored ones read as zero.
class BellArguments {
public:
    BellArguments(Ring ring, std::vector<Value> values);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return values_.size(); }
    Value operator[](std::size_t j) const;

private:
    Ring ring_;
    std::vector<Value> values_;
};

/// Triangle of partial Bell polynomial values B_{n,k}, 0 <= k <= n, grown one
/// row at a time. Row n depends on x_1..x_n only, and only entry (n, 1) depends
/// on x_n, which is what lets reversion solve for x_n after building the row.
class BellTable {
public:
    enum class Kind {
        /// coefficient of z^n in (sum x_j z^j)^k
        Ordinary,
        /// set-partition weighted: B^_{n,k} = sum_j C(n-1, j-1) x_j B^_{n-j,k-1}
        Exponential,
    };

    BellTable(Kind kind, Ring ring);

    std::size_t rows() const noexcept { return rows_.size(); }
    /// Zero when k > n.
    const Value& operator()(std::size_t n, std::size_t k) const;

    /// Appends row n = rows() using x_1..x_n of args.
    void extend(const BellArguments& args);
    /// Overwrites entry (n, 1) of the last row with x_n.
    void set_linear_entry(const Value& x_n);

private:
    Kind kind_;
    Ring ring_;
    Value zero_;
    std::vector<std::vector<Value>> rows_;
};

BellTable ordinary_bell_table(const BellArguments& args, std::size_t n_max);
BellTable exponential_bell_table(const BellArguments& args, std::size_t n_max);

Value ordinary_bell_partial(const BellArguments& args, std::size_t n, std::size_t k);
/// B_0 = 1 and B_n = sum_{k=1..n} B_{n,k}.
Value ordinary_bell_complete(const BellArguments& args, std::size_t n);
Value exponential_bell_partial(const BellArguments& args, std::size_t n, std::size_t k);

}  // namespace seqalg
