#pragma once

// Test-only helpers: seeded random generators and brute-force oracles that do
// not go through the library code paths they check.

#include "hurwitz/ring.hpp"
#include "hurwitz/seq.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace seqalg::test {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Value value(const Ring& ring)
    {
        switch (ring.kind()) {
        case Ring::Kind::Integers: return ring.from_integer(integer(-9, 9));
        case Ring::Kind::Rationals: return ring.from_rational(mpq_class(integer(-9, 9), integer(1, 6)));
        case Ring::Kind::IntegersMod: return ring.from_integer(integer(0, ring.modulus().get_si() - 1));
        case Ring::Kind::Polynomials: {
            std::vector<Value> c;
            const long degree = integer(0, 2);
            for (long i = 0; i <= degree; ++i)
                c.push_back(value(ring.base()));
            return Value::from_polynomial(Polynomial(ring, std::move(c)));
        }
        }
        return ring.zero();
    }

    Seq seq(const Ring& ring, std::size_t n)
    {
        std::vector<Value> t;
        for (std::size_t i = 0; i < n; ++i)
            t.push_back(value(ring));
        return Seq(ring, std::move(t));
    }

    /// a_0 = head, rest random.
    Seq seq_with_head(const Ring& ring, std::size_t n, const Value& head)
    {
        std::vector<Value> t{head};
        for (std::size_t i = 1; i < n; ++i)
            t.push_back(value(ring));
        return Seq(ring, std::move(t));
    }

    /// a_0 = 0, a_1 = 1, rest random.
    Seq seq_reversible(const Ring& ring, std::size_t n)
    {
        std::vector<Value> t{ring.zero(), ring.one()};
        for (std::size_t i = 2; i < n; ++i)
            t.push_back(value(ring));
        return Seq(ring, std::move(t));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Symbols x_1..x_m as an integer polynomial tower, the first innermost.
struct Symbols {
    Ring ring;
    std::vector<Value> vars;

    Symbols(const Ring& base, const std::vector<std::string>& names)
        : ring(polynomial_tower(base, names))
    {
        for (const auto& n : names)
            vars.push_back(variable(ring, n));
    }
    const Value& operator[](std::size_t i) const { return vars.at(i); }
    Value c(long k) const { return ring.from_integer(k); }
};

/// All set partitions of {0..n-1} as block-size lists, via restricted growth strings.
inline std::vector<std::vector<std::size_t>> set_partition_block_sizes(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::size_t> rgs(n, 0);
    while (true) {
        const std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::size_t> sizes(blocks, 0);
        for (auto b : rgs)
            ++sizes[b];
        out.push_back(sizes);
        // next restricted growth string
        std::size_t i = n;
        while (i-- > 1) {
            const std::size_t prefix_max = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(i));
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                std::fill(rgs.begin() + static_cast<long>(i) + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0)
            break;
    }
    return out;
}

/// Number of set partitions of an n-set into k blocks, by enumeration.
inline long count_set_partitions(std::size_t n, std::size_t k)
{
    long c = 0;
    for (const auto& p : set_partition_block_sizes(n))
        c += p.size() == k ? 1 : 0;
    return c;
}

/// Number of permutations of n points with k cycles, by enumeration.
inline long count_permutations_by_cycles(std::size_t n, std::size_t k)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long c = 0;
    do {
        std::vector<bool> seen(n, false);
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i])
                continue;
            ++cycles;
            for (std::size_t j = i; !seen[j]; j = perm[j])
                seen[j] = true;
        }
        c += cycles == k ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

/// Exponential partial Bell polynomial as a sum over set partitions with k
/// blocks of prod x_{|block|}. xs[0] is x_1.
inline Value bell_exponential_by_partitions(const Ring& ring, const std::vector<Value>& xs, std::size_t n,
                                            std::size_t k)
{
    Value sum = ring.zero();
    for (const auto& sizes : set_partition_block_sizes(n)) {
        if (sizes.size() != k)
            continue;
        Value term = ring.one();
        for (auto s : sizes)
            term *= s <= xs.size() ? xs[s - 1] : ring.zero();
        sum += term;
    }
    return sum;
}

/// Naive truncated product of ordinary coefficient vectors.
inline std::vector<Value> naive_convolution(const std::vector<Value>& a, const std::vector<Value>& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Value> c(n, a.front().ring().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

/// Bell numbers by set-partition count.
inline long bell_number(std::size_t n) { return static_cast<long>(set_partition_block_sizes(n).size()); }

inline long falling_int(long x, long k)
{
    long r = 1;
    for (long h = 0; h < k; ++h)
        r *= x - h;
    return r;
}

}  // namespace seqalg::test
