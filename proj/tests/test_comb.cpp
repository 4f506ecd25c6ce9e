#include "doctest.h"

#include "hurwitz/comb.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/seq.hpp"
#include "support.hpp"

using namespace seqalg;
using seqalg::test::Gen;
using seqalg::test::Symbols;

TEST_SUITE("comb")
{
    TEST_CASE("factorials and binomials")
    {
        CHECK(factorial(0) == 1);
        CHECK(factorial(10) == 3628800);
        CHECK(binomial(4, 2) == 6);
        CHECK(binomial(3, 5) == 0);
        CHECK(binomial(0, 0) == 1);
    }

    TEST_CASE("Stirling numbers against enumeration")
    {
        CHECK(seqalg::test::count_set_partitions(4, 2) == 7);
        CHECK(stirling2(4, 2) == 7);
        CHECK(seqalg::test::count_permutations_by_cycles(4, 2) == 11);
        CHECK(stirling1_unsigned(4, 2) == 11);
        CHECK(stirling2(0, 0) == 1);
        CHECK(stirling1_unsigned(0, 0) == 1);
        CHECK(stirling2(3, 5) == 0);
        for (unsigned n = 0; n <= 10; ++n)
            CHECK(stirling2(n, n) == 1);

        const auto s2 = stirling2_table(7);
        const auto s1 = stirling1_unsigned_table(7);
        for (std::size_t n = 0; n <= 7; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                CHECK(s2[n][k] == seqalg::test::count_set_partitions(n, k));
                CHECK(s1[n][k] == seqalg::test::count_permutations_by_cycles(n, k));
            }
        }
    }

    TEST_CASE("ordinary partial Bell boundary values")
    {
        const Symbols s(Ring::integers(), {"x1", "x2", "x3"});
        const BellArguments args(s.ring, s.vars);
        CHECK(ordinary_bell_partial(args, 0, 0).is_one());
        for (std::size_t n = 1; n <= 4; ++n)
            CHECK(ordinary_bell_partial(args, n, 0).is_zero());
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(ordinary_bell_partial(args, 0, k).is_zero());
        CHECK(ordinary_bell_partial(args, 2, 5).is_zero());
    }

    TEST_CASE("ordinary partial Bell symbolic values")
    {
        const Symbols s(Ring::integers(), {"x1", "x2", "x3", "x4", "x5", "x6"});
        const BellArguments args(s.ring, s.vars);
        // (x1 z + x2 z^2 + x3 z^3)^2 has z^3 coefficient 2 x1 x2
        CHECK(ordinary_bell_partial(args, 3, 2) == s.c(2) * s[0] * s[1]);
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(ordinary_bell_partial(args, n, 1) == s[n - 1]);

        CHECK(ordinary_bell_complete(args, 0).is_one());
        CHECK(ordinary_bell_complete(args, 2) == s[0] * s[0] + s[1]);
        CHECK(ordinary_bell_complete(args, 3) == s[0] * s[0] * s[0] + s.c(2) * s[0] * s[1] + s[2]);
    }

    TEST_CASE("exponential partial Bell symbolic values")
    {
        const Symbols s(Ring::integers(), {"x1", "x2", "x3", "x4", "x5"});
        const BellArguments args(s.ring, s.vars);
        for (std::size_t n = 0; n <= 5; ++n)
            CHECK(exponential_bell_partial(args, n, n) == pow(s[0], n));
        CHECK(exponential_bell_partial(args, 3, 2) == s.c(3) * s[0] * s[1]);
        CHECK(exponential_bell_partial(args, 4, 2) == s.c(4) * s[0] * s[2] + s.c(3) * s[1] * s[1]);

        // every entry up to n = 5 against set-partition enumeration
        const BellTable t = exponential_bell_table(args, 5);
        for (std::size_t n = 0; n <= 5; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(t(n, k) == seqalg::test::bell_exponential_by_partitions(s.ring, s.vars, n, k));
    }

    TEST_CASE("ordinary Bell polynomials are Cauchy-power coefficients")
    {
        Gen gen(21);
        const Ring z = Ring::integers();
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Value> xs;
            for (int j = 0; j < 6; ++j)
                xs.push_back(z.from_integer(gen.integer(-5, 5)));
            const BellArguments args(z, xs);
            std::vector<Value> series{z.zero()};
            series.insert(series.end(), xs.begin(), xs.end());
            const Seq base(z, series);
            Seq power = hurwitz_identity(z, base.size());
            for (std::size_t k = 0; k <= 6; ++k) {
                for (std::size_t n = 0; n <= 6; ++n)
                    CHECK(ordinary_bell_partial(args, n, k) == power[n]);
                power = cauchy(power, base);
            }
        }
    }

    TEST_CASE("exponential and ordinary Bell polynomials agree over Q")
    {
        Gen gen(22);
        const Ring q = Ring::rationals();
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Value> xs, scaled;
            for (unsigned j = 1; j <= 8; ++j) {
                xs.push_back(gen.value(q));
                scaled.push_back(xs.back() * q.from_rational(mpq_class(1, factorial(j))));
            }
            const BellTable hat = exponential_bell_table(BellArguments(q, xs), 8);
            const BellTable ord = ordinary_bell_table(BellArguments(q, scaled), 8);
            for (unsigned n = 0; n <= 8; ++n)
                for (unsigned k = 0; k <= n; ++k)
                    CHECK(hat(n, k) == ord(n, k) * q.from_rational(mpq_class(factorial(n), factorial(k))));
        }
    }

    TEST_CASE("row sums of B^ at all-ones are Bell numbers")
    {
        const Ring z = Ring::integers();
        const BellTable t = exponential_bell_table(BellArguments(z, std::vector<Value>(8, z.one())), 8);
        for (std::size_t n = 0; n <= 8; ++n) {
            Value sum = z.zero();
            for (std::size_t k = 0; k <= n; ++k)
                sum += t(n, k);
            CHECK(sum.integer() == seqalg::test::bell_number(n));
        }
    }

    TEST_CASE("Bell arguments reject mixed rings")
    {
        CHECK_THROWS_AS(BellArguments(Ring::integers(), {Ring::rationals().one()}), Error);
        const BellArguments args(Ring::integers(), {Ring::integers().one()});
        BellTable t(BellTable::Kind::Ordinary, Ring::rationals());
        CHECK_THROWS_AS(t.extend(args), Error);
    }
}
