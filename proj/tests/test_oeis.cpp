#include "doctest.h"

#include "hurwitz/error.hpp"
#include "hurwitz/oeis.hpp"

#include <vector>

using namespace seqalg;

namespace {

const std::string kFixture = std::string(TEST_DATA_DIR) + "/oeis_fixture.json";

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

bool has(const std::vector<OeisHit>& hits, const std::string& id)
{
    return std::any_of(hits.begin(), hits.end(), [&](const OeisHit& h) { return h.id == id; });
}

ErrorKind error_kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_SUITE("oeis")
{
    TEST_CASE("recorded lookups")
    {
        const OeisSource offline{false, kFixture};
        CHECK(has(oeis_lookup(ints({1, 1, 2, 5, 15, 52}), offline), "A000110"));
        const auto factorials = oeis_lookup(ints({1, 1, 2, 6}), offline);
        REQUIRE(has(factorials, "A000142"));
        CHECK_FALSE(has(factorials, "A000110"));

        const auto fib = oeis_lookup(ints({1, 1, 2, 3, 5}), offline);
        REQUIRE(fib.size() == 1);
        CHECK(fib[0] == OeisHit{"A000045", fib[0].name, 1});
        CHECK(fib[0].name.rfind("Fibonacci numbers", 0) == 0);

        const std::vector<mpz_class> big{mpz_class("6402373705728000"), mpz_class("121645100408832000"),
                                         mpz_class("2432902008176640000"), mpz_class("51090942171709440000")};
        const auto tail = oeis_lookup(big, offline);
        REQUIRE(tail.size() == 1);
        CHECK(tail[0].offset == 18);
    }

    TEST_CASE("only exact contiguous runs match")
    {
        const OeisSource offline{false, kFixture};
        CHECK(oeis_lookup(ints({1, 2, 5, 52}), offline).empty());
        CHECK(oeis_lookup(ints({1, 1, 1, 4, 1, -19}), offline).empty());
        CHECK(oeis_lookup(ints({1, 1, 2, 9, 24, 110}), offline).empty());
    }

    TEST_CASE("errors")
    {
        CHECK(error_kind_of([] { oeis_lookup(ints({1, 1, 2, 5}), {}); }) == ErrorKind::NetworkDisabled);
        CHECK(error_kind_of([] { oeis_lookup(ints({1, 1, 2}), {false, kFixture}); }) == ErrorKind::PrefixTooShort);
        CHECK(error_kind_of([] { oeis_lookup(ints({1, 1, 2, 5}), {false, "/nonexistent/file.json"}); }) ==
              ErrorKind::ParseError);
    }

    TEST_CASE("response shapes")
    {
        const auto p = ints({2, 3, 5, 7});
        const std::string entry = R"({"number": 40, "name": "The prime numbers.", "data": "2,3,5,7,11", "offset": "1,1"})";
        CHECK(oeis_matches("[" + entry + "]", p) == std::vector<OeisHit>{{"A000040", "The prime numbers.", 1}});
        CHECK(oeis_matches(R"({"greeting": "hi", "results": [)" + entry + "]}", p).size() == 1);
        CHECK(oeis_matches(R"({"results": null})", p).empty());
        CHECK(oeis_matches("null", p).empty());
        CHECK(error_kind_of([&] { oeis_matches("<html>", p); }) == ErrorKind::ParseError);
        CHECK(oeis_query(p) == "/search?fmt=json&q=2,3,5,7");
    }
}
