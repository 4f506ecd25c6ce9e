#include "doctest.h"

#include "hurwitz/error.hpp"
#include "hurwitz/literal.hpp"
#include "support.hpp"

using namespace seqalg;
using seqalg::test::Gen;

namespace {

std::string parse_error_of(std::string_view text, const Ring& ring, ErrorKind kind = ErrorKind::ParseError)
{
    try {
        parse_value(text, ring);
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
        return e.detail();
    }
    FAIL("accepted " << text);
    return {};
}

}  // namespace

TEST_SUITE("literal")
{
    TEST_CASE("scalars")
    {
        CHECK(parse_value("42", Ring::integers()).integer() == 42);
        CHECK(parse_value(" -7 ", Ring::integers()).integer() == -7);
        CHECK(parse_value("123456789012345678901234567890", Ring::integers()).integer() ==
              mpz_class("123456789012345678901234567890"));
        CHECK(parse_value("-1/2", Ring::rationals()).rational() == mpq_class(-1, 2));
        CHECK(parse_value("6/4", Ring::rationals()).rational() == mpq_class(3, 2));
        CHECK(parse_value("7", Ring::integers_mod(6)).integer() == 1);
        CHECK(parse_value("1/2", Ring::integers_mod(7)).integer() == 4);
        CHECK(parse_value("2^10-(3*4)", Ring::integers()).integer() == 1012);
    }

    TEST_CASE("polynomials")
    {
        const Ring zx = Ring::parse("Poly:x:Z");
        const Value x = zx.generator();
        CHECK(parse_value("3*x^2+x", zx) == zx.from_integer(3L) * x * x + x);
        CHECK(parse_value("-x^2", zx) == -(x * x));
        CHECK(parse_value("(x+1)^3", zx) == pow(x + zx.one(), 3));

        const Ring nested = Ring::parse("Poly:x:Poly:a:Z");
        const Value a = variable(nested, "a"), xx = variable(nested, "x");
        CHECK(parse_value("x*(x-4*a)^3", nested) == xx * pow(xx - nested.from_integer(4L) * a, 3));
    }

    TEST_CASE("errors carry a column")
    {
        const Ring z = Ring::integers();
        CHECK(parse_error_of("1/2", z, ErrorKind::RingMismatch).rfind("column 2:", 0) == 0);
        CHECK(parse_error_of("2x", z).rfind("column 2:", 0) == 0);
        CHECK(parse_error_of("y", Ring::parse("Poly:x:Z"), ErrorKind::RingMismatch).rfind("column 1:", 0) == 0);
        CHECK(parse_error_of("(1+2", z).rfind("column 5:", 0) == 0);
        CHECK(parse_error_of("", z).rfind("column 1:", 0) == 0);
        CHECK(parse_error_of("1+", z).rfind("column 3:", 0) == 0);
        CHECK(parse_error_of("x^y", Ring::parse("Poly:x:Z")).rfind("column 3:", 0) == 0);
    }

    TEST_CASE("lists")
    {
        const Ring z = Ring::integers();
        const auto v = parse_value_list("[1, -2, 3]", z);
        REQUIRE(v.size() == 3);
        CHECK(v[1].integer() == -2);
        CHECK(parse_value_list("(0,1)", z).size() == 2);
        CHECK(parse_value_list("5", z).size() == 1);
        try {
            parse_value_list("[1, 2x]", z);
            FAIL("bad item accepted");
        } catch (const Error& e) {
            CHECK(e.detail().rfind("column 6:", 0) == 0);
        }
        CHECK_THROWS_AS(parse_value_list("[1,2", z), Error);
        CHECK_THROWS_AS(parse_value_list("[1,,2]", z), Error);
    }

    TEST_CASE("printed values parse back")
    {
        Gen gen(51);
        for (const char* text : {"Z", "Q", "Zmod:6", "Poly:x:Z", "Poly:x:Q", "Poly:y:Poly:x:Zmod:5", "Poly:y:Poly:x:Q"}) {
            const Ring ring = Ring::parse(text);
            for (int i = 0; i < 100; ++i) {
                const Value v = gen.value(ring) * gen.value(ring) - gen.value(ring);
                CHECK(parse_value(v.to_string(), ring) == v);
            }
        }
    }
}
