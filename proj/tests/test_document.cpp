#include "doctest.h"

#include "hurwitz/document.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/literal.hpp"
#include "support.hpp"

using namespace seqalg;
using seqalg::test::Gen;

namespace {

Error error_of(std::string_view doc)
{
    try {
        parse_seq(doc);
    } catch (const Error& e) {
        return e;
    }
    FAIL("accepted " << doc);
    return Error(ErrorKind::ParseError, "");
}

/// Small terms mixed with ones whose coefficients run far past 64 bits.
Seq wide(Gen& gen, const Ring& ring, std::size_t n)
{
    std::vector<Value> t;
    for (std::size_t i = 0; i < n; ++i) {
        const Value v = gen.value(ring);
        t.push_back(i % 2 ? ring.from_integer(mpz_class(1) << 80) * v - ring.from_integer(gen.integer(1, 9)) : v);
    }
    return Seq(ring, std::move(t));
}

}  // namespace

TEST_SUITE("document")
{
    TEST_CASE("examples")
    {
        CHECK(parse_seq(R"({"ring":"Z", "terms":[1,1,2,3,5]})") == Seq::from_integers(Ring::integers(), {1, 1, 2, 3, 5}));
        const Ring q = Ring::rationals();
        CHECK(parse_seq(R"({"ring":"Q", "terms":["1","-1/2"]})") ==
              Seq(q, {q.one(), q.from_rational(mpq_class(-1, 2))}));
        const Seq m = parse_seq(R"({"ring":"Zmod:6", "terms":[7]})");
        CHECK(m.ring() == Ring::integers_mod(6));
        CHECK(m[0].integer() == 1);
    }

    TEST_CASE("field order, optional fields and big bare integers")
    {
        const Seq a = parse_seq(R"({"terms": [0, "x", "x^2-1"], "length": 3, "convention": "egf-terms",
                                    "ring": "Poly:x:Z"})");
        const Ring zx = Ring::parse("Poly:x:Z");
        CHECK(a == Seq(zx, parse_value_list("[0, x, x^2-1]", zx)));

        const Seq big = parse_seq(R"({"ring": "Z", "terms": [123456789012345678901234567890, -98765432109876543210]})");
        CHECK(big[0].integer() == mpz_class("123456789012345678901234567890"));
        CHECK(big[1].integer() == mpz_class("-98765432109876543210"));
    }

    TEST_CASE("output format")
    {
        const Seq a = Seq::from_integers(Ring::integers(), {1, -2, 3});
        CHECK(serialize_seq(a) == "{\n  \"ring\": \"Z\",\n  \"convention\": \"egf-terms\",\n  \"length\": 3,\n"
                                  "  \"terms\": [1, -2, 3]\n}\n");
        const Ring q = Ring::rationals();
        CHECK(serialize_seq(Seq(q, {q.one(), q.from_rational(mpq_class(1, 3))})).find(R"("terms": ["1", "1/3"])") !=
              std::string::npos);
        const Ring z = Ring::integers();
        const Seq huge(z, {z.from_integer(mpz_class("9223372036854775807")), z.from_integer(mpz_class("9223372036854775808"))});
        CHECK(serialize_seq(huge).find(R"("terms": [9223372036854775807, "9223372036854775808"])") != std::string::npos);
    }

    TEST_CASE("serialize then parse is the identity")
    {
        Gen gen(81);
        for (const char* text : {"Z", "Q", "Zmod:6", "Zmod:340282366920938463463374607431768211507", "Poly:x:Z",
                                 "Poly:x:Q", "Poly:t:Zmod:5", "Poly:y:Poly:x:Q", "Poly:z:Poly:y:Poly:x:Z"}) {
            const Ring ring = Ring::parse(text);
            for (int trial = 0; trial < 20; ++trial) {
                const Seq a = ring.kind() == Ring::Kind::IntegersMod && ring.modulus() > 100
                                  ? Seq(ring, {ring.from_integer(mpz_class(gen.integer(0, 1L << 40)) << 70),
                                               ring.from_integer(gen.integer(-5, 5))})
                                  : wide(gen, ring, 1 + trial % 7);
                const std::string doc = serialize_seq(a);
                const Seq back = parse_seq(doc);
                CHECK(back == a);
                CHECK(back.ring() == ring);
                CHECK(serialize_seq(back) == doc);
            }
        }
    }

    TEST_CASE("syntax errors carry line and column")
    {
        const Error e = error_of("{\n  \"ring\": \"Z\",\n  \"terms\": [1, 2,]\n}");
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(e.detail().rfind("line 3, column 18:", 0) == 0);
        CHECK(error_of("").detail().rfind("line 1, column 1:", 0) == 0);
        CHECK(error_of("{\"ring\": \"Z\"").detail().rfind("line 1, column 13:", 0) == 0);
    }

    TEST_CASE("invalid documents")
    {
        CHECK(error_of(R"({"ring":"Z","terms":[1],"note":"hi"})").detail() == "note: unknown field");
        CHECK(error_of(R"({"ring":"Z","terms":[1],"convention":"ogf"})").kind() == ErrorKind::ParseError);
        CHECK(error_of(R"({"ring":"Z","terms":[1,2],"length":3})").kind() == ErrorKind::ParseError);
        CHECK(error_of(R"({"ring":"Z","terms":[1.5]})").detail().rfind("terms[0]:", 0) == 0);
        CHECK(error_of(R"({"ring":"Z","terms":[true]})").kind() == ErrorKind::ParseError);
        CHECK(error_of(R"({"terms":[1]})").kind() == ErrorKind::ParseError);
        CHECK(error_of(R"({"ring":"Z","terms":"1,2"})").kind() == ErrorKind::ParseError);
        CHECK(error_of(R"([1, 2])").kind() == ErrorKind::ParseError);
        CHECK(error_of(R"({"ring":"Zmod:1","terms":[1]})").kind() == ErrorKind::InvalidRing);
        CHECK(error_of(R"({"ring":"Z","terms":[]})").kind() == ErrorKind::LengthTooShort);
    }

    TEST_CASE("terms outside the declared ring")
    {
        const Error half = error_of(R"({"ring":"Z","terms":[1,"1/2"]})");
        CHECK(half.kind() == ErrorKind::RingMismatch);
        CHECK(half.detail().rfind("terms[1]: column 2:", 0) == 0);
        CHECK(error_of(R"({"ring":"Poly:x:Z","terms":["1","y"]})").kind() == ErrorKind::RingMismatch);
        CHECK(error_of(R"({"ring":"Zmod:6","terms":["1/3"]})").kind() == ErrorKind::RingMismatch);
        CHECK(parse_seq(R"({"ring":"Zmod:7","terms":["1/3"]})")[0].integer() == 5);
    }
}
