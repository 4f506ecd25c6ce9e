#include "hurwitz/document.hpp"

#include "hurwitz/error.hpp"
#include "hurwitz/literal.hpp"

#include <json.hpp>

#include <algorithm>

namespace seqalg {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kConvention = "egf-terms";

bool is_integer_lexeme(const std::string& s)
{
    const std::size_t start = !s.empty() && s[0] == '-';
    return s.size() > start && std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Integers beyond 64 bits arrive as doubles; keep their digits as strings instead.
struct ExactSax : nlohmann::detail::json_sax_dom_parser<Json> {
    using json_sax_dom_parser::json_sax_dom_parser;

    bool number_float(double value, const std::string& lexeme)
    {
        if (is_integer_lexeme(lexeme)) {
            std::string copy = lexeme;
            return string(copy);
        }
        return json_sax_dom_parser::number_float(value, lexeme);
    }
};

[[noreturn]] void syntax_error(std::string_view text, const nlohmann::json::parse_error& e)
{
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    std::string what = e.what();
    if (const auto at = what.find(": "); at != std::string::npos)
        what = what.substr(at + 2);
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                           what);
}

[[noreturn]] void field_error(const std::string& where, const std::string& what)
{
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

Value parse_term(const Json& t, const Ring& ring, std::size_t i)
{
    const std::string where = "terms[" + std::to_string(i) + "]";
    if (t.is_number_integer())
        return ring.from_integer(mpz_class(t.dump()));
    if (t.is_number())
        field_error(where, "non-integer number " + t.dump() + "; write fractions as strings");
    if (!t.is_string())
        field_error(where, "expected an integer or a literal string");
    try {
        return parse_value(t.get<std::string>(), ring);
    } catch (const Error& e) {
        throw Error(e.kind(), where + ": " + e.detail());
    }
}

}  // namespace

Seq parse_seq(std::string_view document)
{
    Json doc;
    try {
        ExactSax sax(doc);
        Json::sax_parse(document.begin(), document.end(), &sax);
    } catch (const nlohmann::json::parse_error& e) {
        syntax_error(document, e);
    }
    if (!doc.is_object())
        field_error("document", "expected a JSON object");

    for (const auto& [key, _] : doc.items()) {
        if (key != "ring" && key != "convention" && key != "length" && key != "terms")
            field_error(key, "unknown field");
    }
    if (!doc.contains("ring") || !doc["ring"].is_string())
        field_error("ring", "missing or not a string");
    if (!doc.contains("terms") || !doc["terms"].is_array())
        field_error("terms", "missing or not an array");
    if (doc.contains("convention") && doc["convention"] != std::string(kConvention))
        field_error("convention", "expected \"egf-terms\", got " + doc["convention"].dump());

    const Ring ring = Ring::parse(doc["ring"].get<std::string>());
    const Json& terms = doc["terms"];
    if (doc.contains("length")) {
        const Json& length = doc["length"];
        if (!length.is_number_unsigned())
            field_error("length", "expected a non-negative integer");
        if (length.get<std::size_t>() != terms.size())
            field_error("length", "declares " + length.dump() + " terms but " + std::to_string(terms.size()) +
                                      " are given");
    }
    if (terms.empty())
        throw Error(ErrorKind::LengthTooShort, "terms: a sequence needs at least one term");

    std::vector<Value> values;
    for (std::size_t i = 0; i < terms.size(); ++i)
        values.push_back(parse_term(terms[i], ring, i));
    return Seq(ring, std::move(values));
}

std::string serialize_seq(const Seq& s)
{
    const Ring& ring = s.ring();
    const bool integral = ring.kind() == Ring::Kind::Integers || ring.kind() == Ring::Kind::IntegersMod;
    Json terms = Json::array();
    for (const Value& v : s.terms()) {
        if (integral && v.integer().fits_slong_p() && sizeof(long) >= 8)
            terms.push_back(v.integer().get_si());
        else
            terms.push_back(v.to_string());
    }
    // the term list stays on one line
    std::string items;
    for (const auto& t : terms)
        items += (items.empty() ? "" : ", ") + t.dump();
    return "{\n  \"ring\": " + Json(ring.to_string()).dump() + ",\n  \"convention\": \"" + std::string(kConvention) +
           "\",\n  \"length\": " + std::to_string(s.size()) + ",\n  \"terms\": [" + items + "]\n}\n";
}

}  // namespace seqalg
