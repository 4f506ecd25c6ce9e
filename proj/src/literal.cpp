#include "hurwitz/literal.hpp"

#include "hurwitz/error.hpp"

#include <cctype>

namespace seqalg {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Value parse_all()
    {
        Value v = expression();
        skip_space();
        if (pos_ < text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

    std::size_t position() const noexcept { return pos_; }

    Value expression()
    {
        skip_space();
        Value v = term();
        while (true) {
            skip_space();
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::ParseError) const
    {
        throw Error(kind, "column " + std::to_string(pos_ + 1) + ": " + what);
    }

private:
    Value term()
    {
        Value v = unary();
        while (true) {
            skip_space();
            if (accept('*')) {
                v *= unary();
            } else if (peek() == '/') {
                const std::size_t at = pos_++;
                const Value d = unary();
                if (!is_unit(d)) {
                    pos_ = at;
                    fail("cannot divide by " + d.to_string() + " in " + ring_.to_string(), ErrorKind::RingMismatch);
                }
                v *= inverse(d);
            } else {
                return v;
            }
        }
    }

    Value unary()
    {
        skip_space();
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    Value power()
    {
        Value base = atom();
        skip_space();
        if (!accept('^'))
            return base;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a non-negative integer exponent");
        const mpz_class e = digits();
        if (!e.fits_ulong_p())
            fail("exponent too large");
        return pow(base, e.get_ui());
    }

    Value atom()
    {
        skip_space();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ring_.from_integer(digits());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            try {
                return variable(ring_, name);
            } catch (const Error&) {
                pos_ = start;
                fail("unknown variable '" + name + "' for " + ring_.to_string(), ErrorKind::RingMismatch);
            }
        }
        if (accept('(')) {
            Value v = expression();
            skip_space();
            if (!accept(')'))
                fail("expected ')'");
            return v;
        }
        fail(pos_ < text_.size() ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of literal");
    }

    mpz_class digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Value parse_value(std::string_view text, const Ring& ring)
{
    if (text.find_first_not_of(" \t") == std::string_view::npos)
        throw Error(ErrorKind::ParseError, "column 1: empty literal");
    return Parser(text, ring).parse_all();
}

std::vector<Value> parse_value_list(std::string_view text, const Ring& ring)
{
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos)
        throw Error(ErrorKind::ParseError, "column 1: empty list");
    std::size_t offset = first;
    std::string_view body = text.substr(first, last - first + 1);
    if (body.front() == '[' || body.front() == '(') {
        const char close = body.front() == '[' ? ']' : ')';
        if (body.back() != close)
            throw Error(ErrorKind::ParseError,
                        "column " + std::to_string(last + 1) + ": expected '" + std::string(1, close) + "'");
        body = body.substr(1, body.size() - 2);
        ++offset;
    }

    std::vector<Value> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        const std::string_view item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
        try {
            out.push_back(parse_value(item, ring));
        } catch (const Error& e) {
            // re-base the column onto the whole list
            const std::string& d = e.detail();
            std::size_t col = 1;
            if (d.rfind("column ", 0) == 0)
                col = std::stoul(d.substr(7));
            const auto colon = d.find(": ");
            throw Error(e.kind(), "column " + std::to_string(offset + start + col) + ": " +
                                                   (colon == std::string::npos ? d : d.substr(colon + 2)));
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

}  // namespace seqalg
