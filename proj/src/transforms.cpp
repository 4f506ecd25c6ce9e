#include "hurwitz/transforms.hpp"

#include "hurwitz/comb.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/inversion.hpp"
#include "hurwitz/literal.hpp"

namespace seqalg {

namespace {

template <class... F>
struct Overloaded : F... {
    using F::operator()...;
};

// b_n = sum_h sign(n, h) table[n][h] a_h
Seq triangle_transform(const Seq& a, const std::vector<std::vector<mpz_class>>& table, bool alternate)
{
    std::vector<Value> t;
    t.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        Value sum = a.ring().zero();
        for (std::size_t h = 0; h <= n; ++h) {
            if (a[h].is_zero())
                continue;
            const Value term = scale(a[h], table[n][h]);
            sum += alternate && (n - h) % 2 ? -term : term;
        }
        t.push_back(std::move(sum));
    }
    return Seq(a.ring(), std::move(t));
}

}  // namespace

ComposeBy::ComposeBy(Seq b) : b_(std::move(b))
{
    if (!b_[0].is_zero())
        throw Error(ErrorKind::NotZeroOfOrderOne, "mu needs a sequence starting with 0, got " + b_[0].to_string());
}

Seq apply(const TransformSpec& t, const Seq& a)
{
    return std::visit(Overloaded{
                          [&](const AltSign&) {
                              std::vector<Value> out;
                              for (std::size_t n = 0; n < a.size(); ++n)
                                  out.push_back(n % 2 ? -a[n] : a[n]);
                              return Seq(a.ring(), std::move(out));
                          },
                          [&](const Stirling&) { return triangle_transform(a, stirling2_table(a.size()), false); },
                          [&](const StirlingInverse&) {
                              return triangle_transform(a, stirling1_unsigned_table(a.size()), true);
                          },
                          [&](const ComposeBy& c) { return compose_egf(a, c.inner()); },
                          [&](const HadamardBeta& h) { return hadamard(a, beta(h.r, a.size())); },
                      },
                      t);
}

TransformSpec invert_spec(const TransformSpec& t)
{
    return std::visit(Overloaded{
                          [](const AltSign&) -> TransformSpec { return AltSign{}; },
                          [](const Stirling&) -> TransformSpec { return StirlingInverse{}; },
                          [](const StirlingInverse&) -> TransformSpec { return Stirling{}; },
                          [](const ComposeBy& c) -> TransformSpec { return ComposeBy(comp_inverse(c.inner())); },
                          [](const HadamardBeta& h) -> TransformSpec { return HadamardBeta{inverse(h.r)}; },
                      },
                      t);
}

TransformSpec parse_transform(std::string_view text, const Ring& ring)
{
    if (text == "altsign")
        return AltSign{};
    if (text == "stirling")
        return Stirling{};
    if (text == "stirling-inv")
        return StirlingInverse{};
    if (text.rfind("mu:", 0) == 0)
        return ComposeBy(Seq(ring, parse_value_list(text.substr(3), ring)));
    if (text.rfind("beta:", 0) == 0)
        return HadamardBeta{parse_value(text.substr(5), ring)};
    throw Error(ErrorKind::ParseError,
                "unknown transform '" + std::string(text) + "' (altsign, stirling, stirling-inv, mu:[...], beta:r)");
}

std::string to_string(const TransformSpec& t)
{
    return std::visit(Overloaded{
                          [](const AltSign&) -> std::string { return "altsign"; },
                          [](const Stirling&) -> std::string { return "stirling"; },
                          [](const StirlingInverse&) -> std::string { return "stirling-inv"; },
                          [](const ComposeBy& c) {
                              std::string s = "mu:[";
                              for (std::size_t n = 0; n < c.inner().size(); ++n)
                                  s += (n ? "," : "") + c.inner()[n].to_string();
                              return s + "]";
                          },
                          [](const HadamardBeta& h) { return "beta:" + h.r.to_string(); },
                      },
                      t);
}

}  // namespace seqalg
