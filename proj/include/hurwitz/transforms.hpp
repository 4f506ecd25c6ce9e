#pragma once

// Endomorphisms of (H_R, +, Hurwitz product) as plain data, so they can be
// parsed from a command line, inverted and applied later.

#include "hurwitz/seq.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace seqalg {

/// a -> (-1)^n a_n
struct AltSign {
    bool operator==(const AltSign&) const = default;
};
/// a -> sum_h S2(n, h) a_h
struct Stirling {
    bool operator==(const Stirling&) const = default;
};
/// a -> sum_h (-1)^{n-h} s1(n, h) a_h
struct StirlingInverse {
    bool operator==(const StirlingInverse&) const = default;
};
/// a -> a o b, with b_0 = 0 (NotZeroOfOrderOne otherwise).
class ComposeBy {
public:
    explicit ComposeBy(Seq b);
    const Seq& inner() const noexcept { return b_; }
    bool operator==(const ComposeBy&) const = default;

private:
    Seq b_;
};
/// a -> a . beta(r)
struct HadamardBeta {
    Value r;
    bool operator==(const HadamardBeta&) const = default;
};

using TransformSpec = std::variant<AltSign, Stirling, StirlingInverse, ComposeBy, HadamardBeta>;

/// Call as seqalg::apply; argument-dependent lookup also finds std::apply.
Seq apply(const TransformSpec& t, const Seq& a);

/// The inverse automorphism: mu_b -> mu_{comp_inverse(b)}, H_r -> H_{1/r},
/// altsign -> altsign, stirling <-> stirling-inv.
TransformSpec invert_spec(const TransformSpec& t);

/// "altsign", "stirling", "stirling-inv", "mu:[0,1,1]" or "beta:<value>", with
/// payloads read in `ring`.
TransformSpec parse_transform(std::string_view text, const Ring& ring);
std::string to_string(const TransformSpec& t);

}  // namespace seqalg
