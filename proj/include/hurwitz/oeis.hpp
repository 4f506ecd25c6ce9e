#pragma once

// Lookup of integer prefixes in the OEIS, either live (opt-in) or against a
// recorded file of search results.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqalg {

struct OeisHit {
    std::string id;  // "A000110"
    std::string name;
    /// OEIS index of the first matched term.
    long offset = 0;

    friend bool operator==(const OeisHit&, const OeisHit&) = default;
};

struct OeisSource {
    /// Query https://oeis.org; without this and without a fixture the lookup
    /// raises NetworkDisabled.
    bool online = false;
    /// Path of a recorded search response; used when not online.
    std::string fixture;
};

/// Entries whose data contains the prefix as a contiguous run. PrefixTooShort
/// below four terms. No match is an empty list.
std::vector<OeisHit> oeis_lookup(std::span<const mpz_class> prefix, const OeisSource& source);

/// Filters a search response body, either a bare array of entries or an
/// object with a "results" array. A null body means no results.
std::vector<OeisHit> oeis_matches(std::string_view response, std::span<const mpz_class> prefix);

/// "/search?fmt=json&q=1,1,2,5"
std::string oeis_query(std::span<const mpz_class> prefix);

}  // namespace seqalg
