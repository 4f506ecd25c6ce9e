#include "hurwitz/oeis.hpp"

#include "hurwitz/error.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace seqalg {

namespace {

using Json = nlohmann::json;

constexpr std::size_t kMinPrefix = 4;
constexpr time_t kTimeoutSeconds = 10;

std::vector<mpz_class> split_data(const std::string& data)
{
    std::vector<mpz_class> out;
    std::stringstream in(data);
    std::string item;
    while (std::getline(in, item, ','))
        out.emplace_back(item);
    return out;
}

long first_index(const Json& entry)
{
    if (!entry.contains("offset"))
        return 0;
    const Json& o = entry["offset"];
    if (o.is_number_integer())
        return o.get<long>();
    if (o.is_string())
        return std::stol(o.get<std::string>());
    return 0;
}

std::string a_number(const Json& entry)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "A%06ld", entry["number"].get<long>());
    return buf;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

std::string fetch(const std::string& path)
{
    httplib::Client client("https://oeis.org");
    client.set_connection_timeout(kTimeoutSeconds);
    client.set_read_timeout(kTimeoutSeconds);
    client.set_write_timeout(kTimeoutSeconds);
    const auto res = client.Get(path);
    if (!res)
        throw Error(ErrorKind::HttpError, "request failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw Error(ErrorKind::HttpError, "status " + std::to_string(res->status));
    return res->body;
}

}  // namespace

std::string oeis_query(std::span<const mpz_class> prefix)
{
    std::string q = "/search?fmt=json&q=";
    for (std::size_t i = 0; i < prefix.size(); ++i)
        q += (i ? "," : "") + prefix[i].get_str();
    return q;
}

std::vector<OeisHit> oeis_matches(std::string_view response, std::span<const mpz_class> prefix)
{
    Json body;
    try {
        body = Json::parse(response);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("search response: ") + e.what());
    }
    if (body.is_object())
        body = body.contains("results") ? body["results"] : Json();
    if (body.is_null())
        return {};
    if (!body.is_array())
        throw Error(ErrorKind::ParseError, "search response: expected an array of entries");

    std::vector<OeisHit> hits;
    for (const Json& entry : body) {
        if (!entry.contains("number") || !entry.contains("data"))
            continue;
        const auto data = split_data(entry["data"].get<std::string>());
        if (data.size() < prefix.size())
            continue;
        for (std::size_t start = 0; start + prefix.size() <= data.size(); ++start) {
            if (std::equal(prefix.begin(), prefix.end(), data.begin() + static_cast<std::ptrdiff_t>(start))) {
                hits.push_back({a_number(entry), entry.value("name", ""),
                                first_index(entry) + static_cast<long>(start)});
                break;
            }
        }
    }
    return hits;
}

std::vector<OeisHit> oeis_lookup(std::span<const mpz_class> prefix, const OeisSource& source)
{
    if (prefix.size() < kMinPrefix)
        throw Error(ErrorKind::PrefixTooShort, "got " + std::to_string(prefix.size()) + " terms, need at least " +
                                                   std::to_string(kMinPrefix));
    if (source.online)
        return oeis_matches(fetch(oeis_query(prefix)), prefix);
    if (!source.fixture.empty())
        return oeis_matches(read_file(source.fixture), prefix);
    throw Error(ErrorKind::NetworkDisabled, "pass --online to query oeis.org, or --fixture FILE");
}

}  // namespace seqalg
