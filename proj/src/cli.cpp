#include "hurwitz/cli.hpp"

#include "hurwitz/binomial_type.hpp"
#include "hurwitz/document.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/inversion.hpp"
#include "hurwitz/literal.hpp"
#include "hurwitz/oeis.hpp"
#include "hurwitz/tau.hpp"
#include "hurwitz/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace seqalg {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string verb;
    std::string a, b, u;
    std::optional<std::size_t> n;
    std::string ring;
    std::string transform;
    std::string value = "0";
    unsigned long exponent = 2;
    std::string name;
    std::size_t index = 0, degree = 0;
    std::string terms;
    std::string fixture;
    bool online = false;
    bool no_verify = false;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream body;
        body << std::cin.rdbuf();
        return body.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        usage("cannot read " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void op()
    {
        static const std::map<std::string, std::function<Seq(Runner&)>> verbs{
            {"add", [](Runner& r) { return r.seq("a") + r.seq("b"); }},
            {"sub", [](Runner& r) { return r.seq("a") - r.seq("b"); }},
            {"neg", [](Runner& r) { return -r.seq("a"); }},
            {"hadamard", [](Runner& r) { return hadamard(r.seq("a"), r.seq("b")); }},
            {"hurwitz", [](Runner& r) { return hurwitz(r.seq("a"), r.seq("b")); }},
            {"cauchy", [](Runner& r) { return cauchy(r.seq("a"), r.seq("b")); }},
            {"compose", [](Runner& r) { return compose_egf(r.seq("a"), r.seq("b")); }},
            {"compose-ogf", [](Runner& r) { return compose_ogf(r.seq("a"), r.seq("b")); }},
            {"power", [](Runner& r) { return hurwitz_power(r.seq("a"), r.o_.exponent); }},
            {"gamma", [](Runner& r) { return gamma(r.seq("a")); }},
            {"gamma-inv", [](Runner& r) { return gamma_inv(r.seq("a")); }},
            {"shift-minus", [](Runner& r) { return shift_minus(r.seq("a")); }},
            {"shift-plus",
             [](Runner& r) {
                 const Seq a = r.seq("a");
                 return shift_plus(parse_value(r.o_.value, a.ring()), a);
             }},
        };
        emit(truncate(verbs.at(o_.verb)(*this)));
    }

    void inverse()
    {
        static const std::map<std::string, Seq (*)(const Seq&)> verbs{
            {"hurwitz", hurwitz_inverse},       {"hurwitz-bell", hurwitz_inverse_bell},
            {"relinv", hurwitz_inverse_via_relinv}, {"comp", comp_inverse},
            {"comp-closed", comp_inverse_closed}, {"cinv", comp_inverse_via_cinv},
        };
        emit(truncate(verbs.at(o_.verb)(seq("a"))));
    }

    void transform()
    {
        const Seq a = seq("a");
        if (o_.transform.empty())
            usage("--transform is required");
        TransformSpec spec = parse_transform(o_.transform, a.ring());
        if (o_.verb == "invert")
            spec = invert_spec(spec);
        emit(truncate(seqalg::apply(spec, a)));
    }

    void tau()
    {
        const Seq a = seq("a");
        if (o_.verb == "forward") {
            const std::size_t n = o_.n.value_or(a.size() + 1);
            if (n < 2 || a.size() < n - 1)
                throw Error(ErrorKind::LengthTooShort, std::to_string(n) + " terms need " +
                                                           std::to_string(n < 2 ? 1 : n - 1) + " inputs, got " +
                                                           std::to_string(a.size()));
            emit(tau_forward(a.truncated(n - 1), n).seq());
        } else {
            emit(truncate(tau_inverse(a)));
        }
    }

    void binom()
    {
        const std::string& v = o_.verb;
        if (v == "pa") {
            const Seq a = seq("a");
            emit(pa_polynomials(a, o_.n.value_or(a.size())).seq());
        } else if (v == "coeff") {
            const Seq a = seq("a");
            const Value c = pa_coefficient(a, o_.index, o_.degree);
            Json doc;
            doc["ring"] = c.ring().to_string();
            doc["index"] = o_.index;
            doc["degree"] = o_.degree;
            doc["value"] = c.to_string();
            out_ << doc.dump(2) << "\n";
        } else if (v == "from-u") {
            const Seq u = seq("u");
            emit(binomial_from_u(u, o_.n.value_or(u.size() + 1)).seq());
        } else if (v == "to-u") {
            emit(u_from_binomial(polys(), !o_.no_verify));
        } else if (v == "to-a") {
            emit(a_from_binomial(polys()).seq());
        } else if (v == "check") {
            const PolySeq q = polys();
            const BinomialCheck check = is_binomial_type(q);
            Json doc;
            doc["ring"] = q.seq().ring().to_string();
            doc["length"] = q.size();
            doc["binomial_type"] = check.holds;
            if (!check.holds) {
                doc["index"] = *check.index;
                doc["lhs"] = check.lhs->to_string();
                doc["rhs"] = check.rhs->to_string();
            }
            out_ << doc.dump(2) << "\n";
        } else {  // family
            if (o_.name.empty() || !o_.n)
                usage("family needs --name and -n");
            emit(named_family(o_.name, *o_.n).seq());
        }
    }

    void oeis()
    {
        std::vector<mpz_class> prefix;
        if (!o_.terms.empty()) {
            for (const Value& v : parse_value_list(o_.terms, Ring::integers()))
                prefix.push_back(v.integer());
        } else {
            const Seq a = seq("a");
            if (a.ring() != Ring::integers())
                throw Error(ErrorKind::RingMismatch, "OEIS lookup needs a sequence over Z, got " +
                                                         a.ring().to_string());
            for (const Value& v : a.terms())
                prefix.push_back(v.integer());
        }
        if (o_.n && *o_.n < prefix.size())
            prefix.resize(*o_.n);

        const auto hits = oeis_lookup(prefix, {o_.online, o_.fixture});
        Json doc;
        doc["prefix"] = Json::array();
        for (const auto& p : prefix)
            doc["prefix"].push_back(p.fits_slong_p() ? Json(p.get_si()) : Json(p.get_str()));
        doc["hits"] = Json::array();
        for (const auto& h : hits)
            doc["hits"].push_back({{"id", h.id}, {"name", h.name}, {"offset", h.offset}});
        out_ << doc.dump(2) << "\n";
    }

private:
    Seq seq(const std::string& which)
    {
        const std::string& path = which == "a" ? o_.a : which == "b" ? o_.b : o_.u;
        if (path.empty())
            usage("--" + which + " FILE is required for '" + o_.verb + "'");
        Seq s = [&] {
            try {
                return parse_seq(read_file(path));
            } catch (const Error& e) {
                throw Error(e.kind(), (path == "-" ? "<stdin>" : path) + ": " + e.detail());
            }
        }();
        if (!o_.ring.empty() && s.ring() != Ring::parse(o_.ring))
            throw Error(ErrorKind::RingMismatch, path + " is over " + s.ring().to_string() + ", --ring says " +
                                                     Ring::parse(o_.ring).to_string());
        return s;
    }

    /// A file, or a named family with -n terms (default 8).
    PolySeq polys()
    {
        if (!o_.name.empty())
            return named_family(o_.name, o_.n.value_or(8));
        return PolySeq(seq("a"));
    }

    Seq truncate(const Seq& s) const
    {
        if (!o_.n)
            return s;
        if (*o_.n == 0 || s.size() < *o_.n)
            throw Error(ErrorKind::LengthTooShort, "-n " + std::to_string(*o_.n) + " but the result has " +
                                                       std::to_string(s.size()) + " terms");
        return s.truncated(*o_.n);
    }

    void emit(const Seq& s) { out_ << serialize_seq(s); }

    const Options& o_;
    std::ostream& out_;
};

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app("Exact algebra of sequences under the Hurwitz product", "seq");
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Help for every group");

    struct Group {
        const char* name;
        const char* summary;
        std::vector<std::string> verbs;
        void (Runner::*run)();
    };
    const std::vector<Group> groups{
        {"op", "Sums and products",
         {"add", "sub", "neg", "hadamard", "hurwitz", "cauchy", "compose", "compose-ogf", "power", "gamma",
          "gamma-inv", "shift-minus", "shift-plus"},
         &Runner::op},
        {"inverse", "Hurwitz and compositional inverses",
         {"hurwitz", "hurwitz-bell", "relinv", "comp", "comp-closed", "cinv"},
         &Runner::inverse},
        {"transform", "Apply an endomorphism or its inverse", {"apply", "invert"}, &Runner::transform},
        {"tau", "The isomorphism from (H, +) to unit-headed sequences", {"forward", "inverse"}, &Runner::tau},
        {"binom", "Polynomial families of binomial type",
         {"pa", "coeff", "from-u", "to-u", "to-a", "check", "family"},
         &Runner::binom},
        {"oeis", "Look a prefix up in the OEIS", {"lookup"}, &Runner::oeis},
    };

    std::vector<std::pair<CLI::App*, const Group*>> subs;
    for (const Group& g : groups) {
        CLI::App* sub = app.add_subcommand(g.name, g.summary);
        sub->add_option("verb", o.verb, "One of: " + CLI::detail::join(g.verbs, ", "))
            ->required()
            ->check(CLI::IsMember(g.verbs));
        sub->add_option("--a", o.a, "Input sequence file");
        sub->add_option("-n", o.n, "Number of terms");
        sub->add_option("--ring", o.ring, "Expected ring of the inputs");
        const std::string name = g.name;
        if (name == "op") {
            sub->add_option("--b", o.b, "Second input sequence file");
            sub->add_option("--exponent", o.exponent, "Exponent for 'power'");
            sub->add_option("--value", o.value, "Head for 'shift-plus'");
        } else if (name == "transform") {
            sub->add_option("--transform", o.transform, "altsign, stirling, stirling-inv, mu:[...] or beta:R");
        } else if (name == "binom") {
            sub->add_option("--u", o.u, "Scalar sequence u for 'from-u'");
            sub->add_option("--name", o.name, "Named family: powers, laguerre, touchard, abel, pochhammer");
            sub->add_option("--index", o.index, "n for 'coeff'");
            sub->add_option("--degree", o.degree, "j for 'coeff'");
            sub->add_flag("--no-verify", o.no_verify, "Skip the tau check in 'to-u'");
        } else if (name == "oeis") {
            sub->add_option("--terms", o.terms, "Prefix as a list, e.g. 1,1,2,5");
            sub->add_flag("--online", o.online, "Query oeis.org");
            sub->add_option("--fixture", o.fixture, "Recorded search response to use offline");
        }
        subs.emplace_back(sub, &g);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, out, msg);
        if (code == 0)
            return 0;
        err << "error: " << msg.str();
        return 2;
    }

    try {
        Runner runner(o, out);
        for (const auto& [sub, group] : subs) {
            if (sub->parsed())
                (runner.*(group->run))();
        }
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.detail() << "\n";
        return is_usage_error(e.kind()) ? 2 : 1;
    }
    return 0;
}

}  // namespace seqalg
