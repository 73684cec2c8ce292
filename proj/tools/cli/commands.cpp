#include "cli/commands.hpp"

#include "cli/parse.hpp"
#include "cli/serialize.hpp"
#include "phicert/criteria.hpp"
#include "phicert/error.hpp"
#include "phicert/oracle.hpp"
#include "phicert/polygon.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace phicert::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --a0 .. --a<kMaxPartFlags> option storage.
struct PartFlags {
    std::map<int, std::string> values;

    void attach(CLI::App* app)
    {
        for (int i = 0; i < kMaxPartFlags; ++i)
            app->add_option_function<std::string>(
                   "--a" + std::to_string(i), [this, i](const std::string& v) { values[i] = v; },
                   "part a_" + std::to_string(i))
                ->group("");  // hidden; documented in the subcommand footer
        app->footer("Parts are given as --a0 <expr> --a1 <expr> ... (up to --a" +
                    std::to_string(kMaxPartFlags - 1) + ").");
    }

    // Missing parts are an error unless `missing_is_one`.
    std::vector<IntPoly> take(int count, const char* what, bool missing_is_one = false) const
    {
        std::vector<IntPoly> out;
        for (int i = 0; i < count; ++i) {
            auto it = values.find(i);
            if (it == values.end() && missing_is_one) {
                out.push_back(IntPoly{1});
                continue;
            }
            if (it == values.end())
                throw UsageError(std::string(what) + ": missing --a" + std::to_string(i));
            out.push_back(parse_poly(it->second));
        }
        for (const auto& [i, v] : values)
            if (i >= count)
                throw UsageError(std::string(what) + ": unexpected --a" + std::to_string(i));
        return out;
    }
};

struct Options {
    std::string f;
    std::string phi = "x";
    std::uint64_t prime = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t ell = 0;
    std::string an;
    std::size_t budget = kDefaultSievePrimes;
    std::size_t cap = kKroneckerDegreeCap;
    std::string file;
    bool strict = false;
    PartFlags parts;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int emit_certificate(std::ostream& out, const Certificate& c, bool strict)
{
    emit(out, to_json(c));
    return strict && c.verdict == Verdict::HypothesisFailed ? kStrictFailure : kOk;
}

int run_corpus(const std::string& path, std::ostream& out, std::ostream& err);

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certify irreducibility of integer polynomials via phi-Newton polygons"};
    app.name("phicert");
    app.require_subcommand(1);
    Options o;

    auto add_f = [&](CLI::App* s) { s->add_option("--f", o.f, "polynomial in x")->required(); };
    auto add_phi = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--phi", o.phi, "monic polynomial phi");
        if (required)
            opt->required();
        else
            opt->capture_default_str();
    };
    auto add_prime = [&](CLI::App* s) { s->add_option("--prime", o.prime, "prime p")->required(); };

    auto* expand = app.add_subcommand("expand", "phi-expansion of f");
    add_f(expand);
    add_phi(expand, false);

    auto* polygon = app.add_subcommand("polygon", "phi-Newton polygon of f with respect to p");
    add_f(polygon);
    add_phi(polygon, false);
    add_prime(polygon);

    auto* check = app.add_subcommand("check", "run an irreducibility criterion");
    check->require_subcommand(1);
    check->add_flag("--strict", o.strict, "exit 1 when hypotheses fail");

    auto* schur = check->add_subcommand("schur", "sum a_i phi^i/i! + a_n phi^n/n!");
    add_phi(schur, true);
    schur->add_option("--n", o.n, "n")->required();
    schur->add_option("--an", o.an, "integer a_n")->required();
    schur->add_flag("--strict", o.strict, "exit 1 when hypotheses fail");
    o.parts.attach(schur);

    auto* coleman = check->add_subcommand("coleman", "sum a_i phi^i/i! + phi^n/n!");
    add_phi(coleman, true);
    coleman->add_option("--n", o.n, "n")->required();
    coleman->add_flag("--strict", o.strict, "exit 1 when hypotheses fail");

    auto* filaseta = check->add_subcommand("filaseta", "degree-window exclusion for sum a_i f_i phi^i");
    add_f(filaseta);
    add_phi(filaseta, false);
    add_prime(filaseta);
    filaseta->add_option("--k", o.k, "k")->required();
    filaseta->add_option("--ell", o.ell, "ell")->capture_default_str();
    filaseta->add_flag("--strict", o.strict, "exit 1 when hypotheses fail");

    auto* schon = check->add_subcommand("schonemann", "f = phi^n + p M");
    add_f(schon);
    add_phi(schon, false);
    add_prime(schon);
    schon->add_flag("--strict", o.strict, "exit 1 when hypotheses fail");

    auto* gschon = check->add_subcommand("gen-schonemann", "generalized Schonemann criterion");
    add_f(gschon);
    add_phi(gschon, false);
    add_prime(gschon);
    gschon->add_flag("--strict", o.strict, "exit 1 when hypotheses fail");

    PartFlags coleman_parts;
    PartFlags filaseta_parts;
    coleman_parts.attach(coleman);
    coleman->footer("Parts are given as --a0 <expr> --a1 <expr> ...; omitted parts default to 1.");
    filaseta_parts.attach(filaseta);

    auto* oracle = app.add_subcommand("oracle", "independent brute-force checks");
    oracle->require_subcommand(1);
    auto* factor = oracle->add_subcommand("factor", "Kronecker factorization (small degree)");
    add_f(factor);
    factor->add_option("--cap", o.cap, "degree cap")->capture_default_str();
    auto* sieve = oracle->add_subcommand("sieve", "mod-p degree-set sieve");
    add_f(sieve);
    sieve->add_option("--budget", o.budget, "number of primes")->capture_default_str();
    auto* roots = oracle->add_subcommand("roots", "rational roots");
    add_f(roots);

    auto* corpus = app.add_subcommand("corpus", "run a JSON corpus of cases");
    corpus->add_option("--file", o.file, "corpus file")->required()->check(CLI::ExistingFile);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        // Subcommand help requests arrive here too.
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (*expand) {
        emit(out, to_json(phi_expand(parse_poly(o.f), parse_poly(o.phi))));
        return kOk;
    }
    if (*polygon) {
        const IntPoly f = parse_poly(o.f);
        const IntPoly phi = parse_poly(o.phi);
        const Prime p(o.prime);
        const auto pts = polygon_points(f, phi, p);
        const NewtonPolygon np = build_polygon(pts);
        Json j;
        j["f"] = to_string(f);
        j["phi"] = to_string(phi);
        Json jp = Json::array();
        for (const auto& pt : pts)
            jp.push_back(Json::array({pt.x, pt.y}));
        j["points"] = std::move(jp);
        j["polygon"] = to_json(np, p);
        j["principal_part"] = to_json(principal_part(np).edges());
        if (!np.empty())
            j["rightmost_slope"] = rightmost_slope(np).to_string();
        j["slope_zero_length"] = slope_zero_length(np);
        emit(out, j);
        return kOk;
    }
    if (*schur) {
        SchurInput in{parse_poly(o.phi), o.n, o.parts.take(static_cast<int>(o.n), "schur"), Integer()};
        const IntPoly an = parse_poly(o.an);
        if (!an.is_constant())
            throw UsageError("schur: --an must be an integer");
        in.a_n = an.coeff(0);
        return emit_certificate(out, check_schur(in), o.strict);
    }
    if (*coleman) {
        const auto parts = coleman_parts.take(static_cast<int>(o.n), "coleman", true);
        return emit_certificate(out, check_coleman(parse_poly(o.phi), o.n, parts), o.strict);
    }
    if (*filaseta) {
        const IntPoly f = parse_poly(o.f);
        const IntPoly phi = parse_poly(o.phi);
        std::vector<IntPoly> parts;
        if (!filaseta_parts.values.empty()) {
            const auto top = static_cast<int>(phi_expand(f, phi).top());
            parts = filaseta_parts.take(top + 1, "filaseta");
        }
        return emit_certificate(out, check_filaseta_window(f, phi, Prime(o.prime), o.k, o.ell, parts), o.strict);
    }
    if (*schon)
        return emit_certificate(out, check_schonemann(parse_poly(o.f), parse_poly(o.phi), Prime(o.prime)), o.strict);
    if (*gschon)
        return emit_certificate(out, check_gen_schonemann(parse_poly(o.f), parse_poly(o.phi), Prime(o.prime)),
                                o.strict);
    if (*factor) {
        emit(out, to_json(kronecker_factor(parse_poly(o.f), o.cap)));
        return kOk;
    }
    if (*sieve) {
        emit(out, to_json(degree_set_sieve(parse_poly(o.f), o.budget)));
        return kOk;
    }
    if (*roots) {
        Json arr = Json::array();
        for (const auto& r : rational_roots(parse_poly(o.f)))
            arr.push_back(r.get_str());
        emit(out, {{"roots", std::move(arr)}});
        return kOk;
    }
    if (*corpus)
        return run_corpus(o.file, out, err);
    err << "error: no command\n";
    return kUsageError;
}

std::string json_scalar(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

// Verdict word of a command's JSON output.
std::string actual_verdict(const Json& result)
{
    if (result.contains("verdict"))
        return result.at("verdict").is_object() ? "ExclusionWindow" : result.at("verdict").get<std::string>();
    return "";
}

int run_corpus(const std::string& path, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path);
    Json cases;
    try {
        cases = Json::parse(in);
    } catch (const Json::parse_error& e) {
        err << "error: " << path << ": " << e.what() << '\n';
        return kUsageError;
    }
    if (!cases.is_array()) {
        err << "error: " << path << ": corpus must be a JSON array\n";
        return kUsageError;
    }

    Json results = Json::array();
    std::size_t passed = 0;
    for (const auto& c : cases) {
        std::vector<std::string> argv;
        std::istringstream words(c.at("command").get<std::string>());
        for (std::string w; words >> w;)
            argv.push_back(w);
        if (c.contains("args")) {
            for (const auto& [key, value] : c.at("args").items()) {
                if (value.is_boolean()) {
                    if (value.get<bool>())
                        argv.push_back("--" + key);
                    continue;
                }
                argv.push_back("--" + key);
                argv.push_back(json_scalar(value));
            }
        }
        std::ostringstream case_out;
        std::ostringstream case_err;
        const int code = run_command(argv, case_out, case_err);

        Json r;
        r["name"] = c.value("name", c.at("command").get<std::string>());
        r["exit_code"] = code;
        const int expected_exit = c.value("expected_exit", static_cast<int>(kOk));
        bool ok = code == expected_exit;
        Json result;
        if (code == kOk) {
            result = Json::parse(case_out.str());
            const std::string verdict = actual_verdict(result);
            r["verdict"] = verdict;
            if (c.contains("expected_verdict")) {
                r["expected_verdict"] = c.at("expected_verdict");
                ok = ok && verdict == c.at("expected_verdict").get<std::string>();
            }
            if (ok && c.contains("expected_factors")) {
                std::vector<std::string> expected;
                for (const auto& f : c.at("expected_factors"))
                    expected.push_back(to_string(parse_poly(f.get<std::string>())));
                std::vector<std::string> actual;
                for (const auto& f : result.at("factors"))
                    for (int m = 0; m < f.at("mult").get<int>(); ++m)
                        actual.push_back(f.at("poly").get<std::string>());
                std::sort(expected.begin(), expected.end());
                std::sort(actual.begin(), actual.end());
                ok = ok && expected == actual;
            }
        } else {
            r["error"] = case_err.str();
        }
        r["ok"] = ok;
        passed += ok ? 1 : 0;
        results.push_back(std::move(r));
    }
    Json summary;
    summary["cases"] = std::move(results);
    summary["passed"] = passed;
    summary["failed"] = cases.size() - passed;
    emit(out, summary);
    return passed == cases.size() ? kOk : kStrictFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DegreeCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const NotSquarefreeOverQ& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace phicert::cli
