#include "cli/serialize.hpp"

namespace phicert::cli {

Json to_json(const std::vector<Edge>& edges)
{
    Json out = Json::array();
    for (const auto& e : edges)
        out.push_back({{"dx", e.dx}, {"dy", e.dy}, {"slope", e.slope.to_string()}});
    return out;
}

Json to_json(const NewtonPolygon& np, std::optional<Prime> prime)
{
    Json out;
    if (prime)
        out["prime"] = prime->value();
    Json verts = Json::array();
    for (const auto& v : np.vertices())
        verts.push_back(Json::array({v.x, v.y}));
    out["vertices"] = std::move(verts);
    out["edges"] = to_json(np.edges());
    return out;
}

Json to_json(const Certificate& cert)
{
    Json out;
    out["criterion"] = std::string(to_string(cert.criterion));
    if (cert.verdict == Verdict::ExclusionWindow && cert.window)
        out["verdict"] = {{"exclusion_window", Json::array({cert.window->lo, cert.window->hi})}};
    else
        out["verdict"] = std::string(to_string(cert.verdict));
    out["polynomial"] = to_string(cert.polynomial);
    out["phi"] = to_string(cert.phi);

    Json hyps = Json::array();
    for (const auto& h : cert.hypotheses)
        hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
    out["hypotheses"] = std::move(hyps);

    Json trace = Json::array();
    for (const auto& s : cert.trace) {
        Json j;
        j["step"] = s.step;
        if (s.k)
            j["k"] = *s.k;
        if (s.prime)
            j["prime"] = s.prime->value();
        if (s.witness)
            j["witness"] = *s.witness;
        if (s.ell)
            j["ell"] = *s.ell;
        if (s.subject)
            j["subject"] = to_string(*s.subject);
        if (s.polygon)
            j["polygon"] = to_json(*s.polygon, s.prime);
        if (s.rightmost_slope)
            j["rightmost_slope"] = s.rightmost_slope->to_string();
        if (s.slope_bound)
            j["slope_bound"] = s.slope_bound->to_string();
        if (s.window)
            j["window"] = Json::array({s.window->lo, s.window->hi});
        if (s.ore_divisor)
            j["ore_divisor"] = *s.ore_divisor;
        if (!s.note.empty())
            j["note"] = s.note;
        trace.push_back(std::move(j));
    }
    out["trace"] = std::move(trace);
    return out;
}

Json to_json(const Factorization& f)
{
    Json out;
    out["content"] = f.content.get_str();
    Json factors = Json::array();
    for (const auto& fp : f.factors)
        factors.push_back({{"poly", to_string(fp.factor)}, {"mult", fp.multiplicity}});
    out["factors"] = std::move(factors);
    out["verdict"] = f.is_irreducible() ? "Irreducible" : "Reducible";
    return out;
}

Json to_json(const SieveOutcome& s)
{
    Json out;
    out["verdict"] = s.verdict == SieveVerdict::ProvenIrreducible ? "ProvenIrreducible" : "Inconclusive";
    auto degrees = [](const std::vector<bool>& bits) {
        Json arr = Json::array();
        for (std::size_t d = 0; d < bits.size(); ++d)
            if (bits[d])
                arr.push_back(d);
        return arr;
    };
    Json sets = Json::object();
    for (const auto& [p, bits] : s.degree_sets)
        sets[std::to_string(p)] = degrees(bits);
    out["degree_sets"] = std::move(sets);
    out["feasible"] = degrees(s.feasible);
    return out;
}

Json to_json(const PhiExpansion& e)
{
    Json parts = Json::array();
    for (const auto& p : e.parts)
        parts.push_back(to_string(p));
    return {{"phi", to_string(e.phi)}, {"parts", std::move(parts)}};
}

std::string verdict_name(const Json& certificate)
{
    const Json& v = certificate.at("verdict");
    if (v.is_object())
        return "ExclusionWindow";
    return v.get<std::string>();
}

}  // namespace phicert::cli
