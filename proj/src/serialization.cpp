#include "rokhlin/serialization.hpp"

#include "rokhlin/errors.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace rokhlin {

namespace {

Json rational_array(const std::vector<Rational>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
    return *it;
}

const Json& array_field(const Json& obj, const std::string& key, const std::string& where) {
    const Json& a = field(obj, key, where);
    if (!a.is_array()) throw ParseError(where + "/" + key + ": expected an array");
    return a;
}

Rational rational_at(const Json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where + ": expected a rational string such as \"1/2\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const FormatError& e) {
        throw FormatError(where + ": " + e.what());
    }
}

std::vector<Rational> rationals_at(const Json& a, const std::string& where) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_at(a[i], where + "/" + std::to_string(i)));
    return out;
}

}  // namespace

void put_rational(Json& obj, const std::string& key, const Rational& r) {
    obj[key] = r.str();
    obj[key + "_decimal"] = r.to_double();
}

Json to_json(const IntervalSet& s) {
    Json a = Json::array();
    for (const auto& p : s.parts()) a.push_back(Json::array({p.lo.str(), p.hi.str()}));
    return a;
}

Json to_json(const SystemSpec& sys) {
    std::vector<Rational> xs{Rational(0)};
    for (const auto& b : sys.cdf.function().breakpoints()) xs.push_back(b);
    xs.push_back(Rational(1));
    std::vector<Rational> ys;
    for (const auto& x : xs) ys.push_back(sys.cdf(x));

    Json branches = Json::array();
    for (const auto& b : sys.map.branches()) {
        Json o;
        o["domain"] = Json::array({b.domain.lo.str(), b.domain.hi.str()});
        o["slope"] = b.slope.str();
        o["intercept"] = b.intercept.str();
        branches.push_back(std::move(o));
    }
    Json j;
    j["cdf"]["breakpoints"] = rational_array(xs);
    j["cdf"]["values"] = rational_array(ys);
    j["map"]["branches"] = std::move(branches);
    return j;
}

Json to_json(const PreservationReport& r) {
    Json j;
    j["preserved"] = r.preserved;
    put_rational(j, "max_discrepancy", r.max_discrepancy);
    j["witness"] = r.preserved || !r.witness ? Json(nullptr) : Json(r.witness->str());
    j["points_checked"] = r.points_checked;
    return j;
}

Json to_json(const DefectReport& r) {
    Json j;
    j["n"] = r.n;
    put_rational(j, "defect", r.defect);
    j["nigh_aperiodic"] = r.nigh_aperiodic();
    j["equality_set"] = to_json(r.equality_set);
    j["isolated_matches"] = r.isolated_matches;
    return j;
}

Json to_json(const ChainCertificate& c) {
    Json j;
    j["length"] = c.length;
    j["valid"] = c.valid();
    j["origin"] = c.origin;
    j["search_depth"] = c.search_depth;
    put_rational(j, "base_measure", c.base_measure);
    j["intersection_measures"] = rational_array(c.intersection_measures);
    j["base_parts"] = c.base.size();
    j["base"] = to_json(c.base);
    return j;
}

Json to_json(const TowerVerification& v) {
    Json j;
    j["n"] = v.n;
    j["disjoint"] = v.disjoint();
    put_rational(j, "tower_measure", v.tower_measure);
    j["level_measures"] = rational_array(v.level_measures);
    Json pairs = Json::array();
    for (const auto& p : v.pairwise_intersections) {
        Json o;
        o["i"] = p.i;
        o["j"] = p.j;
        o["measure"] = p.measure.str();
        pairs.push_back(std::move(o));
    }
    j["pairwise_intersections"] = std::move(pairs);
    Json levels = Json::array();
    for (const auto& s : v.level_sets) levels.push_back(to_json(s));
    j["level_sets"] = std::move(levels);
    return j;
}

Json to_json(const TowerReport& r) {
    Json j;
    j["certified"] = r.certified();
    j["n"] = r.n;
    put_rational(j, "epsilon", r.epsilon);
    j["m"] = r.m;
    put_rational(j, "tower_measure", r.tower_measure());
    put_rational(j, "margin", r.margin);
    put_rational(j, "theorem_bound", r.theorem_bound);
    put_rational(j, "residual", r.residual());
    put_rational(j, "low_levels", r.low_levels);
    put_rational(j, "spill", r.spill);
    put_rational(j, "truncation_loss", r.truncation_loss);
    j["K"] = r.max_depth;
    j["truncation_depth"] = r.truncation_depth;
    j["levels_computed"] = r.entrance.depth();
    j["entrance_level_measures"] = rational_array(r.entrance_measures);
    j["enlarged"] = r.enlarged;
    j["preservation"] = to_json(r.preservation);
    Json defects = Json::array();
    for (const auto& d : r.defects) {
        Json o;
        o["n"] = d.n;
        o["defect"] = d.defect.str();
        defects.push_back(std::move(o));
    }
    j["defects"] = std::move(defects);
    j["chain"] = to_json(r.chain);
    j["tower_base"] = to_json(r.tower.base);
    j["tower"] = to_json(r.tower);
    return j;
}

Json to_json(const ConjugacyPair& p) {
    Json j;
    j["system"] = to_json(p.normalized);
    Json fwd = Json::array();
    for (const auto& b : p.forward.branches()) {
        Json o;
        o["domain"] = Json::array({b.domain.lo.str(), b.domain.hi.str()});
        o["slope"] = b.slope.str();
        o["intercept"] = b.intercept.str();
        fwd.push_back(std::move(o));
    }
    j["forward"] = std::move(fwd);
    j["preservation"] = to_json(p.preservation);
    return j;
}

SystemSpec parse_system(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
    }

    const Json& cdf = field(doc, "cdf", "");
    const std::vector<Rational> xs = rationals_at(array_field(cdf, "breakpoints", "/cdf"), "/cdf/breakpoints");
    const std::vector<Rational> ys = rationals_at(array_field(cdf, "values", "/cdf"), "/cdf/values");
    std::optional<Cdf> f;
    try {
        f = Cdf::from_points(xs, ys);
    } catch (const DomainError& e) {
        throw ParseError(std::string("/cdf: ") + e.what());
    }

    const Json& branches = array_field(field(doc, "map", ""), "branches", "/map");
    std::vector<AffinePiece> pieces;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const std::string at = "/map/branches/" + std::to_string(i);
        const Json& b = branches[i];
        const Json& dom = array_field(b, "domain", at);
        if (dom.size() != 2) throw ParseError(at + "/domain: expected [lo, hi]");
        const Rational lo = rational_at(dom[0], at + "/domain/0");
        const Rational hi = rational_at(dom[1], at + "/domain/1");
        const Rational slope = rational_at(field(b, "slope", at), at + "/slope");
        const Rational intercept = rational_at(field(b, "intercept", at), at + "/intercept");
        try {
            pieces.push_back(AffinePiece{Interval{lo, hi}, slope, intercept});
        } catch (const DomainError& e) {
            throw ParseError(at + ": " + e.what());
        }
    }
    try {
        return SystemSpec{*f, PiecewiseAffineMap(std::move(pieces))};
    } catch (const DomainError& e) {
        throw ParseError(std::string("/map: ") + e.what());
    }
}

SystemSpec load_system(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_system(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

IntervalSet interval_set_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of [lo, hi] pairs");
    std::vector<Interval> raw;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != 2) throw ParseError(at + ": expected [lo, hi]");
        const Rational lo = rational_at(j[i][0], at + "/0");
        const Rational hi = rational_at(j[i][1], at + "/1");
        try {
            raw.emplace_back(lo, hi);
        } catch (const DomainError& e) {
            throw ParseError(at + ": " + e.what());
        }
    }
    return IntervalSet::normalize(std::move(raw));
}

std::string levels_csv(const TowerVerification& v) {
    std::string out = "level_index,interval_lo,interval_hi\n";
    for (std::size_t l = 0; l < v.level_sets.size(); ++l)
        for (const auto& p : v.level_sets[l].parts())
            out += std::to_string(l) + "," + p.lo.str() + "," + p.hi.str() + "\n";
    return out;
}

}  // namespace rokhlin
