#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "selmer/periodic.hpp"

namespace selmer {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTraceSchema = "selmer-trace/1";
inline constexpr const char* kReportSchema = "selmer-period-report/1";

inline Json rationals_to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

inline std::vector<Rational> rationals_from_json(const Json& a) {
    if (!a.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rational> v;
    for (const auto& s : a) {
        if (!s.is_string()) throw ParseError("rational entries must be strings");
        v.push_back(parse_rational(s.get<std::string>()));
    }
    return v;
}

inline Json integers_to_json(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(to_string(z));
    return a;
}

inline Json field_to_json(const NumberField& f) {
    return Json{{"min_poly", rationals_to_json(f.min_poly().coeffs())},
                {"root", rationals_to_json({f.root_interval().lo, f.root_interval().hi})}};
}

inline FieldPtr field_from_json(const Json& j) {
    auto m = rationals_from_json(j.at("min_poly"));
    auto r = rationals_from_json(j.at("root"));
    if (r.size() != 2) throw ParseError("root interval needs two endpoints");
    return NumberField::create(RatPoly(std::move(m)), Interval(r[0], r[1]));
}

inline Json element_to_json(const Element& a) { return rationals_to_json(a.coeffs()); }

inline Element element_from_json(const Json& j, const FieldPtr& f) { return Element(f, rationals_from_json(j)); }

inline Json point_to_json(const PointB& x) {
    Json a = Json::array();
    for (const auto& c : x.coords()) a.push_back(element_to_json(c));
    return a;
}

inline PointB point_from_json(const Json& j, const FieldPtr& f) {
    std::vector<Element> xs;
    for (const auto& c : j) xs.push_back(element_from_json(c, f));
    return PointB(std::move(xs));
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = Integer(j.at(i).at(c).get<std::string>());
    return m;
}

inline Json trace_to_json(const OrbitTrace& t) {
    Json states = Json::array();
    for (const auto& s : t.states) states.push_back(point_to_json(s));
    Json digits = Json::array();
    for (const auto& d : t.digits) digits.push_back(to_string(d.value));
    return Json{{"schema", kTraceSchema},
                {"algo", to_string(t.algo)},
                {"field", field_to_json(*t.start().field())},
                {"dim", t.start().dim()},
                {"digits", std::move(digits)},
                {"states", std::move(states)},
                {"terminated", t.terminated}};
}

inline OrbitTrace trace_from_json(const Json& j) {
    if (j.value("schema", std::string()) != kTraceSchema) throw ParseError("not a selmer trace");
    OrbitTrace t;
    t.algo = parse_algorithm(j.at("algo").get<std::string>());
    FieldPtr f = field_from_json(j.at("field"));
    for (const auto& s : j.at("states")) t.states.push_back(point_from_json(s, f));
    for (const auto& d : j.at("digits")) t.digits.push_back(Digit{t.algo, Integer(d.get<std::string>())});
    t.terminated = j.at("terminated").get<bool>();
    if (t.states.size() != t.digits.size() + 1) throw ParseError("trace needs one more state than digits");
    return t;
}

inline bool same_trace(const OrbitTrace& a, const OrbitTrace& b) {
    return a.algo == b.algo && a.terminated == b.terminated && a.digits == b.digits && a.states == b.states;
}

inline Json report_to_json(const PeriodReport& r, const Rational& precision = default_precision()) {
    Json j{{"schema", kReportSchema},
           {"algo", to_string(r.algo)},
           {"status", to_string(r.status)},
           {"steps", r.steps}};
    if (r.status == PeriodStatus::found) {
        j["m"] = r.preperiod;
        j["p"] = r.period;
    }
    j["digits"] = integers_to_json(r.digits);
    if (!r.msa) return j;
    const MsaAnalysis& a = *r.msa;
    Json m{{"matrix", matrix_to_json(a.matrix)}, {"charpoly", integers_to_json(a.charpoly.coeffs())}};
    if (a.positivity_exponent) m["positivity_exponent"] = *a.positivity_exponent;
    if (a.dominant) {
        const DominantEigenvalue& d = *a.dominant;
        Interval rho = refine_root(to_rational(d.min_poly.poly), d.interval, precision);
        m["rho0"] = rationals_to_json({rho.lo, rho.hi});
        m["min_poly"] = integers_to_json(d.min_poly.poly.coeffs());
        m["min_poly_certified"] = d.min_poly.certified;
        m["rho1"] = d.subdominant;
        m["rho1_certified"] = d.subdominant_certified;
    }
    if (a.eigen_point) {
        m["eigen_field"] = field_to_json(*a.eigen_point->field());
        m["eigen_point"] = point_to_json(*a.eigen_point);
        m["cycle_verified"] = a.cycle_verified;
        m["matches_orbit"] = a.matches_orbit;
    }
    m["diagnostics"] = a.diagnostics;
    j["msa"] = std::move(m);
    return j;
}

}  // namespace selmer
