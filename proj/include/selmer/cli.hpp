#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "selmer/cylinders.hpp"
#include "selmer/parse.hpp"
#include "selmer/serialize.hpp"

namespace selmer::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct RunConfig {
    Algorithm algo = Algorithm::msa;
    std::string field_spec;
    std::string point_spec;
    std::size_t steps = 10;
    std::size_t max_steps = kDefaultMaxSteps;
    std::string precision = "1e-30";
    std::string format = "text";
    std::string out;
    std::optional<std::size_t> column;
};

/// Decimal places d with 10^-d <= precision.
inline unsigned decimal_places(const Rational& precision) {
    if (precision <= 0) throw ParseError("precision must be positive");
    unsigned d = 0;
    Rational p(1);
    while (p > precision) {
        p /= 10;
        ++d;
    }
    return d;
}

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

inline std::string column_text(const std::vector<Integer>& c) {
    std::vector<std::string> parts;
    for (const auto& z : c) parts.push_back(to_string(z));
    return "[" + join(parts, ", ") + "]";
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

/// Writes to --out when given, otherwise to the console stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError("cannot open '" + path + "' for writing");
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& os() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

inline FieldPtr config_field(const RunConfig& c) { return parse_field(c.field_spec); }
inline PointB config_point(const RunConfig& c, const FieldPtr& f) {
    if (c.point_spec.empty()) throw ParseError("--point is required");
    try {
        return parse_point(c.point_spec, f);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid point: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// expand

inline int cmd_expand(const RunConfig& c, std::ostream& out) {
    FieldPtr f = config_field(c);
    PointB x = config_point(c, f);
    const unsigned places = decimal_places(parse_rational(c.precision));
    OrbitTrace t = run_orbit(x, c.algo, c.steps);
    Sink sink(c.out, out);
    std::ostream& os = sink.os();
    const std::string map = c.algo == Algorithm::ssa ? "T" : "S";

    if (c.format == "json") {
        os << trace_to_json(t).dump(2) << "\n";
        return kOk;
    }
    if (c.format == "csv") {
        std::vector<std::string> head{"s", "digit"};
        for (std::size_t i = 1; i <= x.dim(); ++i) head.push_back("x" + std::to_string(i));
        for (std::size_t i = 1; i <= x.dim(); ++i) head.push_back("x" + std::to_string(i) + "_decimal");
        os << join(head, ",") << "\n";
        for (std::size_t s = 0; s < t.states.size(); ++s) {
            std::vector<std::string> row{std::to_string(s), s ? to_string(t.digits[s - 1].value) : ""};
            for (const auto& e : t.states[s].coords()) row.push_back(csv_quote(e.to_text()));
            for (const auto& e : t.states[s].coords()) row.push_back(certified_decimal(e, places));
            os << join(row, ",") << "\n";
        }
        if (t.terminated) os << "# terminated at s=" << t.digits.size() << "\n";
        return kOk;
    }

    os << "field: " << f->to_string() << "\n";
    os << "algo: " << to_string(c.algo) << "\n";
    ConvergentState st(x.dim());
    for (std::size_t s = 0; s < t.states.size(); ++s) {
        os << "s=" << s;
        if (s) os << " digit=" << t.digits[s - 1].value;
        os << " " << map << "^" << s << "x = " << t.states[s].to_text() << " ~ " << t.states[s].to_decimal(places) << "\n";
        if (c.algo == Algorithm::msa && s) {
            st = recursion_extend(st, t.digits[s - 1].value);
            os << "    B^(" << s << ") = " << column_text(st.latest_column()) << "\n";
        }
    }
    if (t.terminated)
        os << "terminated: " << map << "^" << t.digits.size() << "x has vanishing last coordinate\n";
    const std::size_t last = t.states.size() - 1;
    for (std::size_t s = 0; s < last; ++s) {
        if (t.states[s] == t.states[last]) {
            os << "final: " << map << "^" << last << "x = " << map << "^" << s << "x\n";
            break;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// detect-period

inline void print_report_text(const PeriodReport& r, std::ostream& os, unsigned places) {
    os << "algo: " << to_string(r.algo) << "\n";
    os << "status: " << to_string(r.status) << "\n";
    os << "steps: " << r.steps << "\n";
    if (r.status == PeriodStatus::found) {
        os << "m: " << r.preperiod << "\n";
        os << "p: " << r.period << "\n";
    }
    std::vector<std::string> ds;
    for (const auto& d : r.digits) ds.push_back(to_string(d));
    os << "digits: " << join(ds, " ") << "\n";
    if (!r.msa) return;
    const MsaAnalysis& a = *r.msa;
    os << "periodicity matrix:\n" << a.matrix.to_text();
    os << "charpoly: " << a.charpoly.to_string("t") << "\n";
    if (a.positivity_exponent) os << "positivity exponent: " << *a.positivity_exponent << "\n";
    if (a.dominant) {
        const DominantEigenvalue& d = *a.dominant;
        Interval rho = refine_root(to_rational(d.min_poly.poly), d.interval, Rational(1) / pow_int(Integer(10), places + 2));
        os << "minimal polynomial of rho0: " << d.min_poly.poly.to_string("t")
           << (d.min_poly.certified ? "" : " (irreducibility not certified)") << "\n";
        os << "rho0 in [" << decimal_string(rho.lo, places) << ", " << decimal_string(rho.hi, places) << "]\n";
        os << "|rho1| ~ " << sci(d.subdominant) << (d.subdominant_certified ? "" : " (numeric)") << "\n";
    }
    if (a.eigen_point) {
        os << "eigen point: " << a.eigen_point->to_text() << " ~ " << a.eigen_point->to_decimal(places) << "\n";
        os << "  field: " << a.eigen_point->field()->to_string() << "\n";
        os << "  cycle verified: " << (a.cycle_verified ? "yes" : "no") << "\n";
        os << "  equals cycle start: " << (a.matches_orbit ? "yes" : "no") << "\n";
    }
    for (const auto& d : a.diagnostics) os << "note: " << d << "\n";
}

inline int cmd_detect_period(const RunConfig& c, std::ostream& out) {
    FieldPtr f = config_field(c);
    PointB x = config_point(c, f);
    const Rational precision = parse_rational(c.precision);
    PeriodReport r = make_report(detect_period(x, c.algo, c.max_steps));
    Sink sink(c.out, out);
    if (c.format == "json")
        sink.os() << report_to_json(r, precision).dump(2) << "\n";
    else
        print_report_text(r, sink.os(), decimal_places(precision));
    return kOk;
}

// ---------------------------------------------------------------------------
// analyze

inline int cmd_analyze(const RunConfig& c, std::ostream& out) {
    if (c.algo != Algorithm::msa) throw ParseError("analyze needs --algo msa");
    FieldPtr f = config_field(c);
    PointB x = config_point(c, f);
    const Rational precision = parse_rational(c.precision);
    const unsigned places = decimal_places(precision);
    PeriodDetection det = detect_period(x, c.algo, c.max_steps);
    if (det.status != PeriodStatus::found) {
        out << "status: " << to_string(det.status) << "\n";
        return kOk;
    }
    PeriodReport rep = make_report(det);
    const MsaAnalysis& a = *rep.msa;
    if (!a.eigen_point || !a.dominant) {
        out << "status: found\n";
        for (const auto& d : a.diagnostics) out << "note: " << d << "\n";
        throw CertificationError("eigenvalue analysis failed");
    }
    const std::size_t n = x.dim();
    const std::size_t s_max = c.steps;
    const auto digits = expansion_digits(det.preperiod_digits(), det.cycle_digits(), s_max);
    std::vector<std::size_t> cols;
    if (c.column) {
        if (*c.column > n) throw ParseError("--column must be in 0.." + std::to_string(n));
        cols.push_back(*c.column);
    } else {
        for (std::size_t g = 0; g <= n; ++g) cols.push_back(g);
    }
    std::vector<ConvergenceReport> conv;
    for (auto g : cols) conv.push_back(convergence_report(x, digits, s_max, g, precision));

    std::ostringstream conv_csv;
    {
        std::vector<std::string> head{"s"};
        for (auto g : cols) {
            head.push_back("label_g" + std::to_string(g));
            head.push_back("error_g" + std::to_string(g));
        }
        conv_csv << join(head, ",") << "\n";
        for (std::size_t s = 0; s <= s_max; ++s) {
            std::vector<std::string> row{std::to_string(s)};
            for (const auto& r : conv) {
                row.push_back(std::to_string(r.rows[s].label));
                row.push_back(r.rows[s].degenerate ? "" : sci(r.rows[s].max_error.hi.get_d()));
            }
            conv_csv << join(row, ",") << "\n";
        }
    }

    std::ostringstream approx_csv;
    std::vector<double> constants;
    double min_residual = 0;
    if (det.preperiod == 0) {
        const std::size_t g_max = std::max<std::size_t>(1, s_max / det.period);
        ApproximationReport ar =
            approximation_report(x, det.cycle_digits(), g_max, a.dominant->subdominant, 0, precision);
        constants = ar.envelope_constant;
        approx_csv << "g,j,i,e,envelope\n";
        for (const auto& row : ar.rows) {
            double env = ar.envelope_constant[row.i - 1] * std::pow(std::abs(ar.rho1), static_cast<double>(row.g));
            approx_csv << row.g << "," << row.j << "," << row.i << "," << sci(row.error.hi.get_d()) << ","
                       << (row.j == 0 ? sci(env) : "") << "\n";
        }
        if (!ar.residuals.empty()) min_residual = *std::min_element(ar.residuals.begin(), ar.residuals.end());
    }

    std::ostringstream summary;
    summary << "status: found\nm: " << det.preperiod << "\np: " << det.period << "\n";
    summary << "eigen point: " << a.eigen_point->to_text() << "\n";
    summary << "eigen point decimal: " << a.eigen_point->to_decimal(places) << "\n";
    summary << "eigen field: " << a.eigen_point->field()->to_string() << "\n";
    summary << "|rho1|: " << sci(a.dominant->subdominant) << (a.dominant->subdominant_certified ? "" : " (numeric)") << "\n";
    for (const auto& r : conv) {
        summary << "column " << r.column << ": error(s=" << s_max << ") = "
                << (r.rows[s_max].degenerate ? std::string("n/a") : sci(r.rows[s_max].max_error.hi.get_d()));
        if (r.envelope_ratio)
            summary << ", envelope ratio over s in [" << r.window_from << ", " << r.window_to << "] in ["
                    << decimal_string(r.envelope_ratio->lo, 6) << ", " << decimal_string(r.envelope_ratio->hi, 6) << "]";
        summary << "\n";
    }
    for (std::size_t i = 0; i < constants.size(); ++i)
        summary << "envelope constant c_" << (i + 1) << ": " << sci(constants[i]) << "\n";
    if (!constants.empty()) summary << "minimum fit residual: " << sci(min_residual) << "\n";
    if (det.preperiod != 0) summary << "approximation table skipped: expansion is not purely periodic\n";

    if (c.format == "json") {
        Json j = report_to_json(rep, precision);
        j["convergence_csv"] = conv_csv.str();
        j["approximation_csv"] = approx_csv.str();
        Sink sink(c.out, out);
        sink.os() << j.dump(2) << "\n";
        return kOk;
    }
    if (!c.out.empty()) {
        std::filesystem::create_directories(c.out);
        std::ofstream(std::filesystem::path(c.out) / "convergence.csv") << conv_csv.str();
        std::ofstream(std::filesystem::path(c.out) / "approximation.csv") << approx_csv.str();
        std::ofstream(std::filesystem::path(c.out) / "summary.txt") << summary.str();
        out << summary.str();
        return kOk;
    }
    out << summary.str() << "\n# convergence\n" << conv_csv.str() << "\n# approximation\n" << approx_csv.str();
    return kOk;
}

// ---------------------------------------------------------------------------
// partition

inline std::string partition_csv(long k_max) {
    std::ostringstream os;
    os << "kind,k,vertex,x1,x2\n";
    for (long k = 1; k <= k_max; ++k) {
        const auto verts = msa_cell_polygon(Integer(k)).vertices();
        for (std::size_t v = 0; v < verts.size(); ++v)
            os << "cell," << k << "," << v << "," << verts[v].x << "," << verts[v].y << "\n";
    }
    for (long k = 1; k <= k_max; ++k) {
        const auto verts = msa_image_polygon(Integer(k)).vertices();
        for (std::size_t v = 0; v < verts.size(); ++v)
            os << "image," << k << "," << v << "," << verts[v].x << "," << verts[v].y << "\n";
    }
    return os.str();
}

inline std::string partition_svg(long k_max) {
    constexpr double scale = 400, pad = 40, panel = scale + 2 * pad;
    auto px = [&](const Rational& x, int p) { return pad + p * panel + scale * x.get_d(); };
    auto py = [&](const Rational& y) { return pad + scale * (1 - y.get_d()); };
    auto path = [&](const ConvexPolygon& poly, int p) {
        std::ostringstream d;
        const auto& v = poly.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) d << (i ? " L " : "M ") << px(v[i].x, p) << " " << py(v[i].y);
        d << " Z";
        return d.str();
    };
    const ConvexPolygon triangle({{0, 0}, {1, 0}, {1, 1}});
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * panel << "\" height=\"" << panel + 20
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int p = 0; p < 2; ++p) {
        os << "<path d=\"" << path(triangle, p) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << px(Rational(1, 2), p) << "\" y=\"" << panel + 5 << "\" text-anchor=\"middle\">"
           << (p == 0 ? "cells B(k)" : "images SB(k)") << "</text>\n";
    }
    for (long k = 1; k <= k_max; ++k) {
        const ConvexPolygon cell = msa_cell_polygon(Integer(k));
        const char* fill = k % 2 ? "#dde8f4" : "#f4eadd";
        os << "<path d=\"" << path(cell, 0) << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
        if (k <= 6) {
            Point2 c = cell.vertex_centroid();
            os << "<text x=\"" << px(c.x, 0) << "\" y=\"" << py(c.y) + 4 << "\" text-anchor=\"middle\">B(" << k
               << ")</text>\n";
        }
    }
    for (long k = k_max; k >= 1; --k) {
        const ConvexPolygon img = msa_image_polygon(Integer(k));
        os << "<path d=\"" << path(img, 1) << "\" fill=\"#2a6fb0\" fill-opacity=\"0.12\" stroke=\"#2a6fb0\""
           << " stroke-width=\"0.8\" stroke-dasharray=\"4 2\"/>\n";
        if (k <= 4) {
            const Rational a(1, k);
            os << "<text x=\"" << px(a, 1) << "\" y=\"" << py(0) + 14 << "\" text-anchor=\"middle\">1/" << k
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

inline int cmd_partition(long k_max, const std::string& out_prefix, const std::string& format, std::ostream& out) {
    if (k_max < 1) throw ParseError("--kmax must be >= 1");
    if (out_prefix.empty()) {
        out << (format == "svg" ? partition_svg(k_max) : partition_csv(k_max));
        return kOk;
    }
    std::ofstream(out_prefix + ".svg") << partition_svg(k_max);
    std::ofstream(out_prefix + ".csv") << partition_csv(k_max);
    out << "wrote " << out_prefix << ".svg and " << out_prefix << ".csv\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::optional<std::pair<long, long>> n;
    std::optional<std::pair<long, long>> k;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

/// Deterministic across standard libraries: plain modular reduction of mt19937_64.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    std::uint64_t below(std::uint64_t m) { return rng_() % m; }
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// Uniform-ish rational point of B^n with denominator q.
    PointB point(std::size_t n, long q) {
        std::vector<long> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(between(0, q));
        std::sort(v.rbegin(), v.rend());
        std::vector<Rational> xs;
        for (long a : v) xs.push_back(Rational(a, q));
        for (auto& r : xs) r.canonicalize();
        return PointB::from_rationals(xs);
    }

    /// Rational point of D = {x_1 + x_2 >= 1} in B^2.
    PointB point_in_d(long q) {
        long a = between((q + 1) / 2, q);
        long b = between(q - a, a);
        std::vector<Rational> xs{Rational(a, q), Rational(b, q)};
        for (auto& r : xs) r.canonicalize();
        return PointB::from_rationals(xs);
    }

    std::vector<Integer> digits(std::size_t len, long k_max) {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < len; ++i) d.emplace_back(between(1, k_max));
        return d;
    }

private:
    std::mt19937_64 rng_;
};

inline SuiteResult suite_det(const VerifyOptions& o) {
    SuiteResult r;
    r.name = "det";
    auto [n0, n1] = o.n.value_or(std::pair<long, long>{1, 6});
    auto [k0, k1] = o.k.value_or(std::pair<long, long>{1, 10});
    for (long n = n0; n <= n1; ++n)
        for (long k = k0; k <= k1; ++k) {
            Integer d = determinant(beta_matrix(Integer(k), static_cast<std::size_t>(n)));
            r.check(d == (n % 2 ? -1 : 1), "det beta(" + std::to_string(k) + ") n=" + std::to_string(n) + " is " + to_string(d));
        }
    return r;
}

inline SuiteResult suite_recursion(const VerifyOptions& o) {
    SuiteResult r;
    r.name = "recursion";
    auto [n0, n1] = o.n.value_or(std::pair<long, long>{2, 3});
    const long k_max = o.k ? o.k->second : 9;
    Sampler rnd(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto n = static_cast<std::size_t>(rnd.between(n0, n1));
        const auto digits = rnd.digits(static_cast<std::size_t>(rnd.between(0, 60)), k_max);
        ConvergentState st(n);
        for (const auto& k : digits) st = recursion_extend(st, k);
        r.check(st.matrix() == beta_product(digits, n).matrix(), "trial " + std::to_string(t) + ": recursion differs from product");
    }
    return r;
}

inline SuiteResult suite_reconstruct(const VerifyOptions& o) {
    SuiteResult r;
    r.name = "reconstruct";
    auto [n0, n1] = o.n.value_or(std::pair<long, long>{2, 3});
    Sampler rnd(o.seed);
    for (long n = n0; n <= n1; ++n)
        for (std::size_t t = 0; t < o.trials; ++t) {
            PointB x = rnd.point(static_cast<std::size_t>(n), rnd.between(2, 1000000));
            OrbitTrace tr = run_orbit(x, Algorithm::msa, 30);
            ConvergentState st(static_cast<std::size_t>(n));
            bool ok = true;
            for (std::size_t s = 1; s < tr.states.size(); ++s) {
                st = recursion_extend(st, tr.digits[s - 1].value);
                ok = ok && reconstruct_point(st, tr.states[s]) == x;
            }
            r.check(ok, "n=" + std::to_string(n) + " trial " + std::to_string(t) + ": reconstruction differs at " + x.to_text());
        }
    return r;
}

inline SuiteResult suite_roundtrip(const VerifyOptions& o) {
    SuiteResult r;
    r.name = "roundtrip";
    auto [n0, n1] = o.n.value_or(std::pair<long, long>{1, 4});
    Sampler rnd(o.seed);
    for (long n = n0; n <= n1; ++n)
        for (std::size_t t = 0; t < o.trials; ++t) {
            PointB x = rnd.point(static_cast<std::size_t>(n), rnd.between(2, 100000));
            const std::string tag = "n=" + std::to_string(n) + " x=" + x.to_text();
            if (auto s = ssa_step(x); !s.terminated())
                r.check(ssa_inverse_branch(*s.next, s.digit->index()) == x, "SSA inverse branch " + tag);
            if (auto s = msa_step(x); !s.terminated())
                r.check(msa_inverse_branch(*s.next, s.digit->value) == x, "MSA inverse branch " + tag);
            OrbitTrace tr = run_orbit(x, t % 2 ? Algorithm::ssa : Algorithm::msa, 12);
            r.check(same_trace(trace_from_json(Json::parse(trace_to_json(tr).dump())), tr), "JSON trace " + tag);
        }
    return r;
}

inline SuiteResult suite_positivity(const VerifyOptions& o) {
    SuiteResult r;
    r.name = "positivity";
    auto [n0, n1] = o.n.value_or(std::pair<long, long>{2, 4});
    auto [k0, k1] = o.k.value_or(std::pair<long, long>{1, 3});
    for (long n = n0; n <= n1; ++n)
        for (long k = k0; k <= k1; ++k) {
            const auto nn = static_cast<std::size_t>(n);
            const IntMatrix b = beta_matrix(Integer(k), nn);
            std::size_t e = 0;
            try {
                e = positive_power_exponent(b);
            } catch (const Error& err) {
                r.check(false, "beta(" + std::to_string(k) + ") n=" + std::to_string(n) + ": " + err.what());
                continue;
            }
            r.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + " exponent " + std::to_string(e));
            r.check(e <= nn * nn + 1, "exponent " + std::to_string(e) + " exceeds n^2+1 for n=" + std::to_string(n));
            IntMatrix p = b.pow(nn * nn + 1);
            for (std::size_t q = nn * nn + 1; q <= nn * nn + 6; ++q, p = p * b)
                r.check(p.all_positive(), "beta(" + std::to_string(k) + ")^" + std::to_string(q) + " has a zero entry");
        }
    return r;
}

inline SuiteResult suite_absorbing(const VerifyOptions& o) {
    SuiteResult r;
    r.name = "absorbing";
    Sampler rnd(o.seed);
    std::size_t reached = 0, stuck = 0, max_time = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        PointB x = rnd.point(2, rnd.between(1000000, 1000000000));
        std::size_t s = 0;
        for (; s <= 500 && !in_absorbing_set(x); ++s) {
            auto st = ssa_step(x);
            if (st.terminated()) break;
            x = *st.next;
        }
        if (in_absorbing_set(x)) {
            ++reached;
            max_time = std::max(max_time, s);
        } else {
            ++stuck;
        }
    }
    r.notes.push_back("hitting: " + std::to_string(reached) + "/" + std::to_string(o.trials) +
                      " reached D within 500 steps, max time " + std::to_string(max_time) + ", " + std::to_string(stuck) +
                      " did not");
    for (std::size_t t = 0; t < o.trials; ++t) {
        PointB x = rnd.point_in_d(rnd.between(2, 1000000000));
        auto st = ssa_step(x);
        r.check(!st.terminated() && in_absorbing_set(*st.next), "T x left D for x = " + x.to_text());
    }
    return r;
}

inline SuiteResult suite_diagram(const VerifyOptions& o) {
    SuiteResult r;
    r.name = "diagram";
    auto [n0, n1] = o.n.value_or(std::pair<long, long>{1, 4});
    Sampler rnd(o.seed);
    for (long n = n0; n <= n1; ++n)
        for (std::size_t t = 0; t < o.trials; ++t) {
            PointB x = rnd.point(static_cast<std::size_t>(n), rnd.between(2, 100000));
            const std::string tag = "n=" + std::to_string(n) + " x=" + x.to_text();
            if (auto s = ssa_step(x); !s.terminated())
                r.check(project(ssa_homogeneous_step(lift(x))) == *s.next, "SSA diagram " + tag);
            if (auto s = msa_step(x); !s.terminated())
                r.check(project(msa_homogeneous_step(lift(x))) == *s.next, "MSA diagram " + tag);
        }
    return r;
}

inline const std::vector<std::pair<std::string, std::function<SuiteResult(const VerifyOptions&)>>>& suites() {
    static const std::vector<std::pair<std::string, std::function<SuiteResult(const VerifyOptions&)>>> all{
        {"det", suite_det},           {"recursion", suite_recursion}, {"reconstruct", suite_reconstruct},
        {"roundtrip", suite_roundtrip}, {"positivity", suite_positivity}, {"absorbing", suite_absorbing},
        {"diagram", suite_diagram}};
    return all;
}

inline int cmd_verify(const std::string& which, const VerifyOptions& o, std::ostream& out) {
    std::vector<SuiteResult> results;
    bool known = false;
    for (const auto& [name, fn] : suites()) {
        if (which != "all" && which != name) continue;
        known = true;
        results.push_back(fn(o));
    }
    if (!known) throw ParseError("unknown suite '" + which + "'");
    bool ok = true;
    for (const auto& r : results) {
        out << (r.failures.empty() ? "PASS " : "FAIL ") << r.name << ": " << r.checks - r.failures.size() << "/" << r.checks
            << " checks passed\n";
        for (const auto& n : r.notes) out << "  " << n << "\n";
        for (const auto& f : r.failures) out << "  failed: " << f << "\n";
        ok = ok && r.failures.empty();
    }
    return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Selmer continued fraction algorithms over real number fields"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string algo = "msa";
    auto add_common = [&](CLI::App* sub, bool with_steps) {
        sub->add_option("--algo", algo, "ssa or msa")->check(CLI::IsMember({"ssa", "msa"}));
        sub->add_option("--field", cfg.field_spec, "minimal polynomial and root interval, e.g. \"x^3-2:(1,2)\"");
        sub->add_option("--point", cfg.point_spec, "comma separated coordinates in the root a")->required();
        sub->add_option("--precision", cfg.precision, "decimal precision target")->capture_default_str();
        sub->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out, "output file");
        if (with_steps) sub->add_option("--steps", cfg.steps, "number of steps")->capture_default_str();
    };
    CLI::App* expand = app.add_subcommand("expand", "run an expansion and print its trace");
    add_common(expand, true);
    CLI::App* detect = app.add_subcommand("detect-period", "find preperiod and period");
    add_common(detect, false);
    detect->add_option("--max-steps", cfg.max_steps, "step budget")->capture_default_str();
    CLI::App* analyze = app.add_subcommand("analyze", "convergence and approximation tables of a periodic MSA expansion");
    add_common(analyze, false);
    std::size_t analyze_steps = 40;
    analyze->add_option("--steps", analyze_steps, "largest convergent index s")->capture_default_str();
    analyze->add_option("--max-steps", cfg.max_steps, "period detection budget");
    std::size_t column = 0;
    auto* col_opt = analyze->add_option("--column", column, "report only matrix column g");

    CLI::App* partition = app.add_subcommand("partition", "draw the cells B(k) and images SB(k) for n = 2");
    long k_max = 5, dim = 2;
    std::string part_out, part_format = "csv";
    partition->add_option("--kmax", k_max, "number of cells")->capture_default_str();
    partition->add_option("--n", dim, "dimension (only 2)")->capture_default_str();
    partition->add_option("--out", part_out, "path prefix for .svg and .csv");
    partition->add_option("--format", part_format, "csv or svg when printing")->check(CLI::IsMember({"csv", "svg"}));

    CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
    std::string suite = "all", n_range, k_range;
    VerifyOptions vo;
    verify->add_option("suite", suite, "det, recursion, reconstruct, roundtrip, positivity, absorbing, diagram or all");
    verify->add_option("--n", n_range, "dimension range, e.g. 2..6");
    verify->add_option("--k", k_range, "digit range, e.g. 1..10");
    verify->add_option("--trials", vo.trials, "random trials per case")->capture_default_str();
    verify->add_option("--seed", vo.seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
        cfg.algo = parse_algorithm(algo);
        if (expand->parsed()) return cmd_expand(cfg, out);
        if (detect->parsed()) return cmd_detect_period(cfg, out);
        if (analyze->parsed()) {
            cfg.steps = analyze_steps;
            if (col_opt->count()) cfg.column = column;
            return cmd_analyze(cfg, out);
        }
        if (partition->parsed()) {
            if (dim != 2) throw ParseError("partition is only available for n = 2");
            return cmd_partition(k_max, part_out, part_format, out);
        }
        if (verify->parsed()) {
            if (!n_range.empty()) vo.n = parse_range(n_range);
            if (!k_range.empty()) vo.k = parse_range(k_range);
            return cmd_verify(suite, vo, out);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"selmer"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace selmer::cli
