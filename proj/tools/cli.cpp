#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rtorsion/apoly.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/json_io.hpp"
#include "rtorsion/rep.hpp"
#include "rtorsion/seifert.hpp"
#include "rtorsion/surgery.hpp"

#ifndef RTORSION_VERSION
#define RTORSION_VERSION "0.0.0"
#endif

namespace rtorsion::cli {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

struct Options {
    int precision = 256;
    std::string format = "json";
    std::string out;
    std::string knot;
    std::string slope;
    std::string emit;
    bool recursion = false;
    std::string verify;
    std::string index;
    std::string brieskorn;
    std::string tuples = "all";
    std::string kind;
    int m = 0, p = 1, q = 1;
};

struct Result {
    Json payload = Json::object();
    std::string text;          // custom text rendering; generic one when empty
    std::string negative;      // non-empty: certification-negative, exit 1
};

std::string short_complex(const Complex& z) { return z.to_string(6); }

Json point_json(const SolutionPoint& pt) {
    return Json{{"s", to_json(pt.s)},
                {"t", to_json(pt.t)},
                {"L", to_json(pt.L)},
                {"tau", to_json(pt.tau)},
                {"acyclic", pt.acyclic},
                {"residual_phi", real_to_string(pt.residual_phi, 6)},
                {"residual_eq", real_to_string(pt.residual_eq, 6)}};
}

Json slope_json(const SurgerySlope& s) {
    return Json{{"p", s.p}, {"q", s.q}, {"p_cont", s.p_cont}, {"q_cont", s.q_cont}, {"text", s.to_string()}};
}

Json perron_json(const PerronReport& r) {
    Json j{{"is_perron", r.is_perron},
           {"dominant", to_json(r.dominant)},
           {"second_modulus", real_to_string(r.second_modulus, 20)},
           {"simple", r.simple},
           {"real", r.real},
           {"bracketed", r.bracketed}};
    if (r.bracketed) j["bracket"] = Json::array({r.lower.get_str(), Integer(r.lower + 1).get_str()});
    return j;
}

// Generic rendering: one "key: value" line per field, nested objects indented.
void render(const Json& j, const std::string& indent, std::ostringstream& os) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        os << indent << it.key() << ":";
        if (v.is_object() && v.contains("text") && v["text"].is_string()) {
            os << " " << v["text"].get<std::string>() << "\n";
        } else if (v.is_object()) {
            os << "\n";
            render(v, indent + "  ", os);
        } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); })) {
            os << "\n";
            for (const auto& e : v) {
                if (e.is_object() && e.contains("text") && e["text"].is_string()) {
                    os << indent << "  - " << e["text"].get<std::string>() << "\n";
                } else if (e.is_object()) {
                    os << indent << "  -\n";
                    render(e, indent + "    ", os);
                } else {
                    os << indent << "  - " << e.dump() << "\n";
                }
            }
        } else if (v.is_string()) {
            os << " " << v.get<std::string>() << "\n";
        } else {
            os << " " << v.dump() << "\n";
        }
    }
}

Result cmd_riley(const Options& o) {
    const int m = parse_twist_knot(o.knot);
    const TwistKnotFamily fam = TwistKnotFamily::make(m);
    const MultiPoly phi = riley_polynomial(fam);
    Result r;
    r.payload = Json{{"knot", fam.name()}, {"m", m}, {"phi", poly_entry(phi)}, {"degree_t", phi.degree("t")}};
    r.text = phi.to_string() + "\n";
    return r;
}

Json check_entry(const std::string& name, bool ok, const std::string& detail) {
    return Json{{"check", name}, {"passed", ok}, {"detail", detail}};
}

Result cmd_apoly(const Options& o) {
    const int m = parse_twist_knot(o.knot);
    APoly a = o.recursion ? hoste_shanahan(m) : a_polynomial(m);
    Result r;
    r.payload = Json{{"knot", TwistKnotFamily::make(m).name()},
                     {"m", m},
                     {"provenance", a.provenance},
                     {"A", poly_entry(a.poly)},
                     {"removed", a.removed}};
    if (o.verify.empty()) return r;
    if (o.verify != "all") throw ParseError("--verify accepts only 'all'");
    Json checks = Json::array();
    std::vector<std::string> failed;
    auto run = [&](const std::string& name, auto&& body) {
        try {
            checks.push_back(check_entry(name, true, body()));
        } catch (const VerificationError& e) {
            checks.push_back(check_entry(name, false, e.what()));
            failed.push_back(name);
        }
    };
    run("unit_extremes", [&] {
        auto u = verify_unit_extremes(a.poly);
        return "L^top coefficient " + std::string(u.leading_sign > 0 ? "" : "-") + "M^" +
               std::to_string(u.leading_power) + ", L^0 coefficient " + (u.trailing_sign > 0 ? "" : "-") + "M^" +
               std::to_string(u.trailing_power);
    });
    run("recursion_agrees", [&] {
        APoly other = o.recursion ? a_polynomial(m) : hoste_shanahan(m);
        if (!equal_up_to_unit(a.poly, other.poly))
            throw VerificationError("elimination and recursion differ: " + other.poly.to_string());
        return std::string("elimination = recursion up to sign and unit");
    });
    run("diff_divisibility", [&] {
        auto d = verify_diff_divisibility(a.poly, m);
        return "(M^2 - 1)^(d - n) divides the n-th derivative at L = -1 for n < " + std::to_string(d.d);
    });
    for (int p : {1, -1})
        for (int q = 1; q <= 3; ++q)
            run("res_extremes p=" + std::to_string(p) + " q=" + std::to_string(q), [&] {
                auto e = verify_res_extremes(a.poly, p, q);
                return "extreme coefficients " + e.highest.get_str() + ", " + e.lowest.get_str();
            });
    run("boundary_slopes_even", [&] {
        NewtonPolygon np = newton_polygon(a.poly, "L", "M");
        std::string s;
        for (const auto& sl : np.slopes) {
            if (!s.empty()) s += " ";
            if (!sl) {
                s += "inf";
                continue;
            }
            if (sl->get_den() != 1 || sl->get_num() % 2 != 0)
                throw VerificationError("Newton polygon slope " + sl->get_str() + " is not an even integer");
            s += sl->get_str();
        }
        return "slopes " + s;
    });
    r.payload["verification"] = checks;
    if (!failed.empty()) r.negative = "failed checks: " + failed.front();
    return r;
}

Result cmd_surgery(const Options& o) {
    const int m = parse_twist_knot(o.knot);
    const TwistKnotFamily fam = TwistKnotFamily::make(m);
    const SurgerySlope slope = parse_slope(o.slope);
    const std::string emit = o.emit.empty() ? "table" : o.emit;
    Result r;
    r.payload = Json{{"knot", fam.name()}, {"slope", slope_json(slope)}};
    if (emit == "table") {
        auto pts = solve_representations(fam, slope, o.precision);
        Json rows = Json::array();
        std::ostringstream os;
        os << "s | t | tau\n";
        for (const auto& pt : pts) {
            rows.push_back(point_json(pt));
            os << short_complex(pt.s) << " | " << short_complex(pt.t) << " | " << short_complex(pt.tau)
               << (pt.acyclic ? "" : " (not acyclic)") << "\n";
        }
        r.payload["count"] = pts.size();
        r.payload["non_acyclic"] = std::count_if(pts.begin(), pts.end(), [](const auto& p) { return !p.acyclic; });
        r.payload["rows"] = rows;
        r.text = os.str();
        return r;
    }
    if (emit != "annihilator" && emit != "certificate")
        throw ParseError("--emit must be table, annihilator or certificate");
    AnnihilatorCertificate c = torsion_annihilator(fam, slope, o.precision);
    r.payload["verified"] = c.verified;
    if (!c.verified) {
        r.payload["failure"] = c.failure;
        r.payload["leading"] = c.leading.get_str();
        r.negative = c.failure;
    }
    r.payload["annihilator"] = poly_entry(c.annihilator);
    r.payload["multiplicity"] = c.factors.empty() ? 0 : c.factors.front().multiplicity;
    if (emit == "annihilator") {
        r.text = c.annihilator.to_string() + "\n";
        return r;
    }
    const SurgerySystem sys = surgery_system(fam, slope);
    const TorsionExpression te = torsion_expression(fam, slope);
    r.payload["phi"] = poly_entry(sys.phi);
    r.payload["lambda"] = poly_entry(sys.lambda);
    r.payload["P"] = poly_entry(sys.P);
    r.payload["S"] = poly_entry(sys.S);
    r.payload["s_minus_1_multiplicity"] = sys.s_minus_1;
    r.payload["removed"] = c.removed;
    r.payload["torsion_numerator"] = poly_entry(te.numerator);
    r.payload["torsion_denominator"] = poly_entry(te.denominator);
    r.payload["raw"] = poly_entry(c.raw);
    Json sq = Json::array();
    for (const auto& [f, k] : c.squarefree) sq.push_back(Json{{"factor", poly_entry(f)}, {"multiplicity", k}});
    r.payload["squarefree"] = sq;
    r.payload["cofactor"] = poly_entry(c.cofactor);
    r.payload["max_residual"] = real_to_string(c.max_residual, 6);
    r.payload["min_cofactor"] = real_to_string(c.min_cofactor, 6);
    Json rows = Json::array();
    for (const auto& pt : c.solutions) rows.push_back(point_json(pt));
    r.payload["solutions"] = rows;
    if (c.verified) r.payload["perron"] = perron_json(perron_check(c.annihilator, o.precision));

    // Torsion values do not depend on the continuation: recompute with
    // (p' + p, q' + q) and compare the sorted values.
    SurgerySlope alt = SurgerySlope::with_continuation(slope.p, slope.q, slope.p_cont + slope.p,
                                                       slope.q_cont + slope.q);
    auto alt_pts = solve_representations(fam, alt, o.precision);
    PrecisionScope scope(o.precision + 32);
    Real diff = 0;
    bool same_count = alt_pts.size() == c.solutions.size();
    if (same_count) {
        auto key = [](std::vector<SolutionPoint> v) {
            std::vector<std::pair<Real, Real>> out;
            for (const auto& p : v) out.emplace_back(p.tau.re, p.tau.im);
            std::sort(out.begin(), out.end());
            return out;
        };
        auto a = key(c.solutions), b = key(alt_pts);
        for (std::size_t i = 0; i < a.size(); ++i)
            diff = std::max(diff, Real(abs(a[i].first - b[i].first) + abs(a[i].second - b[i].second)));
    }
    r.payload["continuation_cross_check"] =
        Json{{"alternative", slope_json(alt)}, {"same_count", same_count}, {"max_difference", real_to_string(diff, 6)}};
    return r;
}

std::vector<SeifertTuple> read_tuples(const std::string& spec, const SeifertIndex& idx) {
    if (spec == "all") return admissible_tuples(idx);
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open tuple file " + spec);
    std::vector<SeifertTuple> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        SeifertTuple t;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                t.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("malformed tuple entry '" + tok + "' in " + spec);
            }
        }
        if (!t.empty()) out.push_back(std::move(t));
    }
    return out;
}

Json value_json(const SeifertValue& v) {
    return Json{{"k", v.k},
                {"tau", real_to_string(v.tau, 30)},
                {"tau_product_form", real_to_string(v.tau_product, 30)},
                {"acyclic", v.acyclic}};
}

Result cmd_seifert(const Options& o) {
    if (o.index.empty() == o.brieskorn.empty()) throw ParseError("give exactly one of --index and --brieskorn");
    SeifertIndex idx;
    if (!o.index.empty()) {
        idx = parse_seifert_index(o.index);
    } else {
        std::string b = o.brieskorn;
        std::replace(b.begin(), b.end(), ',', ' ');
        std::istringstream is(b);
        int a1, a2, a3;
        std::string extra;
        if (!(is >> a1 >> a2 >> a3) || (is >> extra)) throw ParseError("--brieskorn expects a1,a2,a3");
        idx = brieskorn_index(a1, a2, a3);
    }
    const std::vector<SeifertTuple> tuples = read_tuples(o.tuples, idx);
    const std::string emit = o.emit.empty() ? "values" : o.emit;
    Result r;
    Json pairs = Json::array();
    for (const auto& p : idx.pairs) pairs.push_back(Json{{"a", p.a}, {"b", p.b}, {"r", p.r}, {"s", p.s}});
    r.payload = Json{{"index", idx.to_string()}, {"pairs", pairs}};
    if (emit == "values") {
        Json vals = Json::array();
        for (const auto& v : seifert_torsion_values(idx, tuples, o.precision)) vals.push_back(value_json(v));
        r.payload["values"] = vals;
    } else if (emit == "sigma") {
        SeifertSigma s = seifert_sigma(idx, tuples, o.precision);
        Json vals = Json::array();
        for (const auto& v : s.values) vals.push_back(value_json(v));
        r.payload["values"] = vals;
        r.payload["sigma"] = poly_entry(s.sigma);
        r.payload["max_deviation"] = real_to_string(s.max_deviation, 6);
    } else if (emit == "certificate") {
        Json certs = Json::array();
        for (const auto& v : distinct_values(seifert_torsion_values(idx, tuples, o.precision), o.precision)) {
            SeifertCertificate c = seifert_integrality_certificate(idx, v.k, o.precision);
            certs.push_back(Json{{"k", c.k},
                                 {"tau", real_to_string(c.tau, 30)},
                                 {"annihilator", poly_entry(c.poly)},
                                 {"steps", c.steps},
                                 {"residual", real_to_string(c.residual, 6)}});
        }
        r.payload["certificates"] = certs;
    } else {
        throw ParseError("--emit must be values, sigma or certificate");
    }
    return r;
}

Result cmd_certify(const Options& o) {
    Result r;
    r.payload = Json{{"kind", o.kind}};
    Json& p = r.payload;
    if (o.kind == "twist") {
        TwistCertificate c = twist_knot_certificate(o.m, o.q);
        p["m"] = c.m;
        p["q"] = c.q;
        p["s_poly"] = poly_entry(c.s_poly);
        p["s_inverse_poly"] = poly_entry(c.s_inv_poly);
        p["phi"] = poly_entry(c.phi);
        p["f_at_1"] = c.f_at_1.get_str();
        p["shifted"] = poly_entry(c.shifted);
    } else if (o.kind == "div16") {
        IntegerSurgeryReport c = integer_surgery_eliminant(o.p);
        p["p"] = c.p;
        p["h"] = poly_entry(c.h);
        p["leading"] = c.leading.get_str();
        p["divisor"] = poly_entry(c.divisor);
        p["quotient"] = poly_entry(c.quotient);
        p["h_at_1"] = c.h_at_1.get_str();
        p["norm_at_i"] = c.norm_at_i.get_str();
    } else if (o.kind == "one-over-q") {
        OneOverQReport c = one_over_q_certificate(o.q);
        p["q"] = c.q;
        p["f"] = poly_entry(c.f);
        p["h"] = poly_entry(c.h);
        p["f_at_1"] = c.f_at_1.get_str();
        p["h_at_1"] = c.h_at_1.get_str();
        p["shifted"] = poly_entry(c.shifted);
    } else if (o.kind == "slope-poly") {
        SlopePolyReport c = monic_slope_poly(o.m, o.q, o.p);
        p["m"] = o.m;
        p["p"] = o.p;
        p["q"] = o.q;
        p["f"] = poly_entry(c.f);
        p["f_at_1"] = c.f_at_1.get_str();
        p["monic"] = c.monic;
    } else if (o.kind == "diff") {
        DiffDivisibilityReport c = verify_diff_divisibility(o.m);
        p["m"] = c.m;
        p["d"] = c.d;
        p["A"] = poly_entry(c.a);
        Json qs = Json::array();
        for (const auto& q : c.quotients) qs.push_back(poly_entry(q));
        p["quotients"] = qs;
    } else if (o.kind == "surgery") {
        Options sub = o;
        sub.emit = "certificate";
        Result s = cmd_surgery(sub);
        s.payload["kind"] = o.kind;
        return s;
    } else {
        throw ParseError("--kind must be twist, div16, one-over-q, slope-poly, diff or surgery");
    }
    return r;
}

Result cmd_splice(const Options& o) {
    const int m = parse_twist_knot(o.knot);
    const APoly a = a_polynomial(m);
    SpliceReport s = splice_condition_check(a.poly, o.precision);
    Result r;
    Json ws = Json::array();
    for (const auto& w : s.witnesses)
        ws.push_back(Json{{"L0", to_json(w.L0)},
                          {"M0", to_json(w.M0)},
                          {"residual_curve", real_to_string(w.residual_curve, 6)},
                          {"residual_apoly", real_to_string(w.residual_apoly, 6)}});
    r.payload = Json{{"knot", TwistKnotFamily::make(m).name()},
                     {"A", poly_entry(a.poly)},
                     {"satisfied", s.satisfied},
                     {"witness_count", s.witnesses.size()},
                     {"witnesses", ws}};
    if (!s.satisfied) r.negative = "no admissible common zero";
    std::ostringstream os;
    os << "satisfied: " << (s.satisfied ? "true" : "false") << "\n";
    os << "witnesses: " << s.witnesses.size() << "\n";
    if (!s.witnesses.empty())
        os << "first: L0 = " << short_complex(s.witnesses.front().L0)
           << ", M0 = " << short_complex(s.witnesses.front().M0) << "\n";
    r.text = os.str();
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact and numeric torsion invariants of twist-knot surgeries and Seifert manifolds", "rtorsion"};
    app.require_subcommand(1);
    app.add_option("--precision", o.precision, "Working precision in bits")->check(CLI::Range(32, 1 << 16));
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", o.out, "Write output to this file");

    auto* riley = app.add_subcommand("riley", "Riley polynomial of a twist knot")->fallthrough();
    riley->add_option("--knot", o.knot, "J(2,2m)")->required();

    auto* apoly = app.add_subcommand("apoly", "A-polynomial of a twist knot")->fallthrough();
    apoly->add_option("--knot", o.knot, "J(2,2m)")->required();
    apoly->add_flag("--recursion", o.recursion, "Use the two-step recursion instead of elimination");
    apoly->add_option("--verify", o.verify, "Run all structural checks (all)");

    auto* surgery = app.add_subcommand("surgery", "Representations and torsion of a surgery")->fallthrough();
    surgery->add_option("--knot", o.knot, "J(2,2m)")->required();
    surgery->add_option("--slope", o.slope, "p/q")->required();
    surgery->add_option("--emit", o.emit, "table|annihilator|certificate");

    auto* seifert = app.add_subcommand("seifert", "Torsion of Seifert fibered homology spheres")->fallthrough();
    seifert->add_option("--index", o.index, "b;g;(a1,b1),(a2,b2),...");
    seifert->add_option("--brieskorn", o.brieskorn, "a1,a2,a3");
    seifert->add_option("--tuples", o.tuples, "FILE or all");
    seifert->add_option("--emit", o.emit, "values|sigma|certificate");

    auto* certify = app.add_subcommand("certify", "Integrality certificates")->fallthrough();
    certify->add_option("--kind", o.kind, "twist|div16|one-over-q|slope-poly|diff|surgery")->required();
    certify->add_option("--m", o.m, "Twist parameter");
    certify->add_option("--p", o.p, "Slope numerator");
    certify->add_option("--q", o.q, "Slope denominator");
    certify->add_option("--knot", o.knot, "J(2,2m) (surgery kind)");
    certify->add_option("--slope", o.slope, "p/q (surgery kind)");

    auto* splice = app.add_subcommand("splice", "Splice condition for a twist knot")->fallthrough();
    splice->add_option("--knot", o.knot, "J(2,2m)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
        if (name == "riley")
            res = cmd_riley(o);
        else if (name == "apoly")
            res = cmd_apoly(o);
        else if (name == "surgery")
            res = cmd_surgery(o);
        else if (name == "seifert")
            res = cmd_seifert(o);
        else if (name == "certify")
            res = cmd_certify(o);
        else
            res = cmd_splice(o);
    } catch (const VerificationError& e) {
        err << "certification failed: " << e.what() << "\n";
        return kNegative;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << "\n";
        return kInternal;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string joined;
    for (const auto& a : args) joined += a + '\x1f';
    Json manifest{{"command", name},
                  {"arguments", args},
                  {"precision", o.precision},
                  {"version", RTORSION_VERSION},
                  {"input_hash", fnv1a_hex(joined)},
                  {"payload_hash", fnv1a_hex(res.payload.dump())},
                  {"seconds", seconds}};

    std::string text;
    if (o.format == "json") {
        text = Json{{"manifest", manifest}, {"payload", res.payload}}.dump(2) + "\n";
    } else {
        std::ostringstream os;
        if (!res.text.empty())
            os << res.text;
        else
            render(res.payload, "", os);
        os << "# command: " << name << "\n# precision: " << o.precision << "\n# version: " << RTORSION_VERSION
           << "\n# input_hash: " << manifest["input_hash"].get<std::string>()
           << "\n# payload_hash: " << manifest["payload_hash"].get<std::string>() << "\n# seconds: " << seconds
           << "\n";
        text = os.str();
    }
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            err << "cannot write " << o.out << "\n";
            return kUsage;
        }
        f << text;
    }
    if (!res.negative.empty()) {
        err << "certification negative: " << res.negative << "\n";
        return kNegative;
    }
    return kOk;
}

}  // namespace rtorsion::cli
