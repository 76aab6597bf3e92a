#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "fourvertex/applications.h"
#include "fourvertex/harness.h"
#include "fourvertex/io.h"
#include "fourvertex/lifting.h"
#include "fourvertex/reduction.h"

using namespace fourvertex;
using nlohmann::json;

namespace {

enum class Exit { Ok = 0, InvalidInput = 1, Degenerate = 2, Violation = 3 };

struct Options {
    std::string input;
    std::string output;
    std::string plot_data;
    bool csv = false;
    bool exact = false;
    std::uint64_t seed = 0;
    Tolerances tol;
};

/// What a subcommand produced: the JSON document, an optional CSV rendering,
/// a one-paragraph human summary, and the polygon to plot (if any).
struct Result {
    json doc;
    std::string csv;
    std::string summary;
    std::optional<SphericalPolygon> plot;
    Exit status = Exit::Ok;
};

std::string join_indices(const std::vector<std::size_t>& zero_based) {
    std::string out;
    for (std::size_t i : zero_based) out += (out.empty() ? "" : " ") + std::to_string(i + 1);
    return out.empty() ? "none" : out;
}

std::string csv_rows(const json& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& cell : row) {
            out << (first ? "" : ",") << (cell.is_string() ? cell.get<std::string>() : cell.dump());
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string csv_key_values(const json& doc) {
    json rows = json::array({{"key", "value"}});
    for (const auto& [k, v] : doc.items()) {
        if (v.is_primitive()) rows.push_back({k, v});
    }
    return csv_rows(rows);
}

template <class P>
std::string csv_vertices(const P& p) {
    json rows = json::array({{"x", "y", "z"}});
    for (const auto& v : p.vertices()) rows.push_back(io::vec_json(v));
    return csv_rows(rows);
}

std::string csv_indices(const std::vector<std::size_t>& zero_based) {
    json rows = json::array({{"index"}});
    for (std::size_t i : zero_based) rows.push_back({i + 1});
    return csv_rows(rows);
}

json load(const Options& o) {
    if (o.input.empty()) fail(ErrorCode::InvalidInput, "an input polygon file is required");
    return io::read_file(o.input);
}

SphericalPolygon spherical_input(const json& doc, const Options& o) {
    if (io::polygon_kind(doc) == "space") return tangent_indicatrix(io::space_from_json(doc), o.tol);
    return io::spherical_from_json(doc, o.tol);
}

SphericalPolygonQ spherical_exact_input(const json& doc, const Options& o) {
    if (io::polygon_kind(doc) == "space") return tangent_indicatrix(io::space_exact_from_json(doc), o.tol);
    return io::spherical_exact_from_json(doc, o.tol);
}

void require_inexact(const Options& o, const char* command) {
    if (o.exact) fail(ErrorCode::InvalidInput, std::string("--exact is not supported by ") + command);
}

// ---- subcommands ----

Result cmd_indicatrix(const Options& o) {
    const json in = load(o);
    Result r;
    if (o.exact) {
        const auto q = tangent_indicatrix(io::space_exact_from_json(in), o.tol);
        r.doc = io::to_json(q);
        r.csv = csv_vertices(q);
        r.summary = "indicatrix: " + std::to_string(q.size()) + " exact directions";
    } else {
        const auto q = tangent_indicatrix(io::space_from_json(in), o.tol);
        r.doc = io::to_json(q);
        r.csv = csv_vertices(q);
        r.summary = "indicatrix: " + std::to_string(q.size()) + " unit vectors";
        r.plot = q;
    }
    return r;
}

Result cmd_flattenings(const Options& o) {
    const json in = load(o);
    std::vector<std::size_t> f;
    std::size_t n = 0;
    if (o.exact) {
        const auto p = io::space_exact_from_json(in);
        f = flattenings(p, o.tol);
        n = p.size();
    } else {
        const auto p = io::space_from_json(in);
        f = flattenings(p, o.tol);
        n = p.size();
    }
    Result r;
    r.doc = {{"n", n}, {"count", f.size()}, {"flattenings", io::indices_json(f)}};
    r.csv = csv_indices(f);
    r.summary = "flattenings: " + std::to_string(f.size()) + " (" + join_indices(f) + ")";
    return r;
}

template <class T>
Result inflections_report(const SphericalPolygonT<T>& q, const Options& o) {
    const auto eps = epsilon_sequence(q, o.tol);
    const auto infl = spherical_inflections(q, o.tol);
    Result r;
    r.doc = {{"n", q.size()},
             {"epsilon", io::epsilon_json(eps)},
             {"sign_changes", count_sign_changes(eps)},
             {"count", infl.size()},
             {"inflections", io::indices_json(infl)}};
    r.csv = csv_indices(infl);
    r.summary = "epsilon " + eps.to_string() + ", inflections: " + std::to_string(infl.size()) + " (" +
                join_indices(infl) + ")";
    return r;
}

Result cmd_inflections(const Options& o) {
    const json in = load(o);
    if (o.exact) return inflections_report(spherical_exact_input(in, o), o);
    const auto q = spherical_input(in, o);
    Result r = inflections_report(q, o);
    r.plot = q;
    return r;
}

template <class T>
json check_doc(const SphericalPolygonT<T>& q, bool planar, const Options& o) {
    const bool general = !has_collinear_triple(q.vertices(), o.tol);
    bool simple = false;
    bool balanced = false;
    int inflections = 0;
    json eps_doc;
    if (planar) {
        // Planar convention: balanced, every edge an inflection.
        if constexpr (std::is_same_v<T, double>) {
            simple = planar_is_simple(q, o.tol);
        } else {
            std::vector<Vec3> approx;
            for (const auto& v : q.vertices()) approx.push_back(normalized(to_double(v)));
            simple = planar_is_simple(SphericalPolygon(approx), o.tol);
        }
        balanced = true;
        inflections = static_cast<int>(q.size());
        eps_doc = io::epsilon_json(epsilon_sequence(q, o.tol, true));
    } else {
        simple = is_simple(q, o.tol);
        balanced = balanced_unchecked(q.vertices(), o.tol);
        const auto eps = epsilon_sequence(q, o.tol);
        eps_doc = io::epsilon_json(eps);
        inflections = count_sign_changes(eps);
    }
    json doc{{"n", q.size()},         {"epsilon", eps_doc},   {"inflections", inflections},
             {"simple", simple},      {"balanced", balanced}, {"planar", planar},
             {"general_position", general}};
    if (!planar) {
        if (q.size() >= 4) doc["good_vertices"] = io::indices_json(good_vertices(q, o.tol));
        if (balanced && general && q.size() >= 5) {
            doc["nonessential_vertices"] = io::indices_json(nonessential_vertices(q, o.tol));
        }
    }
    return doc;
}

Result cmd_check(const Options& o, bool triangulation) {
    const json in = load(o);
    Result r;
    if (o.exact) {
        if (triangulation) fail(ErrorCode::InvalidInput, "--triangulation is not supported with --exact");
        const auto q = spherical_exact_input(in, o);
        r.doc = check_doc(q, is_planar_exact(q), o);
    } else {
        const auto q = spherical_input(in, o);
        r.doc = check_doc(q, is_planar(q, o.tol), o);
        if (triangulation) {
            if (!r.doc["simple"].get<bool>() || r.doc["planar"].get<bool>()) {
                fail(ErrorCode::NotSimple, "triangulation needs a simple nonplanar polygon");
            }
            const auto t = triangulate_regions(q, o.tol);
            json tri = io::triangulation_to_json(t);
            for (int region : {1, 2}) {
                const auto d = dual_graph(t, region);
                tri["dual_graph_" + std::to_string(region)] = {
                    {"nodes", d.nodes}, {"edges", d.edges}, {"leaves", d.leaves}, {"tree", d.is_tree()}};
            }
            r.doc["triangulation"] = tri;
        }
        r.plot = q;
    }
    r.csv = csv_key_values(r.doc);
    r.summary = "simple: " + r.doc["simple"].dump() + ", balanced: " + r.doc["balanced"].dump() +
                ", inflections: " + r.doc["inflections"].dump();
    return r;
}

std::vector<double> parse_base(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(io::parse_double(json(part)));
    if (out.size() != 3) fail(ErrorCode::InvalidInput, "--base needs x,y,z");
    return out;
}

Result cmd_lift(const Options& o, const std::string& base_text, bool preserve) {
    const json in = load(o);
    LiftOptions lo;
    lo.preserve_simplicity = preserve;
    Result r;
    if (o.exact) {
        Vec3Q base{Rational(0), Rational(0), Rational(0)};
        if (!base_text.empty()) {
            std::vector<Rational> b;
            std::stringstream ss(base_text);
            std::string part;
            while (std::getline(ss, part, ',')) b.push_back(io::parse_rational(json(part)));
            if (b.size() != 3) fail(ErrorCode::InvalidInput, "--base needs x,y,z");
            base = {b[0], b[1], b[2]};
        }
        const auto q = io::spherical_exact_from_json(in, o.tol);
        const auto w = lift_weights(q, lo, o.tol);
        const auto p = lift_with(q, w, base, o.tol);
        r.doc = io::to_json(p);
        json weights = json::array();
        for (const auto& l : w.lambdas) weights.push_back(io::rational_text(l));
        r.doc["weights"] = weights;
        r.doc["closure_residual"] = closure_residual(q.vertices(), w.lambdas);
        r.csv = csv_vertices(p);
    } else {
        Vec3 base{0, 0, 0};
        if (!base_text.empty()) {
            const auto b = parse_base(base_text);
            base = {b[0], b[1], b[2]};
        }
        const auto q = io::spherical_from_json(in, o.tol);
        const auto w = lift_weights(q, lo, o.tol);
        const auto p = lift_with(q, w, base, o.tol);
        r.doc = io::to_json(p);
        r.doc["weights"] = w.lambdas;
        r.doc["closure_residual"] = closure_residual(q.vertices(), w.lambdas);
        r.csv = csv_vertices(p);
        r.plot = q;
    }
    r.summary = "lifted " + std::to_string(r.doc["vertices"].size()) + " vertices, closure residual " +
                r.doc["closure_residual"].dump();
    return r;
}

template <class T>
Result reduce_report(const SphericalPolygonT<T>& q, const ReductionOptions& ro, const Options& o) {
    const auto trace = reduce_to_base(q, ro, o.tol);
    Result r;
    r.doc = io::trace_to_json(trace);
    json rows = json::array({{"step", "deleted", "before", "after", "delta"}});
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& s = trace.steps[k];
        rows.push_back({k + 1, s.deleted + 1, s.before, s.after, s.delta()});
    }
    r.csv = csv_rows(rows);
    r.summary = "reduced " + std::to_string(q.size()) + " -> 4 in " + std::to_string(trace.steps.size()) +
                " steps, inflections " + std::to_string(trace.initial_inflections) + " -> 4, terminal " +
                join_indices(trace.terminal_ids);
    return r;
}

Result cmd_reduce(const Options& o, bool random) {
    const json in = load(o);
    ReductionOptions ro;
    ro.selection = random ? ReductionOptions::Selection::Random : ReductionOptions::Selection::SmallestIndex;
    ro.seed = o.seed;
    if (o.exact) return reduce_report(spherical_exact_input(in, o), ro, o);
    const auto q = spherical_input(in, o);
    Result r = reduce_report(q, ro, o);
    r.plot = q;
    return r;
}

Result cmd_area(const Options& o) {
    require_inexact(o, "area");
    const auto q = spherical_input(load(o), o);
    const auto a = region_areas(q, o.tol);
    Result r;
    r.doc = io::areas_to_json(a);
    r.csv = csv_rows(json::array({{"area1", "area2"}, {a.area1, a.area2}}));
    r.summary = "area left " + std::to_string(a.area1) + ", right " + std::to_string(a.area2) + " sr";
    r.plot = q;
    return r;
}

Result cmd_tennis_ball(const Options& o) {
    const json in = load(o);
    Result r;
    TennisBallReport t;
    if (o.exact) {
        t = tennis_ball_check(spherical_exact_input(in, o), o.tol);
    } else {
        const auto q = spherical_input(in, o);
        t = tennis_ball_check(q, o.tol);
        r.plot = q;
    }
    r.doc = io::tennis_ball_to_json(t);
    r.csv = csv_key_values(r.doc);
    r.summary = std::string("equal area: ") + (t.equal_area ? "yes" : "no") +
                ", inflections: " + std::to_string(t.inflections) +
                ", theorem holds: " + (t.theorem_holds ? "yes" : "no");
    if (!t.theorem_holds) r.status = Exit::Violation;
    return r;
}

Result cmd_mobius(const Options& o) {
    require_inexact(o, "mobius");
    const auto q = spherical_input(load(o), o);
    const auto m = mobius_check(q, o.tol);
    Result r;
    r.doc = io::mobius_to_json(m);
    r.csv = csv_key_values(r.doc);
    r.summary = "inflections: " + std::to_string(m.inflections) + " (" + join_indices(m.inflection_edges) +
                "), pairing: " + (m.pairing_holds ? "yes" : "no") + ", theorem holds: " +
                (m.theorem_holds ? "yes" : "no");
    if (!m.theorem_holds) r.status = Exit::Violation;
    r.plot = q;
    return r;
}

Result cmd_perturb(const Options& o, double magnitude, int retries) {
    require_inexact(o, "perturb");
    const auto q = io::spherical_from_json(load(o), o.tol);
    PerturbOptions po;
    po.seed = o.seed;
    po.magnitude = magnitude;
    po.max_retries = retries;
    const auto p = perturb_to_general_position(q, po, o.tol);
    Result r;
    r.doc = io::to_json(p);
    r.csv = csv_vertices(p);
    double moved = 0;
    for (std::size_t i = 0; i < q.size(); ++i) moved = std::max(moved, angle_between(q.vertices()[i], p.vertices()[i]));
    r.summary = "perturbed " + std::to_string(p.size()) + " vertices, largest move " + std::to_string(moved) + " rad";
    r.plot = p;
    return r;
}

struct CertifyArgs {
    int trials = 100;
    int n_min = 4;
    int n_max = 12;
    int attempts = 2000;
    std::string mode = "spherical_simple_balanced";
    std::string findings = "findings";
    std::string replay;
};

Result cmd_certify(const Options& o, const CertifyArgs& a) {
    require_inexact(o, "certify");
    Result r;
    if (!a.replay.empty()) {
        const auto f = harness::Finding::from_json(io::read_file(a.replay));
        const bool still = harness::replay(f, o.tol);
        r.doc = {{"claim", f.claim}, {"seed", f.seed}, {"reproduced", still}};
        r.csv = csv_key_values(r.doc);
        r.summary = "finding " + f.claim + "/" + std::to_string(f.seed) + (still ? " reproduces" : " no longer fails");
        r.status = still ? Exit::Violation : Exit::Ok;
        return r;
    }
    harness::GeneratorConfig c;
    c.seed = o.seed;
    c.n_min = a.n_min;
    c.n_max = a.n_max;
    c.attempts = a.attempts;
    c.tol = o.tol;
    if (!harness::parse_mode(a.mode, c.mode)) fail(ErrorCode::InvalidInput, "unknown mode '" + a.mode + "'");
    if (a.trials < 1) fail(ErrorCode::InvalidInput, "--trials must be positive");
    harness::CertifyOptions opts;
    opts.trials = a.trials;
    opts.findings_dir = a.findings;
    const auto report = harness::certify_all(c, opts);
    r.doc = report.to_json();
    json rows = json::array({{"claim", "trials", "passes", "skipped", "violations"}});
    std::ostringstream summary;
    for (const auto& [claim, t] : report.claims) {
        rows.push_back({claim, t.trials, t.passes, t.skipped, t.violations});
        summary << claim << ": " << t.passes << "/" << t.trials << " passed, " << t.skipped << " skipped, "
                << t.violations << " violations\n";
    }
    summary << (report.ok() ? "no findings" : std::to_string(report.findings.size()) + " findings in " + a.findings);
    r.csv = csv_rows(rows);
    r.summary = summary.str();
    r.status = report.ok() ? Exit::Ok : Exit::Violation;
    return r;
}

int emit(const Result& r, const Options& o) {
    const std::string body = o.csv ? r.csv : r.doc.dump(2) + "\n";
    if (o.output.empty()) {
        std::cout << body;
    } else {
        io::write_file(o.output, body);
        std::cout << r.summary << '\n';
    }
    if (!o.plot_data.empty()) {
        if (!r.plot) fail(ErrorCode::InvalidInput, "--plot-data needs a floating-point spherical polygon");
        io::write_file(o.plot_data, io::plot_json(*r.plot).dump());
    }
    return static_cast<int>(r.status);
}

int exit_for(const GeometryError& e) {
    switch (e.error_class()) {
        case ErrorClass::InvalidInput: return static_cast<int>(Exit::InvalidInput);
        case ErrorClass::Degenerate: return static_cast<int>(Exit::Degenerate);
        case ErrorClass::Violation: return static_cast<int>(Exit::Violation);
    }
    return static_cast<int>(Exit::InvalidInput);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete four-vertex toolkit: indicatrices, inflections, lifts, reductions, certification"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    std::string mutant_name = "none";
    app.add_option("-o,--output", o.output, "Write the JSON/CSV result here instead of standard output");
    app.add_flag("--csv", o.csv, "CSV output instead of JSON");
    app.add_flag("--json", [&o](std::int64_t) { o.csv = false; }, "JSON output (default)");
    app.add_flag("--exact", o.exact, "Exact rational arithmetic");
    app.add_option("--seed", o.seed, "Seed for randomized steps");
    app.add_option("--plot-data", o.plot_data, "Write per-edge arc polylines (33 samples each) as JSON");
    app.add_option("--degeneracy-tol", o.tol.degeneracy, "Orientation zero band")->capture_default_str();
    app.add_option("--norm-tol", o.tol.norm, "Unit-norm band for sphere points")->capture_default_str();
    app.add_option("--coefficient-tol", o.tol.coefficient, "Open-cone coefficient floor")->capture_default_str();
    app.add_option("--reconstruction-tol", o.tol.reconstruction, "Cone certificate residual")->capture_default_str();
    app.add_option("--closure-tol", o.tol.closure, "Relative lift closure residual")->capture_default_str();
    app.add_option("--roundtrip-tol", o.tol.roundtrip, "Lift round-trip angle (rad)")->capture_default_str();
    app.add_option("--area-tol", o.tol.area, "Area identity band (sr)")->capture_default_str();
    app.add_option("--equal-area-tol", o.tol.equal_area, "Equal-area band (sr)")->capture_default_str();
    app.add_option("--planar-tol", o.tol.planar, "Great-circle band (rad)")->capture_default_str();
    app.add_option("--vertex-match-tol", o.tol.vertex_match, "Equal/antipodal vertex band")->capture_default_str();
    app.add_option("--mutate", mutant_name, "Enable one sign-flip mutant (testing the tests)")
        ->group("Testing");

    auto input_of = [&o](CLI::App* sub) { sub->add_option("input", o.input, "Polygon JSON file"); };

    std::function<Result()> run;

    auto* indicatrix = app.add_subcommand("indicatrix", "Tangent indicatrix of a space polygon");
    input_of(indicatrix);
    indicatrix->callback([&] { run = [&] { return cmd_indicatrix(o); }; });

    auto* flat = app.add_subcommand("flattenings", "Flattenings of a space polygon");
    input_of(flat);
    flat->callback([&] { run = [&] { return cmd_flattenings(o); }; });

    auto* infl = app.add_subcommand("inflections", "Epsilon sequence and inflections of a spherical polygon");
    input_of(infl);
    infl->callback([&] { run = [&] { return cmd_inflections(o); }; });

    bool with_triangulation = false;
    auto* check = app.add_subcommand("check", "Simplicity, balance, inflections, good/nonessential vertices");
    input_of(check);
    check->add_flag("--triangulation", with_triangulation, "Include the region triangulation and dual graphs");
    check->callback([&] { run = [&] { return cmd_check(o, with_triangulation); }; });

    std::string base_text;
    bool preserve = false;
    auto* lift_cmd = app.add_subcommand("lift", "Closed space polygon with the given tangent indicatrix");
    input_of(lift_cmd);
    lift_cmd->add_option("--base", base_text, "First vertex as x,y,z (default origin)");
    lift_cmd->add_flag("--preserve-simplicity", preserve, "Peel only good vertices");
    lift_cmd->callback([&] { run = [&] { return cmd_lift(o, base_text, preserve); }; });

    bool random_pick = false;
    auto* reduce = app.add_subcommand("reduce", "Delete good nonessential vertices down to a quadruple");
    input_of(reduce);
    reduce->add_flag("--random", random_pick, "Pick among eligible vertices at random (uses --seed)");
    reduce->callback([&] { run = [&] { return cmd_reduce(o, random_pick); }; });

    auto* area = app.add_subcommand("area", "Areas of the two regions of a simple spherical polygon");
    input_of(area);
    area->callback([&] { run = [&] { return cmd_area(o); }; });

    auto* tennis = app.add_subcommand("tennis-ball", "Equal-area check and inflection count");
    input_of(tennis);
    tennis->callback([&] { run = [&] { return cmd_tennis_ball(o); }; });

    auto* mobius = app.add_subcommand("mobius", "Inflections of a centrally symmetric polygon");
    input_of(mobius);
    mobius->callback([&] { run = [&] { return cmd_mobius(o); }; });

    double magnitude = 1e-6;
    int retries = 64;
    auto* perturb = app.add_subcommand("perturb", "Nudge a polygon into general position");
    input_of(perturb);
    perturb->add_option("--magnitude", magnitude, "Largest move per vertex (rad)")->capture_default_str();
    perturb->add_option("--retries", retries, "Attempts before giving up")->capture_default_str();
    perturb->callback([&] { run = [&] { return cmd_perturb(o, magnitude, retries); }; });

    CertifyArgs cargs;
    auto* certify = app.add_subcommand("certify", "Randomized certification of every claim");
    certify->add_option("--trials", cargs.trials, "Trials per claim")->capture_default_str();
    certify->add_option("--n-min", cargs.n_min, "Smallest vertex count")->capture_default_str();
    certify->add_option("--n-max", cargs.n_max, "Largest vertex count")->capture_default_str();
    certify->add_option("--attempts", cargs.attempts, "Generator attempts per instance")->capture_default_str();
    certify->add_option("--mode", cargs.mode,
                        "spherical_simple_balanced | space_generic_segre | centrally_symmetric | "
                        "adversarial_near_degenerate")
        ->capture_default_str();
    certify->add_option("--findings", cargs.findings, "Findings directory (empty: none)")->capture_default_str();
    certify->add_option("--replay", cargs.replay, "Re-run one findings file");
    certify->callback([&] { run = [&] { return cmd_certify(o, cargs); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(Exit::InvalidInput);
    }

    mutation::Mutant mutant = mutation::Mutant::None;
    if (mutant_name != "none" && !mutation::parse(mutant_name, mutant)) {
        std::cerr << "error: unknown mutant '" << mutant_name << "'\n";
        return static_cast<int>(Exit::InvalidInput);
    }
    mutation::ScopedMutant scoped(mutant);

    try {
        return emit(run(), o);
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e);
    }
}
