// levyarc: batch front end for transforms, inversion, class checks, sampling
// and the end-to-end verification suite.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "levyarc/acceptance.hpp"
#include "levyarc/classes.hpp"
#include "levyarc/errors.hpp"
#include "levyarc/fixtures.hpp"
#include "levyarc/io.hpp"
#include "levyarc/mappings.hpp"
#include "levyarc/simulate.hpp"
#include "levyarc/transforms.hpp"

namespace fs = std::filesystem;
using namespace levyarc;
using io::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kDomain = 3, kQuadrature = 4 };

struct Grid {
    double lo = 0.0, hi = 0.0;
    std::size_t points = 0;
    bool set = false;
};

Grid parse_grid(const std::string& s) {
    Grid g;
    if (s.empty()) return g;
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    try {
        if (parts.size() != 3) throw std::invalid_argument(s);
        g.lo = std::stod(parts[0]);
        g.hi = std::stod(parts[1]);
        g.points = static_cast<std::size_t>(std::stoul(parts[2]));
    } catch (const std::exception&) {
        throw ConfigError("--grid expects LO:HI:PTS, got '" + s + "'");
    }
    if (!(g.hi > g.lo) || g.points < 2) throw ConfigError("--grid needs LO < HI and PTS >= 2");
    g.set = true;
    return g;
}

std::vector<double> positive_grid(const Grid& g, double lo, double hi, std::size_t points) {
    if (!g.set) return geometric_grid_n(lo, hi, static_cast<int>(points));
    if (!(g.lo > 0.0)) throw ConfigError("this grid is geometric: LO must be positive");
    return geometric_grid_n(g.lo, g.hi, static_cast<int>(g.points));
}

fs::path out_dir(const std::string& dir) {
    fs::path p = dir.empty() ? fs::path(".") : fs::path(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw ConfigError("cannot create output directory " + p.string());
    return p;
}

int report_error(const char* kind, const std::string& message, int code, const json& extra = json::object()) {
    json j = {{"error", kind}, {"message", message}, {"exit_code", code}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::cerr << j.dump() << "\n";
    return code;
}

// ---------------------------------------------------------------- verbs

struct Options {
    std::string in, out = ".", chain, grid, integrand = "identity", classes = "jurek,class_a,class_b,type_g";
    std::string check;
    std::uint64_t seed = 20240601;
    std::size_t paths = 100000, steps = 2000;
    double eps = 1e-3;
    double tol = -1.0;
    bool no_compensate = false;
};

int do_transform(const Options& o) {
    const PolarMeasure m = io::measure_from_json(io::read_json(o.in));
    const PolarMeasure out = apply_chain(m, o.chain);
    const fs::path dir = out_dir(o.out);
    json j = io::measure_to_json(out);
    j["chain"] = o.chain;
    io::write_json((dir / "measure.json").string(), j);

    const std::vector<double> r = positive_grid(parse_grid(o.grid), 1e-3, 10.0, 200);
    std::vector<std::string> header = {"r"};
    for (std::size_t c = 0; c < out.components().size(); ++c) header.push_back("density_" + std::to_string(c));
    std::vector<std::vector<double>> rows;
    for (double x : r) {
        std::vector<double> row = {x};
        for (const auto& c : out.components()) row.push_back(c.radial.density ? (*c.radial.density)(x) : 0.0);
        rows.push_back(std::move(row));
    }
    io::write_csv((dir / "density.csv").string(), header, rows);
    std::cout << "wrote " << (dir / "measure.json").string() << " and " << (dir / "density.csv").string() << "\n";
    return kOk;
}

int do_invert(const Options& o) {
    const PolarMeasure m = io::measure_from_json(io::read_json(o.in));
    const Grid g = parse_grid(o.grid);
    const std::vector<double> u = g.set ? positive_grid(g, 0, 0, 0) : default_inversion_grid();
    const InversionResult r = invert_arcsine1(m, u, kernel_quad(), o.tol > 0.0 ? o.tol : kNotInRangeTolerance);
    const fs::path dir = out_dir(o.out);
    io::write_tails((dir / "tails.csv").string(), r);
    std::cout << "wrote " << (dir / "tails.csv").string() << "\n";
    return kOk;
}

int do_classify(const Options& o) {
    const PolarMeasure m = io::measure_from_json(io::read_json(o.in));
    const Grid g = parse_grid(o.grid);
    const std::vector<double> grid = g.set ? positive_grid(g, 0, 0, 0) : default_class_grid();
    json j = json::object();
    std::stringstream ss(o.classes);
    for (std::string c; std::getline(ss, c, ',');) {
        MembershipReport r;
        if (c == "jurek") r = is_jurek(m, grid);
        else if (c == "class_a") r = class_a_necessary(m, grid);
        else if (c == "class_b") r = is_class_b(m, grid);
        else if (c == "type_g") r = is_type_g(m, grid);
        else throw ConfigError("unknown class '" + c + "' (jurek, class_a, class_b, type_g)");
        j[c] = io::report_to_json(r);
        std::cout << c << ": " << to_string(r.verdict) << "\n";
    }
    j["levy"] = io::validation_to_json(validate(m, LevyLevel::levy));
    j["levy_l1"] = io::validation_to_json(validate(m, LevyLevel::levy_l1));
    const fs::path dir = out_dir(o.out);
    io::write_json((dir / "classify.json").string(), j);
    return kOk;
}

int do_sample(const Options& o) {
    const Triplet t = io::triplet_from_json(io::read_json(o.in));
    SimConfig cfg;
    cfg.paths = o.paths;
    cfg.time_steps = o.steps;
    cfg.eps = o.eps;
    cfg.seed = o.seed;
    cfg.compensate_small_jumps = !o.no_compensate;

    SampleSet s;
    Triplet target = t;
    if (o.integrand == "identity") {
        s = sample_id(t, cfg);
    } else {
        const IntegrandSpec f(integrand_from_string(o.integrand));
        s = sample_integral(t, f, cfg);
        target = transform_triplet(t, f);
    }
    const Grid g = parse_grid(o.grid);
    const auto z = g.set ? line_grid(t.dim(), g.lo, g.hi, g.points) : line_grid(t.dim(), -5.0, 5.0, 21);
    const CharFnGrid ecf = empirical_cf(s, z);
    const CharFnGrid cf = char_fn_grid(target, z);

    const fs::path dir = out_dir(o.out);
    io::write_sample_set((dir / "samples.csv").string(), (dir / "samples.json").string(), s);
    io::write_char_fn((dir / "ecf.csv").string(), ecf);
    io::write_char_fn((dir / "cf.csv").string(), cf);
    for (const auto& w : s.warnings) std::cerr << json{{"warning", w}}.dump() << "\n";
    std::cout << "cf_distance " << io::fmt(cf_distance(ecf, cf)) << "\n";
    return kOk;
}

int do_verify(const Options& o) {
    CheckOptions co;
    co.paths = o.paths;
    co.time_steps = o.steps;
    co.eps = o.eps;
    co.seed = o.seed;
    if (o.tol > 0.0) co.tolerance = o.tol;
    std::vector<std::string> names = o.check == "all" ? check_names() : std::vector<std::string>{o.check};
    bool all = true;
    for (const auto& n : names) {
        const CheckResult r = run_check(n, co);
        for (const auto& d : r.details) std::cout << "  " << d << "\n";
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.title << " (error " << io::fmt(r.measured)
                  << ", tolerance " << io::fmt(r.tolerance) << ", " << r.seconds << " s)\n";
        all = all && r.pass;
    }
    return all ? kOk : kFailed;
}

int do_fixtures(const Options& o) {
    const fs::path dir = out_dir(o.out);
    const std::vector<double> r = positive_grid(parse_grid(o.grid), 0.1, 5.0, 50);
    json catalog = json::array();
    for (const Fixture& f : fixture_catalog()) {
        catalog.push_back({{"name", f.name},
                           {"description", f.description},
                           {"transform", f.transform},
                           {"closed_form", f.closed_form_id},
                           {"input", io::measure_to_json(f.input)}});
        const PolarMeasure out = f.apply(f.input);
        const Density& d = *out.components().front().radial.density;
        std::vector<std::vector<double>> rows;
        for (double x : r) rows.push_back({x, d(x), f.closed_form(x)});
        io::write_csv((dir / ("fixture_" + f.name + ".csv")).string(), {"r", "transformed", "closed_form"}, rows);
    }
    io::write_json((dir / "fixtures.json").string(), catalog);
    std::cout << "wrote " << catalog.size() << " fixtures to " << dir.string() << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"levyarc: arcsine and Upsilon transforms of Levy measures"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_sim = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "RNG seed");
        c->add_option("--paths", o.paths, "Monte Carlo paths")->check(CLI::PositiveNumber);
        c->add_option("--steps", o.steps, "time steps")->check(CLI::PositiveNumber);
        c->add_option("--eps", o.eps, "small-jump cut")->check(CLI::PositiveNumber);
    };

    auto* transform = app.add_subcommand("transform", "apply a transform chain to a measure");
    transform->add_option("--in", o.in, "measure JSON")->required();
    transform->add_option("--chain", o.chain, "comma-separated: a1,a2,ups0,ups:ALPHA:BETA,pow2,powhalf")->required();
    transform->add_option("--out", o.out, "output directory");
    transform->add_option("--grid", o.grid, "density table grid LO:HI:PTS (geometric)");

    auto* invert = app.add_subcommand("invert", "recover source tails from an arcsine1 image");
    invert->add_option("--in", o.in, "measure JSON")->required();
    invert->add_option("--out", o.out, "output directory");
    invert->add_option("--grid", o.grid, "tail grid LO:HI:PTS (geometric)");
    invert->add_option("--tol", o.tol, "allowed tail increase relative to the largest tail");

    auto* classify = app.add_subcommand("classify", "class membership screens");
    classify->add_option("--in", o.in, "measure JSON")->required();
    classify->add_option("--out", o.out, "output directory");
    classify->add_option("--classes", o.classes, "comma-separated: jurek,class_a,class_b,type_g");
    classify->add_option("--grid", o.grid, "test grid LO:HI:PTS (geometric)");

    auto* sample = app.add_subcommand("sample", "Monte Carlo draws of X_1 or of int f dX");
    sample->add_option("--in", o.in, "triplet JSON")->required();
    sample->add_option("--out", o.out, "output directory");
    sample->add_option("--integrand", o.integrand, "identity, cos_pi_half, log_sqrt, log, gauss_tail_inverse");
    sample->add_option("--grid", o.grid, "z grid LO:HI:PTS (linear)");
    sample->add_flag("--no-compensate", o.no_compensate, "drop the small-jump Gaussian");
    add_sim(sample);

    auto* verify = app.add_subcommand("verify", "run a named end-to-end check");
    std::string names = "all";
    for (const auto& n : check_names()) names += ", " + n;
    verify->add_option("check", o.check, names)->required();
    verify->add_option("--tol", o.tol, "override the check tolerance");
    add_sim(verify);

    auto* fixtures = app.add_subcommand("fixtures", "dump the fixture catalog");
    fixtures->add_option("--out", o.out, "output directory");
    fixtures->add_option("--grid", o.grid, "evaluation grid LO:HI:PTS (geometric)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("UsageError", e.what(), kUsage);
    }

    try {
        if (*transform) return do_transform(o);
        if (*invert) return do_invert(o);
        if (*classify) return do_classify(o);
        if (*sample) return do_sample(o);
        if (*verify) return do_verify(o);
        if (*fixtures) return do_fixtures(o);
    } catch (const NotInRange& e) {
        return report_error(e.kind(), e.what(), kDomain, {{"location", e.location()}});
    } catch (const DomainError& e) {
        return report_error(e.kind(), e.what(), kDomain);
    } catch (const RangeError& e) {
        return report_error(e.kind(), e.what(), kDomain);
    } catch (const QuadratureNonConvergence& e) {
        return report_error(e.kind(), e.what(), kQuadrature,
                            {{"partial_value", e.partial_value()}, {"error_bound", e.error_bound()}});
    } catch (const Error& e) {
        return report_error(e.kind(), e.what(), kUsage);
    } catch (const std::exception& e) {
        return report_error("InternalError", e.what(), kFailed);
    }
    return kUsage;
}
