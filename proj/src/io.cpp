#include "levyarc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "levyarc/errors.hpp"

namespace levyarc::io {
namespace {

json number(double x) { return std::isinf(x) && x > 0.0 ? json(nullptr) : json(x); }

double as_number(const json& j) {
    if (j.is_null()) return kInf;
    if (!j.is_number()) throw MalformedMeasure("expected a number, got " + j.dump());
    return j.get<double>();
}

std::vector<double> as_vector(const json& j, const char* what) {
    if (!j.is_array()) throw MalformedMeasure(std::string(what) + " must be an array");
    std::vector<double> v;
    for (const auto& x : j) v.push_back(as_number(x));
    return v;
}

json support_json(Interval s) { return json::array({s.lo, number(s.hi)}); }

json table_json(const TableDensity& t) {
    return {{"kind", "table"},
            {"r", t.abscissae()},
            {"f", t.ordinates()},
            {"interp", t.interp() == TableInterp::linear ? "linear" : "loglog_cubic"},
            {"extend_low", t.extends_low()}};
}

template <class Fn>
auto wrap(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw MalformedMeasure(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

// ---------------------------------------------------------------- densities

std::string provenance(const Density& f) {
    std::ostringstream os;
    if (const auto* t = dynamic_cast<const TransformedDensity*>(&f)) {
        os << t->kind() << "(";
        const RadialComponent& src = t->source();
        if (!src.atoms.empty()) os << "atoms[" << src.atoms.size() << "]";
        if (!src.atoms.empty() && src.density) os << "+";
        if (src.density) os << provenance(*src.density);
        os << ")";
    } else if (const auto* p = dynamic_cast<const PowerImageDensity*>(&f)) {
        os << (p->power() == Power::square ? "pow2(" : "powhalf(") << provenance(*p->source()) << ")";
    } else if (const auto* e = dynamic_cast<const ExpPowerDensity*>(&f)) {
        os << "exp_power(" << e->c() << "," << e->a() << "," << e->b() << "," << e->p() << ")";
    } else if (const auto* a = dynamic_cast<const ArcsineDensity*>(&f)) {
        os << "arcsine_tail(" << a->scale() << ")";
    } else {
        os << f.kind();
    }
    return os.str();
}

json density_to_json(const Density& f) {
    if (const auto* e = dynamic_cast<const ExpPowerDensity*>(&f))
        return {{"kind", "exp_power"}, {"c", e->c()}, {"a", e->a()}, {"b", e->b()}, {"p", e->p()},
                {"support", support_json(e->support())}};
    if (const auto* a = dynamic_cast<const ArcsineDensity*>(&f))
        return {{"kind", "arcsine_tail"}, {"s", a->scale()}, {"mass", a->mass()}};
    if (const auto* t = dynamic_cast<const TableDensity*>(&f)) return table_json(*t);

    DensityPtr table;
    if (const auto* t = dynamic_cast<const TransformedDensity*>(&f)) table = t->tabulated();
    else table = tabulate(f);
    json j = table_json(dynamic_cast<const TableDensity&>(*table));
    j["provenance"] = provenance(f);
    return j;
}

DensityPtr density_from_json(const json& j) {
    return wrap([&]() -> DensityPtr {
        if (!j.is_object()) throw MalformedMeasure("density must be an object");
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "exp_power") {
            Interval s;
            if (j.contains("support")) {
                const auto v = as_vector(j.at("support"), "support");
                if (v.size() != 2) throw MalformedMeasure("support must be [lo, hi]");
                s = {v[0], v[1]};
            }
            return std::make_shared<ExpPowerDensity>(as_number(j.at("c")), as_number(j.at("a")), as_number(j.at("b")),
                                                     as_number(j.at("p")), s);
        }
        if (kind == "arcsine_tail" || kind == "arcsine")
            return std::make_shared<ArcsineDensity>(as_number(j.at("s")), j.contains("mass") ? as_number(j.at("mass")) : 1.0);
        if (kind == "table") {
            const std::string interp = j.value("interp", std::string("linear"));
            if (interp != "linear" && interp != "loglog_cubic") throw MalformedMeasure("table interp must be linear or loglog_cubic");
            return std::make_shared<TableDensity>(as_vector(j.at("r"), "r"), as_vector(j.at("f"), "f"),
                                                  interp == "linear" ? TableInterp::linear : TableInterp::loglog_cubic,
                                                  j.value("extend_low", true));
        }
        throw MalformedMeasure("unknown density kind '" + kind + "'");
    });
}

// ---------------------------------------------------------------- measures

PolarMeasure measure_from_json(const json& j) {
    return wrap([&] {
        if (!j.is_object()) throw MalformedMeasure("measure must be a JSON object");
        const long d = j.at("d").get<long>();
        if (d < 1) throw MalformedMeasure("d must be >= 1");
        std::vector<PolarComponent> comps;
        if (j.contains("components")) {
            for (const auto& c : j.at("components")) {
                RadialComponent rc;
                rc.weight = c.contains("weight") ? as_number(c.at("weight")) : 1.0;
                if (c.contains("atoms"))
                    for (const auto& a : c.at("atoms")) {
                        const auto v = as_vector(a, "atom");
                        if (v.size() != 2) throw MalformedMeasure("atoms are [r, mass] pairs");
                        rc.atoms.push_back({v[0], v[1]});
                    }
                if (c.contains("density") && !c.at("density").is_null()) rc.density = density_from_json(c.at("density"));
                comps.push_back({Direction(as_vector(c.at("direction"), "direction")), std::move(rc)});
            }
        }
        return PolarMeasure(static_cast<std::size_t>(d), std::move(comps));
    });
}

json measure_to_json(const PolarMeasure& m) {
    json comps = json::array();
    for (const auto& c : m.components()) {
        json atoms = json::array();
        for (const Atom& a : c.radial.atoms) atoms.push_back({a.r, a.mass});
        comps.push_back({{"direction", c.direction.coords()},
                         {"weight", c.radial.weight},
                         {"atoms", atoms},
                         {"density", c.radial.density ? density_to_json(*c.radial.density) : json(nullptr)}});
    }
    return {{"d", m.dim()}, {"components", comps}};
}

// ---------------------------------------------------------------- triplets

Triplet triplet_from_json(const json& j) {
    return wrap([&] {
        PolarMeasure nu = measure_from_json(j.at("nu"));
        const auto d = static_cast<Eigen::Index>(nu.dim());
        Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(d, d);
        if (j.contains("Sigma")) {
            const auto& rows = j.at("Sigma");
            if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) throw MalformedMeasure("Sigma must be d x d");
            for (Eigen::Index i = 0; i < d; ++i) {
                const auto row = as_vector(rows[static_cast<std::size_t>(i)], "Sigma row");
                if (static_cast<Eigen::Index>(row.size()) != d) throw MalformedMeasure("Sigma must be d x d");
                for (Eigen::Index k = 0; k < d; ++k) sigma(i, k) = row[static_cast<std::size_t>(k)];
            }
        }
        Eigen::VectorXd gamma = Eigen::VectorXd::Zero(d);
        if (j.contains("gamma")) {
            const auto g = as_vector(j.at("gamma"), "gamma");
            if (static_cast<Eigen::Index>(g.size()) != d) throw MalformedMeasure("gamma must have length d");
            for (Eigen::Index i = 0; i < d; ++i) gamma[i] = g[static_cast<std::size_t>(i)];
        }
        return Triplet(std::move(sigma), std::move(nu), std::move(gamma));
    });
}

json triplet_to_json(const Triplet& t) {
    json sigma = json::array();
    for (Eigen::Index i = 0; i < t.Sigma.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < t.Sigma.cols(); ++k) row.push_back(t.Sigma(i, k));
        sigma.push_back(row);
    }
    std::vector<double> gamma(t.gamma.data(), t.gamma.data() + t.gamma.size());
    json j = {{"Sigma", sigma}, {"nu", measure_to_json(t.nu)}, {"gamma", gamma}};
    if (t.gamma_error > 0.0) j["gamma_error"] = t.gamma_error;
    return j;
}

// ---------------------------------------------------------------- reports

json report_to_json(const MembershipReport& r) {
    json j = {{"verdict", to_string(r.verdict)}, {"witness", nullptr}, {"checked_order", r.checked_order}};
    if (r.witness)
        j["witness"] = {{"location", r.witness->location},
                        {"order", r.witness->order},
                        {"component", r.witness->component},
                        {"detail", r.witness->detail}};
    j["unchecked"] = r.unchecked;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json validation_to_json(const ValidationReport& r) {
    json comps = json::array();
    for (const auto& c : r.components)
        comps.push_back({{"index", c.index}, {"near_zero_ok", c.near_zero_ok}, {"at_infinity_ok", c.at_infinity_ok},
                         {"detail", c.detail}});
    return {{"level", r.level == LevyLevel::levy ? "levy" : "levy_l1"}, {"pass", r.pass}, {"components", comps}};
}

json sim_config_to_json(const SimConfig& c) {
    return {{"paths", c.paths},
            {"time_steps", c.time_steps},
            {"eps", c.eps},
            {"seed", c.seed},
            {"compensate_small_jumps", c.compensate_small_jumps}};
}

// ---------------------------------------------------------------- files

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedMeasure(path + ": " + e.what());
    }
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt(row[i]);
        os << "\n";
    }
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    write_csv(out, header, rows);
}

void write_sample_set(const std::string& csv_path, const std::string& sidecar_path, const SampleSet& s) {
    std::vector<std::string> header;
    for (std::size_t i = 0; i < s.dim; ++i) header.push_back("x" + std::to_string(i + 1));
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(s.draws.rows()));
    for (Eigen::Index k = 0; k < s.draws.rows(); ++k)
        for (Eigen::Index i = 0; i < s.draws.cols(); ++i) rows[static_cast<std::size_t>(k)].push_back(s.draws(k, i));
    write_csv(csv_path, header, rows);
    json side = sim_config_to_json(s.config);
    side["dim"] = s.dim;
    side["integrand"] = s.integrand;
    side["warnings"] = s.warnings;
    write_json(sidecar_path, side);
}

void write_char_fn(const std::string& path, const CharFnGrid& g) {
    std::vector<std::string> header;
    const std::size_t d = g.z.empty() ? 1 : static_cast<std::size_t>(g.z.front().size());
    for (std::size_t i = 0; i < d; ++i) header.push_back("z" + std::to_string(i + 1));
    header.push_back("re");
    header.push_back("im");
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < g.z.size(); ++k) {
        std::vector<double> row(g.z[k].data(), g.z[k].data() + g.z[k].size());
        row.push_back(g.values[k].real());
        row.push_back(g.values[k].imag());
        rows.push_back(std::move(row));
    }
    write_csv(path, header, rows);
}

void write_tails(const std::string& path, const InversionResult& r) {
    std::vector<std::string> header = {"u"};
    for (std::size_t c = 0; c < r.tails.size(); ++c) header.push_back("tail_" + std::to_string(c));
    std::vector<std::vector<double>> rows;
    if (!r.tails.empty()) {
        for (std::size_t i = 0; i < r.tails.front().u.size(); ++i) {
            std::vector<double> row = {r.tails.front().u[i]};
            for (const auto& t : r.tails) row.push_back(t.tail[i]);
            rows.push_back(std::move(row));
        }
    }
    write_csv(path, header, rows);
}

}  // namespace levyarc::io
