// Python module: measures and triplets cross the boundary as JSON strings; the
// thin wrapper in levyarc/__init__.py converts from and to dicts.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levyarc/acceptance.hpp"
#include "levyarc/classes.hpp"
#include "levyarc/errors.hpp"
#include "levyarc/fixtures.hpp"
#include "levyarc/io.hpp"
#include "levyarc/mappings.hpp"
#include "levyarc/simulate.hpp"
#include "levyarc/special.hpp"
#include "levyarc/transforms.hpp"

namespace py = pybind11;
using namespace levyarc;
using io::json;

namespace {

PolarMeasure measure(const std::string& s) { return io::measure_from_json(json::parse(s)); }
Triplet triplet(const std::string& s) { return io::triplet_from_json(json::parse(s)); }

std::vector<std::vector<double>> densities(const PolarMeasure& m, const std::vector<double>& r) {
    std::vector<std::vector<double>> out;
    for (const auto& c : m.components()) {
        std::vector<double> row;
        row.reserve(r.size());
        for (double x : r) row.push_back(c.radial.density ? (*c.radial.density)(x) : 0.0);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Eigen::VectorXd> points(std::size_t dim, const std::vector<std::vector<double>>& z) {
    std::vector<Eigen::VectorXd> out;
    for (const auto& p : z) {
        if (p.size() != dim) throw DomainError("z points must have length d");
        out.push_back(Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size())));
    }
    return out;
}

special::ArcsineVariant variant(const std::string& v) {
    if (v == "symmetric") return special::ArcsineVariant::symmetric;
    if (v == "one_sided") return special::ArcsineVariant::one_sided;
    if (v == "squared") return special::ArcsineVariant::squared;
    throw ConfigError("arcsine variant must be symmetric, one_sided or squared");
}

SimConfig sim_config(std::size_t paths, std::size_t steps, double eps, std::uint64_t seed, bool compensate) {
    SimConfig c;
    c.paths = paths;
    c.time_steps = steps;
    c.eps = eps;
    c.seed = seed;
    c.compensate_small_jumps = compensate;
    return c;
}

}  // namespace

PYBIND11_MODULE(_levyarc, m) {
    m.doc() = "Arcsine and Upsilon transforms of Levy measures";

    auto base = py::register_exception<Error>(m, "LevyarcError", PyExc_RuntimeError);
    py::register_exception<MalformedMeasure>(m, "MalformedMeasure", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<NotInRange>(m, "NotInRange", base.ptr());
    py::register_exception<QuadratureNonConvergence>(m, "QuadratureNonConvergence", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<GridMismatch>(m, "GridMismatch", base.ptr());

    m.def("k0", &special::k0, py::arg("x"));
    m.def("k0_laplace", &special::k0_laplace, py::arg("s"));
    m.def(
        "arcsine_density",
        [](const std::string& v, double s, double x) { return special::arcsine_density({variant(v), s}, x); },
        py::arg("variant"), py::arg("s"), py::arg("x"));

    m.def(
        "transform",
        [](const std::string& in, const std::string& chain) {
            return io::measure_to_json(apply_chain(measure(in), chain)).dump();
        },
        py::arg("measure"), py::arg("chain"), "Apply a transform chain; returns measure JSON with tabulated densities.");
    m.def(
        "transform_density",
        [](const std::string& in, const std::string& chain, const std::vector<double>& r) {
            return densities(apply_chain(measure(in), chain), r);
        },
        py::arg("measure"), py::arg("chain"), py::arg("r"), "Densities of the transformed measure, one row per direction.");
    m.def(
        "density", [](const std::string& in, const std::vector<double>& r) { return densities(measure(in), r); },
        py::arg("measure"), py::arg("r"));
    m.def(
        "tail",
        [](const std::string& in, const std::vector<double>& u) {
            const PolarMeasure pm = measure(in);
            std::vector<std::vector<double>> out;
            for (const auto& c : pm.components()) {
                std::vector<double> row;
                for (double x : u) row.push_back(tail(c.radial, x));
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("measure"), py::arg("u"));
    m.def(
        "invert_arcsine1",
        [](const std::string& in, std::optional<std::vector<double>> grid, double tol) {
            const InversionResult r =
                invert_arcsine1(measure(in), grid ? *grid : default_inversion_grid(), kernel_quad(), tol);
            std::vector<std::vector<double>> tails;
            for (const auto& t : r.tails) tails.push_back(t.tail);
            return py::make_tuple(r.tails.empty() ? std::vector<double>{} : r.tails.front().u, tails);
        },
        py::arg("measure"), py::arg("grid") = py::none(), py::arg("tol") = kNotInRangeTolerance,
        "Recovered tails (u, [tail per direction]). Raises NotInRange outside the range of arcsine1.");
    m.def(
        "classify",
        [](const std::string& in, const std::string& cls) {
            const PolarMeasure pm = measure(in);
            MembershipReport r;
            if (cls == "jurek") r = is_jurek(pm);
            else if (cls == "class_a") r = class_a_necessary(pm);
            else if (cls == "class_b") r = is_class_b(pm);
            else if (cls == "type_g") r = is_type_g(pm);
            else throw ConfigError("unknown class '" + cls + "'");
            return io::report_to_json(r).dump();
        },
        py::arg("measure"), py::arg("cls"));

    m.def(
        "char_fn",
        [](const std::string& t, const std::vector<std::vector<double>>& z) {
            const Triplet tr = triplet(t);
            return char_fn_grid(tr, points(tr.dim(), z)).values;
        },
        py::arg("triplet"), py::arg("z"));
    m.def(
        "transform_triplet",
        [](const std::string& t, const std::string& f) {
            return io::triplet_to_json(transform_triplet(triplet(t), IntegrandSpec(integrand_from_string(f)))).dump();
        },
        py::arg("triplet"), py::arg("integrand"));
    m.def(
        "transformed_char_fn",
        [](const std::string& t, const std::string& f, const std::vector<std::vector<double>>& z) {
            const Triplet tr = transform_triplet(triplet(t), IntegrandSpec(integrand_from_string(f)));
            return char_fn_grid(tr, points(tr.dim(), z)).values;
        },
        py::arg("triplet"), py::arg("integrand"), py::arg("z"),
        "Characteristic function of int f dX without tabulating the transformed measure.");
    m.def(
        "sample",
        [](const std::string& t, const std::string& integrand, std::size_t paths, std::size_t steps, double eps,
           std::uint64_t seed, bool compensate) {
            const Triplet tr = triplet(t);
            const SimConfig cfg = sim_config(paths, steps, eps, seed, compensate);
            SampleSet s;
            {
                py::gil_scoped_release release;
                s = integrand == "identity" ? sample_id(tr, cfg)
                                            : sample_integral(tr, IntegrandSpec(integrand_from_string(integrand)), cfg);
            }
            return py::make_tuple(s.draws, s.warnings);
        },
        py::arg("triplet"), py::arg("integrand") = "identity", py::arg("paths") = 100000, py::arg("steps") = 2000,
        py::arg("eps") = 1e-3, py::arg("seed") = 20240601, py::arg("compensate") = true,
        "Draws (paths x d array) and warnings.");

    m.def("fixture_names", [] {
        std::vector<std::string> out;
        for (const auto& f : fixture_catalog()) out.push_back(f.name);
        return out;
    });
    m.def(
        "fixture_input", [](const std::string& name) { return io::measure_to_json(fixture(name).input).dump(); },
        py::arg("name"));

    m.def("check_names", &check_names);
    m.def(
        "run_check",
        [](const std::string& name, std::size_t paths, std::uint64_t seed) {
            CheckOptions o;
            o.paths = paths;
            o.seed = seed;
            CheckResult r;
            {
                py::gil_scoped_release release;
                r = run_check(name, o);
            }
            py::dict d;
            d["name"] = r.name;
            d["title"] = r.title;
            d["pass"] = r.pass;
            d["measured"] = r.measured;
            d["tolerance"] = r.tolerance;
            d["seconds"] = r.seconds;
            d["details"] = r.details;
            return d;
        },
        py::arg("name"), py::arg("paths") = 100000, py::arg("seed") = 20240601);
}
