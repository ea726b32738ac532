#include "levyarc/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "levyarc/errors.hpp"
#include "levyarc/parallel.hpp"
#include "levyarc/random.hpp"

namespace levyarc {
namespace {

QuadOptions sim_quad() {
    QuadOptions q;
    q.abs_tol = 1e-13;
    q.rel_tol = 1e-11;
    return q;
}

// Inverse-tail sampler for one density restricted to [eps, inf).
class TailSampler {
public:
    TailSampler() = default;
    TailSampler(const Density& f, double eps) {
        const Interval s = f.support();
        const double lo = std::max(eps, s.lo);
        if (!(s.hi > lo)) return;
        const QuadOptions q = sim_quad();
        const auto mass = [&](double a, double b) {
            return integrate_density(f, [](double) { return 1.0; }, a, b, q).value;
        };
        const double total = mass(lo, s.hi);
        if (!(total > 0.0)) return;
        double hi = s.hi;
        if (std::isinf(hi)) {
            hi = std::max(1.0, 10.0 * lo);
            while (hi < 1e12 && mass(hi, kInf) > 1e-15 * total) hi *= 2.0;
        }
        grid_ = geometric_grid(lo, hi, 128);
        for (double b : f.breakpoints())
            if (b > lo && b < hi) grid_.push_back(b);
        std::sort(grid_.begin(), grid_.end());
        grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());

        const std::size_t n = grid_.size();
        std::vector<double> cell(n - 1);
        parallel_for(n - 1, [&](std::size_t i) { cell[i] = mass(grid_[i], grid_[i + 1]); });
        above_.assign(n, 0.0);
        for (std::size_t i = n - 1; i-- > 0;) above_[i] = above_[i + 1] + cell[i];
        slope_.assign(n - 1, kInf);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double fa = f(grid_[i]), fb = f(grid_[i + 1]);
            if (fa > 0.0 && fb > 0.0 && std::isfinite(fa) && std::isfinite(fb))
                slope_[i] = std::log(fb / fa) / std::log(grid_[i + 1] / grid_[i]);
        }
    }

    double mass() const { return above_.empty() ? 0.0 : above_.front(); }

    // Radius r with mass of (r, inf) equal to v * mass().
    double draw(double v) const {
        const double target = v * above_.front();
        // above_ is decreasing: first index whose tail drops below target
        const auto it = std::lower_bound(above_.begin(), above_.end(), target, std::greater<double>());
        std::size_t j = static_cast<std::size_t>(it - above_.begin());
        if (j == 0) return grid_.front();
        if (j >= above_.size()) j = above_.size() - 1;
        const std::size_t i = j - 1;
        const double a = grid_[i], b = grid_[j];
        const double m = above_[i] - above_[j];
        const double q = m > 0.0 ? std::clamp((target - above_[j]) / m, 0.0, 1.0) : 0.5;
        // density ~ x^s on the cell: solve int_r^b x^s dx = q int_a^b x^s dx
        const double s = slope_[i];
        if (!std::isfinite(s)) return b - q * (b - a);
        if (std::abs(s + 1.0) < 1e-9) return b * std::pow(a / b, q);
        const double e = s + 1.0;
        const double bb = std::pow(b, e), aa = std::pow(a, e);
        return std::pow(bb - q * (bb - aa), 1.0 / e);
    }

private:
    std::vector<double> grid_;
    std::vector<double> above_;
    std::vector<double> slope_;
};

struct Piece {
    std::size_t component;
    double atom_r;  // > 0 for an atom, 0 for a density sampler
    const TailSampler* sampler;
};

// Jump part of a triplet split at eps.
struct JumpModel {
    std::vector<TailSampler> samplers;
    std::vector<Piece> pieces;
    std::vector<double> cumulative;  // cumulative rates, last = total rate
    Eigen::VectorXd drift;           // gamma corrected for the eps split
    Eigen::MatrixXd small_cov;       // int_{|x| < eps} x x^T nu(dx)

    double rate() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
};

JumpModel build_model(const Triplet& t, double eps) {
    JumpModel jm;
    const auto d = static_cast<Eigen::Index>(t.dim());
    jm.drift = t.gamma;
    jm.small_cov = Eigen::MatrixXd::Zero(d, d);
    const QuadOptions q = sim_quad();

    jm.samplers.reserve(t.nu.components().size());
    for (std::size_t c = 0; c < t.nu.components().size(); ++c) {
        const auto& comp = t.nu.components()[c];
        const RadialComponent& rc = comp.radial;
        Eigen::VectorXd xi(d);
        for (Eigen::Index i = 0; i < d; ++i) xi[i] = comp.direction[static_cast<std::size_t>(i)];

        double small_drift = 0.0, large_centering = 0.0, small_second = 0.0;
        double rate = 0.0;
        for (const Atom& a : rc.atoms) {
            if (a.r < eps) {
                small_drift += a.mass * a.r * a.r * a.r / (1.0 + a.r * a.r);
                small_second += a.mass * a.r * a.r;
            } else {
                large_centering += a.mass * a.r / (1.0 + a.r * a.r);
                jm.pieces.push_back({c, a.r, nullptr});
                jm.cumulative.push_back(rc.weight * a.mass);
            }
        }
        jm.samplers.emplace_back();
        if (rc.density) {
            const Density& f = *rc.density;
            small_drift += integrate_density(f, [](double r) { return r * r * r / (1.0 + r * r); }, 0.0, eps, q).value;
            small_second += integrate_density(f, [](double r) { return r * r; }, 0.0, eps, q).value;
            large_centering += integrate_density(f, [](double r) { return r / (1.0 + r * r); }, eps, kInf, q).value;
            jm.samplers.back() = TailSampler(f, eps);
            rate = jm.samplers.back().mass();
            if (rate > 0.0) {
                jm.pieces.push_back({c, 0.0, nullptr});
                jm.cumulative.push_back(rc.weight * rate);
            }
        }
        jm.drift += rc.weight * (small_drift - large_centering) * xi;
        jm.small_cov += rc.weight * small_second * xi * xi.transpose();
    }
    // Samplers are stored by component; resolve pointers now the vector is stable.
    for (Piece& p : jm.pieces)
        if (p.atom_r == 0.0) p.sampler = &jm.samplers[p.component];
    for (std::size_t i = 1; i < jm.cumulative.size(); ++i) jm.cumulative[i] += jm.cumulative[i - 1];
    return jm;
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

// Shared sampler: sum_k c_k dX_k with cells of width dt on [0, T].
SampleSet run(const Triplet& t, const std::vector<double>& coeff, double T, const SimConfig& cfg,
              const std::string& label) {
    cfg.check();
    t.check();
    const auto d = static_cast<Eigen::Index>(t.dim());
    const JumpModel jm = build_model(t, cfg.eps);
    const double dt = T / static_cast<double>(coeff.size());
    double s1 = 0.0, s2 = 0.0;
    for (double c : coeff) {
        s1 += c * dt;
        s2 += c * c * dt;
    }

    SampleSet out;
    out.dim = t.dim();
    out.config = cfg;
    out.integrand = label;
    if (!t.nu.is_zero() && jm.rate() == 0.0) {
        std::ostringstream msg;
        msg << "eps = " << cfg.eps << " exceeds every jump: the jump part is "
            << (cfg.compensate_small_jumps ? "only the small-jump Gaussian" : "dropped");
        out.warnings.push_back(msg.str());
    }

    Eigen::MatrixXd cov = t.Sigma;
    if (cfg.compensate_small_jumps) cov += jm.small_cov;
    const Eigen::MatrixXd L = psd_sqrt(cov * s2);
    const Eigen::VectorXd mean = jm.drift * s1;
    const double jump_mean = jm.rate() * T;
    const bool gaussian = cov.cwiseAbs().maxCoeff() > 0.0;

    std::vector<Eigen::VectorXd> xi(t.nu.components().size());
    for (std::size_t c = 0; c < xi.size(); ++c) {
        xi[c].resize(d);
        for (Eigen::Index i = 0; i < d; ++i) xi[c][i] = t.nu.components()[c].direction[static_cast<std::size_t>(i)];
    }

    out.draws.resize(static_cast<Eigen::Index>(cfg.paths), d);
    parallel_for(cfg.paths, [&](std::size_t k) {
        Philox4x32 rng(cfg.seed, k);
        Eigen::VectorXd x = mean;
        if (gaussian) {
            std::normal_distribution<double> normal;
            Eigen::VectorXd z(d);
            for (Eigen::Index i = 0; i < d; ++i) z[i] = normal(rng);
            x += L * z;
        }
        if (jump_mean > 0.0) {
            std::poisson_distribution<long> count(jump_mean);
            const long n = count(rng);
            for (long j = 0; j < n; ++j) {
                const double when = rng.uniform();
                const std::size_t cell = std::min(coeff.size() - 1, static_cast<std::size_t>(when * static_cast<double>(coeff.size())));
                const double pick = rng.uniform() * jm.rate();
                std::size_t p = static_cast<std::size_t>(
                    std::upper_bound(jm.cumulative.begin(), jm.cumulative.end(), pick) - jm.cumulative.begin());
                p = std::min(p, jm.pieces.size() - 1);
                const Piece& piece = jm.pieces[p];
                const double r = piece.atom_r > 0.0 ? piece.atom_r : piece.sampler->draw(rng.uniform());
                x += coeff[cell] * r * xi[piece.component];
            }
        }
        out.draws.row(static_cast<Eigen::Index>(k)) = x.transpose();
    });
    return out;
}

}  // namespace

void SimConfig::check() const {
    if (paths < 1) throw ConfigError("paths must be >= 1");
    if (time_steps < 1) throw ConfigError("time_steps must be >= 1");
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ConfigError("eps must be positive");
}

std::vector<double> riemann_coefficients(const IntegrandSpec& f, std::size_t steps) {
    if (steps < 1) throw ConfigError("time_steps must be >= 1");
    const double dt = f.T() / static_cast<double>(steps);
    std::vector<double> c(steps);
    for (std::size_t k = 0; k < steps; ++k) c[k] = f((static_cast<double>(k) + 0.5) * dt);
    if (f.singular_at_zero()) c[0] = f.primitive(dt) / dt;
    return c;
}

SampleSet sample_id(const Triplet& t, const SimConfig& cfg) { return run(t, {1.0}, 1.0, cfg, "identity"); }

SampleSet sample_integral(const Triplet& t, const IntegrandSpec& f, const SimConfig& cfg) {
    cfg.check();
    return run(t, riemann_coefficients(f, cfg.time_steps), f.T(), cfg, to_string(f.name()));
}

CharFnGrid empirical_cf(const SampleSet& s, const std::vector<Eigen::VectorXd>& z) {
    if (s.draws.rows() == 0) throw ConfigError("empirical_cf needs at least one draw");
    CharFnGrid g{z, std::vector<std::complex<double>>(z.size())};
    const double n = static_cast<double>(s.draws.rows());
    parallel_for(z.size(), [&](std::size_t i) {
        if (z[i].size() != s.draws.cols()) throw GridMismatch("grid point has the wrong dimension");
        const Eigen::VectorXd phase = s.draws * z[i];
        double re = 0.0, im = 0.0;
        for (Eigen::Index k = 0; k < phase.size(); ++k) {
            re += std::cos(phase[k]);
            im += std::sin(phase[k]);
        }
        g.values[i] = {re / n, im / n};
    });
    return g;
}

double cf_distance(const CharFnGrid& a, const CharFnGrid& b) {
    if (a.z.size() != b.z.size() || a.values.size() != a.z.size() || b.values.size() != b.z.size())
        throw GridMismatch("characteristic-function grids have different sizes");
    double out = 0.0;
    for (std::size_t i = 0; i < a.z.size(); ++i) {
        if (a.z[i].size() != b.z[i].size() || (a.z[i] - b.z[i]).cwiseAbs().maxCoeff() > 1e-12)
            throw GridMismatch("characteristic-function grids have different points");
        out = std::max(out, std::abs(a.values[i] - b.values[i]));
    }
    return out;
}

}  // namespace levyarc
