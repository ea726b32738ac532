#include "levyarc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "levyarc/errors.hpp"

namespace levyarc {
namespace {

// Kronrod abscissae/weights for the 21-point rule; odd indices are the
// 10-point Gauss nodes.
constexpr double kXgk[11] = {0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
                             0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
                             0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
                             0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
                             0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
                             0.0};
constexpr double kWgk[11] = {0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
                             0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
                             0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
                             0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
                             0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
                             0.149445554002916905664936468389821};
constexpr double kWg[5] = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                           0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                           0.295524224714752870173892994651338};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    int depth;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const ScalarFn& f, double a, double b, int depth) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double resg = 0.0;
    double resk = kWgk[10] * fc;
    double resabs = std::abs(resk);
    double fv1[10];
    double fv2[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double scale = std::abs(half);
    resk *= half;
    resg *= half;
    resabs *= scale;
    resasc *= scale;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double err = std::abs(resk - resg);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return Segment{a, b, resk, err, depth};
}

QuadResult adaptive_finite(const ScalarFn& f, double a, double b, const QuadOptions& opts) {
    QuadResult out;
    std::priority_queue<Segment> work;
    std::vector<Segment> frozen;
    Segment first = gk21(f, a, b, 0);
    out.evaluations = 21;
    double total = first.value;
    double total_err = first.error;
    work.push(first);

    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

    int intervals = 1;
    while (!work.empty() && total_err > target()) {
        Segment worst = work.top();
        work.pop();
        if (worst.depth >= opts.max_depth || intervals >= opts.max_intervals) {
            frozen.push_back(worst);
            // Remaining refinable error cannot close the gap alone.
            double frozen_err = 0.0;
            for (const auto& s : frozen) frozen_err += s.error;
            if (frozen_err > target() || intervals >= opts.max_intervals) {
                std::ostringstream msg;
                msg << "adaptive quadrature on (" << a << ", " << b << ") did not converge: estimate " << total
                    << " +/- " << total_err << " after " << intervals << " subintervals";
                throw QuadratureNonConvergence(msg.str(), total, total_err);
            }
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk21(f, worst.a, mid, worst.depth + 1);
        Segment right = gk21(f, mid, worst.b, worst.depth + 1);
        out.evaluations += 42;
        ++intervals;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
    }
    if (total_err > target()) {
        std::ostringstream msg;
        msg << "adaptive quadrature on (" << a << ", " << b << ") exhausted refinement: estimate " << total
            << " +/- " << total_err;
        throw QuadratureNonConvergence(msg.str(), total, total_err);
    }

    // Re-sum to shed accumulated cancellation from the running updates.
    double sum = 0.0;
    double err = 0.0;
    for (const auto& s : frozen) {
        sum += s.value;
        err += s.error;
    }
    while (!work.empty()) {
        sum += work.top().value;
        err += work.top().error;
        work.pop();
    }
    if (!std::isfinite(sum)) {
        std::ostringstream msg;
        msg << "non-finite integrand on (" << a << ", " << b << ")";
        throw QuadratureNonConvergence(msg.str(), sum, kInf);
    }
    out.value = sum;
    out.error = err;
    return out;
}

}  // namespace

QuadResult integrate_gk(const ScalarFn& f, double a, double b, const QuadOptions& opts) {
    if (a == b) return {};
    if (a > b) {
        QuadResult r = integrate_gk(f, b, a, opts);
        r.value = -r.value;
        return r;
    }
    if (std::isinf(a)) throw std::invalid_argument("integrate_gk: lower limit must be finite");
    if (std::isinf(b)) {
        // x = a + t / (1 - t), t in (0, 1)
        auto g = [&](double t) {
            const double s = 1.0 - t;
            const double v = f(a + t / s);
            return v == 0.0 ? 0.0 : v / (s * s);
        };
        return adaptive_finite(g, 0.0, 1.0, opts);
    }
    return adaptive_finite(f, a, b, opts);
}

QuadResult integrate_pieces(const ScalarFn& f, double a, double b, std::span<const double> breaks,
                            const QuadOptions& opts) {
    QuadResult total;
    if (!(b > a)) return total;
    std::vector<double> pts{a};
    for (double p : breaks)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::size_t pieces = pts.size() - 1;
    QuadOptions sub = opts;
    sub.abs_tol = opts.abs_tol / static_cast<double>(2 * pieces);

    for (std::size_t i = 0; i < pieces; ++i) {
        const double p = pts[i];
        const double q = pts[i + 1];
        if (std::isinf(q)) {
            auto g = [&](double w) { return 2.0 * w * f(p + w * w); };
            QuadResult r = integrate_gk(g, 0.0, kInf, sub);
            total.value += r.value;
            total.error += r.error;
            total.evaluations += r.evaluations;
            continue;
        }
        const double m = 0.5 * (p + q);
        auto left = [&](double w) { return 2.0 * w * f(p + w * w); };
        auto right = [&](double w) { return 2.0 * w * f(q - w * w); };
        QuadResult rl = integrate_gk(left, 0.0, std::sqrt(m - p), sub);
        QuadResult rr = integrate_gk(right, 0.0, std::sqrt(q - m), sub);
        total.value += rl.value + rr.value;
        total.error += rl.error + rr.error;
        total.evaluations += rl.evaluations + rr.evaluations;
    }
    return total;
}

std::vector<double> geometric_grid_n(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi >= lo) || points < 1) throw std::invalid_argument("geometric_grid: need 0 < lo <= hi");
    std::vector<double> g(static_cast<std::size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> geometric_grid(double lo, double hi, int per_decade) {
    const int n = static_cast<int>(std::lround(std::log10(hi / lo) * per_decade)) + 1;
    return geometric_grid_n(lo, hi, std::max(n, 2));
}

}  // namespace levyarc
