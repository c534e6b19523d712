#include "pf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace pf::numerics {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half) and weights, with the
// embedded 7-point Gauss weights. Values from the QUADPACK dqk15 tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double lo;
    double hi;
    cplx value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod15(const std::function<cplx(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double halfwidth = 0.5 * (hi - lo);

    cplx fv[15];
    const cplx fc = f(center);
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = halfwidth * kXgk[j];
        fv[j] = f(center - dx);
        fv[14 - j] = f(center + dx);
    }

    cplx resk = kWgk[7] * fc;
    cplx resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const cplx sum = fv[j] + fv[14 - j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1)
            resg += kWg[j / 2] * sum;
    }

    const cplx reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));

    resasc *= halfwidth;
    resabs *= halfwidth;
    double err = std::abs(resk - resg) * halfwidth;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * resabs);

    return Panel{lo, hi, resk * halfwidth, err};
}

} // namespace

void Quadrature::validate() const {
    if (!(absolute_tolerance > 0.0) || !(relative_tolerance > 0.0))
        throw std::invalid_argument("quadrature tolerances must be > 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument("max_subdivisions must be >= 1");
}

IntegrationResult integrate(const std::function<cplx(double)>& f, double lo,
                            double hi, const Quadrature& q) {
    q.validate();
    if (!(lo < hi))
        throw std::invalid_argument("integration interval requires lo < hi");

    std::priority_queue<Panel> panels;
    panels.push(kronrod15(f, lo, hi));

    cplx total = panels.top().value;
    double total_err = panels.top().error;
    int splits = 0;

    auto tolerance = [&] {
        return std::max(q.absolute_tolerance,
                        q.relative_tolerance * std::abs(total));
    };

    while (total_err > tolerance()) {
        if (splits >= q.max_subdivisions)
            throw NonConvergent("adaptive integration exhausted " +
                                    std::to_string(q.max_subdivisions) +
                                    " subdivisions",
                                total.real(), total.imag(), total_err);
        Panel worst = panels.top();
        panels.pop();
        total -= worst.value;
        total_err -= worst.error;

        const double mid = 0.5 * (worst.lo + worst.hi);
        Panel left = kronrod15(f, worst.lo, mid);
        Panel right = kronrod15(f, mid, worst.hi);
        total += left.value + right.value;
        total_err += left.error + right.error;
        panels.push(left);
        panels.push(right);
        ++splits;
    }

    return IntegrationResult{total, total_err, splits};
}

double integrate_real(const std::function<double(double)>& f, double lo,
                      double hi, const Quadrature& q) {
    return integrate([&](double x) { return cplx(f(x), 0.0); }, lo, hi, q)
        .value.real();
}

double NascentDelta::operator()(double x) const {
    const double s = width_sigma;
    return std::exp(-0.5 * (x / s) * (x / s)) /
           (s * std::sqrt(2.0 * std::numbers::pi));
}

double finite_diff_2nd(const std::function<double(double)>& f, double t,
                       double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("finite difference step must be > 0");
    return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

double finite_diff_1st(const std::function<double(double)>& f, double t,
                       double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("finite difference step must be > 0");
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

double truncation_radius(const std::function<double(double)>& envelope,
                         double abs_tol, double r0) {
    const double cutoff = abs_tol / 100.0;
    double r = std::max(r0, 1e-6);
    const double r_cap = 1e12;
    while (std::abs(envelope(r)) >= cutoff || std::abs(envelope(-r)) >= cutoff) {
        r *= 2.0;
        if (r > r_cap)
            throw NonConvergent("integrand envelope does not decay below "
                                "truncation cutoff",
                                0.0, 0.0, cutoff);
    }
    // Bisect back toward the smallest radius that still clears the cutoff.
    double inner = r / 2.0;
    for (int i = 0; i < 30; ++i) {
        const double mid = 0.5 * (inner + r);
        if (std::abs(envelope(mid)) < cutoff && std::abs(envelope(-mid)) < cutoff)
            r = mid;
        else
            inner = mid;
    }
    return r;
}

double cosine_taper(double u, double extent, double fraction) {
    const double a = std::abs(u);
    if (a > extent)
        return 0.0;
    const double inner = extent * (1.0 - fraction);
    if (a <= inner || fraction <= 0.0)
        return 1.0;
    const double ramp = (a - inner) / (extent * fraction);
    const double c = std::cos(0.5 * std::numbers::pi * ramp);
    return c * c;
}

namespace {

template <typename T>
T simpson_impl(std::span<const double> grid, std::span<const T> values) {
    const std::size_t n = grid.size();
    if (n != values.size())
        throw std::invalid_argument("grid/value size mismatch");
    if (n < 2)
        throw std::invalid_argument("need at least two samples");

    const double h = grid[1] - grid[0];
    if (!(h > 0.0))
        throw std::invalid_argument("grid must be strictly increasing");
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double step = grid[i + 1] - grid[i];
        if (std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("grid must be uniform");
    }

    if (n == 2)
        return 0.5 * h * (values[0] + values[1]);

    std::size_t intervals = n - 1;
    T acc{};
    std::size_t simpson_end = intervals; // index of last point covered by 1/3 rule
    if (intervals % 2 != 0)
        simpson_end = intervals - 3; // leave three intervals for the 3/8 rule

    for (std::size_t i = 0; i + 2 <= simpson_end; i += 2)
        acc += (h / 3.0) * (values[i] + 4.0 * values[i + 1] + values[i + 2]);

    if (intervals % 2 != 0) {
        const std::size_t j = simpson_end;
        acc += (3.0 * h / 8.0) * (values[j] + 3.0 * values[j + 1] +
                                  3.0 * values[j + 2] + values[j + 3]);
    }
    return acc;
}

} // namespace

cplx simpson_sampled(std::span<const double> grid, std::span<const cplx> values) {
    return simpson_impl(grid, values);
}

double simpson_sampled(std::span<const double> grid,
                       std::span<const double> values) {
    return simpson_impl(grid, values);
}

DensityMoment density_first_moment(std::span<const double> grid,
                                   std::span<const cplx> amplitudes) {
    const std::size_t n = grid.size();
    if (n != amplitudes.size())
        throw std::invalid_argument("grid/amplitude size mismatch");
    std::vector<double> density(n), weighted(n);
    for (std::size_t i = 0; i < n; ++i) {
        density[i] = std::norm(amplitudes[i]);
        weighted[i] = grid[i] * density[i];
    }
    const double norm = simpson_sampled(grid, std::span<const double>(density));
    if (norm <= 0.0)
        return DensityMoment{0.0, norm};
    const double first =
        simpson_sampled(grid, std::span<const double>(weighted));
    return DensityMoment{first / norm, norm};
}

} // namespace pf::numerics
