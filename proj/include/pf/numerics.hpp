#ifndef PF_NUMERICS_HPP
#define PF_NUMERICS_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "pf/errors.hpp"

namespace pf::numerics {

using cplx = std::complex<double>;

/// Tolerances and budget for adaptive integration.
struct Quadrature {
    double absolute_tolerance = 1e-10;
    double relative_tolerance = 1e-8;
    int max_subdivisions = 2000;

    void validate() const;
};

struct IntegrationResult {
    cplx value;
    double error_bound;
    int subdivisions;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued function
/// over [lo, hi]. Stops when the summed error estimate drops below
/// max(abs_tol, rel_tol * |value|). Throws NonConvergent (carrying the best
/// estimate) if the subdivision budget runs out first.
IntegrationResult integrate(const std::function<cplx(double)>& f, double lo,
                            double hi, const Quadrature& q = {});

/// Real-valued convenience wrapper around integrate().
double integrate_real(const std::function<double(double)>& f, double lo,
                      double hi, const Quadrature& q = {});

/// Normalized peaked function converging weakly to the Dirac delta as the
/// width parameter goes to zero.
struct NascentDelta {
    enum class Kind { gaussian };

    double width_sigma;
    Kind kind = Kind::gaussian;

    double operator()(double x) const;
};

/// Central second difference (f(t+h) - 2 f(t) + f(t-h)) / h^2.
double finite_diff_2nd(const std::function<double(double)>& f, double t,
                       double h);

/// Central first difference (f(t+h) - f(t-h)) / (2 h).
double finite_diff_1st(const std::function<double(double)>& f, double t,
                       double h);

/// Radius R such that |envelope| < abs_tol/100 outside [-R, R]. Geometric
/// scan from r0, refined by bisection. Used to truncate improper integrals.
double truncation_radius(const std::function<double(double)>& envelope,
                         double abs_tol, double r0 = 1.0);

/// Smooth window: 1 on the inner (1 - fraction) of [-extent, extent],
/// cos^2 roll-off over the outer fraction, 0 beyond. Suppresses ringing when
/// integrating un-damped oscillatory integrands over a finite range.
double cosine_taper(double u, double extent, double fraction);

/// Composite Simpson over uniformly sampled data (3/8 rule absorbs an odd
/// interval count). Grid must be uniform and strictly increasing.
cplx simpson_sampled(std::span<const double> grid, std::span<const cplx> values);
double simpson_sampled(std::span<const double> grid,
                       std::span<const double> values);

struct DensityMoment {
    double mean;          // first moment of |psi|^2 after normalization
    double normalization; // integral of |psi|^2 before normalization
};

/// First moment of the probability density |psi|^2 built from amplitude
/// samples on a uniform grid. Callers decide how to treat a vanishing norm.
DensityMoment density_first_moment(std::span<const double> grid,
                                   std::span<const cplx> amplitudes);

} // namespace pf::numerics

#endif // PF_NUMERICS_HPP
