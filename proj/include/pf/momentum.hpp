#ifndef PF_MOMENTUM_HPP
#define PF_MOMENTUM_HPP

#include <functional>
#include <span>
#include <vector>

#include "pf/core.hpp"
#include "pf/numerics.hpp"

namespace pf::momentum {

using numerics::Quadrature;

/// Parameters of a prepared momentum eigenfield: hidden particle momentum,
/// field amplitude, and the release event (t0, x0). Valid only while
/// p_P^2 A_p^2 < hbar^2.
struct MomentumPrep {
    PhysicalParams params;
    double particle_momentum;       // p_P, hidden
    double field_amplitude;         // A_p >= 0
    double release_time = 0.0;      // t0
    double particle_position = 0.0; // x0 = x(t0)

    void validate() const;
};

/// Quantities discernible (or inferable) after the preparation.
struct MomentumRecord {
    double de_broglie_p;   // p = hbar k of the eigenfield
    double wavelength;     // lambda, with lambda * p = 2 pi hbar
    double field_energy;   // E_F = K_F (V_F = 0 for the free field)
    double pf_velocity;    // qdot = p / m
    double pf_position_at_release; // q0
};

/// p = p_P (1 - p_P^2 A_p^2 / hbar^2)^(-1/2). Exceeds |p_P| whenever the
/// field amplitude is nonzero. Throws AmplitudeTooLarge at the bound.
double de_broglie_momentum(const MomentumPrep& prep);

/// lambda = (h / p_P) (1 - p_P^2 A_p^2 / hbar^2)^(1/2) = 2 pi hbar / p.
double wavelength(const MomentumPrep& prep);

/// E_F = (p_P^2 / 2m) k^2 A_p^2 with k = p / hbar. Together with the particle
/// kinetic energy this closes to p^2 / 2m.
double field_energy(const MomentumPrep& prep);

/// PF velocity qdot = p / m.
double pf_velocity(const MomentumPrep& prep);

/// Same velocity along the eigenfield route: v_P (1 + k^2 A_p^2)^(1/2) with
/// the self-consistent k = p / hbar. Agrees with pf_velocity.
double pf_velocity_from_field(const MomentumPrep& prep);

/// q0 = x0 (1 - p_P^2 A_p^2 / hbar^2)^(-1/2).
double release_position(const MomentumPrep& prep);

/// q(t) = (p/m)(t - t0) + q0 for t >= t0. Throws TimeBeforePreparation.
double pf_trajectory(const MomentumPrep& prep, double t);

/// Invert the straight-line trajectory: q0 from one sample (t, q(t)). The
/// preparation is reversible, so this recovers release_position exactly.
double release_position_from_sample(const MomentumPrep& prep, double t,
                                    double q_at_t);

MomentumRecord make_record(const MomentumPrep& prep);

/// Momentum eigenfield chi_p(x) = A_p exp(i p x / hbar).
cplx eigenfield(const PhysicalParams& params, double p, double amplitude,
                double x);

/// Force on the field for a particle under conservative force f_P:
/// f_F = m v_P^2 d|chi'|/dx + f_P |chi'|, the spatial derivative taken by
/// central differences.
double field_force(const PhysicalParams& params, double particle_force,
                   double particle_velocity,
                   const std::function<double(double)>& chi_prime_abs, double x,
                   double h = 1e-5);

/// One time slice of a non-stationary field on a uniform spatial grid.
struct FieldSnapshot {
    double time = 0.0;
    std::vector<double> grid;
    std::vector<cplx> values;

    void validate() const;
};

/// Residual of the Newton-like field law m d|Xdot|/dt = f_nc along the
/// particle path, with Xdot = (dX/dx) v_P + dX/dt assembled from finite
/// differences across >= 3 equally spaced snapshots sharing one grid.
/// Dimensionless: the defect is scaled by |Xdot| over the characteristic
/// time, so a field obeying the law scores near zero and a wrong amplitude
/// law scores order one. Pass f_nc = nullptr for the free case.
double newton_field_residual(std::span<const FieldSnapshot> snapshots,
                             const PhysicalParams& params,
                             const LinearTrajectory& particle,
                             const std::function<double(double)>& f_nc = nullptr);

/// Expansion coefficients phi(p, t0) of a field over the momentum
/// eigenfields with one common amplitude:
///   phi(p) = 1/(2 pi hbar A_p^2) * integral dx chi_p*(x) X(x).
/// Integration is composite Simpson over the snapshot samples. The field
/// must have decayed at the grid edges (NonDecaying otherwise).
std::vector<cplx> expand_field(const PhysicalParams& params,
                               const FieldSnapshot& snapshot,
                               double common_amplitude,
                               std::span<const double> p_grid,
                               const Quadrature& q = {});

/// Re-synthesis X(x) = integral dp chi_p(x) phi(p) on the requested grid.
std::vector<cplx> synthesize_field(const PhysicalParams& params,
                                   std::span<const double> p_grid,
                                   std::span<const cplx> phi,
                                   double common_amplitude,
                                   std::span<const double> x_grid);

struct MeanMomentum {
    double value;         // <p> over the normalized |phi|^2
    double normalization; // integral of |phi|^2 before renormalizing
};

/// <p> = integral dp p |phi(p)|^2 after renormalizing |phi|^2 to one; the
/// original normalization is reported. Throws NotNormalizable when the
/// density integrates to zero.
MeanMomentum mean_momentum(std::span<const double> p_grid,
                           std::span<const cplx> phi);

} // namespace pf::momentum

#endif // PF_MOMENTUM_HPP
