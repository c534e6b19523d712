#ifndef PF_CORE_HPP
#define PF_CORE_HPP

#include <complex>

#include "pf/errors.hpp"

namespace pf {

using cplx = std::complex<double>;

/// Mass and reduced Planck constant. Natural units (both 1) by default; SI
/// values are accepted the same way.
struct PhysicalParams {
    double mass_m = 1.0;
    double hbar = 1.0;

    void validate() const {
        if (!(mass_m > 0.0) || !(hbar > 0.0))
            throw DomainError("mass and hbar must be strictly positive");
    }

    static PhysicalParams natural() { return PhysicalParams{1.0, 1.0}; }
};

/// Energy bookkeeping of one particle-field system:
///   total = particle kinetic + field kinetic + field potential + external.
/// The field energy (kinetic + potential) may be negative.
struct EnergyLedger {
    double particle_kinetic = 0.0;  // K_P >= 0
    double field_kinetic = 0.0;     // K_F >= 0
    double field_potential = 0.0;   // V_F, sign free
    double external_potential = 0.0;
    double total = 0.0;

    double field_energy() const { return field_kinetic + field_potential; }

    double closure_residual() const {
        const double sum = particle_kinetic + field_kinetic + field_potential +
                           external_potential;
        return std::abs(sum - total) / std::max(1.0, std::abs(total));
    }

    bool closed(double tol = 1e-12) const { return closure_residual() <= tol; }
};

/// Stationary field descriptor. The kind selects the evaluation rule; all
/// kinds share the shape amplitude * g(wavenumber * coordinate + phase):
///   oscillatory_cos  g = cos   (spatial coordinate)
///   hyperbolic_cosh  g = cosh  (spatial coordinate)
///   plane_wave_exp   g = exp(i*) (spatial coordinate)
///   standing_sin     g = sin   (temporal coordinate; wavenumber holds the
///                               angular frequency, phase holds k*x0)
/// Amplitudes carry dimension of length.
struct StationaryField {
    enum class Kind { oscillatory_cos, hyperbolic_cosh, plane_wave_exp, standing_sin };

    Kind kind = Kind::oscillatory_cos;
    double amplitude = 0.0;
    double phase = 0.0;
    double wavenumber = 0.0;
};

/// Field value at a coordinate (spatial or temporal per kind). Real kinds
/// come back with zero imaginary part.
cplx eval_field(const StationaryField& f, double coordinate);

/// Hidden particle state. p = m v; K = p^2 / 2m.
struct ParticleState {
    double position = 0.0;
    double velocity = 0.0;
    double momentum = 0.0;

    static ParticleState from_velocity(const PhysicalParams& params, double x,
                                       double v) {
        return ParticleState{x, v, params.mass_m * v};
    }

    double kinetic_energy(const PhysicalParams& params) const {
        return momentum * momentum / (2.0 * params.mass_m);
    }
};

/// Constant-velocity particle trajectory x(t) = x0 + v t.
struct LinearTrajectory {
    double x0 = 0.0;
    double velocity = 0.0;

    double operator()(double t) const { return x0 + velocity * t; }
};

/// Which spring-like law the field is expected to obey along the trajectory:
/// oscillatory fields satisfy chi'' = -omega^2 chi, hyperbolic ones
/// chi'' = +omega^2 chi.
enum class OscillatorForm { oscillatory, hyperbolic };

/// Dimensionless residual of the oscillator law, checked by central second
/// differences of chi(x(t)) in time: |chi''_fd -/+ omega^2 chi| normalized by
/// omega^2 |amplitude|. Near zero for consistent fields.
double oscillator_residual(const StationaryField& f,
                           const LinearTrajectory& trajectory, double omega,
                           OscillatorForm form, double t, double h = 1e-4);

} // namespace pf

#endif // PF_CORE_HPP
