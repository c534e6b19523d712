#include "pf/core.hpp"

#include <cmath>

#include "pf/numerics.hpp"

namespace pf {

cplx eval_field(const StationaryField& f, double coordinate) {
    const double arg = f.wavenumber * coordinate + f.phase;
    switch (f.kind) {
    case StationaryField::Kind::oscillatory_cos:
        return cplx(f.amplitude * std::cos(arg), 0.0);
    case StationaryField::Kind::hyperbolic_cosh:
        return cplx(f.amplitude * std::cosh(arg), 0.0);
    case StationaryField::Kind::plane_wave_exp:
        return f.amplitude * std::exp(cplx(0.0, arg));
    case StationaryField::Kind::standing_sin:
        return cplx(f.amplitude * std::sin(arg), 0.0);
    }
    throw DomainError("unknown field kind");
}

double oscillator_residual(const StationaryField& f,
                           const LinearTrajectory& trajectory, double omega,
                           OscillatorForm form, double t, double h) {
    auto chi_along_path = [&](double s) {
        return eval_field(f, trajectory(s)).real();
    };
    const double second = numerics::finite_diff_2nd(chi_along_path, t, h);
    const double sign = (form == OscillatorForm::oscillatory) ? -1.0 : 1.0;
    const double expected = sign * omega * omega * chi_along_path(t);
    const double scale = omega * omega * std::abs(f.amplitude);
    if (scale == 0.0)
        return std::abs(second - expected);
    return std::abs(second - expected) / scale;
}

} // namespace pf
