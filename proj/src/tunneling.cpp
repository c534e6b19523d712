#include "pf/tunneling.hpp"

#include <cmath>

namespace pf::tunneling {

void BarrierSpec::validate() const {
    params.validate();
    if (!(total_energy > 0.0))
        throw InvalidRegime("total energy must be > 0");
    if (!(total_energy < barrier_height))
        throw InvalidRegime("tunneling regime requires E < V0");
    if (!(barrier_width > 0.0))
        throw DomainError("barrier width must be > 0");
}

double RegionState::particle_momentum(const PhysicalParams& p) const {
    return std::sqrt(2.0 * p.mass_m * particle_kinetic);
}

double RegionState::particle_velocity(const PhysicalParams& p) const {
    return particle_momentum(p) / p.mass_m;
}

double RegionState::angular_frequency(const PhysicalParams& p) const {
    return particle_velocity(p) * wavenumber;
}

StationaryField RegionState::field() const {
    StationaryField f;
    f.kind = (region == Region::I) ? StationaryField::Kind::oscillatory_cos
                                   : StationaryField::Kind::hyperbolic_cosh;
    f.amplitude = amplitude;
    f.phase = phase;
    f.wavenumber = wavenumber;
    return f;
}

Wavenumbers wavenumbers(const BarrierSpec& spec) {
    spec.validate();
    const double m = spec.params.mass_m;
    const double hbar = spec.params.hbar;
    return Wavenumbers{
        std::sqrt(2.0 * m * spec.total_energy) / hbar,
        std::sqrt(2.0 * m * (spec.barrier_height - spec.total_energy)) / hbar,
    };
}

double region1_amplitude(const BarrierSpec& spec, double particle_kinetic,
                         RootSign sign) {
    spec.validate();
    if (!(particle_kinetic > 0.0))
        throw DomainError("region I particle kinetic energy must be > 0");
    if (particle_kinetic > spec.total_energy)
        throw DomainError("region I particle kinetic energy cannot exceed E");
    const double p = std::sqrt(2.0 * spec.params.mass_m * particle_kinetic);
    const double r = (spec.params.hbar / p) *
                     std::sqrt(1.0 - particle_kinetic / spec.total_energy);
    return sign == RootSign::positive ? r : -r;
}

double region2_amplitude(const BarrierSpec& spec, double particle_kinetic,
                         RootSign sign) {
    spec.validate();
    if (!(particle_kinetic > 0.0))
        throw DomainError("region II particle kinetic energy must be > 0");
    const double depth = spec.barrier_height - spec.total_energy;
    const double p = std::sqrt(2.0 * spec.params.mass_m * particle_kinetic);
    const double r =
        (spec.params.hbar / p) * std::sqrt(1.0 + particle_kinetic / depth);
    return sign == RootSign::positive ? r : -r;
}

RegionState make_region1_state(const BarrierSpec& spec, double particle_kinetic,
                               double phase, RootSign sign) {
    return RegionState{Region::I, wavenumbers(spec).k,
                       region1_amplitude(spec, particle_kinetic, sign), phase,
                       particle_kinetic};
}

RegionState make_region2_state(const BarrierSpec& spec, double particle_kinetic,
                               double phase, RootSign sign) {
    return RegionState{Region::II, wavenumbers(spec).kappa,
                       region2_amplitude(spec, particle_kinetic, sign), phase,
                       particle_kinetic};
}

EnergyLedger energy_ledger(const BarrierSpec& spec, const RegionState& state,
                           double x) {
    spec.validate();
    const double m = spec.params.mass_m;
    const double omega = state.angular_frequency(spec.params);
    const double half_m_w2_r2 =
        0.5 * m * omega * omega * state.amplitude * state.amplitude;
    const double arg = state.wavenumber * x + state.phase;

    EnergyLedger ledger;
    ledger.particle_kinetic = state.particle_kinetic;
    ledger.total = spec.total_energy;

    if (state.region == Region::I) {
        if (x > 0.0)
            throw RegionMismatch("region I ledger requires x <= 0");
        const double s = std::sin(arg);
        const double c = std::cos(arg);
        ledger.field_kinetic = half_m_w2_r2 * s * s;
        ledger.field_potential = half_m_w2_r2 * c * c;
        ledger.external_potential = 0.0;
    } else {
        if (x < 0.0 || x > spec.barrier_width)
            throw RegionMismatch("region II ledger requires 0 <= x <= a");
        const double sh = std::sinh(arg);
        const double ch = std::cosh(arg);
        ledger.field_kinetic = half_m_w2_r2 * sh * sh;
        ledger.field_potential = -half_m_w2_r2 * ch * ch;
        ledger.external_potential = spec.barrier_height;
    }
    return ledger;
}

double effective_kinetic(const BarrierSpec& spec, const RegionState& state) {
    if (state.region != Region::II)
        throw RegionMismatch("effective kinetic energy is a region II quantity");
    const double p = state.particle_momentum(spec.params);
    const double ratio =
        (p * state.amplitude / spec.params.hbar) * (p * state.amplitude / spec.params.hbar);
    return state.particle_kinetic / (1.0 - ratio);
}

double total_energy_consistency(const BarrierSpec& spec,
                                const RegionState& state1,
                                const RegionState& state2) {
    const double k2r2 = state1.wavenumber * state1.wavenumber *
                        state1.amplitude * state1.amplitude;
    const double e_region1 = state1.particle_kinetic * (1.0 + k2r2);

    const double kap2r2 = state2.wavenumber * state2.wavenumber *
                          state2.amplitude * state2.amplitude;
    const double e_region2 =
        state2.particle_kinetic * (1.0 - kap2r2) + spec.barrier_height;

    return std::abs(e_region1 - e_region2) / spec.total_energy;
}

double standard_qm_transmission(const BarrierSpec& spec) {
    const auto [k, kappa] = wavenumbers(spec);
    (void)k;
    const double e = spec.total_energy;
    const double v0 = spec.barrier_height;
    const double sh = std::sinh(kappa * spec.barrier_width);
    return 1.0 / (1.0 + v0 * v0 * sh * sh / (4.0 * e * (v0 - e)));
}

} // namespace pf::tunneling
