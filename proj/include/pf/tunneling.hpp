#ifndef PF_TUNNELING_HPP
#define PF_TUNNELING_HPP

#include "pf/core.hpp"

namespace pf::tunneling {

/// Rectangular barrier of height V0 on [0, a], total energy in the tunneling
/// regime 0 < E < V0. Potential is zero outside the barrier.
struct BarrierSpec {
    PhysicalParams params;
    double total_energy;   // E
    double barrier_height; // V0
    double barrier_width;  // a

    void validate() const;
};

enum class Region { I, II };

/// One region's stationary-field state. The particle kinetic energy is a free
/// hidden parameter; the amplitude is the one that closes the energy ledger.
/// Note the two regions are independent one-parameter families: no boundary
/// matching ties K_P or the phases across x = 0.
struct RegionState {
    Region region;
    double wavenumber;      // k (region I) or kappa (region II)
    double amplitude;       // R_I or R_II, dimension of length
    double phase;           // free, defaults to 0
    double particle_kinetic; // K_P in this region

    double particle_momentum(const PhysicalParams& p) const;
    double particle_velocity(const PhysicalParams& p) const;
    /// omega = v_P * wavenumber, from the region's own particle velocity.
    double angular_frequency(const PhysicalParams& p) const;

    StationaryField field() const;
};

struct Wavenumbers {
    double k;     // sqrt(2 m E) / hbar
    double kappa; // sqrt(2 m (V0 - E)) / hbar
};

Wavenumbers wavenumbers(const BarrierSpec& spec);

enum class RootSign { positive, negative };

/// Amplitude of the region-I field for a given particle kinetic energy,
/// 0 < K_P1 <= E. Closes the ledger: K_P1 (1 + k^2 R^2) = E.
double region1_amplitude(const BarrierSpec& spec, double particle_kinetic,
                         RootSign sign = RootSign::positive);

/// Amplitude of the in-barrier field for a given particle kinetic energy
/// K_P2 > 0. Closes the ledger: K_P2 (1 - kappa^2 R^2) + V0 = E.
double region2_amplitude(const BarrierSpec& spec, double particle_kinetic,
                         RootSign sign = RootSign::positive);

RegionState make_region1_state(const BarrierSpec& spec, double particle_kinetic,
                               double phase = 0.0,
                               RootSign sign = RootSign::positive);
RegionState make_region2_state(const BarrierSpec& spec, double particle_kinetic,
                               double phase = 0.0,
                               RootSign sign = RootSign::positive);

/// Position-resolved energy ledger. Region I accepts x <= 0, region II
/// 0 <= x <= a. The kinetic/potential field split trades off with x while
/// the totals stay put.
EnergyLedger energy_ledger(const BarrierSpec& spec, const RegionState& state,
                           double x);

/// The quantity standard quantum mechanics calls kinetic energy inside the
/// barrier: K_P2 / (1 - p^2 R^2 / hbar^2). Equals E - V0, hence negative in
/// the tunneling regime.
double effective_kinetic(const BarrierSpec& spec, const RegionState& state);

/// |E_from_region_I - E_from_region_II| / E for two states built from the
/// same spec. Both totals are constructed to equal spec.total_energy.
double total_energy_consistency(const BarrierSpec& spec,
                                const RegionState& state1,
                                const RegionState& state2);

/// Textbook quantum transmission coefficient for the rectangular barrier.
/// Cross-reference output only: it comes from standard wavefunction matching,
/// not from the particle-field energy bookkeeping above.
double standard_qm_transmission(const BarrierSpec& spec);

} // namespace pf::tunneling

#endif // PF_TUNNELING_HPP
