#pragma once

#include <complex>
#include <string>
#include <vector>

namespace twoatom {

// Parameters of the two-emitter system in normalized units: every rate and
// frequency is measured in units of the average damping rate Γ0, every
// length in units of the transition wavelength λ.

struct AtomPair {
    double gamma1 = 1.0;       // damping rate of atom 1, units of Γ0
    double gamma2 = 1.0;       // damping rate of atom 2, units of Γ0
    double delta = 0.0;        // frequency difference Δ = ω1 − ω2, units of Γ0
    double separation = 0.25;  // interatomic distance r12, units of λ
    double dipole_axis_angle = 1.5707963267948966;  // angle(μ̂, r̂12), radians

    // γ = (Γ1 − Γ2)/(Γ1 + Γ2); equals (gamma1 − gamma2)/2 in Γ0 units.
    double gamma_diff() const { return 0.5 * (gamma1 - gamma2); }

    // k·r12 = 2π·separation
    double wave_distance() const;
};

struct Drive {
    double rabi = 0.0;        // Rabi frequency Ω, units of Γ0
    double detuning_l = 0.0;  // laser detuning Δ_L = ω0 − ω_L, units of Γ0
    double propagation_angle = 1.5707963267948966;  // θ_L vs the atomic axis
    double initial_phase = 0.0;                     // φ_L
};

// Per-atom laser detunings Δ1 = Δ_L + Δ/2, Δ2 = Δ_L − Δ/2.
double laser_detuning_1(const AtomPair& pair, const Drive& drive);
double laser_detuning_2(const AtomPair& pair, const Drive& drive);

// Position-dependent complex Rabi frequencies Ω_Lj = Ω·e^{i(φ_L + k_L·r_j)}
// for atoms at x = ∓r12/2 along the interatomic axis.
std::complex<double> local_rabi_1(const AtomPair& pair, const Drive& drive);
std::complex<double> local_rabi_2(const AtomPair& pair, const Drive& drive);

// Ωβ = (Ω_L1 + Ω_L2)/2
std::complex<double> mean_rabi(const AtomPair& pair, const Drive& drive);

// Selects how the collective constants Ω12, Γ12 are obtained: forced to
// zero, computed from the geometry, or overridden with explicit values.
struct CouplingMode {
    enum class Kind { independent, interacting, custom };

    Kind kind = Kind::independent;
    double omega12 = 0.0;  // custom only, units of Γ0
    double gamma12 = 0.0;  // custom only, units of Γ0

    static CouplingMode independent() { return {Kind::independent, 0.0, 0.0}; }
    static CouplingMode interacting() { return {Kind::interacting, 0.0, 0.0}; }
    static CouplingMode custom(double omega12, double gamma12) {
        return {Kind::custom, omega12, gamma12};
    }

    std::string name() const;
};

struct Configuration {
    AtomPair pair;  // normalized so that gamma1 + gamma2 = 2
    Drive drive;
    CouplingMode mode;
    double gamma0 = 1.0;  // Γ0 implied by the raw input rates
};

// Every violated invariant of the given parameter set; empty when valid.
std::vector<std::string> check(const AtomPair& pair, const Drive& drive,
                               const CouplingMode& mode);

// Normalizes raw damping rates to Γ0 units (gamma1 + gamma2 = 2), recording
// the implied Γ0.  Throws std::invalid_argument listing every violation.
Configuration validate(AtomPair pair, Drive drive, CouplingMode mode);

}  // namespace twoatom
