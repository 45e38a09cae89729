#pragma once

#include <complex>

#include "twoatom/model.hpp"

namespace twoatom {

// Closed-form steady state of a single driven two-level atom, rates in Γ0.
struct SingleAtomSolution {
    double population;              // <S+S-> = Ω²/D
    std::complex<double> coherence;  // <S+> = −Ω(Γ − 2iΔ)/D
    double denominator;             // D = 2Ω² + Γ² + 4Δ²
};

SingleAtomSolution single_atom(double rabi, double gamma, double delta_j);

// Decomposition amplitudes of the independent-atom steady-state intensity
// for a drive perpendicular to the atomic axis, units of u(ϑ)Γ0:
//   i0 = Ω²[(1+γ)D2 + (1−γ)D1]/(D1 D2)
//   ic = Ω²·2√(1−γ²)(4Δ_L² − Δ² + (1−γ²))/(D1 D2)
//   is = Ω²·2√(1−γ²)·2(2γΔ_L − Δ)/(D1 D2)
struct IndependentAmplitudes {
    double i0, ic, is;
};

IndependentAmplitudes independent_amplitudes(const AtomPair& pair,
                                             const Drive& drive);

// Closed-form independent-atom intensity at angle θ.  Supported drive
// geometries: perpendicular to the axis (cosine form), or k·r12·cosθ_L =
// ±π/2 where the cosine and sine of the interference term interchange.
// Any other propagation angle throws std::domain_error.
double intensity_independent(const AtomPair& pair, const Drive& drive,
                             double theta);

// Sign of the sine-term amplitude 2(2γΔ_L − Δ); zero at the routing
// threshold Δ_L = Δ/(2γ).
int sine_amplitude_sign(const AtomPair& pair, const Drive& drive);

}  // namespace twoatom
