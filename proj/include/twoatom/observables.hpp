#pragma once

#include <complex>
#include <vector>

#include "twoatom/dynamics.hpp"

namespace twoatom {

// Steady-state dipole correlations entering the far-field intensity.
struct PairCorrelations {
    double population1;          // <S1+ S1->
    double population2;          // <S2+ S2->
    std::complex<double> cross;  // <S1+ S2->;  <S2+ S1-> is its conjugate
};

PairCorrelations correlations(const DensityMatrix& rho);

// Far-field intensity at observation angle θ from the interatomic axis, in
// units of u(ϑ)Γ0:
//   I(θ) = γ1<S1+S1-> + γ2<S2+S2-> + √(γ1γ2)·2Re[<S1+S2-> e^{i k r12 cosθ}]
double intensity(const DensityMatrix& rho, const AtomPair& pair, double theta);

// Amplitudes of I(θ) = i0 + ic·cos(k r12 cosθ) + is·sin(k r12 cosθ), plus
// the effective form ie·cos(ψ − k r12 cosθ) with ψ = atan2(is, ic).
struct Decomposition {
    double i0, ic, is;
    double ie, psi;
};

Decomposition decompose(const DensityMatrix& rho, const AtomPair& pair,
                        const CollectiveParams& collective);

// Contrast of the antisymmetric modes, C = is/i0.  Throws std::domain_error
// when i0 vanishes (no emission).
double contrast_antisymmetric(const Decomposition& parts);
double contrast_antisymmetric(const DensityMatrix& rho, const AtomPair& pair,
                              const CollectiveParams& collective);

// Contrast of the symmetric modes,
//   C = √(1−γ²)·2Re<S1+S2-> / [(1+γ)<S1+S1-> + (1−γ)<S2+S2->].
// Throws std::domain_error when the denominator vanishes.
double contrast_symmetric(const DensityMatrix& rho, const AtomPair& pair);

// Discrete far-field directions where the interference factor is extremal:
// symmetric modes at cosθ = nλ/(2 r12), antisymmetric ones at
// cosθ = (n + ½)λ/(2 r12).  sign is +1 for even n (interference adds) and
// −1 for odd n (interference subtracts).
struct ModeSet {
    struct Mode {
        double theta;
        int index;
        int sign;
    };
    std::vector<Mode> symmetric;
    std::vector<Mode> antisymmetric;
};

ModeSet mode_angles(double separation);

struct IntensityProfile {
    std::vector<double> thetas;  // uniform on [0, π]
    std::vector<double> values;  // I(θ), units u(ϑ)Γ0
    Decomposition parts;
};

IntensityProfile intensity_profile(const DensityMatrix& rho,
                                   const AtomPair& pair,
                                   const CollectiveParams& collective,
                                   int samples = 721);

}  // namespace twoatom
