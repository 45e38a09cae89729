#pragma once

#include <utility>

#include <Eigen/Dense>

#include "twoatom/model.hpp"

namespace twoatom {

// Collective quantities derived from the pair parameters: the dipole-dipole
// shift Ω12, the cross-damping Γ12, the single-excitation splitting
// U = √(4Ω12² + Δ²) and the mixing of the symmetric/antisymmetric basis,
// cos2α = Δ/U, sin2α = 2Ω12/U.
struct CollectiveParams {
    double omega12 = 0.0;
    double gamma12 = 0.0;
    double u_split = 0.0;
    double cos2alpha = 0.0;
    double sin2alpha = 1.0;  // α = π/4 at the degenerate point U = 0

    double alpha() const;
    double cos_alpha() const;
    double sin_alpha() const;
};

// (Ω12, Γ12) from the geometry, units of Γ0.  The convention is pinned by
// the quoted values Γ12 = −0.152 Γ0, Ω12 = 0.215 Γ0 at separation λ/2 with
// dipoles perpendicular to the axis.  Throws std::domain_error when the
// separation is not positive (the 1/x³ terms are singular).
std::pair<double, double> collective_couplings(const AtomPair& pair);

CollectiveParams mixing(const AtomPair& pair, double omega12,
                        double gamma12 = 0.0);

// Applies the coupling mode: zeros, geometry, or explicit override.
CollectiveParams resolve_coupling(const AtomPair& pair,
                                  const CouplingMode& mode);

// Unitary change of basis from the product basis (gg, eg, ge, ee) to the
// collective basis; columns are |g>, |s>, |a>, |e> with
//   |s> = sinα|g1 e2> + cosα|e1 g2>,   |a> = cosα|g1 e2> − sinα|e1 g2>.
Eigen::Matrix4cd collective_basis(const CollectiveParams& collective);

}  // namespace twoatom
