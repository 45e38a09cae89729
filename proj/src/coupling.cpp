#include "twoatom/coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace twoatom {

double CollectiveParams::alpha() const {
    return 0.5 * std::atan2(sin2alpha, cos2alpha);
}

double CollectiveParams::cos_alpha() const { return std::cos(alpha()); }

double CollectiveParams::sin_alpha() const { return std::sin(alpha()); }

std::pair<double, double> collective_couplings(const AtomPair& pair) {
    if (!(pair.separation > 0.0))
        throw std::domain_error(
            "collective couplings undefined for non-positive separation");

    const double x = pair.wave_distance();
    const double c = std::cos(pair.dipole_axis_angle);
    const double perp = 1.0 - c * c;        // 1 − (μ̂·r̂)²
    const double axial = 1.0 - 3.0 * c * c;  // 1 − 3(μ̂·r̂)²
    const double prefactor = std::sqrt(pair.gamma1 * pair.gamma2);

    const double sx = std::sin(x);
    const double cx = std::cos(x);
    const double x2 = x * x;
    const double x3 = x2 * x;

    const double gamma12 =
        1.5 * prefactor * (perp * sx / x + axial * (cx / x2 - sx / x3));
    const double omega12 =
        0.75 * prefactor * (-perp * cx / x + axial * (sx / x2 + cx / x3));
    return {omega12, gamma12};
}

CollectiveParams mixing(const AtomPair& pair, double omega12, double gamma12) {
    CollectiveParams out;
    out.omega12 = omega12;
    out.gamma12 = gamma12;
    out.u_split = std::sqrt(4.0 * omega12 * omega12 + pair.delta * pair.delta);
    if (out.u_split == 0.0) {
        // Degenerate point: the s/a basis is arbitrary, fix α = π/4.
        out.cos2alpha = 0.0;
        out.sin2alpha = 1.0;
    } else {
        out.cos2alpha = pair.delta / out.u_split;
        out.sin2alpha = 2.0 * omega12 / out.u_split;
    }
    return out;
}

CollectiveParams resolve_coupling(const AtomPair& pair,
                                  const CouplingMode& mode) {
    switch (mode.kind) {
        case CouplingMode::Kind::independent:
            return mixing(pair, 0.0, 0.0);
        case CouplingMode::Kind::interacting: {
            const auto [omega12, gamma12] = collective_couplings(pair);
            return mixing(pair, omega12, gamma12);
        }
        case CouplingMode::Kind::custom:
            return mixing(pair, mode.omega12, mode.gamma12);
    }
    throw std::logic_error("unreachable coupling mode");
}

Eigen::Matrix4cd collective_basis(const CollectiveParams& collective) {
    const double ca = collective.cos_alpha();
    const double sa = collective.sin_alpha();

    Eigen::Matrix4cd basis = Eigen::Matrix4cd::Zero();
    basis(0, 0) = 1.0;   // |g> = |g1 g2>
    basis(2, 1) = sa;    // |s> on |g1 e2>
    basis(1, 1) = ca;    // |s> on |e1 g2>
    basis(2, 2) = ca;    // |a> on |g1 e2>
    basis(1, 2) = -sa;   // |a> on |e1 g2>
    basis(3, 3) = 1.0;   // |e> = |e1 e2>
    return basis;
}

}  // namespace twoatom
