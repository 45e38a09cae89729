#include "twoatom/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twoatom/operators.hpp"

namespace twoatom {

PairCorrelations correlations(const DensityMatrix& rho) {
    PairCorrelations out;
    out.population1 =
        (rho * ops::raise1() * ops::lower1()).trace().real();
    out.population2 =
        (rho * ops::raise2() * ops::lower2()).trace().real();
    out.cross = (rho * ops::raise1() * ops::lower2()).trace();
    return out;
}

double intensity(const DensityMatrix& rho, const AtomPair& pair,
                 double theta) {
    const PairCorrelations c = correlations(rho);
    const double phase = pair.wave_distance() * std::cos(theta);
    const std::complex<double> osc(std::cos(phase), std::sin(phase));
    return pair.gamma1 * c.population1 + pair.gamma2 * c.population2 +
           std::sqrt(pair.gamma1 * pair.gamma2) * 2.0 *
               (c.cross * osc).real();
}

Decomposition decompose(const DensityMatrix& rho, const AtomPair& pair,
                        const CollectiveParams& collective) {
    const Eigen::Matrix4cd basis = collective_basis(collective);
    const Eigen::Matrix4cd rc = basis.adjoint() * rho * basis;  // (g,s,a,e)

    const double rho_ss = rc(1, 1).real();
    const double rho_aa = rc(2, 2).real();
    const double rho_ee = rc(3, 3).real();
    const std::complex<double> rho_sa = rc(1, 2);  // <s|ρ|a>

    const double gamma = pair.gamma_diff();
    const double root = std::sqrt(1.0 - gamma * gamma);
    const double cos2a = collective.cos2alpha;
    const double sin2a = collective.sin2alpha;

    Decomposition parts;
    parts.i0 = 2.0 * rho_ee + (1.0 + gamma * cos2a) * rho_ss +
               (1.0 - gamma * cos2a) * rho_aa -
               2.0 * gamma * sin2a * rho_sa.real();
    parts.ic = root * ((rho_ss - rho_aa) * sin2a + 2.0 * cos2a * rho_sa.real());
    parts.is = 2.0 * root * rho_sa.imag();
    if (parts.ic == 0.0 && parts.is == 0.0) {
        parts.ie = 0.0;
        parts.psi = 0.0;
    } else {
        parts.psi = std::atan2(parts.is, parts.ic);
        parts.ie = std::hypot(parts.ic, parts.is);
    }
    return parts;
}

double contrast_antisymmetric(const Decomposition& parts) {
    if (parts.i0 <= 0.0)
        throw std::domain_error(
            "antisymmetric contrast undefined: no emission (i0 = 0)");
    return parts.is / parts.i0;
}

double contrast_antisymmetric(const DensityMatrix& rho, const AtomPair& pair,
                              const CollectiveParams& collective) {
    return contrast_antisymmetric(decompose(rho, pair, collective));
}

double contrast_symmetric(const DensityMatrix& rho, const AtomPair& pair) {
    const PairCorrelations c = correlations(rho);
    const double gamma = pair.gamma_diff();
    const double denominator =
        (1.0 + gamma) * c.population1 + (1.0 - gamma) * c.population2;
    if (denominator <= 0.0)
        throw std::domain_error(
            "symmetric contrast undefined: zero denominator (no emission)");
    return std::sqrt(1.0 - gamma * gamma) * 2.0 * c.cross.real() /
           denominator;
}

ModeSet mode_angles(double separation) {
    if (!(separation > 0.0))
        throw std::domain_error("mode angles require a positive separation");

    ModeSet modes;
    const double half_wavelengths = 2.0 * separation;  // 2 r12/λ

    // Descending cosθ gives angles sorted ascending in θ.
    const int n_max = static_cast<int>(std::floor(half_wavelengths)) + 1;
    for (int n = n_max; n >= -n_max; --n) {
        const double c = n / half_wavelengths;
        if (std::abs(c) > 1.0) continue;
        modes.symmetric.push_back(
            {std::acos(c), n, (n % 2 == 0) ? +1 : -1});
    }
    for (int n = n_max; n >= -n_max - 1; --n) {
        const double c = (n + 0.5) / half_wavelengths;
        if (std::abs(c) > 1.0) continue;
        modes.antisymmetric.push_back(
            {std::acos(c), n, (n % 2 == 0) ? +1 : -1});
    }
    return modes;
}

IntensityProfile intensity_profile(const DensityMatrix& rho,
                                   const AtomPair& pair,
                                   const CollectiveParams& collective,
                                   int samples) {
    if (samples < 2)
        throw std::invalid_argument("profile needs at least two samples");

    IntensityProfile profile;
    profile.thetas.reserve(samples);
    profile.values.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double theta =
            std::numbers::pi * static_cast<double>(i) / (samples - 1);
        profile.thetas.push_back(theta);
        profile.values.push_back(intensity(rho, pair, theta));
    }
    profile.parts = decompose(rho, pair, collective);
    return profile;
}

}  // namespace twoatom
