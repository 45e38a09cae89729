#include "twoatom/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twoatom {

SingleAtomSolution single_atom(double rabi, double gamma, double delta_j) {
    if (!(gamma > 0.0))
        throw std::domain_error("single atom requires a positive damping rate");

    SingleAtomSolution out;
    out.denominator =
        2.0 * rabi * rabi + gamma * gamma + 4.0 * delta_j * delta_j;
    out.population = rabi * rabi / out.denominator;
    out.coherence = -rabi * std::complex<double>(gamma, -2.0 * delta_j) /
                    out.denominator;
    return out;
}

namespace {

struct Eq47Terms {
    double background;  // (1+γ)D2 + (1−γ)D1
    double cos_amp;     // 2√(1−γ²)(4Δ_L² − Δ² + (1−γ²))
    double sin_amp;     // 2√(1−γ²)·2(2γΔ_L − Δ)
    double scale;       // Ω²/(D1 D2)
};

Eq47Terms eq47_terms(const AtomPair& pair, const Drive& drive) {
    const double gamma = pair.gamma_diff();
    const double d1 = laser_detuning_1(pair, drive);
    const double d2 = laser_detuning_2(pair, drive);
    const double rabi2 = drive.rabi * drive.rabi;
    const double den1 = 2.0 * rabi2 + pair.gamma1 * pair.gamma1 + 4.0 * d1 * d1;
    const double den2 = 2.0 * rabi2 + pair.gamma2 * pair.gamma2 + 4.0 * d2 * d2;
    const double root = std::sqrt(1.0 - gamma * gamma);
    const double dl = drive.detuning_l;

    Eq47Terms t;
    t.background = (1.0 + gamma) * den2 + (1.0 - gamma) * den1;
    t.cos_amp = 2.0 * root *
                (4.0 * dl * dl - pair.delta * pair.delta +
                 (1.0 - gamma * gamma));
    t.sin_amp = 2.0 * root * 2.0 * (2.0 * gamma * dl - pair.delta);
    t.scale = rabi2 / (den1 * den2);
    return t;
}

bool perpendicular(const Drive& drive) {
    return std::abs(std::cos(drive.propagation_angle)) < 1e-12;
}

}  // namespace

IndependentAmplitudes independent_amplitudes(const AtomPair& pair,
                                             const Drive& drive) {
    if (!perpendicular(drive))
        throw std::domain_error(
            "closed-form amplitudes require drive perpendicular to the axis");
    const Eq47Terms t = eq47_terms(pair, drive);
    return {t.scale * t.background, t.scale * t.cos_amp, t.scale * t.sin_amp};
}

double intensity_independent(const AtomPair& pair, const Drive& drive,
                             double theta) {
    const Eq47Terms t = eq47_terms(pair, drive);
    const double phase = pair.wave_distance() * std::cos(theta);

    if (perpendicular(drive)) {
        return t.scale * (t.background + t.cos_amp * std::cos(phase) +
                          t.sin_amp * std::sin(phase));
    }

    // Drive along an antisymmetric mode: cos and sin interchange.
    const double drive_phase =
        pair.wave_distance() * std::cos(drive.propagation_angle);
    if (std::abs(std::abs(drive_phase) - 0.5 * std::numbers::pi) < 1e-9) {
        return t.scale * (t.background + t.cos_amp * std::sin(phase) +
                          t.sin_amp * std::cos(phase));
    }

    throw std::domain_error(
        "no closed form for this drive geometry: need theta_L = pi/2 or "
        "k r12 cos(theta_L) = ±pi/2");
}

int sine_amplitude_sign(const AtomPair& pair, const Drive& drive) {
    const double amplitude =
        2.0 * (2.0 * pair.gamma_diff() * drive.detuning_l - pair.delta);
    return (amplitude > 0.0) - (amplitude < 0.0);
}

}  // namespace twoatom
