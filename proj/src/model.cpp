#include "twoatom/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace twoatom {

double AtomPair::wave_distance() const {
    return 2.0 * std::numbers::pi * separation;
}

double laser_detuning_1(const AtomPair& pair, const Drive& drive) {
    return drive.detuning_l + 0.5 * pair.delta;
}

double laser_detuning_2(const AtomPair& pair, const Drive& drive) {
    return drive.detuning_l - 0.5 * pair.delta;
}

namespace {

std::complex<double> local_rabi(const AtomPair& pair, const Drive& drive,
                                double axis_position) {
    const double phase = drive.initial_phase +
                         pair.wave_distance() *
                             std::cos(drive.propagation_angle) * axis_position;
    return std::polar(drive.rabi, phase);
}

}  // namespace

std::complex<double> local_rabi_1(const AtomPair& pair, const Drive& drive) {
    return local_rabi(pair, drive, -0.5);
}

std::complex<double> local_rabi_2(const AtomPair& pair, const Drive& drive) {
    return local_rabi(pair, drive, +0.5);
}

std::complex<double> mean_rabi(const AtomPair& pair, const Drive& drive) {
    return 0.5 * (local_rabi_1(pair, drive) + local_rabi_2(pair, drive));
}

std::string CouplingMode::name() const {
    switch (kind) {
        case Kind::independent: return "independent";
        case Kind::interacting: return "interacting";
        case Kind::custom: return "custom";
    }
    return "unknown";
}

std::vector<std::string> check(const AtomPair& pair, const Drive& drive,
                               const CouplingMode& mode) {
    std::vector<std::string> problems;

    const bool finite =
        std::isfinite(pair.gamma1) && std::isfinite(pair.gamma2) &&
        std::isfinite(pair.delta) && std::isfinite(pair.separation) &&
        std::isfinite(pair.dipole_axis_angle) && std::isfinite(drive.rabi) &&
        std::isfinite(drive.detuning_l) &&
        std::isfinite(drive.propagation_angle) &&
        std::isfinite(drive.initial_phase) && std::isfinite(mode.omega12) &&
        std::isfinite(mode.gamma12);
    if (!finite) {
        problems.push_back("non-finite parameter");
        return problems;
    }

    if (pair.gamma1 <= 0.0 || pair.gamma2 <= 0.0)
        problems.push_back("non-positive damping rate");
    if (pair.separation <= 0.0)
        problems.push_back("non-positive separation");
    if (drive.rabi < 0.0)
        problems.push_back("negative Rabi frequency");

    if (mode.kind == CouplingMode::Kind::custom && pair.gamma1 > 0.0 &&
        pair.gamma2 > 0.0) {
        // Positivity of the collective damping matrix, in Γ0 units.
        const double g0 = 0.5 * (pair.gamma1 + pair.gamma2);
        const double n1 = pair.gamma1 / g0;
        const double n2 = pair.gamma2 / g0;
        if (mode.gamma12 * mode.gamma12 > n1 * n2 * (1.0 + 1e-12)) {
            std::ostringstream msg;
            msg << "unphysical custom gamma12: |" << mode.gamma12
                << "| exceeds sqrt(gamma1*gamma2) = " << std::sqrt(n1 * n2);
            problems.push_back(msg.str());
        }
    }

    return problems;
}

Configuration validate(AtomPair pair, Drive drive, CouplingMode mode) {
    const auto problems = check(pair, drive, mode);
    if (!problems.empty()) {
        std::string joined;
        for (const auto& p : problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        throw std::invalid_argument("invalid configuration: " + joined);
    }

    const double gamma0 = 0.5 * (pair.gamma1 + pair.gamma2);
    pair.gamma1 /= gamma0;
    pair.gamma2 /= gamma0;
    return Configuration{pair, drive, mode, gamma0};
}

}  // namespace twoatom
