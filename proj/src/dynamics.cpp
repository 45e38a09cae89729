#include "twoatom/dynamics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "twoatom/operators.hpp"

namespace twoatom {

namespace {

using Matrix4 = Eigen::Matrix4cd;
const std::complex<double> kImag(0.0, 1.0);

// Column-major vectorization: vec(AρB) = (Bᵀ ⊗ A) vec(ρ).
Superoperator left_right(const Matrix4& a, const Matrix4& b) {
    return Eigen::kroneckerProduct(b.transpose(), a);
}

Superoperator left_only(const Matrix4& a) {
    return left_right(a, ops::identity());
}

Superoperator right_only(const Matrix4& b) {
    return left_right(ops::identity(), b);
}

std::string describe(const AtomPair& pair, const Drive& drive,
                     const CollectiveParams& collective) {
    std::ostringstream out;
    out << "gamma1=" << pair.gamma1 << " gamma2=" << pair.gamma2
        << " delta=" << pair.delta << " separation=" << pair.separation
        << " rabi=" << drive.rabi << " detuning_l=" << drive.detuning_l
        << " omega12=" << collective.omega12
        << " gamma12=" << collective.gamma12;
    return out.str();
}

}  // namespace

Eigen::Matrix4cd build_hamiltonian(const AtomPair& pair, const Drive& drive,
                                   const CollectiveParams& collective) {
    const double d1 = laser_detuning_1(pair, drive);
    const double d2 = laser_detuning_2(pair, drive);
    const std::complex<double> rabi1 = local_rabi_1(pair, drive);
    const std::complex<double> rabi2 = local_rabi_2(pair, drive);

    Matrix4 h = d1 * ops::z1() + d2 * ops::z2();
    h += collective.omega12 *
         (ops::raise1() * ops::lower2() + ops::raise2() * ops::lower1());
    h += 0.5 * (rabi1 * ops::raise1() + std::conj(rabi1) * ops::lower1() +
                rabi2 * ops::raise2() + std::conj(rabi2) * ops::lower2());
    return h;
}

Generator build_generator(const AtomPair& pair, const Drive& drive,
                          const CollectiveParams& collective) {
    Generator gen;
    gen.hamiltonian = build_hamiltonian(pair, drive, collective);
    gen.context = describe(pair, drive, collective);

    Superoperator liouvillian =
        -kImag * (left_only(gen.hamiltonian) - right_only(gen.hamiltonian));

    const Matrix4* lower[2] = {&ops::lower1(), &ops::lower2()};
    const Matrix4* raise[2] = {&ops::raise1(), &ops::raise2()};
    const double rates[2][2] = {{pair.gamma1, collective.gamma12},
                                {collective.gamma12, pair.gamma2}};

    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double rate = rates[i][j];
            if (rate == 0.0) continue;
            const Matrix4 jump = (*raise[j]) * (*lower[i]);  // Sj+ Si-
            liouvillian += rate * (left_right(*lower[i], *raise[j]) -
                                   0.5 * left_only(jump) -
                                   0.5 * right_only(jump));
        }
    }

    gen.matrix = liouvillian;
    return gen;
}

StateVector vectorize(const DensityMatrix& rho) {
    return Eigen::Map<const StateVector>(rho.data());
}

DensityMatrix devectorize(const StateVector& v) {
    return Eigen::Map<const DensityMatrix>(v.data());
}

DensityMatrix apply_generator(const Generator& gen, const DensityMatrix& rho) {
    return devectorize(gen.matrix * vectorize(rho));
}

DensityMatrix steady_state(const Generator& gen) {
    // Replace the first row with the trace functional and solve L v = e0.
    Superoperator constrained = gen.matrix;
    constrained.row(0).setZero();
    for (int i = 0; i < 4; ++i) constrained(0, 5 * i) = 1.0;

    StateVector rhs = StateVector::Zero();
    rhs(0) = 1.0;

    const StateVector v = constrained.partialPivLu().solve(rhs);

    const bool finite = v.allFinite();
    const double residual =
        finite ? (gen.matrix * v).cwiseAbs().maxCoeff()
               : std::numeric_limits<double>::infinity();
    const double constraint_residual =
        finite ? (constrained * v - rhs).cwiseAbs().maxCoeff()
               : std::numeric_limits<double>::infinity();
    if (!finite || residual > 1e-10 || constraint_residual > 1e-10) {
        throw std::runtime_error(
            "steady state solve is singular (degenerate stationary manifold) "
            "for " +
            gen.context);
    }

    return devectorize(v);
}

DensityMatrix evolve(const Generator& gen, const DensityMatrix& rho0,
                     double time) {
    if (time < 0.0)
        throw std::invalid_argument("evolution time must be non-negative");
    if (time == 0.0) return rho0;
    const Superoperator propagator = (gen.matrix * time).exp();
    return devectorize(propagator * vectorize(rho0));
}

DensityChecks density_checks(const DensityMatrix& rho) {
    DensityChecks checks;
    checks.hermiticity_error =
        (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
    checks.trace_error = std::abs(rho.trace() - std::complex<double>(1.0));

    const Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(
        0.5 * (rho + rho.adjoint().eval()));
    checks.min_eigenvalue = solver.eigenvalues().minCoeff();
    return checks;
}

}  // namespace twoatom
