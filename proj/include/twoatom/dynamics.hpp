#pragma once

#include <string>

#include <Eigen/Dense>

#include "twoatom/coupling.hpp"
#include "twoatom/model.hpp"

namespace twoatom {

// 4x4 density matrix of the pair in the product basis (gg, eg, ge, ee).
using DensityMatrix = Eigen::Matrix4cd;

using Superoperator = Eigen::Matrix<std::complex<double>, 16, 16>;
using StateVector = Eigen::Matrix<std::complex<double>, 16, 1>;

// Liouvillian acting on the column-vectorized density matrix, time unit
// 1/Γ0, together with the rotating-frame Hamiltonian it was built from.
struct Generator {
    Superoperator matrix;
    Eigen::Matrix4cd hamiltonian;
    std::string context;  // parameter echo for diagnostics
};

// Rotating-frame Hamiltonian (units ħΓ0):
//   H = Δ1 S1z + Δ2 S2z + Ω12 (S1+S2- + S2+S1-)
//     + (Ω_L1 S1+ + Ω_L2 S2+ + h.c.)/2
Eigen::Matrix4cd build_hamiltonian(const AtomPair& pair, const Drive& drive,
                                   const CollectiveParams& collective);

// Vectorized form of
//   dρ/dt = −i[H,ρ] + Σ_{i,j} Γ_ij (Si- ρ Sj+ − {Sj+ Si-, ρ}/2)
// with Γ11 = γ1, Γ22 = γ2, Γ12 = Γ21 = gamma12.
Generator build_generator(const AtomPair& pair, const Drive& drive,
                          const CollectiveParams& collective);

// dρ/dt for a given ρ.
DensityMatrix apply_generator(const Generator& gen, const DensityMatrix& rho);

// Null vector of the generator with unit trace, via a row-replaced dense LU
// solve.  Throws std::runtime_error naming the parameter set when the
// constrained system is singular (degenerate stationary manifold).
DensityMatrix steady_state(const Generator& gen);

// ρ(t) from the matrix exponential of the generator (scaling-and-squaring).
DensityMatrix evolve(const Generator& gen, const DensityMatrix& rho0,
                     double time);

StateVector vectorize(const DensityMatrix& rho);
DensityMatrix devectorize(const StateVector& v);

struct DensityChecks {
    double hermiticity_error;  // max |ρ − ρ†|
    double trace_error;        // |Tr ρ − 1|
    double min_eigenvalue;
};

DensityChecks density_checks(const DensityMatrix& rho);

}  // namespace twoatom
