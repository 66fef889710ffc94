#pragma once

#include "tqmem/decoherence.hpp"
#include "tqmem/qstate.hpp"

#include <array>

namespace tqm {

/// Two-qubit state (I(x)I + sum_k c_k sigma_k (x) sigma_k) / 4.
///
/// Valid triples lie in the tetrahedron with vertices (-1,-1,-1), (-1,1,1),
/// (1,-1,1) and (1,1,-1).
struct BellDiagonalState {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    /// Eigenvalues (1+c1-c2+c3)/4, (1-c1+c2+c3)/4, (1+c1+c2-c3)/4,
    /// (1-c1-c2-c3)/4, belonging to Phi+, Phi-, Psi+ and Psi-.
    std::array<double, 4> spectrum() const;

    bool is_valid(double tol = 1e-12) const;
    /// Throws InvalidStateError outside the tetrahedron.
    void validate(double tol = 1e-12) const;

    friend bool operator==(const BellDiagonalState&, const BellDiagonalState&) = default;
};

TwoQubitState to_density_matrix(const BellDiagonalState& state);

/// Coefficients after the memory B has gone through the channel with
/// decoherence factor alpha: Fermionic (a c1, a c2, a^2 c3), Bosonic
/// (a c1, a c2, c3).
BellDiagonalState apply_memory_channel(const BellDiagonalState& state, double alpha,
                                       EnvironmentKind kind);

BellDiagonalState evolve_bell_diagonal(const BellDiagonalState& state, double t,
                                       const EnvironmentSpec& spec);

}  // namespace tqm
