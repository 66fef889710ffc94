#pragma once

#include "tqmem/bell_diagonal.hpp"
#include "tqmem/decoherence.hpp"
#include "tqmem/qstate.hpp"

namespace tqm {

/// The two observables Alice chooses between, with their complementarity
/// c = max |<q_i|r_j>|^2 = (1 + |n_q . n_r|) / 2.
class ObservablePair {
public:
    ObservablePair(ProjectiveQubitMeasurement q, ProjectiveQubitMeasurement r);

    /// (sigma_x, sigma_z), a mutually unbiased pair with c = 1/2.
    static ObservablePair pauli_xz();

    const ProjectiveQubitMeasurement& q() const noexcept { return q_; }
    const ProjectiveQubitMeasurement& r() const noexcept { return r_; }
    double complementarity() const noexcept { return c_; }

private:
    ProjectiveQubitMeasurement q_;
    ProjectiveQubitMeasurement r_;
    double c_;
};

double complementarity(const ObservablePair& pair);

/// Berta lower bound log2(1/c) + S(A|B).
double berta_bound(const BellDiagonalState& state, const ObservablePair& pair);

struct AdabiBound {
    double u_adabi;
    double delta;  // I(A;B) - I(Q;B) - I(R;B)
};

/// Adabi lower bound U_B + max{0, delta}.
AdabiBound adabi_bound(const BellDiagonalState& state, const ObservablePair& pair);

/// Secret-key-rate lower bound log2(1/c) - S(Q|B) - S(R|B). Not clamped.
double key_rate_berta(const BellDiagonalState& state, const ObservablePair& pair);

/// key_rate_berta + max{0, delta}.
double key_rate_adabi(const BellDiagonalState& state, const ObservablePair& pair);

/// Everything recorded for one time point. Entropies in bits, t in 1/gamma0.
struct BoundsSample {
    double t = 0.0;
    double alpha = 1.0;
    double u_berta = 0.0;
    double u_adabi = 0.0;
    double delta = 0.0;
    double k_berta = 0.0;
    double k_adabi = 0.0;
    double s_qb = 0.0;  // S(Q|B)
    double s_rb = 0.0;  // S(R|B)
    double s_ab = 0.0;  // S(A|B)
    double i_ab = 0.0;  // I(A;B)
    double i_qb = 0.0;  // I(Q;B), Holevo
    double i_rb = 0.0;  // I(R;B), Holevo

    friend bool operator==(const BoundsSample&, const BoundsSample&) = default;
};

/// All bound quantities for a fixed state; t and alpha are left at 0 and 1.
BoundsSample evaluate_bounds(const BellDiagonalState& state, const ObservablePair& pair);

/// Evolves state0 to time t and evaluates every bound on the result.
BoundsSample bounds_at(const BellDiagonalState& state0, const ObservablePair& pair, double t,
                       const EnvironmentSpec& spec);

}  // namespace tqm
