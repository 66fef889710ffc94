#include "tqmem/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace tqm {

namespace {

double post_measurement_conditional_entropy(const TwoQubitState& rho,
                                            const ProjectiveQubitMeasurement& m) {
    return conditional_entropy(post_measurement_state(rho, m).state);
}

}  // namespace

ObservablePair::ObservablePair(ProjectiveQubitMeasurement q, ProjectiveQubitMeasurement r)
    : q_(std::move(q)), r_(std::move(r)),
      c_(0.5 * (1.0 + std::abs(q_.bloch().dot(r_.bloch())))) {}

ObservablePair ObservablePair::pauli_xz() {
    return {ProjectiveQubitMeasurement::sigma_x(), ProjectiveQubitMeasurement::sigma_z()};
}

double complementarity(const ObservablePair& pair) {
    return pair.complementarity();
}

double berta_bound(const BellDiagonalState& state, const ObservablePair& pair) {
    return -std::log2(pair.complementarity()) + conditional_entropy(to_density_matrix(state));
}

AdabiBound adabi_bound(const BellDiagonalState& state, const ObservablePair& pair) {
    const TwoQubitState rho = to_density_matrix(state);
    const double delta = mutual_information(rho) - (holevo(rho, pair.q()) + holevo(rho, pair.r()));
    return {berta_bound(state, pair) + std::max(0.0, delta), delta};
}

double key_rate_berta(const BellDiagonalState& state, const ObservablePair& pair) {
    const TwoQubitState rho = to_density_matrix(state);
    return -std::log2(pair.complementarity()) - post_measurement_conditional_entropy(rho, pair.q()) -
           post_measurement_conditional_entropy(rho, pair.r());
}

double key_rate_adabi(const BellDiagonalState& state, const ObservablePair& pair) {
    return key_rate_berta(state, pair) + std::max(0.0, adabi_bound(state, pair).delta);
}

BoundsSample evaluate_bounds(const BellDiagonalState& state, const ObservablePair& pair) {
    const TwoQubitState rho = to_density_matrix(state);
    const double incompatibility = -std::log2(pair.complementarity());

    BoundsSample out;
    out.s_ab = conditional_entropy(rho);
    out.i_ab = mutual_information(rho);
    out.s_qb = post_measurement_conditional_entropy(rho, pair.q());
    out.s_rb = post_measurement_conditional_entropy(rho, pair.r());
    out.i_qb = holevo(rho, pair.q());
    out.i_rb = holevo(rho, pair.r());
    out.delta = out.i_ab - (out.i_qb + out.i_rb);

    const double gain = std::max(0.0, out.delta);
    out.u_berta = incompatibility + out.s_ab;
    out.u_adabi = out.u_berta + gain;
    out.k_berta = incompatibility - out.s_qb - out.s_rb;
    out.k_adabi = out.k_berta + gain;
    return out;
}

BoundsSample bounds_at(const BellDiagonalState& state0, const ObservablePair& pair, double t,
                       const EnvironmentSpec& spec) {
    state0.validate();
    const double a = alpha(t, spec);
    BoundsSample out = evaluate_bounds(apply_memory_channel(state0, a, spec.kind), pair);
    out.t = t;
    out.alpha = a;
    return out;
}

}  // namespace tqm
