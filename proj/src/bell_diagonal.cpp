#include "tqmem/bell_diagonal.hpp"

#include "tqmem/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tqm {

std::array<double, 4> BellDiagonalState::spectrum() const {
    return {0.25 * (1.0 + c1 - c2 + c3), 0.25 * (1.0 - c1 + c2 + c3),
            0.25 * (1.0 + c1 + c2 - c3), 0.25 * (1.0 - c1 - c2 - c3)};
}

bool BellDiagonalState::is_valid(double tol) const {
    if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
        return false;
    }
    const auto lambda = spectrum();
    return std::all_of(lambda.begin(), lambda.end(),
                       [tol](double l) { return l >= -tol && l <= 1.0 + tol; });
}

void BellDiagonalState::validate(double tol) const {
    if (!is_valid(tol)) {
        std::ostringstream os;
        os << "Bell-diagonal coefficients (" << c1 << ", " << c2 << ", " << c3
           << ") lie outside the tetrahedron of valid states";
        throw InvalidStateError(os.str());
    }
}

TwoQubitState to_density_matrix(const BellDiagonalState& state) {
    state.validate();
    const double c[3] = {state.c1, state.c2, state.c3};
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    for (int k = 0; k < 3; ++k) {
        const Eigen::Matrix2cd& s = pauli(k);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                m.block<2, 2>(2 * i, 2 * j) += c[k] * s(i, j) * s;
            }
        }
    }
    return TwoQubitState(0.25 * m);
}

BellDiagonalState apply_memory_channel(const BellDiagonalState& state, double alpha,
                                       EnvironmentKind kind) {
    const double c3_factor = kind == EnvironmentKind::fermionic ? alpha * alpha : 1.0;
    return {state.c1 * alpha, state.c2 * alpha, state.c3 * c3_factor};
}

BellDiagonalState evolve_bell_diagonal(const BellDiagonalState& state, double t,
                                       const EnvironmentSpec& spec) {
    state.validate();
    return apply_memory_channel(state, alpha(t, spec), spec.kind);
}

}  // namespace tqm
