#include "tqmem/qstate.hpp"

#include "tqmem/errors.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace tqm {

namespace {

template <int N>
void check_density_matrix(const Eigen::Matrix<cplx, N, N>& m) {
    if (!m.allFinite()) {
        throw InvalidStateError("density matrix has non-finite entries");
    }
    const double asymmetry = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > kHermitianTol) {
        std::ostringstream os;
        os << "density matrix is not Hermitian (max |rho - rho^dagger| = " << asymmetry << ")";
        throw InvalidStateError(os.str());
    }
    const cplx trace = m.trace();
    if (std::abs(trace - cplx{1.0, 0.0}) > kTraceTol) {
        std::ostringstream os;
        os << "density matrix trace is " << trace.real() << ", expected 1";
        throw InvalidStateError(os.str());
    }
}

template <int N>
Eigen::Matrix<double, N, 1> hermitian_eigenvalues(const Eigen::Matrix<cplx, N, N>& m) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cplx, N, N>> solver(
        m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw InvalidStateError("Hermitian eigendecomposition failed");
    }
    return solver.eigenvalues();
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

double entropy_term(double lambda) {
    if (lambda < -kNegativeEigenTol) {
        throw InvalidStateError("eigenvalue " + std::to_string(lambda) +
                                " below the positivity tolerance");
    }
    if (lambda <= 0.0) {
        return 0.0;
    }
    return -lambda * std::log2(lambda);
}

}  // namespace

template <int N>
DensityMatrix<N>::DensityMatrix(const Matrix& m) {
    check_density_matrix<N>(m);
    m_ = (m + m.adjoint()) * 0.5;
    const Spectrum spectrum = hermitian_eigenvalues<N>(m_);
    if (spectrum.minCoeff() < -kNegativeEigenTol) {
        std::ostringstream os;
        os << "density matrix is not positive semidefinite (min eigenvalue "
           << spectrum.minCoeff() << ")";
        throw InvalidStateError(os.str());
    }
}

template <int N>
DensityMatrix<N> DensityMatrix<N>::maximally_mixed() {
    return DensityMatrix(Matrix::Identity() / static_cast<double>(N));
}

template <int N>
typename DensityMatrix<N>::Spectrum DensityMatrix<N>::eigenvalues() const {
    return hermitian_eigenvalues<N>(m_);
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

const Eigen::Matrix2cd& pauli(int k) {
    static const std::array<Eigen::Matrix2cd, 3> sigmas = [] {
        std::array<Eigen::Matrix2cd, 3> s;
        s[0] << 0.0, 1.0, 1.0, 0.0;
        s[1] << 0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0;
        s[2] << 1.0, 0.0, 0.0, -1.0;
        return s;
    }();
    if (k < 0 || k > 2) {
        throw DomainError("pauli: index must be 0, 1 or 2");
    }
    return sigmas[static_cast<std::size_t>(k)];
}

ProjectiveQubitMeasurement::ProjectiveQubitMeasurement(const Eigen::Vector3d& bloch) : n_(bloch) {
    if (!bloch.allFinite() || std::abs(bloch.norm() - 1.0) > 1e-12) {
        throw DomainError("measurement Bloch vector must have unit norm");
    }
}

ProjectiveQubitMeasurement ProjectiveQubitMeasurement::sigma_x() {
    return ProjectiveQubitMeasurement(Eigen::Vector3d::UnitX());
}

ProjectiveQubitMeasurement ProjectiveQubitMeasurement::sigma_y() {
    return ProjectiveQubitMeasurement(Eigen::Vector3d::UnitY());
}

ProjectiveQubitMeasurement ProjectiveQubitMeasurement::sigma_z() {
    return ProjectiveQubitMeasurement(Eigen::Vector3d::UnitZ());
}

Eigen::Matrix2cd ProjectiveQubitMeasurement::projector(Outcome outcome) const {
    const double sign = outcome == Outcome::plus ? 1.0 : -1.0;
    Eigen::Matrix2cd n_sigma = Eigen::Matrix2cd::Zero();
    for (int k = 0; k < 3; ++k) {
        n_sigma += n_(k) * pauli(k);
    }
    return 0.5 * (Eigen::Matrix2cd::Identity() + sign * n_sigma);
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

template <int N>
double von_neumann_entropy(const DensityMatrix<N>& rho) {
    const auto spectrum = rho.eigenvalues();
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
        s += entropy_term(spectrum(i));
    }
    return s;
}

template double von_neumann_entropy<2>(const DensityMatrix<2>&);
template double von_neumann_entropy<4>(const DensityMatrix<4>&);

QubitState partial_trace_a(const TwoQubitState& rho) {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int b = 0; b < 2; ++b) {
        for (int bp = 0; bp < 2; ++bp) {
            out(b, bp) = rho(b, bp) + rho(2 + b, 2 + bp);
        }
    }
    return QubitState(out);
}

QubitState partial_trace_b(const TwoQubitState& rho) {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int ap = 0; ap < 2; ++ap) {
            out(a, ap) = rho(2 * a, 2 * ap) + rho(2 * a + 1, 2 * ap + 1);
        }
    }
    return QubitState(out);
}

double conditional_entropy(const TwoQubitState& rho_ab) {
    return von_neumann_entropy(rho_ab) - von_neumann_entropy(partial_trace_a(rho_ab));
}

double mutual_information(const TwoQubitState& rho_ab) {
    return von_neumann_entropy(partial_trace_b(rho_ab)) +
           von_neumann_entropy(partial_trace_a(rho_ab)) - von_neumann_entropy(rho_ab);
}

PostMeasurement post_measurement_state(const TwoQubitState& rho_ab,
                                       const ProjectiveQubitMeasurement& m) {
    using Outcome = ProjectiveQubitMeasurement::Outcome;
    Eigen::Matrix4cd dephased = Eigen::Matrix4cd::Zero();
    std::array<MeasurementBranch, 2> branches;
    for (const Outcome outcome : {Outcome::plus, Outcome::minus}) {
        const Eigen::Matrix4cd projector =
            kron(m.projector(outcome), Eigen::Matrix2cd::Identity());
        const Eigen::Matrix4cd raw = projector * rho_ab.matrix() * projector;
        const Eigen::Matrix4cd branch = 0.5 * (raw + raw.adjoint());
        dephased += branch;

        auto& out = branches[static_cast<std::size_t>(outcome)];
        out.probability = branch.trace().real();
        if (out.probability >= kNegligibleProbability) {
            Eigen::Matrix2cd reduced;
            for (int b = 0; b < 2; ++b) {
                for (int bp = 0; bp < 2; ++bp) {
                    reduced(b, bp) = branch(b, bp) + branch(2 + b, 2 + bp);
                }
            }
            out.state_b.emplace(reduced / reduced.trace().real());
        }
    }
    return PostMeasurement{TwoQubitState(dephased), branches};
}

double holevo(const TwoQubitState& rho_ab, const ProjectiveQubitMeasurement& m) {
    const PostMeasurement post = post_measurement_state(rho_ab, m);
    double chi = von_neumann_entropy(partial_trace_a(rho_ab));
    for (const auto& branch : post.branches) {
        if (branch.state_b) {
            chi -= branch.probability * von_neumann_entropy(*branch.state_b);
        }
    }
    return chi;
}

}  // namespace tqm
