#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>

namespace tqm {

using cplx = std::complex<double>;

// Validation tolerances for density matrices.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kNegativeEigenTol = 1e-10;

/// A validated density matrix on C^N (N = 2 for one qubit, 4 for two).
///
/// Construction checks Hermiticity and unit trace (1e-12) and positivity
/// (eigenvalues >= -1e-10), and stores the exactly Hermitian part. Values
/// are immutable afterwards. Two-qubit indices follow |a b> -> 2a + b with
/// subsystem A as the left tensor factor.
template <int N>
class DensityMatrix {
    static_assert(N == 2 || N == 4, "only one- and two-qubit states are supported");

public:
    using Matrix = Eigen::Matrix<cplx, N, N>;
    using Spectrum = Eigen::Matrix<double, N, 1>;

    /// Throws InvalidStateError if m is not a density matrix.
    explicit DensityMatrix(const Matrix& m);

    static DensityMatrix maximally_mixed();

    const Matrix& matrix() const noexcept { return m_; }
    cplx operator()(int row, int col) const { return m_(row, col); }

    /// Eigenvalues in ascending order.
    Spectrum eigenvalues() const;

private:
    Matrix m_;
};

using QubitState = DensityMatrix<2>;
using TwoQubitState = DensityMatrix<4>;

extern template class DensityMatrix<2>;
extern template class DensityMatrix<4>;

/// Projective qubit measurement with projectors P+- = (I +- n.sigma)/2.
class ProjectiveQubitMeasurement {
public:
    enum class Outcome { plus = 0, minus = 1 };

    /// Throws DomainError unless |n| = 1 within 1e-12.
    explicit ProjectiveQubitMeasurement(const Eigen::Vector3d& bloch);

    static ProjectiveQubitMeasurement sigma_x();
    static ProjectiveQubitMeasurement sigma_y();
    static ProjectiveQubitMeasurement sigma_z();

    const Eigen::Vector3d& bloch() const noexcept { return n_; }
    Eigen::Matrix2cd projector(Outcome outcome) const;

private:
    Eigen::Vector3d n_;
};

/// Pauli matrices sigma_1..3 (k = 0, 1, 2).
const Eigen::Matrix2cd& pauli(int k);

/// Shannon entropy in bits of (p, 1-p).
double binary_entropy(double p);

/// -sum lambda log2 lambda over eigenvalues; values in [-1e-10, 0) count
/// as zero.
template <int N>
double von_neumann_entropy(const DensityMatrix<N>& rho);

/// Traces out subsystem A (left factor), leaving the state of B.
QubitState partial_trace_a(const TwoQubitState& rho);
/// Traces out subsystem B (right factor), leaving the state of A.
QubitState partial_trace_b(const TwoQubitState& rho);

/// S(A|B) = S(rho_AB) - S(rho_B), in bits.
double conditional_entropy(const TwoQubitState& rho_ab);

/// I(A;B) = S(A) + S(B) - S(AB), in bits.
double mutual_information(const TwoQubitState& rho_ab);

struct MeasurementBranch {
    double probability = 0.0;
    // Bob's conditioned state; empty when the probability is below 1e-14.
    std::optional<QubitState> state_b;
};

struct PostMeasurement {
    TwoQubitState state;  // sum_x (P_x (x) I) rho (P_x (x) I)
    std::array<MeasurementBranch, 2> branches;  // indexed by Outcome
};

inline constexpr double kNegligibleProbability = 1e-14;

/// Dephases subsystem A in the eigenbasis of the measurement.
PostMeasurement post_measurement_state(const TwoQubitState& rho_ab,
                                       const ProjectiveQubitMeasurement& m);

/// Holevo quantity I(X;B) = S(rho_B) - sum_x p_x S(rho_x^B), in bits.
double holevo(const TwoQubitState& rho_ab, const ProjectiveQubitMeasurement& m);

}  // namespace tqm
