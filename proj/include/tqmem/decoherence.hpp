#pragma once

#include "tqmem/qstate.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace tqm {

enum class EnvironmentKind { fermionic, bosonic };

std::string_view to_string(EnvironmentKind kind);
/// Accepts "fermionic"/"bosonic" (also "f"/"b"); throws ConfigError otherwise.
EnvironmentKind parse_environment_kind(std::string_view text);

/// Ohmic-like environment coupled to the topological quantum memory.
///
/// Times are measured in units of 1/gamma0. n_sc (degrees of freedom of
/// the dual CFT) and epsilon (UV length cutoff) only enter the Bosonic
/// coefficient.
struct EnvironmentSpec {
    EnvironmentKind kind = EnvironmentKind::fermionic;
    double s = 1.0;         // Ohmicity exponent, J(w) ~ w^s
    double coupling = 0.1;  // B
    double gamma0 = 1.0;    // frequency cutoff
    double n_sc = 1.0;
    double epsilon = 1.0;

    /// Throws ConfigError naming the first invalid field.
    void validate() const;

    /// Conformal dimension (s + 4) / 2.
    double conformal_dimension() const { return 0.5 * (s + 4.0); }
};

double beta_fermionic(const EnvironmentSpec& spec);
double beta_bosonic(const EnvironmentSpec& spec);
/// beta_fermionic or beta_bosonic according to spec.kind.
double beta(const EnvironmentSpec& spec);

/// The time integral I_s(t) that controls decoherence. s == 1 is taken as
/// the Ohmic branch only when it compares equal to 1.
double i_s(double t, const EnvironmentSpec& spec);

/// Decoherence factor exp(-2 B^2 |beta| I_s(t)).
double alpha(double t, const EnvironmentSpec& spec);

/// Single-qubit channel for a given decoherence factor.
QubitState apply_single_qubit_channel(const QubitState& rho0, double alpha, EnvironmentKind kind);

/// Reduced state of one topological qubit after time t.
QubitState evolve_single_qubit(const QubitState& rho0, double t, const EnvironmentSpec& spec);

struct DecoherenceTrace {
    std::vector<double> times;
    std::vector<double> alpha;
};

/// alpha(t) on the given strictly increasing, non-negative time grid.
/// Parallel over time points with OpenMP.
DecoherenceTrace decoherence_trace(std::span<const double> times, const EnvironmentSpec& spec);

/// Single-threaded reference for decoherence_trace.
DecoherenceTrace decoherence_trace_serial(std::span<const double> times, const EnvironmentSpec& spec);

}  // namespace tqm
