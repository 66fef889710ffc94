#pragma once

#include "tqmem/bell_diagonal.hpp"
#include "tqmem/bounds.hpp"
#include "tqmem/decoherence.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tqm {

enum class OutputFormat { csv, json };

std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

struct ExperimentConfig {
    EnvironmentSpec environment;
    BellDiagonalState initial_state;
    ObservablePair pair = ObservablePair::pauli_xz();
    double t_max = 20.0;
    int steps = 400;
    OutputFormat format = OutputFormat::csv;
    std::string output_path = "-";  // "-" is standard output

    /// Throws ConfigError with the offending field in the message.
    void validate() const;
};

/// Uniform grid t_i = t_max * i / (steps - 1); the last point is t_max exactly.
std::vector<double> time_grid(double t_max, int steps);

/// Bounds at every grid time, in time order. Samples are evaluated in
/// parallel (OpenMP); the result is bit-identical to run_sweep_serial.
/// Numerical failures are rethrown as NumericalError for the earliest
/// failing t.
std::vector<BoundsSample> run_sweep(const ExperimentConfig& config);

/// Single-threaded reference implementation of run_sweep.
std::vector<BoundsSample> run_sweep_serial(const ExperimentConfig& config);

struct Preset {
    std::string name;
    std::string description;
    ExperimentConfig config;
};

/// fig3-{f,b}-{sub,ohmic,super} and fig4-{f,b}-{sub,ohmic,super}.
const std::vector<Preset>& presets();
std::optional<ExperimentConfig> find_preset(std::string_view name);

}  // namespace tqm
