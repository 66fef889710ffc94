#include "tqmem/sweep.hpp"

#include "tqmem/errors.hpp"

#include <cmath>
#include <exception>
#include <string>

namespace tqm {

namespace {

BoundsSample sample_at(const ExperimentConfig& config, double t) {
    try {
        return bounds_at(config.initial_state, config.pair, t, config.environment);
    } catch (const NumericalError&) {
        throw;
    } catch (const std::exception& e) {
        throw NumericalError(t, e.what());
    }
}

}  // namespace

std::string_view to_string(OutputFormat format) {
    return format == OutputFormat::csv ? "csv" : "json";
}

OutputFormat parse_output_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::csv;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    throw ConfigError("format: expected 'csv' or 'json', got '" + std::string(text) + "'");
}

void ExperimentConfig::validate() const {
    environment.validate();
    if (!initial_state.is_valid()) {
        throw ConfigError("c1/c2/c3: (" + std::to_string(initial_state.c1) + ", " +
                          std::to_string(initial_state.c2) + ", " +
                          std::to_string(initial_state.c3) +
                          ") is outside the Bell-diagonal tetrahedron");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw ConfigError("t-max: must be a finite number > 0");
    }
    if (steps < 2) {
        throw ConfigError("steps: must be >= 2");
    }
    if (output_path.empty()) {
        throw ConfigError("out: output path must not be empty");
    }
}

std::vector<double> time_grid(double t_max, int steps) {
    if (steps < 2) {
        throw ConfigError("steps: must be >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(steps));
    const double last = static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] = (static_cast<double>(i) / last) * t_max;
    }
    return grid;
}

std::vector<BoundsSample> run_sweep(const ExperimentConfig& config) {
    config.validate();
    const std::vector<double> times = time_grid(config.t_max, config.steps);
    std::vector<BoundsSample> samples(times.size());
    std::vector<std::exception_ptr> errors(times.size());
    const auto n = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            samples[idx] = sample_at(config, times[idx]);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return samples;
}

std::vector<BoundsSample> run_sweep_serial(const ExperimentConfig& config) {
    config.validate();
    std::vector<BoundsSample> samples;
    samples.reserve(static_cast<std::size_t>(config.steps));
    for (const double t : time_grid(config.t_max, config.steps)) {
        samples.push_back(sample_at(config, t));
    }
    return samples;
}

}  // namespace tqm
