#include "tqmem/decoherence.hpp"

#include "tqmem/errors.hpp"
#include "tqmem/specfun.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <string>

namespace tqm {

namespace {

constexpr double kIntegerTol = 1e-9;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

void check_times(std::span<const double> times) {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || !std::isfinite(times[i])) {
            throw DomainError("decoherence_trace: times must be finite and non-negative");
        }
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw DomainError("decoherence_trace: times must be strictly increasing");
        }
    }
}

}  // namespace

std::string_view to_string(EnvironmentKind kind) {
    return kind == EnvironmentKind::fermionic ? "fermionic" : "bosonic";
}

EnvironmentKind parse_environment_kind(std::string_view text) {
    if (text == "fermionic" || text == "f") {
        return EnvironmentKind::fermionic;
    }
    if (text == "bosonic" || text == "b") {
        return EnvironmentKind::bosonic;
    }
    throw ConfigError("env: expected 'fermionic' or 'bosonic', got '" + std::string(text) + "'");
}

void EnvironmentSpec::validate() const {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw ConfigError("s: Ohmicity must be a finite number > 0");
    }
    if (!std::isfinite(coupling)) {
        throw ConfigError("coupling: must be finite");
    }
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) {
        throw ConfigError("gamma0: cutoff must be a finite number > 0");
    }
    if (kind == EnvironmentKind::bosonic) {
        if (!(n_sc > 0.0) || !std::isfinite(n_sc)) {
            throw ConfigError("nsc: must be a finite number > 0");
        }
        if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
            throw ConfigError("epsilon: must be a finite number > 0");
        }
    }
}

double beta_fermionic(const EnvironmentSpec& spec) {
    if (spec.kind != EnvironmentKind::fermionic) {
        throw DomainError("beta_fermionic: environment is not Fermionic");
    }
    return -4.0 * std::numbers::pi * std::pow(spec.gamma0, -(spec.s + 1.0)) /
           specfun::gamma(0.5 * (spec.s + 1.0));
}

double beta_bosonic(const EnvironmentSpec& spec) {
    if (spec.kind != EnvironmentKind::bosonic) {
        throw DomainError("beta_bosonic: environment is not Bosonic");
    }
    const double delta = spec.conformal_dimension();
    const double nearest = std::round(delta);
    const double common = spec.n_sc * spec.n_sc * std::pow(spec.epsilon, 2.0 * (delta - 4.0));
    if (std::abs(delta - nearest) <= kIntegerTol) {
        const int n = static_cast<int>(nearest);
        if (n < 3) {
            throw DomainError("beta_bosonic: integer conformal dimension " + std::to_string(n) +
                              " < 3 has no factorial (Delta-3)!");
        }
        const double f = factorial(n - 3);
        return -common / (4.0 * std::numbers::pi * f * f * std::ldexp(1.0, 2 * n - 5));
    }
    const double pi = std::numbers::pi;
    return -common * specfun::gamma(3.0 - delta) * std::sin(pi * delta) /
           (4.0 * pi * pi * specfun::gamma(delta - 2.0) * std::pow(2.0, 2.0 * delta - 5.0));
}

double beta(const EnvironmentSpec& spec) {
    return spec.kind == EnvironmentKind::fermionic ? beta_fermionic(spec) : beta_bosonic(spec);
}

double i_s(double t, const EnvironmentSpec& spec) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("i_s: t must be finite and non-negative");
    }
    if (t == 0.0) {
        return 0.0;
    }
    const double gt = spec.gamma0 * t;
    const double z = -0.25 * gt * gt;
    double value;
    if (spec.s == 1.0) {
        value = 0.5 * gt * gt * specfun::hyp2f2_11_32_2(z);
    } else {
        const double a = 0.5 * (spec.s - 1.0);
        // 1 - 1F1 written as -(1F1 - 1) to keep digits at small t.
        value = -2.0 * std::pow(spec.gamma0, spec.s - 1.0) * specfun::gamma(a) *
                specfun::hyp1f1m1(a, 0.5, z);
    }
    if (value < 0.0 || !std::isfinite(value)) {
        throw NumericalError(t, "I_s evaluated to " + std::to_string(value) +
                                    " (expected a finite non-negative value)");
    }
    return value;
}

double alpha(double t, const EnvironmentSpec& spec) {
    const double b = spec.coupling;
    return std::exp(-2.0 * b * b * std::abs(beta(spec)) * i_s(t, spec));
}

QubitState apply_single_qubit_channel(const QubitState& rho0, double alpha, EnvironmentKind kind) {
    Eigen::Matrix2cd out;
    if (kind == EnvironmentKind::fermionic) {
        const double a2 = alpha * alpha;
        out(0, 0) = 0.5 * (1.0 + (2.0 * rho0(0, 0).real() - 1.0) * a2);
        out(1, 1) = 0.5 * (1.0 + (2.0 * rho0(1, 1).real() - 1.0) * a2);
    } else {
        out(0, 0) = rho0(0, 0);
        out(1, 1) = rho0(1, 1);
    }
    out(0, 1) = rho0(0, 1) * alpha;
    out(1, 0) = rho0(1, 0) * alpha;
    return QubitState(out);
}

QubitState evolve_single_qubit(const QubitState& rho0, double t, const EnvironmentSpec& spec) {
    return apply_single_qubit_channel(rho0, alpha(t, spec), spec.kind);
}

DecoherenceTrace decoherence_trace(std::span<const double> times, const EnvironmentSpec& spec) {
    spec.validate();
    check_times(times);
    DecoherenceTrace trace{{times.begin(), times.end()}, std::vector<double>(times.size())};
    const auto n = static_cast<std::ptrdiff_t>(times.size());
    std::vector<std::exception_ptr> errors(times.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            trace.alpha[static_cast<std::size_t>(i)] = alpha(times[static_cast<std::size_t>(i)], spec);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return trace;
}

DecoherenceTrace decoherence_trace_serial(std::span<const double> times, const EnvironmentSpec& spec) {
    spec.validate();
    check_times(times);
    DecoherenceTrace trace{{times.begin(), times.end()}, {}};
    trace.alpha.reserve(times.size());
    for (const double t : times) {
        trace.alpha.push_back(alpha(t, spec));
    }
    return trace;
}

}  // namespace tqm
