#include "tqmem/specfun.hpp"

#include "tqmem/errors.hpp"
#include "tqmem/summation.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace tqm::specfun {

namespace {

// Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Largest x with finite Gamma(x) in double precision.
constexpr double kGammaOverflowArg = 171.62437695630271;

// sin(pi x) with exact argument reduction to [-1/2, 1/2].
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) {
        r -= 2.0;
    } else if (r < -1.0) {
        r += 2.0;
    }
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return std::sin(std::numbers::pi * r);
}

// Gamma(x) for x >= 1/2.
double gamma_lanczos(double x) {
    const double xm1 = x - 1.0;
    double series = kLanczosCoeffs[0];
    for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
        series += kLanczosCoeffs[k] / (xm1 + static_cast<double>(k));
    }
    const double t = xm1 + kLanczosG + 0.5;
    // t^(x-1/2) split in two halves so that neither factor overflows early.
    const double half_power = std::pow(t, 0.5 * (xm1 + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * series * half_power *
           (half_power * std::exp(-t));
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

[[noreturn]] void throw_budget(const char* fn, double z, int terms) {
    throw ConvergenceError(std::string(fn) + ": no convergence for z=" +
                           std::to_string(z) + " within " +
                           std::to_string(terms) + " terms");
}

// Sum of 1F1(a;b;z) terms starting at k = first (0 or 1), compensated.
double sum_1f1(double a, double b, double z, int first, const SeriesControl& ctl) {
    NeumaierSum sum;
    if (first == 0) {
        sum += 1.0;
    }
    double term = 1.0;
    for (int k = 0; k < ctl.max_terms; ++k) {
        const double kk = static_cast<double>(k);
        const double ratio = (a + kk) / (b + kk) * z / (kk + 1.0);
        term *= ratio;
        if (term == 0.0) {
            return sum.value();
        }
        sum += term;
        const double next_ratio = std::abs((a + kk + 1.0) / (b + kk + 1.0) * z / (kk + 2.0));
        if (next_ratio < 1.0 &&
            std::abs(term) <= ctl.rel_tol * std::abs(sum.value()) * (1.0 - next_ratio)) {
            return sum.value();
        }
    }
    throw_budget("hyp1f1", z, ctl.max_terms);
}

// e^{-w} * 1F1(a;b;w) for w > 0. Terms are rescaled by exact powers of two
// whenever they grow large so that w beyond ~709 stays representable.
double scaled_kummer_1f1(double a, double b, double w, const SeriesControl& ctl) {
    constexpr int kRescaleExp = 900;
    constexpr double kRescaleAt = 0x1p900;
    int scale = 0;  // true sum = sum * 2^scale
    const auto finish = [&](const NeumaierSum& sum) {
        return sum.value() * std::exp(-w + static_cast<double>(scale) * std::numbers::ln2);
    };
    NeumaierSum sum;
    sum += 1.0;
    double term = 1.0;
    for (int k = 0; k < ctl.max_terms; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) / (b + kk) * w / (kk + 1.0);
        if (term == 0.0) {
            return finish(sum);
        }
        sum += term;
        if (std::abs(term) > kRescaleAt) {
            const double partial = sum.value();
            term = std::ldexp(term, -kRescaleExp);
            sum = NeumaierSum{};
            sum += std::ldexp(partial, -kRescaleExp);
            scale += kRescaleExp;
        }
        const double next_ratio = std::abs((a + kk + 1.0) / (b + kk + 1.0) * w / (kk + 2.0));
        if (next_ratio < 1.0 &&
            std::abs(term) <= ctl.rel_tol * std::abs(sum.value()) * (1.0 - next_ratio)) {
            return finish(sum);
        }
    }
    throw_budget("hyp1f1", -w, ctl.max_terms);
}

void check_1f1_args(double b, double z) {
    if (is_nonpositive_integer(b)) {
        throw DomainError("hyp1f1: b=" + std::to_string(b) + " is a non-positive integer");
    }
    if (!std::isfinite(z)) {
        throw DomainError("hyp1f1: z must be finite");
    }
}

double sum_2f2_direct(double z, const SeriesControl& ctl) {
    NeumaierSum sum;
    sum += 1.0;
    double term = 1.0;
    for (int k = 0; k < ctl.max_terms; ++k) {
        const double kk = static_cast<double>(k);
        const double ratio = z * (kk + 1.0) / ((kk + 1.5) * (kk + 2.0));
        term *= ratio;
        sum += term;
        const double next_ratio = std::abs(z * (kk + 2.0) / ((kk + 2.5) * (kk + 3.0)));
        if (next_ratio < 1.0 &&
            std::abs(term) <= ctl.rel_tol * std::abs(sum.value()) * (1.0 - next_ratio)) {
            return sum.value();
        }
    }
    throw_budget("hyp2f2_11_32_2", z, ctl.max_terms);
}

// 2F2({1,1};{3/2,2};-w) as a Poisson(w) expectation of odd harmonic numbers.
// Weights are Poisson probabilities relative to the mode and normalised by
// their own sum.
double sum_2f2_poisson(double w, const SeriesControl& ctl) {
    const double mode = std::floor(w);
    const double negligible = 1e-3 * ctl.rel_tol;

    std::vector<double> below;  // u_{mode-1}, u_{mode-2}, ...
    double u = 1.0;
    for (double j = mode; j > 0.0; j -= 1.0) {
        u *= j / w;
        below.push_back(u);
        if (u <= negligible * (1.0 - (j - 1.0) / w)) {
            break;
        }
    }
    if (static_cast<double>(below.size()) >= ctl.max_terms) {
        throw_budget("hyp2f2_11_32_2", -w, ctl.max_terms);
    }

    const double lowest = mode - static_cast<double>(below.size());
    NeumaierSum odd_harmonic;  // O_j = sum_{k<j} 1/(2k+1)
    for (double k = 0.0; k < lowest; k += 1.0) {
        odd_harmonic += 1.0 / (2.0 * k + 1.0);
    }

    NeumaierSum numerator;
    NeumaierSum denominator;
    int terms = static_cast<int>(below.size());
    double j = lowest;
    for (auto it = below.rbegin(); it != below.rend(); ++it, j += 1.0) {
        numerator += *it * odd_harmonic.value();
        denominator += *it;
        odd_harmonic += 1.0 / (2.0 * j + 1.0);
    }

    u = 1.0;
    for (; terms < ctl.max_terms; ++terms, j += 1.0) {
        if (j > mode) {
            u *= w / j;
        }
        const double contribution = u * odd_harmonic.value();
        numerator += contribution;
        denominator += u;
        odd_harmonic += 1.0 / (2.0 * j + 1.0);
        const double next_ratio = w / (j + 1.0);
        if (j > mode && next_ratio < 1.0 &&
            contribution <= ctl.rel_tol * numerator.value() * (1.0 - next_ratio)) {
            return numerator.value() / denominator.value() / w;
        }
    }
    throw_budget("hyp2f2_11_32_2", -w, ctl.max_terms);
}

}  // namespace

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0)) {
        throw DomainError("SeriesControl: rel_tol must be > 0");
    }
    if (max_terms < 1) {
        throw DomainError("SeriesControl: max_terms must be >= 1");
    }
}

double gamma(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("gamma: argument must be finite");
    }
    if (is_nonpositive_integer(x)) {
        throw DomainError("gamma: pole at x=" + std::to_string(x));
    }
    if (x > kGammaOverflowArg) {
        throw OverflowError("gamma: overflow at x=" + std::to_string(x));
    }
    double result;
    if (x >= 0.5) {
        result = gamma_lanczos(x);
    } else if (1.0 - x > kGammaOverflowArg) {
        return 0.0;  // |Gamma(x)| underflows
    } else {
        result = std::numbers::pi / (sin_pi(x) * gamma_lanczos(1.0 - x));
    }
    if (!std::isfinite(result)) {
        throw OverflowError("gamma: overflow at x=" + std::to_string(x));
    }
    return result;
}

double hyp1f1(double a, double b, double z, const SeriesControl& ctl) {
    ctl.validate();
    check_1f1_args(b, z);
    if (z == 0.0) {
        return 1.0;
    }
    if (z < -1.0) {
        return scaled_kummer_1f1(b - a, b, -z, ctl);
    }
    return sum_1f1(a, b, z, 0, ctl);
}

double hyp1f1m1(double a, double b, double z, const SeriesControl& ctl) {
    ctl.validate();
    check_1f1_args(b, z);
    if (z == 0.0) {
        return 0.0;
    }
    if (std::abs(z) <= 1.0) {
        return sum_1f1(a, b, z, 1, ctl);
    }
    return hyp1f1(a, b, z, ctl) - 1.0;
}

double hyp2f2_11_32_2(double z, const SeriesControl& ctl) {
    ctl.validate();
    if (!std::isfinite(z)) {
        throw DomainError("hyp2f2_11_32_2: z must be finite");
    }
    if (z == 0.0) {
        return 1.0;
    }
    if (z < -1.0) {
        return sum_2f2_poisson(-z, ctl);
    }
    return sum_2f2_direct(z, ctl);
}

}  // namespace tqm::specfun
