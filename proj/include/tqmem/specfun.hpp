#pragma once

// Special functions needed by the Ohmic decoherence integral: Gamma,
// Kummer's confluent hypergeometric function 1F1 and the particular
// 2F2({1,1};{3/2,2};z) that appears in the Ohmic (s = 1) branch.
//
// All functions are pure and thread-safe.

namespace tqm::specfun {

/// Truncation policy for the hypergeometric series.
struct SeriesControl {
    double rel_tol = 1e-14;
    int max_terms = 10000;

    /// Throws DomainError unless rel_tol > 0 and max_terms >= 1.
    void validate() const;
};

/// Gamma function for real x. Lanczos approximation for x >= 1/2 and the
/// reflection formula below that. Throws DomainError at the poles
/// x = 0, -1, -2, ... and OverflowError when the result exceeds DBL_MAX.
double gamma(double x);

/// Kummer's function 1F1(a; b; z).
///
/// For z < -1 the value is obtained from the Kummer transformation
/// 1F1(a;b;z) = e^z 1F1(b-a;b;-z), whose terms do not alternate; the
/// defining series is summed directly (with compensation) otherwise.
/// Throws DomainError when b is a non-positive integer and
/// ConvergenceError when ctl.max_terms is exhausted.
double hyp1f1(double a, double b, double z, const SeriesControl& ctl = {});

/// 1F1(a; b; z) - 1, accurate also when the result is tiny (|z| << 1).
double hyp1f1m1(double a, double b, double z, const SeriesControl& ctl = {});

/// 2F2({1,1}; {3/2,2}; z).
///
/// For z < -1 this uses the positive-term representation
///
///   2F2({1,1};{3/2,2};-w) = E[O_J] / w,   J ~ Poisson(w),
///   O_j = sum_{k<j} 1/(2k+1),
///
/// which follows from 2F2(-x^2) = (2/x^2) * integral_0^x Dawson(y) dy.
/// The alternating defining series is only used for z >= -1 where its
/// terms stay O(1).
double hyp2f2_11_32_2(double z, const SeriesControl& ctl = {});

}  // namespace tqm::specfun
