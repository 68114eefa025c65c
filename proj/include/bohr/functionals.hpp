#pragma once

#include <string>

#include "bohr/series.hpp"

namespace bohr {

/// The nine refined functionals (A..I) take a Schwarz map omega of order m
/// in the inner position; the Thm* tags are their classical one-variable
/// baselines, evaluated at z itself.
///
/// Writing B_k for the coefficient majorant starting at index k and AT for
/// the weighted area term:
///   A: |f(w)|   + B_1 + AT                    w = omega(z)
///   B: |f(w)|^2 + B_1 + AT
///   C: |a_0| + B_0' + AT + |f(w) - a_0|       (B_0' folds |a_0| into B_0)
///   D: |a_0|^2 + B_1 + AT + |f(w) - a_0|
///   E: |f(w)|   + |w| |f'(w)| + B_2 + AT
///   F: |f(w)|^2 + |w| |f'(w)| + B_2 + AT
///   G: |f(w)|   + |z| |f'(w)| + B_2 + AT
///   H: |f(w)|^2 + |z| |f'(w)| + B_2 + AT
///   I: |a_0| + B_0' + AT + |f(w) - a_0|^2
enum class FunctionalKind {
    A, B, C, D, E, F, G, H, I,
    ThmB1, ThmB2, ThmC1, ThmC2, ThmD1, ThmD2, ThmE1, ThmE2, ThmF,
};

/// A nonnegative quantity plus a rigorous upper bound on what truncation
/// may have dropped: the true value lies in [value, value + tail].
struct BoundedValue {
    double value = 0.0;
    double tail = 0.0;
    double upper() const { return value + tail; }
};

/// sum_{n >= k} |a_n| r^n over the stored window, geometric tail.
BoundedValue bohr_sum(const BoundedFunc& f, int k, double r);

/// sum_{n >= 1} |a_n|^2 r^(2n), the square of the weighted area norm.
BoundedValue area_norm(const BoundedFunc& f, double r);

/// (1+ar) / ((1+a)(1-r)) * area_norm with a = |a_0|.
BoundedValue area_term(const BoundedFunc& f, double r);

/// Evaluate a functional at z, |z| < 1. Point values go through the exact
/// closed form; series sums carry their tails. Thm* kinds ignore omega.
/// Derivative-bearing kinds refuse |z| > 0.99 (precision_error).
BoundedValue eval_functional(FunctionalKind kind, const BoundedFunc& f,
                             const SchwarzFn& omega, cplx z);

/// Closed-form value of the functional on its extremal configuration:
/// f the disk automorphism with f(0) = a composed with the monomial Schwarz
/// map of order m (reflected for the kinds C, D, I that peak there).
/// Only the nine refined kinds have one; m >= 1, a in [0,1), r in [0,1).
double extremal_value(FunctionalKind kind, int m, double a, double r);

/// Sharp bound on sum_{n>=1} |a_n| r^n given |a_0| = a:
/// r(1-a^2)/(1-ar) when a >= r, r sqrt(1-a^2)/sqrt(1-r^2) otherwise.
double coefficient_bound(double a, double r);

/// Kinds whose evaluation reads f' (E, F, G, H and their baselines).
bool uses_derivative(FunctionalKind kind);

std::string kind_name(FunctionalKind kind);
FunctionalKind parse_kind(const std::string& name);

} // namespace bohr
