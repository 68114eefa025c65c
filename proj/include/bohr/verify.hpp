#pragma once

#include <cstdint>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Margins above this count as genuine violations; below it they are
/// rounding noise on an inequality that holds with equality in the limit.
inline constexpr double kViolationThreshold = 1e-9;

struct SamplerConfig {
    std::uint64_t seed = 0;
    int blaschke_degree_max = 4;
    int mix_depth_max = 2;
    int z_per_function = 16;
};

struct Violation {
    std::uint64_t seed = 0; // per-trial sub-seed that reproduces the draw
    std::string params;
    double value = 0.0;
};

struct CheckReport {
    std::string subject;
    long trials = 0;
    /// Largest observed (lhs - rhs); negative means the inequality held with
    /// room. -inf when nothing was sampled.
    double worst_margin = 0.0;
    std::vector<Violation> violations;
    bool passed = true;
};

/// One pseudo-random unit-ball member: a Blaschke product (or scaled
/// unimodular constant) pushed through up to mix_depth_max convex / scale /
/// rotate combinations. Deterministic in config.seed.
BoundedFunc sample_bounded(const SamplerConfig& config);

/// Radius the scan of a refined kind runs below: the family root for A..H,
/// the constant 1/3 for I.
double functional_radius(FunctionalKind kind, int m);

/// Randomized scan of one refined inequality: `trials` draws of (f, omega),
/// each probed at z_per_function points on |z| = r_fraction * radius.
/// Upper bounds (value + tail) above 1 + 1e-9 are recorded as violations.
/// Kind I at m = 1 is a dichotomy, so those draws are rescaled into the
/// hypothesis class |f(0)| <= 4 sqrt(2) - 5 (cf. threshold_a_star) first.
CheckReport check_theorem(FunctionalKind kind, int m, const SamplerConfig& config,
                          double r_fraction, long trials);

/// Closed-form functional value just past the radius; > 1 demonstrates the
/// radius cannot be enlarged. eps must keep radius + eps inside [0,1).
double sharpness_witness(FunctionalKind kind, int m, double a, double eps);

/// The head coefficient at which the kind-I functional at m = 1, r = 1/3
/// crosses 1: bisection of the closed form, converging to 4*sqrt(2) - 5.
double threshold_a_star();

/// sum_{n>=1} |a_n| r^n <= coefficient_bound(|a_0|, r) over sampled
/// functions and the radius grid, truncation tails included.
CheckReport check_lemma1(const SamplerConfig& config, const std::vector<double>& r_grid,
                         long trials);

/// Majorant-plus-area bounds: B_1 + AT <= (1-a^2) r/(1-r) and
/// B_2 + AT <= (1-a^2) r^2/(1-r).
CheckReport check_lemma2(const SamplerConfig& config, const std::vector<double>& r_grid,
                         long trials);

/// Pseudo-hyperbolic contraction and the derivative bound
/// |f'(z)| <= (1 - |f(z)|^2)/(1 - |z|^2) for sampled maps and point pairs.
CheckReport check_schwarz_pick(const SamplerConfig& config, int pairs, long trials);

/// Root bound chain for the zeta radius: with x the zeta_m root,
/// x^m + x/(1-x) + x^m/sqrt(1-x^2m) <= 1, plus the exact quadratic facts
/// behind it (negative discriminant and positivity on a rational grid, both
/// in integer arithmetic over Z[sqrt 2]).
CheckReport check_lemma3(int m);

/// Same shape for the eta radius: with y the eta_m root,
/// y^2m + y/(1-y) + y^m/sqrt(1-y^2m) <= 1, plus the exact sign of
/// t^2 (t^3 - t^2 + t + 1) on a rational grid of [0, 1/2].
CheckReport check_lemma4(int m);

/// Documents the two display inconsistencies: the delta_alt variant agrees
/// with the solved delta family only at m = 2 (their difference is
/// (r^m - r^2)(1 + r^m)^2), and the vartheta polynomial matches the
/// re-derived boundary form, not the displayed one, for every m in 1..10.
CheckReport check_discrepancies();

/// Radii the lemma scans run over: 0.05, 0.10, ..., 0.80.
std::vector<double> default_r_grid();

} // namespace bohr
