#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bohr/errors.hpp"

namespace bohr {

/// Polynomial families whose smallest positive root is the radius attached
/// to a functional (alpha..vartheta), a parameterized refinement (alpha_a,
/// beta_a), an auxiliary comparison root (mu..xi5), or the diagnostic
/// variant of the delta display (delta_alt).
enum class Family {
    alpha, beta, zeta, eta, gamma, delta, theta, vartheta,
    alpha_a, beta_a,
    mu, nu, tau, xi, chi, xi5,
    delta_alt,
};

/// A concrete member: tag + vanishing order m (+ head coefficient a for the
/// parameterized families, ignored elsewhere).
struct EquationFamily {
    Family tag = Family::alpha;
    int m = 1;
    std::optional<double> a;
};

/// Certified root: the final bisection bracket [lo, hi] has width <= tol and
/// carries the endpoint signs; `root` is the Newton-polished point inside.
struct RootResult {
    double root = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double residual = 0.0;
    int iterations = 0;
    int sign_lo = 0;
    int sign_hi = 0;
};

/// P(r) for the family's polynomial, compensated monomial summation.
double eval_family(const EquationFamily& fam, double r);

/// P'(r), used for the Newton polish.
double eval_family_deriv(const EquationFamily& fam, double r);

/// Bracket (lo, hi) on which the family changes sign exactly once.
std::pair<double, double> family_bracket(const EquationFamily& fam);

/// Bisection to width <= tol plus a bracketed Newton polish. tol must be
/// >= 1e-14 (double spacing near 1/2 makes tighter requests meaningless).
RootResult solve_radius(const EquationFamily& fam, double tol = 1e-12);

/// Baseline radii quoted alongside the refinements. thmB1, thmC1 and thmC2
/// depend on the head coefficient a (default 0); the rest are constants.
enum class ClassicalName { thmB1, thmB2, thmC1, thmC2, thmD1, thmD2, thmE1, thmE2, thmF };
double classical_radius(ClassicalName name, std::optional<double> a = {});

/// m -> infinity limit of the radius, defined for the eight theorem families.
double limit_radius(Family tag);

/// One table cell: the solved radius plus its certificate data.
struct RadiusRecord {
    std::string family;
    int m = 0;
    std::optional<double> a;
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// which = 1 -> (alpha, beta, zeta, eta); which = 2 -> (gamma, delta, theta,
/// vartheta). Rows come back in (m, family) order.
std::vector<RadiusRecord> make_table(int which, const std::vector<int>& m_list,
                                     double tol = 1e-12);

std::string family_name(Family tag);
Family parse_family(const std::string& name);
std::string classical_name(ClassicalName name);
ClassicalName parse_classical(const std::string& name);

/// Half-away-from-zero rounding to `places` decimals (table convention).
double round_decimals(double x, int places);

} // namespace bohr
