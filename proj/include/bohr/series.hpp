#pragma once

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bohr/errors.hpp"

namespace bohr {

using cplx = std::complex<double>;

/// Default truncation order for power series. With r <= 0.7 the geometric
/// tail r^(N+1)/(1-r) is below 1e-20, so truncation never dominates the
/// double-precision noise floor at the radii the functionals are used at.
inline constexpr int kDefaultOrder = 128;

/// How the coefficients beyond the stored window are bounded.
///   unit_ball: |a_n| <= 1 for every n (member of the unit ball of H-infinity),
///              so tails are bounded by geometric sums.
///   zero:      the function is the stored polynomial; tails vanish.
enum class TailRule { unit_ball, zero };

/// Finitely many Taylor coefficients about 0 plus a rule bounding the rest.
struct TruncatedSeries {
    std::vector<cplx> coeffs; // coeffs[n] = a_n, n = 0..trunc_order
    TailRule tail_rule = TailRule::unit_ball;

    TruncatedSeries() = default;
    TruncatedSeries(std::vector<cplx> c, TailRule rule);

    int trunc_order() const { return static_cast<int>(coeffs.size()) - 1; }

    /// a_n, with n beyond the stored window reading as 0.
    cplx coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs.size())) ? coeffs[n] : cplx{};
    }

    /// Bound on sum_{n > trunc_order} |a_n| r^n, 0 <= r < 1.
    double tail_bound(double r) const;

    /// Bound on sum_{n > trunc_order} n |a_n| r^(n-1), 0 <= r < 1.
    double deriv_tail_bound(double r) const;
};

/// Value of a point evaluation together with a rigorous bound on the
/// truncation error (0 when the evaluation is exact).
struct PointValue {
    cplx value;
    double error = 0.0;
};

class ExactForm;
using ExactFormPtr = std::shared_ptr<const ExactForm>;

/// Closed-form expression tree for the functions we can evaluate exactly:
/// disk automorphism factors, finite Blaschke products, and the unit-ball
/// preserving combinations (convex mixes, scalings, rotations of the
/// argument). eval/deriv are exact up to floating-point rounding.
class ExactForm {
public:
    static ExactFormPtr mobius(double a);
    static ExactFormPtr blaschke(std::vector<cplx> zeros, cplx rotation);
    static ExactFormPtr constant(cplx c);
    static ExactFormPtr convex(ExactFormPtr f, ExactFormPtr g, double t);
    static ExactFormPtr scaled(ExactFormPtr f, double rho);
    static ExactFormPtr rotated(ExactFormPtr f, cplx lambda);

    cplx eval(cplx z) const;
    cplx deriv(cplx z) const;

private:
    struct Mobius { double a; };                             // (z+a)/(1+a z)
    struct Blaschke { std::vector<cplx> zeros; cplx rot; };  // rot * prod (z-z_k)/(1-conj(z_k) z)
    struct Constant { cplx c; };
    struct Convex { ExactFormPtr f, g; double t; };          // t f + (1-t) g
    struct Scaled { ExactFormPtr f; double rho; };           // rho f
    struct Rotated { ExactFormPtr f; cplx lambda; };         // f(lambda z)

    using Node = std::variant<Mobius, Blaschke, Constant, Convex, Scaled, Rotated>;
    explicit ExactForm(Node n) : node_(std::move(n)) {}
    Node node_;
};

/// Member of the unit ball of bounded analytic functions on the disk,
/// carried both as a truncated series and as an exact closed form.
///
/// Construction enforces the membership necessities that are checkable:
/// every stored |a_n| <= 1 (+ rounding slack), |f| <= 1 on a grid of the
/// circle |z| = 0.999, and the series agrees with Cauchy-integral
/// quadrature of the exact form for n <= 8 to 1e-10.
class BoundedFunc {
public:
    const TruncatedSeries& series() const { return series_; }
    const ExactFormPtr& exact() const { return exact_; }
    const std::string& provenance() const { return provenance_; }

    int trunc_order() const { return series_.trunc_order(); }
    cplx coeff(int n) const { return series_.coeff(n); }
    /// |a_0|, the quantity the refined bounds are parameterized by.
    double head() const { return std::abs(series_.coeff(0)); }

    /// Exact evaluation of f / f' through the closed form. No domain check;
    /// callers outside the open disk get whatever the rational form gives.
    cplx eval(cplx z) const { return exact_->eval(z); }
    cplx deriv(cplx z) const { return exact_->deriv(z); }

private:
    BoundedFunc(TruncatedSeries s, ExactFormPtr e, std::string prov);
    void validate() const;

    TruncatedSeries series_;
    ExactFormPtr exact_;
    std::string provenance_;

    friend BoundedFunc make_mobius(double, int);
    friend BoundedFunc make_blaschke(const std::vector<cplx>&, cplx, int);
    friend BoundedFunc make_constant(cplx, int);
    friend BoundedFunc combine_convex(const BoundedFunc&, const BoundedFunc&, double);
    friend BoundedFunc combine_scale(const BoundedFunc&, double);
    friend BoundedFunc combine_rotate(const BoundedFunc&, cplx);
};

/// The disk automorphism (z+a)/(1+a z) for a in [0,1); series coefficients
/// are a, then (1-a^2)(-a)^(n-1).
BoundedFunc make_mobius(double a, int trunc_order = kDefaultOrder);

/// Finite Blaschke product with the given zeros (all |z_k| < 1) times a
/// unimodular rotation. An empty zero list gives the constant `rotation`;
/// zeros = {0}, rotation = 1 gives the identity.
BoundedFunc make_blaschke(const std::vector<cplx>& zeros, cplx rotation,
                          int trunc_order = kDefaultOrder);

/// Constant c with |c| <= 1. Tail rule is `zero`.
BoundedFunc make_constant(cplx c, int trunc_order = kDefaultOrder);

/// t f + (1-t) g for t in [0,1]. Stays in the unit ball by convexity.
BoundedFunc combine_convex(const BoundedFunc& f, const BoundedFunc& g, double t);

/// rho f for rho in [0,1].
BoundedFunc combine_scale(const BoundedFunc& f, double rho);

/// z |-> f(lambda z) for |lambda| = 1.
BoundedFunc combine_rotate(const BoundedFunc& f, cplx lambda);

/// Schwarz map vanishing to exact order m at the origin: omega(z) = z^m u(z)
/// with u in the unit ball and u(0) != 0, so omega^(m)(0) != 0 and
/// |omega(z)| <= |z|^m.
class SchwarzFn {
public:
    int order() const { return m_; }
    const BoundedFunc& inner() const { return inner_; }

    cplx eval(cplx z) const;
    cplx deriv(cplx z) const;

    /// Series of omega itself: coefficient n is u's coefficient n-m.
    TruncatedSeries series(int trunc_order = kDefaultOrder) const;

private:
    SchwarzFn(int m, BoundedFunc u) : m_(m), inner_(std::move(u)) {}
    int m_;
    BoundedFunc inner_;

    friend SchwarzFn make_schwarz(int, BoundedFunc);
};

SchwarzFn make_schwarz(int m, BoundedFunc u);

/// Taylor coefficients of f(omega(z)) through `trunc_order`. Because
/// omega(0) = 0, coefficient n of the output depends only on f's
/// coefficients up to floor(n / omega.order()), so the window is exact.
TruncatedSeries compose_inner(const TruncatedSeries& f, const SchwarzFn& omega,
                              int trunc_order = kDefaultOrder);

enum class EvalMode { exact, series };

/// f(z) for |z| < 1. Series mode returns the Horner partial sum with the
/// geometric tail as `error`; exact mode has error 0.
PointValue eval_point(const BoundedFunc& f, cplx z, EvalMode mode = EvalMode::exact);

/// f'(z) for |z| < 1, with the differentiated tail bound in series mode.
PointValue eval_deriv(const BoundedFunc& f, cplx z, EvalMode mode = EvalMode::exact);

} // namespace bohr
