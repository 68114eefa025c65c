#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace bohr {

namespace {

// Rounding slack for the |a_n| <= 1 membership necessity. Truncated products
// of unit-ball series accumulate ~N*eps, well under this.
constexpr double kCoeffSlack = 1e-11;
constexpr double kMembershipSlack = 1e-12;
constexpr int kMembershipGrid = 64;
constexpr double kMembershipRadius = 0.999;
constexpr int kCauchyNodes = 64;
constexpr double kCauchyRadius = 0.5;
constexpr double kCauchyTol = 1e-10;

std::string fmt_double(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// p(z) * (z - z0), truncated to the existing length.
void mul_linear(std::vector<cplx>& p, cplx z0) {
    for (int n = static_cast<int>(p.size()) - 1; n >= 0; --n) {
        cplx shifted = (n > 0) ? p[n - 1] : cplx{};
        p[n] = shifted - z0 * p[n];
    }
}

// p(z) / (1 - w z): g_n = p_n + w g_{n-1}. Stable for |w| < 1.
void div_one_minus(std::vector<cplx>& p, cplx w) {
    for (std::size_t n = 1; n < p.size(); ++n)
        p[n] += w * p[n - 1];
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> c, TailRule rule)
    : coeffs(std::move(c)), tail_rule(rule) {
    if (coeffs.empty())
        throw domain_error("truncated series needs at least the constant coefficient");
    if (tail_rule == TailRule::unit_ball) {
        for (const cplx& a : coeffs)
            if (std::abs(a) > 1.0 + kCoeffSlack)
                throw domain_error("coefficient modulus " + fmt_double(std::abs(a)) +
                                   " violates the unit-ball necessity |a_n| <= 1");
    }
}

double TruncatedSeries::tail_bound(double r) const {
    if (tail_rule == TailRule::zero)
        return 0.0;
    const int n = trunc_order();
    return std::pow(r, n + 1) / (1.0 - r);
}

double TruncatedSeries::deriv_tail_bound(double r) const {
    if (tail_rule == TailRule::zero)
        return 0.0;
    // d/dr of r^(N+1)/(1-r) = r^N (N+1 - N r) / (1-r)^2
    const double n = trunc_order();
    return std::pow(r, n) * (n + 1.0 - n * r) / ((1.0 - r) * (1.0 - r));
}

ExactFormPtr ExactForm::mobius(double a) {
    return ExactFormPtr(new ExactForm(Mobius{a}));
}
ExactFormPtr ExactForm::blaschke(std::vector<cplx> zeros, cplx rotation) {
    return ExactFormPtr(new ExactForm(Blaschke{std::move(zeros), rotation}));
}
ExactFormPtr ExactForm::constant(cplx c) {
    return ExactFormPtr(new ExactForm(Constant{c}));
}
ExactFormPtr ExactForm::convex(ExactFormPtr f, ExactFormPtr g, double t) {
    return ExactFormPtr(new ExactForm(Convex{std::move(f), std::move(g), t}));
}
ExactFormPtr ExactForm::scaled(ExactFormPtr f, double rho) {
    return ExactFormPtr(new ExactForm(Scaled{std::move(f), rho}));
}
ExactFormPtr ExactForm::rotated(ExactFormPtr f, cplx lambda) {
    return ExactFormPtr(new ExactForm(Rotated{std::move(f), lambda}));
}

cplx ExactForm::eval(cplx z) const {
    return std::visit(
        [&](const auto& node) -> cplx {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Mobius>) {
                return (z + node.a) / (1.0 + node.a * z);
            } else if constexpr (std::is_same_v<T, Blaschke>) {
                cplx prod = node.rot;
                for (const cplx& zk : node.zeros)
                    prod *= (z - zk) / (1.0 - std::conj(zk) * z);
                return prod;
            } else if constexpr (std::is_same_v<T, Constant>) {
                return node.c;
            } else if constexpr (std::is_same_v<T, Convex>) {
                return node.t * node.f->eval(z) + (1.0 - node.t) * node.g->eval(z);
            } else if constexpr (std::is_same_v<T, Scaled>) {
                return node.rho * node.f->eval(z);
            } else {
                return node.f->eval(node.lambda * z);
            }
        },
        node_);
}

cplx ExactForm::deriv(cplx z) const {
    return std::visit(
        [&](const auto& node) -> cplx {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Mobius>) {
                const cplx den = 1.0 + node.a * z;
                return (1.0 - node.a * node.a) / (den * den);
            } else if constexpr (std::is_same_v<T, Blaschke>) {
                // Product rule via prefix/suffix products so a zero hit by z
                // costs nothing: B' = rot * sum_j d_j prod_{k != j} b_k with
                // d_k the derivative of one factor.
                const auto& zs = node.zeros;
                const int k = static_cast<int>(zs.size());
                if (k == 0)
                    return cplx{};
                std::vector<cplx> factor(k), dfactor(k);
                for (int j = 0; j < k; ++j) {
                    const cplx den = 1.0 - std::conj(zs[j]) * z;
                    factor[j] = (z - zs[j]) / den;
                    dfactor[j] = (1.0 - std::norm(zs[j])) / (den * den);
                }
                std::vector<cplx> suffix(k + 1);
                suffix[k] = 1.0;
                for (int j = k - 1; j >= 0; --j)
                    suffix[j] = factor[j] * suffix[j + 1];
                cplx sum = 0.0, prefix = 1.0;
                for (int j = 0; j < k; ++j) {
                    sum += prefix * dfactor[j] * suffix[j + 1];
                    prefix *= factor[j];
                }
                return node.rot * sum;
            } else if constexpr (std::is_same_v<T, Constant>) {
                return cplx{};
            } else if constexpr (std::is_same_v<T, Convex>) {
                return node.t * node.f->deriv(z) + (1.0 - node.t) * node.g->deriv(z);
            } else if constexpr (std::is_same_v<T, Scaled>) {
                return node.rho * node.f->deriv(z);
            } else {
                return node.lambda * node.f->deriv(node.lambda * z);
            }
        },
        node_);
}

BoundedFunc::BoundedFunc(TruncatedSeries s, ExactFormPtr e, std::string prov)
    : series_(std::move(s)), exact_(std::move(e)), provenance_(std::move(prov)) {
    validate();
}

void BoundedFunc::validate() const {
    using std::numbers::pi;
    // Sampled membership: |f| <= 1 on the circle r = 0.999.
    for (int k = 0; k < kMembershipGrid; ++k) {
        const double th = 2.0 * pi * k / kMembershipGrid;
        const cplx z = kMembershipRadius * cplx{std::cos(th), std::sin(th)};
        const double mod = std::abs(eval(z));
        if (!(mod <= 1.0 + kMembershipSlack))
            throw internal_error("membership grid check failed for " + provenance_ +
                                 ": |f| = " + fmt_double(mod));
    }
    // Stored coefficients must be the Taylor coefficients of the exact form.
    // Trapezoidal Cauchy quadrature on |z| = 1/2 aliases at 2^-64, far below
    // the agreement tolerance.
    const int upto = std::min(8, series_.trunc_order());
    std::vector<cplx> samples(kCauchyNodes);
    for (int k = 0; k < kCauchyNodes; ++k) {
        const double th = 2.0 * pi * k / kCauchyNodes;
        samples[k] = eval(kCauchyRadius * cplx{std::cos(th), std::sin(th)});
    }
    for (int n = 0; n <= upto; ++n) {
        cplx acc = 0.0;
        for (int k = 0; k < kCauchyNodes; ++k) {
            const double th = -2.0 * pi * k * n / kCauchyNodes;
            acc += samples[k] * cplx{std::cos(th), std::sin(th)};
        }
        acc /= static_cast<double>(kCauchyNodes) * std::pow(kCauchyRadius, n);
        if (std::abs(acc - series_.coeff(n)) > kCauchyTol)
            throw internal_error("series/exact mismatch at coefficient " +
                                 std::to_string(n) + " for " + provenance_);
    }
}

BoundedFunc make_mobius(double a, int trunc_order) {
    if (!(a >= 0.0 && a < 1.0))
        throw domain_error("mobius parameter must satisfy 0 <= a < 1");
    if (trunc_order < 0)
        throw domain_error("truncation order must be nonnegative");
    std::vector<cplx> c(trunc_order + 1);
    c[0] = a;
    double pow_neg_a = 1.0; // (-a)^(n-1)
    for (int n = 1; n <= trunc_order; ++n) {
        c[n] = (1.0 - a * a) * pow_neg_a;
        pow_neg_a *= -a;
    }
    return BoundedFunc({std::move(c), TailRule::unit_ball}, ExactForm::mobius(a),
                       "mobius(a=" + fmt_double(a) + ")");
}

BoundedFunc make_blaschke(const std::vector<cplx>& zeros, cplx rotation, int trunc_order) {
    if (trunc_order < 0)
        throw domain_error("truncation order must be nonnegative");
    if (std::abs(std::abs(rotation) - 1.0) > 1e-9)
        throw domain_error("blaschke rotation must be unimodular");
    rotation /= std::abs(rotation);
    for (const cplx& zk : zeros)
        if (!(std::abs(zk) < 1.0))
            throw domain_error("blaschke zeros must lie inside the unit disk");
    if (static_cast<int>(zeros.size()) > trunc_order)
        throw domain_error("truncation order too small for the zero count");
    // Numerator polynomial rot * prod (z - z_k), then divide out each
    // (1 - conj(z_k) z). Each division is a geometric recurrence with ratio
    // z_k, stable for |z_k| < 1.
    std::vector<cplx> c(trunc_order + 1);
    c[0] = rotation;
    for (const cplx& zk : zeros)
        mul_linear(c, zk);
    for (const cplx& zk : zeros)
        div_one_minus(c, std::conj(zk));
    return BoundedFunc({std::move(c), TailRule::unit_ball},
                       ExactForm::blaschke(zeros, rotation),
                       "blaschke(deg=" + std::to_string(zeros.size()) + ")");
}

BoundedFunc make_constant(cplx value, int trunc_order) {
    if (!(std::abs(value) <= 1.0))
        throw domain_error("constant must have modulus <= 1");
    if (trunc_order < 0)
        throw domain_error("truncation order must be nonnegative");
    std::vector<cplx> c(trunc_order + 1);
    c[0] = value;
    return BoundedFunc({std::move(c), TailRule::zero}, ExactForm::constant(value),
                       "constant");
}

BoundedFunc combine_convex(const BoundedFunc& f, const BoundedFunc& g, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw domain_error("convex weight must lie in [0,1]");
    const bool poly = f.series().tail_rule == TailRule::zero &&
                      g.series().tail_rule == TailRule::zero;
    // Beyond the shorter window a unit-ball operand's coefficients are
    // unknown, so the mix is only trustworthy on the common window.
    const int order = poly ? std::max(f.trunc_order(), g.trunc_order())
                           : std::min(f.trunc_order(), g.trunc_order());
    std::vector<cplx> c(order + 1);
    for (int n = 0; n <= order; ++n)
        c[n] = t * f.coeff(n) + (1.0 - t) * g.coeff(n);
    return BoundedFunc({std::move(c), poly ? TailRule::zero : TailRule::unit_ball},
                       ExactForm::convex(f.exact(), g.exact(), t),
                       "convex(t=" + fmt_double(t) + "; " + f.provenance() + ", " +
                           g.provenance() + ")");
}

BoundedFunc combine_scale(const BoundedFunc& f, double rho) {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw domain_error("scale factor must lie in [0,1]");
    std::vector<cplx> c(f.series().coeffs);
    for (cplx& a : c)
        a *= rho;
    return BoundedFunc({std::move(c), f.series().tail_rule},
                       ExactForm::scaled(f.exact(), rho),
                       "scale(rho=" + fmt_double(rho) + "; " + f.provenance() + ")");
}

BoundedFunc combine_rotate(const BoundedFunc& f, cplx lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-9)
        throw domain_error("argument rotation must be unimodular");
    lambda /= std::abs(lambda);
    std::vector<cplx> c(f.series().coeffs);
    cplx pow = 1.0;
    for (cplx& a : c) {
        a *= pow;
        pow *= lambda;
    }
    return BoundedFunc({std::move(c), f.series().tail_rule},
                       ExactForm::rotated(f.exact(), lambda),
                       "rotate(" + f.provenance() + ")");
}

cplx SchwarzFn::eval(cplx z) const {
    cplx zm = 1.0;
    for (int i = 0; i < m_; ++i)
        zm *= z;
    return zm * inner_.eval(z);
}

cplx SchwarzFn::deriv(cplx z) const {
    // (z^m u)' = m z^(m-1) u + z^m u'
    cplx zm1 = 1.0;
    for (int i = 0; i < m_ - 1; ++i)
        zm1 *= z;
    return zm1 * (static_cast<double>(m_) * inner_.eval(z) + z * inner_.deriv(z));
}

TruncatedSeries SchwarzFn::series(int trunc_order) const {
    std::vector<cplx> c(trunc_order + 1);
    for (int n = m_; n <= trunc_order; ++n)
        c[n] = inner_.coeff(n - m_);
    return {std::move(c), TailRule::unit_ball};
}

SchwarzFn make_schwarz(int m, BoundedFunc u) {
    if (m < 1)
        throw domain_error("vanishing order must be a positive integer");
    if (std::abs(u.coeff(0)) == 0.0)
        throw domain_error("inner factor must not vanish at 0");
    return SchwarzFn(m, std::move(u));
}

TruncatedSeries compose_inner(const TruncatedSeries& f, const SchwarzFn& omega,
                              int trunc_order) {
    const TruncatedSeries om = omega.series(trunc_order);
    std::vector<cplx> result(trunc_order + 1);
    result[0] = f.coeff(0);
    std::vector<cplx> pow(trunc_order + 1);
    pow[0] = 1.0;
    const int kmax = trunc_order / omega.order();
    std::vector<cplx> next(trunc_order + 1);
    for (int k = 1; k <= kmax; ++k) {
        // pow <- pow * omega, truncated; valuation grows to k * order.
        std::fill(next.begin(), next.end(), cplx{});
        for (int i = (k - 1) * omega.order(); i <= trunc_order; ++i) {
            if (pow[i] == cplx{})
                continue;
            for (int j = omega.order(); i + j <= trunc_order; ++j)
                next[i + j] += pow[i] * om.coeff(j);
        }
        pow.swap(next);
        const cplx fk = f.coeff(k);
        if (fk == cplx{})
            continue;
        for (int n = k * omega.order(); n <= trunc_order; ++n)
            result[n] += fk * pow[n];
    }
    // A genuinely polynomial result only survives when f is constant or the
    // inner map is exactly c z^m; otherwise the composition has an infinite
    // series and the unit-ball tail applies.
    bool f_const = f.tail_rule == TailRule::zero;
    if (f_const)
        for (int n = 1; n <= f.trunc_order(); ++n)
            if (f.coeff(n) != cplx{})
                f_const = false;
    bool omega_monomial = omega.inner().series().tail_rule == TailRule::zero;
    if (omega_monomial)
        for (int n = 1; n <= omega.inner().trunc_order(); ++n)
            if (omega.inner().coeff(n) != cplx{})
                omega_monomial = false;
    const bool exact_poly =
        f_const || (f.tail_rule == TailRule::zero && omega_monomial);
    return {std::move(result), exact_poly ? TailRule::zero : TailRule::unit_ball};
}

PointValue eval_point(const BoundedFunc& f, cplx z, EvalMode mode) {
    const double r = std::abs(z);
    if (!(r < 1.0))
        throw domain_error("point evaluation requires |z| < 1");
    if (mode == EvalMode::exact)
        return {f.eval(z), 0.0};
    const auto& c = f.series().coeffs;
    cplx acc = 0.0;
    for (int n = static_cast<int>(c.size()) - 1; n >= 0; --n)
        acc = acc * z + c[n];
    return {acc, f.series().tail_bound(r)};
}

PointValue eval_deriv(const BoundedFunc& f, cplx z, EvalMode mode) {
    const double r = std::abs(z);
    if (!(r < 1.0))
        throw domain_error("point evaluation requires |z| < 1");
    if (mode == EvalMode::exact)
        return {f.deriv(z), 0.0};
    const auto& c = f.series().coeffs;
    cplx acc = 0.0;
    for (int n = static_cast<int>(c.size()) - 1; n >= 1; --n)
        acc = acc * z + static_cast<double>(n) * c[n];
    return {acc, f.series().deriv_tail_bound(r)};
}

} // namespace bohr
