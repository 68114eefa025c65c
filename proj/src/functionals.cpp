#include "bohr/functionals.hpp"

#include <cmath>

namespace bohr {

namespace {

// Compensated accumulation; the sums here are short but feed comparisons
// against closed forms at 1e-12, so keep the rounding floor at ~1 ulp.
struct KahanSum {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw domain_error("radius must lie in [0,1)");
}

double pow_int(double x, int n) {
    double acc = 1.0;
    for (int i = 0; i < n; ++i)
        acc *= x;
    return acc;
}

// Baselines evaluate the refined kinds at the identity inner map, which
// reproduces them exactly (|w| = |z| collapses E/F onto G/H).
const SchwarzFn& identity_schwarz() {
    static const SchwarzFn id = make_schwarz(1, make_constant(1.0));
    return id;
}

} // namespace

BoundedValue bohr_sum(const BoundedFunc& f, int k, double r) {
    require_radius(r);
    if (k < 0)
        throw domain_error("majorant sum starts at a nonnegative index");
    KahanSum acc;
    double rn = pow_int(r, k);
    for (int n = k; n <= f.trunc_order(); ++n) {
        acc.add(std::abs(f.coeff(n)) * rn);
        rn *= r;
    }
    return {acc.sum, f.series().tail_bound(r)};
}

BoundedValue area_norm(const BoundedFunc& f, double r) {
    require_radius(r);
    KahanSum acc;
    const double r2 = r * r;
    double r2n = r2;
    for (int n = 1; n <= f.trunc_order(); ++n) {
        acc.add(std::norm(f.coeff(n)) * r2n);
        r2n *= r2;
    }
    double tail = 0.0;
    if (f.series().tail_rule == TailRule::unit_ball)
        tail = std::pow(r, 2 * f.trunc_order() + 2) / (1.0 - r2);
    return {acc.sum, tail};
}

BoundedValue area_term(const BoundedFunc& f, double r) {
    const BoundedValue an = area_norm(f, r);
    const double a = f.head();
    const double w = (1.0 + a * r) / ((1.0 + a) * (1.0 - r));
    return {w * an.value, w * an.tail};
}

BoundedValue eval_functional(FunctionalKind kind, const BoundedFunc& f,
                             const SchwarzFn& omega, cplx z) {
    switch (kind) {
    case FunctionalKind::ThmB1: {
        const double r = std::abs(z);
        const BoundedValue b0 = bohr_sum(f, 0, r);
        const BoundedValue at = area_term(f, r);
        return {b0.value + at.value, b0.tail + at.tail};
    }
    case FunctionalKind::ThmB2: {
        const double r = std::abs(z);
        const double a = f.head();
        const BoundedValue b1 = bohr_sum(f, 1, r);
        const BoundedValue at = area_term(f, r);
        return {a * a + b1.value + at.value, b1.tail + at.tail};
    }
    case FunctionalKind::ThmC1:
        return eval_functional(FunctionalKind::A, f, identity_schwarz(), z);
    case FunctionalKind::ThmC2:
        return eval_functional(FunctionalKind::B, f, identity_schwarz(), z);
    case FunctionalKind::ThmD1:
        return eval_functional(FunctionalKind::C, f, identity_schwarz(), z);
    case FunctionalKind::ThmD2:
        return eval_functional(FunctionalKind::D, f, identity_schwarz(), z);
    case FunctionalKind::ThmE1:
        return eval_functional(FunctionalKind::E, f, identity_schwarz(), z);
    case FunctionalKind::ThmE2:
        return eval_functional(FunctionalKind::F, f, identity_schwarz(), z);
    case FunctionalKind::ThmF:
        return eval_functional(FunctionalKind::I, f, identity_schwarz(), z);
    default:
        break;
    }

    const double r = std::abs(z);
    require_radius(r);
    if (uses_derivative(kind) && r > 0.99)
        throw precision_error("derivative tail bound degenerates for |z| > 0.99");

    const cplx w = omega.eval(z);
    const cplx fw = f.eval(w);
    const cplx a0 = f.coeff(0);
    const BoundedValue at = area_term(f, r);

    switch (kind) {
    case FunctionalKind::A: {
        const BoundedValue b1 = bohr_sum(f, 1, r);
        return {std::abs(fw) + b1.value + at.value, b1.tail + at.tail};
    }
    case FunctionalKind::B: {
        const BoundedValue b1 = bohr_sum(f, 1, r);
        return {std::norm(fw) + b1.value + at.value, b1.tail + at.tail};
    }
    case FunctionalKind::C: {
        const BoundedValue b0 = bohr_sum(f, 0, r);
        return {b0.value + at.value + std::abs(fw - a0), b0.tail + at.tail};
    }
    case FunctionalKind::D: {
        const double a = f.head();
        const BoundedValue b1 = bohr_sum(f, 1, r);
        return {a * a + b1.value + at.value + std::abs(fw - a0), b1.tail + at.tail};
    }
    case FunctionalKind::E:
    case FunctionalKind::F:
    case FunctionalKind::G:
    case FunctionalKind::H: {
        const BoundedValue b2 = bohr_sum(f, 2, r);
        const double dweight =
            (kind == FunctionalKind::E || kind == FunctionalKind::F) ? std::abs(w) : r;
        const double point = (kind == FunctionalKind::E || kind == FunctionalKind::G)
                                 ? std::abs(fw)
                                 : std::norm(fw);
        const double dterm = dweight * std::abs(f.deriv(w));
        return {point + dterm + b2.value + at.value, b2.tail + at.tail};
    }
    case FunctionalKind::I: {
        const BoundedValue b0 = bohr_sum(f, 0, r);
        return {b0.value + at.value + std::norm(fw - a0), b0.tail + at.tail};
    }
    default:
        throw usage_error("unhandled functional kind");
    }
}

double extremal_value(FunctionalKind kind, int m, double a, double r) {
    if (kind > FunctionalKind::I)
        throw usage_error("only the refined kinds A..I have a closed extremal form");
    if (m < 1)
        throw domain_error("vanishing order must be a positive integer");
    if (!(a >= 0.0 && a < 1.0))
        throw domain_error("head coefficient must lie in [0,1)");
    require_radius(r);

    const double rm = pow_int(r, m);
    const double one_a2 = 1.0 - a * a;
    const double s = (rm + a) / (1.0 + a * rm);       // automorphism at r^m
    const double T = r * one_a2 / (1.0 - r);          // majorant + area at the peak
    const double dplus = (1.0 + a * rm) * (1.0 + a * rm);
    const double area2 = r * r * one_a2 / (1.0 - r);  // order-2 majorant + area

    switch (kind) {
    case FunctionalKind::A:
        return s + T;
    case FunctionalKind::B:
        return s * s + T;
    case FunctionalKind::C:
        return a + T + rm * one_a2 / (1.0 - a * rm);
    case FunctionalKind::D:
        return a * a + T + rm * one_a2 / (1.0 - a * rm);
    case FunctionalKind::E:
        return s + rm * one_a2 / dplus + area2;
    case FunctionalKind::F:
        return s * s + rm * one_a2 / dplus + area2;
    case FunctionalKind::G:
        return s + r * one_a2 / dplus + area2;
    case FunctionalKind::H:
        return s * s + r * one_a2 / dplus + area2;
    case FunctionalKind::I: {
        const double third = rm * one_a2 / (1.0 - a * rm);
        return a + T + third * third;
    }
    default:
        throw usage_error("unhandled functional kind");
    }
}

double coefficient_bound(double a, double r) {
    if (!(a >= 0.0 && a <= 1.0))
        throw domain_error("head coefficient must lie in [0,1]");
    require_radius(r);
    if (a >= r)
        return r * (1.0 - a * a) / (1.0 - r * a);
    return r * std::sqrt(1.0 - a * a) / std::sqrt(1.0 - r * r);
}

bool uses_derivative(FunctionalKind kind) {
    switch (kind) {
    case FunctionalKind::E:
    case FunctionalKind::F:
    case FunctionalKind::G:
    case FunctionalKind::H:
    case FunctionalKind::ThmE1:
    case FunctionalKind::ThmE2:
        return true;
    default:
        return false;
    }
}

std::string kind_name(FunctionalKind kind) {
    switch (kind) {
    case FunctionalKind::A: return "A";
    case FunctionalKind::B: return "B";
    case FunctionalKind::C: return "C";
    case FunctionalKind::D: return "D";
    case FunctionalKind::E: return "E";
    case FunctionalKind::F: return "F";
    case FunctionalKind::G: return "G";
    case FunctionalKind::H: return "H";
    case FunctionalKind::I: return "I";
    case FunctionalKind::ThmB1: return "thmB1";
    case FunctionalKind::ThmB2: return "thmB2";
    case FunctionalKind::ThmC1: return "thmC1";
    case FunctionalKind::ThmC2: return "thmC2";
    case FunctionalKind::ThmD1: return "thmD1";
    case FunctionalKind::ThmD2: return "thmD2";
    case FunctionalKind::ThmE1: return "thmE1";
    case FunctionalKind::ThmE2: return "thmE2";
    case FunctionalKind::ThmF: return "thmF";
    }
    throw usage_error("unhandled functional kind");
}

FunctionalKind parse_kind(const std::string& name) {
    static const std::pair<const char*, FunctionalKind> table[] = {
        {"A", FunctionalKind::A},         {"B", FunctionalKind::B},
        {"C", FunctionalKind::C},         {"D", FunctionalKind::D},
        {"E", FunctionalKind::E},         {"F", FunctionalKind::F},
        {"G", FunctionalKind::G},         {"H", FunctionalKind::H},
        {"I", FunctionalKind::I},         {"thmB1", FunctionalKind::ThmB1},
        {"thmB2", FunctionalKind::ThmB2}, {"thmC1", FunctionalKind::ThmC1},
        {"thmC2", FunctionalKind::ThmC2}, {"thmD1", FunctionalKind::ThmD1},
        {"thmD2", FunctionalKind::ThmD2}, {"thmE1", FunctionalKind::ThmE1},
        {"thmE2", FunctionalKind::ThmE2}, {"thmF", FunctionalKind::ThmF},
    };
    for (const auto& [key, kind] : table)
        if (name == key)
            return kind;
    throw usage_error("unknown functional kind '" + name + "'");
}

} // namespace bohr
