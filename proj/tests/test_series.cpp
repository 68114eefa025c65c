#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bohr/series.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace bohr;
using doctest::Approx;

namespace {
const cplx I{0.0, 1.0};

double grid_max_modulus(const BoundedFunc& f, double radius, int points) {
    double worst = 0.0;
    for (int k = 0; k < points; ++k) {
        const double t = 2.0 * std::numbers::pi * k / points;
        worst = std::max(worst, std::abs(f.eval(radius * std::polar(1.0, t))));
    }
    return worst;
}
} // namespace

TEST_CASE("disk automorphism coefficients follow the geometric law") {
    const double a = 0.5;
    const BoundedFunc f = make_mobius(a);
    CHECK(f.trunc_order() == kDefaultOrder);
    CHECK(f.head() == Approx(a));
    CHECK(f.coeff(0).real() == Approx(0.5));
    CHECK(f.coeff(1).real() == Approx(0.75));
    CHECK(f.coeff(2).real() == Approx(-0.375));
    CHECK(f.coeff(3).real() == Approx(0.1875));
    for (int n = 1; n <= 20; ++n) {
        const double expected = (1.0 - a * a) * std::pow(-a, n - 1);
        CHECK(f.coeff(n).real() == Approx(expected).epsilon(1e-14));
        CHECK(f.coeff(n).imag() == 0.0);
    }
    // f(0.2) = 0.7 / 1.1
    CHECK(f.eval(0.2).real() == Approx(0.7 / 1.1).epsilon(1e-15));
}

TEST_CASE("blaschke factors expand and differentiate correctly") {
    const BoundedFunc b = make_blaschke({cplx{0.5, 0.0}}, 1.0);
    CHECK(b.coeff(0).real() == Approx(-0.5));
    CHECK(b.coeff(1).real() == Approx(0.75));
    CHECK(b.coeff(2).real() == Approx(0.375));
    CHECK(b.coeff(3).real() == Approx(0.1875));
    // b'(z) = (1 - 0.25) / (1 - 0.5 z)^2
    CHECK(b.deriv(0.2).real() == Approx(0.75 / (0.9 * 0.9)).epsilon(1e-15));

    const BoundedFunc unit = make_blaschke({}, -1.0);
    CHECK(unit.coeff(0).real() == Approx(-1.0));
    CHECK(std::abs(unit.eval(cplx{0.3, 0.1}) - cplx{-1.0, 0.0}) < 1e-15);

    const BoundedFunc ident = make_blaschke({cplx{0.0, 0.0}}, 1.0);
    CHECK(std::abs(ident.coeff(0)) == 0.0);
    CHECK(ident.coeff(1).real() == Approx(1.0));
    CHECK(ident.eval(cplx{0.3, 0.2}).real() == Approx(0.3));

    // Complex zero: the series is still summable against the exact value.
    const BoundedFunc c = make_blaschke({cplx{0.3, 0.4}, cplx{-0.2, 0.1}}, I);
    const cplx z{0.25, -0.35};
    const PointValue approx = eval_point(c, z, EvalMode::series);
    CHECK(std::abs(approx.value - c.eval(z)) <= approx.error + 1e-12);
}

TEST_CASE("convex mixes, scalings and argument rotations act coefficientwise") {
    const BoundedFunc f = make_mobius(0.4);
    const BoundedFunc g = make_constant(cplx{0.0, 0.8});

    const BoundedFunc mix = combine_convex(f, g, 0.25);
    for (int n = 0; n <= 6; ++n) {
        const cplx want = 0.25 * f.coeff(n) + 0.75 * g.coeff(n);
        CHECK(std::abs(mix.coeff(n) - want) < 1e-15);
    }
    const cplx z{0.2, 0.3};
    CHECK(std::abs(mix.eval(z) - (0.25 * f.eval(z) + 0.75 * g.eval(z))) < 1e-15);

    const BoundedFunc half = combine_scale(f, 0.5);
    CHECK(std::abs(half.coeff(3) - 0.5 * f.coeff(3)) < 1e-16);
    CHECK(std::abs(half.eval(z) - 0.5 * f.eval(z)) < 1e-15);

    const BoundedFunc rot = combine_rotate(f, I);
    for (int n = 0; n <= 6; ++n)
        CHECK(std::abs(rot.coeff(n) - f.coeff(n) * std::pow(I, n)) < 1e-15);
    CHECK(std::abs(rot.eval(z) - f.eval(I * z)) < 1e-15);
    CHECK(std::abs(rot.deriv(z) - I * f.deriv(I * z)) < 1e-15);
}

TEST_CASE("construction rejects out-of-domain parameters") {
    CHECK_THROWS_AS(make_mobius(1.0), domain_error);
    CHECK_THROWS_AS(make_mobius(-0.1), domain_error);
    CHECK_THROWS_AS(make_mobius(0.5, -1), domain_error);
    CHECK_THROWS_AS(make_constant(cplx{1.2, 0.0}), domain_error);
    CHECK_THROWS_AS(make_blaschke({cplx{1.2, 0.0}}, 1.0), domain_error);
    CHECK_THROWS_AS(make_blaschke({cplx{0.5, 0.0}}, 2.0), domain_error);
    CHECK_THROWS_AS(make_blaschke({cplx{0.5, 0.0}}, 1.0, 0), domain_error);

    const BoundedFunc f = make_mobius(0.3);
    const BoundedFunc g = make_constant(0.1);
    CHECK_THROWS_AS(combine_convex(f, g, 1.2), domain_error);
    CHECK_THROWS_AS(combine_convex(f, g, -0.2), domain_error);
    CHECK_THROWS_AS(combine_scale(f, 1.5), domain_error);
    CHECK_THROWS_AS(combine_scale(f, -0.1), domain_error);
    CHECK_THROWS_AS(combine_rotate(f, cplx{0.9, 0.0}), domain_error);

    CHECK_THROWS_AS(make_schwarz(0, make_constant(1.0)), domain_error);
    CHECK_THROWS_AS(make_schwarz(2, make_constant(0.0)), domain_error);

    CHECK_THROWS_AS(TruncatedSeries({}, TailRule::zero), domain_error);
    CHECK_THROWS_AS(TruncatedSeries({cplx{1.5, 0.0}}, TailRule::unit_ball),
                    domain_error);

    CHECK_THROWS_AS(eval_point(f, cplx{1.0, 0.0}), domain_error);
    CHECK_THROWS_AS(eval_deriv(f, cplx{0.8, 0.8}), domain_error);
}

TEST_CASE("schwarz maps vanish to exact order m") {
    const BoundedFunc u = make_mobius(0.5);
    const SchwarzFn w = make_schwarz(2, u);
    CHECK(w.order() == 2);
    CHECK(std::abs(w.eval(0.3) - 0.09 * u.eval(0.3)) < 1e-15);
    // (z^2 u)' = 2 z u + z^2 u'
    const cplx z{0.3, -0.1};
    CHECK(std::abs(w.deriv(z) - (2.0 * z * u.eval(z) + z * z * u.deriv(z))) < 1e-15);

    const TruncatedSeries s = w.series();
    CHECK(std::abs(s.coeff(0)) == 0.0);
    CHECK(std::abs(s.coeff(1)) == 0.0);
    for (int n = 2; n <= 8; ++n)
        CHECK(std::abs(s.coeff(n) - u.coeff(n - 2)) < 1e-16);

    // |omega(z)| <= |z|^m everywhere in the disk.
    for (double r : {0.2, 0.5, 0.9})
        for (int k = 0; k < 8; ++k) {
            const cplx p = std::polar(r, 0.77 * k);
            CHECK(std::abs(w.eval(p)) <= std::pow(r, 2) * (1.0 + 1e-12));
        }
}

TEST_CASE("composition with an inner map is exact through the window") {
    const BoundedFunc f = make_mobius(0.5);
    const SchwarzFn pow2 = make_schwarz(2, make_constant(1.0));

    const TruncatedSeries comp = compose_inner(f.series(), pow2);
    for (int n = 0; n <= 16; ++n) {
        const cplx want = (n % 2 == 0) ? f.coeff(n / 2) : cplx{};
        CHECK(std::abs(comp.coeff(n) - want) < 1e-15);
    }

    // Generic inner factor: sum the composed series and compare with the
    // closed forms; the gap must stay inside the reported tail.
    const SchwarzFn w = make_schwarz(3, make_mobius(0.4));
    const TruncatedSeries g = compose_inner(f.series(), w);
    const cplx z{0.2, 0.1};
    cplx horner{};
    for (int n = g.trunc_order(); n >= 0; --n) horner = horner * z + g.coeff(n);
    CHECK(std::abs(horner - f.eval(w.eval(z))) <= g.tail_bound(std::abs(z)) + 1e-12);
}

TEST_CASE("series evaluation reports a tail that covers the truncation gap") {
    const BoundedFunc f = make_mobius(0.9);
    const cplx z{0.49, 0.49};
    const PointValue exact = eval_point(f, z);
    const PointValue series = eval_point(f, z, EvalMode::series);
    CHECK(exact.error == 0.0);
    CHECK(std::abs(series.value - exact.value) <= series.error + 1e-15);
    CHECK(series.error == Approx(f.series().tail_bound(std::abs(z))));

    const PointValue dexact = eval_deriv(f, z);
    const PointValue dseries = eval_deriv(f, z, EvalMode::series);
    CHECK(dexact.error == 0.0);
    CHECK(std::abs(dseries.value - dexact.value) <= dseries.error + 1e-12);
}

TEST_CASE("tail bounds follow the geometric formulas") {
    std::vector<cplx> c(9, cplx{0.1, 0.0});
    const TruncatedSeries ball(c, TailRule::unit_ball);
    const TruncatedSeries poly(c, TailRule::zero);
    const double r = 0.6;
    CHECK(ball.tail_bound(r) == Approx(std::pow(r, 9) / 0.4).epsilon(1e-14));
    CHECK(ball.deriv_tail_bound(r) ==
          Approx(std::pow(r, 8) * (9.0 - 8.0 * r) / 0.16).epsilon(1e-14));
    CHECK(poly.tail_bound(r) == 0.0);
    CHECK(poly.deriv_tail_bound(r) == 0.0);
}

TEST_CASE("every construction stays inside the unit ball on the boundary grid") {
    const BoundedFunc parts[] = {
        make_mobius(0.7),
        make_blaschke({cplx{0.5, 0.2}, cplx{-0.3, 0.6}}, std::polar(1.0, 0.3)),
        combine_convex(make_mobius(0.2), make_blaschke({cplx{0.1, -0.7}}, 1.0), 0.4),
        combine_rotate(combine_scale(make_mobius(0.95), 0.99), -I),
    };
    for (const BoundedFunc& f : parts) {
        CHECK_FALSE(f.provenance().empty());
        CHECK(grid_max_modulus(f, 0.999, 256) <= 1.0 + 1e-9);
    }
}
