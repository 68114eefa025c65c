#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bohr/functionals.hpp"

#include <cmath>
#include <vector>

using namespace bohr;
using doctest::Approx;

namespace {
SchwarzFn identity_map() { return make_schwarz(1, make_constant(1.0)); }

const FunctionalKind kRefined[] = {
    FunctionalKind::A, FunctionalKind::B, FunctionalKind::C,
    FunctionalKind::D, FunctionalKind::E, FunctionalKind::F,
    FunctionalKind::G, FunctionalKind::H, FunctionalKind::I,
};
} // namespace

TEST_CASE("majorant sums and the area term match the geometric closed forms") {
    const BoundedFunc f = make_mobius(0.5);
    const double r = 0.2;
    // |a_n| = 0.75 * 0.5^(n-1) for n >= 1, so the sums telescope.
    CHECK(bohr_sum(f, 1, r).value == Approx(0.15 / 0.9).epsilon(1e-14));
    CHECK(bohr_sum(f, 0, r).value == Approx(0.5 + 0.15 / 0.9).epsilon(1e-14));
    CHECK(bohr_sum(f, 2, r).value == Approx(0.15 / 0.9 - 0.15).epsilon(1e-13));
    CHECK(area_norm(f, r).value == Approx(0.0225 / 0.99).epsilon(1e-14));
    // weight (1+ar)/((1+a)(1-r)) = 1.1 / 1.2
    CHECK(area_term(f, r).value == Approx(0.0225 / 1.08).epsilon(1e-14));

    CHECK(bohr_sum(f, 1, r).tail <= std::pow(r, 129) / (1 - r) + 1e-30);
    CHECK_THROWS_AS(bohr_sum(f, 1, 1.0), domain_error);
    CHECK_THROWS_AS(bohr_sum(f, -1, r), domain_error);
    CHECK_THROWS_AS(area_norm(f, -0.1), domain_error);
}

TEST_CASE("worked example: first refined bound at the identity inner map") {
    const BoundedFunc f = make_mobius(0.5);
    const BoundedValue v = eval_functional(FunctionalKind::A, f, identity_map(), 0.2);
    CHECK(v.value == Approx(0.7 / 1.1 + 0.15 / 0.9 + 0.0225 / 1.08).epsilon(1e-14));
    CHECK(v.upper() >= v.value);
    CHECK(v.tail < 1e-20);
}

TEST_CASE("worked example: squared-distance bound at its peak configuration") {
    // Reflection of the automorphism: z -> (a - z)/(1 - a z).
    const BoundedFunc f = combine_rotate(make_mobius(0.5), -1.0);
    const SchwarzFn w = make_schwarz(2, make_constant(1.0));
    const BoundedValue v = eval_functional(FunctionalKind::I, f, w, 1.0 / 3.0);
    CHECK(v.value == Approx(2041.0 / 2312.0).epsilon(1e-14)); // = 0.88278546...
    CHECK(extremal_value(FunctionalKind::I, 2, 0.5, 1.0 / 3.0) ==
          Approx(2041.0 / 2312.0).epsilon(1e-14));
}

TEST_CASE("baseline kinds delegate to the refined kinds at the identity") {
    const BoundedFunc f = make_blaschke({cplx{0.4, 0.3}}, 1.0);
    const SchwarzFn id = identity_map();
    const SchwarzFn ignored = make_schwarz(3, make_mobius(0.2)); // must not matter
    const cplx z{0.15, 0.1};

    const std::pair<FunctionalKind, FunctionalKind> pairs[] = {
        {FunctionalKind::ThmC1, FunctionalKind::A},
        {FunctionalKind::ThmC2, FunctionalKind::B},
        {FunctionalKind::ThmD1, FunctionalKind::C},
        {FunctionalKind::ThmD2, FunctionalKind::D},
        {FunctionalKind::ThmE1, FunctionalKind::E},
        {FunctionalKind::ThmE2, FunctionalKind::F},
        {FunctionalKind::ThmF, FunctionalKind::I},
    };
    for (const auto& [base, refined] : pairs) {
        const BoundedValue lhs = eval_functional(base, f, ignored, z);
        const BoundedValue rhs = eval_functional(refined, f, id, z);
        CHECK(lhs.value == rhs.value); // bitwise: same code path
        CHECK(lhs.tail == rhs.tail);
    }
}

TEST_CASE("classical refinements sum their stated pieces") {
    const BoundedFunc f = make_mobius(0.6);
    const SchwarzFn id = identity_map();
    const double r = 0.25;
    const BoundedValue b1 = eval_functional(FunctionalKind::ThmB1, f, id, r);
    CHECK(b1.value ==
          Approx(bohr_sum(f, 0, r).value + area_term(f, r).value).epsilon(1e-15));
    const BoundedValue b2 = eval_functional(FunctionalKind::ThmB2, f, id, r);
    CHECK(b2.value == Approx(0.36 + bohr_sum(f, 1, r).value + area_term(f, r).value)
                          .epsilon(1e-15));
}

TEST_CASE("extremal closed forms match an independent derivation") {
    const int m = 3;
    const double a = 0.3, r = 0.25;
    const double rm = std::pow(r, m);
    const double s = (rm + a) / (1 + a * rm);       // |phi_a(r^m)|
    const double T = r * (1 - a * a) / (1 - r);     // B_1 + area term
    const double S = rm * (1 - a * a) / (1 - a * rm);
    const double P = rm * (1 - a * a) / ((1 + a * rm) * (1 + a * rm));
    const double Pz = r * (1 - a * a) / ((1 + a * rm) * (1 + a * rm));
    const double Q = r * r * (1 - a * a) / (1 - r); // B_2 + area term

    CHECK(extremal_value(FunctionalKind::A, m, a, r) == Approx(s + T).epsilon(1e-14));
    CHECK(extremal_value(FunctionalKind::B, m, a, r) ==
          Approx(s * s + T).epsilon(1e-14));
    CHECK(extremal_value(FunctionalKind::C, m, a, r) ==
          Approx(a + T + S).epsilon(1e-14));
    CHECK(extremal_value(FunctionalKind::D, m, a, r) ==
          Approx(a * a + T + S).epsilon(1e-14));
    CHECK(extremal_value(FunctionalKind::E, m, a, r) ==
          Approx(s + P + Q).epsilon(1e-14));
    CHECK(extremal_value(FunctionalKind::F, m, a, r) ==
          Approx(s * s + P + Q).epsilon(1e-14));
    CHECK(extremal_value(FunctionalKind::G, m, a, r) ==
          Approx(s + Pz + Q).epsilon(1e-14));
    CHECK(extremal_value(FunctionalKind::H, m, a, r) ==
          Approx(s * s + Pz + Q).epsilon(1e-14));
    CHECK(extremal_value(FunctionalKind::I, m, a, r) ==
          Approx(a + T + S * S).epsilon(1e-14));

    CHECK_THROWS_AS(extremal_value(FunctionalKind::ThmB1, 1, 0.5, 0.2), usage_error);
    CHECK_THROWS_AS(extremal_value(FunctionalKind::A, 0, 0.5, 0.2), domain_error);
    CHECK_THROWS_AS(extremal_value(FunctionalKind::A, 1, 1.0, 0.2), domain_error);
    CHECK_THROWS_AS(extremal_value(FunctionalKind::A, 1, 0.5, 1.0), domain_error);
}

TEST_CASE("series evaluation meets the closed form at the peak configuration") {
    // Plain automorphism for the magnitude kinds, reflected for the
    // distance kinds; the evaluation path must land on the closed form.
    for (int m : {1, 2, 4})
        for (double a : {0.2, 0.7})
            for (double r : {0.1, 0.3}) {
                const SchwarzFn w = make_schwarz(m, make_constant(1.0));
                const BoundedFunc plain = make_mobius(a);
                const BoundedFunc reflected = combine_rotate(make_mobius(a), -1.0);
                for (FunctionalKind kind : kRefined) {
                    const bool reflect = kind == FunctionalKind::C ||
                                         kind == FunctionalKind::D ||
                                         kind == FunctionalKind::I;
                    const BoundedValue got =
                        eval_functional(kind, reflect ? reflected : plain, w, r);
                    CHECK(got.value ==
                          Approx(extremal_value(kind, m, a, r)).epsilon(1e-12));
                }
            }
}

TEST_CASE("extremal values grow with the radius") {
    for (FunctionalKind kind : {FunctionalKind::A, FunctionalKind::F}) {
        double prev = extremal_value(kind, 2, 0.8, 0.0);
        for (int i = 1; i <= 40; ++i) {
            const double cur = extremal_value(kind, 2, 0.8, 0.02 * i);
            CHECK(cur >= prev - 1e-15);
            prev = cur;
        }
    }
}

TEST_CASE("sharp coefficient bound switches branch at a = r") {
    CHECK(coefficient_bound(0.1, 0.5) ==
          Approx(0.5 * std::sqrt(0.99) / std::sqrt(0.75)).epsilon(1e-14));
    CHECK(coefficient_bound(0.8, 0.5) == Approx(0.5 * 0.36 / 0.6).epsilon(1e-14));
    CHECK(coefficient_bound(1.0, 0.5) == 0.0);
    // Continuous across the switch.
    CHECK(coefficient_bound(0.5, 0.5) == Approx(0.5).epsilon(1e-14));
    // Attained by the automorphism when a >= r.
    const BoundedFunc f = make_mobius(0.8);
    CHECK(bohr_sum(f, 1, 0.5).value <= coefficient_bound(0.8, 0.5) + 1e-12);
    CHECK(bohr_sum(f, 1, 0.5).value ==
          Approx(coefficient_bound(0.8, 0.5)).epsilon(1e-10));
    CHECK_THROWS_AS(coefficient_bound(-0.1, 0.5), domain_error);
    CHECK_THROWS_AS(coefficient_bound(0.5, 1.0), domain_error);
}

TEST_CASE("derivative-bearing kinds refuse radii where the tail degenerates") {
    const BoundedFunc f = make_mobius(0.5);
    const SchwarzFn id = identity_map();
    CHECK_THROWS_AS(eval_functional(FunctionalKind::E, f, id, cplx{0.995, 0.0}),
                    precision_error);
    CHECK_NOTHROW(eval_functional(FunctionalKind::A, f, id, cplx{0.995, 0.0}));
    CHECK(uses_derivative(FunctionalKind::E));
    CHECK(uses_derivative(FunctionalKind::H));
    CHECK(uses_derivative(FunctionalKind::ThmE1));
    CHECK_FALSE(uses_derivative(FunctionalKind::A));
    CHECK_FALSE(uses_derivative(FunctionalKind::ThmF));
}

TEST_CASE("kind names round-trip") {
    const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H", "I",
                           "thmB1", "thmB2", "thmC1", "thmC2", "thmD1",
                           "thmD2", "thmE1", "thmE2", "thmF"};
    for (const char* n : names) CHECK(kind_name(parse_kind(n)) == n);
    CHECK_THROWS_AS(parse_kind("Z"), usage_error);
}
