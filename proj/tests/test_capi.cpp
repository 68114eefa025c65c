#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bohr/bohr.h"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstring>
#include <memory>
#include <string>

namespace {
struct FuncDeleter {
    void operator()(bohr_func* f) const { bohr_func_free(f); }
};
struct SchwarzDeleter {
    void operator()(bohr_schwarz* w) const { bohr_schwarz_free(w); }
};
struct ReportDeleter {
    void operator()(bohr_report* r) const { bohr_report_free(r); }
};
using Func = std::unique_ptr<bohr_func, FuncDeleter>;
using Schwarz = std::unique_ptr<bohr_schwarz, SchwarzDeleter>;
using Report = std::unique_ptr<bohr_report, ReportDeleter>;

Func mobius(double a) {
    bohr_func* raw = nullptr;
    REQUIRE(bohr_func_mobius(a, -1, &raw) == BOHR_OK);
    return Func(raw);
}
} // namespace

TEST_CASE("version and error strings are always available") {
    CHECK(bohr_version() != nullptr);
    CHECK(std::strlen(bohr_version()) > 0);
    CHECK(bohr_last_error() != nullptr);
}

TEST_CASE("constructors hand back working handles") {
    const Func f = mobius(0.5);
    CHECK(bohr_func_order(f.get()) == 128);

    double re = 0, im = 0, err = -1;
    CHECK(bohr_func_coeff(f.get(), 1, &re, &im) == BOHR_OK);
    CHECK(re == doctest::Approx(0.75));
    CHECK(im == doctest::Approx(0.0));

    CHECK(bohr_func_eval(f.get(), 0.2, 0.0, 0, &re, &im, &err) == BOHR_OK);
    CHECK(re == doctest::Approx(0.7 / 1.1).epsilon(1e-14));
    CHECK(err == 0.0);
    CHECK(bohr_func_eval(f.get(), 0.2, 0.0, 1, &re, &im, &err) == BOHR_OK);
    CHECK(re == doctest::Approx(0.7 / 1.1).epsilon(1e-12));
    CHECK(err > 0.0);

    CHECK(bohr_func_deriv(f.get(), 0.0, 0.0, 0, &re, &im, &err) == BOHR_OK);
    CHECK(re == doctest::Approx(0.75)); // f'(0) = 1 - a^2

    const double zr[] = {0.5}, zi[] = {0.0};
    bohr_func* craw = nullptr;
    REQUIRE(bohr_func_blaschke(zr, zi, 1, 1.0, 0.0, -1, &craw) == BOHR_OK);
    const Func b(craw);
    CHECK(bohr_func_coeff(b.get(), 0, &re, &im) == BOHR_OK);
    CHECK(re == doctest::Approx(-0.5));

    bohr_func* mixraw = nullptr;
    REQUIRE(bohr_func_convex(f.get(), b.get(), 0.5, &mixraw) == BOHR_OK);
    const Func mix(mixraw);
    CHECK(bohr_func_coeff(mix.get(), 0, &re, &im) == BOHR_OK);
    CHECK(re == doctest::Approx(0.0));
}

TEST_CASE("failures set a status and a message without touching outputs") {
    bohr_func* raw = reinterpret_cast<bohr_func*>(0x1); // sentinel
    CHECK(bohr_func_mobius(1.5, -1, &raw) == BOHR_ERR_DOMAIN);
    CHECK(raw == reinterpret_cast<bohr_func*>(0x1));
    CHECK(std::strlen(bohr_last_error()) > 0);

    const Func f = mobius(0.3);
    double re, im, err;
    CHECK(bohr_func_eval(f.get(), 1.2, 0.0, 1, &re, &im, &err) == BOHR_ERR_DOMAIN);

    bohr_root_result res;
    CHECK(bohr_solve_radius("nosuch", 1, 0.0, 0.0, &res) == BOHR_ERR_USAGE);
    CHECK(bohr_solve_radius("alpha", 0, 0.0, 0.0, &res) == BOHR_ERR_DOMAIN);

    double out;
    CHECK(bohr_extremal_value(99, 1, 0.5, 0.2, &out) == BOHR_ERR_USAGE);
    CHECK(bohr_classical_radius("thmZ", 0.0, &out) == BOHR_ERR_USAGE);
    CHECK(bohr_limit_radius("mu", &out) == BOHR_ERR_USAGE);

    bohr_schwarz* wraw = nullptr;
    CHECK(bohr_schwarz_new(0, f.get(), &wraw) == BOHR_ERR_DOMAIN);
}

TEST_CASE("sampling through the C surface is reproducible") {
    bohr_func *a = nullptr, *b = nullptr;
    REQUIRE(bohr_func_sample(42, 4, 2, &a) == BOHR_OK);
    REQUIRE(bohr_func_sample(42, 4, 2, &b) == BOHR_OK);
    const Func fa(a), fb(b);
    for (int n = 0; n <= 8; ++n) {
        double ra, ia, rb, ib;
        CHECK(bohr_func_coeff(fa.get(), n, &ra, &ia) == BOHR_OK);
        CHECK(bohr_func_coeff(fb.get(), n, &rb, &ib) == BOHR_OK);
        CHECK(ra == rb);
        CHECK(ia == ib);
    }
}

TEST_CASE("functionals and extremal values work through the C surface") {
    const Func one = [] {
        bohr_func* raw = nullptr;
        REQUIRE(bohr_func_constant(1.0, 0.0, -1, &raw) == BOHR_OK);
        return Func(raw);
    }();
    bohr_schwarz* wraw = nullptr;
    REQUIRE(bohr_schwarz_new(1, one.get(), &wraw) == BOHR_OK);
    const Schwarz w(wraw);

    const Func f = mobius(0.5);
    double value = 0, tail = 0;
    CHECK(bohr_functional(BOHR_KIND_A, f.get(), w.get(), 0.2, 0.0, &value, &tail) ==
          BOHR_OK);
    CHECK(value ==
          doctest::Approx(0.7 / 1.1 + 0.15 / 0.9 + 0.0225 / 1.08).epsilon(1e-13));
    CHECK(tail >= 0.0);

    CHECK(bohr_majorant_sum(f.get(), 1, 0.2, &value, &tail) == BOHR_OK);
    CHECK(value == doctest::Approx(0.15 / 0.9).epsilon(1e-13));
    CHECK(bohr_area_term(f.get(), 0.2, &value, &tail) == BOHR_OK);
    CHECK(value == doctest::Approx(0.0225 / 1.08).epsilon(1e-13));

    CHECK(bohr_extremal_value(BOHR_KIND_I, 2, 0.5, 1.0 / 3.0, &value) == BOHR_OK);
    CHECK(value == doctest::Approx(2041.0 / 2312.0).epsilon(1e-13));

    CHECK(bohr_coefficient_bound(0.8, 0.5, &value) == BOHR_OK);
    CHECK(value == doctest::Approx(0.3).epsilon(1e-13));
}

TEST_CASE("solving returns the same certificate the C++ core produces") {
    bohr_root_result res;
    REQUIRE(bohr_solve_radius("alpha", 3, 0.0, 0.0, &res) == BOHR_OK);
    CHECK(res.root == doctest::Approx(0.3190532537).epsilon(1e-9));
    CHECK(res.hi - res.lo <= 1e-12);
    CHECK(res.sign_lo * res.sign_hi == -1);
    CHECK(res.lo <= res.root);
    CHECK(res.root <= res.hi);

    REQUIRE(bohr_solve_radius("alpha_a", 2, 0.5, 1e-13, &res) == BOHR_OK);
    CHECK(res.hi - res.lo <= 1e-13);

    double value = 0;
    CHECK(bohr_eval_family("zeta", 1, 0.0, 0.0, &value) == BOHR_OK);
    CHECK(value == doctest::Approx(-1.0));
    CHECK(bohr_classical_radius("thmE1", 0.0, &value) == BOHR_OK);
    CHECK(value == doctest::Approx((std::sqrt(17.0) - 3) / 4).epsilon(1e-12));
    CHECK(bohr_limit_radius("delta", &value) == BOHR_OK);
    CHECK(value == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-14));
    CHECK(bohr_functional_radius(BOHR_KIND_I, 5, &value) == BOHR_OK);
    CHECK(value == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("verification reports round-trip through JSON") {
    bohr_report* raw = nullptr;
    REQUIRE(bohr_check_theorem(BOHR_KIND_A, 1, 5, 30, 8, 0.999, &raw) == BOHR_OK);
    const Report rep(raw);
    CHECK(bohr_report_passed(rep.get()) == 1);
    CHECK(bohr_report_trials(rep.get()) == 30);
    CHECK(bohr_report_worst_margin(rep.get()) < 0.0);
    CHECK(bohr_report_violation_count(rep.get()) == 0);
    CHECK(std::string(bohr_report_subject(rep.get())) == "A/m=1");

    char* text = bohr_report_to_json(rep.get());
    REQUIRE(text != nullptr);
    const nlohmann::json j = nlohmann::json::parse(text);
    bohr_string_free(text);
    CHECK(j.at("subject") == "A/m=1");
    CHECK(j.at("passed") == true);
    CHECK(j.at("trials") == 30);
    CHECK(j.at("violations").is_array());
    CHECK(j.at("worst_margin").get<double>() ==
          doctest::Approx(bohr_report_worst_margin(rep.get())));
}

TEST_CASE("lemma and discrepancy checks pass through the C surface") {
    bohr_report* raw = nullptr;
    REQUIRE(bohr_check_lemma1(9, 30, &raw) == BOHR_OK);
    Report l1(raw);
    CHECK(bohr_report_passed(l1.get()) == 1);

    REQUIRE(bohr_check_lemma3(2, &raw) == BOHR_OK);
    Report l3(raw);
    CHECK(bohr_report_passed(l3.get()) == 1);

    REQUIRE(bohr_check_schwarz_pick(10, 30, 4, &raw) == BOHR_OK);
    Report sp(raw);
    CHECK(bohr_report_passed(sp.get()) == 1);

    REQUIRE(bohr_check_discrepancies(&raw) == BOHR_OK);
    Report disc(raw);
    CHECK(bohr_report_passed(disc.get()) == 1);

    double value = 0;
    CHECK(bohr_threshold_a_star(&value) == BOHR_OK);
    CHECK(value == doctest::Approx(4 * std::sqrt(2.0) - 5).epsilon(1e-8));
    CHECK(bohr_sharpness_witness(BOHR_KIND_A, 1, 0.999, 0.01, &value) == BOHR_OK);
    CHECK(value > 1.0);
}
