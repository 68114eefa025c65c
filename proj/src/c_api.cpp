#include "bohr/bohr.h"

#include <cmath>
#include <cstring>
#include <new>

#include <nlohmann/json.hpp>

#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"
#include "bohr/verify.hpp"

using nlohmann::json;

struct bohr_func {
    bohr::BoundedFunc fn;
};
struct bohr_schwarz {
    bohr::SchwarzFn fn;
};
struct bohr_report {
    bohr::CheckReport rep;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
bohr_status wrap(Fn&& body) {
    try {
        body();
        return BOHR_OK;
    } catch (const bohr::usage_error& e) {
        g_last_error = e.what();
        return BOHR_ERR_USAGE;
    } catch (const bohr::domain_error& e) {
        g_last_error = e.what();
        return BOHR_ERR_DOMAIN;
    } catch (const bohr::convergence_error& e) {
        g_last_error = e.what();
        return BOHR_ERR_CONVERGENCE;
    } catch (const bohr::precision_error& e) {
        g_last_error = e.what();
        return BOHR_ERR_PRECISION;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BOHR_ERR_INTERNAL;
    }
}

bohr_status require(bool ok, const char* message) {
    if (ok)
        return BOHR_OK;
    g_last_error = message;
    return BOHR_ERR_USAGE;
}

int order_or_default(int trunc_order) {
    return trunc_order < 0 ? bohr::kDefaultOrder : trunc_order;
}

bohr::FunctionalKind to_kind(int kind) {
    if (kind < BOHR_KIND_A || kind > BOHR_KIND_THM_F)
        throw bohr::usage_error("functional kind out of range");
    return static_cast<bohr::FunctionalKind>(kind);
}

} // namespace

extern "C" {

const char* bohr_version(void) { return "1.0.0"; }

const char* bohr_last_error(void) { return g_last_error.c_str(); }

bohr_status bohr_func_mobius(double a, int trunc_order, bohr_func** out) {
    if (bohr_status s = require(out != nullptr, "null output handle"))
        return s;
    return wrap([&] { *out = new bohr_func{bohr::make_mobius(a, order_or_default(trunc_order))}; });
}

bohr_status bohr_func_blaschke(const double* zeros_re, const double* zeros_im,
                               size_t n_zeros, double rot_re, double rot_im,
                               int trunc_order, bohr_func** out) {
    if (bohr_status s = require(out != nullptr, "null output handle"))
        return s;
    if (bohr_status s = require(n_zeros == 0 || (zeros_re && zeros_im),
                                "null zero arrays with nonzero count"))
        return s;
    return wrap([&] {
        std::vector<bohr::cplx> zeros(n_zeros);
        for (size_t i = 0; i < n_zeros; ++i)
            zeros[i] = {zeros_re[i], zeros_im[i]};
        *out = new bohr_func{bohr::make_blaschke(zeros, {rot_re, rot_im},
                                                 order_or_default(trunc_order))};
    });
}

bohr_status bohr_func_constant(double re, double im, int trunc_order, bohr_func** out) {
    if (bohr_status s = require(out != nullptr, "null output handle"))
        return s;
    return wrap([&] {
        *out = new bohr_func{bohr::make_constant({re, im}, order_or_default(trunc_order))};
    });
}

bohr_status bohr_func_convex(const bohr_func* f, const bohr_func* g, double t,
                             bohr_func** out) {
    if (bohr_status s = require(f && g && out, "null handle"))
        return s;
    return wrap([&] { *out = new bohr_func{bohr::combine_convex(f->fn, g->fn, t)}; });
}

bohr_status bohr_func_scale(const bohr_func* f, double rho, bohr_func** out) {
    if (bohr_status s = require(f && out, "null handle"))
        return s;
    return wrap([&] { *out = new bohr_func{bohr::combine_scale(f->fn, rho)}; });
}

bohr_status bohr_func_rotate(const bohr_func* f, double lambda_re, double lambda_im,
                             bohr_func** out) {
    if (bohr_status s = require(f && out, "null handle"))
        return s;
    return wrap([&] {
        *out = new bohr_func{bohr::combine_rotate(f->fn, {lambda_re, lambda_im})};
    });
}

bohr_status bohr_func_sample(uint64_t seed, int blaschke_degree_max, int mix_depth_max,
                             bohr_func** out) {
    if (bohr_status s = require(out != nullptr, "null output handle"))
        return s;
    return wrap([&] {
        bohr::SamplerConfig config;
        config.seed = seed;
        if (blaschke_degree_max >= 0)
            config.blaschke_degree_max = blaschke_degree_max;
        if (mix_depth_max >= 0)
            config.mix_depth_max = mix_depth_max;
        *out = new bohr_func{bohr::sample_bounded(config)};
    });
}

void bohr_func_free(bohr_func* f) { delete f; }

bohr_status bohr_schwarz_new(int m, const bohr_func* inner, bohr_schwarz** out) {
    if (bohr_status s = require(inner && out, "null handle"))
        return s;
    return wrap([&] { *out = new bohr_schwarz{bohr::make_schwarz(m, inner->fn)}; });
}

void bohr_schwarz_free(bohr_schwarz* w) { delete w; }

int bohr_func_order(const bohr_func* f) { return f ? f->fn.trunc_order() : -1; }

bohr_status bohr_func_coeff(const bohr_func* f, int n, double* re, double* im) {
    if (bohr_status s = require(f && re && im, "null handle"))
        return s;
    const bohr::cplx c = f->fn.coeff(n);
    *re = c.real();
    *im = c.imag();
    return BOHR_OK;
}

bohr_status bohr_func_eval(const bohr_func* f, double z_re, double z_im, int use_series,
                           double* re, double* im, double* err) {
    if (bohr_status s = require(f && re && im, "null handle"))
        return s;
    return wrap([&] {
        const bohr::PointValue v = bohr::eval_point(
            f->fn, {z_re, z_im}, use_series ? bohr::EvalMode::series : bohr::EvalMode::exact);
        *re = v.value.real();
        *im = v.value.imag();
        if (err)
            *err = v.error;
    });
}

bohr_status bohr_func_deriv(const bohr_func* f, double z_re, double z_im, int use_series,
                            double* re, double* im, double* err) {
    if (bohr_status s = require(f && re && im, "null handle"))
        return s;
    return wrap([&] {
        const bohr::PointValue v = bohr::eval_deriv(
            f->fn, {z_re, z_im}, use_series ? bohr::EvalMode::series : bohr::EvalMode::exact);
        *re = v.value.real();
        *im = v.value.imag();
        if (err)
            *err = v.error;
    });
}

bohr_status bohr_schwarz_eval(const bohr_schwarz* w, double z_re, double z_im,
                              double* re, double* im) {
    if (bohr_status s = require(w && re && im, "null handle"))
        return s;
    return wrap([&] {
        const bohr::cplx v = w->fn.eval({z_re, z_im});
        *re = v.real();
        *im = v.imag();
    });
}

bohr_status bohr_majorant_sum(const bohr_func* f, int k, double r, double* value,
                              double* tail) {
    if (bohr_status s = require(f && value, "null handle"))
        return s;
    return wrap([&] {
        const bohr::BoundedValue v = bohr::bohr_sum(f->fn, k, r);
        *value = v.value;
        if (tail)
            *tail = v.tail;
    });
}

bohr_status bohr_area_norm(const bohr_func* f, double r, double* value, double* tail) {
    if (bohr_status s = require(f && value, "null handle"))
        return s;
    return wrap([&] {
        const bohr::BoundedValue v = bohr::area_norm(f->fn, r);
        *value = v.value;
        if (tail)
            *tail = v.tail;
    });
}

bohr_status bohr_area_term(const bohr_func* f, double r, double* value, double* tail) {
    if (bohr_status s = require(f && value, "null handle"))
        return s;
    return wrap([&] {
        const bohr::BoundedValue v = bohr::area_term(f->fn, r);
        *value = v.value;
        if (tail)
            *tail = v.tail;
    });
}

bohr_status bohr_functional(int kind, const bohr_func* f, const bohr_schwarz* omega,
                            double z_re, double z_im, double* value, double* tail) {
    if (bohr_status s = require(f && omega && value, "null handle"))
        return s;
    return wrap([&] {
        const bohr::BoundedValue v =
            bohr::eval_functional(to_kind(kind), f->fn, omega->fn, {z_re, z_im});
        *value = v.value;
        if (tail)
            *tail = v.tail;
    });
}

bohr_status bohr_extremal_value(int kind, int m, double a, double r, double* out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] { *out = bohr::extremal_value(to_kind(kind), m, a, r); });
}

bohr_status bohr_coefficient_bound(double a, double r, double* out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] { *out = bohr::coefficient_bound(a, r); });
}

bohr_status bohr_solve_radius(const char* family, int m, double a, double tol,
                              bohr_root_result* out) {
    if (bohr_status s = require(family && out, "null handle"))
        return s;
    return wrap([&] {
        bohr::EquationFamily fam;
        fam.tag = bohr::parse_family(family);
        fam.m = m;
        if (fam.tag == bohr::Family::alpha_a || fam.tag == bohr::Family::beta_a)
            fam.a = a;
        const bohr::RootResult r =
            bohr::solve_radius(fam, tol <= 0.0 ? 1e-12 : tol);
        *out = {r.root, r.lo, r.hi, r.residual, r.iterations, r.sign_lo, r.sign_hi};
    });
}

bohr_status bohr_eval_family(const char* family, int m, double a, double r, double* out) {
    if (bohr_status s = require(family && out, "null handle"))
        return s;
    return wrap([&] {
        bohr::EquationFamily fam;
        fam.tag = bohr::parse_family(family);
        fam.m = m;
        if (fam.tag == bohr::Family::alpha_a || fam.tag == bohr::Family::beta_a)
            fam.a = a;
        *out = bohr::eval_family(fam, r);
    });
}

bohr_status bohr_classical_radius(const char* name, double a, double* out) {
    if (bohr_status s = require(name && out, "null handle"))
        return s;
    return wrap([&] { *out = bohr::classical_radius(bohr::parse_classical(name), a); });
}

bohr_status bohr_limit_radius(const char* family, double* out) {
    if (bohr_status s = require(family && out, "null handle"))
        return s;
    return wrap([&] { *out = bohr::limit_radius(bohr::parse_family(family)); });
}

bohr_status bohr_functional_radius(int kind, int m, double* out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] { *out = bohr::functional_radius(to_kind(kind), m); });
}

bohr_status bohr_check_theorem(int kind, int m, uint64_t seed, long trials,
                               int z_per_function, double r_fraction,
                               bohr_report** out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] {
        bohr::SamplerConfig config;
        config.seed = seed;
        if (z_per_function > 0)
            config.z_per_function = z_per_function;
        *out = new bohr_report{
            bohr::check_theorem(to_kind(kind), m, config, r_fraction, trials)};
    });
}

bohr_status bohr_check_lemma1(uint64_t seed, long trials, bohr_report** out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] {
        bohr::SamplerConfig config;
        config.seed = seed;
        *out = new bohr_report{bohr::check_lemma1(config, {}, trials)};
    });
}

bohr_status bohr_check_lemma2(uint64_t seed, long trials, bohr_report** out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] {
        bohr::SamplerConfig config;
        config.seed = seed;
        *out = new bohr_report{bohr::check_lemma2(config, {}, trials)};
    });
}

bohr_status bohr_check_schwarz_pick(uint64_t seed, long trials, int pairs,
                                    bohr_report** out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] {
        bohr::SamplerConfig config;
        config.seed = seed;
        *out = new bohr_report{
            bohr::check_schwarz_pick(config, pairs > 0 ? pairs : 8, trials)};
    });
}

bohr_status bohr_check_lemma3(int m, bohr_report** out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] { *out = new bohr_report{bohr::check_lemma3(m)}; });
}

bohr_status bohr_check_lemma4(int m, bohr_report** out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] { *out = new bohr_report{bohr::check_lemma4(m)}; });
}

bohr_status bohr_check_discrepancies(bohr_report** out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] { *out = new bohr_report{bohr::check_discrepancies()}; });
}

bohr_status bohr_sharpness_witness(int kind, int m, double a, double eps, double* out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] { *out = bohr::sharpness_witness(to_kind(kind), m, a, eps); });
}

bohr_status bohr_threshold_a_star(double* out) {
    if (bohr_status s = require(out != nullptr, "null output"))
        return s;
    return wrap([&] { *out = bohr::threshold_a_star(); });
}

const char* bohr_report_subject(const bohr_report* rep) {
    return rep ? rep->rep.subject.c_str() : "";
}

long bohr_report_trials(const bohr_report* rep) { return rep ? rep->rep.trials : 0; }

double bohr_report_worst_margin(const bohr_report* rep) {
    return rep ? rep->rep.worst_margin : 0.0;
}

int bohr_report_passed(const bohr_report* rep) {
    return rep && rep->rep.passed ? 1 : 0;
}

long bohr_report_violation_count(const bohr_report* rep) {
    return rep ? static_cast<long>(rep->rep.violations.size()) : 0;
}

char* bohr_report_to_json(const bohr_report* rep) {
    if (!rep)
        return nullptr;
    json doc;
    doc["subject"] = rep->rep.subject;
    doc["trials"] = rep->rep.trials;
    // -inf (empty scan) is not representable in JSON; null stands in for it.
    if (std::isfinite(rep->rep.worst_margin))
        doc["worst_margin"] = rep->rep.worst_margin;
    else
        doc["worst_margin"] = nullptr;
    doc["passed"] = rep->rep.passed;
    doc["violations"] = json::array();
    for (const bohr::Violation& v : rep->rep.violations)
        doc["violations"].push_back(
            {{"seed", v.seed}, {"parameters", v.params}, {"value", v.value}});
    const std::string text = doc.dump();
    char* buffer = new (std::nothrow) char[text.size() + 1];
    if (!buffer)
        return nullptr;
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return buffer;
}

void bohr_report_free(bohr_report* rep) { delete rep; }

void bohr_string_free(char* s) { delete[] s; }

} // extern "C"
