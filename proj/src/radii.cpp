#include "bohr/radii.hpp"

#include <cmath>
#include <utility>

namespace bohr {

namespace {

struct Term {
    double c;
    int k;
};

void require_m(const EquationFamily& fam) {
    if (fam.m < 1)
        throw domain_error("family order m must be a positive integer");
}

double head_param(const EquationFamily& fam) {
    if (!fam.a)
        throw domain_error("family " + family_name(fam.tag) + " needs the head coefficient a");
    if (!(*fam.a >= 0.0 && *fam.a <= 1.0))
        throw domain_error("head coefficient must lie in [0,1]");
    return *fam.a;
}

// Monomial expansion of each family. Repeated exponents are fine; the
// compensated sum adds them term by term.
std::vector<Term> terms_for(const EquationFamily& fam) {
    require_m(fam);
    const int m = fam.m;
    switch (fam.tag) {
    case Family::alpha: // (1-r)(1-r^m) - 2r(1+r^m)
        return {{1, 0}, {-3, 1}, {-1, m}, {-1, m + 1}};
    case Family::beta: // 1 - 2r - r^m
        return {{1, 0}, {-2, 1}, {-1, m}};
    case Family::zeta: // r^m(3-5r) + 3r - 1
        return {{-1, 0}, {3, 1}, {3, m}, {-5, m + 1}};
    case Family::eta: // r^m(2-3r) + 2r - 1
        return {{-1, 0}, {2, 1}, {2, m}, {-3, m + 1}};
    case Family::gamma: // r^m(r^m+2)(2r^2-r+1) + 2r^2 + r - 1
        return {{-1, 0}, {1, 1},      {2, 2},       {2, m},      {-2, m + 1},
                {4, m + 2}, {1, 2 * m}, {-1, 2 * m + 1}, {2, 2 * m + 2}};
    case Family::delta: // (r^2m + r^m - 1)(1-r) + r^2 (1+r^m)^2
        return {{-1, 0}, {1, 1},      {1, 2},       {1, m},      {-1, m + 1},
                {2, m + 2}, {1, 2 * m}, {-1, 2 * m + 1}, {1, 2 * m + 2}};
    case Family::theta: // 2r^(2m+2) - r^(2m+1) + r^2m + 4r^(m+2) + 3r - 1
        return {{-1, 0}, {3, 1}, {4, m + 2}, {1, 2 * m}, {-1, 2 * m + 1}, {2, 2 * m + 2}};
    case Family::vartheta: // r^(2m+2) - r^(2m+1) + r^2m + 2r^(m+2) + 2r - 1
        return {{-1, 0}, {2, 1}, {2, m + 2}, {1, 2 * m}, {-1, 2 * m + 1}, {1, 2 * m + 2}};
    case Family::alpha_a: { // (1-r)(1-r^m) - (1+a) r (1+a r^m)
        const double a = head_param(fam);
        return {{1, 0}, {-(2.0 + a), 1}, {-1, m}, {1.0 - a - a * a, m + 1}};
    }
    case Family::beta_a: { // (1-r)(1-r^2m) - r(1+a r^m)^2
        const double a = head_param(fam);
        return {{1, 0}, {-2, 1}, {-2.0 * a, m + 1}, {-1, 2 * m}, {1.0 - a * a, 2 * m + 1}};
    }
    case Family::mu: // r^2m + 2r^m - 1
        return {{-1, 0}, {2, m}, {1, 2 * m}};
    case Family::nu: // 5r^m - 2r^(m-1) - 1
        return {{-1, 0}, {-2, m - 1}, {5, m}};
    case Family::tau: // r^2m + r^m - 1
        return {{-1, 0}, {1, m}, {1, 2 * m}};
    case Family::xi: // r^2m + 2r - 1
        return {{-1, 0}, {2, 1}, {1, 2 * m}};
    case Family::chi: // r^2m + r - 1
        return {{-1, 0}, {1, 1}, {1, 2 * m}};
    case Family::xi5: // 11r^2m - 6r^(2m-1) - 8r^m + 2r^(m-1) + 1
        return {{1, 0}, {2, m - 1}, {-8, m}, {-6, 2 * m - 1}, {11, 2 * m}};
    case Family::delta_alt: // r^m(r^m+1)(r^m - r + 2) + r - 1
        return {{-1, 0}, {1, 1}, {2, m}, {-1, m + 1}, {3, 2 * m}, {-1, 2 * m + 1}, {1, 3 * m}};
    }
    throw usage_error("unhandled family");
}

double kahan_eval(const std::vector<Term>& terms, double r, bool deriv) {
    double sum = 0.0, carry = 0.0;
    for (const Term& t : terms) {
        double x;
        if (deriv) {
            if (t.k == 0)
                continue;
            x = t.c * t.k * std::pow(r, t.k - 1);
        } else {
            x = (t.k == 0) ? t.c : t.c * std::pow(r, t.k);
        }
        const double y = x - carry;
        const double s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    return sum;
}

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

} // namespace

double eval_family(const EquationFamily& fam, double r) {
    return kahan_eval(terms_for(fam), r, false);
}

double eval_family_deriv(const EquationFamily& fam, double r) {
    return kahan_eval(terms_for(fam), r, true);
}

std::pair<double, double> family_bracket(const EquationFamily& fam) {
    require_m(fam);
    switch (fam.tag) {
    case Family::alpha:
    case Family::zeta:
        return {0.0, 1.0 / 3.0};
    case Family::eta:
        return {0.0, 0.5};
    default:
        // Several families vanish at r = 1 identically in m, so stop just
        // short of it; the interior sign change is what we are after.
        return {0.0, 1.0 - 1e-9};
    }
}

RootResult solve_radius(const EquationFamily& fam, double tol) {
    if (!(tol >= 1e-14 && tol < 0.1))
        throw domain_error("root tolerance must lie in [1e-14, 0.1)");
    const std::vector<Term> terms = terms_for(fam);
    auto p = [&](double r) { return kahan_eval(terms, r, false); };
    auto dp = [&](double r) { return kahan_eval(terms, r, true); };

    auto [lo, hi] = family_bracket(fam);
    double flo = p(lo), fhi = p(hi);
    int iterations = 0;
    if (sgn(flo) * sgn(fhi) >= 0) {
        // No sign change on the default bracket: scan subintervals before
        // giving up (guards endpoint degeneracies).
        const int cells = 2048;
        bool found = false;
        double prev = lo, fprev = flo;
        for (int i = 1; i <= cells; ++i) {
            const double x = lo + (hi - lo) * i / cells;
            const double fx = p(x);
            ++iterations;
            if (sgn(fprev) * sgn(fx) < 0) {
                lo = prev;
                flo = fprev;
                hi = x;
                fhi = fx;
                found = true;
                break;
            }
            prev = x;
            fprev = fx;
        }
        if (!found)
            throw convergence_error("no sign change found for " + family_name(fam.tag) +
                                    " with m=" + std::to_string(fam.m));
    }

    const int sign_lo = sgn(flo), sign_hi = sgn(fhi);
    for (int step = 0; hi - lo > tol && step < 200; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break; // bracket at double resolution
        const double fmid = p(mid);
        ++iterations;
        if (fmid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (sgn(fmid) == sign_lo)
            lo = mid;
        else
            hi = mid;
    }

    // Newton polish from the bracket midpoint; the bracket stays the
    // certificate, the polish only sharpens the point estimate.
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 3; ++i) {
        const double d = dp(x);
        if (d == 0.0)
            break;
        const double next = x - p(x) / d;
        ++iterations;
        if (!(next >= lo && next <= hi))
            break;
        x = next;
    }

    RootResult out;
    out.root = x;
    out.lo = lo;
    out.hi = hi;
    out.residual = std::abs(p(x));
    out.iterations = iterations;
    out.sign_lo = sign_lo;
    out.sign_hi = sign_hi;
    return out;
}

double classical_radius(ClassicalName name, std::optional<double> a_opt) {
    const double a = a_opt.value_or(0.0);
    if (!(a >= 0.0 && a <= 1.0))
        throw domain_error("head coefficient must lie in [0,1]");
    switch (name) {
    case ClassicalName::thmB1:
        return 1.0 / (2.0 + a);
    case ClassicalName::thmB2:
        return 0.5;
    case ClassicalName::thmC1:
        return 2.0 / (3.0 + a + std::sqrt(5.0) * (1.0 + a));
    case ClassicalName::thmC2: {
        // Unique root of (1-a^3) r^3 - (1+2a) r^2 - 2r + 1 in
        // (1/3, 1/(2+a)); the cubic degenerates at a = 1 where the root is
        // exactly 1/3.
        if (a == 1.0)
            return 1.0 / 3.0;
        double lo = 1.0 / 3.0, hi = 1.0 / (2.0 + a);
        auto p = [&](double r) {
            return 1.0 + r * (-2.0 + r * (-(1.0 + 2.0 * a) + r * (1.0 - a * a * a)));
        };
        for (int i = 0; i < 80 && hi - lo > 1e-15; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (p(mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }
    case ClassicalName::thmD1:
        return 0.2;
    case ClassicalName::thmD2:
        return 1.0 / 3.0;
    case ClassicalName::thmE1:
        return (std::sqrt(17.0) - 3.0) / 4.0;
    case ClassicalName::thmE2: {
        // Root of 1 - 2r - r^2 - r^3 - r^4 in (0, 1/2).
        double lo = 0.0, hi = 0.5;
        auto p = [](double r) {
            return 1.0 + r * (-2.0 + r * (-1.0 + r * (-1.0 + r * -1.0)));
        };
        for (int i = 0; i < 80 && hi - lo > 1e-15; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (p(mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }
    case ClassicalName::thmF:
        return 1.0 / 3.0;
    }
    throw usage_error("unhandled classical radius");
}

double limit_radius(Family tag) {
    switch (tag) {
    case Family::alpha:
    case Family::zeta:
    case Family::theta:
        return 1.0 / 3.0;
    case Family::beta:
    case Family::eta:
    case Family::gamma:
    case Family::vartheta:
        return 0.5;
    case Family::delta:
        return (std::sqrt(5.0) - 1.0) / 2.0;
    default:
        throw usage_error("family " + family_name(tag) + " has no m -> infinity limit radius");
    }
}

std::vector<RadiusRecord> make_table(int which, const std::vector<int>& m_list, double tol) {
    std::vector<Family> fams;
    if (which == 1)
        fams = {Family::alpha, Family::beta, Family::zeta, Family::eta};
    else if (which == 2)
        fams = {Family::gamma, Family::delta, Family::theta, Family::vartheta};
    else
        throw usage_error("table selector must be 1 or 2");
    std::vector<RadiusRecord> rows;
    rows.reserve(m_list.size() * fams.size());
    for (int m : m_list) {
        for (Family f : fams) {
            const RootResult rr = solve_radius({f, m, {}}, tol);
            rows.push_back({family_name(f), m, {}, rr.root, rr.residual, rr.iterations});
        }
    }
    return rows;
}

std::string family_name(Family tag) {
    switch (tag) {
    case Family::alpha: return "alpha";
    case Family::beta: return "beta";
    case Family::zeta: return "zeta";
    case Family::eta: return "eta";
    case Family::gamma: return "gamma";
    case Family::delta: return "delta";
    case Family::theta: return "theta";
    case Family::vartheta: return "vartheta";
    case Family::alpha_a: return "alpha_a";
    case Family::beta_a: return "beta_a";
    case Family::mu: return "mu";
    case Family::nu: return "nu";
    case Family::tau: return "tau";
    case Family::xi: return "xi";
    case Family::chi: return "chi";
    case Family::xi5: return "xi5";
    case Family::delta_alt: return "delta_alt";
    }
    throw usage_error("unhandled family");
}

Family parse_family(const std::string& name) {
    static const std::pair<const char*, Family> table[] = {
        {"alpha", Family::alpha},       {"beta", Family::beta},
        {"zeta", Family::zeta},         {"eta", Family::eta},
        {"gamma", Family::gamma},       {"delta", Family::delta},
        {"theta", Family::theta},       {"vartheta", Family::vartheta},
        {"alpha_a", Family::alpha_a},   {"beta_a", Family::beta_a},
        {"mu", Family::mu},             {"nu", Family::nu},
        {"tau", Family::tau},           {"xi", Family::xi},
        {"chi", Family::chi},           {"xi5", Family::xi5},
        {"delta_alt", Family::delta_alt},
    };
    for (const auto& [key, fam] : table)
        if (name == key)
            return fam;
    throw usage_error("unknown family '" + name + "'");
}

std::string classical_name(ClassicalName name) {
    switch (name) {
    case ClassicalName::thmB1: return "thmB1";
    case ClassicalName::thmB2: return "thmB2";
    case ClassicalName::thmC1: return "thmC1";
    case ClassicalName::thmC2: return "thmC2";
    case ClassicalName::thmD1: return "thmD1";
    case ClassicalName::thmD2: return "thmD2";
    case ClassicalName::thmE1: return "thmE1";
    case ClassicalName::thmE2: return "thmE2";
    case ClassicalName::thmF: return "thmF";
    }
    throw usage_error("unhandled classical radius");
}

ClassicalName parse_classical(const std::string& name) {
    static const std::pair<const char*, ClassicalName> table[] = {
        {"thmB1", ClassicalName::thmB1}, {"thmB2", ClassicalName::thmB2},
        {"thmC1", ClassicalName::thmC1}, {"thmC2", ClassicalName::thmC2},
        {"thmD1", ClassicalName::thmD1}, {"thmD2", ClassicalName::thmD2},
        {"thmE1", ClassicalName::thmE1}, {"thmE2", ClassicalName::thmE2},
        {"thmF", ClassicalName::thmF},
    };
    for (const auto& [key, value] : table)
        if (name == key)
            return value;
    throw usage_error("unknown baseline radius '" + name + "'");
}

double round_decimals(double x, int places) {
    const double scale = std::pow(10.0, places);
    return std::copysign(std::floor(std::abs(x) * scale + 0.5) / scale, x);
}

} // namespace bohr
