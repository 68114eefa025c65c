// Command-line front end. Talks to the library exclusively through the C API
// so it doubles as a smoke test of the shared-library surface.
//
// Exit codes: 0 success (and, for verification commands, every check passed),
// 1 a verification report failed, 2 bad usage or out-of-domain arguments,
// 3 the solver or a check could not complete.
#include "bohr/bohr.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct ReportDeleter {
    void operator()(bohr_report* r) const { bohr_report_free(r); }
};
using ReportPtr = std::unique_ptr<bohr_report, ReportDeleter>;

int exit_code_for(bohr_status st) {
    switch (st) {
    case BOHR_OK: return 0;
    case BOHR_ERR_DOMAIN:
    case BOHR_ERR_USAGE:
    case BOHR_ERR_PRECISION: return 2;
    default: return 3;
    }
}

[[noreturn]] void fail(bohr_status st) {
    std::cerr << "error: " << bohr_last_error() << "\n";
    std::exit(exit_code_for(st));
}

bohr_status must(bohr_status st) {
    if (st != BOHR_OK) fail(st);
    return st;
}

struct Options {
    std::string format = "text";  // text | csv | json
    std::string precision = "short";
    std::string output;

    std::ostream* out = &std::cout;
    std::ofstream file;

    void open_sink() {
        if (output.empty()) return;
        file.open(output);
        if (!file) {
            std::cerr << "error: cannot open " << output << " for writing\n";
            std::exit(2);
        }
        out = &file;
    }
    bool full() const { return precision == "full"; }

    std::string value(double v) const {
        char buf[40];
        std::snprintf(buf, sizeof buf, full() ? "%.12f" : "%.6f", v);
        return buf;
    }
    std::string sci(double v) const {
        char buf[40];
        std::snprintf(buf, sizeof buf, full() ? "%.12e" : "%.3e", v);
        return buf;
    }
};

// m specs look like "3" or "1..5" or "3..10,15,20,25,30".
std::vector<int> parse_m_spec(const std::string& spec) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        const std::string item = spec.substr(pos, comma - pos);
        const size_t dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, dots));
                const int hi = std::stoi(item.substr(dots + 2));
                if (hi < lo) throw std::invalid_argument("descending range");
                if (hi - lo > 10000) throw std::invalid_argument("range too wide");
                for (int m = lo; m <= hi; ++m) out.push_back(m);
            }
        } catch (const std::exception&) {
            std::cerr << "error: bad order spec '" << item
                      << "' (expected N or LO..HI, comma separated)\n";
            std::exit(2);
        }
        pos = comma + 1;
    }
    if (out.empty()) {
        std::cerr << "error: empty order spec\n";
        std::exit(2);
    }
    return out;
}

int parse_kind(const std::string& name) {
    static const std::vector<std::string> names = {
        "A", "B", "C", "D", "E", "F", "G", "H", "I",
        "thmB1", "thmB2", "thmC1", "thmC2", "thmD1", "thmD2",
        "thmE1", "thmE2", "thmF"};
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    std::cerr << "error: unknown kind '" << name << "'\n";
    std::exit(2);
}

// --- radius / table -------------------------------------------------------

struct RadiusRow {
    std::string family;
    int m;
    std::optional<double> a;
    bohr_root_result res;
};

json radius_row_json(const RadiusRow& row) {
    json j{{"family", row.family}, {"m", row.m},        {"root", row.res.root},
           {"lo", row.res.lo},     {"hi", row.res.hi},  {"residual", row.res.residual},
           {"iterations", row.res.iterations},
           {"sign_lo", row.res.sign_lo}, {"sign_hi", row.res.sign_hi}};
    if (row.a) j["a"] = *row.a;
    return j;
}

void emit_radius_rows(const Options& opt, const std::vector<RadiusRow>& rows) {
    std::ostream& os = *opt.out;
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(radius_row_json(row));
        os << arr.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "family,m,a,root,residual,iterations\n";
        for (const auto& row : rows) {
            os << row.family << ',' << row.m << ',';
            if (row.a) os << opt.value(*row.a);
            os << ',' << opt.value(row.res.root) << ',' << opt.sci(row.res.residual)
               << ',' << row.res.iterations << "\n";
        }
    } else {
        for (const auto& row : rows) {
            os << row.family << " m=" << row.m;
            if (row.a) os << " a=" << opt.value(*row.a);
            os << ": root=" << opt.value(row.res.root) << " bracket=["
               << opt.value(row.res.lo) << ", " << opt.value(row.res.hi)
               << "] signs=(" << row.res.sign_lo << ',' << row.res.sign_hi
               << ") residual=" << opt.sci(row.res.residual)
               << " iterations=" << row.res.iterations << "\n";
        }
    }
}

int cmd_radius(const Options& opt, const std::string& family, int m,
               std::optional<double> a, double tol) {
    RadiusRow row{family, m, a, {}};
    must(bohr_solve_radius(family.c_str(), m, a.value_or(0.0), tol, &row.res));
    emit_radius_rows(opt, {row});
    return 0;
}

int cmd_table(const Options& opt, int which, const std::string& m_spec) {
    const std::vector<std::string> families =
        which == 1 ? std::vector<std::string>{"alpha", "beta", "zeta", "eta"}
                   : std::vector<std::string>{"gamma", "delta", "theta", "vartheta"};
    const std::vector<int> orders = parse_m_spec(m_spec);

    std::vector<RadiusRow> rows;
    for (int m : orders)
        for (const auto& fam : families) {
            RadiusRow row{fam, m, {}, {}};
            must(bohr_solve_radius(fam.c_str(), m, 0.0, 0.0, &row.res));
            rows.push_back(row);
        }

    if (opt.format == "text") {
        std::ostream& os = *opt.out;
        os << "m";
        for (const auto& fam : families) os << '\t' << fam;
        os << "\n";
        for (size_t i = 0; i < rows.size(); i += families.size()) {
            os << rows[i].m;
            for (size_t j = 0; j < families.size(); ++j)
                os << '\t' << opt.value(rows[i + j].res.root);
            os << "\n";
        }
        return 0;
    }
    emit_radius_rows(opt, rows);
    return 0;
}

// --- verification reports ---------------------------------------------------

struct ReportRow {
    json detail;  // parsed bohr_report_to_json
};

ReportRow take_report(bohr_report* raw) {
    ReportPtr rep(raw);
    char* s = bohr_report_to_json(rep.get());
    json j = json::parse(s);
    bohr_string_free(s);
    return ReportRow{std::move(j)};
}

// Returns 1 if any report failed, else 0.
int emit_report_rows(const Options& opt, const std::vector<ReportRow>& rows) {
    std::ostream& os = *opt.out;
    int rc = 0;
    for (const auto& row : rows)
        if (!row.detail.at("passed").get<bool>()) rc = 1;

    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(row.detail);
        os << arr.dump(2) << "\n";
        return rc;
    }
    if (opt.format == "csv") {
        os << "subject,trials,worst_margin,passed,violations\n";
        for (const auto& row : rows) {
            const json& j = row.detail;
            const bool passed = j.at("passed").get<bool>();
            std::string margin;
            if (j.at("worst_margin").is_null())
                margin = "";
            else
                margin = opt.sci(j.at("worst_margin").get<double>());
            os << '"' << j.at("subject").get<std::string>() << "\"," << j.at("trials")
               << ',' << margin << ',' << (passed ? "true" : "false") << ','
               << j.at("violations").size() << "\n";
        }
        return rc;
    }
    for (const auto& row : rows) {
        const json& j = row.detail;
        const bool passed = j.at("passed").get<bool>();
        os << (passed ? "[pass] " : "[FAIL] ") << j.at("subject").get<std::string>()
           << ": trials=" << j.at("trials");
        if (!j.at("worst_margin").is_null())
            os << " worst_margin=" << opt.sci(j.at("worst_margin").get<double>());
        os << " violations=" << j.at("violations").size() << "\n";
        if (!passed)
            for (const auto& v : j.at("violations"))
                os << "         seed=" << v.at("seed") << " value=" << v.at("value")
                   << " " << v.at("parameters").get<std::string>() << "\n";
    }
    return rc;
}

int cmd_check(const Options& opt, const std::string& kind_name, const std::string& m_spec,
              long trials, uint64_t seed, double r_fraction, int z_per_function) {
    std::vector<int> kinds;
    if (kind_name == "all")
        for (int k = BOHR_KIND_A; k <= BOHR_KIND_I; ++k) kinds.push_back(k);
    else
        kinds.push_back(parse_kind(kind_name));

    std::vector<ReportRow> rows;
    for (int kind : kinds)
        for (int m : parse_m_spec(m_spec)) {
            bohr_report* rep = nullptr;
            must(bohr_check_theorem(kind, m, seed, trials, z_per_function, r_fraction,
                                    &rep));
            rows.push_back(take_report(rep));
        }
    return emit_report_rows(opt, rows);
}

int cmd_lemmas(const Options& opt, uint64_t seed, long trials, int m_max, int pairs) {
    std::vector<ReportRow> rows;
    bohr_report* rep = nullptr;
    must(bohr_check_lemma1(seed, trials, &rep));
    rows.push_back(take_report(rep));
    must(bohr_check_lemma2(seed, trials, &rep));
    rows.push_back(take_report(rep));
    must(bohr_check_schwarz_pick(seed, trials, pairs, &rep));
    rows.push_back(take_report(rep));
    for (int m = 1; m <= m_max; ++m) {
        must(bohr_check_lemma3(m, &rep));
        rows.push_back(take_report(rep));
    }
    for (int m = 1; m <= m_max; ++m) {
        must(bohr_check_lemma4(m, &rep));
        rows.push_back(take_report(rep));
    }
    return emit_report_rows(opt, rows);
}

int cmd_discrepancies(const Options& opt) {
    bohr_report* rep = nullptr;
    must(bohr_check_discrepancies(&rep));
    return emit_report_rows(opt, {take_report(rep)});
}

int cmd_sharpness(const Options& opt, const std::string& kind_name, int m, double a,
                  double eps) {
    const int kind = parse_kind(kind_name);
    double value = 0.0, radius = 0.0;
    must(bohr_functional_radius(kind, m, &radius));
    must(bohr_sharpness_witness(kind, m, a, eps, &value));
    const double margin = value - 1.0;

    std::ostream& os = *opt.out;
    if (opt.format == "json") {
        os << json{{"kind", kind_name}, {"m", m},           {"a", a},
                   {"eps", eps},        {"radius", radius}, {"value", value},
                   {"margin", margin}}
                  .dump(2)
           << "\n";
    } else if (opt.format == "csv") {
        os << "kind,m,a,eps,radius,value,margin\n"
           << kind_name << ',' << m << ',' << opt.value(a) << ',' << opt.value(eps)
           << ',' << opt.value(radius) << ',' << opt.value(value) << ','
           << opt.sci(margin) << "\n";
    } else {
        os << kind_name << " m=" << m << " a=" << opt.value(a) << ": radius="
           << opt.value(radius) << " value_at(radius+" << opt.value(eps)
           << ")=" << opt.value(value) << " margin=" << opt.sci(margin)
           << (margin > 0 ? " (bound exceeded: radius is sharp)" : "") << "\n";
    }
    return 0;
}

int cmd_curve(const Options& opt, const std::string& kind_name, int m, double a,
              int steps) {
    const int kind = parse_kind(kind_name);
    double radius = 0.0;
    must(bohr_functional_radius(kind, m, &radius));
    const double r_max = std::min(0.99, radius + 0.1);

    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < steps; ++i) {
        const double r = r_max * i / (steps - 1);
        double v = 0.0;
        must(bohr_extremal_value(kind, m, a, r, &v));
        pts.emplace_back(r, v);
    }

    std::ostream& os = *opt.out;
    if (opt.format == "json") {
        json arr = json::array();
        for (auto [r, v] : pts) arr.push_back({{"r", r}, {"value", v}});
        os << arr.dump(2) << "\n";
    } else {
        os << "r,value\n";
        for (auto [r, v] : pts) os << opt.value(r) << ',' << opt.value(v) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp radius computation and verification for bounded analytic maps"};
    app.set_version_flag("--version", std::string(bohr_version()));
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->transform(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "Numeric precision of text/csv output")
        ->transform(CLI::IsMember({"short", "full"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "Write output to a file instead of stdout");

    // radius
    auto* radius = app.add_subcommand("radius", "Solve one radius equation with a certified bracket");
    std::string family, table_m = "3..10,15,20,25,30", check_m = "1";
    int m = 1, which = 1, steps = 50, z_per_function = 16, m_max = 50, pairs = 8;
    double tol = 0.0, a_param = 0.0, r_fraction = 0.999, eps = 0.02, a_sharp = 0.999;
    long trials = 200, lemma_trials = 500;
    uint64_t seed = 0;
    bool a_set = false;
    std::string kind_name;

    radius->add_option("--family", family, "Equation family name")->required();
    radius->add_option("--m", m, "Vanishing order")->required();
    radius->add_option("--a", a_param, "Head parameter (alpha_a / beta_a families)")
        ->each([&](const std::string&) { a_set = true; });
    radius->add_option("--tol", tol, "Bracket width target (default 1e-12)");

    // table
    auto* table = app.add_subcommand("table", "Solve a whole family table");
    table->add_option("--which", which, "1 = first-order families, 2 = derivative families")
        ->check(CLI::IsMember({1, 2}))
        ->required();
    table->add_option("--m", table_m, "Orders, e.g. 3..10,15,20,25,30")
        ->capture_default_str();

    // check
    auto* check = app.add_subcommand("check", "Randomized scan of a refined bound below its radius");
    check->add_option("--kind", kind_name, "Functional kind A..I, or 'all'")->required();
    check->add_option("--m", check_m, "Orders, e.g. 1..5")->capture_default_str();
    check->add_option("--trials", trials, "Sampled functions per (kind, m)")
        ->capture_default_str();
    check->add_option("--seed", seed, "Master seed (reports are reproducible)")
        ->required();
    check->add_option("--r-fraction", r_fraction, "Evaluate at this fraction of the radius")
        ->capture_default_str();
    check->add_option("--z-per-function", z_per_function, "Evaluation points per sample")
        ->capture_default_str();

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "Witness that a radius cannot be enlarged");
    sharp->add_option("--kind", kind_name, "Functional kind A..I")->required();
    sharp->add_option("--m", m, "Vanishing order")->required();
    sharp->add_option("--a", a_sharp, "Witness head parameter")->capture_default_str();
    sharp->add_option("--eps", eps, "Radius excess")->capture_default_str();

    // lemmas
    auto* lemmas = app.add_subcommand("lemmas", "Verify the supporting coefficient and root lemmas");
    lemmas->add_option("--seed", seed, "Master seed")->required();
    lemmas->add_option("--trials", lemma_trials, "Sampled functions per lemma")
        ->capture_default_str();
    lemmas->add_option("--m-max", m_max, "Check root lemmas for m = 1..m-max")
        ->capture_default_str();
    lemmas->add_option("--pairs", pairs, "Point pairs per contraction trial")
        ->capture_default_str();

    // curve
    auto* curve = app.add_subcommand("curve", "Extremal value of a kind as a function of r");
    curve->add_option("--kind", kind_name, "Functional kind A..I")->required();
    curve->add_option("--m", m, "Vanishing order")->required();
    curve->add_option("--a", a_sharp, "Head parameter")->capture_default_str();
    curve->add_option("--steps", steps, "Grid points (>= 2)")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();

    // discrepancies
    app.add_subcommand("discrepancies",
                       "Demonstrate the displayed-equation inconsistencies");

    // Let the global --format/--precision/--output flags appear after the
    // subcommand as well.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opt.open_sink();

    if (radius->parsed())
        return cmd_radius(opt, family, m,
                          a_set ? std::optional<double>(a_param) : std::nullopt, tol);
    if (table->parsed()) return cmd_table(opt, which, table_m);
    if (check->parsed())
        return cmd_check(opt, kind_name, check_m, trials, seed, r_fraction,
                         z_per_function);
    if (sharp->parsed()) return cmd_sharpness(opt, kind_name, m, a_sharp, eps);
    if (lemmas->parsed()) return cmd_lemmas(opt, seed, lemma_trials, m_max, pairs);
    if (curve->parsed()) return cmd_curve(opt, kind_name, m, a_sharp, steps);
    return cmd_discrepancies(opt);
}
