#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commlip/campaign.hpp"
#include "commlip/closed_forms.hpp"
#include "commlip/core_approx.hpp"
#include "commlip/errors.hpp"
#include "commlip/io.hpp"
#include "commlip/optimizer.hpp"
#include "commlip/stitching.hpp"

namespace commlip::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
    std::string out;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct UsageError : Error {
    using Error::Error;
};

double parse_double(const std::string& text)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("not a number: '" + text + "'");
    }
    return v;
}

json optional_json(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

// --- erfmin -----------------------------------------------------------------

struct ErfminArgs {
    double c = 0.0;
    double a = 0.0;
    double b = 0.0;
    double T = ToleranceConfig{}.root_tol;
    double Tf = ToleranceConfig{}.comp_tol;
};

int cmd_erfmin(const ErfminArgs& args, std::ostream& out, std::ostream& err)
{
    if (!(args.c > 0.0) || !(args.a > 0.0) || !(args.b > 0.0)) {
        err << "erfmin: c, a and b must be positive\n";
        return kExitUsage;
    }
    const ToleranceConfig tol{args.T, args.Tf};
    try {
        tol.validate();
    } catch (const BadParameter& e) {
        err << "erfmin: " << e.what() << '\n';
        return kExitUsage;
    }
    try {
        const auto r = erf_min_bound(args.c, {args.a, args.b}, tol);
        json j{{"c", args.c},
               {"a", args.a},
               {"b", args.b},
               {"value", r.value},
               {"degenerate", r.degenerate},
               {"root_left", optional_json(r.root_left)},
               {"root_right", optional_json(r.root_right)},
               {"error_budget", r.error_budget},
               {"oscillation", r.oscillation},
               {"x_end_adjusted", r.x_end_adjusted}};
        out << j.dump(2) << '\n';
        return kExitOk;
    } catch (const RootValidationFailed& e) {
        err << "erfmin: rejected: " << e.what() << '\n';
    } catch (const DomainViolation& e) {
        err << "erfmin: rejected: " << e.what() << '\n';
    }
    return kExitValidation;
}

// --- certify ----------------------------------------------------------------

struct CertifyArgs {
    std::string grid = "paper";
    std::vector<std::string> params; // a-file, b-file: used verbatim
    std::vector<std::string> warm;   // a-file, b-file: optimisation starts
};

int cmd_certify(const CertifyArgs& args, const Globals& g, std::ostream& out, std::ostream& err)
{
    const auto grid = parse_grid_spec(args.grid);
    const fs::path json_path = g.out.empty() ? fs::path("certificate.json") : fs::path(g.out);
    fs::path csv_path = json_path;
    csv_path.replace_extension(".csv");

    const auto started = std::chrono::steady_clock::now();
    std::vector<BoundPoint> points;
    if (!args.params.empty()) {
        const auto table = read_parameter_table(args.params[0], args.params[1], grid.size());
        points.reserve(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) points.push_back(certify_node(grid[k], table[k]));
    } else {
        GridOptions opts;
        opts.threads = g.threads;
        std::vector<std::optional<GaussianParams>> warm;
        if (!args.warm.empty()) {
            const auto table = read_parameter_table(args.warm[0], args.warm[1], grid.size());
            warm.assign(table.begin(), table.end());
        }
        points = optimize_grid(grid, opts, warm);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    std::size_t degenerate = 0;
    for (const auto& p : points) degenerate += p.degenerate ? 1 : 0;
    if (degenerate > 0) {
        atomic_write(csv_path, points_to_csv(points, {}));
        err << "certify: " << degenerate << " of " << points.size()
            << " nodes are degenerate (first at c = ";
        for (const auto& p : points) {
            if (p.degenerate) {
                err << p.c;
                break;
            }
        }
        err << "); partial table written to " << csv_path.string() << '\n';
        return kExitValidation;
    }

    const auto cert = global_constant(points, grid.front(), grid.back());
    atomic_write(json_path, certificate_to_json(cert));
    atomic_write(csv_path, points_to_csv(cert.points, cert.lifted));

    double max_ck = 0.0;
    for (const auto& p : points) max_ck = std::max(max_ck, p.C_k);
    double max_dk = 0.0;
    for (const double d : cert.lifted) max_dk = std::max(max_dk, d);
    out << std::fixed << std::setprecision(6);
    out << "nodes         " << points.size() << '\n';
    out << "max C_k       " << max_ck << '\n';
    out << "max D_k       " << max_dk << '\n';
    out << "corner_small  " << cert.corner_small << '\n';
    out << "corner_large  " << cert.corner_large << '\n';
    out << "global_C      " << cert.global_C << '\n';
    out << std::setprecision(1) << "seconds       " << seconds << '\n';
    out << "wrote " << json_path.string() << " and " << csv_path.string() << '\n';
    return kExitOk;
}

// --- sqrt-const -------------------------------------------------------------

struct SqrtArgs {
    std::string cert;
    double c1 = 0.0195;
    double cn = 40.0;
};

int cmd_sqrt_const(const SqrtArgs& args, std::ostream& out)
{
    const auto cert = read_certificate(args.cert);
    const double v = sqrt_constant(cert.points, args.c1, args.cn);
    out << std::setprecision(10) << v << '\n';
    return kExitOk;
}

// --- closed-forms -----------------------------------------------------------

struct ClosedArgs {
    std::optional<double> r;
    double r_step = 0.0;
    bool csv = false;
};

struct Row {
    std::string name;
    double r;
    double value;
    std::optional<double> argmin;
};

std::vector<Row> closed_form_rows(double r)
{
    const auto s = gamma_sin(r);
    return {
        {"boyadzhiev", r, gamma_boyadzhiev(r), std::nullopt},
        {"olsen_pedersen", r, gamma_olsen_pedersen(r), std::nullopt},
        {"pedersen", r, gamma_pedersen(r), std::nullopt},
        {"tangent", r, gamma_tangent(r), 2.0},
        {"sin_min", r, s.value, s.argmin},
    };
}

int cmd_closed_forms(const ClosedArgs& args, std::ostream& out, std::ostream& err)
{
    std::vector<double> rs;
    if (args.r_step > 0.0) {
        for (int k = 1; k * args.r_step < 1.0 - 1e-12; ++k) rs.push_back(k * args.r_step);
    } else {
        rs.push_back(args.r.value_or(0.5));
    }
    for (const double r : rs) {
        if (!(r > 0.0 && r < 1.0)) {
            err << "closed-forms: r must lie in (0, 1)\n";
            return kExitUsage;
        }
    }

    std::vector<Row> rows;
    for (const double r : rs) {
        for (auto& row : closed_form_rows(r)) rows.push_back(std::move(row));
    }
    // r-independent constants
    rows.push_back({"csc1", std::nan(""), csc1(), std::nullopt});
    rows.push_back({"trivial", std::nan(""), trivial_constant(), 1.0});
    rows.push_back({"shift", std::nan(""), shift_constant(), 2.0 / 3.0});
    rows.push_back({"scaled_cayley_max", std::nan(""), scaled_cayley_Cc(2.0 / 3.0), 2.0 / 3.0});
    rows.push_back({"pq_sqrt", 0.5, pq_sqrt_bound({8.0, -0.03314563}), std::nullopt});

    const auto cell = [](double v) {
        std::ostringstream s;
        if (!std::isnan(v)) s << std::setprecision(12) << v;
        return s.str();
    };
    if (args.csv) {
        out << "name,r,value,argmin\n";
        for (const auto& row : rows) {
            out << row.name << ',' << cell(row.r) << ',' << cell(row.value) << ','
                << (row.argmin ? cell(*row.argmin) : "") << '\n';
        }
    } else {
        for (const auto& row : rows) {
            out << std::left << std::setw(20) << row.name << std::setw(8) << cell(row.r)
                << std::setw(18) << cell(row.value) << (row.argmin ? cell(*row.argmin) : "") << '\n';
        }
    }
    return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string f = "f1";
    std::string norm = "operator";
    std::uint64_t trials = 1000;
    int n_max = 6;
    bool same_ab = false;
    bool normalize_a = false;
    double min_commutator = 0.0;
};

int cmd_verify(const VerifyArgs& args, const Globals& g, std::ostream& out)
{
    CampaignConfig cfg;
    cfg.f_name = args.f;
    cfg.norm = NormKind::parse(args.norm);
    cfg.trials = args.trials;
    cfg.n_max = args.n_max;
    cfg.same_ab = args.same_ab;
    cfg.normalize_a = args.normalize_a;
    cfg.min_commutator = args.min_commutator;
    cfg.seed = g.seed;
    cfg.threads = g.threads;
    const auto rep = monte_carlo_campaign(cfg);
    if (!g.out.empty()) atomic_write(g.out, campaign_to_json(rep));
    out << "f          " << cfg.f_name << '\n'
        << "norm       " << cfg.norm.name() << '\n'
        << "seed       " << cfg.seed << '\n'
        << "trials     " << cfg.trials << '\n'
        << "evaluated  " << rep.evaluated << '\n'
        << "skipped    " << rep.skipped << '\n'
        << "max_ratio  " << std::setprecision(12) << rep.max_ratio << '\n';
    return kExitOk;
}

// --- counterexample ---------------------------------------------------------

int cmd_counterexample(std::ostream& out)
{
    const auto rep = counterexample_report();
    out << std::fixed << std::setprecision(4);
    out << "sigma([A,X])        ";
    for (const double s : rep.sigma_commutator) out << ' ' << s;
    out << "\nsigma([A,e^{iX}])   ";
    for (const double s : rep.sigma_exp_commutator) out << ' ' << s;
    out << "\nf(x) = x/(x+" << std::setprecision(2) << rep.f_shift << ")" << std::setprecision(4);
    out << "\n||f(|[A,e^{iX}]|)||_(3) = " << rep.trace_f_exp_commutator;
    out << "\n||f(|[A,X]|)||_(3)      = " << rep.trace_f_commutator;
    out << "\nreversal " << (rep.reversal ? "yes" : "no") << ": " << rep.trace_f_exp_commutator
        << (rep.reversal ? " > " : " <= ") << rep.trace_f_commutator << '\n';
    return kExitOk;
}

} // namespace

std::vector<double> parse_grid_spec(const std::string& spec)
{
    if (spec == "paper") return build_paper_grid();
    std::vector<double> grid;
    std::stringstream segments(spec);
    std::string seg;
    while (std::getline(segments, seg, ',')) {
        const auto p1 = seg.find(':');
        const auto p2 = p1 == std::string::npos ? p1 : seg.find(':', p1 + 1);
        if (p2 == std::string::npos) throw UsageError("grid segment must be start:step:stop, got '" + seg + "'");
        const double start = parse_double(seg.substr(0, p1));
        const double step = parse_double(seg.substr(p1 + 1, p2 - p1 - 1));
        const double stop = parse_double(seg.substr(p2 + 1));
        if (!(start > 0.0)) throw UsageError("grid values must be positive");
        auto part = build_uniform_grid(start, step, stop);
        // Adjacent segments usually share an end point.
        if (!grid.empty() && std::abs(part.front() - grid.back()) <= 1e-12 * std::max(1.0, grid.back())) {
            part.erase(part.begin());
        }
        grid.insert(grid.end(), part.begin(), part.end());
    }
    if (grid.empty()) throw UsageError("empty grid");
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) throw UsageError("grid segments must be increasing");
    }
    return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Commutator estimates for operator monotone functions"};
    app.name("commlip");
    app.require_subcommand(1);
    // Global flags may follow the subcommand name.
    app.fallthrough();

    Globals g;
    app.add_option("--out", g.out, "Output file");
    app.add_option("--seed", g.seed, "Random seed")->default_val(0);
    app.add_option("--threads", g.threads, "Worker threads")->default_val(1)->check(CLI::Range(1u, 1024u));

    ErfminArgs erf;
    auto* erfmin = app.add_subcommand("erfmin", "Gaussian-approximant bound at one (c, a, b)");
    erfmin->add_option("c", erf.c)->required();
    erfmin->add_option("a", erf.a)->required();
    erfmin->add_option("b", erf.b)->required();
    erfmin->add_option("--T", erf.T, "Root tolerance");
    erfmin->add_option("--Tf", erf.Tf, "Comparison tolerance");

    CertifyArgs cert;
    auto* certify = app.add_subcommand("certify", "Optimise a grid and build the global certificate");
    certify->add_option("--grid", cert.grid, "'paper' or start:step:stop[,start:step:stop...]");
    auto* params_opt = certify->add_option("--params", cert.params, "a-file b-file, used verbatim")
                           ->expected(2);
    certify->add_option("--warm", cert.warm, "a-file b-file, optimisation starts")
        ->expected(2)
        ->excludes(params_opt);

    SqrtArgs sq;
    auto* sqrt_cmd = app.add_subcommand("sqrt-const", "Constant for A^{1/2} from a certificate");
    sqrt_cmd->add_option("--cert", sq.cert, "Certificate JSON")->required();
    sqrt_cmd->add_option("--c1", sq.c1, "First node");
    sqrt_cmd->add_option("--cn", sq.cn, "Last node");

    ClosedArgs cf;
    auto* closed = app.add_subcommand("closed-forms", "Tabulate the closed-form constants");
    closed->add_option("--r", cf.r, "Exponent in (0, 1)");
    closed->add_option("--r-step", cf.r_step, "Tabulate r = step, 2 step, ... below 1");
    closed->add_flag("--csv", cf.csv, "CSV output");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Monte-Carlo check of the commutator ratio");
    verify->add_option("--f", ver.f, "f1 | sqrt | pow:R | ft:T");
    verify->add_option("--norm", ver.norm, "operator | trace | hs | kyfan:K | schatten:P");
    verify->add_option("--trials", ver.trials)->check(CLI::PositiveNumber);
    verify->add_option("--n-max", ver.n_max)->check(CLI::Range(1, 64));
    verify->add_flag("--same-ab", ver.same_ab, "Use B = A");
    verify->add_flag("--normalize-a", ver.normalize_a, "Scale A to operator norm 1");
    verify->add_option("--min-commutator", ver.min_commutator, "Skip samples below this commutator norm");

    auto* counter = app.add_subcommand("counterexample", "Trace-norm reversal example");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("commlip");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (erfmin->parsed()) return cmd_erfmin(erf, out, err);
        if (certify->parsed()) return cmd_certify(cert, g, out, err);
        if (sqrt_cmd->parsed()) return cmd_sqrt_const(sq, out);
        if (closed->parsed()) return cmd_closed_forms(cf, out, err);
        if (verify->parsed()) return cmd_verify(ver, g, out);
        if (counter->parsed()) return cmd_counterexample(out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BadParameter& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace commlip::cli
