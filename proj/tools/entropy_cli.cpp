// Command-line front end: gegenbauer, custom, moments, spherical, and bench
// subcommands over the core library.  Exit codes: 0 success, 2 argument or
// input-file errors, 1 numerical failures.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opq/bench.hpp"
#include "opq/coeff_io.hpp"
#include "opq/entropy.hpp"
#include "opq/errors.hpp"
#include "opq/gegenbauer.hpp"
#include "opq/moments.hpp"
#include "opq/spherical.hpp"

namespace {

struct OutputOpts {
    bool csv = false;   // default is JSON
    bool bits = false;  // entropy-valued fields divided by ln 2
    int precision = 17;
};

std::string fmt(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

double entropy_scale(const OutputOpts& out) {
    return out.bits ? 1.0 / std::numbers::ln2 : 1.0;
}

void print_entropy_result(const opq::EntropyResult& r, const OutputOpts& out) {
    const double s = entropy_scale(out);
    const std::string bound =
        r.bound ? fmt(*r.bound * s, out.precision) : std::string();
    if (out.csv) {
        std::printf("n,value,N,bound,method,seconds\n");
        std::printf("%zu,%s,%zu,%s,%s,%s\n", r.n, fmt(r.value * s, out.precision).c_str(),
                    r.truncation_N, bound.c_str(), opq::method_name(r.method),
                    fmt(r.seconds, out.precision).c_str());
    } else {
        std::printf(
            "{\"n\": %zu, \"value\": %s, \"N\": %zu, \"bound\": %s, "
            "\"method\": \"%s\", \"seconds\": %s}\n",
            r.n, fmt(r.value * s, out.precision).c_str(), r.truncation_N,
            bound.empty() ? "null" : bound.c_str(), opq::method_name(r.method),
            fmt(r.seconds, out.precision).c_str());
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

double parse_double(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw opq::invalid_input(std::string(what) + ": cannot parse '" + tok +
                                 "' as a number");
    }
    if (pos != tok.size())
        throw opq::invalid_input(std::string(what) + ": trailing junk in '" +
                                 tok + "'");
    return v;
}

std::size_t parse_size(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        throw opq::invalid_input(std::string(what) + ": cannot parse '" + tok +
                                 "' as a nonnegative integer");
    }
    if (pos != tok.size())
        throw opq::invalid_input(std::string(what) + ": trailing junk in '" +
                                 tok + "'");
    return static_cast<std::size_t>(v);
}

// ---- subcommand payloads -------------------------------------------------

struct GegenbauerArgs {
    double lambda = 0.0;
    std::size_t n = 0;
    double eps = 1e-10;
    bool eps_given = false;
    std::size_t trunc = 0;
    bool trunc_given = false;
};

int run_gegenbauer(const GegenbauerArgs& a, const OutputOpts& out) {
    const opq::GegenbauerParams params(a.lambda);
    const opq::EntropyResult r =
        a.trunc_given ? opq::entropy_gegenbauer_at(params, a.n, a.trunc)
                      : opq::entropy_gegenbauer(params, a.n, a.eps);
    print_entropy_result(r, out);
    return 0;
}

struct CustomArgs {
    std::string path;
    std::size_t n = 0;
    double eps = 0.0;
    bool eps_given = false;
    std::size_t trunc = 0;
    bool trunc_given = false;
};

int run_custom(const CustomArgs& a, const OutputOpts& out) {
    if (a.eps_given == a.trunc_given)
        throw opq::invalid_input(
            "custom: exactly one of --eps and --trunc is required");
    const opq::RecurrenceCoefficients coeffs = opq::load_coefficients(a.path);
    const opq::EntropyResult r =
        a.eps_given ? opq::entropy_to_tolerance(coeffs, a.n, a.eps)
                    : opq::entropy_from_series(coeffs, a.n, a.trunc);
    print_entropy_result(r, out);
    return 0;
}

struct MomentsArgs {
    double lambda = 0.0;
    bool lambda_given = false;
    std::string path;
    std::size_t n = 0;
    std::size_t trunc = 0;
};

int run_moments(const MomentsArgs& a, const OutputOpts& out) {
    if (a.lambda_given == !a.path.empty())
        throw opq::invalid_input(
            "moments: exactly one of --lambda and --coeffs is required");
    if (a.trunc < 1)
        throw opq::invalid_input("moments: --trunc must be at least 1");

    const std::size_t N = a.trunc;
    opq::RecurrenceCoefficients coeffs =
        a.lambda_given
            ? opq::gegenbauer_coefficients(opq::GegenbauerParams(a.lambda),
                                           a.n + 1 + (N + 1) / 2)
            : opq::load_coefficients(a.path);

    opq::ChebyshevMomentSequence c, m;
    if (coeffs.symmetric()) {
        const std::size_t K = (N + 1) / 2;  // even-series terms covering N
        c = opq::even_trace_moments(opq::minor(coeffs, a.n), K);
        m = opq::even_column_moments(coeffs, a.n, K);
    } else {
        c = opq::trace_moments(opq::minor(coeffs, a.n), N);
        m = opq::column_moments(coeffs, a.n, N);
    }

    for (const auto* seq : {&c, &m}) {
        const std::size_t bad = seq->first_bound_violation();
        if (bad != opq::ChebyshevMomentSequence::npos)
            std::fprintf(stderr,
                         "warning: %s moment at degree %zu exceeds the unit "
                         "bound; results may be unreliable\n",
                         seq->kind == opq::MomentKind::ZeroCounting
                             ? "zero-counting"
                             : "squared-polynomial",
                         bad);
    }

    if (out.csv) {
        std::printf("k,c,m\n");
        for (std::size_t k = 0; k <= N; ++k)
            std::printf("%zu,%s,%s\n", k, fmt(c.values[k], out.precision).c_str(),
                        fmt(m.values[k], out.precision).c_str());
    } else {
        std::string cs, ms;
        for (std::size_t k = 0; k <= N; ++k) {
            cs += (k ? ", " : "") + fmt(c.values[k], out.precision);
            ms += (k ? ", " : "") + fmt(m.values[k], out.precision);
        }
        std::printf("{\"n\": %zu, \"N\": %zu, \"c\": [%s], \"m\": [%s]}\n", a.n,
                    N, cs.c_str(), ms.c_str());
    }
    return 0;
}

struct SphericalArgs {
    long l = 0;
    long m = 0;
    bool m_given = false;
    bool profile = false;
};

int run_spherical(const SphericalArgs& a, const OutputOpts& out) {
    if (a.m_given == a.profile)
        throw opq::invalid_input(
            "spherical: exactly one of --m and --profile is required");
    const double s = entropy_scale(out);
    if (a.profile) {
        const auto prof = opq::spherical_entropy_profile(a.l);
        if (out.csv) {
            std::printf("m,S\n");
            for (const auto& pt : prof)
                std::printf("%ld,%s\n", pt.m, fmt(pt.S * s, out.precision).c_str());
        } else {
            std::string rows;
            for (std::size_t i = 0; i < prof.size(); ++i)
                rows += (i ? ", " : "") + ("{\"m\": " + std::to_string(prof[i].m) +
                                           ", \"S\": " +
                                           fmt(prof[i].S * s, out.precision) + "}");
            std::printf("{\"l\": %ld, \"profile\": [%s]}\n", a.l, rows.c_str());
        }
    } else {
        const double S = opq::spherical_entropy(opq::QuantumNumbers(a.l, a.m));
        if (out.csv)
            std::printf("m,S\n%ld,%s\n", a.m, fmt(S * s, out.precision).c_str());
        else
            std::printf("{\"l\": %ld, \"m\": %ld, \"S\": %s}\n", a.l, a.m,
                        fmt(S * s, out.precision).c_str());
    }
    return 0;
}

struct BenchArgs {
    std::string lambdas;
    std::string ns;
    std::string methods = "series,quad,zeropot";
    int reps = 10;
    std::string csv_path;
    bool parallel = false;
};

int run_bench(const BenchArgs& a, const OutputOpts& out) {
    std::vector<opq::BenchTask> grid;
    for (const std::string& ls : split_list(a.lambdas)) {
        const double lambda = parse_double(ls, "bench --lambdas");
        for (const std::string& nss : split_list(a.ns)) {
            const std::size_t n = parse_size(nss, "bench --ns");
            for (const std::string& ms : split_list(a.methods))
                grid.push_back({lambda, n, ms});
        }
    }
    if (grid.empty())
        throw opq::invalid_input("bench: empty task grid");

    const auto table = opq::bench_compare(grid, a.reps, a.parallel);
    const double s = entropy_scale(out);

    std::ostringstream body;
    body << "lambda,n,method,value,abs_error,seconds\n";
    for (const auto& cell : table) {
        body << fmt(cell.lambda, out.precision) << ',' << cell.n << ','
             << cell.method << ',' << fmt(cell.value * s, out.precision) << ','
             << fmt(cell.abs_error * s, out.precision) << ',';
        if (!std::isnan(cell.seconds))
            body << fmt(cell.seconds, out.precision);
        body << '\n';
    }

    if (!a.csv_path.empty()) {
        std::ofstream f(a.csv_path);
        if (!f)
            throw opq::invalid_input("bench: cannot open '" + a.csv_path +
                                     "' for writing");
        f << body.str();
    } else {
        std::fputs(body.str().c_str(), stdout);
    }
    return 0;
}

int resolve_precision(const std::optional<int>& flag_value) {
    if (flag_value) {
        if (*flag_value < 1 || *flag_value > 17)
            throw opq::invalid_input(
                "--precision must lie between 1 and 17 significant digits");
        return *flag_value;
    }
    const char* env = std::getenv("OPQ_PRECISION");
    if (!env) return 17;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 17)
        throw opq::invalid_input(
            "OPQ_PRECISION must be an integer between 1 and 17 (got '" +
            std::string(env) + "')");
    return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"information entropy of orthonormal polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "entropy 1.0.0");

    OutputOpts out;
    bool want_json = false;
    std::optional<int> precision_flag;
    auto* json_flag = app.add_flag("--json", want_json, "JSON output (default)");
    auto* csv_flag = app.add_flag("--csv", out.csv, "CSV output");
    csv_flag->excludes(json_flag);
    app.add_flag("--bits", out.bits,
                 "report entropy-valued fields in bits instead of nats");
    app.add_option("--precision", precision_flag,
                   "significant digits for numeric output, 1..17 "
                   "(default 17; env OPQ_PRECISION)");

    GegenbauerArgs ga;
    auto* geg = app.add_subcommand(
        "gegenbauer", "entropy for the ultraspherical weight");
    geg->fallthrough();
    geg->add_option("--lambda", ga.lambda, "weight parameter, > -1/2")
        ->required();
    geg->add_option("--n", ga.n, "polynomial degree")->required();
    auto* geps = geg->add_option("--eps", ga.eps, "target tail bound");
    auto* gtr = geg->add_option("--trunc", ga.trunc,
                                "explicit even-series truncation");
    geps->excludes(gtr);
    gtr->excludes(geps);

    CustomArgs ca;
    auto* cus = app.add_subcommand(
        "custom", "entropy from a recurrence-coefficient file");
    cus->fallthrough();
    cus->add_option("--coeffs", ca.path, "JSON coefficient file")->required();
    cus->add_option("--n", ca.n, "polynomial degree")->required();
    auto* ceps = cus->add_option("--eps", ca.eps,
                                 "target sampled-certificate bound");
    auto* ctr = cus->add_option("--trunc", ca.trunc, "explicit truncation");
    ceps->excludes(ctr);
    ctr->excludes(ceps);

    MomentsArgs ma;
    auto* mom = app.add_subcommand("moments",
                                   "Chebyshev moment sequences c_k and m_k");
    mom->fallthrough();
    auto* mlam = mom->add_option("--lambda", ma.lambda,
                                 "ultraspherical weight parameter");
    auto* mcoeffs = mom->add_option("--coeffs", ma.path,
                                    "JSON coefficient file");
    mlam->excludes(mcoeffs);
    mcoeffs->excludes(mlam);
    mom->add_option("--n", ma.n, "polynomial degree")->required();
    mom->add_option("--trunc", ma.trunc, "largest Chebyshev degree")
        ->required();

    SphericalArgs sa;
    auto* sph = app.add_subcommand("spherical",
                                   "angular entropy of spherical harmonics");
    sph->fallthrough();
    sph->add_option("--l", sa.l, "orbital quantum number")->required();
    auto* smopt = sph->add_option("--m", sa.m, "magnetic quantum number");
    auto* sprof = sph->add_flag("--profile", sa.profile,
                                "all m from -l to l (plot-ready)");
    smopt->excludes(sprof);
    sprof->excludes(smopt);

    BenchArgs ba;
    auto* ben = app.add_subcommand("bench", "cross-method comparison table");
    ben->fallthrough();
    ben->add_option("--lambdas", ba.lambdas, "comma-separated weight parameters")
        ->required();
    ben->add_option("--ns", ba.ns, "comma-separated degrees")->required();
    ben->add_option("--methods", ba.methods,
                    "comma-separated subset of series,quad,zeropot,interp");
    ben->add_option("--reps", ba.reps, "timing repetitions per cell");
    ben->add_option("--csv", ba.csv_path,
                    "write the table to this file instead of stdout");
    ben->add_flag("--parallel", ba.parallel,
                  "evaluate cells concurrently (seconds column left empty)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        out.precision = resolve_precision(precision_flag);
        ga.eps_given = geps->count() > 0;
        ga.trunc_given = gtr->count() > 0;
        ca.eps_given = ceps->count() > 0;
        ca.trunc_given = ctr->count() > 0;
        ma.lambda_given = mlam->count() > 0;
        sa.m_given = smopt->count() > 0;

        if (geg->parsed()) return run_gegenbauer(ga, out);
        if (cus->parsed()) return run_custom(ca, out);
        if (mom->parsed()) return run_moments(ma, out);
        if (sph->parsed()) return run_spherical(sa, out);
        if (ben->parsed()) return run_bench(ba, out);
        std::fprintf(stderr, "error: no subcommand given\n");
        return 2;
    } catch (const opq::invalid_input& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const opq::numerical_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
