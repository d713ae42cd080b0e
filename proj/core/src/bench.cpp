#include "opq/bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <utility>

#include "opq/errors.hpp"
#include "opq/gegenbauer.hpp"
#include "opq/oracle.hpp"

namespace opq {

namespace {

using Clock = std::chrono::steady_clock;

// Reference values: closed forms where they exist, exactly terminating
// series for the other integer lambda, and a machine-epsilon truncation plan
// otherwise (cut at 30000 even-series terms if the plan wants more; the
// residual there is far below every error this table can resolve).
double reference_entropy(const GegenbauerParams& params, std::size_t n) {
    if (n == 0) return 0.0;
    if (params.integer_lambda && params.lambda_int <= 2)
        return closed_form_entropy(params.lambda_int, n);
    if (params.integer_lambda) return entropy_gegenbauer(params, n, 1e-12).value;
    const TruncationPlan plan = choose_truncation(
        params, n, std::numeric_limits<double>::epsilon());
    const std::size_t K = std::min<std::size_t>(plan.N0, 30000);
    return entropy_gegenbauer_at(params, n, K).value;
}

// Series evaluation at production tolerance, with the same cost cap the
// spherical module uses for slowly decaying tails.
double series_value(const GegenbauerParams& params, std::size_t n) {
    constexpr double kEps = 1e-10;
    constexpr std::size_t kExtraCap = 6000;
    if (n == 0) return 0.0;
    const TruncationPlan plan = choose_truncation(params, n, kEps);
    if (!plan.terminating && plan.rigorous && plan.N0 > n + kExtraCap)
        return entropy_gegenbauer_at(params, n, n + kExtraCap).value;
    return entropy_gegenbauer(params, n, kEps).value;
}

// Cubic Lagrange interpolation of the entropy across four consecutive
// integer lambda, evaluated at the requested lambda.  Exact at integer
// lambda by construction; a cheap surrogate elsewhere.
double interp_value(const GegenbauerParams& params, std::size_t n) {
    long base = static_cast<long>(std::floor(params.lambda)) - 1;
    if (base < 0) base = 0;
    double node[4], val[4];
    for (int i = 0; i < 4; ++i) {
        const long li = base + i;
        node[i] = static_cast<double>(li);
        val[i] = reference_entropy(GegenbauerParams(node[i]), n);
    }
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        double w = val[i];
        for (int j = 0; j < 4; ++j)
            if (j != i) w *= (params.lambda - node[j]) / (node[i] - node[j]);
        acc += w;
    }
    return acc;
}

BenchCell run_task(const BenchTask& task, int repetitions, bool timed) {
    const GegenbauerParams params(task.lambda);
    const std::size_t n = task.n;

    std::function<double()> eval;
    if (task.method == "series") {
        eval = [&] { return series_value(params, n); };
    } else if (task.method == "quad") {
        const std::size_t K = std::max<std::size_t>(50 * n, n + 1);
        eval = [&, K] {
            return quadrature_entropy(gegenbauer_coefficients(params, K), n, K);
        };
    } else if (task.method == "zeropot") {
        const std::size_t K = std::max<std::size_t>(50 * n, 2 * n);
        eval = [&, K] {
            return zero_potential_entropy(gegenbauer_coefficients(params, K), n,
                                          K);
        };
    } else if (task.method == "interp") {
        eval = [&] { return interp_value(params, n); };
    } else {
        throw invalid_input("bench_compare: unknown method '" + task.method +
                            "' (expected series, quad, zeropot, or interp)");
    }

    BenchCell cell;
    cell.lambda = task.lambda;
    cell.n = n;
    cell.method = task.method;
    cell.value = eval();  // warm-up run, also supplies the value
    if (timed) {
        const auto t0 = Clock::now();
        for (int r = 0; r < repetitions; ++r) eval();
        cell.seconds = std::chrono::duration<double>(Clock::now() - t0).count() /
                       repetitions;
    } else {
        cell.seconds = std::numeric_limits<double>::quiet_NaN();
    }
    cell.abs_error = std::fabs(cell.value - reference_entropy(params, n));
    return cell;
}

}  // namespace

std::vector<BenchCell> bench_compare(const std::vector<BenchTask>& grid,
                                     int repetitions, bool parallel) {
    if (repetitions < 1)
        throw invalid_input("bench_compare: repetitions must be at least 1");

    std::vector<BenchCell> table;
    table.reserve(grid.size());
    if (parallel) {
        std::vector<std::future<BenchCell>> futures;
        futures.reserve(grid.size());
        for (const BenchTask& task : grid)
            futures.push_back(std::async(std::launch::async, run_task, task,
                                         repetitions, false));
        for (auto& f : futures) table.push_back(f.get());
    } else {
        for (const BenchTask& task : grid)
            table.push_back(run_task(task, repetitions, true));
    }
    return table;
}

}  // namespace opq
