#pragma once

// Method-comparison harness: runs the series, quadrature, zero-potential,
// and interpolation entropy evaluations over a task grid, timing each and
// measuring its error against the best available reference.

#include <cstddef>
#include <string>
#include <vector>

namespace opq {

// method is one of "series", "quad", "zeropot", "interp".
struct BenchTask {
    double lambda = 0.0;
    std::size_t n = 0;
    std::string method;
};

struct BenchCell {
    double lambda = 0.0;
    std::size_t n = 0;
    std::string method;
    double value = 0.0;
    double abs_error = 0.0;
    double seconds = 0.0;  // mean wall time per evaluation (NaN when parallel)
};

// One cell per task, in task order.  Each evaluation runs once as warm-up
// and `repetitions` more times for the timing mean.  With parallel = true
// the cells are computed concurrently and the seconds column is NaN --
// timings taken under contention would not mean anything.
std::vector<BenchCell> bench_compare(const std::vector<BenchTask>& grid,
                                     int repetitions = 10,
                                     bool parallel = false);

}  // namespace opq
