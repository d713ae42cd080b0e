#ifndef OPQ_ERRORS_HPP
#define OPQ_ERRORS_HPP

#include <cstdio>
#include <stdexcept>
#include <string>

namespace opq {

// std::to_string renders doubles with %f, which collapses every small
// tolerance to "0.000000" in diagnostics; error texts use this instead.
inline std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Bad arguments or malformed input data: the caller asked for something the
// library cannot interpret (wrong sizes, out-of-domain parameters, broken
// coefficient files). Maps to CLI exit code 2.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// A computation started but could not finish reliably (iteration caps,
// certified-bound targets unreachable). Messages name the component and
// operation that failed. Maps to CLI exit code 1.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace opq

#endif
