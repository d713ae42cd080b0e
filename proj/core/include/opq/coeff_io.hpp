#ifndef OPQ_COEFF_IO_HPP
#define OPQ_COEFF_IO_HPP

#include "opq/recurrence.hpp"

#include <string>

namespace opq {

// Load recurrence coefficients from a JSON document of the form
//
//     {"a": [a_1, a_2, ...], "b": [b_0, b_1, ...]}
//
// where "b" may be omitted for a symmetric measure (all b_k = 0) and, when
// present, must have the same length as "a".  All entries must be finite
// numbers and every a_k > 0.  Malformed documents raise invalid_input with
// the JSON path of the defect (e.g. "/a/3").
RecurrenceCoefficients load_coefficients(const std::string& path);

// Same, but parsing an in-memory document (used by the loader and tests).
RecurrenceCoefficients parse_coefficients(const std::string& text);

}  // namespace opq

#endif
