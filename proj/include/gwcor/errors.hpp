// Error taxonomy for the gwcor library.
//
// Two failure classes are distinguished throughout:
//
//   * input_error       — the caller handed us something malformed or out of
//                         domain (bad JSON, a non-prime modulus, a divisor
//                         that is not monic, a singular Gram matrix where an
//                         invertible one is required, ...).  The CLI maps
//                         these to exit code 2.
//
//   * math_check_error  — an internal identity that the algorithms guarantee
//                         failed to hold at runtime (a cofactor identity,
//                         a symmetry assertion, a radical mismatch, a failed
//                         calibration).  These indicate either a genuine
//                         mathematical obstruction in the requested
//                         computation or a bug; the CLI maps them to exit
//                         code 1.

#pragma once

#include <stdexcept>
#include <string>

namespace gwcor {

class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

class math_check_error : public std::runtime_error {
public:
    explicit math_check_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal assertion helper: throws math_check_error when `cond` is false.
inline void check(bool cond, const std::string& what) {
    if (!cond) throw math_check_error(what);
}

// Precondition helper: throws input_error when `cond` is false.
inline void require(bool cond, const std::string& what) {
    if (!cond) throw input_error(what);
}

} // namespace gwcor
