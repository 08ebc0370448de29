#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace rbeta {

using ParamMap = std::vector<std::pair<std::string, Complex>>;

struct VerificationRecord {
    std::string identity_id;
    ParamMap inputs;
    Complex lhs = 0.0, rhs = 0.0;
    double abs_gap = 0.0, rel_gap = 0.0;
    Tolerance tol;
    bool pass = false;
    double runtime_ms = 0.0;
    std::string note;  // set when a side could not be evaluated
};

inline double relative_gap(Complex lhs, Complex rhs) {
    double g = std::abs(lhs - rhs);
    if (g == 0.0) return 0.0;
    double s = std::abs(rhs);
    return s > 0.0 ? g / s : std::numeric_limits<double>::infinity();
}

inline VerificationRecord make_record(std::string id, ParamMap inputs, Complex lhs, Complex rhs, Tolerance tol,
                                      double runtime_ms = 0.0) {
    VerificationRecord r;
    r.identity_id = std::move(id);
    r.inputs = std::move(inputs);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_gap = std::abs(lhs - rhs);
    r.rel_gap = relative_gap(lhs, rhs);
    if (!std::isfinite(r.abs_gap)) r.abs_gap = r.rel_gap = std::numeric_limits<double>::infinity();
    r.tol = tol;
    r.pass = tol.accepts(r.abs_gap, r.rel_gap);
    r.runtime_ms = runtime_ms;
    return r;
}

// A record for an identity whose evaluation threw.
inline VerificationRecord failed_record(std::string id, ParamMap inputs, Tolerance tol, const std::string& why) {
    VerificationRecord r;
    r.identity_id = std::move(id);
    r.inputs = std::move(inputs);
    r.abs_gap = r.rel_gap = std::numeric_limits<double>::infinity();
    r.tol = tol;
    r.note = why;
    return r;
}

class Stopwatch {
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();

public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }
};

}  // namespace rbeta
