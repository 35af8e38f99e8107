#pragma once

#include <string>
#include <vector>

#include "umbra/real.hpp"

namespace umbra::cat {

struct PointResult {
    std::string label;    // grid point, e.g. "s=2.5"
    Real residual;
    std::string detail;   // lhs/rhs or failure text
};

struct VerificationRecord {
    std::string id;
    std::string description;      // the equality under test, in plain notation
    std::string klass;            // convergent | asymptotic | algebraic-chain | formal-noncheck
    std::string independence;     // why LHS and RHS evaluators are independent
    Real residual;                // max over the grid
    Real tolerance;
    std::string status;           // pass | fail | formal | error
    std::string method_meta;      // engine shift/truncation and friends
    std::string error;            // populated when an evaluator threw
    std::vector<PointResult> points;
    int precision = 0;
    double seconds = 0.0;

    bool failed() const { return status == "fail" || status == "error"; }
};

// JSON array, stable field order; the timestamp lives in a single top-level
// field so comparison tooling can drop it.
std::string render_report_json(const std::vector<VerificationRecord>& records, bool with_timestamp = true);

// CSV with fixed header: id,class,status,residual,tolerance,precision,method,description
std::string render_report_csv(const std::vector<VerificationRecord>& records);

std::string render_report_human(const std::vector<VerificationRecord>& records);

} // namespace umbra::cat
