#pragma once

#include <functional>
#include <optional>

#include "umbra/engine.hpp"
#include "umbra/report.hpp"

namespace umbra::cat {

struct RunConfig {
    engine::EngineConfig engine;
    bool parallel = true;
};

struct Identity {
    std::string id;
    std::string description;
    std::string klass;         // convergent | asymptotic | algebraic-chain | formal-noncheck
    std::string independence;  // evaluator-independence note
    Real tolerance;            // asymptotic entries refine this at run time
    // evaluates the grid; fills residuals/details, may adjust tolerance
    std::function<void(const RunConfig&, VerificationRecord&)> run;
};

const std::vector<Identity>& registry();

std::vector<std::string> list_identities();

// registry constants: the defining double sums
Real lambda1_constant();
Real lambda2_constant();

VerificationRecord run_identity(const std::string& id, const RunConfig& cfg = {});

std::vector<VerificationRecord> run_all(const RunConfig& cfg = {});

std::vector<VerificationRecord> run_selected(const std::vector<std::string>& ids, const RunConfig& cfg = {});

} // namespace umbra::cat
