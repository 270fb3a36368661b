#pragma once

#include <json.hpp>

#include <complex>
#include <string>
#include <vector>

#include "mlsz/zeros.hpp"

namespace mlsz {

// Settings shared by the verification suites.  Empty lists mean "suite default".
struct VerifyConfig {
    double rho = 2.0;
    std::vector<cplx> lambdas;
    std::vector<int> n_list;
    double h = 0.2;
    double delta2 = 0.2;
    double delta3 = 0.2;
    bool as_printed = false;
    Window window{-1.8, 1.8, -1.8, 1.8};  // zero search window (theorem2)

    void validate() const;
};

struct CheckResult {
    std::string check_id;
    nlohmann::json params = nlohmann::json::object();
    std::vector<int> n_list;
    std::vector<double> metric_list;
    bool pass = false;
};

struct Report {
    std::string suite;
    VerifyConfig config;
    std::vector<CheckResult> checks;

    bool pass() const;
};

const std::vector<std::string>& suite_names();

// Runs one of theorem1, theorem2, theorem3, theorem4, lemma1, lemma4, kn.
Report run_suite(const std::string& suite, const VerifyConfig& cfg);

// {run_config, checks: [{check_id, params, n_list, metric_list, pass}], pass}, numbers at 15 digits.
nlohmann::json report_to_json(const Report& r);
nlohmann::json config_to_json(const std::string& suite, const VerifyConfig& cfg);

}  // namespace mlsz
