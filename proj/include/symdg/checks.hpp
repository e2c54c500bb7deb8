#pragma once

#include <optional>

#include "symdg/formality.hpp"
#include "symdg/generate.hpp"

namespace symdg {

struct CheckConfig {
    uint64_t seed = 0;
    int trials = 50;
    int max_word_length = 3;  // in [1, 4]
    int max_poly_degree = 2;
};

struct CheckReport {
    std::string check;
    uint64_t seed = 0;
    int trials = 0;
    bool pass = false;
    std::optional<std::string> counterexample;
    std::optional<std::string> note;
};

// Property suites, one per verifiable identity family. A failing suite
// carries a re-checkable counterexample (fixed seed, rendered inputs).
const std::vector<std::string>& check_names();

CheckReport run_check(const std::string& name,
                      const std::shared_ptr<const PoissonStructure>& S, const CheckConfig& cfg);

std::string report_text(const CheckReport& r);
std::string report_json(const CheckReport& r);

}  // namespace symdg
