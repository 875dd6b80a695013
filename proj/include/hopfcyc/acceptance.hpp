#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace hopfcyc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    bool quick = false;       // reduced truncations for a fast smoke run
    uint64_t seed = 20240817; // seed for the redundant random-sample checks
};

// Runs the acceptance criteria in order; one result per criterion. Progress
// lines ("[k/11] name ... PASS (1.2s)") go to *progress when given.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            std::ostream* progress = nullptr);

}  // namespace hopfcyc
