// Acceptance suite: runs every criterion at its stated truncation and prints
// one pass/fail line each. Exit code 0 iff all pass.
#include <cstring>
#include <iostream>

#include "hopfcyc/acceptance.hpp"

int main(int argc, char** argv) {
    hopfcyc::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
    auto results = hopfcyc::run_acceptance(opt, &std::cout);
    bool all = true;
    for (auto& r : results) all = all && r.pass;
    std::cout << (all ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}
