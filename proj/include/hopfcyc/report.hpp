#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfcyc {

// Per-degree dimension report with every parameter needed to reproduce it.
// Serialized deterministically (fixed field order, rationals as strings).
struct CohomologyReport {
    std::string kind;    // hochschild | cyclic | periodic-window | cotor | ...
    std::string object;  // module / presentation description
    std::vector<std::pair<std::string, std::string>> params;
    std::string exactness;  // "graded-exact" or "filtered"
    std::map<int, int> dims;
    std::map<int, std::map<int, int>> per_weight;  // degree -> weight -> dim

    struct SInfo {
        int degree;  // S: HC^degree -> HC^{degree+2}
        int dim_from, dim_to, rank;
        bool bijective;
    };
    std::vector<SInfo> s_info;

    struct HPWindow {
        int even_degree, even_dim;
        int odd_degree, odd_dim;
        bool even_stable, odd_stable;  // S bijective onto the top window
    };
    std::optional<HPWindow> hp;

    std::vector<std::pair<std::string, std::string>> notes;

    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void note(const std::string& k, const std::string& v) { notes.emplace_back(k, v); }

    std::string to_json() const;
    std::string to_csv() const;
};

}  // namespace hopfcyc
