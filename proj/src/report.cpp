#include "hopfcyc/report.hpp"

#include <json.hpp>

#include <sstream>

namespace hopfcyc {

using json = nlohmann::ordered_json;

std::string CohomologyReport::to_json() const {
    json j;
    j["kind"] = kind;
    j["object"] = object;
    json p = json::object();
    for (auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["exactness"] = exactness;
    json d = json::object();
    for (auto& [deg, dim] : dims) d[std::to_string(deg)] = dim;
    j["dims"] = d;
    if (!per_weight.empty()) {
        json pw = json::object();
        for (auto& [deg, m] : per_weight) {
            json row = json::object();
            for (auto& [w, dim] : m) row[std::to_string(w)] = dim;
            pw[std::to_string(deg)] = row;
        }
        j["per_weight"] = pw;
    }
    if (!s_info.empty()) {
        json s = json::array();
        for (auto& si : s_info)
            s.push_back(json{{"degree", si.degree},
                             {"dim_from", si.dim_from},
                             {"dim_to", si.dim_to},
                             {"rank", si.rank},
                             {"bijective", si.bijective}});
        j["s_operator"] = s;
    }
    if (hp) {
        j["periodic_window"] = json{{"even_degree", hp->even_degree},
                                    {"even_dim", hp->even_dim},
                                    {"odd_degree", hp->odd_degree},
                                    {"odd_dim", hp->odd_dim},
                                    {"even_stable", hp->even_stable},
                                    {"odd_stable", hp->odd_stable}};
    }
    if (!notes.empty()) {
        json nn = json::object();
        for (auto& [k, v] : notes) nn[k] = v;
        j["notes"] = nn;
    }
    return j.dump(2) + "\n";
}

std::string CohomologyReport::to_csv() const {
    std::ostringstream os;
    os << "kind,object,degree,dim\n";
    for (auto& [deg, dim] : dims) os << kind << "," << object << "," << deg << "," << dim << "\n";
    return os.str();
}

}  // namespace hopfcyc
