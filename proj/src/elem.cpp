#include "hopfcyc/elem.hpp"

#include <sstream>

namespace hopfcyc {

std::string key_str(const Key& k) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ")";
    return os.str();
}

std::string tuple_str(const TupleKey& t) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << key_str(t[i]);
    os << "]";
    return os.str();
}

std::string elem_str(const Elem& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : e) {
        os << (first ? "" : " + ") << rat_str(v) << "*" << key_str(k);
        first = false;
    }
    return os.str();
}

std::string tensor_str(const Tensor& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : t) {
        os << (first ? "" : " + ") << rat_str(v) << "*" << tuple_str(k);
        first = false;
    }
    return os.str();
}

}  // namespace hopfcyc
