#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hopfcyc/rational.hpp"

namespace hopfcyc {

// Canonical basis monomial of a presentation: a group element index, a PBW
// exponent vector, the U_q(sl2) triple (m,k,p), ... The vector ordering is
// the total order used everywhere for tie-breaking.
using Key = std::vector<int32_t>;
// Basis monomial of a tensor power.
using TupleKey = std::vector<Key>;

// Sparse finite linear combination of basis keys.
using Elem = std::map<Key, Rat>;
using PairElem = std::map<std::pair<Key, Key>, Rat>;
using Tensor = std::map<TupleKey, Rat>;

template <typename K>
void add_term(std::map<K, Rat>& m, const K& k, const Rat& c) {
    if (is_zero(c)) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) m.erase(it);
    }
}

template <typename K>
void add_into(std::map<K, Rat>& a, const std::map<K, Rat>& b, const Rat& c = Rat(1)) {
    for (auto& [k, v] : b) add_term(a, k, c * v);
}

template <typename K>
std::map<K, Rat> scaled(const std::map<K, Rat>& a, const Rat& c) {
    std::map<K, Rat> r;
    if (!is_zero(c))
        for (auto& [k, v] : a) r.emplace(k, c * v);
    return r;
}

// Extends a key-level linear map to elements.
template <typename KIn, typename KOut>
std::map<KOut, Rat> apply_linear(const std::map<KIn, Rat>& x,
                                 const std::function<std::map<KOut, Rat>(const KIn&)>& f) {
    std::map<KOut, Rat> r;
    for (auto& [k, v] : x) add_into(r, f(k), v);
    return r;
}

inline Elem elem_of(const Key& k) { return Elem{{k, Rat(1)}}; }
inline Tensor tensor_of(const TupleKey& t) { return Tensor{{t, Rat(1)}}; }

std::string key_str(const Key& k);
std::string tuple_str(const TupleKey& t);
std::string elem_str(const Elem& e);
std::string tensor_str(const Tensor& t);

}  // namespace hopfcyc
