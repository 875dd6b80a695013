#pragma once
#include <gmpxx.h>

#include <string>

namespace hopfcyc {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// denominator > 0), which is exactly the Scalar invariant we need.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

// Parses "p", "-p", "p/q". Throws SchemaError on malformed input or q == 0.
Rat rat_parse(const std::string& s);

// Canonical text form: "p" if integral, else "p/q" with q > 1.
std::string rat_str(const Rat& x);

}  // namespace hopfcyc
