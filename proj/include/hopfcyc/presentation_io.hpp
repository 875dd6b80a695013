#pragma once
#include <optional>
#include <string>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/presentation.hpp"

namespace hopfcyc {

// Presentation file format (JSON): {"kind": "group"|"lie"|"uq_sl2"|
// "symmetric"|"table", ...}. Rational scalars are "p/q" strings. Schema
// violations throw SchemaError with the offending field named; structural
// inconsistencies (group axioms, Jacobi) throw the validation errors of the
// corresponding constructor.
HopfPtr load_presentation(const std::string& path);
HopfPtr parse_presentation(const std::string& json_text);

// Serializes a presentation back to the file format ("table" kind for
// finite-dimensional ones, parameter form for the rest).
std::string presentation_to_json(const Hopf& h);
void save_presentation(const Hopf& h, const std::string& path);

// "builtin:NAME" or a file path.
HopfPtr resolve_presentation(const std::string& spec, const Rat& q = Rat(3) / 2,
                             int power_window = 2);

// Key lookup by human name: group element names, "e<i>" Lie basis letters,
// U_q(sl2) letters E, KF, K, Kinv, the unit "1". Also accepts "(a,b,...)".
std::optional<Key> key_by_name(const Hopf& h, const std::string& name);
std::string key_name(const Hopf& h, const Key& k);

// Character by name: "eps", or "file-delta" when the file supplied one, or
// "lie:v1,v2,..." giving values on the Lie basis.
Character character_by_name(const Hopf& h, const std::string& name);

}  // namespace hopfcyc
