#include "hopfcyc/rational.hpp"

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw SchemaError("malformed rational literal '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw SchemaError("zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q);
    Rat r(q);
    mpq_clear(q);
    return r;
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace hopfcyc
