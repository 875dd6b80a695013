#pragma once
#include <stdexcept>
#include <string>

namespace hopfcyc {

// Named failure modes shared across the library. Every throw carries a
// human-readable witness (offending key, identity id, block, ...) in what().
struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

#define HOPFCYC_DECLARE_ERROR(NAME)                                    \
    struct NAME : Error {                                              \
        explicit NAME(const std::string& m) : Error(#NAME ": " + m) {} \
    };

HOPFCYC_DECLARE_ERROR(CompositeNotZero)
HOPFCYC_DECLARE_ERROR(UnknownKey)
HOPFCYC_DECLARE_ERROR(IdentityFailure)
HOPFCYC_DECLARE_ERROR(EquivalenceBroken)
HOPFCYC_DECLARE_ERROR(NotGroupLike)
HOPFCYC_DECLARE_ERROR(NotModular)
HOPFCYC_DECLARE_ERROR(NotInvolutive)
HOPFCYC_DECLARE_ERROR(InvalidTable)
HOPFCYC_DECLARE_ERROR(JacobiFailure)
HOPFCYC_DECLARE_ERROR(BadParameter)
HOPFCYC_DECLARE_ERROR(TruncationEscape)
HOPFCYC_DECLARE_ERROR(NotIntegral)
HOPFCYC_DECLARE_ERROR(CharacterNotOnAbelianization)
HOPFCYC_DECLARE_ERROR(MismatchedBoundaries)
HOPFCYC_DECLARE_ERROR(NotFlat)
HOPFCYC_DECLARE_ERROR(PreconditionFailure)
HOPFCYC_DECLARE_ERROR(NotClosedUnderStructureMaps)
HOPFCYC_DECLARE_ERROR(OperatorIdentityFailure)
HOPFCYC_DECLARE_ERROR(HomotopyFailure)
HOPFCYC_DECLARE_ERROR(ChaseUnsolvable)
HOPFCYC_DECLARE_ERROR(ChainMapFailure)
HOPFCYC_DECLARE_ERROR(RankMismatch)
HOPFCYC_DECLARE_ERROR(SchemaError)

#undef HOPFCYC_DECLARE_ERROR

}  // namespace hopfcyc
