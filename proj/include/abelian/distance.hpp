#ifndef ABELIAN_DISTANCE_HPP
#define ABELIAN_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "abelian/code.hpp"

namespace abelian {

enum class CertifyStrategy { kExhaustive, kWitnessSdStar, kBoth };

struct DistanceCertificate {
    std::string code_id;
    std::uint64_t lower_bound = 0;
    std::string lower_source;  // "sd*" or "exhaustive"
    std::uint64_t upper_bound = 0;
    std::string upper_source;
    std::optional<BivariatePolynomial> witness;
    bool exact = false;
    std::uint64_t value = 0;  // meaningful when exact

    std::string render() const;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 24;

// Minimum Hamming weight over all nonzero codewords, by message-space
// enumeration against the generator matrix. stop_at allows early exit once
// a known lower bound is met.
std::uint64_t minimum_distance_exhaustive(
    const AbelianCode& c, std::uint64_t cap = kDefaultEnumerationCap,
    std::optional<std::uint64_t> stop_at = std::nullopt);

// A minimum-weight codeword found by the same enumeration.
BivariatePolynomial minimum_weight_codeword(
    const AbelianCode& c, std::uint64_t cap = kDefaultEnumerationCap);

// Lift a univariate codeword of C onto row 0 of C_n; weight is preserved
// and membership is re-verified by evaluation on D(C_n).
BivariatePolynomial embedded_witness(const AbelianCode& base,
                                     const AbelianCode& multiplied,
                                     const BivariatePolynomial& w);

DistanceCertificate certify_distance(
    const AbelianCode& c, CertifyStrategy strategy,
    std::uint64_t enumeration_cap = kDefaultEnumerationCap,
    std::uint32_t orbit_cap = kDefaultMsdOrbitCap);

bool is_codeword(const AbelianCode& c, const BivariatePolynomial& f);

}  // namespace abelian

#endif
