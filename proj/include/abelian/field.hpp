#ifndef ABELIAN_FIELD_HPP
#define ABELIAN_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "abelian/errors.hpp"

namespace abelian {

struct FieldData;

// Fields are immutable and cached: make_field(p, m) always returns the same
// instance, so element fields can be compared by pointer.
using Field = std::shared_ptr<const FieldData>;

class FieldElement {
public:
    FieldElement(Field field, std::uint64_t code);

    std::uint64_t code() const { return code_; }
    const Field& field() const { return field_; }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::int64_t k) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    Field field_;
    std::uint64_t code_;
};

// Canonical GF(p^m): modulus is the least monic irreducible of degree m
// under the integer-code order, so two constructions agree bit-for-bit.
struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t size = 0;                 // p^m
    std::vector<std::uint32_t> modulus;     // ascending, length m+1, monic
    std::uint64_t modulus_mask = 0;         // char-2 fast path
    std::uint64_t generator_code = 0;       // least-coded full-order element
    std::vector<std::uint64_t> order_prime_factors;  // prime factors of size-1

    // exp/log tables for size <= 2^16; empty otherwise
    std::vector<std::uint64_t> exp_table;
    std::vector<std::uint32_t> log_table;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(std::uint64_t code) const;
    // the constant c*1 for an integer c (reduced mod p)
    FieldElement from_integer(std::uint64_t c) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::int64_t k) const;
};

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t(1) << 32;

Field make_field(std::uint32_t p, std::uint32_t m,
                 std::uint64_t size_cap = kDefaultFieldCap);

FieldElement canonical_generator(const Field& f);

// Multiplicative order of a nonzero element.
std::uint64_t element_order(const FieldElement& x);

// Deterministic ring homomorphism of a field onto the subfield of the same
// size inside a larger field (the image of "x" is the least-coded root of
// the source modulus).
class Embedding {
public:
    Embedding(Field from, Field to);  // identity when from == to

    const Field& from() const { return from_; }
    const Field& to() const { return to_; }
    bool is_identity() const { return from_ == to_; }

    FieldElement map(const FieldElement& x) const;
    // Inverse on the image; throws FieldMismatch if y is not in the image.
    FieldElement lift_back(const FieldElement& y) const;

private:
    Field from_;
    Field to_;
    FieldElement root_image_;
    std::unordered_map<std::uint64_t, std::uint64_t> forward_;  // code map
};

struct SplittingField {
    Field L;
    Embedding embed;        // base field into L
    std::uint32_t degree;   // [L : F_q]
};

// Least extension L of the base field containing the r1-th and r2-th roots
// of unity; requires gcd(q, r1*r2) = 1.
SplittingField splitting_field(const Field& base, std::uint32_t r1,
                               std::uint32_t r2,
                               std::uint64_t size_cap = kDefaultFieldCap);

// The canonical primitive r-th root: generator^((|L|-1)/r).
FieldElement root_of_unity(const Field& L, std::uint32_t r);

std::string field_record(const Field& f);
Field parse_field_record(const std::string& line);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace abelian

#endif
