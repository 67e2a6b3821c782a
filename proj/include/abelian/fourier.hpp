#ifndef ABELIAN_FOURIER_HPP
#define ABELIAN_FOURIER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "abelian/field.hpp"
#include "abelian/orbit.hpp"

namespace abelian {

// Element of F(r1,r2) = F[X,Y]/(X^r1 - 1, Y^r2 - 1). Coefficients are
// element codes, row-major (a-major, then b).
struct BivariatePolynomial {
    Field field;
    std::uint32_t r1 = 1, r2 = 1;
    std::vector<std::uint64_t> coeffs;

    static BivariatePolynomial zero(Field f, std::uint32_t r1, std::uint32_t r2);
    static BivariatePolynomial constant(Field f, std::uint32_t r1,
                                        std::uint32_t r2, std::uint64_t code);

    std::uint64_t& at(std::uint32_t a, std::uint32_t b) {
        return coeffs[(std::size_t)a * r2 + b];
    }
    std::uint64_t at(std::uint32_t a, std::uint32_t b) const {
        return coeffs[(std::size_t)a * r2 + b];
    }
    bool is_zero() const;
    std::size_t weight() const;

    // ring product with exponents reduced mod (r1, r2)
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial operator+(const BivariatePolynomial& o) const;

    friend bool operator==(const BivariatePolynomial&,
                           const BivariatePolynomial&) = default;
};

// DFT image over the splitting field, indexed by I. The root pair is the
// canonical one twisted by the recorded multiplier pair.
struct Spectrum {
    Field L;
    std::uint32_t r1 = 1, r2 = 1;
    std::pair<std::uint32_t, std::uint32_t> multiplier{1, 1};
    std::vector<std::uint64_t> values;

    std::uint64_t at(std::uint32_t i, std::uint32_t j) const {
        return values[(std::size_t)i * r2 + j];
    }
};

// Precomputed evaluation context: splitting field, embedding, and the root
// pair fixed by a multiplier pair relative to the canonical roots.
class TransformContext {
public:
    TransformContext(Field base, std::uint32_t r1, std::uint32_t r2,
                     std::pair<std::uint32_t, std::uint32_t> multiplier = {1, 1});

    const Field& base() const { return base_; }
    const Field& L() const { return sf_.L; }
    const Embedding& embedding() const { return sf_.embed; }
    std::uint32_t r1() const { return r1_; }
    std::uint32_t r2() const { return r2_; }
    std::pair<std::uint32_t, std::uint32_t> multiplier() const { return mult_; }

    // alpha^(u*k), beta^(v*k) power tables
    const std::vector<std::uint64_t>& xpow() const { return xpow_; }
    const std::vector<std::uint64_t>& ypow() const { return ypow_; }

    // evaluate a base-field polynomial at (alpha^(u*i), beta^(v*j))
    FieldElement evaluate(const BivariatePolynomial& f, std::uint32_t i,
                          std::uint32_t j) const;

private:
    Field base_;
    std::uint32_t r1_, r2_;
    std::pair<std::uint32_t, std::uint32_t> mult_;
    SplittingField sf_;
    std::vector<std::uint64_t> xpow_, ypow_;
};

Spectrum dft(const BivariatePolynomial& f, const TransformContext& ctx);

// Inverse transform; result lives over L.
BivariatePolynomial inverse_dft(const Spectrum& s, const TransformContext& ctx);

// Zero set of the spectrum of a base-field polynomial; orbit-closed by
// Galois stability.
OrbitSet defining_set_of(const BivariatePolynomial& f,
                         const TransformContext& ctx);

// The idempotent e over F_q whose spectrum is the indicator of I \ D.
BivariatePolynomial idempotent_from_defining_set(const OrbitSet& d,
                                                 const TransformContext& ctx);

std::string polynomial_record(const BivariatePolynomial& f);
BivariatePolynomial parse_polynomial_record(const std::string& line);

}  // namespace abelian

#endif
