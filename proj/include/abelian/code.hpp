#ifndef ABELIAN_CODE_HPP
#define ABELIAN_CODE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "abelian/apparent.hpp"
#include "abelian/field.hpp"
#include "abelian/fourier.hpp"
#include "abelian/orbit.hpp"

namespace abelian {

struct BchAxisSpec {
    std::uint32_t delta = 2;
    std::uint32_t b = 0;
};

// gamma is the set of axes carrying a designed-distance constraint.
struct BchSpec {
    std::optional<BchAxisSpec> axis1;
    std::optional<BchAxisSpec> axis2;
};

// An abelian code in F_q(r1,r2), determined by its orbit-closed defining set
// relative to the canonical root pair twisted by the stored multiplier pair.
class AbelianCode : public std::enable_shared_from_this<AbelianCode> {
public:
    AbelianCode(Field field, OrbitSet defining_set,
                std::pair<std::uint32_t, std::uint32_t> multiplier);

    const Field& field() const { return field_; }
    std::uint32_t r1() const { return d_.r1(); }
    std::uint32_t r2() const { return d_.r2(); }
    std::size_t length() const { return d_.points(); }
    const OrbitSet& defining_set() const { return d_; }
    std::pair<std::uint32_t, std::uint32_t> multiplier() const { return mult_; }
    std::size_t dimension() const { return d_.points() - d_.size(); }
    bool is_cyclic() const { return d_.r1() == 1; }
    bool is_zero_code() const { return d_.is_full(); }

    // provenance when built by multiply_dimension
    const std::shared_ptr<const AbelianCode>& base() const { return base_; }
    std::uint32_t multiplied_by() const { return n_factor_; }

    const TransformContext& context() const;
    const BivariatePolynomial& idempotent() const;
    // rows are an F_q-basis (reduced row echelon form), each of length r1*r2
    const std::vector<std::vector<std::uint64_t>>& generator_matrix() const;

    SdCodeResult sd_star(std::uint32_t orbit_cap = kDefaultMsdOrbitCap) const;

private:
    friend std::shared_ptr<AbelianCode> multiply_dimension(
        const std::shared_ptr<const AbelianCode>&, std::uint32_t, std::uint32_t);

    Field field_;
    OrbitSet d_;
    std::pair<std::uint32_t, std::uint32_t> mult_;
    std::shared_ptr<const AbelianCode> base_;
    std::uint32_t n_factor_ = 0;

    mutable std::optional<TransformContext> ctx_;
    mutable std::optional<BivariatePolynomial> idem_;
    mutable std::optional<std::vector<std::vector<std::uint64_t>>> genmat_;
    mutable std::optional<SdCodeResult> sd_;
};

using CodePtr = std::shared_ptr<AbelianCode>;

CodePtr code_from_defining_set(const Field& f, const OrbitSet& d,
                               std::pair<std::uint32_t, std::uint32_t>
                                   multiplier = {1, 1});

// Cyclic BCH code embedded as r1 = 1: defining set is the orbit closure of
// the consecutive run {b, ..., b+delta-2} mod r.
CodePtr bch_univariate(const Field& f, std::uint32_t r, std::uint32_t delta,
                       std::uint32_t b);

CodePtr bch_bivariate(const Field& f, std::uint32_t r1, std::uint32_t r2,
                      const BchSpec& spec);

// The dimension-multiplying construction: C_n over (n, r) with defining set
// Z_n x D(C). Re-optimizes the root multiplier when the stored one is not
// optimized. Requires sd*(C) > 1.
CodePtr multiply_dimension(const std::shared_ptr<const AbelianCode>& c,
                           std::uint32_t n,
                           std::uint32_t orbit_cap = kDefaultMsdOrbitCap);

// Reed-Solomon over GF(q) with r = q-1: every orbit is a singleton.
CodePtr reed_solomon(const Field& f, std::uint32_t delta, std::uint32_t b);

struct BchMatch {
    std::uint32_t delta;
    std::uint32_t b;
    std::uint32_t multiplier;
};

// All maximal consecutive runs whose orbit closure recovers the (unit-
// remapped) defining set; empty means the code is not BCH.
std::vector<BchMatch> detect_bch_parameters(const AbelianCode& c);

// r1*r2 - lcm(O_r1(q), O_r2(q)) * sum_k (delta_k - 1) * prod_{j != k} r_j;
// may be negative (vacuous).
std::int64_t bch_dimension_lower_bound(std::uint32_t r1, std::uint32_t r2,
                                       std::uint64_t q, const BchSpec& spec);

BivariatePolynomial encode(const AbelianCode& c,
                           std::span<const std::uint64_t> message);

}  // namespace abelian

#endif
