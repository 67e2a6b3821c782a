#include "abelian/code.hpp"

#include <algorithm>
#include <numeric>

namespace abelian {

namespace {

std::uint32_t identity_unit(std::uint32_t r) { return r == 1 ? 0 : 1; }

void rref_in_place(std::vector<std::vector<std::uint64_t>>& rows,
                   const FieldData& f) {
    std::size_t pivot_row = 0;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const std::uint64_t scale = f.inv(rows[pivot_row][col]);
        for (std::size_t j = col; j < ncols; ++j)
            rows[pivot_row][j] = f.mul(rows[pivot_row][j], scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            const std::uint64_t factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[pivot_row][j]));
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
}

}  // namespace

// --- AbelianCode ----------------------------------------------------------

AbelianCode::AbelianCode(Field field, OrbitSet defining_set,
                         std::pair<std::uint32_t, std::uint32_t> multiplier)
    : field_(std::move(field)), d_(std::move(defining_set)), mult_(multiplier) {
    if (d_.q() != field_->size)
        throw FieldMismatch("defining set base q does not match the field");
    if (std::gcd(field_->size, (std::uint64_t)d_.r1() * d_.r2()) != 1)
        throw SemisimplicityViolation("gcd(q, r1*r2) != 1");
}

const TransformContext& AbelianCode::context() const {
    if (!ctx_) ctx_.emplace(field_, d_.r1(), d_.r2(), mult_);
    return *ctx_;
}

const BivariatePolynomial& AbelianCode::idempotent() const {
    if (!idem_) idem_ = idempotent_from_defining_set(d_, context());
    return *idem_;
}

const std::vector<std::vector<std::uint64_t>>& AbelianCode::generator_matrix()
    const {
    if (genmat_) return *genmat_;
    const std::uint32_t r1 = d_.r1(), r2 = d_.r2();
    std::vector<std::vector<std::uint64_t>> rows;
    if (!is_zero_code()) {
        const BivariatePolynomial& e = idempotent();
        rows.reserve((std::size_t)r1 * r2);
        for (std::uint32_t s = 0; s < r1; ++s)
            for (std::uint32_t t = 0; t < r2; ++t) {
                // X^s Y^t * e is a cyclic shift of the coefficient matrix
                std::vector<std::uint64_t> row((std::size_t)r1 * r2, 0);
                for (std::uint32_t a = 0; a < r1; ++a)
                    for (std::uint32_t b = 0; b < r2; ++b)
                        row[(std::size_t)((a + s) % r1) * r2 + (b + t) % r2] =
                            e.at(a, b);
                rows.push_back(std::move(row));
            }
        rref_in_place(rows, *field_);
    }
    if (rows.size() != dimension())
        throw NotOrbitClosed("generator rank does not match |I| - |D|");
    genmat_ = std::move(rows);
    return *genmat_;
}

SdCodeResult AbelianCode::sd_star(std::uint32_t orbit_cap) const {
    if (!sd_) sd_ = sd_star_code(d_, orbit_cap);
    return *sd_;
}

// --- constructions --------------------------------------------------------

CodePtr code_from_defining_set(const Field& f, const OrbitSet& d,
                               std::pair<std::uint32_t, std::uint32_t> mult) {
    return std::make_shared<AbelianCode>(f, d, mult);
}

CodePtr bch_univariate(const Field& f, std::uint32_t r, std::uint32_t delta,
                       std::uint32_t b) {
    if (delta < 2 || delta > r)
        throw DesignedDistanceOutOfRange("need 2 <= delta <= r");
    std::vector<IndexPair> run;
    for (std::uint32_t l = 0; l + 2 <= delta + 0u; ++l)
        run.push_back({0, (b + l) % r});
    OrbitSet d = orbit_closure(run, 1, r, f->size);
    return code_from_defining_set(f, d, {0, 1});
}

CodePtr bch_bivariate(const Field& f, std::uint32_t r1, std::uint32_t r2,
                      const BchSpec& spec) {
    std::vector<IndexPair> pts;
    if (spec.axis1) {
        if (spec.axis1->delta < 2 || spec.axis1->delta > r1)
            throw DesignedDistanceOutOfRange("axis 1: need 2 <= delta <= r1");
        for (std::uint32_t l = 0; l + 2 <= spec.axis1->delta; ++l) {
            const std::uint32_t x = (spec.axis1->b + l) % r1;
            for (std::uint32_t j = 0; j < r2; ++j) pts.push_back({x, j});
        }
    }
    if (spec.axis2) {
        if (spec.axis2->delta < 2 || spec.axis2->delta > r2)
            throw DesignedDistanceOutOfRange("axis 2: need 2 <= delta <= r2");
        for (std::uint32_t l = 0; l + 2 <= spec.axis2->delta; ++l) {
            const std::uint32_t y = (spec.axis2->b + l) % r2;
            for (std::uint32_t i = 0; i < r1; ++i) pts.push_back({i, y});
        }
    }
    OrbitSet d = orbit_closure(pts, r1, r2, f->size);
    return code_from_defining_set(
        f, d, {identity_unit(r1), identity_unit(r2)});
}

CodePtr multiply_dimension(const std::shared_ptr<const AbelianCode>& c,
                           std::uint32_t n, std::uint32_t orbit_cap) {
    if (!c->is_cyclic())
        throw NotCoprime("multiply_dimension expects a cyclic code (r1 = 1)");
    if (c->is_zero_code()) throw ZeroCode("cannot multiply the zero code");
    const std::uint32_t r = c->r2();
    const Field& f = c->field();
    if (std::gcd((std::uint64_t)n * r, f->size) != 1)
        throw NotCoprime("gcd(q, n*r) != 1");

    SdCodeResult sd = c->sd_star(orbit_cap);
    if (sd.value <= 1)
        throw TrivialDistance("sd*(C) = " + std::to_string(sd.value) +
                              "; the construction needs sd* > 1");

    // ensure the stored root is optimized; remap to the least optimized
    // multiplier otherwise
    OrbitSet d = c->defining_set();
    std::uint32_t v_stored = c->multiplier().second;
    const std::pair<std::uint32_t, std::uint32_t> id{0, identity_unit(r)};
    if (std::find(sd.optimized_multipliers.begin(),
                  sd.optimized_multipliers.end(),
                  id) == sd.optimized_multipliers.end()) {
        const auto [u, v] = sd.optimized_multipliers.front();
        d = apply_multiplier(d, u, v);
        v_stored = (std::uint32_t)((std::uint64_t)v_stored *
                                   unit_inverse(v, r) % std::max(r, 1u));
    }
    auto base = std::make_shared<AbelianCode>(f, d, std::make_pair(0u, v_stored));

    if (n == 1) {
        auto copy = std::make_shared<AbelianCode>(f, d,
                                                  std::make_pair(0u, v_stored));
        copy->base_ = base;
        copy->n_factor_ = 1;
        return copy;
    }

    // lift D to Z_n x D
    std::vector<IndexPair> pts;
    pts.reserve((std::size_t)n * d.size());
    for (IndexPair ij : d.members())
        for (std::uint32_t x = 0; x < n; ++x) pts.push_back({x, ij.b});
    OrbitSet dn = OrbitSet::from_members_checked(n, r, f->size, pts);

    // express the base root inside the splitting field of (n, r) so that
    // univariate codewords lift verbatim
    SplittingField sf_base = splitting_field(f, 1, r);
    SplittingField sf_n = splitting_field(f, n, r);
    FieldElement beta_base = root_of_unity(sf_base.L, r).pow(
        v_stored == 0 ? 1 : v_stored);
    std::uint32_t w = v_stored;
    if (sf_base.L != sf_n.L) {
        Embedding lift(sf_base.L, sf_n.L);
        FieldElement target = lift.map(beta_base);
        FieldElement beta_n = root_of_unity(sf_n.L, r);
        bool found = false;
        FieldElement acc = beta_n;
        for (std::uint32_t k = 1; k <= r; ++k) {
            if (acc == target) {
                w = k;
                found = true;
                break;
            }
            acc = acc * beta_n;
        }
        if (!found) throw OrderUnavailable("root transport failed (unreachable)");
    }

    auto cn = std::make_shared<AbelianCode>(
        f, dn, std::make_pair(identity_unit(n), w == 0 ? identity_unit(r) : w));
    cn->base_ = base;
    cn->n_factor_ = n;
    return cn;
}

CodePtr reed_solomon(const Field& f, std::uint32_t delta, std::uint32_t b) {
    if (f->size < 3) throw DesignedDistanceOutOfRange("need q - 1 >= 2");
    const std::uint32_t r = (std::uint32_t)(f->size - 1);
    return bch_univariate(f, r, delta, b);
}

std::vector<BchMatch> detect_bch_parameters(const AbelianCode& c) {
    if (!c.is_cyclic())
        throw NotCoprime("detect_bch_parameters expects a cyclic code");
    if (c.is_zero_code()) throw ZeroCode("zero code");
    const std::uint32_t r = c.r2();
    const std::uint64_t q = c.field()->size;
    std::vector<BchMatch> out;
    for (std::uint32_t u : units(r)) {
        OrbitSet du = apply_multiplier(c.defining_set(), 0, u);
        std::vector<std::uint8_t> in(r, 0);
        for (IndexPair ij : du.members()) in[ij.b] = 1;
        // maximal circular runs of members
        for (std::uint32_t s = 0; s < r; ++s) {
            if (!in[s] || in[(s + r - 1) % r]) continue;  // not a run start
            std::uint32_t len = 0;
            while (len < r && in[(s + len) % r]) ++len;
            std::vector<IndexPair> run;
            for (std::uint32_t l = 0; l < len; ++l)
                run.push_back({0, (s + l) % r});
            if (orbit_closure(run, 1, r, q) == du)
                out.push_back({len + 1, s, u});
        }
    }
    return out;
}

std::int64_t bch_dimension_lower_bound(std::uint32_t r1, std::uint32_t r2,
                                       std::uint64_t q, const BchSpec& spec) {
    const std::int64_t t = (std::int64_t)std::lcm(multiplicative_order(q, r1),
                                                  multiplicative_order(q, r2));
    std::int64_t sum = 0;
    if (spec.axis1) sum += (std::int64_t)(spec.axis1->delta - 1) * r2;
    if (spec.axis2) sum += (std::int64_t)(spec.axis2->delta - 1) * r1;
    return (std::int64_t)r1 * r2 - t * sum;
}

BivariatePolynomial encode(const AbelianCode& c,
                           std::span<const std::uint64_t> message) {
    const auto& gen = c.generator_matrix();
    if (message.size() != gen.size())
        throw LengthMismatch("message length must equal dim(C)");
    const FieldData& f = *c.field();
    BivariatePolynomial out = BivariatePolynomial::zero(c.field(), c.r1(),
                                                        c.r2());
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0) continue;
        if (message[i] >= f.size) throw FieldMismatch("message symbol range");
        for (std::size_t j = 0; j < out.coeffs.size(); ++j)
            out.coeffs[j] = f.add(out.coeffs[j], f.mul(message[i], gen[i][j]));
    }
    return out;
}

}  // namespace abelian
