#include "abelian/fourier.hpp"

#include <numeric>
#include <sstream>

namespace abelian {

// --- BivariatePolynomial --------------------------------------------------

BivariatePolynomial BivariatePolynomial::zero(Field f, std::uint32_t r1,
                                              std::uint32_t r2) {
    return {std::move(f), r1, r2,
            std::vector<std::uint64_t>((std::size_t)r1 * r2, 0)};
}

BivariatePolynomial BivariatePolynomial::constant(Field f, std::uint32_t r1,
                                                  std::uint32_t r2,
                                                  std::uint64_t code) {
    BivariatePolynomial p = zero(std::move(f), r1, r2);
    p.coeffs[0] = code;
    return p;
}

bool BivariatePolynomial::is_zero() const {
    for (std::uint64_t c : coeffs)
        if (c) return false;
    return true;
}

std::size_t BivariatePolynomial::weight() const {
    std::size_t w = 0;
    for (std::uint64_t c : coeffs) w += (c != 0);
    return w;
}

BivariatePolynomial BivariatePolynomial::operator*(
    const BivariatePolynomial& o) const {
    if (field != o.field || r1 != o.r1 || r2 != o.r2)
        throw FieldMismatch("polynomial product context mismatch");
    BivariatePolynomial out = zero(field, r1, r2);
    for (std::uint32_t a = 0; a < r1; ++a)
        for (std::uint32_t b = 0; b < r2; ++b) {
            std::uint64_t ca = at(a, b);
            if (!ca) continue;
            for (std::uint32_t c = 0; c < r1; ++c)
                for (std::uint32_t d = 0; d < r2; ++d) {
                    std::uint64_t cb = o.at(c, d);
                    if (!cb) continue;
                    std::uint64_t& dst = out.at((a + c) % r1, (b + d) % r2);
                    dst = field->add(dst, field->mul(ca, cb));
                }
        }
    return out;
}

BivariatePolynomial BivariatePolynomial::operator+(
    const BivariatePolynomial& o) const {
    if (field != o.field || r1 != o.r1 || r2 != o.r2)
        throw FieldMismatch("polynomial sum context mismatch");
    BivariatePolynomial out = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.coeffs[i] = field->add(coeffs[i], o.coeffs[i]);
    return out;
}

// --- TransformContext -----------------------------------------------------

TransformContext::TransformContext(
    Field base, std::uint32_t r1, std::uint32_t r2,
    std::pair<std::uint32_t, std::uint32_t> multiplier)
    : base_(std::move(base)),
      r1_(r1),
      r2_(r2),
      mult_(multiplier),
      sf_(splitting_field(base_, r1, r2)) {
    FieldElement alpha = root_of_unity(sf_.L, r1_);
    FieldElement beta = root_of_unity(sf_.L, r2_);
    FieldElement ax = alpha.pow(mult_.first == 0 ? 1 : mult_.first);
    FieldElement ay = beta.pow(mult_.second == 0 ? 1 : mult_.second);
    xpow_.resize(r1_);
    ypow_.resize(r2_);
    FieldElement acc = sf_.L->one();
    for (std::uint32_t k = 0; k < r1_; ++k) {
        xpow_[k] = acc.code();
        acc = acc * ax;
    }
    acc = sf_.L->one();
    for (std::uint32_t k = 0; k < r2_; ++k) {
        ypow_[k] = acc.code();
        acc = acc * ay;
    }
}

FieldElement TransformContext::evaluate(const BivariatePolynomial& f,
                                        std::uint32_t i, std::uint32_t j) const {
    if (f.field != base_ && f.field != sf_.L)
        throw FieldMismatch("polynomial over a foreign field");
    const FieldData& L = *sf_.L;
    std::uint64_t acc = 0;
    for (std::uint32_t a = 0; a < r1_; ++a) {
        std::uint64_t xa = xpow_[(std::size_t)a * i % r1_];
        for (std::uint32_t b = 0; b < r2_; ++b) {
            std::uint64_t c = f.at(a, b);
            if (!c) continue;
            if (f.field == base_ && !sf_.embed.is_identity())
                c = sf_.embed.map(FieldElement(base_, c)).code();
            acc = L.add(acc, L.mul(L.mul(c, xa),
                                   ypow_[(std::size_t)b * j % r2_]));
        }
    }
    return FieldElement(sf_.L, acc);
}

// --- transforms -----------------------------------------------------------

namespace {

// one axis of the separable evaluation: out[k][j] = sum_a in[a][j] * w[a*k % r]
void axis_transform(std::vector<std::uint64_t>& data, std::uint32_t r_axis,
                    std::uint32_t r_other, bool axis_is_rows,
                    const std::vector<std::uint64_t>& w, const FieldData& L) {
    std::vector<std::uint64_t> out(data.size(), 0);
    for (std::uint32_t k = 0; k < r_axis; ++k)
        for (std::uint32_t a = 0; a < r_axis; ++a) {
            std::uint64_t wk = w[(std::size_t)a * k % r_axis];
            if (!wk) continue;
            for (std::uint32_t j = 0; j < r_other; ++j) {
                std::uint64_t src = axis_is_rows ? data[(std::size_t)a * r_other + j]
                                                 : data[(std::size_t)j * r_axis + a];
                if (!src) continue;
                std::uint64_t& dst = axis_is_rows ? out[(std::size_t)k * r_other + j]
                                                  : out[(std::size_t)j * r_axis + k];
                dst = L.add(dst, L.mul(src, wk));
            }
        }
    data.swap(out);
}

}  // namespace

Spectrum dft(const BivariatePolynomial& f, const TransformContext& ctx) {
    if (f.r1 != ctx.r1() || f.r2 != ctx.r2())
        throw FieldMismatch("moduli mismatch in dft");
    const FieldData& L = *ctx.L();
    std::vector<std::uint64_t> data(f.coeffs.size(), 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        std::uint64_t c = f.coeffs[i];
        if (!c) continue;
        if (f.field == ctx.base() && !ctx.embedding().is_identity())
            c = ctx.embedding().map(FieldElement(ctx.base(), c)).code();
        else if (f.field != ctx.base() && f.field != ctx.L())
            throw FieldMismatch("polynomial over a foreign field");
        data[i] = c;
    }
    axis_transform(data, ctx.r2(), ctx.r1(), false, ctx.ypow(), L);
    axis_transform(data, ctx.r1(), ctx.r2(), true, ctx.xpow(), L);
    return Spectrum{ctx.L(), ctx.r1(), ctx.r2(), ctx.multiplier(),
                    std::move(data)};
}

BivariatePolynomial inverse_dft(const Spectrum& s, const TransformContext& ctx) {
    if (s.r1 != ctx.r1() || s.r2 != ctx.r2() || s.L != ctx.L() ||
        s.multiplier != ctx.multiplier())
        throw FieldMismatch("spectrum does not match context");
    const FieldData& L = *ctx.L();
    const std::uint64_t n_mod_p = ((std::uint64_t)ctx.r1() * ctx.r2()) % L.p;
    if (n_mod_p == 0)
        throw SemisimplicityViolation("r1*r2 not invertible mod p");
    // inverse power tables are the reversed forward tables
    std::vector<std::uint64_t> xinv(ctx.r1()), yinv(ctx.r2());
    for (std::uint32_t k = 0; k < ctx.r1(); ++k)
        xinv[k] = ctx.xpow()[(ctx.r1() - k) % ctx.r1()];
    for (std::uint32_t k = 0; k < ctx.r2(); ++k)
        yinv[k] = ctx.ypow()[(ctx.r2() - k) % ctx.r2()];

    std::vector<std::uint64_t> data = s.values;
    axis_transform(data, ctx.r2(), ctx.r1(), false, yinv, L);
    axis_transform(data, ctx.r1(), ctx.r2(), true, xinv, L);
    const std::uint64_t scale = L.inv(n_mod_p);
    for (std::uint64_t& c : data) c = L.mul(c, scale);
    return BivariatePolynomial{ctx.L(), ctx.r1(), ctx.r2(), std::move(data)};
}

OrbitSet defining_set_of(const BivariatePolynomial& f,
                         const TransformContext& ctx) {
    Spectrum s = dft(f, ctx);
    std::vector<IndexPair> zeros;
    for (std::uint32_t i = 0; i < ctx.r1(); ++i)
        for (std::uint32_t j = 0; j < ctx.r2(); ++j)
            if (s.at(i, j) == 0) zeros.push_back({i, j});
    return OrbitSet::from_members_checked(ctx.r1(), ctx.r2(),
                                          ctx.base()->size, zeros);
}

BivariatePolynomial idempotent_from_defining_set(const OrbitSet& d,
                                                 const TransformContext& ctx) {
    if (d.r1() != ctx.r1() || d.r2() != ctx.r2())
        throw FieldMismatch("orbit set does not match context");
    Spectrum s{ctx.L(), ctx.r1(), ctx.r2(), ctx.multiplier(),
               std::vector<std::uint64_t>((std::size_t)ctx.r1() * ctx.r2(), 0)};
    for (std::uint32_t i = 0; i < ctx.r1(); ++i)
        for (std::uint32_t j = 0; j < ctx.r2(); ++j)
            if (!d.contains(i, j)) s.values[(std::size_t)i * ctx.r2() + j] = 1;
    BivariatePolynomial e_l = inverse_dft(s, ctx);
    // coefficients of an orbit-closed indicator live in the base field
    BivariatePolynomial e = BivariatePolynomial::zero(ctx.base(), ctx.r1(),
                                                      ctx.r2());
    const std::uint64_t q = ctx.base()->size;
    for (std::size_t i = 0; i < e_l.coeffs.size(); ++i) {
        FieldElement c(ctx.L(), e_l.coeffs[i]);
        if (c.pow((std::int64_t)q) != c)
            throw NotOrbitClosed("idempotent coefficient left the base field");
        e.coeffs[i] = ctx.embedding().is_identity()
                          ? c.code()
                          : ctx.embedding().lift_back(c).code();
    }
    return e;
}

// --- serialization --------------------------------------------------------

std::string polynomial_record(const BivariatePolynomial& f) {
    std::ostringstream os;
    os << "field=" << field_record(f.field) << " r=[" << f.r1 << "," << f.r2
       << "] coeffs=[";
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        os << (i ? "," : "") << f.coeffs[i];
    os << "]";
    return os.str();
}

BivariatePolynomial parse_polynomial_record(const std::string& line) {
    auto rpos = line.find(" r=[");
    if (line.rfind("field=", 0) != 0 || rpos == std::string::npos)
        throw ParseError("bad polynomial record: " + line);
    Field f = parse_field_record(line.substr(6, rpos - 6));
    std::uint32_t r1 = 0, r2 = 0;
    if (std::sscanf(line.c_str() + rpos, " r=[%u,%u]", &r1, &r2) != 2)
        throw ParseError("bad moduli in polynomial record");
    auto cpos = line.find("coeffs=[");
    if (cpos == std::string::npos) throw ParseError("missing coeffs");
    BivariatePolynomial p = BivariatePolynomial::zero(f, r1, r2);
    const char* s = line.c_str() + cpos + 8;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        while (*s == ',' || *s == ' ') ++s;
        char* end = nullptr;
        p.coeffs[i] = std::strtoull(s, &end, 10);
        if (end == s) throw ParseError("coefficient count mismatch");
        if (p.coeffs[i] >= f->size) throw ParseError("coefficient out of range");
        s = end;
    }
    while (*s == ' ') ++s;
    if (*s != ']') throw ParseError("coefficient count mismatch");
    return p;
}

}  // namespace abelian
