#include "abelian/distance.hpp"

#include <algorithm>
#include <sstream>

namespace abelian {

namespace {

std::uint64_t checked_message_count(const AbelianCode& c, std::uint64_t cap) {
    const std::uint64_t q = c.field()->size;
    const std::size_t k = c.dimension();
    if (k == 0) throw ZeroCode("minimum distance of the zero code");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > cap / q)
            throw BudgetExceeded("q^dim = " + std::to_string(q) + "^" +
                                 std::to_string(k) + " exceeds cap " +
                                 std::to_string(cap));
        total *= q;
    }
    if (total > cap)
        throw BudgetExceeded("q^dim exceeds cap " + std::to_string(cap));
    return total;
}

struct EnumerationResult {
    std::uint64_t min_weight;
    std::vector<std::uint64_t> best_message;
};

// Odometer over the message space; each digit change updates the running
// codeword by (new - old) * row.
EnumerationResult enumerate_min_weight(const AbelianCode& c, std::uint64_t cap,
                                       std::optional<std::uint64_t> stop_at) {
    const std::uint64_t total = checked_message_count(c, cap);
    const FieldData& f = *c.field();
    const std::uint64_t q = f.size;
    const auto& gen = c.generator_matrix();
    const std::size_t k = gen.size(), n = gen[0].size();

    std::vector<std::uint64_t> delta(q);  // delta[t] = (t+1) - t, wrap at q-1
    for (std::uint64_t t = 0; t + 1 < q; ++t) delta[t] = f.sub(t + 1, t);
    delta[q - 1] = f.sub(0, q - 1);

    std::vector<std::uint64_t> counters(k, 0), current(n, 0);
    EnumerationResult res{n + 1, {}};
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        std::size_t i = 0;
        while (counters[i] == q - 1) {
            const std::uint64_t dlt = delta[q - 1];
            for (std::size_t j = 0; j < n; ++j)
                current[j] = f.add(current[j], f.mul(dlt, gen[i][j]));
            counters[i] = 0;
            ++i;
        }
        const std::uint64_t dlt = delta[counters[i]];
        for (std::size_t j = 0; j < n; ++j)
            current[j] = f.add(current[j], f.mul(dlt, gen[i][j]));
        ++counters[i];

        std::uint64_t w = 0;
        for (std::size_t j = 0; j < n && w < res.min_weight; ++j)
            w += (current[j] != 0);
        if (w < res.min_weight) {
            res.min_weight = w;
            res.best_message = counters;
            if (stop_at && res.min_weight <= *stop_at) return res;
        }
    }
    return res;
}

}  // namespace

std::uint64_t minimum_distance_exhaustive(const AbelianCode& c,
                                          std::uint64_t cap,
                                          std::optional<std::uint64_t> stop_at) {
    return enumerate_min_weight(c, cap, stop_at).min_weight;
}

BivariatePolynomial minimum_weight_codeword(const AbelianCode& c,
                                            std::uint64_t cap) {
    EnumerationResult res = enumerate_min_weight(c, cap, std::nullopt);
    return encode(c, res.best_message);
}

bool is_codeword(const AbelianCode& c, const BivariatePolynomial& f) {
    if (f.r1 != c.r1() || f.r2 != c.r2()) return false;
    Spectrum s = dft(f, c.context());
    for (IndexPair ij : c.defining_set().members())
        if (s.at(ij.a, ij.b) != 0) return false;
    return true;
}

BivariatePolynomial embedded_witness(const AbelianCode& base,
                                     const AbelianCode& multiplied,
                                     const BivariatePolynomial& w) {
    if (!base.is_cyclic() || w.r1 != 1 || w.r2 != base.r2())
        throw NotACodeword("witness is not univariate of the base length");
    if (!multiplied.base() ||
        multiplied.base()->defining_set() != base.defining_set() ||
        multiplied.base()->field() != base.field())
        throw NotACodeword("codes are not related by multiply_dimension");
    if (!is_codeword(base, w))
        throw NotACodeword("witness does not lie in the base code");

    BivariatePolynomial lift = BivariatePolynomial::zero(
        w.field, multiplied.r1(), multiplied.r2());
    for (std::uint32_t b = 0; b < w.r2; ++b) lift.at(0, b) = w.at(0, b);
    if (!is_codeword(multiplied, lift))
        throw NotACodeword("lift failed membership on D(C_n)");
    return lift;
}

namespace {

// Generator-polynomial codeword of a cyclic code whose splitting field is
// the base field itself (Reed-Solomon case): g(Y) = prod_{j in D} (Y - beta^j).
std::optional<BivariatePolynomial> generator_polynomial_word(
    const AbelianCode& c) {
    if (!c.is_cyclic()) return std::nullopt;
    const TransformContext& ctx = c.context();
    if (ctx.L() != c.field()) return std::nullopt;
    const FieldData& f = *c.field();
    const std::uint32_t r = c.r2();
    std::vector<std::uint64_t> g{1};
    for (IndexPair ij : c.defining_set().members()) {
        const std::uint64_t root = ctx.ypow()[ij.b];
        std::vector<std::uint64_t> next(g.size() + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], g[i]);
            next[i] = f.sub(next[i], f.mul(root, g[i]));
        }
        g = std::move(next);
    }
    if (g.size() > r) return std::nullopt;  // zero code
    BivariatePolynomial word = BivariatePolynomial::zero(c.field(), 1, r);
    for (std::size_t i = 0; i < g.size(); ++i) word.at(0, (std::uint32_t)i) = g[i];
    return word;
}

std::optional<BivariatePolynomial> find_witness(const AbelianCode& c,
                                                std::uint64_t cap) {
    const std::uint64_t q = c.field()->size;
    bool enumerable = true;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.dimension() && enumerable; ++i) {
        if (total > cap / q) enumerable = false;
        total *= q;
    }
    if (enumerable && total <= cap) return minimum_weight_codeword(c, cap);
    return generator_polynomial_word(c);
}

}  // namespace

DistanceCertificate certify_distance(const AbelianCode& c,
                                     CertifyStrategy strategy,
                                     std::uint64_t enumeration_cap,
                                     std::uint32_t orbit_cap) {
    if (c.is_zero_code()) throw ZeroCode("distance of the zero code");
    DistanceCertificate cert;
    {
        std::ostringstream id;
        id << "[" << c.length() << "," << c.dimension() << "] over GF("
           << c.field()->size << ") r=(" << c.r1() << "," << c.r2() << ")";
        cert.code_id = id.str();
    }

    if (strategy == CertifyStrategy::kExhaustive) {
        const std::uint64_t d = minimum_distance_exhaustive(c, enumeration_cap);
        cert.lower_bound = cert.upper_bound = cert.value = d;
        cert.lower_source = cert.upper_source = "exhaustive";
        cert.witness = minimum_weight_codeword(c, enumeration_cap);
        cert.exact = true;
        return cert;
    }

    cert.lower_bound = c.sd_star(orbit_cap).value;
    cert.lower_source = "sd*";

    std::optional<BivariatePolynomial> witness;
    if (c.base() && c.multiplied_by() >= 1) {
        if (auto bw = find_witness(*c.base(), enumeration_cap)) {
            if (c.multiplied_by() == 1)
                witness = bw;
            else
                witness = embedded_witness(*c.base(), c, *bw);
        }
    } else {
        witness = find_witness(c, enumeration_cap);
    }

    if (witness) {
        cert.upper_bound = witness->weight();
        cert.upper_source = "witness";
        cert.witness = std::move(witness);
    } else {
        cert.upper_bound = c.length() - c.dimension() + 1;
        cert.upper_source = "singleton";
    }
    cert.exact = cert.lower_bound == cert.upper_bound;
    if (cert.exact) cert.value = cert.lower_bound;

    if (strategy == CertifyStrategy::kBoth) {
        const std::uint64_t d = minimum_distance_exhaustive(c, enumeration_cap);
        if (d < cert.lower_bound || d > cert.upper_bound)
            throw NotACodeword("certificate bounds contradict exhaustive value");
        cert.lower_bound = cert.upper_bound = cert.value = d;
        cert.lower_source = "sd*+exhaustive";
        cert.upper_source = cert.witness ? "witness+exhaustive" : "exhaustive";
        cert.exact = true;
    }
    return cert;
}

std::string DistanceCertificate::render() const {
    std::ostringstream os;
    os << "code: " << code_id << "\n";
    os << "lower bound: " << lower_bound << " (" << lower_source << ")\n";
    os << "upper bound: " << upper_bound << " (" << upper_source << ")\n";
    if (witness) {
        os << "witness weight: " << witness->weight() << ", coefficients: [";
        for (std::size_t i = 0; i < witness->coeffs.size(); ++i)
            os << (i ? "," : "") << witness->coeffs[i];
        os << "]\n";
    }
    if (exact)
        os << "verdict: d = " << value << "\n";
    else
        os << "verdict: inconclusive, d in [" << lower_bound << ", "
           << upper_bound << "]\n";
    return os.str();
}

}  // namespace abelian
