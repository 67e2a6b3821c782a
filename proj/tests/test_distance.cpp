#include <doctest.h>

#include <cstdint>
#include <vector>

#include "abelian/code.hpp"
#include "abelian/distance.hpp"

using namespace abelian;

TEST_CASE("exhaustive distance of the [7,4] corrector is 3") {
    Field f = make_field(2, 1);
    CodePtr c = bch_univariate(f, 7, 3, 1);
    CHECK(minimum_distance_exhaustive(*c) == 3);
    BivariatePolynomial w = minimum_weight_codeword(*c);
    CHECK(w.weight() == 3);
    CHECK(is_codeword(*c, w));
}

TEST_CASE("maximum-distance-separable codes meet the Singleton bound") {
    Field f = make_field(2, 3);
    for (std::uint32_t delta : {2u, 3u}) {
        CodePtr rs = reed_solomon(f, delta, 0);
        CHECK(minimum_distance_exhaustive(*rs) == delta);
    }
}

TEST_CASE("early exit via stop_at returns the same answer") {
    Field f = make_field(2, 1);
    CodePtr c = bch_univariate(f, 15, 5, 1);
    std::uint64_t d = minimum_distance_exhaustive(*c);
    CHECK(minimum_distance_exhaustive(*c, kDefaultEnumerationCap, d) == d);
}

TEST_CASE("enumeration cap is enforced") {
    Field f = make_field(2, 2);
    CodePtr c = bch_univariate(f, 63, 3, 1);  // dim 57: 4^57 messages
    CHECK_THROWS_AS((void)minimum_distance_exhaustive(*c, 1 << 10),
                    BudgetExceeded);
}

TEST_CASE("non-codewords are recognized") {
    Field f = make_field(2, 1);
    CodePtr c = bch_univariate(f, 7, 3, 1);
    BivariatePolynomial x = BivariatePolynomial::zero(f, 1, 7);
    x.at(0, 0) = 1;  // weight 1 < d = 3, cannot be a codeword
    CHECK(!is_codeword(*c, x));
    CHECK(is_codeword(*c, BivariatePolynomial::zero(f, 1, 7)));
}

TEST_CASE("lifted witnesses keep weight and membership") {
    Field f = make_field(2, 1);
    CodePtr base = bch_univariate(f, 7, 3, 1);
    CodePtr big = multiply_dimension(base, 3);
    BivariatePolynomial w = minimum_weight_codeword(*base);
    BivariatePolynomial lifted = embedded_witness(*base, *big, w);
    CHECK(lifted.weight() == w.weight());
    CHECK(is_codeword(*big, lifted));
    // a non-codeword is rejected before lifting
    BivariatePolynomial junk = BivariatePolynomial::zero(f, 1, 7);
    junk.at(0, 0) = 1;
    CHECK_THROWS_AS((void)embedded_witness(*base, *big, junk), NotACodeword);
}

TEST_CASE("exhaustive certificates are exact") {
    Field f = make_field(2, 1);
    CodePtr c = bch_univariate(f, 7, 3, 1);
    DistanceCertificate cert = certify_distance(*c, CertifyStrategy::kExhaustive);
    CHECK(cert.exact);
    CHECK(cert.value == 3);
    CHECK(cert.lower_bound == 3);
    CHECK(cert.upper_bound == 3);
}

TEST_CASE("witness certificates close exactly when sd* is attained") {
    Field f = make_field(2, 1);
    CodePtr base = bch_univariate(f, 7, 3, 1);
    CodePtr big = multiply_dimension(base, 3);
    DistanceCertificate cert =
        certify_distance(*big, CertifyStrategy::kWitnessSdStar);
    CHECK(cert.exact);
    CHECK(cert.value == 3);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->weight() == 3);
    CHECK(is_codeword(*big, *cert.witness));

    // combined strategy must agree with the exhaustive answer
    DistanceCertificate both = certify_distance(*big, CertifyStrategy::kBoth);
    CHECK(both.exact);
    CHECK(both.value == minimum_distance_exhaustive(*big));
}

TEST_CASE("distance queries on the zero code are rejected") {
    Field f = make_field(2, 1);
    CodePtr z = code_from_defining_set(f, OrbitSet::full(1, 7, 2));
    CHECK_THROWS_AS((void)minimum_distance_exhaustive(*z), ZeroCode);
    CHECK_THROWS_AS((void)certify_distance(*z, CertifyStrategy::kBoth), ZeroCode);
}

TEST_CASE("certificate rendering carries the verdict") {
    Field f = make_field(2, 1);
    CodePtr c = bch_univariate(f, 7, 3, 1);
    DistanceCertificate cert = certify_distance(*c, CertifyStrategy::kExhaustive);
    std::string text = cert.render();
    CHECK(text.find("d = 3") != std::string::npos);
}
