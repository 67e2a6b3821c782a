#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "abelian/field.hpp"

using namespace abelian;

namespace {

// Independent oracle: polynomial division over GF(2) on bit-packed
// coefficients; used to re-derive the canonical modulus from scratch.
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
    int db = 63 - __builtin_clzll(b);
    while (a) {
        int da = 63 - __builtin_clzll(a);
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

bool gf2_irreducible(std::uint64_t f, int deg) {
    for (int d = 1; 2 * d <= deg; ++d)
        for (std::uint64_t g = (1ull << d); g < (2ull << d); ++g)
            if (gf2_mod(f, g) == 0) return false;
    return true;
}

std::uint64_t least_irreducible_gf2(int deg) {
    for (std::uint64_t f = (1ull << deg); f < (2ull << deg); ++f)
        if (gf2_irreducible(f, deg)) return f;
    return 0;
}

std::uint64_t modulus_code(const Field& f) {
    std::uint64_t code = 0, w = 1;
    for (std::uint32_t c : f->modulus) {
        code += c * w;
        w *= f->p;
    }
    return code;
}

}  // namespace

TEST_CASE("binary moduli are the least irreducibles in code order") {
    CHECK(modulus_code(make_field(2, 4)) == least_irreducible_gf2(4));
    CHECK(modulus_code(make_field(2, 4)) == 19);   // x^4 + x + 1
    CHECK(modulus_code(make_field(2, 8)) == least_irreducible_gf2(8));
    CHECK(modulus_code(make_field(2, 8)) == 283);  // x^8 + x^4 + x^3 + x + 1
    CHECK(modulus_code(make_field(2, 12)) == least_irreducible_gf2(12));
}

TEST_CASE("field instances are cached") {
    CHECK(make_field(2, 8).get() == make_field(2, 8).get());
    CHECK(make_field(3, 2).get() == make_field(3, 2).get());
}

TEST_CASE("GF(256) landmark values") {
    Field f = make_field(2, 8);
    CHECK(f->generator_code == 3);
    CHECK(element_order(f->element(2)) == 51);
    CHECK(element_order(canonical_generator(f)) == 255);
}

TEST_CASE("every nonzero element has a working inverse") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
        Field f = make_field(p, m);
        for (std::uint64_t c = 1; c < f->size; ++c) {
            FieldElement a = f->element(c);
            CHECK(a * a.inverse() == f->one());
            CHECK(a / a == f->one());
        }
    }
    CHECK_THROWS_AS((void)make_field(2, 4)->element(0).inverse(),
                    DivisionByZero);
}

TEST_CASE("ring axioms and Frobenius hold on random samples") {
    std::mt19937_64 rng(42);
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 8}, {3, 3}, {2, 20}, {5, 3}}) {
        Field f = make_field(p, m);
        std::uniform_int_distribution<std::uint64_t> dist(0, f->size - 1);
        for (int i = 0; i < 200; ++i) {
            FieldElement a = f->element(dist(rng));
            FieldElement b = f->element(dist(rng));
            FieldElement c = f->element(dist(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));  // Frobenius
            CHECK(a - b == a + (-b));
            if (!a.is_zero()) CHECK(a.pow((std::int64_t)(f->size - 1)) == f->one());
        }
    }
}

TEST_CASE("element orders divide the group order") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 6}, {3, 2}}) {
        Field f = make_field(p, m);
        for (std::uint64_t c = 1; c < f->size; ++c) {
            std::uint64_t o = element_order(f->element(c));
            CHECK((f->size - 1) % o == 0);
            CHECK(f->element(c).pow((std::int64_t)o) == f->one());
            if (o > 1) CHECK(f->element(c).pow((std::int64_t)(o - 1)) != f->one());
        }
    }
}

TEST_CASE("splitting field degrees come from multiplicative orders") {
    // ord_3(2)=2, ord_7(2)=3 -> lcm 6
    SplittingField s1 = splitting_field(make_field(2, 1), 3, 7);
    CHECK(s1.degree == 6);
    CHECK(s1.L->m == 6);
    // ord_7(4)=3, ord_9(4)=3 -> lcm 3, GF(4^3) = GF(2^6)
    SplittingField s2 = splitting_field(make_field(2, 2), 7, 9);
    CHECK(s2.degree == 3);
    CHECK(s2.L->m == 6);
    // 256 = 1 mod 5 and 256 = 1 mod 255: both roots already present
    SplittingField s3 = splitting_field(make_field(2, 8), 5, 255);
    CHECK(s3.degree == 1);
    CHECK(s3.L.get() == make_field(2, 8).get());
    // gcd(q, r1 r2) != 1 is rejected
    CHECK_THROWS_AS(splitting_field(make_field(2, 1), 4, 7),
                    SemisimplicityViolation);
}

TEST_CASE("roots of unity have exact order") {
    Field L = make_field(2, 6);
    for (std::uint32_t r : {3u, 7u, 9u, 21u, 63u}) {
        FieldElement z = root_of_unity(L, r);
        CHECK(element_order(z) == r);
    }
    CHECK(root_of_unity(L, 1) == L->one());
    CHECK_THROWS_AS((void)root_of_unity(L, 5), OrderUnavailable);
}

TEST_CASE("embedding is a field homomorphism with a working inverse") {
    Embedding e(make_field(2, 2), make_field(2, 6));
    Field from = e.from();
    std::vector<FieldElement> elems;
    for (std::uint64_t c = 0; c < from->size; ++c) elems.push_back(from->element(c));
    for (const FieldElement& a : elems)
        for (const FieldElement& b : elems) {
            CHECK(e.map(a + b) == e.map(a) + e.map(b));
            CHECK(e.map(a * b) == e.map(a) * e.map(b));
        }
    CHECK(e.map(from->one()) == e.to()->one());
    for (const FieldElement& a : elems) CHECK(e.lift_back(e.map(a)) == a);
    // something outside the image is rejected
    FieldElement g = canonical_generator(e.to());
    CHECK_THROWS_AS((void)e.lift_back(g), FieldMismatch);
}

TEST_CASE("embedding image of x is a root of the source modulus") {
    Embedding e(make_field(2, 4), make_field(2, 8));
    Field to = e.to();
    FieldElement x = e.map(e.from()->element(2));
    FieldElement acc = to->zero();
    FieldElement xp = to->one();
    for (std::uint32_t c : e.from()->modulus) {
        if (c) acc = acc + xp;
        xp = xp * x;
    }
    CHECK(acc.is_zero());
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS((void)make_field(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS((void)make_field(6, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS((void)make_field(2, 40), SizeCapExceeded);
    // the cap applies to fields not already in the cache
    CHECK_THROWS_AS((void)make_field(2, 9, 100), SizeCapExceeded);
}

TEST_CASE("field records round-trip") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {2, 8}, {3, 2}, {5, 1}}) {
        Field f = make_field(p, m);
        Field g = parse_field_record(field_record(f));
        CHECK(g.get() == f.get());
    }
    CHECK_THROWS_AS((void)parse_field_record("nonsense"), ParseError);
}

TEST_CASE("primality helpers agree with a sieve") {
    std::vector<bool> sieve(2000, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i < 2000; ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j < 2000; j += i) sieve[j] = false;
    for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == sieve[n]);

    for (std::uint64_t n : {2ull, 12ull, 255ull, 1048575ull, 600ull}) {
        std::uint64_t prod = 1;
        std::uint64_t rest = n;
        for (std::uint64_t f : prime_factors(n)) {
            CHECK(is_prime(f));
            CHECK(n % f == 0);
            prod *= f;
            while (rest % f == 0) rest /= f;
        }
        CHECK(rest == 1);  // factors cover n
        (void)prod;
    }
}
