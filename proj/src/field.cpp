#include "abelian/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace abelian {

namespace {

// --- polynomial helpers over GF(p), digit vectors ascending ---------------

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g (g monic, nonempty), in place on a copy
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            std::uint64_t v = f[shift + i] + (std::uint64_t)p * p -
                              lead * g[i] % p;
            f[shift + i] = (std::uint32_t)(v % p);
        }
        trim(f);
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (std::uint32_t)((c[i + j] + (std::uint64_t)a[i] * b[j]) % p);
    }
    return c;
}

Poly code_to_poly(std::uint64_t code, std::uint32_t p) {
    Poly f;
    while (code) {
        f.push_back((std::uint32_t)(code % p));
        code /= p;
    }
    return f;
}

std::uint64_t poly_to_code(const Poly& f, std::uint32_t p) {
    std::uint64_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return code;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    if (f[0] == 0) return false;  // divisible by X
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = code_to_poly(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// --- FieldData arithmetic -------------------------------------------------

FieldElement FieldData::zero() const { return element(0); }
FieldElement FieldData::one() const { return element(1); }

FieldElement FieldData::element(std::uint64_t code) const {
    // The registry hands out shared_ptrs; recover ours through the cache.
    extern Field field_instance(const FieldData* data);
    return FieldElement(field_instance(this), code);
}

FieldElement FieldData::from_integer(std::uint64_t c) const {
    return element(c % p);
}

std::uint64_t FieldData::add(std::uint64_t a, std::uint64_t b) const {
    if (p == 2) return a ^ b;
    if (m == 1) return (a + b) % p;
    std::uint64_t r = 0, mult = 1;
    while (a || b) {
        r += mult * ((a % p + b % p) % p);
        a /= p;
        b /= p;
        mult *= p;
    }
    return r;
}

std::uint64_t FieldData::neg(std::uint64_t a) const {
    if (p == 2) return a;
    if (m == 1) return (p - a % p) % p;
    std::uint64_t r = 0, mult = 1;
    while (a) {
        r += mult * ((p - a % p) % p);
        a /= p;
        mult *= p;
    }
    return r;
}

std::uint64_t FieldData::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a, neg(b));
}

std::uint64_t FieldData::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_table.empty())
        return exp_table[(log_table[a] + (std::uint64_t)log_table[b]) % (size - 1)];
    if (m == 1) return a * b % p;
    if (p == 2) {
        // carryless multiply, then reduce by the modulus mask
        std::uint64_t prod = 0;
        for (std::uint64_t x = a, y = b; y; y >>= 1, x <<= 1)
            if (y & 1) prod ^= x;
        for (int bit = 2 * (int)m - 2; bit >= (int)m; --bit)
            if (prod >> bit & 1) prod ^= modulus_mask << (bit - m);
        return prod;
    }
    Poly fa = code_to_poly(a, p), fb = code_to_poly(b, p);
    Poly mod(modulus.begin(), modulus.end());
    return poly_to_code(poly_mod(poly_mul(fa, fb, p), mod, p), p);
}

std::uint64_t FieldData::pow(std::uint64_t a, std::int64_t k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw DivisionByZero("0 has no inverse");
        return 0;
    }
    const std::uint64_t n = size - 1;
    std::uint64_t e = (std::uint64_t)(((k % (std::int64_t)n) + (std::int64_t)n) % (std::int64_t)n);
    std::uint64_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldData::inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!exp_table.empty())
        return exp_table[(size - 1 - log_table[a]) % (size - 1)];
    return pow(a, (std::int64_t)(size - 2));
}

// --- registry -------------------------------------------------------------

namespace {
std::mutex registry_mutex;
std::map<std::pair<std::uint32_t, std::uint32_t>, Field> registry;
std::map<const FieldData*, Field> by_pointer;
}  // namespace

Field field_instance(const FieldData* data) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    return by_pointer.at(data);
}

Field make_field(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("p = " + std::to_string(p));
    if (m < 1) throw SizeCapExceeded("extension degree must be positive");
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto it = registry.find({p, m});
        if (it != registry.end()) return it->second;
    }
    // size = p^m with overflow / cap check
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (size > size_cap / p)
            throw SizeCapExceeded("p^m exceeds cap " + std::to_string(size_cap));
        size *= p;
    }
    if (size > size_cap)
        throw SizeCapExceeded("p^m exceeds cap " + std::to_string(size_cap));

    auto data = std::make_shared<FieldData>();
    data->p = p;
    data->m = m;
    data->size = size;

    // least monic irreducible of degree m under the integer-code order
    if (m == 1) {
        data->modulus = {0, 1};  // X
    } else {
        std::uint64_t low_count = ipow(p, m);
        bool found = false;
        for (std::uint64_t low = 1; low < low_count; ++low) {
            Poly f = code_to_poly(low, p);
            f.resize(m + 1, 0);
            f[m] = 1;
            if (is_irreducible(f, p)) {
                data->modulus.assign(f.begin(), f.end());
                found = true;
                break;
            }
        }
        if (!found)
            throw SizeCapExceeded("no irreducible found (unreachable)");
    }
    if (p == 2) {
        data->modulus_mask = 0;
        for (std::size_t i = 0; i < data->modulus.size(); ++i)
            if (data->modulus[i]) data->modulus_mask |= std::uint64_t(1) << i;
    }
    data->order_prime_factors = prime_factors(size - 1);

    // least-coded element of full multiplicative order
    std::uint64_t gen = 1;
    if (size > 2) {
        for (std::uint64_t c = 2; c < size; ++c) {
            bool full = true;
            for (std::uint64_t f : data->order_prime_factors) {
                if (data->pow(c, (std::int64_t)((size - 1) / f)) == 1) {
                    full = false;
                    break;
                }
            }
            if (full) {
                gen = c;
                break;
            }
        }
    }
    data->generator_code = gen;

    if (size <= (1u << 16)) {
        // Fill local tables first: data->mul must keep using the direct
        // polynomial path until the tables are complete.
        std::vector<std::uint64_t> exp(size - 1);
        std::vector<std::uint32_t> log(size, 0);
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i + 1 < size; ++i) {
            exp[i] = x;
            log[x] = (std::uint32_t)i;
            x = data->mul(x, gen);
        }
        data->exp_table = std::move(exp);
        data->log_table = std::move(log);
    }

    Field f = data;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto [it, inserted] = registry.emplace(std::make_pair(p, m), f);
    if (inserted) by_pointer.emplace(f.get(), f);
    return it->second;
}

// --- FieldElement ---------------------------------------------------------

FieldElement::FieldElement(Field field, std::uint64_t code)
    : field_(std::move(field)), code_(code) {
    if (code_ >= field_->size)
        throw FieldMismatch("element code out of range");
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
        throw FieldMismatch("operands from different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, field_->add(code_, o.code_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, field_->sub(code_, o.code_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, field_->mul(code_, o.code_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, field_->mul(code_, field_->inv(o.code_)));
}
FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_->neg(code_));
}
FieldElement FieldElement::inverse() const {
    return FieldElement(field_, field_->inv(code_));
}
FieldElement FieldElement::pow(std::int64_t k) const {
    return FieldElement(field_, field_->pow(code_, k));
}
bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && code_ == o.code_;
}

FieldElement canonical_generator(const Field& f) {
    return FieldElement(f, f->generator_code);
}

std::uint64_t element_order(const FieldElement& x) {
    if (x.is_zero()) throw DivisionByZero("order of zero");
    std::uint64_t order = x.field()->size - 1;
    for (std::uint64_t f : x.field()->order_prime_factors)
        while (order % f == 0 && x.pow((std::int64_t)(order / f)).code() == 1)
            order /= f;
    return order;
}

// --- Embedding ------------------------------------------------------------

Embedding::Embedding(Field from, Field to)
    : from_(std::move(from)), to_(std::move(to)), root_image_(to_, 0) {
    if (from_ == to_) return;
    if (from_->p != to_->p || to_->m % from_->m != 0)
        throw FieldMismatch("no subfield of the requested size");
    // Subfield elements are the roots of x^(q) = x; nonzero ones are the
    // powers g^(k*step). Pick the least-coded root of the source modulus.
    const std::uint64_t q = from_->size;
    const std::uint64_t step = (to_->size - 1) / (q - 1);
    FieldElement g = canonical_generator(to_);
    std::vector<std::uint64_t> subfield;
    subfield.reserve(q);
    subfield.push_back(0);
    FieldElement h = g.pow((std::int64_t)step);
    FieldElement x = to_->one();
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
        subfield.push_back(x.code());
        x = x * h;
    }
    std::sort(subfield.begin(), subfield.end());

    bool found = false;
    for (std::uint64_t cand : subfield) {
        // evaluate the source modulus at cand (coefficients are prime-field)
        FieldElement c(to_, cand);
        FieldElement acc = to_->zero();
        for (std::size_t i = from_->modulus.size(); i-- > 0;)
            acc = acc * c + to_->from_integer(from_->modulus[i]);
        if (acc.is_zero()) {
            root_image_ = c;
            found = true;
            break;
        }
    }
    if (!found) throw FieldMismatch("modulus has no root in target (unreachable)");

    if (q > (1u << 16))
        throw SizeCapExceeded("embedding table for base field larger than 2^16");
    for (std::uint64_t code = 0; code < q; ++code) {
        FieldElement acc = to_->zero();
        std::uint64_t c = code;
        std::vector<std::uint32_t> digits;
        while (c) {
            digits.push_back((std::uint32_t)(c % from_->p));
            c /= from_->p;
        }
        for (std::size_t i = digits.size(); i-- > 0;)
            acc = acc * root_image_ + to_->from_integer(digits[i]);
        forward_.emplace(code, acc.code());
    }
}

FieldElement Embedding::map(const FieldElement& x) const {
    if (x.field() != from_) throw FieldMismatch("embedding source mismatch");
    if (is_identity()) return x;
    return FieldElement(to_, forward_.at(x.code()));
}

FieldElement Embedding::lift_back(const FieldElement& y) const {
    if (y.field() != to_) throw FieldMismatch("embedding target mismatch");
    if (is_identity()) return y;
    for (const auto& [src, dst] : forward_)
        if (dst == y.code()) return FieldElement(from_, src);
    throw FieldMismatch("element not in the embedded subfield");
}

// --- splitting field and roots of unity -----------------------------------

namespace {
std::uint64_t order_mod(std::uint64_t q, std::uint32_t r) {
    if (r == 1) return 1;
    if (std::gcd(q % r, (std::uint64_t)r) != 1)
        throw SemisimplicityViolation("gcd(q, r) != 1");
    std::uint64_t x = q % r, t = 1;
    while (x != 1) {
        x = x * q % r;
        ++t;
    }
    return t;
}
}  // namespace

SplittingField splitting_field(const Field& base, std::uint32_t r1,
                               std::uint32_t r2, std::uint64_t size_cap) {
    std::uint64_t t1 = order_mod(base->size, r1);
    std::uint64_t t2 = order_mod(base->size, r2);
    std::uint64_t t = std::lcm(t1, t2);
    Field L = make_field(base->p, (std::uint32_t)(base->m * t), size_cap);
    return SplittingField{L, Embedding(base, L), (std::uint32_t)t};
}

FieldElement root_of_unity(const Field& L, std::uint32_t r) {
    if (r == 0 || (L->size - 1) % r != 0)
        throw OrderUnavailable("r does not divide |L|-1");
    return canonical_generator(L).pow((std::int64_t)((L->size - 1) / r));
}

// --- serialization --------------------------------------------------------

std::string field_record(const Field& f) {
    std::ostringstream os;
    os << "p=" << f->p << " m=" << f->m << " modulus=[";
    for (std::size_t i = 0; i < f->modulus.size(); ++i)
        os << (i ? "," : "") << f->modulus[i];
    os << "]";
    return os.str();
}

Field parse_field_record(const std::string& line) {
    std::uint32_t p = 0, m = 0;
    if (std::sscanf(line.c_str(), "p=%u m=%u", &p, &m) != 2)
        throw ParseError("bad field record: " + line);
    Field f = make_field(p, m);
    // if a modulus is present it must match the canonical one
    auto pos = line.find("modulus=[");
    if (pos != std::string::npos) {
        std::string rest = line.substr(pos + 9);
        std::vector<std::uint32_t> coeffs;
        std::uint32_t v = 0;
        bool in_num = false;
        for (char c : rest) {
            if (c >= '0' && c <= '9') {
                v = v * 10 + (c - '0');
                in_num = true;
            } else {
                if (in_num) coeffs.push_back(v);
                v = 0;
                in_num = false;
                if (c == ']') break;
            }
        }
        if (coeffs != f->modulus)
            throw ParseError("non-canonical modulus in field record");
    }
    return f;
}

}  // namespace abelian
