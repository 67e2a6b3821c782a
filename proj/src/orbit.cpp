#include "abelian/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace abelian {

namespace {
void check_coprime(std::uint64_t q, std::uint32_t r1, std::uint32_t r2) {
    if (std::gcd(q, (std::uint64_t)r1 * r2) != 1)
        throw NotCoprime("gcd(q, r1*r2) != 1");
}
}  // namespace

std::uint64_t multiplicative_order(std::uint64_t q, std::uint32_t r) {
    if (r == 1) return 1;
    if (std::gcd(q % r, (std::uint64_t)r) != 1) throw NotCoprime("gcd(q, r) != 1");
    std::uint64_t x = q % r, t = 1;
    while (x != 1) {
        x = x * (q % r) % r;
        ++t;
    }
    return t;
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t a, std::uint32_t r,
                                            std::uint64_t q) {
    if (r == 1) return {0};
    if (std::gcd(q % r, (std::uint64_t)r) != 1) throw NotCoprime("gcd(q, r) != 1");
    std::vector<std::uint32_t> coset;
    std::uint64_t x = a % r;
    do {
        coset.push_back((std::uint32_t)x);
        x = x * (q % r) % r;
    } while (x != a % r);
    std::sort(coset.begin(), coset.end());
    return coset;
}

// --- OrbitSet -------------------------------------------------------------

OrbitSet::OrbitSet(std::uint32_t r1, std::uint32_t r2, std::uint64_t q)
    : r1_(r1), r2_(r2), q_(q), member_((std::size_t)r1 * r2, 0) {
    check_coprime(q, r1, r2);
}

OrbitSet OrbitSet::empty(std::uint32_t r1, std::uint32_t r2, std::uint64_t q) {
    return OrbitSet(r1, r2, q);
}

OrbitSet OrbitSet::full(std::uint32_t r1, std::uint32_t r2, std::uint64_t q) {
    OrbitSet s(r1, r2, q);
    std::fill(s.member_.begin(), s.member_.end(), 1);
    s.size_ = s.points();
    s.rebuild_reps();
    return s;
}

void OrbitSet::insert_orbit(IndexPair i) {
    std::uint32_t a = i.a % r1_, b = i.b % r2_;
    const std::uint32_t a0 = a, b0 = b;
    do {
        std::uint8_t& cell = member_[(std::size_t)a * r2_ + b];
        if (!cell) {
            cell = 1;
            ++size_;
        }
        a = (std::uint32_t)((std::uint64_t)a * (q_ % (r1_ == 1 ? 1 : r1_)) % r1_);
        b = (std::uint32_t)((std::uint64_t)b * (q_ % r2_) % r2_);
    } while (a != a0 || b != b0);
}

void OrbitSet::rebuild_reps() {
    reps_.clear();
    std::vector<std::uint8_t> seen(member_.size(), 0);
    for (std::uint32_t a = 0; a < r1_; ++a)
        for (std::uint32_t b = 0; b < r2_; ++b) {
            std::size_t idx = (std::size_t)a * r2_ + b;
            if (!member_[idx] || seen[idx]) continue;
            reps_.push_back({a, b});
            // mark the orbit; (a,b) is its lexicographic minimum because we
            // scan in lexicographic order
            std::uint32_t x = a, y = b;
            do {
                seen[(std::size_t)x * r2_ + y] = 1;
                x = (std::uint32_t)((std::uint64_t)x * (q_ % (r1_ == 1 ? 1 : r1_)) % r1_);
                y = (std::uint32_t)((std::uint64_t)y * (q_ % r2_) % r2_);
            } while (x != a || y != b);
        }
}

OrbitSet OrbitSet::closure_of(std::uint32_t r1, std::uint32_t r2,
                              std::uint64_t q, std::span<const IndexPair> pts) {
    OrbitSet s(r1, r2, q);
    for (IndexPair i : pts) s.insert_orbit(i);
    s.rebuild_reps();
    return s;
}

OrbitSet OrbitSet::from_members_checked(std::uint32_t r1, std::uint32_t r2,
                                        std::uint64_t q,
                                        std::span<const IndexPair> members) {
    OrbitSet s = closure_of(r1, r2, q, members);
    if (s.size() != members.size())
        throw NotOrbitClosed("member set is not a union of q-orbits");
    // duplicate inputs would also trip the size check; verify membership
    for (IndexPair i : members)
        if (!s.contains(i.a % r1, i.b % r2))
            throw NotOrbitClosed("member set is not a union of q-orbits");
    return s;
}

std::vector<IndexPair> OrbitSet::members() const {
    std::vector<IndexPair> out;
    out.reserve(size_);
    for (std::uint32_t a = 0; a < r1_; ++a)
        for (std::uint32_t b = 0; b < r2_; ++b)
            if (member_[(std::size_t)a * r2_ + b]) out.push_back({a, b});
    return out;
}

OrbitSet OrbitSet::united_with(const OrbitSet& other) const {
    if (r1_ != other.r1_ || r2_ != other.r2_ || q_ != other.q_)
        throw NotOrbitClosed("union of orbit sets over different contexts");
    OrbitSet s(r1_, r2_, q_);
    for (std::size_t i = 0; i < member_.size(); ++i) {
        s.member_[i] = member_[i] | other.member_[i];
        s.size_ += s.member_[i];
    }
    s.rebuild_reps();
    return s;
}

std::vector<std::vector<IndexPair>> OrbitSet::free_orbits() const {
    std::vector<std::vector<IndexPair>> out;
    std::vector<std::uint8_t> seen(member_.size(), 0);
    for (std::uint32_t a = 0; a < r1_; ++a)
        for (std::uint32_t b = 0; b < r2_; ++b) {
            std::size_t idx = (std::size_t)a * r2_ + b;
            if (member_[idx] || seen[idx]) continue;
            std::vector<IndexPair> orbit;
            std::uint32_t x = a, y = b;
            do {
                seen[(std::size_t)x * r2_ + y] = 1;
                orbit.push_back({x, y});
                x = (std::uint32_t)((std::uint64_t)x * (q_ % (r1_ == 1 ? 1 : r1_)) % r1_);
                y = (std::uint32_t)((std::uint64_t)y * (q_ % r2_) % r2_);
            } while (x != a || y != b);
            out.push_back(std::move(orbit));
        }
    return out;
}

// --- free functions -------------------------------------------------------

OrbitSet q_orbit(IndexPair i, std::uint32_t r1, std::uint32_t r2,
                 std::uint64_t q) {
    return OrbitSet::closure_of(r1, r2, q, std::span<const IndexPair>(&i, 1));
}

OrbitSet orbit_closure(std::span<const IndexPair> pts, std::uint32_t r1,
                       std::uint32_t r2, std::uint64_t q) {
    return OrbitSet::closure_of(r1, r2, q, pts);
}

OrbitSet apply_multiplier(const OrbitSet& d, std::uint32_t u, std::uint32_t v) {
    const std::uint32_t r1 = d.r1(), r2 = d.r2();
    if (r1 > 1 && std::gcd((std::uint64_t)u % r1, (std::uint64_t)r1) != 1)
        throw NotAUnit("u is not a unit mod r1");
    if (r2 > 1 && std::gcd((std::uint64_t)v % r2, (std::uint64_t)r2) != 1)
        throw NotAUnit("v is not a unit mod r2");
    std::vector<IndexPair> mapped;
    mapped.reserve(d.size());
    for (IndexPair i : d.members())
        mapped.push_back({(std::uint32_t)((std::uint64_t)i.a * u % r1),
                          (std::uint32_t)((std::uint64_t)i.b * v % r2)});
    return OrbitSet::from_members_checked(r1, r2, d.q(), mapped);
}

std::vector<std::uint32_t> units(std::uint32_t r) {
    if (r == 1) return {0};
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 1; u < r; ++u)
        if (std::gcd(u, r) == 1) out.push_back(u);
    return out;
}

std::uint32_t unit_inverse(std::uint32_t u, std::uint32_t r) {
    if (r == 1) return 0;
    if (std::gcd(u % r, r) != 1) throw NotAUnit("not a unit");
    std::uint64_t x = u % r;
    for (std::uint32_t w = 1; w < r; ++w)
        if (x * w % r == 1) return w;
    throw NotAUnit("not a unit");  // unreachable
}

std::string orbit_set_record(const OrbitSet& d) {
    std::ostringstream os;
    os << "q=" << d.q() << " r=[" << d.r1() << "," << d.r2() << "] reps=[";
    const auto& reps = d.reps();
    for (std::size_t i = 0; i < reps.size(); ++i)
        os << (i ? "," : "") << "[" << reps[i].a << "," << reps[i].b << "]";
    os << "]";
    return os.str();
}

OrbitSet parse_orbit_set_record(const std::string& line) {
    std::uint64_t q = 0;
    std::uint32_t r1 = 0, r2 = 0;
    if (std::sscanf(line.c_str(), "q=%llu r=[%u,%u]",
                    (unsigned long long*)&q, &r1, &r2) != 3)
        throw ParseError("bad orbit set record: " + line);
    auto pos = line.find("reps=[");
    if (pos == std::string::npos) throw ParseError("missing reps: " + line);
    std::vector<IndexPair> reps;
    const char* s = line.c_str() + pos + 6;
    while (true) {
        while (*s == ',' || *s == ' ') ++s;
        if (*s == ']' || *s == '\0') break;
        std::uint32_t a = 0, b = 0;
        int consumed = 0;
        if (std::sscanf(s, "[%u,%u]%n", &a, &b, &consumed) != 2)
            throw ParseError("bad rep in orbit set record");
        reps.push_back({a, b});
        s += consumed;
    }
    OrbitSet d = OrbitSet::closure_of(r1, r2, q, reps);
    if (d.reps() != reps)
        throw ParseError("reps are not sorted orbit-minimal representatives");
    return d;
}

}  // namespace abelian
