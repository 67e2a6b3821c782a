#ifndef ABELIAN_ORBIT_HPP
#define ABELIAN_ORBIT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abelian/errors.hpp"

namespace abelian {

// Canonical representative in Z_{r1} x Z_{r2}. Moduli live in the OrbitSet.
struct IndexPair {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// A union of q-orbits of I = Z_{r1} x Z_{r2}, stored as a dense membership
// bitset plus the sorted list of lexicographically least orbit
// representatives. Always orbit-closed by construction.
class OrbitSet {
public:
    static OrbitSet empty(std::uint32_t r1, std::uint32_t r2, std::uint64_t q);
    static OrbitSet full(std::uint32_t r1, std::uint32_t r2, std::uint64_t q);
    // least orbit-closed superset of the given points
    static OrbitSet closure_of(std::uint32_t r1, std::uint32_t r2,
                               std::uint64_t q, std::span<const IndexPair> pts);
    // throws NotOrbitClosed when the member set is not a union of orbits
    static OrbitSet from_members_checked(std::uint32_t r1, std::uint32_t r2,
                                         std::uint64_t q,
                                         std::span<const IndexPair> members);

    std::uint32_t r1() const { return r1_; }
    std::uint32_t r2() const { return r2_; }
    std::uint64_t q() const { return q_; }
    std::size_t points() const { return (std::size_t)r1_ * r2_; }
    std::size_t size() const { return size_; }
    bool is_full() const { return size_ == points(); }
    bool is_empty() const { return size_ == 0; }

    bool contains(std::uint32_t a, std::uint32_t b) const {
        return member_[(std::size_t)a * r2_ + b] != 0;
    }
    const std::vector<IndexPair>& reps() const { return reps_; }
    std::vector<IndexPair> members() const;

    OrbitSet united_with(const OrbitSet& other) const;
    // the q-orbits of I disjoint from this set
    std::vector<std::vector<IndexPair>> free_orbits() const;

    friend bool operator==(const OrbitSet&, const OrbitSet&) = default;

private:
    OrbitSet(std::uint32_t r1, std::uint32_t r2, std::uint64_t q);
    void insert_orbit(IndexPair i);
    void rebuild_reps();

    std::uint32_t r1_ = 1, r2_ = 1;
    std::uint64_t q_ = 2;
    std::size_t size_ = 0;
    std::vector<std::uint8_t> member_;
    std::vector<IndexPair> reps_;
};

std::uint64_t multiplicative_order(std::uint64_t q, std::uint32_t r);

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t a, std::uint32_t r,
                                            std::uint64_t q);

OrbitSet q_orbit(IndexPair i, std::uint32_t r1, std::uint32_t r2,
                 std::uint64_t q);

OrbitSet orbit_closure(std::span<const IndexPair> pts, std::uint32_t r1,
                       std::uint32_t r2, std::uint64_t q);

// Coordinatewise unit multiplication (a,b) -> (ua mod r1, vb mod r2).
OrbitSet apply_multiplier(const OrbitSet& d, std::uint32_t u, std::uint32_t v);

// Units mod r, ascending; units(1) = {0} by the one-point-ring convention.
std::vector<std::uint32_t> units(std::uint32_t r);

std::uint32_t unit_inverse(std::uint32_t u, std::uint32_t r);

std::string orbit_set_record(const OrbitSet& d);
OrbitSet parse_orbit_set_record(const std::string& line);

}  // namespace abelian

#endif
