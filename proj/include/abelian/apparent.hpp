#ifndef ABELIAN_APPARENT_HPP
#define ABELIAN_APPARENT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abelian/orbit.hpp"

namespace abelian {

// Binary I-matrix afforded by an orbit-closed set: entry 1 iff the index is
// outside the defining set.
struct OrbitMatrix {
    std::uint32_t r1 = 1, r2 = 1;
    std::vector<std::uint8_t> entries;  // row-major
    OrbitSet provenance;

    std::uint8_t at(std::uint32_t i, std::uint32_t j) const {
        return entries[(std::size_t)i * r2 + j];
    }
    bool is_zero() const;
};

struct InvolvedHyperplane {
    std::uint32_t axis;  // 1 = rows, 2 = columns
    std::uint32_t b;
    std::uint32_t hyperplane_sd;
};

struct SdReport {
    std::uint32_t value = 0;                    // sd*(M)
    std::uint32_t eps[2] = {0, 0};              // eps_M(1), eps_M(2)
    std::uint32_t omega[2] = {0, 0};            // omega_M(1), omega_M(2)
    std::uint32_t sd_axis[2] = {0, 0};          // sd_1*, sd_2*
    std::vector<InvolvedHyperplane> involved;   // sd* = (omega_k+1)*sd*(H)
    bool shortcut_applicable = false;           // some involved H has sd* = 1
};

OrbitMatrix orbit_matrix(const OrbitSet& d);

// Length of the circular block of zero entries starting at b; 0 when v[b]
// is nonzero. Throws AllZeroAxis for the zero vector.
std::uint32_t zero_run(std::span<const std::uint8_t> v, std::uint32_t b);
// Same for whole hyperplanes of a matrix axis.
std::uint32_t zero_run(const OrbitMatrix& m, std::uint32_t axis, std::uint32_t b);

std::uint32_t sd_star_vector(std::span<const std::uint8_t> v);

SdReport sd_star_matrix(const OrbitMatrix& m);

inline constexpr std::uint32_t kDefaultMsdOrbitCap = 22;

// min sd* over nonzero q-orbit matrices dominated by M. Uses the
// involved-hyperplane shortcut when it applies, otherwise enumerates the
// subsets of the free orbits (capped).
std::uint32_t msd(const OrbitMatrix& m,
                  std::uint32_t orbit_cap = kDefaultMsdOrbitCap);

struct SdCodeResult {
    std::uint32_t value = 0;
    // argmax multiplier pairs, lexicographic
    std::vector<std::pair<std::uint32_t, std::uint32_t>> optimized_multipliers;
};

// Code-level sd*: max of msd over all coordinatewise unit remappings of D.
SdCodeResult sd_star_code(const OrbitSet& d,
                          std::uint32_t orbit_cap = kDefaultMsdOrbitCap);

std::string render_sd_report(const SdReport& r);

}  // namespace abelian

#endif
