#include "abelian/apparent.hpp"

#include <algorithm>
#include <sstream>

namespace abelian {

bool OrbitMatrix::is_zero() const {
    for (std::uint8_t e : entries)
        if (e) return false;
    return true;
}

OrbitMatrix orbit_matrix(const OrbitSet& d) {
    OrbitMatrix m{d.r1(), d.r2(), std::vector<std::uint8_t>(d.points(), 1), d};
    for (std::uint32_t i = 0; i < d.r1(); ++i)
        for (std::uint32_t j = 0; j < d.r2(); ++j)
            if (d.contains(i, j)) m.entries[(std::size_t)i * d.r2() + j] = 0;
    return m;
}

std::uint32_t zero_run(std::span<const std::uint8_t> v, std::uint32_t b) {
    const std::uint32_t r = (std::uint32_t)v.size();
    if (v[b % r]) return 0;
    std::uint32_t run = 0;
    for (std::uint32_t k = 0; k < r; ++k) {
        if (v[(b + k) % r]) return run;
        ++run;
    }
    throw AllZeroAxis("zero run undefined on the zero vector");
}

namespace {

// hyperplane-is-nonzero indicator along an axis
std::vector<std::uint8_t> axis_profile(const OrbitMatrix& m, std::uint32_t axis) {
    const std::uint32_t n = axis == 1 ? m.r1 : m.r2;
    std::vector<std::uint8_t> nz(n, 0);
    for (std::uint32_t i = 0; i < m.r1; ++i)
        for (std::uint32_t j = 0; j < m.r2; ++j)
            if (m.at(i, j)) nz[axis == 1 ? i : j] = 1;
    return nz;
}

std::vector<std::uint8_t> hyperplane(const OrbitMatrix& m, std::uint32_t axis,
                                     std::uint32_t b) {
    if (axis == 1) {
        return std::vector<std::uint8_t>(
            m.entries.begin() + (std::size_t)b * m.r2,
            m.entries.begin() + (std::size_t)(b + 1) * m.r2);
    }
    std::vector<std::uint8_t> col(m.r1);
    for (std::uint32_t i = 0; i < m.r1; ++i) col[i] = m.at(i, b);
    return col;
}

std::uint32_t max_circular_zero_run(std::span<const std::uint8_t> nz) {
    // nz must contain at least one nonzero entry
    const std::uint32_t n = (std::uint32_t)nz.size();
    std::uint32_t best = 0, run = 0;
    for (std::uint32_t k = 0; k < 2 * n; ++k) {
        if (nz[k % n]) {
            run = 0;
        } else {
            best = std::max(best, std::min(++run, n));
        }
    }
    return best;
}

}  // namespace

std::uint32_t zero_run(const OrbitMatrix& m, std::uint32_t axis, std::uint32_t b) {
    std::vector<std::uint8_t> nz = axis_profile(m, axis);
    return zero_run(nz, b);
}

std::uint32_t sd_star_vector(std::span<const std::uint8_t> v) {
    bool all_zero = true;
    for (std::uint8_t x : v)
        if (x) {
            all_zero = false;
            break;
        }
    if (all_zero) return 0;
    return max_circular_zero_run(v) + 1;
}

SdReport sd_star_matrix(const OrbitMatrix& m) {
    SdReport rep;
    if (m.is_zero()) return rep;
    std::vector<std::vector<std::uint32_t>> hsd(2);
    for (std::uint32_t axis = 1; axis <= 2; ++axis) {
        const std::uint32_t n = axis == 1 ? m.r1 : m.r2;
        std::vector<std::uint8_t> nz = axis_profile(m, axis);
        std::uint32_t eps = 0;
        hsd[axis - 1].resize(n);
        for (std::uint32_t b = 0; b < n; ++b) {
            std::uint32_t s = sd_star_vector(hyperplane(m, axis, b));
            hsd[axis - 1][b] = s;
            eps = std::max(eps, s);
        }
        std::uint32_t omega = max_circular_zero_run(nz);
        rep.eps[axis - 1] = eps;
        rep.omega[axis - 1] = omega;
        rep.sd_axis[axis - 1] = eps * (omega + 1);
    }
    rep.value = std::max(rep.sd_axis[0], rep.sd_axis[1]);
    for (std::uint32_t axis = 1; axis <= 2; ++axis) {
        const std::uint32_t n = axis == 1 ? m.r1 : m.r2;
        for (std::uint32_t b = 0; b < n; ++b) {
            std::uint32_t s = hsd[axis - 1][b];
            if (s && (rep.omega[axis - 1] + 1) * s == rep.value) {
                rep.involved.push_back({axis, b, s});
                if (s == 1) rep.shortcut_applicable = true;
            }
        }
    }
    return rep;
}

std::uint32_t msd(const OrbitMatrix& m, std::uint32_t orbit_cap) {
    SdReport rep = sd_star_matrix(m);
    if (rep.shortcut_applicable) return rep.value;
    auto free = m.provenance.free_orbits();
    if (m.is_zero())
        throw ZeroCode("msd of the zero matrix");
    if (free.size() > orbit_cap)
        throw BudgetExceeded("msd enumeration over " +
                             std::to_string(free.size()) +
                             " free orbits exceeds cap " +
                             std::to_string(orbit_cap));
    const std::size_t total = m.entries.size();
    std::uint32_t best = rep.value;
    OrbitMatrix p = m;
    const std::uint64_t subsets = std::uint64_t(1) << free.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        p.entries = m.entries;
        std::size_t removed = m.provenance.size();
        for (std::size_t k = 0; k < free.size(); ++k)
            if (mask >> k & 1) {
                removed += free[k].size();
                for (IndexPair ij : free[k])
                    p.entries[(std::size_t)ij.a * m.r2 + ij.b] = 0;
            }
        if (removed == total) continue;  // the zero matrix is excluded
        best = std::min(best, sd_star_matrix(p).value);
    }
    return best;
}

SdCodeResult sd_star_code(const OrbitSet& d, std::uint32_t orbit_cap) {
    if (d.is_full()) throw ZeroCode("defining set is all of I");
    SdCodeResult res;
    for (std::uint32_t u : units(d.r1()))
        for (std::uint32_t v : units(d.r2())) {
            std::uint32_t val = msd(orbit_matrix(apply_multiplier(d, u, v)),
                                    orbit_cap);
            if (val > res.value) {
                res.value = val;
                res.optimized_multipliers.clear();
            }
            if (val == res.value)
                res.optimized_multipliers.emplace_back(u, v);
        }
    return res;
}

std::string render_sd_report(const SdReport& r) {
    std::ostringstream os;
    os << "sd* = " << r.value << "\n";
    for (int k = 0; k < 2; ++k)
        os << "axis " << k + 1 << ": eps = " << r.eps[k]
           << "  omega = " << r.omega[k] << "  sd_" << k + 1
           << "* = " << r.sd_axis[k] << "\n";
    os << "involved hyperplanes:";
    for (const auto& h : r.involved)
        os << " (" << (h.axis == 1 ? "row " : "col ") << h.b
           << ", sd*=" << h.hyperplane_sd << ")";
    os << "\nshortcut " << (r.shortcut_applicable ? "applicable" : "not applicable")
       << "\n";
    return os.str();
}

}  // namespace abelian
