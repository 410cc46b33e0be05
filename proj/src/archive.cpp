#include "novaq/archive.hpp"

#include <cmath>
#include <stdexcept>

namespace novaq {

GridArchive::GridArchive(int bins_per_dim, double lower, double upper)
    : bins_(bins_per_dim), lo_(lower), hi_(upper) {
    if (bins_per_dim < 1) throw std::invalid_argument("bins_per_dim must be >= 1");
    if (!(upper > lower)) throw std::invalid_argument("upper bound must exceed lower");
    const std::size_t n = static_cast<std::size_t>(bins_);
    counts_.assign(n * n * n, 0);
}

int GridArchive::bin_of(double value) const {
    if (value < lo_) {
        ++clamp_warnings_;
        return 0;
    }
    if (value > hi_) {
        ++clamp_warnings_;
        return bins_ - 1;
    }
    const int idx = static_cast<int>(std::floor((value - lo_) / (hi_ - lo_) * bins_));
    return idx >= bins_ ? bins_ - 1 : idx;  // value == upper bound
}

CellIndex GridArchive::cell_index(const MetricTriple& m) const {
    return CellIndex{bin_of(m.magnitude), bin_of(m.phase), bin_of(m.entanglement)};
}

std::size_t GridArchive::flat(const CellIndex& c) const {
    const std::size_t n = static_cast<std::size_t>(bins_);
    return (static_cast<std::size_t>(c.m) * n + static_cast<std::size_t>(c.p)) * n +
           static_cast<std::size_t>(c.e);
}

void GridArchive::record(const MetricTriple& m) {
    ++counts_[flat(cell_index(m))];
    ++total_;
}

double GridArchive::novelty_score(const MetricTriple& m) const {
    return static_cast<double>(cell_count(cell_index(m))) /
           static_cast<double>(counts_.size());
}

std::uint64_t GridArchive::cell_count(const CellIndex& c) const {
    return counts_[flat(c)];
}

Coverage GridArchive::coverage() const {
    std::size_t occupied = 0;
    for (std::uint64_t c : counts_) {
        if (c > 0) ++occupied;
    }
    return Coverage{occupied,
                    static_cast<double>(occupied) / static_cast<double>(counts_.size())};
}

std::size_t GridArchive::marginal_occupied(int dim) const {
    if (dim < 0 || dim > 2) throw std::invalid_argument("dimension must be 0, 1 or 2");
    std::vector<bool> hit(static_cast<std::size_t>(bins_), false);
    const std::size_t n = static_cast<std::size_t>(bins_);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t e = 0; e < n; ++e) {
                if (counts_[(m * n + p) * n + e] == 0) continue;
                const std::size_t idx = dim == 0 ? m : dim == 1 ? p : e;
                hit[idx] = true;
            }
        }
    }
    std::size_t occupied = 0;
    for (bool b : hit) occupied += b ? 1 : 0;
    return occupied;
}

std::size_t GridArchive::projection_occupied(int dim_a, int dim_b) const {
    if (dim_a < 0 || dim_a > 2 || dim_b < 0 || dim_b > 2 || dim_a == dim_b) {
        throw std::invalid_argument("projection needs two distinct dimensions");
    }
    const std::size_t n = static_cast<std::size_t>(bins_);
    std::vector<bool> hit(n * n, false);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t e = 0; e < n; ++e) {
                if (counts_[(m * n + p) * n + e] == 0) continue;
                const std::size_t idx[3] = {m, p, e};
                hit[idx[dim_a] * n + idx[dim_b]] = true;
            }
        }
    }
    std::size_t occupied = 0;
    for (bool b : hit) occupied += b ? 1 : 0;
    return occupied;
}

}  // namespace novaq
