// archive.hpp
// N x N x N visitation-count grid over the metric space. Counts are
// cumulative; novelty is the relative visitation frequency of a cell.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "novaq/metrics.hpp"

namespace novaq {

struct CellIndex {
    int m = 0;
    int p = 0;
    int e = 0;

    bool operator==(const CellIndex&) const = default;
};

struct Coverage {
    std::size_t occupied = 0;
    double rate = 0.0;
};

class GridArchive {
public:
    explicit GridArchive(int bins_per_dim = 10, double lower = 0.0, double upper = 1.0);

    int bins() const { return bins_; }
    double lower_bound() const { return lo_; }
    double upper_bound() const { return hi_; }
    std::uint64_t total_recorded() const { return total_; }
    std::uint64_t clamp_warnings() const { return clamp_warnings_; }

    // eta_d = floor(N * (phi_d - l) / (u - l)), with phi_d = u clamped into
    // bin N-1. Out-of-bounds metrics are clamped and counted as warnings.
    CellIndex cell_index(const MetricTriple& m) const;

    void record(const MetricTriple& m);

    // rho / N^3 for the triple's cell; lower means more novel.
    double novelty_score(const MetricTriple& m) const;

    std::uint64_t cell_count(const CellIndex& c) const;
    Coverage coverage() const;

    // Occupied bins of the 1-D marginal along one dimension (0 = magnitude,
    // 1 = phase, 2 = entanglement).
    std::size_t marginal_occupied(int dim) const;
    // Occupied bins of the 2-D projection onto (dim_a, dim_b).
    std::size_t projection_occupied(int dim_a, int dim_b) const;

    // Flat counts, row-major in (eta_m, eta_p, eta_e).
    const std::vector<std::uint64_t>& counts() const { return counts_; }

private:
    int bins_;
    double lo_;
    double hi_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
    mutable std::uint64_t clamp_warnings_ = 0;

    int bin_of(double value) const;
    std::size_t flat(const CellIndex& c) const;
};

}  // namespace novaq
