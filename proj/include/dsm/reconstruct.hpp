#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "dsm/indicator.hpp"

namespace dsm {

// Uniform grid on [-half_extent, half_extent]^3, n points per axis,
// endpoints included.
struct SamplingGrid {
    double half_extent = 1.5;
    int n = 64;

    double coord(int i) const {
        return -half_extent + 2.0 * half_extent * i / (n - 1);
    }
    std::size_t size() const {
        return static_cast<std::size_t>(n) * n * n;
    }
    std::size_t index(int i, int j, int k) const { // x fastest
        return (static_cast<std::size_t>(k) * n + j) * n + i;
    }
    void validate() const;
};

// Real indicator values on the grid, scaled to max 1; normalization keeps
// the pre-scaling max (0 for an identically zero field).
struct IndicatorField {
    SamplingGrid grid;
    std::vector<double> values;
    double normalization = 0.0;
};

// indicator_I at eta on every grid point for one direction; constant on
// planes orthogonal to x_hat.
IndicatorField evaluate_slab_field(const FarFieldDataset& dataset, std::size_t frame,
                                   double eta, const SamplingGrid& grid);

// Reciprocal composite of per-direction slab indicators at eta = t0.
IndicatorField evaluate_hull_field(const FarFieldDataset& dataset,
                                   const std::vector<std::size_t>& frames, double t0,
                                   const SamplingGrid& grid, double clamp_rel);

// Two-sided indicator S on the grid for a finite-duration source.
IndicatorField evaluate_ip2_slab_field(const FarFieldDataset& dataset,
                                       const FramePair& pair, double t_min,
                                       double t_max, const SamplingGrid& grid,
                                       double clamp_rel);

std::vector<std::uint8_t> threshold_mask(const IndicatorField& field, double iso);

std::vector<std::uint8_t> rasterize_shape(const SamplingGrid& grid,
                                          const SupportShape& shape);

double jaccard_index(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

// Value-weighted centroid coordinate s = x_hat . y of the thresholded
// profile; the slab's measured center along the direction.
double slab_centroid(const IndicatorField& field, const Vec3& x_hat, double iso);

// base.f64 (raw little-endian doubles, x fastest) + base.meta.json.
void export_volume(const IndicatorField& field, const std::filesystem::path& base);

// CSV matrix on the grid plane nearest to offset along axis (1-based).
void export_slice(const IndicatorField& field, int axis, double offset,
                  const std::filesystem::path& path);

} // namespace dsm
