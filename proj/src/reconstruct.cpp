#include "dsm/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dsm/errors.hpp"

namespace dsm {

namespace {

// Evaluates the band profile at u = x_hat . y / c - eta for every grid
// point. The profile depends on y only through that scalar, so the grid
// collapses to its distinct projection values (64 for an axis direction).
std::vector<double> profile_on_grid(const BandProfile& prof, const Vec3& x_hat,
                                    double c, double eta, const SamplingGrid& grid) {
    const std::size_t total = grid.size();
    std::vector<double> us(total);
    for (int k = 0; k < grid.n; ++k)
        for (int j = 0; j < grid.n; ++j)
            for (int i = 0; i < grid.n; ++i) {
                Vec3 y(grid.coord(i), grid.coord(j), grid.coord(k));
                us[grid.index(i, j, k)] = x_hat.dot(y) / c - eta;
            }

    std::vector<double> distinct = us;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<double> vals(distinct.size());
    const long m = static_cast<long>(distinct.size());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < m; ++idx) vals[idx] = prof(distinct[idx]);

    std::vector<double> out(total);
    for (std::size_t p = 0; p < total; ++p) {
        std::size_t pos = std::lower_bound(distinct.begin(), distinct.end(), us[p]) -
                          distinct.begin();
        out[p] = vals[pos];
    }
    return out;
}

void normalize_field(IndicatorField& field) {
    double peak = 0.0;
    for (double v : field.values) peak = std::max(peak, v);
    field.normalization = peak;
    if (peak > 0.0)
        for (double& v : field.values) v /= peak;
}

} // namespace

void SamplingGrid::validate() const {
    if (n < 2) throw std::invalid_argument("grid resolution must be at least 2");
    if (!(half_extent > 0.0)) throw std::invalid_argument("grid extent must be positive");
}

IndicatorField evaluate_slab_field(const FarFieldDataset& dataset, std::size_t frame,
                                   double eta, const SamplingGrid& grid) {
    grid.validate();
    BandProfile prof = make_band_profile(dataset, frame);
    IndicatorField field{grid, {}, 0.0};
    field.values = profile_on_grid(prof, dataset.frames[frame].x_hat,
                                   dataset.wave_speed(), eta, grid);
    normalize_field(field);
    return field;
}

IndicatorField evaluate_hull_field(const FarFieldDataset& dataset,
                                   const std::vector<std::size_t>& frames, double t0,
                                   const SamplingGrid& grid, double clamp_rel) {
    grid.validate();
    if (frames.empty()) throw std::invalid_argument("hull needs at least one frame");
    if (!(clamp_rel >= 0.0) || !(clamp_rel < 1.0))
        throw std::invalid_argument("clamp_rel must lie in [0, 1)");

    const double c = dataset.wave_speed();
    std::vector<std::vector<double>> raw(frames.size());
    std::vector<double> clamp_abs(frames.size());
    for (std::size_t l = 0; l < frames.size(); ++l) {
        BandProfile prof = make_band_profile(dataset, frames[l]);
        raw[l] = profile_on_grid(prof, dataset.frames[frames[l]].x_hat, c, t0, grid);
        double peak = 0.0;
        for (double v : raw[l]) peak = std::max(peak, v);
        clamp_abs[l] = clamp_rel * peak;
    }

    IndicatorField field{grid, std::vector<double>(grid.size()), 0.0};
    for (std::size_t p = 0; p < grid.size(); ++p) {
        double sum_inv = 0.0;
        bool dead = false;
        for (std::size_t l = 0; l < frames.size(); ++l) {
            double v = std::max(raw[l][p], 0.0);
            if (v <= clamp_abs[l] || v == 0.0) {
                dead = true;
                break;
            }
            sum_inv += 1.0 / v;
        }
        field.values[p] = dead ? 0.0 : 1.0 / sum_inv;
    }
    normalize_field(field);
    return field;
}

IndicatorField evaluate_ip2_slab_field(const FarFieldDataset& dataset,
                                       const FramePair& pair, double t_min,
                                       double t_max, const SamplingGrid& grid,
                                       double clamp_rel) {
    grid.validate();
    if (!(t_max > t_min)) throw std::invalid_argument("t_max must exceed t_min");
    if (!(clamp_rel >= 0.0) || !(clamp_rel < 1.0))
        throw std::invalid_argument("clamp_rel must lie in [0, 1)");

    const double c = dataset.wave_speed();
    const Vec3& xp = dataset.frames.at(pair.plus).x_hat;
    BandProfile p1 = make_band_profile(dataset, pair.plus);
    BandProfile p2 = make_band_profile(dataset, pair.minus);
    std::vector<double> f1 = profile_on_grid(p1, xp, c, t_min, grid);
    std::vector<double> f2 = profile_on_grid(p2, xp, c, t_max, grid);

    double peak = 0.0;
    for (double v : f1) peak = std::max(peak, v);
    for (double v : f2) peak = std::max(peak, v);
    const double clamp_abs = clamp_rel * peak;

    IndicatorField field{grid, std::vector<double>(grid.size()), 0.0};
    for (std::size_t p = 0; p < grid.size(); ++p)
        field.values[p] = combine_pair(f1[p], f2[p], clamp_abs);
    normalize_field(field);
    return field;
}

std::vector<std::uint8_t> threshold_mask(const IndicatorField& field, double iso) {
    if (!(iso > 0.0)) throw std::invalid_argument("iso must be positive");
    std::vector<std::uint8_t> mask(field.values.size());
    for (std::size_t p = 0; p < mask.size(); ++p)
        mask[p] = field.values[p] >= iso ? 1 : 0;
    return mask;
}

std::vector<std::uint8_t> rasterize_shape(const SamplingGrid& grid,
                                          const SupportShape& shape) {
    grid.validate();
    shape.validate();
    std::vector<std::uint8_t> mask(grid.size());
    for (int k = 0; k < grid.n; ++k)
        for (int j = 0; j < grid.n; ++j)
            for (int i = 0; i < grid.n; ++i) {
                Vec3 y(grid.coord(i), grid.coord(j), grid.coord(k));
                mask[grid.index(i, j, k)] = support_contains(shape, y) ? 1 : 0;
            }
    return mask;
}

double jaccard_index(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("mask sizes differ");
    std::size_t inter = 0, uni = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        bool x = a[p] != 0, y = b[p] != 0;
        inter += x && y;
        uni += x || y;
    }
    return uni == 0 ? 1.0 : static_cast<double>(inter) / uni;
}

double slab_centroid(const IndicatorField& field, const Vec3& x_hat, double iso) {
    const SamplingGrid& grid = field.grid;
    double wsum = 0.0, ssum = 0.0;
    for (int k = 0; k < grid.n; ++k)
        for (int j = 0; j < grid.n; ++j)
            for (int i = 0; i < grid.n; ++i) {
                double v = field.values[grid.index(i, j, k)];
                if (v < iso) continue;
                Vec3 y(grid.coord(i), grid.coord(j), grid.coord(k));
                wsum += v;
                ssum += v * x_hat.dot(y);
            }
    if (wsum == 0.0) throw NoSignalError("no field values reach the iso level");
    return ssum / wsum;
}

void export_volume(const IndicatorField& field, const std::filesystem::path& base) {
    std::filesystem::path raw = base;
    raw += ".f64";
    std::ofstream out(raw, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + raw.string());
    static_assert(sizeof(double) == 8);
    out.write(reinterpret_cast<const char*>(field.values.data()),
              static_cast<std::streamsize>(field.values.size() * sizeof(double)));
    if (!out) throw IoError("write failed: " + raw.string());

    nlohmann::json meta{
        {"format", "dsm-volume v1"},
        {"half_extent", field.grid.half_extent},
        {"resolution", field.grid.n},
        {"normalization", field.normalization},
        {"order", "x-fastest"},
        {"dtype", "float64-le"},
    };
    std::filesystem::path mp = base;
    mp += ".meta.json";
    std::ofstream ms(mp, std::ios::binary);
    if (!ms) throw IoError("cannot open for writing: " + mp.string());
    ms << meta.dump(2) << "\n";
    if (!ms) throw IoError("write failed: " + mp.string());
}

void export_slice(const IndicatorField& field, int axis, double offset,
                  const std::filesystem::path& path) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
    const SamplingGrid& grid = field.grid;
    if (std::abs(offset) > grid.half_extent)
        throw std::invalid_argument("slice offset outside grid extents");

    const double h = 2.0 * grid.half_extent / (grid.n - 1);
    int fixed = static_cast<int>(std::lround((offset + grid.half_extent) / h));
    fixed = std::clamp(fixed, 0, grid.n - 1);

    // Remaining axes ascending: columns sweep the lower one, rows the higher.
    int ax_col = axis == 1 ? 1 : 0;
    int ax_row = axis == 3 ? 1 : 2;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    char buf[96];
    std::snprintf(buf, sizeof buf, "# axis=%d offset=%.17g\n", axis, grid.coord(fixed));
    out << buf;
    for (int r = 0; r < grid.n; ++r) {
        for (int col = 0; col < grid.n; ++col) {
            int ijk[3];
            ijk[axis - 1] = fixed;
            ijk[ax_col] = col;
            ijk[ax_row] = r;
            std::snprintf(buf, sizeof buf, "%.17g",
                          field.values[grid.index(ijk[0], ijk[1], ijk[2])]);
            out << (col ? ", " : "") << buf;
        }
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace dsm
