#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dsm/geometry.hpp"

namespace dsm {

// Uniform positive-frequency grid: omega_n = n * omega_max / n_omega,
// n = 1..n_omega. Never contains omega = 0.
struct FrequencyGrid {
    double omega_max = 20.0;
    int n_omega = 200;

    double delta() const { return omega_max / n_omega; }
    double omega(int n) const { return n * delta(); } // n is 1-based
    std::vector<double> values() const;
    void validate() const;
};

// Complex far-field samples per (frame, frequency), frame-major.
struct FarFieldDataset {
    double eps = 1.0;
    double mu = 1.0;
    FrequencyGrid grid;
    std::vector<ObservationFrame> frames;
    std::vector<CVec3> values;
    std::string provenance;

    double wave_speed() const { return 1.0 / std::sqrt(eps * mu); }
    std::size_t index(std::size_t frame, int n) const { // n is 1-based
        return frame * static_cast<std::size_t>(grid.n_omega) + (n - 1);
    }
    CVec3& at(std::size_t frame, int n) { return values[index(frame, n)]; }
    const CVec3& at(std::size_t frame, int n) const { return values[index(frame, n)]; }

    void validate() const;
    // Index of the frame with direction -x_hat of `frame` (dot = -1 within
    // 1e-9), or -1 if the dataset holds none.
    int find_opposite(std::size_t frame) const;
};

// Scalar data E(x_hat, omega) = (1/(i omega mu)) p . E_inf.
std::complex<double> preprocess(const CVec3& value, const ObservationFrame& frame,
                                double omega, double mu);

struct NoiseSpec {
    double delta = 0.0;
    std::uint64_t seed = 0;
    bool complex_noise = true; // false: real xi ~ N(0,1)

    void validate() const;
};

// Multiplies every complex component by (1 + delta * xi), xi drawn from one
// seeded stream in frame -> frequency -> component order.
FarFieldDataset add_noise(const FarFieldDataset& dataset, const NoiseSpec& spec);

// Text format "# dsm-farfield v1"; 17-significant-digit decimals, LF endings.
void write_dataset(const FarFieldDataset& dataset, const std::filesystem::path& path);
FarFieldDataset read_dataset(const std::filesystem::path& path);

} // namespace dsm
