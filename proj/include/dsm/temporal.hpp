#pragma once

#include <filesystem>
#include <vector>

#include "dsm/indicator.hpp"

namespace dsm {

// Sampling ball for the inner max of T(eta); the indicator's 1-D reduction
// lets the sweep run over s = x_hat . y in [-radius, radius].
struct ScanRegion {
    double radius = 1.5;
    int n_samples = 301;

    void validate() const;
};

struct EtaScan {
    std::vector<double> etas;
    std::vector<double> values;
};

// T(eta) = max over the region of W_eta. clamp_rel scales the running max of
// the raw factors over the whole sweep.
EtaScan eta_scan(const FarFieldDataset& dataset, const FramePair& pair,
                 const std::vector<double>& etas, const ScanRegion& region,
                 double clamp_rel);

std::vector<double> make_eta_grid(double eta_min, double eta_max, double step);

struct SupportInterval {
    double eta1 = 0.0;
    double eta2 = 0.0;

    double width() const { return eta2 - eta1; }
    double midpoint() const { return 0.5 * (eta1 + eta2); }
};

// First/last samples at or above threshold_rel * max, linearly interpolated
// toward the outside neighbors. Throws NoSignalError when nothing crosses.
SupportInterval detect_support(const EtaScan& scan, double threshold_rel);

double recover_t0(const SupportInterval& interval);
double recover_tmax(const SupportInterval& interval, double t_min);
double recover_tmin(const SupportInterval& interval, double t_max);

// Two-column text export with a "# threshold_rel = ..." header.
void write_eta_scan(const EtaScan& scan, double threshold_rel,
                    const std::filesystem::path& path);

} // namespace dsm
