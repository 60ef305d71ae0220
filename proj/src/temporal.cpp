#include "dsm/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "dsm/errors.hpp"

namespace dsm {

void ScanRegion::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("region radius must be positive");
    if (n_samples < 2) throw std::invalid_argument("region needs at least 2 samples");
}

std::vector<double> make_eta_grid(double eta_min, double eta_max, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("eta step must be positive");
    if (!(eta_max >= eta_min)) throw std::invalid_argument("eta window is empty");
    int count = static_cast<int>(std::floor((eta_max - eta_min) / step + 1e-9)) + 1;
    std::vector<double> etas(count);
    for (int i = 0; i < count; ++i) etas[i] = eta_min + i * step;
    return etas;
}

EtaScan eta_scan(const FarFieldDataset& dataset, const FramePair& pair,
                 const std::vector<double>& etas, const ScanRegion& region,
                 double clamp_rel) {
    region.validate();
    if (!(clamp_rel >= 0.0) || !(clamp_rel < 1.0))
        throw std::invalid_argument("clamp_rel must lie in [0, 1)");
    if (!std::is_sorted(etas.begin(), etas.end()))
        throw std::invalid_argument("etas must be sorted ascending");
    const Vec3& xp = dataset.frames.at(pair.plus).x_hat;
    const Vec3& xm = dataset.frames.at(pair.minus).x_hat;
    if (xp.dot(xm) > -(1.0 - 1e-9))
        throw std::invalid_argument("frame pair directions are not opposite");

    const BandProfile prof_p = make_band_profile(dataset, pair.plus);
    const BandProfile prof_m = make_band_profile(dataset, pair.minus);
    const double c = dataset.wave_speed();
    const int n_eta = static_cast<int>(etas.size());
    const int n_s = region.n_samples;

    // The indicators depend on y only through s = x_hat . y, so the max over
    // the ball reduces to the diameter line. Two passes: raw factors and the
    // sweep-wide max first, clamped combination second.
    std::vector<double> fac_p(static_cast<std::size_t>(n_eta) * n_s);
    std::vector<double> fac_m(fac_p.size());
    std::vector<double> row_max(n_eta, 0.0);

#pragma omp parallel for schedule(static)
    for (int ie = 0; ie < n_eta; ++ie) {
        double local = 0.0;
        for (int is = 0; is < n_s; ++is) {
            double s = -region.radius + 2.0 * region.radius * is / (n_s - 1);
            double a = prof_p(s / c - etas[ie]);
            double b = prof_m(-s / c - etas[ie]);
            fac_p[static_cast<std::size_t>(ie) * n_s + is] = a;
            fac_m[static_cast<std::size_t>(ie) * n_s + is] = b;
            local = std::max({local, a, b});
        }
        row_max[ie] = local;
    }
    double raw_max = 0.0;
    for (double v : row_max) raw_max = std::max(raw_max, v);
    const double clamp_abs = clamp_rel * raw_max;

    EtaScan scan;
    scan.etas = etas;
    scan.values.assign(n_eta, 0.0);
#pragma omp parallel for schedule(static)
    for (int ie = 0; ie < n_eta; ++ie) {
        double best = 0.0;
        for (int is = 0; is < n_s; ++is) {
            std::size_t idx = static_cast<std::size_t>(ie) * n_s + is;
            best = std::max(best, combine_pair(fac_p[idx], fac_m[idx], clamp_abs));
        }
        scan.values[ie] = best;
    }
    return scan;
}

SupportInterval detect_support(const EtaScan& scan, double threshold_rel) {
    if (!(threshold_rel > 0.0) || !(threshold_rel < 1.0))
        throw std::invalid_argument("threshold_rel must lie in (0, 1)");
    if (scan.etas.size() != scan.values.size() || scan.etas.empty())
        throw std::invalid_argument("scan is empty or inconsistent");

    const double peak = *std::max_element(scan.values.begin(), scan.values.end());
    if (!(peak > 0.0)) throw NoSignalError("eta scan has no positive values");
    const double tau = threshold_rel * peak;

    std::size_t first = 0, last = scan.values.size() - 1;
    while (first < scan.values.size() && scan.values[first] < tau) ++first;
    while (last > first && scan.values[last] < tau) --last;
    if (first > last) throw NoSignalError("eta scan never reaches the threshold");

    auto cross = [&](std::size_t inside, std::size_t outside) {
        double vi = scan.values[inside], vo = scan.values[outside];
        if (vi == vo) return scan.etas[inside];
        double f = (tau - vo) / (vi - vo);
        return scan.etas[outside] + f * (scan.etas[inside] - scan.etas[outside]);
    };

    SupportInterval iv;
    iv.eta1 = first > 0 ? cross(first, first - 1) : scan.etas[first];
    iv.eta2 = last + 1 < scan.values.size() ? cross(last, last + 1) : scan.etas[last];
    return iv;
}

double recover_t0(const SupportInterval& interval) {
    return interval.midpoint();
}

double recover_tmax(const SupportInterval& interval, double t_min) {
    return interval.eta1 + interval.eta2 - t_min;
}

double recover_tmin(const SupportInterval& interval, double t_max) {
    return interval.eta1 + interval.eta2 - t_max;
}

void write_eta_scan(const EtaScan& scan, double threshold_rel,
                    const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    char buf[96];
    std::snprintf(buf, sizeof buf, "# threshold_rel = %.17g\n", threshold_rel);
    out << buf << "eta, T\n";
    for (std::size_t i = 0; i < scan.etas.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g, %.17g\n", scan.etas[i], scan.values[i]);
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace dsm
