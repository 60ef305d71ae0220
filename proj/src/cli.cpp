#include "dsm/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "dsm/errors.hpp"
#include "dsm/forward.hpp"
#include "dsm/oracle.hpp"
#include "dsm/reconstruct.hpp"
#include "dsm/temporal.hpp"

namespace dsm {

namespace {

std::vector<double> parse_numbers(const std::string& text, char sep,
                                  const std::string& what) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, sep)) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse " + what + ": '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
            ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("cannot parse " + what + ": '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument(what + " must not be empty");
    return out;
}

Vec3 parse_vec3(const std::string& text, const std::string& what) {
    auto v = parse_numbers(text, ',', what);
    if (v.size() != 3) throw std::invalid_argument(what + " needs exactly 3 components");
    return Vec3(v[0], v[1], v[2]);
}

std::vector<Vec3> parse_directions(const std::string& text) {
    std::vector<Vec3> out;
    std::istringstream in(text);
    std::string group;
    while (std::getline(in, group, ';')) {
        Vec3 d = parse_vec3(group, "direction");
        if (!(d.norm() > 0.0)) throw std::invalid_argument("direction must be nonzero");
        out.push_back(d.normalized());
    }
    if (out.empty()) throw std::invalid_argument("no directions given");
    return out;
}

struct SlicePlane {
    int axis;
    double offset;
};

std::vector<SlicePlane> parse_slices(const std::string& text) {
    std::vector<SlicePlane> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string group;
    while (std::getline(in, group, ';')) {
        auto colon = group.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("slice spec needs axis:offset, got '" + group + "'");
        auto axis_v = parse_numbers(group.substr(0, colon), ',', "slice axis");
        auto off_v = parse_numbers(group.substr(colon + 1), ',', "slice offset");
        if (axis_v.size() != 1 || off_v.size() != 1)
            throw std::invalid_argument("slice spec needs axis:offset, got '" + group + "'");
        out.push_back({static_cast<int>(axis_v[0]), off_v[0]});
    }
    return out;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Options shared by every scan-based command.
struct ScanOptions {
    double eta_min = 0.0;
    double eta_max = 8.0;
    double eta_step = 0.05;
    double region_radius = 1.5;
    int region_samples = 301;
    double clamp_rel = 0.05;
    double threshold_rel = 0.15;
};

void add_scan_options(CLI::App* cmd, ScanOptions& o, bool with_clamp = true) {
    cmd->add_option("--eta-min", o.eta_min, "Scan window start")->capture_default_str();
    cmd->add_option("--eta-max", o.eta_max, "Scan window end")->capture_default_str();
    cmd->add_option("--eta-step", o.eta_step, "Scan step")->capture_default_str();
    cmd->add_option("--region-radius", o.region_radius, "Sampling ball radius")
        ->capture_default_str();
    cmd->add_option("--region-samples", o.region_samples,
                    "Samples across the region diameter")
        ->capture_default_str();
    if (with_clamp)
        cmd->add_option("--clamp-rel", o.clamp_rel, "Relative clamp floor")
            ->capture_default_str();
    cmd->add_option("--threshold-rel", o.threshold_rel, "Detection threshold")
        ->capture_default_str();
}

struct SynthesizeOptions {
    std::string shape = "cube";
    std::string center = "0,0,0";
    std::string half = "0.5,0.5,0.5";
    double radius = 0.5;
    bool use_radius = false;
    std::string profile = "constant";
    std::string polarization = "1,0,0";
    std::optional<double> t0;
    std::optional<double> t_min;
    std::optional<double> t_max;
    std::string tau;
    double eps = 1.0;
    double mu = 1.0;
    double omega_max = 20.0;
    int n_omega = 200;
    int n_q = 64;
    std::string directions = "0,0,1";
    bool no_opposites = false;
    double noise_delta = 0.0;
    std::uint64_t noise_seed = 1;
    bool noise_real = false;
    std::string out = "dataset.txt";
};

SourceSpec build_source(const SynthesizeOptions& o) {
    SourceSpec src;
    Vec3 center = parse_vec3(o.center, "center");
    if (o.shape == "cube") {
        src.shape = SupportShape::make_cube(center, parse_vec3(o.half, "half"));
    } else if (o.shape == "ball") {
        src.shape = SupportShape::make_ball(
            center, o.use_radius ? o.radius : parse_vec3(o.half, "half").x());
    } else if (o.shape == "ellipsoid") {
        src.shape = SupportShape::make_ellipsoid(center, parse_vec3(o.half, "half"));
    } else {
        throw std::invalid_argument("shape must be cube, ball or ellipsoid");
    }
    if (o.profile == "constant")
        src.profile = SpatialProfile::constant;
    else if (o.profile == "cosine-bump")
        src.profile = SpatialProfile::cosine_bump;
    else
        throw std::invalid_argument("profile must be constant or cosine-bump");
    src.polarization = parse_vec3(o.polarization, "polarization");
    src.eps = o.eps;
    src.mu = o.mu;

    const bool window = o.t_min.has_value() || o.t_max.has_value();
    if (o.t0.has_value() == window)
        throw std::invalid_argument("give either --t0 or both --tmin and --tmax");
    if (o.t0) {
        src.temporal = Impulse{*o.t0};
    } else {
        if (!o.t_min || !o.t_max)
            throw std::invalid_argument("window sources need both --tmin and --tmax");
        Window w{*o.t_min, *o.t_max, {}};
        if (!o.tau.empty()) w.tau = parse_numbers(o.tau, ',', "tau");
        src.temporal = w;
    }
    src.validate();
    return src;
}

int cmd_synthesize(const SynthesizeOptions& o) {
    SourceSpec src = build_source(o);
    FrequencyGrid grid{o.omega_max, o.n_omega};
    grid.validate();

    std::vector<ObservationFrame> frames;
    for (const Vec3& d : parse_directions(o.directions)) {
        frames.push_back(make_frame(d));
        if (!o.no_opposites) frames.push_back(make_frame(-d));
    }

    FarFieldDataset ds = synthesize_dataset(src, frames, grid, o.n_q);
    if (o.noise_delta > 0.0)
        ds = add_noise(ds, NoiseSpec{o.noise_delta, o.noise_seed, !o.noise_real});
    write_dataset(ds, o.out);

    for (std::size_t j = 0; j < frames.size(); ++j)
        std::printf("frame %zu: xhat = %g %g %g (%d frequencies)\n", j,
                    frames[j].x_hat.x(), frames[j].x_hat.y(), frames[j].x_hat.z(),
                    grid.n_omega);
    std::printf("wrote %s\n", o.out.c_str());
    return exit_ok;
}

struct RecoverOptions {
    std::string data = "dataset.txt";
    std::size_t frame = 0;
    std::string mode = "t0";
    std::optional<double> known_tmin;
    std::optional<double> known_tmax;
    ScanOptions scan;
    std::string scan_out;
};

int cmd_recover_time(const RecoverOptions& o) {
    FarFieldDataset ds = read_dataset(o.data);
    FramePair pair = find_frame_pair(ds, o.frame);
    EtaScan scan = eta_scan(ds, pair, make_eta_grid(o.scan.eta_min, o.scan.eta_max, o.scan.eta_step),
                            ScanRegion{o.scan.region_radius, o.scan.region_samples},
                            o.scan.clamp_rel);
    if (!o.scan_out.empty()) write_eta_scan(scan, o.scan.threshold_rel, o.scan_out);

    SupportInterval iv = detect_support(scan, o.scan.threshold_rel);
    std::printf("eta1 = %s\n", fmt17(iv.eta1).c_str());
    std::printf("eta2 = %s\n", fmt17(iv.eta2).c_str());
    if (o.mode == "t0") {
        std::printf("t0 = %s\n", fmt17(recover_t0(iv)).c_str());
    } else if (o.mode == "tmax") {
        if (!o.known_tmin)
            throw std::invalid_argument("mode tmax needs --tmin with the known value");
        std::printf("tmax = %s\n", fmt17(recover_tmax(iv, *o.known_tmin)).c_str());
    } else if (o.mode == "tmin") {
        if (!o.known_tmax)
            throw std::invalid_argument("mode tmin needs --tmax with the known value");
        std::printf("tmin = %s\n", fmt17(recover_tmin(iv, *o.known_tmax)).c_str());
    } else {
        throw std::invalid_argument("mode must be t0, tmax or tmin");
    }
    return exit_ok;
}

struct ReconstructOptions {
    std::string data = "dataset.txt";
    std::optional<double> t0;
    bool auto_t0 = false;
    std::size_t frame = 0; // pair used for --auto-t0
    std::string frames;    // indices, default all
    double grid_extent = 1.5;
    int grid_n = 64;
    double clamp_rel = 0.05;
    double iso = 0.5;
    ScanOptions scan;
    std::string out = "hull";
    std::string slices = "1:0;2:0;3:0";
};

int cmd_reconstruct(const ReconstructOptions& o) {
    FarFieldDataset ds = read_dataset(o.data);

    double t0 = 0.0;
    if (o.auto_t0) {
        FramePair pair = find_frame_pair(ds, o.frame);
        EtaScan scan = eta_scan(ds, pair,
                                make_eta_grid(o.scan.eta_min, o.scan.eta_max, o.scan.eta_step),
                                ScanRegion{o.scan.region_radius, o.scan.region_samples},
                                o.clamp_rel);
        t0 = recover_t0(detect_support(scan, o.scan.threshold_rel));
        std::printf("recovered t0 = %s\n", fmt17(t0).c_str());
    } else if (o.t0) {
        t0 = *o.t0;
    } else {
        throw std::invalid_argument("give --t0 or --auto-t0");
    }

    std::vector<std::size_t> frames;
    if (o.frames.empty()) {
        for (std::size_t j = 0; j < ds.frames.size(); ++j) frames.push_back(j);
    } else {
        for (double v : parse_numbers(o.frames, ',', "frame index")) {
            if (v < 0 || v != std::floor(v) ||
                v >= static_cast<double>(ds.frames.size()))
                throw std::invalid_argument("frame index out of range");
            frames.push_back(static_cast<std::size_t>(v));
        }
    }

    SamplingGrid grid{o.grid_extent, o.grid_n};
    IndicatorField field = evaluate_hull_field(ds, frames, t0, grid, o.clamp_rel);
    if (field.normalization <= 0.0)
        throw NoSignalError("hull field is identically zero");

    export_volume(field, o.out);
    auto slices = parse_slices(o.slices);
    for (std::size_t j = 0; j < slices.size(); ++j)
        export_slice(field, slices[j].axis, slices[j].offset,
                     o.out + ".slice" + std::to_string(j) + ".csv");

    auto mask = threshold_mask(field, o.iso);
    std::size_t occupied = 0;
    for (auto m : mask) occupied += m;
    std::printf("normalization = %s\n", fmt17(field.normalization).c_str());
    std::printf("mask_voxels = %zu\n", occupied);
    std::printf("wrote %s.f64\n", o.out.c_str());
    return exit_ok;
}

struct SlabOptions {
    std::string data = "dataset.txt";
    std::size_t frame = 0;
    std::optional<double> eta;
    std::optional<double> t_min;
    std::optional<double> t_max;
    double grid_extent = 1.5;
    int grid_n = 64;
    double clamp_rel = 0.05;
    double iso = 0.5;
    std::string out = "slab";
    std::string slices = "2:0";
};

int cmd_slab(const SlabOptions& o) {
    FarFieldDataset ds = read_dataset(o.data);
    SamplingGrid grid{o.grid_extent, o.grid_n};

    const bool window = o.t_min.has_value() || o.t_max.has_value();
    if (o.eta.has_value() == window)
        throw std::invalid_argument("give either --eta or both --tmin and --tmax");

    IndicatorField field;
    Vec3 x_hat = ds.frames.at(o.frame).x_hat;
    if (o.eta) {
        field = evaluate_slab_field(ds, o.frame, *o.eta, grid);
    } else {
        if (!o.t_min || !o.t_max)
            throw std::invalid_argument("the two-sided slab needs --tmin and --tmax");
        FramePair pair = find_frame_pair(ds, o.frame);
        field = evaluate_ip2_slab_field(ds, pair, *o.t_min, *o.t_max, grid, o.clamp_rel);
    }
    if (field.normalization <= 0.0) throw NoSignalError("slab field is identically zero");

    export_volume(field, o.out);
    auto slices = parse_slices(o.slices);
    for (std::size_t j = 0; j < slices.size(); ++j)
        export_slice(field, slices[j].axis, slices[j].offset,
                     o.out + ".slice" + std::to_string(j) + ".csv");

    std::printf("normalization = %s\n", fmt17(field.normalization).c_str());
    std::printf("centroid = %s\n", fmt17(slab_centroid(field, x_hat, o.iso)).c_str());
    std::printf("wrote %s.f64\n", o.out.c_str());
    return exit_ok;
}

struct NoiseStudyOptions {
    std::string data = "dataset.txt";
    std::size_t frame = 0;
    std::string deltas = "0.3,0.5,0.8";
    int trials = 10;
    std::uint64_t seed = 1;
    bool noise_real = false;
    double true_t0 = 0.0;
    ScanOptions scan;
    std::string out;
};

int cmd_noise_study(const NoiseStudyOptions& o) {
    if (o.trials < 1) throw std::invalid_argument("trials must be positive");
    FarFieldDataset clean = read_dataset(o.data);
    FramePair pair = find_frame_pair(clean, o.frame);
    auto etas = make_eta_grid(o.scan.eta_min, o.scan.eta_max, o.scan.eta_step);
    ScanRegion region{o.scan.region_radius, o.scan.region_samples};

    std::ostringstream csv;
    csv << "delta, trial, seed, eta1, eta2, recovered_t0, t0_error, detected\n";
    for (double delta : parse_numbers(o.deltas, ',', "delta")) {
        int detected = 0, within = 0;
        for (int trial = 0; trial < o.trials; ++trial) {
            std::uint64_t seed = o.seed + static_cast<std::uint64_t>(trial);
            FarFieldDataset noisy =
                add_noise(clean, NoiseSpec{delta, seed, !o.noise_real});
            csv << fmt17(delta) << ", " << trial << ", " << seed << ", ";
            try {
                EtaScan scan = eta_scan(noisy, pair, etas, region, o.scan.clamp_rel);
                SupportInterval iv = detect_support(scan, o.scan.threshold_rel);
                double t0 = recover_t0(iv);
                double err = t0 - o.true_t0;
                ++detected;
                if (std::abs(err) <= 0.1) ++within;
                csv << fmt17(iv.eta1) << ", " << fmt17(iv.eta2) << ", " << fmt17(t0)
                    << ", " << fmt17(err) << ", 1\n";
            } catch (const NoSignalError&) {
                csv << "nan, nan, nan, nan, 0\n";
            }
        }
        std::printf("delta %g: %d/%d detected, %d/%d within 0.1\n", delta, detected,
                    o.trials, within, o.trials);
    }

    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw IoError("cannot open for writing: " + o.out);
        f << csv.str();
        if (!f) throw IoError("write failed: " + o.out);
    } else {
        std::fputs(csv.str().c_str(), stdout);
    }
    return exit_ok;
}

} // namespace

int resolve_thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DSM_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 0; // leave the runtime default
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Multi-frequency far-field synthesis and direct sampling recovery"};
    app.require_subcommand(1, 2);
    app.set_config("--config", "", "TOML config file (flags win over config)");
    app.get_config_formatter_base()->comment('#');

    int threads = 0;
    app.add_option("--threads", threads, "Worker cap (DSM_THREADS as fallback)")
        ->capture_default_str();

    SynthesizeOptions syn;
    CLI::App* c_syn = app.add_subcommand("synthesize", "Generate far-field data");
    c_syn->add_option("--shape", syn.shape, "cube|ball|ellipsoid")->capture_default_str();
    c_syn->add_option("--center", syn.center, "Shape center x,y,z")->capture_default_str();
    c_syn->add_option("--half", syn.half, "Half extents / semi-axes x,y,z")
        ->capture_default_str();
    auto* radius_opt =
        c_syn->add_option("--radius", syn.radius, "Ball radius")->capture_default_str();
    c_syn->add_option("--profile", syn.profile, "constant|cosine-bump")
        ->capture_default_str();
    c_syn->add_option("--polarization", syn.polarization, "Current amplitude x,y,z")
        ->capture_default_str();
    c_syn->add_option("--t0", syn.t0, "Impulse excitation time");
    c_syn->add_option("--tmin", syn.t_min, "Window start");
    c_syn->add_option("--tmax", syn.t_max, "Window end");
    c_syn->add_option("--tau", syn.tau, "Sampled window profile v1,v2,...")
        ->capture_default_str();
    c_syn->add_option("--eps", syn.eps, "Permittivity")->capture_default_str();
    c_syn->add_option("--mu", syn.mu, "Permeability")->capture_default_str();
    c_syn->add_option("--omega-max", syn.omega_max, "Band limit")->capture_default_str();
    c_syn->add_option("--n-omega", syn.n_omega, "Frequency count")->capture_default_str();
    c_syn->add_option("--nq", syn.n_q, "Quadrature order per axis")->capture_default_str();
    c_syn->add_option("--directions", syn.directions, "x,y,z;x,y,z;...")
        ->capture_default_str();
    c_syn->add_flag("--no-opposites", syn.no_opposites,
                    "Do not add the opposite of each direction");
    c_syn->add_option("--noise-delta", syn.noise_delta, "Relative noise level")
        ->capture_default_str();
    c_syn->add_option("--noise-seed", syn.noise_seed, "Noise seed")->capture_default_str();
    c_syn->add_flag("--noise-real", syn.noise_real, "Real instead of complex noise");
    c_syn->add_option("--out", syn.out, "Output dataset path")->capture_default_str();

    RecoverOptions rec;
    CLI::App* c_rec = app.add_subcommand("recover-time", "Scan eta and recover times");
    c_rec->add_option("--data", rec.data, "Dataset path")->capture_default_str();
    c_rec->add_option("--frame", rec.frame, "Plus-direction frame index")
        ->capture_default_str();
    c_rec->add_option("--mode", rec.mode, "t0|tmax|tmin")->capture_default_str();
    c_rec->add_option("--tmin", rec.known_tmin, "Known t_min (mode tmax)");
    c_rec->add_option("--tmax", rec.known_tmax, "Known t_max (mode tmin)");
    add_scan_options(c_rec, rec.scan);
    c_rec->add_option("--scan-out", rec.scan_out, "Write the eta scan here")
        ->capture_default_str();

    ReconstructOptions recon;
    CLI::App* c_recon = app.add_subcommand("reconstruct", "Hull field on the grid");
    c_recon->add_option("--data", recon.data, "Dataset path")->capture_default_str();
    c_recon->add_option("--t0", recon.t0, "Known excitation time");
    c_recon->add_flag("--auto-t0", recon.auto_t0, "Recover t0 from --frame's pair first");
    c_recon->add_option("--frame", recon.frame, "Frame for --auto-t0")
        ->capture_default_str();
    c_recon->add_option("--frames", recon.frames, "Frame indices i,j,... (default all)")
        ->capture_default_str();
    c_recon->add_option("--grid-extent", recon.grid_extent, "Grid half extent")
        ->capture_default_str();
    c_recon->add_option("--grid-n", recon.grid_n, "Grid resolution")->capture_default_str();
    c_recon->add_option("--clamp-rel", recon.clamp_rel, "Relative clamp floor")
        ->capture_default_str();
    c_recon->add_option("--iso", recon.iso, "Mask iso level")->capture_default_str();
    add_scan_options(c_recon, recon.scan, false); // --clamp-rel above covers the scan too
    c_recon->add_option("--out", recon.out, "Output volume base path")
        ->capture_default_str();
    c_recon->add_option("--slices", recon.slices, "axis:offset;... CSV slices")
        ->capture_default_str();

    SlabOptions slab;
    CLI::App* c_slab = app.add_subcommand("slab", "Single-direction slab field");
    c_slab->add_option("--data", slab.data, "Dataset path")->capture_default_str();
    c_slab->add_option("--frame", slab.frame, "Frame index")->capture_default_str();
    c_slab->add_option("--eta", slab.eta, "Time sampling parameter");
    c_slab->add_option("--tmin", slab.t_min, "Window start (two-sided slab)");
    c_slab->add_option("--tmax", slab.t_max, "Window end (two-sided slab)");
    c_slab->add_option("--grid-extent", slab.grid_extent, "Grid half extent")
        ->capture_default_str();
    c_slab->add_option("--grid-n", slab.grid_n, "Grid resolution")->capture_default_str();
    c_slab->add_option("--clamp-rel", slab.clamp_rel, "Relative clamp floor")
        ->capture_default_str();
    c_slab->add_option("--iso", slab.iso, "Centroid iso level")->capture_default_str();
    c_slab->add_option("--out", slab.out, "Output volume base path")->capture_default_str();
    c_slab->add_option("--slices", slab.slices, "axis:offset;... CSV slices")
        ->capture_default_str();

    NoiseStudyOptions noise;
    CLI::App* c_noise = app.add_subcommand("noise-study", "Noise robustness table");
    c_noise->add_option("--data", noise.data, "Clean dataset path")->capture_default_str();
    c_noise->add_option("--frame", noise.frame, "Plus-direction frame index")
        ->capture_default_str();
    c_noise->add_option("--deltas", noise.deltas, "Noise levels d1,d2,...")
        ->capture_default_str();
    c_noise->add_option("--trials", noise.trials, "Trials per level")
        ->capture_default_str();
    c_noise->add_option("--seed", noise.seed, "Base seed (trial i uses seed+i)")
        ->capture_default_str();
    c_noise->add_flag("--noise-real", noise.noise_real, "Real instead of complex noise");
    c_noise->add_option("--true-t0", noise.true_t0, "Ground truth for the error column")
        ->capture_default_str();
    add_scan_options(c_noise, noise.scan);
    c_noise->add_option("--out", noise.out, "CSV table path (default stdout)")
        ->capture_default_str();

    std::string export_out;
    CLI::App* c_export =
        app.add_subcommand("export-config", "Dump the effective TOML config");
    c_export->add_option("--out", export_out, "Config path (default stdout)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }
    syn.use_radius = radius_opt->count() > 0;

#ifdef _OPENMP
    if (int n = resolve_thread_count(threads); n > 0) omp_set_num_threads(n);
#endif

    try {
        if (c_export->parsed()) {
            std::string text = app.config_to_str(true, false);
            if (export_out.empty()) {
                std::fputs(text.c_str(), stdout);
            } else {
                std::ofstream f(export_out, std::ios::binary);
                if (!f) throw IoError("cannot open for writing: " + export_out);
                f << text;
                if (!f) throw IoError("write failed: " + export_out);
            }
            // export-config alone dumps and stops; combined with another
            // subcommand it acts as a dry run of that command's config.
            return exit_ok;
        }
        if (c_syn->parsed()) return cmd_synthesize(syn);
        if (c_rec->parsed()) return cmd_recover_time(rec);
        if (c_recon->parsed()) return cmd_reconstruct(recon);
        if (c_slab->parsed()) return cmd_slab(slab);
        if (c_noise->parsed()) return cmd_noise_study(noise);
        std::fprintf(stderr, "error: no subcommand given\n");
        return exit_validation;
    } catch (const NoSignalError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_no_signal;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    } catch (const FormatError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_validation;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_validation;
    }
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("dsm");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace dsm
