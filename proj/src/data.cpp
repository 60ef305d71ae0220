#include "dsm/data.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dsm/errors.hpp"

namespace dsm {

namespace {

using std::complex;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Strict numeric parsers: the whole token must be consumed.
double parse_double(const std::string& tok, std::size_t line) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw FormatError("expected a number, got '" + tok + "'", line);
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size())
        throw FormatError("trailing characters after number '" + tok + "'", line);
    return v;
}

long parse_long(const std::string& tok, std::size_t line) {
    double v = parse_double(tok, line);
    long l = static_cast<long>(v);
    if (static_cast<double>(l) != v)
        throw FormatError("expected an integer, got '" + tok + "'", line);
    return l;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Consumes "prefix" from the front of line or fails with the line number.
std::string expect_prefix(const std::string& line_text, const std::string& prefix,
                          std::size_t line) {
    if (line_text.rfind(prefix, 0) != 0)
        throw FormatError("expected '" + prefix + "...'", line);
    return line_text.substr(prefix.size());
}

void check_frame(const ObservationFrame& f, std::size_t line) {
    if (std::abs(f.x_hat.norm() - 1.0) > 1e-9)
        throw FormatError("non-unit direction", line);
    if (std::abs(f.p_hat.norm() - 1.0) > 1e-9)
        throw FormatError("non-unit polarization", line);
    if (std::abs(f.x_hat.dot(f.p_hat)) > 1e-9)
        throw FormatError("polarization not orthogonal to direction", line);
}

} // namespace

std::vector<double> FrequencyGrid::values() const {
    std::vector<double> v(n_omega);
    for (int n = 1; n <= n_omega; ++n) v[n - 1] = omega(n);
    return v;
}

void FrequencyGrid::validate() const {
    if (!(omega_max > 0.0)) throw std::invalid_argument("omega_max must be positive");
    if (n_omega < 2) throw std::invalid_argument("n_omega must be at least 2");
}

void FarFieldDataset::validate() const {
    grid.validate();
    if (!(eps > 0.0) || !(mu > 0.0))
        throw std::invalid_argument("eps and mu must be positive");
    if (frames.empty()) throw std::invalid_argument("dataset has no frames");
    if (values.size() != frames.size() * static_cast<std::size_t>(grid.n_omega))
        throw std::invalid_argument("values size does not match frames x n_omega");
    for (const auto& f : frames) {
        if (std::abs(f.x_hat.norm() - 1.0) > 1e-9 ||
            std::abs(f.p_hat.norm() - 1.0) > 1e-9 ||
            std::abs(f.x_hat.dot(f.p_hat)) > 1e-9)
            throw std::invalid_argument("frame vectors must be orthonormal");
    }
}

int FarFieldDataset::find_opposite(std::size_t frame) const {
    for (std::size_t j = 0; j < frames.size(); ++j) {
        if (j == frame) continue;
        if (frames[frame].x_hat.dot(frames[j].x_hat) < -(1.0 - 1e-9))
            return static_cast<int>(j);
    }
    return -1;
}

std::complex<double> preprocess(const CVec3& value, const ObservationFrame& frame,
                                double omega, double mu) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    complex<double> proj = frame.p_hat.x() * value.x() + frame.p_hat.y() * value.y() +
                           frame.p_hat.z() * value.z();
    return proj / (complex<double>(0.0, 1.0) * omega * mu);
}

void NoiseSpec::validate() const {
    if (!(delta >= 0.0)) throw std::invalid_argument("noise delta must be nonnegative");
}

FarFieldDataset add_noise(const FarFieldDataset& dataset, const NoiseSpec& spec) {
    spec.validate();
    FarFieldDataset out = dataset;
    if (spec.delta == 0.0) return out;

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (auto& v : out.values) {
        for (int c = 0; c < 3; ++c) {
            complex<double> xi;
            if (spec.complex_noise) {
                double re = normal(rng), im = normal(rng);
                xi = complex<double>(re, im) * inv_sqrt2;
            } else {
                xi = normal(rng);
            }
            v[c] *= 1.0 + spec.delta * xi;
        }
    }
    return out;
}

void write_dataset(const FarFieldDataset& dataset, const std::filesystem::path& path) {
    dataset.validate();
    std::ofstream out(path, std::ios::binary); // binary: LF endings everywhere
    if (!out) throw IoError("cannot open for writing: " + path.string());

    out << "# dsm-farfield v1\n";
    out << "# eps = " << fmt17(dataset.eps) << "  mu = " << fmt17(dataset.mu) << "\n";
    out << "# omega_max = " << fmt17(dataset.grid.omega_max)
        << "  n_omega = " << dataset.grid.n_omega << "\n";
    out << "# frames = " << dataset.frames.size() << "\n";
    for (std::size_t j = 0; j < dataset.frames.size(); ++j) {
        const auto& f = dataset.frames[j];
        out << "# frame " << j << " : xhat = " << fmt17(f.x_hat.x()) << " "
            << fmt17(f.x_hat.y()) << " " << fmt17(f.x_hat.z())
            << " ; phat = " << fmt17(f.p_hat.x()) << " " << fmt17(f.p_hat.y()) << " "
            << fmt17(f.p_hat.z()) << "\n";
    }
    if (!dataset.provenance.empty())
        out << "# provenance = " << dataset.provenance << "\n";
    out << "frame_index, omega_index, ReE1, ImE1, ReE2, ImE2, ReE3, ImE3\n";
    for (std::size_t j = 0; j < dataset.frames.size(); ++j) {
        for (int n = 1; n <= dataset.grid.n_omega; ++n) {
            const CVec3& v = dataset.at(j, n);
            out << j << ", " << n;
            for (int c = 0; c < 3; ++c)
                out << ", " << fmt17(v[c].real()) << ", " << fmt17(v[c].imag());
            out << "\n";
        }
    }
    if (!out) throw IoError("write failed: " + path.string());
}

FarFieldDataset read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());

    FarFieldDataset ds;
    std::string text;
    std::size_t line = 0;
    auto next_line = [&]() -> std::string {
        if (!std::getline(in, text))
            throw FormatError("unexpected end of file", line);
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        return text;
    };

    if (next_line() != "# dsm-farfield v1")
        throw FormatError("missing '# dsm-farfield v1' signature", line);

    {
        std::string rest = expect_prefix(next_line(), "# eps = ", line);
        auto parts = split(rest, ' ');
        std::vector<std::string> toks;
        for (auto& p : parts)
            if (!trim(p).empty()) toks.push_back(trim(p));
        if (toks.size() != 4 || toks[1] != "mu" || toks[2] != "=")
            throw FormatError("malformed medium line", line);
        ds.eps = parse_double(toks[0], line);
        ds.mu = parse_double(toks[3], line);
    }
    {
        std::string rest = expect_prefix(next_line(), "# omega_max = ", line);
        auto parts = split(rest, ' ');
        std::vector<std::string> toks;
        for (auto& p : parts)
            if (!trim(p).empty()) toks.push_back(trim(p));
        if (toks.size() != 4 || toks[1] != "n_omega" || toks[2] != "=")
            throw FormatError("malformed grid line", line);
        ds.grid.omega_max = parse_double(toks[0], line);
        ds.grid.n_omega = static_cast<int>(parse_long(toks[3], line));
    }
    std::size_t n_frames = 0;
    {
        std::string rest = expect_prefix(next_line(), "# frames = ", line);
        long k = parse_long(trim(rest), line);
        if (k <= 0) throw FormatError("frame count must be positive", line);
        n_frames = static_cast<std::size_t>(k);
    }
    for (std::size_t j = 0; j < n_frames; ++j) {
        std::string rest = expect_prefix(next_line(), "# frame ", line);
        auto sides = split(rest, ';');
        if (sides.size() != 2) throw FormatError("malformed frame line", line);
        std::vector<std::string> lt, rt;
        for (auto& p : split(sides[0], ' '))
            if (!trim(p).empty()) lt.push_back(trim(p));
        for (auto& p : split(sides[1], ' '))
            if (!trim(p).empty()) rt.push_back(trim(p));
        // lt: <j> : xhat = x y z    rt: phat = x y z
        if (lt.size() != 7 || lt[1] != ":" || lt[2] != "xhat" || lt[3] != "=" ||
            rt.size() != 5 || rt[0] != "phat" || rt[1] != "=")
            throw FormatError("malformed frame line", line);
        if (parse_long(lt[0], line) != static_cast<long>(j))
            throw FormatError("frame lines out of order", line);
        ObservationFrame f;
        f.x_hat = Vec3(parse_double(lt[4], line), parse_double(lt[5], line),
                       parse_double(lt[6], line));
        f.p_hat = Vec3(parse_double(rt[2], line), parse_double(rt[3], line),
                       parse_double(rt[4], line));
        check_frame(f, line);
        ds.frames.push_back(f);
    }

    // Optional provenance comment, then the mandatory column header.
    std::string header = next_line();
    if (header.rfind("# provenance = ", 0) == 0) {
        ds.provenance = header.substr(std::string("# provenance = ").size());
        header = next_line();
    }
    if (header != "frame_index, omega_index, ReE1, ImE1, ReE2, ImE2, ReE3, ImE3")
        throw FormatError("malformed column header", line);

    ds.grid.validate();
    ds.values.resize(n_frames * static_cast<std::size_t>(ds.grid.n_omega));
    std::size_t rows = 0;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (trim(text).empty()) continue;
        if (rows >= ds.values.size())
            throw FormatError("more value rows than frames x n_omega", line);
        auto toks = split(text, ',');
        if (toks.size() != 8) throw FormatError("expected 8 comma-separated fields", line);
        long fi = parse_long(trim(toks[0]), line);
        long oi = parse_long(trim(toks[1]), line);
        long expect_f = static_cast<long>(rows) / ds.grid.n_omega;
        long expect_o = static_cast<long>(rows) % ds.grid.n_omega + 1;
        if (fi != expect_f || oi != expect_o)
            throw FormatError("value rows out of order (expected frame " +
                                  std::to_string(expect_f) + ", omega_index " +
                                  std::to_string(expect_o) + ")",
                              line);
        CVec3 v;
        for (int c = 0; c < 3; ++c)
            v[c] = complex<double>(parse_double(trim(toks[2 + 2 * c]), line),
                                   parse_double(trim(toks[3 + 2 * c]), line));
        ds.values[rows++] = v;
    }
    if (rows != ds.values.size())
        throw FormatError("row count " + std::to_string(rows) + " does not match frames x n_omega = " +
                              std::to_string(ds.values.size()),
                          line + 1);

    ds.validate();
    return ds;
}

} // namespace dsm
