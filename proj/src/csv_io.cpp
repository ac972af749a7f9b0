#include "hrs/csv_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hrs {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << std::setprecision(17);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return in;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

void expect_header(const std::string& got, const std::string& want, const std::string& path) {
    if (got != want) {
        throw std::runtime_error(path + ": expected header '" + want + "', got '" + got + "'");
    }
}

}  // namespace

void write_fer_curve_csv(const std::string& path, const FerCurve& curve) {
    auto out = open_out(path);
    out << "snr_linear,fer,frames,errors\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out << curve.snr[i] << ',' << curve.fer[i] << ','
            << (i < curve.frames.size() ? curve.frames[i] : 0) << ','
            << (i < curve.errors.size() ? curve.errors[i] : 0) << '\n';
    }
}

FerCurve read_fer_curve_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    expect_header(line, "snr_linear,fer,frames,errors", path);
    FerCurve c;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 4) throw std::runtime_error(path + ": malformed row '" + line + "'");
        c.snr.push_back(std::stod(f[0]));
        c.fer.push_back(std::stod(f[1]));
        c.frames.push_back(std::stoull(f[2]));
        c.errors.push_back(std::stoull(f[3]));
    }
    return c;
}

void write_threshold_csv(const std::string& path, const ThresholdSet& set) {
    auto out = open_out(path);
    out << "d,gamma_t_linear,gamma_t_db,provenance\n";
    for (const auto& e : set.entries) {
        out << e.d << ',' << e.gamma_t << ',' << 10.0 * std::log10(e.gamma_t) << ','
            << to_string(e.provenance) << '\n';
    }
}

ThresholdSet read_threshold_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    expect_header(line, "d,gamma_t_linear,gamma_t_db,provenance", path);
    ThresholdSet set;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 4) throw std::runtime_error(path + ": malformed row '" + line + "'");
        ThresholdEntry e;
        e.d = std::stoi(f[0]);
        e.gamma_t = std::stod(f[1]);
        e.provenance = provenance_from_string(f[3]);
        set.entries.push_back(e);
    }
    return set;
}

void write_sim_csv(const std::string& path, const std::vector<SimPoint>& points, Scheme scheme) {
    auto out = open_out(path);
    out << "snr_db,scheme,frames,errors,fer,ci_low,ci_high\n";
    for (const auto& p : points) {
        out << p.snr_db << ',' << to_string(scheme) << ',' << p.frames << ',' << p.errors << ','
            << p.fer << ',' << p.ci_lo << ',' << p.ci_hi << '\n';
    }
}

std::vector<SimSeries> read_sim_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    expect_header(line, "snr_db,scheme,frames,errors,fer,ci_low,ci_high", path);
    std::vector<SimSeries> series;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 7) throw std::runtime_error(path + ": malformed row '" + line + "'");
        SimPoint p;
        p.snr_db = std::stod(f[0]);
        p.frames = std::stoull(f[2]);
        p.errors = std::stoull(f[3]);
        p.fer = std::stod(f[4]);
        p.ci_lo = std::stod(f[5]);
        p.ci_hi = std::stod(f[6]);
        SimSeries* s = nullptr;
        for (auto& existing : series) {
            if (existing.scheme == f[1]) s = &existing;
        }
        if (!s) {
            series.push_back({f[1], {}});
            s = &series.back();
        }
        s->points.push_back(p);
    }
    return series;
}

void write_fer_points_csv(const std::string& path, const std::vector<FerPoint>& points) {
    auto out = open_out(path);
    out << "snr_db,fer_analytical,fer_asymptotic,scheme\n";
    for (const auto& p : points) {
        out << p.avg_snr_db << ',' << p.fer_analytical << ',' << p.fer_asymptotic << ','
            << p.scheme << '\n';
    }
}

std::vector<FerPoint> read_fer_points_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    expect_header(line, "snr_db,fer_analytical,fer_asymptotic,scheme", path);
    std::vector<FerPoint> points;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 4) throw std::runtime_error(path + ": malformed row '" + line + "'");
        FerPoint p;
        p.avg_snr_db = std::stod(f[0]);
        p.fer_analytical = std::stod(f[1]);
        p.fer_asymptotic = std::stod(f[2]);
        p.scheme = f[3];
        p.asymptotic_valid = p.fer_asymptotic <= 1.0;
        points.push_back(p);
    }
    return points;
}

std::vector<ComparisonRow> make_comparison(const std::vector<SimPoint>& sim,
                                           const std::vector<FerPoint>& analysis) {
    if (sim.size() != analysis.size()) {
        throw std::invalid_argument("make_comparison: grids differ in length");
    }
    std::vector<ComparisonRow> rows;
    rows.reserve(sim.size());
    for (std::size_t i = 0; i < sim.size(); ++i) {
        if (std::abs(sim[i].snr_db - analysis[i].avg_snr_db) > 1e-9) {
            throw std::invalid_argument("make_comparison: grid mismatch at row " +
                                        std::to_string(i));
        }
        ComparisonRow r;
        r.snr_db = sim[i].snr_db;
        r.fer_sim = sim[i].fer;
        r.ci_lo = sim[i].ci_lo;
        r.ci_hi = sim[i].ci_hi;
        r.errors = sim[i].errors;
        r.fer_analytical = analysis[i].fer_analytical;
        r.fer_asymptotic = analysis[i].fer_asymptotic;
        if (r.fer_sim > 0.0) {
            r.rel_err_analytical = std::abs(r.fer_analytical - r.fer_sim) / r.fer_sim;
            r.rel_err_asymptotic = std::abs(r.fer_asymptotic - r.fer_sim) / r.fer_sim;
        }
        rows.push_back(r);
    }
    return rows;
}

void write_comparison_csv(const std::string& path, const std::vector<ComparisonRow>& rows) {
    auto out = open_out(path);
    out << "snr_db,fer_sim,ci_low,ci_high,errors,fer_analytical,fer_asymptotic,fer_legacy,"
           "rel_err_analytical,rel_err_asymptotic\n";
    const auto cell = [&](double v) {
        if (std::isnan(v)) {
            out << ',';
        } else {
            out << v << ',';
        }
    };
    for (const auto& r : rows) {
        out << r.snr_db << ',';
        cell(r.fer_sim);
        cell(r.ci_lo);
        cell(r.ci_hi);
        out << r.errors << ',';
        cell(r.fer_analytical);
        cell(r.fer_asymptotic);
        cell(r.fer_legacy);
        cell(r.rel_err_analytical);
        if (std::isnan(r.rel_err_asymptotic)) {
            out << '\n';
        } else {
            out << r.rel_err_asymptotic << '\n';
        }
    }
}

}  // namespace hrs
