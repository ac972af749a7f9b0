#include "hrs/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hrs {

namespace {

using nlohmann::json;

Scenario base_preset(int case_id) {
    Scenario sc;
    sc.omega0 = 1.0;
    sc.omega1 = {1.0};
    sc.omega2 = {1.0};
    sc.frame_len = 100;
    sc.grid = {0.0, 40.0, 2.5};
    sc.stop = {200, 2'000'000};
    switch (case_id) {
        case 0:
            sc.scheme = Scheme::mimo;
            sc.mimo_nt = 1;
            sc.grid = {0.0, 17.5, 2.5};
            break;
        case 1:
            break;
        case 2:
            sc.omega1 = {16.0};
            break;
        case 3:
            sc.omega1 = {1.0 / 16.0};
            break;
        case 4:
            sc.coding.code = ConvCode::rate_half_k3();
            sc.grid = {0.0, 20.0, 2.0};
            break;
        case 5:
            sc.coding.code = ConvCode::rate_half_k3();
            sc.frame_len = 200;
            sc.grid = {0.0, 20.0, 2.0};
            break;
        case 6:
            sc.coding.code = ConvCode::rate_two_thirds();
            sc.grid = {0.0, 20.0, 2.0};
            break;
        case 7:
            sc.coding.code = ConvCode::rate_two_thirds();
            sc.frame_len = 200;
            sc.grid = {0.0, 20.0, 2.0};
            break;
        default:
            throw std::invalid_argument("preset_scenario: case must be 0..7");
    }
    sc.name = "case" + std::to_string(case_id);
    return sc;
}

}  // namespace

Scenario preset_scenario(int case_id, int n) {
    return preset_scenario(case_id, n, case_id == 0 ? Scheme::mimo : Scheme::hrs);
}

Scenario preset_scenario(int case_id, int n, Scheme scheme) {
    if (n < 1) throw std::invalid_argument("preset_scenario: n must be >= 1");
    Scenario sc = base_preset(case_id);
    sc.scheme = scheme;
    sc.n = n;
    if (scheme != Scheme::mimo) {
        sc.omega1.assign(static_cast<std::size_t>(n), sc.omega1[0]);
        sc.omega2.assign(static_cast<std::size_t>(n), sc.omega2[0]);
    }
    sc.name += "_n" + std::to_string(n);
    if (scheme != Scheme::hrs && case_id != 0) sc.name += "_" + to_string(scheme);
    return sc;
}

ConvCode code_from_spec(const std::string& spec) {
    std::vector<std::vector<unsigned>> rows;
    std::stringstream row_stream(spec);
    std::string row;
    while (std::getline(row_stream, row, ';')) {
        std::vector<unsigned> entries;
        std::stringstream entry_stream(row);
        std::string tok;
        while (std::getline(entry_stream, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("code_from_spec: empty entry");
            std::size_t pos = 0;
            const unsigned long v = std::stoul(tok, &pos, 8);
            if (pos != tok.size()) {
                throw std::invalid_argument("code_from_spec: bad octal entry '" + tok + "'");
            }
            entries.push_back(static_cast<unsigned>(v));
        }
        rows.push_back(entries);
    }
    return ConvCode::from_octal(rows);
}

namespace {

const std::set<std::string> kTopKeys = {
    "case", "scheme", "n", "omega0", "omega1", "omega2", "frame_len",
    "code", "snr_grid_db", "stop_rule", "seed", "threads",
};

std::vector<double> omega_list(const json& v, const std::string& key) {
    std::vector<double> out;
    if (v.is_number()) {
        out.push_back(v.get<double>());
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (!e.is_number()) throw std::invalid_argument("scenario: " + key + " must be numeric");
            out.push_back(e.get<double>());
        }
    } else {
        throw std::invalid_argument("scenario: " + key + " must be a number or array");
    }
    return out;
}

ConvCode code_from_json(const json& j) {
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (k != "rate" && k != "generators_octal") {
            throw std::invalid_argument("scenario: unknown key code." + k);
        }
    }
    if (!j.contains("generators_octal")) {
        throw std::invalid_argument("scenario: code.generators_octal missing");
    }
    std::vector<std::vector<unsigned>> rows;
    for (const auto& row : j.at("generators_octal")) {
        std::vector<unsigned> r;
        for (const auto& e : row) {
            if (e.is_string()) {
                r.push_back(static_cast<unsigned>(std::stoul(e.get<std::string>(), nullptr, 8)));
            } else if (e.is_number_unsigned() || e.is_number_integer()) {
                // numeric entries are read as written octal digits, e.g. 23 -> 023
                r.push_back(static_cast<unsigned>(
                    std::stoul(std::to_string(e.get<long long>()), nullptr, 8)));
            } else {
                throw std::invalid_argument("scenario: generator entries must be octal strings");
            }
        }
        rows.push_back(r);
    }
    ConvCode code = ConvCode::from_octal(rows);
    if (j.contains("rate")) {
        const std::string rate = j.at("rate").get<std::string>();
        const std::string actual =
            std::to_string(code.k_in()) + "/" + std::to_string(code.n_out());
        if (rate != actual) {
            throw std::invalid_argument("scenario: code.rate " + rate +
                                        " does not match generator matrix (" + actual + ")");
        }
    }
    return code;
}

}  // namespace

Scenario parse_scenario_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("scenario: top level must be an object");
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (!kTopKeys.count(k)) throw std::invalid_argument("scenario: unknown key " + k);
    }

    Scenario sc;
    if (j.contains("case")) {
        const int case_id = j.at("case").get<int>();
        if (!j.contains("n")) throw std::invalid_argument("scenario: presets need n");
        sc = preset_scenario(case_id, j.at("n").get<int>());
    } else {
        sc.name = "custom";
        sc.omega1 = {1.0};
        sc.omega2 = {1.0};
    }
    if (j.contains("scheme")) sc.scheme = scheme_from_string(j.at("scheme").get<std::string>());
    if (j.contains("n")) sc.n = j.at("n").get<int>();
    if (j.contains("omega0")) sc.omega0 = j.at("omega0").get<double>();
    if (j.contains("omega1")) sc.omega1 = omega_list(j.at("omega1"), "omega1");
    if (j.contains("omega2")) sc.omega2 = omega_list(j.at("omega2"), "omega2");
    if (j.contains("frame_len")) sc.frame_len = j.at("frame_len").get<int>();
    if (j.contains("code")) {
        if (j.at("code").is_null()) {
            sc.coding.code.reset();
        } else {
            sc.coding.code = code_from_json(j.at("code"));
        }
    }
    if (j.contains("snr_grid_db")) {
        const json& g = j.at("snr_grid_db");
        for (const auto& [k, v] : g.items()) {
            (void)v;
            if (k != "start" && k != "stop" && k != "step") {
                throw std::invalid_argument("scenario: unknown key snr_grid_db." + k);
            }
        }
        sc.grid.start_db = g.at("start").get<double>();
        sc.grid.stop_db = g.at("stop").get<double>();
        sc.grid.step_db = g.at("step").get<double>();
    }
    if (j.contains("stop_rule")) {
        const json& s = j.at("stop_rule");
        for (const auto& [k, v] : s.items()) {
            (void)v;
            if (k != "min_errors" && k != "max_frames") {
                throw std::invalid_argument("scenario: unknown key stop_rule." + k);
            }
        }
        if (s.contains("min_errors")) sc.stop.min_errors = s.at("min_errors").get<std::uint64_t>();
        if (s.contains("max_frames")) sc.stop.max_frames = s.at("max_frames").get<std::uint64_t>();
    }
    if (j.contains("seed")) sc.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) sc.threads = j.at("threads").get<int>();

    // broadcast scalar gains to length n
    if (sc.omega1.size() == 1 && sc.n > 1) sc.omega1.assign(static_cast<std::size_t>(sc.n), sc.omega1[0]);
    if (sc.omega2.size() == 1 && sc.n > 1) sc.omega2.assign(static_cast<std::size_t>(sc.n), sc.omega2[0]);
    sc.validate();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_scenario: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario_json(ss.str());
}

}  // namespace hrs
