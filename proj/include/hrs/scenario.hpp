#pragma once

#include <string>

#include "hrs/simulator.hpp"

namespace hrs {

/// Built-in scenario presets. Every preset is a family over the node
/// count, so `n` (relays; receive antennas for the diversity baseline)
/// must be chosen when instantiating.
///
///   0: diversity baseline, uncoded, L=100, unit gains
///   1: hybrid relay selection, uncoded, L=100, unit gains
///   2: as 1 with strong source-relay links (omega1 = 16)
///   3: as 1 with weak source-relay links (omega1 = 1/16)
///   4: coded rate-1/2, L=100, unit gains
///   5: coded rate-1/2, L=200
///   6: coded rate-2/3, L=100
///   7: coded rate-2/3, L=200
Scenario preset_scenario(int case_id, int n);

/// Scheme variant of a preset (the coded presets can also run the
/// all-AF / ideal-DF selection schemes for comparison).
Scenario preset_scenario(int case_id, int n, Scheme scheme);

/// Loads a scenario from a JSON file. Either "case" (with "n") or the
/// explicit keys must be present; explicit keys override the preset.
/// Unknown keys are rejected; schema violations throw with the offending
/// key in the message.
Scenario load_scenario(const std::string& path);

/// Parses a scenario from a JSON string (same schema as load_scenario).
Scenario parse_scenario_json(const std::string& text);

/// Parses a generator matrix written as octal digits, rows separated by
/// ';', entries by ',': "5,7" or "23,35,0;0,5,13".
ConvCode code_from_spec(const std::string& spec);

}  // namespace hrs
