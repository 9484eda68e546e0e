#pragma once

#include <json.hpp>

#include "wpl/tilting.hpp"

namespace wpl {

inline void to_json(nlohmann::json& j, const TraceStep& s) {
    j = nlohmann::json{{"rule", s.rule}, {"anchor", s.anchor}, {"detail", s.detail}};
    if (s.value) j["value"] = *s.value;
}

inline void to_json(nlohmann::json& j, const HomResult& r) {
    j = nlohmann::json{{"trace", r.trace}};
    if (r.value) j["dim"] = *r.value;
    else j["unknown"] = true;
}

inline void to_json(nlohmann::json& j, const MatrixCell& c) {
    j = nlohmann::json{{"from", c.from}, {"to", c.to}, {"n", c.n}, {"trace", c.result.trace}};
    if (c.result.value) j["dim"] = *c.result.value;
    else j["unknown"] = true;
}

inline void to_json(nlohmann::json& j, const SlopeCertificate& c) {
    j = nlohmann::json{{"from", c.from},
                       {"to", c.to},
                       {"side", c.side},
                       {"first_off_window", c.first_off_window},
                       {"detail", c.detail},
                       {"holds", c.holds}};
}

inline void to_json(nlohmann::json& j, const TiltingReport& r) {
    nlohmann::json summands = nlohmann::json::array();
    for (const auto& s : r.summands) summands.push_back(to_string(s));
    j = nlohmann::json{{"object", to_string(r.kind)},
                       {"summands", summands},
                       {"window", r.window},
                       {"cells", r.cells},
                       {"endo_table", r.endo},
                       {"endo_total", r.endo_total()},
                       {"certificates", r.certificates},
                       {"verdict", r.verdict},
                       {"problems", r.problems},
                       {"relation_note", r.relation_note}};
}

inline void to_json(nlohmann::json& j, const ScanReport& r) {
    j = nlohmann::json{{"twist_window", r.twist_window},
                       {"bundle_count", r.bundle_count},
                       {"pair_count", r.pair_count},
                       {"closed_count", r.closed_count},
                       {"unknown_count", r.unknown_count},
                       {"unknown_rate", r.unknown_rate()},
                       {"violations", r.violations},
                       {"unknown_samples", r.unknown_samples}};
}

} // namespace wpl
