#include "geoconn/report.hpp"

#include <json.hpp>
#include <sstream>

namespace geoconn {

std::string report_to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["components"] = r.components;
    j["connected_geom"] = r.connected_geom;
    j["dim_r"] = r.dim_r;
    if (r.ell)
        j["ell"] = *r.ell;
    else
        j["ell"] = nullptr;
    if (r.stab_n)
        j["stab_n"] = *r.stab_n;
    else
        j["stab_n"] = nullptr;
    j["hsop"] = nlohmann::ordered_json::array();
    for (const auto& [form, degree] : r.hsop)
        j["hsop"].push_back({{"form", form}, {"degree", degree}});
    j["chain"] = r.chain;
    j["strategy"] = r.strategy;
    j["certified"] = r.certified;
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    for (const auto& t : r.timings) timings[t.name] = t.ms;
    j["timings_ms"] = timings;
    return j.dump(2);
}

std::string report_to_text(const RunReport& r) {
    std::ostringstream out;
    out << "components: " << r.components << "\n";
    out << "geometrically connected: " << (r.connected_geom ? "yes" : "no") << "\n";
    out << "dim R: " << r.dim_r << "\n";
    if (r.ell) out << "ell: " << *r.ell << "\n";
    if (r.stab_n) out << "stabilized at t = " << *r.stab_n << "\n";
    if (!r.hsop.empty()) {
        out << "hsop:";
        for (const auto& [form, degree] : r.hsop)
            out << " (" << form << ", deg " << degree << ")";
        out << "\n";
    }
    if (!r.chain.empty()) {
        out << "image chain:";
        for (auto d : r.chain) out << " " << d;
        out << "\n";
    }
    out << "strategy: " << r.strategy << (r.certified ? " (certified)" : " (UNCERTIFIED)")
        << "\n";
    return out.str();
}

} // namespace geoconn
