#include "sshk/report.hpp"

#include <sstream>

#include <json.hpp>

namespace sshk {

std::string GradedReport::to_json() const {
    nlohmann::json j;
    j["homology"] = nlohmann::json::object();
    for (const auto& [deg, entry] : homology) {
        j["homology"][std::to_string(deg)] = {
            {"group", entry.value.render()},
            {"provenance", entry.provenance},
        };
        if (!entry.value.resolved) {
            j["homology"][std::to_string(deg)]["pieces"] = {
                {"sub", entry.value.sub.render()},
                {"quot", entry.value.quot.render()},
            };
        }
    }
    if (k_theory) {
        j["k_theory"] = {
            {"K0", k_theory->k0.render()},
            {"K1", k_theory->k1.render()},
            {"provenance", k_theory->provenance},
        };
        if (k_theory->unit_class) j["k_theory"]["unit_class"] = *k_theory->unit_class;
    }
    j["flags"] = flags;
    return j.dump(2) + "\n";
}

std::string GradedReport::render_table() const {
    std::ostringstream os;
    for (const auto& [deg, entry] : homology)
        os << "H_" << deg << " = " << entry.value.render() << "    [" << entry.provenance
           << "]\n";
    if (k_theory) {
        os << "K_0 = " << k_theory->k0.render() << "    [" << k_theory->provenance << "]\n";
        os << "K_1 = " << k_theory->k1.render() << "    [" << k_theory->provenance << "]\n";
        if (k_theory->unit_class) os << "[1]_0 = " << *k_theory->unit_class << "\n";
    }
    for (const auto& f : flags) os << "note: " << f << "\n";
    return os.str();
}

}  // namespace sshk
