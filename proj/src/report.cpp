#include "innerpost/report.hpp"

#include "innerpost/document.hpp"

#include <algorithm>
#include <sstream>

namespace innerpost {

void Report::verdict(std::string check, bool pass, std::string detail) {
    verdicts_.push_back({std::move(check), pass, std::move(detail)});
}

bool Report::all_pass() const {
    for (const auto& v : verdicts_)
        if (!v.pass)
            return false;
    return true;
}

namespace {

void text_value(std::ostream& out, const std::string& indent, const nlohmann::ordered_json& v) {
    if (v.is_string()) {
        out << " " << v.get<std::string>();
    } else if (v.is_array() && !v.empty() &&
               !std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_number() || x.is_boolean(); })) {
        for (const auto& x : v) {
            if (x.is_string()) {
                out << "\n" << indent << "  " << x.get<std::string>();
            } else {
                out << "\n" << indent << "  -";
                text_value(out, indent + "    ", x);
            }
        }
    } else if (v.is_object() && !v.empty()) {
        for (const auto& [k, x] : v.items()) {
            out << "\n" << indent << "  " << k << ":";
            text_value(out, indent + "  ", x);
        }
    } else {
        out << " " << v.dump();
    }
}

}  // namespace

std::string Report::render_text() const {
    std::ostringstream out;
    out << command_ << "\n";
    for (const auto& v : verdicts_) {
        out << (v.pass ? "[PASS] " : "[FAIL] ") << v.check;
        if (!v.detail.empty())
            out << ": " << v.detail;
        out << "\n";
    }
    for (const auto& [k, v] : data_.items()) {
        out << k << ":";
        text_value(out, "", v);
        out << "\n";
    }
    out << "exit " << exit_code_ << "\n";
    return out.str();
}

std::string Report::render_machine() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["exit_code"] = exit_code_;
    j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : verdicts_)
        j["verdicts"].push_back({{"check", v.check}, {"pass", v.pass}, {"detail", v.detail}});
    j["data"] = data_;
    return j.dump(2) + "\n";
}

nlohmann::ordered_json to_json(const LinearMap& map) {
    auto out = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < map.dim(); ++j)
        out.push_back("e" + std::to_string(j + 1) + " -> " + render_vector(map.image(j)));
    return out;
}

nlohmann::ordered_json to_json(const LieTwoCochain& kappa) {
    auto out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < kappa.dim(); ++i)
        for (std::size_t j = i + 1; j < kappa.dim(); ++j)
            out.push_back("(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") -> " +
                          render_vector(kappa.value(i, j)));
    return out;
}

nlohmann::ordered_json to_json(const Fingerprint& fp) {
    nlohmann::ordered_json j;
    j["dim"] = fp.dim;
    j["center_dim"] = fp.center_dim;
    j["killing_rank"] = fp.killing_rank;
    j["derived_series"] = fp.derived_series;
    j["lower_central_series"] = fp.lower_central_series;
    j["derivation_dim"] = fp.derivation_dim;
    return j;
}

nlohmann::ordered_json to_json(const Subspace& space) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& v : space.basis())
        out.push_back(render_vector(v));
    return out;
}

nlohmann::ordered_json to_json(const FiniteGroup& g, const GroupMap& f) {
    auto out = nlohmann::ordered_json::array();
    for (Element a = 0; a < f.size(); ++a)
        out.push_back(g.name(a) + " -> " + g.name(f[a]));
    return out;
}

nlohmann::ordered_json table_json(const FiniteGroup& g) {
    auto out = nlohmann::ordered_json::array();
    for (Element a = 0; a < g.order(); ++a) {
        std::string row;
        for (Element b = 0; b < g.order(); ++b)
            row += (b ? " " : "") + g.name(g.mul(a, b));
        out.push_back(row);
    }
    return out;
}

}  // namespace innerpost
