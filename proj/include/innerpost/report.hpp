#pragma once

#include "innerpost/group.hpp"
#include "innerpost/lie_obstruction.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace innerpost {

struct Verdict {
    std::string check;
    bool pass = false;
    std::string detail;  // counterexample on failure
};

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void verdict(std::string check, bool pass, std::string detail = {});
    const std::vector<Verdict>& verdicts() const { return verdicts_; }
    bool all_pass() const;

    /// Emitted objects, in insertion order.
    nlohmann::ordered_json& data() { return data_; }
    const nlohmann::ordered_json& data() const { return data_; }

    void set_exit_code(int code) { exit_code_ = code; }
    int exit_code() const { return exit_code_; }

    std::string render_text() const;
    std::string render_machine() const;

private:
    std::string command_;
    std::vector<Verdict> verdicts_;
    nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
    int exit_code_ = 0;
};

// JSON encodings shared by the commands.
nlohmann::ordered_json to_json(const LinearMap& map);
nlohmann::ordered_json to_json(const LieTwoCochain& kappa);
nlohmann::ordered_json to_json(const Fingerprint& fp);
nlohmann::ordered_json to_json(const Subspace& space);
nlohmann::ordered_json to_json(const FiniteGroup& g, const GroupMap& f);
nlohmann::ordered_json table_json(const FiniteGroup& g);

}  // namespace innerpost
