#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace cblock {

using Json = nlohmann::ordered_json;

// Machine-readable run record: every randomized run carries its seed, and a
// fixed seed reproduces byte-identical output.
class RunReport {
public:
    RunReport(std::string command, Json inputs, std::uint64_t seed) {
        j_["schema"] = 1;
        j_["command"] = std::move(command);
        j_["inputs"] = std::move(inputs);
        j_["seed"] = seed;
        j_["results"] = Json::array();
        j_["ok"] = true;
    }

    void check(const std::string& name, bool pass, Json extra = Json::object()) {
        Json r;
        r["name"] = name;
        r["status"] = pass ? "pass" : "fail";
        for (auto& [k, v] : extra.items()) r[k] = v;
        j_["results"].push_back(std::move(r));
        if (!pass) j_["ok"] = false;
    }

    void value(const std::string& name, Json val, Json extra = Json::object()) {
        Json r;
        r["name"] = name;
        r["status"] = "value";
        r["value"] = std::move(val);
        for (auto& [k, v] : extra.items()) r[k] = v;
        j_["results"].push_back(std::move(r));
    }

    bool ok() const { return j_["ok"].get<bool>(); }
    const Json& json() const { return j_; }
    std::string json_text() const { return j_.dump(2) + "\n"; }

    std::string text() const {
        std::string out;
        for (const auto& r : j_["results"]) {
            const std::string status = r["status"].get<std::string>();
            if (status == "value") {
                out += r["name"].get<std::string>() + " = " + r["value"].dump() + "\n";
            } else {
                out += (status == "pass" ? "[PASS] " : "[FAIL] ") +
                       r["name"].get<std::string>();
                for (auto& [k, v] : r.items()) {
                    if (k == "name" || k == "status") continue;
                    out += "  " + k + "=" + v.dump();
                }
                out += "\n";
            }
        }
        out += "seed = " + j_["seed"].dump() + "\n";
        out += std::string("ok = ") + (ok() ? "true" : "false") + "\n";
        return out;
    }

private:
    Json j_;
};

} // namespace cblock
