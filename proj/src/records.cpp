#include "pcs/records.hpp"

#include <cinttypes>
#include <cstdio>

namespace pcs {

nlohmann::json to_json(const ResultRecord& r) {
    nlohmann::json j{{"name", r.name},
                     {"value", r.value},
                     {"stderr", r.err},
                     {"method", r.method},
                     {"ref", r.ref},
                     {"params", r.params},
                     {"param_hash", param_hash(r.params)},
                     {"info", r.info}};
    if (r.pass.has_value()) j["pass"] = *r.pass;
    return j;
}

nlohmann::json to_json(const std::vector<ResultRecord>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

std::string param_hash(const nlohmann::json& params) {
    std::string s = params.dump();
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string to_csv(const std::vector<ResultRecord>& rs) {
    std::string out = "name,value,stderr,method,param_hash,pass\n";
    char buf[128];
    for (const auto& r : rs) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", r.value, r.err);
        out += r.name + "," + buf + "," + r.method + "," + param_hash(r.params) + ",";
        out += r.pass.has_value() ? (*r.pass ? "1" : "0") : "";
        out += "\n";
    }
    return out;
}

std::string format_line(const ResultRecord& r) {
    char buf[256];
    const char* tag = r.info ? "INFO" : (r.pass.has_value() ? (*r.pass ? "PASS" : "FAIL") : "  - ");
    std::snprintf(buf, sizeof buf, "[%s] %-44s % .12e +- %.3e  (%s)", tag, r.name.c_str(),
                  r.value, r.err, r.method.c_str());
    return buf;
}

}  // namespace pcs
