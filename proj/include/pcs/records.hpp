#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

// Result records shared by the CLI subcommands: every numeric quantity is
// reported with its uncertainty, the method that produced it, an echo of the
// parameters, and an optional pass/fail against a tolerance. "info" marks
// non-gating comparison records.

namespace pcs {

struct ResultRecord {
    std::string name;
    double value = 0;
    double err = 0;
    std::string method;  // quadrature | mc | analytic | finite-difference | exact
    std::string ref;     // semantic tag of the quantity or check
    nlohmann::json params = nlohmann::json::object();
    std::optional<bool> pass;
    bool info = false;
};

nlohmann::json to_json(const ResultRecord& r);
nlohmann::json to_json(const std::vector<ResultRecord>& rs);

// columns: name,value,stderr,method,param_hash,pass
std::string to_csv(const std::vector<ResultRecord>& rs);

// stable FNV-1a hex hash of a canonical parameter dump
std::string param_hash(const nlohmann::json& params);

// fixed-format human line, deterministic byte-for-byte
std::string format_line(const ResultRecord& r);

}  // namespace pcs
