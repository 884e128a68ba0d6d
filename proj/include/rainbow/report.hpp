#pragma once

#include <rainbow/colourers.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rainbow {

/// One (instance, algorithm) run. Optional fields are blank in CSV and null
/// in JSON when the algorithm does not produce them.
struct BoundReport {
    std::string instance;
    std::string family;
    std::string params;
    std::string algorithm;
    int n = 0;
    int kappa = 0;
    int lambda = 0;
    int delta = 0;
    std::optional<int> girth;
    int diameter = 0;
    std::optional<Rational> bound;
    std::optional<int> colours_used;
    std::optional<bool> verified;
    double runtime_ms = 0.0;
    std::uint64_t seed = 0;
    std::string note; // error text or an inconclusive marker

    /// No error, a complete certificate and colours within the bound.
    bool passed() const;
};

/// instance,family,params,algorithm,n,kappa,lambda,delta,girth,diameter,
/// bound_num,bound_den,colours_used,verified,runtime_ms,seed,note
std::string csv_header();
std::string to_csv_row(const BoundReport &r);
std::string to_csv(const std::vector<BoundReport> &reports);

nlohmann::json to_json(const BoundReport &r);
nlohmann::json to_json(const std::vector<BoundReport> &reports);

} // namespace rainbow
