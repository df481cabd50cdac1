#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lchoose {

struct BundleOptions {
    int threads = 1;
    std::uint64_t seed = 20240601;
};

struct BundleResult {
    std::string name;
    bool passed = false;
    /// One line for humans.
    std::string summary;
    nlohmann::json details;
    std::chrono::milliseconds elapsed{0};
};

/// Names accepted by run_bundle, in acceptance order.
std::vector<std::string> bundle_names();

/// Runs a named verification bundle. Throws ContractError for unknown names.
BundleResult run_bundle(const std::string& name, const BundleOptions& options = {});

}  // namespace lchoose
