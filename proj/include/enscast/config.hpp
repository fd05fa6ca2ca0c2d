#pragma once

#include <map>
#include <string>
#include <vector>

#include "enscast/ensemble.hpp"
#include "enscast/models.hpp"
#include "enscast/stat_tests.hpp"

namespace enscast {

/// Full pipeline configuration: per-frequency parameters and one model
/// pool per reachable series class.
struct PipelineConfig {
    std::map<Frequency, FrequencyParams> params;
    std::map<std::string, std::vector<ModelSpec>> pools;  // key = class_key
    int jobs = 1;
    bool monthly_analogy = false;

    const FrequencyParams& params_for(Frequency f) const;
    const std::vector<ModelSpec>& pool_for(const SeriesClass& cls) const;

    /// Ensures every reachable class has a nonempty, valid pool and all
    /// parameter invariants hold (1 <= N <= h, thresholds in range).
    void validate() const;
};

/// The shipped defaults reproducing the published parameterization.
PipelineConfig default_config();

/// All 13 reachable class keys.
std::vector<std::string> all_class_keys();

/// Sectioned plain-text format: one [params <frequency>] section per
/// frequency, one [pool <class key>] section per class with one model
/// token per line. Omitted sections keep their defaults.
PipelineConfig parse_config(const std::string& text);
PipelineConfig load_config(const std::string& path);
std::string serialize_config(const PipelineConfig& config);

}  // namespace enscast
