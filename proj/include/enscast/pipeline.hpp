#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enscast/config.hpp"
#include "enscast/metrics.hpp"
#include "enscast/special_cases.hpp"

namespace enscast {

struct ForecastRecord {
    std::string id;
    std::string class_key;
    RoutingDecision decision;
    ForecastVector values;  // length h, all >= 0
    std::vector<std::string> model_names;
    std::vector<double> weights;  // normalized, aligned with model_names
};

struct PipelineResult {
    std::vector<ForecastRecord> records;  // input order
    std::optional<EvalReport> report;
    std::vector<std::string> warnings;  // rejected series etc.

    std::string forecasts_csv() const;  // id,F1..Fh
    std::string audit_csv() const;      // id,class,routing,criterion,weights

    /// Mean normalized weight per model within each frequency (the data
    /// behind the weight summary charts): frequency,model,mean_weight.
    std::string mean_weights_csv() const;
};

/// Runs the batch pipeline: classify, look up the class pool, build the
/// weighted combination, apply special-case routing against the train
/// corpus, clamp negatives. Series shorter than 2h are rejected with a
/// diagnostic; per-series model failures fall back to Naive 1 and the
/// run continues. Results are independent of the parallelism degree.
/// When test series are given (id -> future values), the result carries
/// an evaluation report with Naive 2 baselined OWA.
PipelineResult run_pipeline(const PipelineConfig& config, const std::vector<TimeSeries>& train,
                            const std::vector<TimeSeries>* test = nullptr);

}  // namespace enscast
