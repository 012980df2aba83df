#pragma once

#include "hyperheat/experiments/config.hpp"
#include "hyperheat/experiments/results.hpp"

namespace hyperheat::experiments {

/// Desk-scale defaults for each experiment id.
ExperimentConfig default_config(const std::string& id);

/// Dispatches on config.id.
ResultRecord run_experiment(const ExperimentConfig& config);

ResultRecord run_smoothing(const ExperimentConfig& config);
ResultRecord run_scaling(const ExperimentConfig& config);
ResultRecord run_criticality(const ExperimentConfig& config);
ResultRecord run_contraction(const ExperimentConfig& config);
ResultRecord run_stability(const ExperimentConfig& config);
ResultRecord run_solve(const ExperimentConfig& config);
ResultRecord run_sweep(const ExperimentConfig& config);

}  // namespace hyperheat::experiments
