#pragma once

#include "experiment.hpp"

namespace rfl::app {

/// One-shot invariant suite across all modules; one row per check.
ExperimentReport run_verify(const ExperimentConfig& config);

}  // namespace rfl::app
