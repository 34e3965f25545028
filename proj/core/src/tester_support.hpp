#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sidlab/density.hpp"
#include "sidlab/random.hpp"
#include "sidlab/testers.hpp"

namespace sidlab::detail {

/// Grid and step weights drawn once per trial; all bigraphons of a trial
/// share them.
struct TrialShape {
  std::vector<double> mu;
  std::vector<double> nu;
};

TrialShape sample_shape(Rng& rng, const TestConfig& cfg);

/// Entries uniform in [floor, 1]; with `indicator` set, each entry is floor
/// or 1 with equal odds.
StepBigraphon sample_bigraphon(Rng& rng, const TrialShape& shape, const TestConfig& cfg, bool indicator);

/// Values uniform in [floor, 1], or floor/1 when `indicator` is set.
std::vector<double> sample_function(Rng& rng, std::size_t n, const TestConfig& cfg, bool indicator);

/// Whether this trial uses an adversarial preset (one in four when enabled).
bool adversarial_trial(Rng& rng, const TestConfig& cfg);

/// Min-margin aggregation. `witness` is only called for a new worst trial
/// that violates the tolerance.
class Aggregator {
 public:
  Aggregator(std::string property, const TestConfig& cfg);

  void record(double margin, const std::function<nlohmann::json()>& witness);
  void skip() { ++report_.skipped; }
  TestReport finish();

 private:
  TestReport report_;
  double tol_;
};

TestReport precondition_report(std::string property, std::uint64_t seed, std::vector<std::string> reasons);

}  // namespace sidlab::detail
