#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nucresp/simulator.hpp"

namespace nucresp {

enum class Strategy { richardson, polynomial, exponential };
enum class FilterLevel { A0, A1, A2, rejected };

const char* strategy_name(Strategy s);
const char* filter_name(FilterLevel f);

struct ExtrapolationResult {
  Strategy strategy;
  bool ok = false;
  double value = 0.0;
  double sigma = 0.0;
  int order_used = -1;
  int error_count = 0;
  bool used_all_points = true;
};

/// One noisy estimate of an observable at amplification k with its
/// statistical error.
struct NoisePoint {
  int k;
  double value;
  double sigma;
};

struct MitigationReport {
  std::vector<ExtrapolationResult> strategies;
  bool ok = false;
  double value = 0.0;
  double sigma = 0.0;
  std::string source;  // which strategy (or average) produced the value
  int error_count = 0;
  FilterLevel filter = FilterLevel::rejected;
  bool decohered = false;
};

struct ReadoutCorrection {
  MeasuredDistribution corrected;
  int error_count = 0;   // 1 when the least-squares fallback fired
  bool fallback = false;
};

/// Invert the per-qubit confusion model on the measured probabilities with
/// linear error propagation. If any corrected probability drops below
/// -2 sigma the central values are recomputed by nonnegative least squares
/// against the full tensor-product calibration while the simple-inversion
/// errors are kept, and the error count increments.
ReadoutCorrection correct_readout(const MeasuredDistribution& dist,
                                  const std::vector<ConfusionMatrix>& calibration);

/// Exact polynomial interpolation through the lowest-k points, evaluated at
/// k = 0, order by order; picks the lowest order compatible with all higher
/// ones at one sigma. On failure: drop the highest-k point, count an error,
/// retry once.
ExtrapolationResult richardson(std::vector<NoisePoint> points);

/// Weighted least-squares polynomial fits up to third order; accepts the
/// lowest order with chi^2 per degree of freedom <= 1 whose intercept is
/// compatible with every higher-order fit at one sigma. Same retry rule.
ExtrapolationResult polynomial(std::vector<NoisePoint> points);

/// Two-point exponential decay towards the fully depolarized value:
/// M(k) = M_inf + (M_0 - M_inf) g^k with M_inf fixed. Solved on k = {1, 3};
/// the k = {1, 5} and {1, 7} solutions serve as compatibility checks, each
/// failure counting one error. Fails when the decay factor leaves (0, 1].
ExtrapolationResult exponential(std::vector<NoisePoint> points,
                                double depolarized_value);

/// Priority to a good global linear fit; otherwise average the surviving
/// strategies with the lowest error count. Rejected when all strategies
/// failed. `extra_errors` folds readout/decoherence error counts into the
/// filter level.
MitigationReport combine(const std::vector<ExtrapolationResult>& results,
                         int extra_errors = 0);

/// Overlap with the fully depolarized state via trace distance:
/// ovd = 1 - (1/2) sum_i |1/2^n - p(i)|.
double overlap_with_depolarized(const MeasuredDistribution& dist);

struct DecoherenceCheck {
  bool decohered = false;
  int error_count = 0;
};

/// Distributions must be readout-corrected and ordered by k with k = 1
/// first. Decohered when the k = 1 overlap reaches 0.9, or when two or more
/// higher-k overlaps do (which also counts one error).
DecoherenceCheck decoherence_check(const std::vector<MeasuredDistribution>& dists);

}  // namespace nucresp
