#pragma once

#include <vector>

#include "morl/error.hpp"
#include "morl/reward.hpp"
#include "morl/rng.hpp"

namespace morl {

/// Thresholded lexicographic ordering over reward vectors: objectives
/// 1..n-1 carry thresholds and are clamped at them, the final objective is
/// compared unclamped. Defines a total preorder.
struct UtilityOrdering {
    std::vector<double> thresholds;  // one per objective except the last

    int num_objectives() const { return static_cast<int>(thresholds.size()) + 1; }
};

/// Comparable key of v: (min(v_1, t_1), ..., min(v_{n-1}, t_{n-1}), v_n).
/// Vectors compare lexicographically by this key; raising any component of v
/// never lowers its key.
RewardVector tlo_key(const RewardVector& v, const UtilityOrdering& ordering);

/// Lexicographic three-way comparison of tlo keys: negative if a < b,
/// zero if equivalent, positive if a > b.
int tlo_compare(const RewardVector& a, const RewardVector& b, const UtilityOrdering& ordering);

/// Index of the lexicographic-maximum key; ties break to the lowest index.
int tlo_argbest(const std::vector<RewardVector>& candidates, const UtilityOrdering& ordering);

/// True when every thresholded objective of v reaches its threshold.
bool meets_thresholds(const RewardVector& v, const UtilityOrdering& ordering);

/// Boltzmann distribution over pairwise-tournament scores under the TLO
/// ordering: score(i) counts the candidates strictly beaten by i, and
/// p(i) is proportional to exp(score(i) / temperature). Every probability
/// is strictly positive.
std::vector<double> softmax_t_probabilities(const std::vector<RewardVector>& candidates,
                                            const UtilityOrdering& ordering,
                                            double temperature);

/// Samples an index from the softmax_t distribution. Advances rng by one draw.
int softmax_t(const std::vector<RewardVector>& candidates, const UtilityOrdering& ordering,
              double temperature, SeededRng& rng);

}  // namespace morl
