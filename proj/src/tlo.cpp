#include "morl/tlo.hpp"

#include <algorithm>
#include <cmath>

namespace morl {

static void check_dimension(const RewardVector& v, const UtilityOrdering& ordering) {
    if (v.size() != ordering.num_objectives())
        throw Error("DIMENSION_MISMATCH",
                    "vector has " + std::to_string(v.size()) + " components, ordering expects " +
                        std::to_string(ordering.num_objectives()));
}

RewardVector tlo_key(const RewardVector& v, const UtilityOrdering& ordering) {
    check_dimension(v, ordering);
    RewardVector key = v;
    for (std::size_t i = 0; i < ordering.thresholds.size(); ++i)
        key[static_cast<int>(i)] = std::min(v[static_cast<int>(i)], ordering.thresholds[i]);
    return key;
}

int tlo_compare(const RewardVector& a, const RewardVector& b, const UtilityOrdering& ordering) {
    const RewardVector ka = tlo_key(a, ordering);
    const RewardVector kb = tlo_key(b, ordering);
    for (int i = 0; i < ka.size(); ++i) {
        if (ka[i] < kb[i]) return -1;
        if (ka[i] > kb[i]) return 1;
    }
    return 0;
}

int tlo_argbest(const std::vector<RewardVector>& candidates, const UtilityOrdering& ordering) {
    if (candidates.empty()) throw Error("EMPTY_CANDIDATES", "no vectors to choose from");
    int best = 0;
    for (int i = 1; i < static_cast<int>(candidates.size()); ++i)
        if (tlo_compare(candidates[i], candidates[best], ordering) > 0) best = i;
    return best;
}

bool meets_thresholds(const RewardVector& v, const UtilityOrdering& ordering) {
    check_dimension(v, ordering);
    for (std::size_t i = 0; i < ordering.thresholds.size(); ++i)
        if (v[static_cast<int>(i)] < ordering.thresholds[i]) return false;
    return true;
}

std::vector<double> softmax_t_probabilities(const std::vector<RewardVector>& candidates,
                                            const UtilityOrdering& ordering,
                                            double temperature) {
    if (candidates.empty()) throw Error("EMPTY_CANDIDATES", "no vectors to choose from");
    if (!(temperature > 0.0))
        throw Error("NON_POSITIVE_TEMPERATURE",
                    "temperature must be > 0, got " + std::to_string(temperature));

    const int n = static_cast<int>(candidates.size());
    std::vector<double> score(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && tlo_compare(candidates[i], candidates[j], ordering) > 0)
                score[i] += 1.0;

    const double top = *std::max_element(score.begin(), score.end());
    std::vector<double> p(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        p[i] = std::exp((score[i] - top) / temperature);
        total += p[i];
    }
    for (double& value : p) value /= total;
    return p;
}

int softmax_t(const std::vector<RewardVector>& candidates, const UtilityOrdering& ordering,
              double temperature, SeededRng& rng) {
    const std::vector<double> p = softmax_t_probabilities(candidates, ordering, temperature);
    const double u = rng.next_double();
    double cumulative = 0.0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        cumulative += p[i];
        if (u < cumulative) return i;
    }
    return static_cast<int>(p.size()) - 1;
}

}  // namespace morl
