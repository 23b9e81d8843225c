#pragma once

#include <Eigen/Core>

namespace morl {

/// Vector of per-objective reals; the unit of all rewards, returns and
/// Q-values. Length is fixed by the environment's objective count.
using RewardVector = Eigen::VectorXd;

inline RewardVector zero_reward(int objectives) {
    return RewardVector::Zero(objectives);
}

inline bool approx_equal(const RewardVector& a, const RewardVector& b, double tol) {
    if (a.size() != b.size()) return false;
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace morl
