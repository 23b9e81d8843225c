#pragma once

#include <string>
#include <vector>

#include "morl/momdp.hpp"

namespace morl {

/// One action per non-terminal state, in the environment's canonical state
/// order. The identifier concatenates the chosen actions' initials, so
/// "DI" means Direct at the first state and Indirect at the second.
struct DeterministicPolicy {
    std::vector<int> actions;

    int action_at(int state) const { return actions[state]; }

    friend bool operator==(const DeterministicPolicy& a, const DeterministicPolicy& b) {
        return a.actions == b.actions;
    }
};

inline std::string policy_identifier(const EnvironmentSpec& spec,
                                     const DeterministicPolicy& policy) {
    std::string id;
    id.reserve(policy.actions.size());
    for (int s = 0; s < spec.num_states(); ++s)
        id.push_back(spec.action(s, policy.actions[s]).initial);
    return id;
}

}  // namespace morl
