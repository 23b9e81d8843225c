#include "morl/momdp.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace morl {

namespace {
constexpr double kProbabilityTolerance = 1e-12;
}

int EnvironmentSpec::state_index(const std::string& state_name) const {
    for (int i = 0; i < num_states(); ++i)
        if (states[i].name == state_name) return i;
    return -1;
}

static bool outcomes_equal(const std::vector<Outcome>& a, const std::vector<Outcome>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].probability != b[i].probability) return false;
        if (!(a[i].next == b[i].next)) return false;
        if (a[i].reward.size() != b[i].reward.size()) return false;
        if (a[i].reward != b[i].reward) return false;
    }
    return true;
}

bool operator==(const EnvironmentSpec& a, const EnvironmentSpec& b) {
    if (a.name != b.name || a.start_state != b.start_state || a.horizon != b.horizon ||
        a.objectives != b.objectives || a.num_states() != b.num_states())
        return false;
    for (int s = 0; s < a.num_states(); ++s) {
        if (a.states[s].name != b.states[s].name) return false;
        if (a.states[s].actions.size() != b.states[s].actions.size()) return false;
        for (std::size_t k = 0; k < a.states[s].actions.size(); ++k) {
            const ActionSpec& x = a.states[s].actions[k];
            const ActionSpec& y = b.states[s].actions[k];
            if (x.name != y.name || x.initial != y.initial) return false;
            if (!outcomes_equal(x.outcomes, y.outcomes)) return false;
        }
    }
    return true;
}

std::vector<ValidationIssue> validate_spec(const EnvironmentSpec& spec) {
    std::vector<ValidationIssue> issues;
    auto add = [&](const char* code, const std::string& message) {
        issues.push_back({code, message});
    };

    if (spec.states.empty()) add("EMPTY_STATES", "environment has no non-terminal states");
    if (spec.start_state < 0 || spec.start_state >= spec.num_states())
        add("BAD_START_STATE", "start_state index " + std::to_string(spec.start_state) +
                                   " is not a declared state");
    if (spec.horizon < 1)
        add("BAD_HORIZON", "horizon must be >= 1, got " + std::to_string(spec.horizon));
    if (spec.objectives.empty()) add("NO_OBJECTIVES", "objective list is empty");

    const int n_obj = spec.num_objectives();
    for (int s = 0; s < spec.num_states(); ++s) {
        const StateSpec& state = spec.states[s];
        std::set<char> initials;
        for (const ActionSpec& action : state.actions) {
            if (!initials.insert(action.initial).second)
                add("DUPLICATE_ACTION_INITIAL",
                    "state " + state.name + ": initial '" + std::string(1, action.initial) +
                        "' used by more than one action");

            double total = 0.0;
            for (const Outcome& outcome : action.outcomes) {
                total += outcome.probability;
                if (outcome.probability < 0.0 || outcome.probability > 1.0)
                    add("PROBABILITY_SUM", "state " + state.name + ", action " + action.name +
                                               ": outcome probability outside [0,1]");
                if (!outcome.next.terminal() &&
                    (outcome.next.state < 0 || outcome.next.state >= spec.num_states()))
                    add("DANGLING_STATE", "state " + state.name + ", action " + action.name +
                                              ": next-state index " +
                                              std::to_string(outcome.next.state) +
                                              " does not exist");
                if (outcome.reward.size() != n_obj)
                    add("REWARD_DIMENSION",
                        "state " + state.name + ", action " + action.name + ": reward has " +
                            std::to_string(outcome.reward.size()) + " components, expected " +
                            std::to_string(n_obj));
            }
            if (action.outcomes.empty() || std::abs(total - 1.0) > kProbabilityTolerance) {
                std::ostringstream oss;
                oss << "state " << state.name << ", action " << action.name
                    << ": outcome probabilities sum to " << total;
                add("PROBABILITY_SUM", oss.str());
            }
        }
    }
    return issues;
}

void ensure_valid(const EnvironmentSpec& spec) {
    std::vector<ValidationIssue> issues = validate_spec(spec);
    if (issues.empty()) return;
    std::string all;
    for (const ValidationIssue& issue : issues) {
        if (!all.empty()) all += "; ";
        all += issue.code + " (" + issue.message + ")";
    }
    throw Error("INVALID_SPEC", all);
}

const Outcome& sample_outcome(const EnvironmentSpec& spec, int state, int action,
                              SeededRng& rng) {
    if (state < 0 || state >= spec.num_states() || action < 0 ||
        action >= spec.num_actions(state))
        throw Error("UNKNOWN_STATE_ACTION", "no such pair (state " + std::to_string(state) +
                                                ", action " + std::to_string(action) + ")");
    const std::vector<Outcome>& outcomes = spec.states[state].actions[action].outcomes;
    const double u = rng.next_double();
    double cumulative = 0.0;
    for (const Outcome& outcome : outcomes) {
        cumulative += outcome.probability;
        if (u < cumulative) return outcome;
    }
    return outcomes.back();  // guards against cumulative rounding below 1
}

RewardVector mean_reward(const EnvironmentSpec& spec, int state, int action) {
    RewardVector mean = zero_reward(spec.num_objectives());
    for (const Outcome& outcome : spec.states[state].actions[action].outcomes)
        mean += outcome.probability * outcome.reward;
    return mean;
}

}  // namespace morl
