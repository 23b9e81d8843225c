#pragma once

#include <string>
#include <vector>

#include "morl/error.hpp"
#include "morl/reward.hpp"
#include "morl/rng.hpp"

namespace morl {

/// Destination of a transition: a non-terminal state index, or one of the
/// two terminal sentinels. Success vs failure is bookkeeping for transcripts
/// and policy charts only; rewards remain the sole learning signal.
struct StateRef {
    enum class Kind { State, Success, Failure };

    Kind kind = Kind::State;
    int state = -1;  // valid only when kind == Kind::State

    static StateRef to(int state_index) { return {Kind::State, state_index}; }
    static StateRef success() { return {Kind::Success, -1}; }
    static StateRef failure() { return {Kind::Failure, -1}; }

    bool terminal() const { return kind != Kind::State; }

    friend bool operator==(const StateRef& a, const StateRef& b) {
        return a.kind == b.kind && (a.kind != Kind::State || a.state == b.state);
    }
};

struct Outcome {
    double probability = 0.0;
    StateRef next;
    RewardVector reward;
};

struct ActionSpec {
    std::string name;
    char initial = '?';
    std::vector<Outcome> outcomes;
};

struct StateSpec {
    std::string name;
    std::vector<ActionSpec> actions;
};

/// Full stochastic MOMDP definition. States and per-state actions are
/// ordered; that order fixes policy naming and enumeration.
struct EnvironmentSpec {
    std::string name;
    std::vector<StateSpec> states;
    int start_state = 0;
    int horizon = 1;
    std::vector<std::string> objectives;

    int num_objectives() const { return static_cast<int>(objectives.size()); }
    int num_states() const { return static_cast<int>(states.size()); }
    int num_actions(int state) const { return static_cast<int>(states[state].actions.size()); }

    /// Index of a state by name, -1 if absent.
    int state_index(const std::string& state_name) const;

    const ActionSpec& action(int state, int action_index) const {
        return states[state].actions[action_index];
    }
};

bool operator==(const EnvironmentSpec& a, const EnvironmentSpec& b);

struct ValidationIssue {
    std::string code;     // PROBABILITY_SUM, DANGLING_STATE, ...
    std::string message;  // where and what
};

/// Checks every EnvironmentSpec invariant and reports the complete list of
/// violations (empty result means the spec is valid).
std::vector<ValidationIssue> validate_spec(const EnvironmentSpec& spec);

/// Throws Error("INVALID_SPEC") listing all violations unless the spec is valid.
void ensure_valid(const EnvironmentSpec& spec);

/// Draws one outcome of (state, action) by inverse CDF over the outcome list
/// in declaration order. Advances rng by exactly one double.
const Outcome& sample_outcome(const EnvironmentSpec& spec, int state, int action,
                              SeededRng& rng);

/// Probability-weighted mean reward of a (state, action) pair.
RewardVector mean_reward(const EnvironmentSpec& spec, int state, int action);

}  // namespace morl
