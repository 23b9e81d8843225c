#pragma once

#include <vector>

#include "morl/momdp.hpp"
#include "morl/policy.hpp"

namespace morl {

struct Step {
    int state = -1;
    int action = -1;
    RewardVector reward;
    StateRef next;
};

/// Record of one episode. total_return is the undiscounted componentwise sum
/// of step rewards.
struct EpisodeTranscript {
    enum class Termination { Success, Failure, Horizon };

    std::vector<Step> steps;
    RewardVector total_return;
    Termination terminated_by = Termination::Horizon;
};

/// The contract every learner implements. One instance is owned by one trial;
/// the trial's SeededRng is threaded through every callback so a run is a
/// single deterministic draw sequence.
class Agent {
public:
    virtual ~Agent() = default;

    /// Resets per-episode state and returns the first action.
    virtual int begin_episode(int start_state, SeededRng& rng) = 0;

    /// Consumes one transition (the agent's pending action produced reward
    /// `reward` and led to `next`) and returns the next action to execute.
    /// The return value is meaningless when `next` is terminal.
    virtual int observe(const RewardVector& reward, const StateRef& next, SeededRng& rng) = 0;

    /// Called once after the episode's final transition.
    virtual void end_episode(SeededRng& rng) = 0;

    /// Deterministic read-only extraction of the current greedy policy.
    virtual DeterministicPolicy greedy_policy() const = 0;

    /// Per-episode hyperparameter updates (schedules live in the harness).
    virtual void set_learning_rate(double alpha) = 0;
    virtual void set_temperature(double temperature) = 0;
};

/// Drives the agent through one episode of the environment. The episode ends
/// on a terminal sentinel or when `spec.horizon` steps have been taken.
EpisodeTranscript run_episode(const EnvironmentSpec& spec, Agent& agent, SeededRng& rng);

}  // namespace morl
