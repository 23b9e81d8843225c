#include "morl/episode.hpp"

namespace morl {

EpisodeTranscript run_episode(const EnvironmentSpec& spec, Agent& agent, SeededRng& rng) {
    EpisodeTranscript transcript;
    transcript.total_return = zero_reward(spec.num_objectives());

    int state = spec.start_state;
    int action = agent.begin_episode(state, rng);

    for (int step = 0; step < spec.horizon; ++step) {
        const Outcome& outcome = sample_outcome(spec, state, action, rng);
        transcript.steps.push_back({state, action, outcome.reward, outcome.next});
        transcript.total_return += outcome.reward;

        const int next_action = agent.observe(outcome.reward, outcome.next, rng);

        if (outcome.next.kind == StateRef::Kind::Success) {
            transcript.terminated_by = EpisodeTranscript::Termination::Success;
            break;
        }
        if (outcome.next.kind == StateRef::Kind::Failure) {
            transcript.terminated_by = EpisodeTranscript::Termination::Failure;
            break;
        }
        transcript.terminated_by = EpisodeTranscript::Termination::Horizon;
        state = outcome.next.state;
        action = next_action;
    }

    agent.end_episode(rng);
    return transcript;
}

}  // namespace morl
