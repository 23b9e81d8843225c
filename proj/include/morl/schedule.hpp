#pragma once

#include <string>

#include "morl/error.hpp"

namespace morl {

/// Per-episode hyperparameter schedule: constant, or linear from `initial`
/// at episode 0 to `final` at the last episode.
struct Schedule {
    enum class Kind { Constant, LinearDecay };

    Kind kind = Kind::Constant;
    double initial = 0.0;
    double final = 0.0;
    int total_episodes = 1;

    static Schedule constant(double value) { return {Kind::Constant, value, value, 1}; }
    static Schedule linear(double initial, double final, int total_episodes) {
        return {Kind::LinearDecay, initial, final, total_episodes};
    }

    friend bool operator==(const Schedule& a, const Schedule& b) {
        return a.kind == b.kind && a.initial == b.initial && a.final == b.final &&
               (a.kind == Kind::Constant || a.total_episodes == b.total_episodes);
    }
};

double schedule_value(const Schedule& schedule, int episode);

/// Parses the CLI/config form "constant:0.01" or "linear:10:2". Linear
/// schedules span `total_episodes` episodes.
Schedule parse_schedule(const std::string& text, int total_episodes);

/// Inverse of parse_schedule (without the episode count).
std::string schedule_to_string(const Schedule& schedule);

}  // namespace morl
