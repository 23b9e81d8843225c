#include "morl/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace morl {

double schedule_value(const Schedule& schedule, int episode) {
    if (episode < 0 || episode >= std::max(schedule.total_episodes, 1))
        throw Error("EPISODE_OUT_OF_RANGE",
                    "episode " + std::to_string(episode) + " outside [0, " +
                        std::to_string(schedule.total_episodes) + ")");
    if (schedule.kind == Schedule::Kind::Constant || schedule.total_episodes <= 1)
        return schedule.initial;

    const double t = static_cast<double>(episode) / (schedule.total_episodes - 1);
    const double value = schedule.initial + (schedule.final - schedule.initial) * t;
    const double lo = std::min(schedule.initial, schedule.final);
    const double hi = std::max(schedule.initial, schedule.final);
    return std::clamp(value, lo, hi);
}

static std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

static double parse_number(const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error("BAD_SCHEDULE", "not a number: '" + text + "'");
    return value;
}

Schedule parse_schedule(const std::string& text, int total_episodes) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() == 2 && parts[0] == "constant")
        return Schedule::constant(parse_number(parts[1]));
    if (parts.size() == 3 && parts[0] == "linear")
        return Schedule::linear(parse_number(parts[1]), parse_number(parts[2]), total_episodes);
    throw Error("BAD_SCHEDULE",
                "expected 'constant:<v>' or 'linear:<initial>:<final>', got '" + text + "'");
}

std::string schedule_to_string(const Schedule& schedule) {
    auto number = [](double v) {
        std::string s = std::to_string(v);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    if (schedule.kind == Schedule::Kind::Constant) return "constant:" + number(schedule.initial);
    return "linear:" + number(schedule.initial) + ":" + number(schedule.final);
}

}  // namespace morl
