#include "morl/environments.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace morl {

namespace {

using nlohmann::ordered_json;

RewardVector rv(double success, double time) {
    RewardVector v(2);
    v << success, time;
    return v;
}

ActionSpec action(const std::string& name, std::initializer_list<Outcome> outcomes) {
    ActionSpec spec;
    spec.name = name;
    spec.initial = name[0];
    spec.outcomes = outcomes;
    return spec;
}

EnvironmentSpec two_planet_shell(const std::string& name) {
    EnvironmentSpec spec;
    spec.name = name;
    spec.states.resize(2);
    spec.states[0].name = "A";
    spec.states[1].name = "B";
    spec.start_state = 0;
    spec.horizon = 2;
    spec.objectives = {"mission_success", "time_penalty"};
    return spec;
}

}  // namespace

EnvironmentSpec build_original() {
    EnvironmentSpec spec = two_planet_shell("original");
    const int B = 1;
    spec.states[0].actions = {
        action("Indirect", {{1.0, StateRef::to(B), rv(0, -12)}}),
        action("Direct", {{0.9, StateRef::to(B), rv(0, -6)},
                          {0.1, StateRef::failure(), rv(0, -1)}}),
        action("Teleport", {{0.85, StateRef::to(B), rv(0, 0)},
                            {0.15, StateRef::failure(), rv(0, 0)}}),
    };
    spec.states[1].actions = {
        action("Indirect", {{1.0, StateRef::success(), rv(1, -10)}}),
        action("Direct", {{0.9, StateRef::success(), rv(1, -8)},
                          {0.1, StateRef::failure(), rv(0, -7)}}),
        action("Teleport", {{0.85, StateRef::success(), rv(1, 0)},
                            {0.15, StateRef::failure(), rv(0, 0)}}),
    };
    return spec;
}

EnvironmentSpec build_mr() {
    // Same transition structure as original; transitions into the failure
    // terminal carry -1 on the first objective.
    EnvironmentSpec spec = two_planet_shell("mr");
    const int B = 1;
    spec.states[0].actions = {
        action("Indirect", {{1.0, StateRef::to(B), rv(0, -12)}}),
        action("Direct", {{0.9, StateRef::to(B), rv(0, -6)},
                          {0.1, StateRef::failure(), rv(-1, -1)}}),
        action("Teleport", {{0.85, StateRef::to(B), rv(0, 0)},
                            {0.15, StateRef::failure(), rv(-1, 0)}}),
    };
    spec.states[1].actions = {
        action("Indirect", {{1.0, StateRef::success(), rv(1, -10)}}),
        action("Direct", {{0.9, StateRef::success(), rv(1, -8)},
                          {0.1, StateRef::failure(), rv(-1, -7)}}),
        action("Teleport", {{0.85, StateRef::success(), rv(1, 0)},
                            {0.15, StateRef::failure(), rv(-1, 0)}}),
    };
    return spec;
}

EnvironmentSpec build_3st() {
    // mr with the Direct route out of A split across an intermediate state C:
    // A -> C is deterministic with reward (0,-3); the stochastic resolution
    // happens at C with the same 0.9 success probability, reaching B with
    // (0,-3) or failing with (-1,-1). Objective-1 accumulation on the success
    // path is therefore zero, and the success-path time totals -6 as on the
    // direct mr route. Every action at C resolves identically; the figure
    // this variant comes from does not pin distinct dynamics per C action.
    EnvironmentSpec spec;
    spec.name = "3st";
    spec.states.resize(3);
    spec.states[0].name = "A";
    spec.states[1].name = "B";
    spec.states[2].name = "C";
    spec.start_state = 0;
    spec.horizon = 3;
    spec.objectives = {"mission_success", "time_penalty"};

    const int B = 1;
    const int C = 2;
    spec.states[0].actions = {
        action("Indirect", {{1.0, StateRef::to(B), rv(0, -12)}}),
        action("Direct", {{1.0, StateRef::to(C), rv(0, -3)}}),
        action("Teleport", {{0.85, StateRef::to(B), rv(0, 0)},
                            {0.15, StateRef::failure(), rv(-1, 0)}}),
    };
    spec.states[1].actions = {
        action("Indirect", {{1.0, StateRef::success(), rv(1, -10)}}),
        action("Direct", {{0.9, StateRef::success(), rv(1, -8)},
                          {0.1, StateRef::failure(), rv(-1, -7)}}),
        action("Teleport", {{0.85, StateRef::success(), rv(1, 0)},
                            {0.15, StateRef::failure(), rv(-1, 0)}}),
    };
    for (const char* name : {"Indirect", "Direct", "Teleport"})
        spec.states[C].actions.push_back(action(name, {{0.9, StateRef::to(B), rv(0, -3)},
                                                       {0.1, StateRef::failure(), rv(-1, -1)}}));
    return spec;
}

EnvironmentSpec build_id() {
    // original with the time penalties swapped between A and B.
    EnvironmentSpec spec = two_planet_shell("id");
    const int B = 1;
    spec.states[0].actions = {
        action("Indirect", {{1.0, StateRef::to(B), rv(0, -10)}}),
        action("Direct", {{0.9, StateRef::to(B), rv(0, -8)},
                          {0.1, StateRef::failure(), rv(0, -7)}}),
        action("Teleport", {{0.85, StateRef::to(B), rv(0, 0)},
                            {0.15, StateRef::failure(), rv(0, 0)}}),
    };
    spec.states[1].actions = {
        action("Indirect", {{1.0, StateRef::success(), rv(1, -12)}}),
        action("Direct", {{0.9, StateRef::success(), rv(1, -6)},
                          {0.1, StateRef::failure(), rv(0, -1)}}),
        action("Teleport", {{0.85, StateRef::success(), rv(1, 0)},
                            {0.15, StateRef::failure(), rv(0, 0)}}),
    };
    return spec;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"original", "mr", "3st", "id"};
    return names;
}

bool is_catalog_name(const std::string& name) {
    for (const std::string& candidate : catalog_names())
        if (candidate == name) return true;
    return false;
}

EnvironmentSpec environment_by_name(const std::string& name) {
    if (name == "original") return build_original();
    if (name == "mr") return build_mr();
    if (name == "3st") return build_3st();
    if (name == "id") return build_id();
    throw Error("UNKNOWN_ENVIRONMENT", "no catalog environment named '" + name + "'");
}

double default_threshold(const std::string& name) {
    // mr rescales the first objective's range from [0,1] to [-1,1], so the
    // 0.88 requirement maps to 0.88*1 + 0.12*(-1) = 0.76.
    return name == "mr" ? 0.76 : 0.88;
}

namespace {

void reject_unknown_keys(const ordered_json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known)
            throw Error("PARSE_ERROR", "unknown key '" + item.key() + "' in " + where);
    }
}

StateRef parse_next(const ordered_json& value, const EnvironmentSpec& spec) {
    const std::string name = value.get<std::string>();
    if (name == "$success") return StateRef::success();
    if (name == "$failure") return StateRef::failure();
    const int index = spec.state_index(name);
    if (index < 0) throw Error("PARSE_ERROR", "unknown next-state name '" + name + "'");
    return StateRef::to(index);
}

}  // namespace

EnvironmentSpec spec_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("PARSE_ERROR", e.what());
    }

    try {
        reject_unknown_keys(doc, {"name", "states", "start_state", "horizon", "objectives",
                                  "dynamics"},
                            "environment spec");

        EnvironmentSpec spec;
        spec.name = doc.at("name").get<std::string>();
        for (const auto& state_name : doc.at("states"))
            spec.states.push_back({state_name.get<std::string>(), {}});
        spec.start_state = spec.state_index(doc.at("start_state").get<std::string>());
        if (spec.start_state < 0 && !spec.states.empty())
            throw Error("PARSE_ERROR", "start_state '" +
                                           doc.at("start_state").get<std::string>() +
                                           "' is not in states");
        spec.horizon = doc.at("horizon").get<int>();
        for (const auto& objective : doc.at("objectives"))
            spec.objectives.push_back(objective.get<std::string>());

        for (const auto& entry : doc.at("dynamics")) {
            reject_unknown_keys(entry, {"state", "action", "initial", "outcomes"},
                                "dynamics entry");
            const std::string state_name = entry.at("state").get<std::string>();
            const int state = spec.state_index(state_name);
            if (state < 0)
                throw Error("PARSE_ERROR", "dynamics references unknown state '" + state_name +
                                               "'");
            ActionSpec action;
            action.name = entry.at("action").get<std::string>();
            const std::string initial = entry.at("initial").get<std::string>();
            if (initial.size() != 1)
                throw Error("PARSE_ERROR", "initial must be a single character, got '" +
                                               initial + "'");
            action.initial = initial[0];
            for (const auto& outcome_json : entry.at("outcomes")) {
                reject_unknown_keys(outcome_json, {"p", "next", "reward"}, "outcome");
                Outcome outcome;
                outcome.probability = outcome_json.at("p").get<double>();
                outcome.next = parse_next(outcome_json.at("next"), spec);
                const auto& reward = outcome_json.at("reward");
                outcome.reward = RewardVector(reward.size());
                for (int i = 0; i < static_cast<int>(reward.size()); ++i)
                    outcome.reward[i] = reward[i].get<double>();
                action.outcomes.push_back(std::move(outcome));
            }
            spec.states[state].actions.push_back(std::move(action));
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error("PARSE_ERROR", e.what());
    }
}

std::string spec_to_json(const EnvironmentSpec& spec) {
    ordered_json doc;
    doc["name"] = spec.name;
    doc["states"] = ordered_json::array();
    for (const StateSpec& state : spec.states) doc["states"].push_back(state.name);
    doc["start_state"] = spec.states.at(spec.start_state).name;
    doc["horizon"] = spec.horizon;
    doc["objectives"] = spec.objectives;
    doc["dynamics"] = ordered_json::array();
    for (const StateSpec& state : spec.states) {
        for (const ActionSpec& action : state.actions) {
            ordered_json entry;
            entry["state"] = state.name;
            entry["action"] = action.name;
            entry["initial"] = std::string(1, action.initial);
            entry["outcomes"] = ordered_json::array();
            for (const Outcome& outcome : action.outcomes) {
                ordered_json outcome_json;
                outcome_json["p"] = outcome.probability;
                switch (outcome.next.kind) {
                    case StateRef::Kind::Success: outcome_json["next"] = "$success"; break;
                    case StateRef::Kind::Failure: outcome_json["next"] = "$failure"; break;
                    case StateRef::Kind::State:
                        outcome_json["next"] = spec.states.at(outcome.next.state).name;
                        break;
                }
                ordered_json reward = ordered_json::array();
                for (int i = 0; i < outcome.reward.size(); ++i) reward.push_back(outcome.reward[i]);
                outcome_json["reward"] = std::move(reward);
                entry["outcomes"].push_back(std::move(outcome_json));
            }
            doc["dynamics"].push_back(std::move(entry));
        }
    }
    return doc.dump(2) + "\n";
}

EnvironmentSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IO_ERROR", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    EnvironmentSpec spec = spec_from_json(buffer.str());
    ensure_valid(spec);
    return spec;
}

EnvironmentSpec resolve_environment(const std::string& name_or_path) {
    if (is_catalog_name(name_or_path)) return environment_by_name(name_or_path);
    if (!std::filesystem::exists(name_or_path))
        throw Error("UNKNOWN_ENVIRONMENT",
                    "'" + name_or_path + "' is neither a catalog name nor a file");
    return load_spec(name_or_path);
}

}  // namespace morl
