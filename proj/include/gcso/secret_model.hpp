#pragma once

#include <gcso/automaton.hpp>
#include <gcso/errors.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gcso {

// A set of system states, sorted and duplicate-free.
using Secret = std::vector<StateId>;

struct MembersSpec {
    std::string state;
    std::vector<std::string> members;
    friend bool operator==(const MembersSpec&, const MembersSpec&) = default;
};

// Name-level description of a dynamic-secret model. `automaton.observable` is unused.
struct SecretModelSpec {
    DfaSpec automaton;
    std::vector<MembersSpec> members;
    friend bool operator==(const SecretModelSpec&, const SecretModelSpec&) = default;
};

// Checks `spec` as a dynamic-secret model relative to the system `g`: well-formed
// deterministic automaton, same alphabet as g, a transition for every (state, event),
// and one members line per state naming only states of g.
inline ValidationReport validate_secret_model(const SecretModelSpec& spec, const Dfa& g)
{
    ValidationReport report = validate(spec.automaton);
    const auto& a = spec.automaton;

    const std::set<std::string> model_events(a.alphabet.begin(), a.alphabet.end());
    const std::set<std::string> system_events(g.event_names().begin(), g.event_names().end());
    for (const auto& e : system_events)
        if (!model_events.contains(e))
            report.add(ViolationKind::AlphabetMismatch, "event '" + e + "' of the system is missing from the secret model");
    for (const auto& e : model_events)
        if (!system_events.contains(e))
            report.add(ViolationKind::AlphabetMismatch, "event '" + e + "' of the secret model is not an event of the system");

    std::set<std::pair<std::string, std::string>> defined;
    for (const auto& t : a.transitions)
        defined.emplace(t.source, t.event);
    for (const auto& y : std::set<std::string>(a.states.begin(), a.states.end()))
        for (const auto& e : model_events)
            if (!defined.contains({y, e}))
                report.add(ViolationKind::MissingTransition, "no transition from (" + y + ", " + e + ")");

    const std::set<std::string> model_states(a.states.begin(), a.states.end());
    std::set<std::string> described;
    for (const auto& line : spec.members) {
        if (!model_states.contains(line.state))
            report.add(ViolationKind::UnknownState, "members given for undeclared secret-model state '" + line.state + "'");
        if (!described.insert(line.state).second)
            report.add(ViolationKind::DuplicateMembers, "secret-model state '" + line.state + "' has more than one members line");
        for (const auto& x : line.members)
            if (!g.find_state(x))
                report.add(ViolationKind::MemberNotInSystem,
                           "member '" + x + "' of '" + line.state + "' is not a state of the system");
    }
    for (const auto& y : model_states)
        if (!described.contains(y))
            report.add(ViolationKind::MissingMembers, "secret-model state '" + y + "' has no members line");
    return report;
}

// Complete automaton over the system alphabet whose states denote secrets.
// The underlying automaton's alphabet is reordered to the system's declared order,
// so EventId values of g and of the model coincide.
class DynamicSecretModel {
public:
    static DynamicSecretModel bind(const SecretModelSpec& spec, const Dfa& g)
    {
        if (auto report = validate_secret_model(spec, g); !report.ok())
            throw ValidationError(std::move(report));

        DfaSpec aligned = spec.automaton;
        aligned.alphabet = g.event_names();
        aligned.observable.clear();
        for (EventId e : g.observable_events())
            aligned.observable.push_back(g.event_name(e));

        DynamicSecretModel h(Dfa::from_spec(aligned));
        h.system_states_ = g.state_count();
        h.members_.resize(h.model_.state_count());
        h.mask_.assign(h.model_.state_count() * h.system_states_, false);
        for (const auto& line : spec.members) {
            const auto y = h.model_.state(line.state);
            for (const auto& name : line.members) {
                const auto x = g.state(name);
                h.mask_[y.index * h.system_states_ + x.index] = true;
            }
        }
        for (std::uint32_t y = 0; y < h.model_.state_count(); ++y)
            for (std::uint32_t x = 0; x < h.system_states_; ++x)
                if (h.mask_[y * h.system_states_ + x])
                    h.members_[y].push_back(StateId{x});
        return h;
    }

    const Dfa& model() const noexcept { return model_; }
    StateId initial() const noexcept { return model_.initial(); }
    std::size_t state_count() const noexcept { return model_.state_count(); }
    std::size_t system_state_count() const noexcept { return system_states_; }
    const std::string& state_name(StateId y) const { return model_.state_name(y); }

    const Secret& members(StateId y) const
    {
        model_.state_name(y);
        return members_[y.index];
    }

    bool contains(StateId y, StateId x) const
    {
        model_.state_name(y);
        if (x.index >= system_states_)
            throw DomainError("system state index " + std::to_string(x.index) + " out of range");
        return mask_[y.index * system_states_ + x.index];
    }

    // Successor in the model; a complete model always has one.
    StateId step(StateId y, EventId e) const
    {
        if (auto next = model_.step(y, e))
            return *next;
        throw CompletenessError("secret model has no transition from (" + model_.state_name(y) + ", "
                                + model_.event_name(e) + ")");
    }

    StateId run(std::span<const EventId> word) const
    {
        StateId y = model_.initial();
        for (EventId e : word)
            y = step(y, e);
        return y;
    }

    SecretModelSpec to_spec(const Dfa& g) const
    {
        SecretModelSpec spec;
        spec.automaton = model_.to_spec();
        spec.automaton.observable.clear();
        for (std::uint32_t y = 0; y < model_.state_count(); ++y) {
            MembersSpec line{model_.state_name(StateId{y}), {}};
            for (StateId x : members_[y])
                line.members.push_back(g.state_name(x));
            spec.members.push_back(std::move(line));
        }
        return spec;
    }

private:
    explicit DynamicSecretModel(Dfa model) : model_(std::move(model)) {}

    Dfa model_;
    std::size_t system_states_ = 0;
    std::vector<Secret> members_;
    std::vector<bool> mask_;
};

// The secret current after `word` has been generated.
inline Secret secret_after(const DynamicSecretModel& h, std::span<const EventId> word)
{
    return h.members(h.run(word));
}

// One-state model with self-loops on every event; its secret is always `s`.
inline DynamicSecretModel constant_secret_model(const Dfa& g, std::span<const StateId> s)
{
    SecretModelSpec spec;
    spec.automaton.states = {"S"};
    spec.automaton.alphabet = g.event_names();
    spec.automaton.initial = "S";
    for (const auto& e : g.event_names())
        spec.automaton.transitions.push_back({"S", e, "S"});
    MembersSpec line{"S", {}};
    std::set<StateId> unique(s.begin(), s.end());
    for (StateId x : unique) {
        if (x.index >= g.state_count())
            throw DomainError("secret state index " + std::to_string(x.index) + " is not a state of the system");
        line.members.push_back(g.state_name(x));
    }
    spec.members.push_back(std::move(line));
    return DynamicSecretModel::bind(spec, g);
}

// Names to a secret; throws DomainError for a name that is not a state of g.
inline Secret secret_from_names(const Dfa& g, std::span<const std::string> names)
{
    std::set<StateId> unique;
    for (const auto& name : names)
        unique.insert(g.state(name));
    return Secret(unique.begin(), unique.end());
}

} // namespace gcso
