#pragma once

#include <gcso/errors.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gcso {

// Index of a state inside the automaton that declared it.
struct StateId {
    std::uint32_t index = 0;
    friend auto operator<=>(StateId, StateId) = default;
};

// Index of an event inside the automaton that declared it.
// Events are numbered in declared-alphabet order.
struct EventId {
    std::uint32_t index = 0;
    friend auto operator<=>(EventId, EventId) = default;
};

using Word = std::vector<EventId>;

struct TransitionSpec {
    std::string source;
    std::string event;
    std::string target;
    friend bool operator==(const TransitionSpec&, const TransitionSpec&) = default;
};

// Name-level description of an automaton, possibly ill-formed.
// `Dfa::from_spec` accepts exactly the descriptions for which `validate` reports nothing.
struct DfaSpec {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::vector<std::string> observable;
    std::string initial;
    std::vector<TransitionSpec> transitions;
    friend bool operator==(const DfaSpec&, const DfaSpec&) = default;
};

inline bool is_valid_name(std::string_view name)
{
    if (name.empty())
        return false;
    for (char c : name) {
        switch (c) {
        case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
        case '#': case '=': case '[': case ']':
            return false;
        default:
            break;
        }
    }
    return true;
}

namespace detail {

inline void check_names(const std::vector<std::string>& names, const char* what,
                        ViolationKind duplicate_kind, ValidationReport& report)
{
    std::set<std::string_view> seen;
    for (const auto& name : names) {
        if (!is_valid_name(name))
            report.add(ViolationKind::BadName, std::string(what) + " name '" + name + "' is not a valid identifier");
        if (!seen.insert(name).second)
            report.add(duplicate_kind, std::string(what) + " '" + name + "' declared more than once");
    }
}

} // namespace detail

inline ValidationReport validate(const DfaSpec& spec)
{
    ValidationReport report;
    detail::check_names(spec.states, "state", ViolationKind::DuplicateState, report);
    detail::check_names(spec.alphabet, "event", ViolationKind::DuplicateEvent, report);

    const std::set<std::string_view> states(spec.states.begin(), spec.states.end());
    const std::set<std::string_view> events(spec.alphabet.begin(), spec.alphabet.end());

    if (!states.contains(spec.initial))
        report.add(ViolationKind::UnknownState, "initial state '" + spec.initial + "' is not a declared state");

    std::set<std::string_view> observable;
    for (const auto& e : spec.observable) {
        if (!events.contains(e))
            report.add(ViolationKind::ObservableNotInAlphabet, "observable event '" + e + "' is not in the alphabet");
        if (!observable.insert(e).second)
            report.add(ViolationKind::DuplicateEvent, "observable event '" + e + "' listed more than once");
    }

    std::set<std::pair<std::string_view, std::string_view>> keys;
    for (const auto& t : spec.transitions) {
        const std::string where = "transition '" + t.source + " " + t.event + " " + t.target + "'";
        if (!states.contains(t.source))
            report.add(ViolationKind::UnknownState, where + ": source is not a declared state");
        if (!states.contains(t.target))
            report.add(ViolationKind::UnknownState, where + ": target is not a declared state");
        if (!events.contains(t.event))
            report.add(ViolationKind::UnknownEvent, where + ": event is not in the alphabet");
        if (!keys.emplace(t.source, t.event).second)
            report.add(ViolationKind::Nondeterministic,
                       where + ": state '" + t.source + "' already has a transition on '" + t.event + "'");
    }
    return report;
}

// Deterministic, possibly partial, finite automaton with an observable/unobservable
// event partition. Immutable once built.
class Dfa {
public:
    static Dfa from_spec(const DfaSpec& spec)
    {
        if (auto report = validate(spec); !report.ok())
            throw ValidationError(std::move(report));

        Dfa dfa;
        dfa.state_names_ = spec.states;
        dfa.event_names_ = spec.alphabet;
        for (std::uint32_t i = 0; i < dfa.state_names_.size(); ++i)
            dfa.state_index_.emplace(dfa.state_names_[i], StateId{i});
        for (std::uint32_t i = 0; i < dfa.event_names_.size(); ++i)
            dfa.event_index_.emplace(dfa.event_names_[i], EventId{i});

        dfa.observable_mask_.assign(dfa.event_names_.size(), false);
        for (const auto& e : spec.observable)
            dfa.observable_mask_[dfa.event_index_.at(e).index] = true;
        for (std::uint32_t i = 0; i < dfa.event_names_.size(); ++i)
            (dfa.observable_mask_[i] ? dfa.observable_ : dfa.unobservable_).push_back(EventId{i});

        dfa.initial_ = dfa.state_index_.at(spec.initial);
        dfa.table_.assign(dfa.state_names_.size() * dfa.event_names_.size(), undefined);
        for (const auto& t : spec.transitions) {
            const auto src = dfa.state_index_.at(t.source);
            const auto ev = dfa.event_index_.at(t.event);
            dfa.table_[dfa.slot(src, ev)] = dfa.state_index_.at(t.target).index;
        }
        dfa.transition_count_ = spec.transitions.size();
        return dfa;
    }

    std::size_t state_count() const noexcept { return state_names_.size(); }
    std::size_t event_count() const noexcept { return event_names_.size(); }
    std::size_t transition_count() const noexcept { return transition_count_; }
    StateId initial() const noexcept { return initial_; }

    const std::string& state_name(StateId x) const
    {
        check(x);
        return state_names_[x.index];
    }

    const std::string& event_name(EventId e) const
    {
        check(e);
        return event_names_[e.index];
    }

    const std::vector<std::string>& state_names() const noexcept { return state_names_; }
    const std::vector<std::string>& event_names() const noexcept { return event_names_; }

    std::optional<StateId> find_state(std::string_view name) const
    {
        auto it = state_index_.find(std::string(name));
        if (it == state_index_.end())
            return std::nullopt;
        return it->second;
    }

    std::optional<EventId> find_event(std::string_view name) const
    {
        auto it = event_index_.find(std::string(name));
        if (it == event_index_.end())
            return std::nullopt;
        return it->second;
    }

    StateId state(std::string_view name) const
    {
        if (auto x = find_state(name))
            return *x;
        throw DomainError("unknown state '" + std::string(name) + "'");
    }

    EventId event(std::string_view name) const
    {
        if (auto e = find_event(name))
            return *e;
        throw DomainError("unknown event '" + std::string(name) + "'");
    }

    bool is_observable(EventId e) const
    {
        check(e);
        return observable_mask_[e.index];
    }

    // Observable and unobservable events, each in declared-alphabet order.
    std::span<const EventId> observable_events() const noexcept { return observable_; }
    std::span<const EventId> unobservable_events() const noexcept { return unobservable_; }

    std::optional<StateId> step(StateId x, EventId e) const
    {
        check(x);
        check(e);
        const auto target = table_[slot(x, e)];
        if (target == undefined)
            return std::nullopt;
        return StateId{target};
    }

    std::optional<StateId> run(StateId x, std::span<const EventId> word) const
    {
        check(x);
        for (EventId e : word)
            check(e);
        std::optional<StateId> current = x;
        for (EventId e : word) {
            current = step(*current, e);
            if (!current)
                return std::nullopt;
        }
        return current;
    }

    bool generates(std::span<const EventId> word) const { return run(initial_, word).has_value(); }

    DfaSpec to_spec() const
    {
        DfaSpec spec;
        spec.states = state_names_;
        spec.alphabet = event_names_;
        for (EventId e : observable_)
            spec.observable.push_back(event_names_[e.index]);
        spec.initial = state_names_[initial_.index];
        for (std::uint32_t x = 0; x < state_names_.size(); ++x)
            for (std::uint32_t e = 0; e < event_names_.size(); ++e)
                if (auto target = table_[slot(StateId{x}, EventId{e})]; target != undefined)
                    spec.transitions.push_back({state_names_[x], event_names_[e], state_names_[target]});
        return spec;
    }

    // Whitespace-separated event names to a word over this alphabet.
    Word parse_word(std::string_view text) const
    {
        Word word;
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
            std::size_t end = pos;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
                ++end;
            if (end > pos)
                word.push_back(event(text.substr(pos, end - pos)));
            pos = end;
        }
        return word;
    }

    std::string format_word(std::span<const EventId> word) const
    {
        std::string out;
        for (EventId e : word) {
            if (!out.empty())
                out += ' ';
            out += event_name(e);
        }
        return out;
    }

private:
    static constexpr std::uint32_t undefined = std::numeric_limits<std::uint32_t>::max();

    Dfa() = default;

    std::size_t slot(StateId x, EventId e) const noexcept { return x.index * event_names_.size() + e.index; }

    void check(StateId x) const
    {
        if (x.index >= state_names_.size())
            throw DomainError("state index " + std::to_string(x.index) + " out of range");
    }

    void check(EventId e) const
    {
        if (e.index >= event_names_.size())
            throw DomainError("event index " + std::to_string(e.index) + " out of range");
    }

    std::vector<std::string> state_names_;
    std::vector<std::string> event_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::unordered_map<std::string, EventId> event_index_;
    std::vector<bool> observable_mask_;
    std::vector<EventId> observable_;
    std::vector<EventId> unobservable_;
    StateId initial_;
    std::vector<std::uint32_t> table_;
    std::size_t transition_count_ = 0;
};

inline std::optional<StateId> step(const Dfa& dfa, StateId x, EventId e) { return dfa.step(x, e); }

inline std::optional<StateId> run(const Dfa& dfa, StateId x, std::span<const EventId> word)
{
    return dfa.run(x, word);
}

} // namespace gcso
