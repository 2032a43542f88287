#pragma once

#include <gcso/automaton.hpp>
#include <gcso/secret_model.hpp>

#include <algorithm>
#include <compare>
#include <deque>
#include <span>
#include <vector>

namespace gcso {

// Sequence of observable events.
using Observation = Word;

// Natural projection: erases unobservable events and keeps the order of the rest.
inline Observation project(const Dfa& dfa, std::span<const EventId> word)
{
    Observation out;
    for (EventId e : word)
        if (dfa.is_observable(e))
            out.push_back(e);
    return out;
}

// A system state together with a secret-model state.
struct StateSecretPair {
    StateId system;
    StateId secret;
    friend auto operator<=>(const StateSecretPair&, const StateSecretPair&) = default;
};

// All pairs reachable from `seed` by stepping g and h together on one common
// unobservable string. The result contains `seed` and is sorted by index.
inline std::vector<StateSecretPair> unobservable_closure_pairs(const Dfa& g, const DynamicSecretModel& h,
                                                               std::span<const StateSecretPair> seed)
{
    const std::size_t ys = h.state_count();
    std::vector<bool> seen(g.state_count() * ys, false);
    std::vector<StateSecretPair> out;
    std::deque<StateSecretPair> work;

    auto visit = [&](StateSecretPair p) {
        g.state_name(p.system);
        h.state_name(p.secret);
        auto slot = p.system.index * ys + p.secret.index;
        if (seen[slot])
            return;
        seen[slot] = true;
        out.push_back(p);
        work.push_back(p);
    };

    for (const auto& p : seed)
        visit(p);
    while (!work.empty()) {
        const auto p = work.front();
        work.pop_front();
        for (EventId u : g.unobservable_events()) {
            auto x = g.step(p.system, u);
            if (!x)
                continue;
            visit({*x, h.step(p.secret, u)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gcso
