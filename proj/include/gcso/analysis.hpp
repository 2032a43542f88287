#pragma once

#include <gcso/automaton.hpp>
#include <gcso/errors.hpp>
#include <gcso/observation.hpp>
#include <gcso/secret_model.hpp>
#include <gcso/verifier.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace gcso {

struct VerdictStats {
    std::size_t nodes = 0;
    std::size_t transitions = 0;
};

// Outcome of an opacity check. `witness` is present exactly when `opaque` is false
// and is a shortest observation, ties broken by declared-alphabet order.
struct Verdict {
    bool opaque = true;
    std::optional<Observation> witness;
    std::optional<VerifierNode> violating_node;
    VerdictStats stats;
};

struct CheckOptions {
    Limits limits;
    // Stop at the first violating node instead of materializing the whole verifier.
    bool short_circuit = true;
};

// True iff every pair's system state belongs to its own secret.
inline bool is_violating(const VerifierNode& z, const DynamicSecretModel& h)
{
    return std::all_of(z.pairs.begin(), z.pairs.end(),
                       [&](const StateSecretPair& p) { return h.contains(p.secret, p.system); });
}

// First violating node of `v` in discovery order, reported as a verdict.
inline Verdict verdict_of(const Verifier& v, const DynamicSecretModel& h)
{
    Verdict verdict;
    verdict.stats = {v.node_count(), v.transition_count()};
    for (Verifier::NodeIndex z = 0; z < v.node_count(); ++z) {
        if (is_violating(v.node(z), h)) {
            verdict.opaque = false;
            verdict.witness = v.path_to(z);
            verdict.violating_node = v.node(z);
            break;
        }
    }
    return verdict;
}

// Generalized current-state opacity of g with respect to h.
// Throws ResourceLimitError when the node cap is reached; no verdict exists then.
inline Verdict check_gcso(const Dfa& g, const DynamicSecretModel& h, const CheckOptions& options = {})
{
    if (!options.short_circuit)
        return verdict_of(build_verifier(g, h, options.limits), h);
    const auto v = explore_verifier(g, h, options.limits,
                                    [&](const VerifierNode& z) { return is_violating(z, h); });
    return verdict_of(v, h);
}

// Classic current-state opacity against a constant secret, by a plain observer
// (subset construction over the system states). Shares no code with the verifier.
inline Verdict check_cso_classic(const Dfa& g, std::span<const StateId> secret, const Limits& limits = {})
{
    std::vector<bool> in_secret(g.state_count(), false);
    for (StateId x : secret) {
        if (x.index >= g.state_count())
            throw DomainError("secret state index " + std::to_string(x.index) + " is not a state of the system");
        in_secret[x.index] = true;
    }

    auto reach = [&](std::vector<bool> estimate) {
        std::vector<std::uint32_t> stack;
        for (std::uint32_t x = 0; x < estimate.size(); ++x)
            if (estimate[x])
                stack.push_back(x);
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (EventId u : g.unobservable_events()) {
                if (auto next = g.step(StateId{x}, u); next && !estimate[next->index]) {
                    estimate[next->index] = true;
                    stack.push_back(next->index);
                }
            }
        }
        return estimate;
    };

    auto reveals = [&](const std::vector<bool>& estimate) {
        bool any = false;
        for (std::size_t x = 0; x < estimate.size(); ++x) {
            if (!estimate[x])
                continue;
            if (!in_secret[x])
                return false;
            any = true;
        }
        return any;
    };

    std::vector<std::vector<bool>> estimates;
    std::vector<std::optional<std::pair<std::size_t, EventId>>> parent;
    std::map<std::vector<bool>, std::size_t> known;
    Verdict verdict;

    auto finish = [&](std::size_t found) {
        verdict.opaque = false;
        Observation w;
        for (auto cur = found; parent[cur]; cur = parent[cur]->first)
            w.push_back(parent[cur]->second);
        std::reverse(w.begin(), w.end());
        verdict.witness = std::move(w);
    };

    auto discover = [&](std::vector<bool> estimate, std::optional<std::pair<std::size_t, EventId>> from) {
        if (estimates.size() >= limits.max_nodes)
            throw ResourceLimitError(estimates.size(), limits.max_nodes);
        known.emplace(estimate, estimates.size());
        estimates.push_back(std::move(estimate));
        parent.push_back(from);
        return estimates.size() - 1;
    };

    std::vector<bool> start(g.state_count(), false);
    start[g.initial().index] = true;
    discover(reach(std::move(start)), std::nullopt);
    if (reveals(estimates[0])) {
        finish(0);
        verdict.stats = {1, 0};
        return verdict;
    }

    std::size_t edges = 0;
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        for (EventId t : g.observable_events()) {
            std::vector<bool> next(g.state_count(), false);
            bool enabled = false;
            for (std::uint32_t x = 0; x < g.state_count(); ++x) {
                if (!estimates[i][x])
                    continue;
                if (auto y = g.step(StateId{x}, t)) {
                    next[y->index] = true;
                    enabled = true;
                }
            }
            if (!enabled)
                continue;
            next = reach(std::move(next));
            ++edges;
            if (known.contains(next))
                continue;
            const auto id = discover(std::move(next), std::pair(i, t));
            if (reveals(estimates[id])) {
                finish(id);
                verdict.stats = {estimates.size(), edges};
                return verdict;
            }
        }
    }
    verdict.stats = {estimates.size(), edges};
    return verdict;
}

} // namespace gcso
