#pragma once

#include <gcso/automaton.hpp>
#include <gcso/errors.hpp>
#include <gcso/observation.hpp>
#include <gcso/secret_model.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gcso {

// Set of state-secret pairs, kept in canonical order: by system-state name, then
// by secret-state name. Two nodes denote the same set iff their vectors are equal.
struct VerifierNode {
    std::vector<StateSecretPair> pairs;
    friend bool operator==(const VerifierNode&, const VerifierNode&) = default;
};

struct VerifierNodeHash {
    std::size_t operator()(const VerifierNode& node) const noexcept
    {
        std::size_t seed = node.pairs.size();
        for (const auto& p : node.pairs) {
            seed ^= std::hash<std::uint64_t>{}((std::uint64_t{p.system.index} << 32) | p.secret.index)
                    + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        }
        return seed;
    }
};

struct Limits {
    std::size_t max_nodes = 1'000'000;
};

namespace detail {

// Name-order ranks used to canonicalize nodes.
class PairOrder {
public:
    PairOrder(const Dfa& g, const DynamicSecretModel& h)
        : system_rank_(rank(g.state_names())), secret_rank_(rank(h.model().state_names()))
    {
    }

    VerifierNode canonical(std::vector<StateSecretPair> pairs) const
    {
        std::sort(pairs.begin(), pairs.end(), [this](const StateSecretPair& a, const StateSecretPair& b) {
            return std::pair(system_rank_[a.system.index], secret_rank_[a.secret.index])
                   < std::pair(system_rank_[b.system.index], secret_rank_[b.secret.index]);
        });
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        return VerifierNode{std::move(pairs)};
    }

private:
    static std::vector<std::size_t> rank(const std::vector<std::string>& names)
    {
        std::vector<std::size_t> order(names.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
        std::vector<std::size_t> ranks(names.size());
        for (std::size_t r = 0; r < order.size(); ++r)
            ranks[order[r]] = r;
        return ranks;
    }

    std::vector<std::size_t> system_rank_;
    std::vector<std::size_t> secret_rank_;
};

inline void check_compatible(const Dfa& g, const DynamicSecretModel& h)
{
    if (h.system_state_count() != g.state_count() || h.model().event_count() != g.event_count())
        throw DomainError("secret model was not bound to this system");
}

inline std::optional<VerifierNode> successor(const Dfa& g, const DynamicSecretModel& h, const PairOrder& order,
                                             const VerifierNode& z, EventId t)
{
    std::vector<StateSecretPair> stepped;
    for (const auto& p : z.pairs)
        if (auto x = g.step(p.system, t))
            stepped.push_back({*x, h.step(p.secret, t)});
    if (stepped.empty())
        return std::nullopt;
    return order.canonical(unobservable_closure_pairs(g, h, stepped));
}

} // namespace detail

inline VerifierNode initial_node(const Dfa& g, const DynamicSecretModel& h)
{
    detail::check_compatible(g, h);
    const StateSecretPair start{g.initial(), h.initial()};
    return detail::PairOrder(g, h).canonical(unobservable_closure_pairs(g, h, std::span(&start, 1)));
}

// Observable successor of `z`; absent when no pair of `z` enables `t` in g.
inline std::optional<VerifierNode> node_successor(const Dfa& g, const DynamicSecretModel& h,
                                                  const VerifierNode& z, EventId t)
{
    detail::check_compatible(g, h);
    if (!g.is_observable(t))
        throw DomainError("event '" + g.event_name(t) + "' is not observable");
    return detail::successor(g, h, detail::PairOrder(g, h), z, t);
}

class Verifier;

inline Verifier explore_verifier(const Dfa& g, const DynamicSecretModel& h, const Limits& limits,
                                 const std::function<bool(const VerifierNode&)>& stop);

// Accessible part of the verifier, stored in breadth-first discovery order.
// Node 0 is the initial node. Each node remembers the event and parent through
// which it was first discovered, which is its shortlex-least observation.
class Verifier {
public:
    using NodeIndex = std::size_t;

    const std::vector<VerifierNode>& nodes() const noexcept { return nodes_; }
    const VerifierNode& node(NodeIndex i) const { return nodes_.at(i); }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t transition_count() const noexcept { return transition_count_; }
    NodeIndex initial() const noexcept { return 0; }

    // Observable events in declared-alphabet order.
    std::span<const EventId> alphabet() const noexcept { return alphabet_; }

    // False when construction stopped early at a node accepted by the stop predicate.
    bool complete() const noexcept { return complete_; }

    std::optional<NodeIndex> successor(NodeIndex z, EventId t) const
    {
        auto column = event_column(t);
        const auto& row = transitions_.at(z);
        if (row.empty())
            return std::nullopt;
        return row[column];
    }

    std::optional<NodeIndex> run(std::span<const EventId> observation) const
    {
        std::optional<NodeIndex> z = initial();
        for (EventId t : observation) {
            z = successor(*z, t);
            if (!z)
                return std::nullopt;
        }
        return z;
    }

    bool accepts(std::span<const EventId> observation) const { return run(observation).has_value(); }

    // Shortlex-least observation reaching `z`.
    Observation path_to(NodeIndex z) const
    {
        Observation out;
        for (auto cur = z; parents_.at(cur); cur = parents_[cur]->first)
            out.push_back(parents_[cur]->second);
        std::reverse(out.begin(), out.end());
        return out;
    }

    // Outgoing edges of `z` as (event, target), in alphabet order.
    std::vector<std::pair<EventId, NodeIndex>> edges(NodeIndex z) const
    {
        std::vector<std::pair<EventId, NodeIndex>> out;
        const auto& row = transitions_.at(z);
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c])
                out.emplace_back(alphabet_[c], *row[c]);
        return out;
    }

private:
    friend Verifier explore_verifier(const Dfa&, const DynamicSecretModel&, const Limits&,
                                     const std::function<bool(const VerifierNode&)>&);

    std::size_t event_column(EventId t) const
    {
        auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), t);
        if (it == alphabet_.end() || *it != t)
            throw DomainError("event index " + std::to_string(t.index) + " is not an observable event");
        return static_cast<std::size_t>(it - alphabet_.begin());
    }

    std::vector<VerifierNode> nodes_;
    std::vector<std::vector<std::optional<NodeIndex>>> transitions_;
    std::vector<std::optional<std::pair<NodeIndex, EventId>>> parents_;
    std::vector<EventId> alphabet_;
    std::size_t transition_count_ = 0;
    bool complete_ = true;
};

// Breadth-first construction from the initial node, events in declared order.
// Stops as soon as a discovered node satisfies `stop` (the node is kept, its
// successors are not expanded). Throws ResourceLimitError past `limits.max_nodes`.
inline Verifier explore_verifier(const Dfa& g, const DynamicSecretModel& h, const Limits& limits,
                                 const std::function<bool(const VerifierNode&)>& stop)
{
    detail::check_compatible(g, h);
    const detail::PairOrder order(g, h);

    Verifier v;
    v.alphabet_.assign(g.observable_events().begin(), g.observable_events().end());
    std::unordered_map<VerifierNode, Verifier::NodeIndex, VerifierNodeHash> index;

    auto add = [&](VerifierNode node, std::optional<std::pair<Verifier::NodeIndex, EventId>> parent) {
        if (v.nodes_.size() >= limits.max_nodes)
            throw ResourceLimitError(v.nodes_.size(), limits.max_nodes);
        const auto id = v.nodes_.size();
        index.emplace(node, id);
        v.nodes_.push_back(std::move(node));
        v.transitions_.emplace_back();
        v.parents_.push_back(parent);
        return id;
    };

    const StateSecretPair start{g.initial(), h.initial()};
    add(order.canonical(unobservable_closure_pairs(g, h, std::span(&start, 1))), std::nullopt);
    if (stop && stop(v.nodes_[0])) {
        v.complete_ = false;
        return v;
    }

    for (Verifier::NodeIndex z = 0; z < v.nodes_.size(); ++z) {
        std::vector<std::optional<Verifier::NodeIndex>> row(v.alphabet_.size());
        for (std::size_t c = 0; c < v.alphabet_.size(); ++c) {
            auto next = detail::successor(g, h, order, v.nodes_[z], v.alphabet_[c]);
            if (!next)
                continue;
            if (auto it = index.find(*next); it != index.end()) {
                row[c] = it->second;
            } else {
                row[c] = add(std::move(*next), std::pair(z, v.alphabet_[c]));
                if (stop && stop(v.nodes_[*row[c]])) {
                    ++v.transition_count_;
                    v.transitions_[z] = std::move(row);
                    v.complete_ = false;
                    return v;
                }
            }
            ++v.transition_count_;
        }
        v.transitions_[z] = std::move(row);
    }
    return v;
}

inline Verifier build_verifier(const Dfa& g, const DynamicSecretModel& h, const Limits& limits = {})
{
    return explore_verifier(g, h, limits, {});
}

} // namespace gcso
