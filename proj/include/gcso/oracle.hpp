#pragma once

// Brute-force reference semantics, used as ground truth in tests and by the
// `oracle` subcommand. Works on strings of the system only; never builds a verifier.

#include <gcso/automaton.hpp>
#include <gcso/observation.hpp>
#include <gcso/secret_model.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

namespace gcso {

// Length first, then declared-alphabet order.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

struct BoundedLanguage {
    std::set<Word, ShortlexLess> strings;
    std::size_t bound = 0;
    bool complete_up_to_bound = true;
};

// Every string generated by g of length at most `max_len`.
inline BoundedLanguage enumerate_language(const Dfa& g, std::size_t max_len)
{
    BoundedLanguage out;
    out.bound = max_len;
    Word prefix;
    auto dfs = [&](auto&& self, StateId x) -> void {
        out.strings.insert(prefix);
        if (prefix.size() == max_len)
            return;
        for (std::uint32_t e = 0; e < g.event_count(); ++e) {
            if (auto next = g.step(x, EventId{e})) {
                prefix.push_back(EventId{e});
                self(self, *next);
                prefix.pop_back();
            }
        }
    };
    dfs(dfs, g.initial());
    return out;
}

// Generated strings of length at most `max_len` whose projection is `observation`.
inline std::set<Word, ShortlexLess> consistent_strings(const Dfa& g, std::span<const EventId> observation,
                                                       std::size_t max_len)
{
    for (EventId t : observation)
        if (!g.is_observable(t))
            throw DomainError("event '" + g.event_name(t) + "' is not observable");

    std::set<Word, ShortlexLess> out;
    Word prefix;
    // `matched` observable events of `observation` have been produced by `prefix`.
    auto dfs = [&](auto&& self, StateId x, std::size_t matched) -> void {
        if (matched == observation.size())
            out.insert(prefix);
        if (prefix.size() == max_len)
            return;
        for (std::uint32_t i = 0; i < g.event_count(); ++i) {
            const EventId e{i};
            std::size_t next_matched = matched;
            if (g.is_observable(e)) {
                if (matched == observation.size() || observation[matched] != e)
                    continue;
                ++next_matched;
            }
            if (auto next = g.step(x, e)) {
                prefix.push_back(e);
                self(self, *next, next_matched);
                prefix.pop_back();
            }
        }
    };
    dfs(dfs, g.initial(), 0);
    return out;
}

// String length sufficient to reach every (state, secret) end pair of an observation
// of the given length: each observable event followed by a cycle-free unobservable
// path through the |X|*|Y| pairs.
inline std::size_t completeness_bound(const Dfa& g, const DynamicSecretModel& h, std::size_t observation_length)
{
    const std::size_t pairs = g.state_count() * h.state_count();
    return observation_length * pairs + pairs;
}

using PairImage = std::set<StateSecretPair>;
using ImageMap = std::map<Observation, PairImage, ShortlexLess>;

// For every observation of length at most `max_observation` produced by a generated
// string of length at most `max_len`, the set {(end state of sigma in g, end state of
// sigma in h)} over those strings sigma.
//
// Strings are enumerated breadth-first by length. Two strings with the same projection
// and the same end states in g and h have identical extensions, so only the first
// string of each such class is extended further; the images are unaffected.
// When `only` is given, strings whose projection is not a prefix of it are dropped.
inline ImageMap consistent_images(const Dfa& g, const DynamicSecretModel& h, std::size_t max_observation,
                                  std::size_t max_len, std::optional<Observation> only = std::nullopt)
{
    using Config = std::tuple<Observation, StateId, StateId>;
    std::set<Config> seen;
    std::vector<Config> frontier;
    ImageMap images;

    auto keep = [&](const Observation& obs) {
        if (obs.size() > max_observation)
            return false;
        if (!only)
            return true;
        return obs.size() <= only->size() && std::equal(obs.begin(), obs.end(), only->begin());
    };

    Config start{Observation{}, g.initial(), h.initial()};
    seen.insert(start);
    frontier.push_back(start);
    images[{}].insert({g.initial(), h.initial()});

    for (std::size_t length = 0; length < max_len && !frontier.empty(); ++length) {
        std::vector<Config> next_frontier;
        for (const auto& [obs, x, y] : frontier) {
            for (std::uint32_t i = 0; i < g.event_count(); ++i) {
                const EventId e{i};
                auto x2 = g.step(x, e);
                if (!x2)
                    continue;
                Observation obs2 = obs;
                if (g.is_observable(e))
                    obs2.push_back(e);
                if (!keep(obs2))
                    continue;
                Config c{obs2, *x2, h.step(y, e)};
                if (!seen.insert(c).second)
                    continue;
                images[obs2].insert({*x2, std::get<2>(c)});
                next_frontier.push_back(std::move(c));
            }
        }
        frontier = std::move(next_frontier);
    }

    if (only)
        std::erase_if(images, [&](const auto& kv) { return kv.first != *only; });
    return images;
}

// Pair image of the consistent strings of `observation`; empty when the observation
// is not produced by any generated string of length at most `max_len`.
inline PairImage consistent_image(const Dfa& g, const DynamicSecretModel& h, std::span<const EventId> observation,
                                  std::size_t max_len)
{
    Observation target(observation.begin(), observation.end());
    for (EventId t : target)
        if (!g.is_observable(t))
            throw DomainError("event '" + g.event_name(t) + "' is not observable");
    auto images = consistent_images(g, h, target.size(), max_len, target);
    auto it = images.find(target);
    return it == images.end() ? PairImage{} : it->second;
}

// Projections of generated strings, up to the given observation length, each
// computed with the completeness bound for that length.
inline std::set<Observation, ShortlexLess> observable_language(const Dfa& g, std::size_t max_observation)
{
    const auto h = constant_secret_model(g, {});
    std::set<Observation, ShortlexLess> out;
    for (const auto& [obs, image] : consistent_images(g, h, max_observation, completeness_bound(g, h, max_observation)))
        out.insert(obs);
    return out;
}

struct BoundedVerdict {
    std::optional<Observation> violating;
    std::size_t depth = 0;
};

// Shortlex-least observation of length at most `depth` all of whose consistent
// strings end inside their own current secret; absent when there is none.
inline BoundedVerdict gcso_bounded_oracle(const Dfa& g, const DynamicSecretModel& h, std::size_t depth)
{
    BoundedVerdict out;
    out.depth = depth;
    for (const auto& [obs, image] : consistent_images(g, h, depth, completeness_bound(g, h, depth))) {
        const bool all_inside = std::all_of(image.begin(), image.end(), [&](const StateSecretPair& p) {
            return h.contains(p.secret, p.system);
        });
        if (all_inside) {
            out.violating = obs;
            break;
        }
    }
    return out;
}

} // namespace gcso
