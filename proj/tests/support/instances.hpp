#pragma once

#include <gcso/gcso.hpp>

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace gcso::testing {

inline std::string corpus(const std::string& name)
{
    return std::string(GCSO_CORPUS_DIR) + "/" + name;
}

struct Ex2 {
    Dfa g = load_system(corpus("ex2.aut"));
    DynamicSecretModel h = load_secret_model(corpus("ex2.sec"), g);

    StateId x(const char* name) const { return g.state(name); }
    StateId y(const char* name) const { return h.model().state(name); }
    EventId e(const char* name) const { return g.event(name); }
    Word w(const char* text) const { return g.parse_word(text); }
};

struct Shape {
    std::size_t max_states = 6;
    std::size_t max_events = 4;
    std::size_t max_secret_states = 3;
    double density = 0.55;
    // -1 random partition, 0 no unobservable events, 1 at least one unobservable event
    int unobservable = -1;
};

struct Instance {
    Dfa g;
    DynamicSecretModel h;
};

inline std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(std::mt19937& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

inline DfaSpec random_system_spec(std::mt19937& rng, const Shape& shape)
{
    DfaSpec spec;
    const auto n = pick(rng, 1, shape.max_states);
    const auto m = pick(rng, 1, shape.max_events);
    for (std::size_t i = 0; i < n; ++i)
        spec.states.push_back("q" + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i)
        spec.alphabet.push_back("e" + std::to_string(i));

    std::vector<bool> observable(m);
    for (auto&& o : observable)
        o = coin(rng, 0.6);
    if (shape.unobservable == 0)
        std::fill(observable.begin(), observable.end(), true);
    if (shape.unobservable == 1 && std::all_of(observable.begin(), observable.end(), [](bool b) { return b; }))
        observable[pick(rng, 0, m - 1)] = false;
    for (std::size_t i = 0; i < m; ++i)
        if (observable[i])
            spec.observable.push_back(spec.alphabet[i]);

    spec.initial = spec.states[pick(rng, 0, n - 1)];
    for (const auto& x : spec.states)
        for (const auto& e : spec.alphabet)
            if (coin(rng, shape.density))
                spec.transitions.push_back({x, e, spec.states[pick(rng, 0, n - 1)]});
    return spec;
}

inline SecretModelSpec random_secret_spec(std::mt19937& rng, const DfaSpec& system, const Shape& shape)
{
    SecretModelSpec spec;
    const auto k = pick(rng, 1, shape.max_secret_states);
    for (std::size_t i = 0; i < k; ++i)
        spec.automaton.states.push_back("y" + std::to_string(i));
    spec.automaton.alphabet = system.alphabet;
    spec.automaton.initial = spec.automaton.states[pick(rng, 0, k - 1)];
    for (const auto& y : spec.automaton.states)
        for (const auto& e : system.alphabet)
            spec.automaton.transitions.push_back({y, e, spec.automaton.states[pick(rng, 0, k - 1)]});
    // Dense secrets make violations common enough to exercise witnesses.
    const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    for (const auto& y : spec.automaton.states) {
        MembersSpec line{y, {}};
        for (const auto& x : system.states)
            if (coin(rng, p))
                line.members.push_back(x);
        spec.members.push_back(std::move(line));
    }
    return spec;
}

inline Instance random_instance(std::mt19937& rng, const Shape& shape = {})
{
    const auto system = random_system_spec(rng, shape);
    auto g = Dfa::from_spec(system);
    auto h = DynamicSecretModel::bind(random_secret_spec(rng, system, shape), g);
    return {std::move(g), std::move(h)};
}

inline Secret random_secret(std::mt19937& rng, const Dfa& g)
{
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    Secret s;
    for (std::uint32_t x = 0; x < g.state_count(); ++x)
        if (coin(rng, p))
            s.push_back(StateId{x});
    return s;
}

// All words over `events` of length at most `max_len`, shortest first.
inline std::vector<Word> all_words(std::span<const EventId> events, std::size_t max_len)
{
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const auto end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (EventId e : events) {
                Word w = out[i];
                w.push_back(e);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

inline std::vector<EventId> all_events(const Dfa& g)
{
    std::vector<EventId> out;
    for (std::uint32_t i = 0; i < g.event_count(); ++i)
        out.push_back(EventId{i});
    return out;
}

// The set {(x, y)} of a verifier node, order-independent.
inline std::set<StateSecretPair> as_set(const VerifierNode& z)
{
    return {z.pairs.begin(), z.pairs.end()};
}

} // namespace gcso::testing
