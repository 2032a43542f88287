#pragma once

// Two-string scenarios: observation "o" is produced only by sigma1 = o (ending in x1
// under secret S1) and sigma2 = u o (ending in x2, or in x1 for case c, under the
// secret reached after u). Cases a-c are violations at "o", d-f are not.

#include "instances.hpp"

#include <array>
#include <string>

namespace gcso::testing {

struct PairwiseCase {
    char label;
    bool toggles;           // u moves S1 to S2
    bool same_end_state;    // sigma2 ends in x1 as well
    std::vector<std::string> s1;
    std::vector<std::string> s2;
    bool violating;
};

inline const std::array<PairwiseCase, 6>& pairwise_cases()
{
    static const std::array<PairwiseCase, 6> cases{{
        {'a', false, false, {"x1", "x2"}, {}, true},          // one secret holding both end states
        {'b', true, false, {"x1"}, {"x2"}, true},             // each end state in its own, disjoint secret
        {'c', true, true, {"x1"}, {"x1", "x2"}, true},        // one end state, two secrets both holding it
        {'d', true, false, {"x2"}, {"x1"}, false},            // union covers both, neither pair matches
        {'e', true, false, {"x1"}, {"x1"}, false},            // x1 in S1 but x2 outside S2
        {'f', true, false, {"p"}, {"x0"}, false},             // neither end state secret
    }};
    return cases;
}

inline Instance pairwise_instance(const PairwiseCase& c)
{
    DfaSpec g;
    g.states = {"x0", "p", "x1", "x2"};
    g.alphabet = {"o", "u"};
    g.observable = {"o"};
    g.initial = "x0";
    g.transitions = {{"x0", "o", "x1"}, {"x0", "u", "p"}, {"p", "o", c.same_end_state ? "x1" : "x2"}};

    SecretModelSpec h;
    h.automaton.states = {"S1", "S2"};
    h.automaton.alphabet = g.alphabet;
    h.automaton.initial = "S1";
    h.automaton.transitions = {{"S1", "o", "S1"}, {"S1", "u", c.toggles ? "S2" : "S1"},
                               {"S2", "o", "S2"}, {"S2", "u", "S2"}};
    h.members = {{"S1", c.s1}, {"S2", c.s2}};

    auto system = Dfa::from_spec(g);
    auto model = DynamicSecretModel::bind(h, system);
    return {std::move(system), std::move(model)};
}

} // namespace gcso::testing
