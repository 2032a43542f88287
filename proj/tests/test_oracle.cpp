#include "support/instances.hpp"

#include <gtest/gtest.h>

using namespace gcso;
using namespace gcso::testing;

TEST(EnumerateLanguage, ZeroBoundIsEmptyString)
{
    Ex2 ex;
    const auto lang = enumerate_language(ex.g, 0);
    ASSERT_EQ(lang.strings.size(), 1u);
    EXPECT_TRUE(lang.strings.begin()->empty());
    EXPECT_EQ(lang.bound, 0u);
    EXPECT_TRUE(lang.complete_up_to_bound);
}

TEST(EnumerateLanguage, FragmentStrings)
{
    Ex2 ex;
    const auto lang = enumerate_language(ex.g, 3);
    const std::set<Word, ShortlexLess> expected{{}, ex.w("u1"), ex.w("u1 a"), ex.w("u1 a u2")};
    EXPECT_EQ(lang.strings, expected);
}

TEST(EnumerateLanguage, SelfLoopCounting)
{
    DfaSpec spec;
    spec.states = {"s"};
    spec.alphabet = {"e"};
    spec.observable = {"e"};
    spec.initial = "s";
    spec.transitions = {{"s", "e", "s"}};
    const auto g = Dfa::from_spec(spec);
    const auto e = g.event("e");
    const std::set<Word, ShortlexLess> expected{{}, {e}, {e, e}, {e, e, e}};
    EXPECT_EQ(enumerate_language(g, 3).strings, expected);
}

TEST(EnumerateLanguage, EveryStringIsGeneratedAndBounded)
{
    std::mt19937 rng(41);
    for (int i = 0; i < 30; ++i) {
        const auto g = Dfa::from_spec(random_system_spec(rng, {}));
        const auto lang = enumerate_language(g, 4);
        std::size_t generated = 0;
        for (const auto& w : all_words(all_events(g), 4))
            generated += g.generates(w);
        EXPECT_EQ(lang.strings.size(), generated);
        for (const auto& w : lang.strings) {
            EXPECT_LE(w.size(), 4u);
            EXPECT_TRUE(g.generates(w));
        }
    }
}

TEST(ConsistentStrings, FragmentObservationA)
{
    Ex2 ex;
    const std::set<Word, ShortlexLess> expected{ex.w("u1 a"), ex.w("u1 a u2")};
    EXPECT_EQ(consistent_strings(ex.g, ex.w("a"), 6), expected);
}

TEST(ConsistentStrings, FullyObservableEmptyObservation)
{
    std::mt19937 rng(42);
    Shape shape;
    shape.unobservable = 0;
    const auto g = Dfa::from_spec(random_system_spec(rng, shape));
    const auto strings = consistent_strings(g, Word{}, 5);
    ASSERT_EQ(strings.size(), 1u);
    EXPECT_TRUE(strings.begin()->empty());
}

TEST(ConsistentStrings, UnproducedObservationHasNoPreimage)
{
    Ex2 ex;
    EXPECT_TRUE(consistent_strings(ex.g, ex.w("b"), 8).empty());
    EXPECT_TRUE(consistent_strings(ex.g, ex.w("a a"), 8).empty());
    EXPECT_THROW(consistent_strings(ex.g, ex.w("u1"), 8), DomainError);
}

TEST(ConsistentStrings, MatchesFilteredLanguage)
{
    std::mt19937 rng(43);
    for (int i = 0; i < 30; ++i) {
        const auto g = Dfa::from_spec(random_system_spec(rng, {}));
        const auto lang = enumerate_language(g, 5);
        for (const auto& w : all_words(g.observable_events(), 2)) {
            std::set<Word, ShortlexLess> expected;
            for (const auto& s : lang.strings)
                if (project(g, s) == w)
                    expected.insert(s);
            EXPECT_EQ(consistent_strings(g, w, 5), expected);
        }
    }
}

// The class-collapsing enumeration gives the same images as the plain string sets.
TEST(ConsistentImages, MatchPlainStringImages)
{
    std::mt19937 rng(44);
    for (int i = 0; i < 40; ++i) {
        const auto inst = random_instance(rng);
        const std::size_t max_len = 6;
        const auto images = consistent_images(inst.g, inst.h, 3, max_len);
        for (const auto& w : all_words(inst.g.observable_events(), 3)) {
            PairImage expected;
            for (const auto& s : consistent_strings(inst.g, w, max_len))
                expected.insert({*inst.g.run(inst.g.initial(), s), inst.h.run(s)});
            const auto it = images.find(w);
            if (expected.empty()) {
                EXPECT_EQ(it, images.end());
            } else {
                ASSERT_NE(it, images.end());
                EXPECT_EQ(it->second, expected);
            }
            EXPECT_EQ(consistent_image(inst.g, inst.h, w, max_len), expected);
        }
    }
}

TEST(ConsistentImages, FragmentObservationA)
{
    Ex2 ex;
    const PairImage expected{{ex.x("A"), ex.y("S1")}, {ex.x("C"), ex.y("S2")}};
    EXPECT_EQ(consistent_image(ex.g, ex.h, ex.w("a"), completeness_bound(ex.g, ex.h, 1)), expected);
}

TEST(CompletenessBound, CountsPairSpace)
{
    Ex2 ex;
    // |X| = 5, |Y| = 2
    EXPECT_EQ(completeness_bound(ex.g, ex.h, 0), 10u);
    EXPECT_EQ(completeness_bound(ex.g, ex.h, 3), 40u);
}

TEST(BoundedOracle, FragmentViolatesAtA)
{
    Ex2 ex;
    for (std::size_t depth : {1u, 2u, 5u}) {
        const auto result = gcso_bounded_oracle(ex.g, ex.h, depth);
        ASSERT_TRUE(result.violating.has_value());
        EXPECT_EQ(*result.violating, ex.w("a"));
        EXPECT_EQ(result.depth, depth);
    }
    EXPECT_FALSE(gcso_bounded_oracle(ex.g, ex.h, 0).violating.has_value());
}

TEST(BoundedOracle, EmptySecretNeverViolates)
{
    std::mt19937 rng(45);
    for (int i = 0; i < 30; ++i) {
        const auto g = Dfa::from_spec(random_system_spec(rng, {}));
        EXPECT_FALSE(gcso_bounded_oracle(g, constant_secret_model(g, {}), 4).violating.has_value());
    }
}

TEST(ObservableLanguage, FragmentProjections)
{
    Ex2 ex;
    const std::set<Observation, ShortlexLess> expected{{}, ex.w("a")};
    EXPECT_EQ(observable_language(ex.g, 4), expected);
}
