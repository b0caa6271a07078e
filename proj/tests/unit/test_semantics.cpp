#include <gtest/gtest.h>

#include "generators.hpp"
#include "golden.hpp"
#include "subint/error.hpp"
#include "subint/hilbert.hpp"
#include "subint/search.hpp"
#include "subint/semantics.hpp"

using namespace subint;

namespace {

std::size_t brute_count(std::size_t n, FrameProperty prop) {
    std::size_t total = 0;
    for_each_frame(n, {}, [&](const NBFrame& fr) {
        if (has_property(fr, prop)) ++total;
        return true;
    });
    return total;
}

}  // namespace

TEST(Frames, CountsMatchFreeBits) {
    // Non-forced pairs: one world has 1, two worlds have 16 - 9 = 7 per world.
    EXPECT_EQ(enumerate_frames(1).size(), 2u);
    EXPECT_EQ(enumerate_frames(2).size(), 16384u);
}

TEST(Frames, FilteringAgreesWithBruteForce) {
    for (FrameProperty prop : all_properties()) {
        std::size_t filtered = 0;
        for_each_frame(2, {prop}, [&](const NBFrame&) {
            ++filtered;
            return true;
        });
        EXPECT_EQ(filtered, brute_count(2, prop)) << property_name(prop);
        EXPECT_GT(filtered, 0u);
    }
}

TEST(Frames, ForcedPairsCannotBeErased) {
    NBFrame fr(2);
    EXPECT_TRUE(fr.contains(0, 1, 3));
    EXPECT_THROW(fr.erase(0, 1, 3), Error);
    EXPECT_FALSE(fr.contains(1, 3, 1));
    fr.insert(1, 3, 1);
    EXPECT_TRUE(fr.contains(1, 3, 1));
    fr.erase(1, 3, 1);
    EXPECT_FALSE(fr.contains(1, 3, 1));
}

TEST(Frames, FullFrameHasEveryProperty) {
    for (std::size_t n = 1; n <= 2; ++n) {
        NBFrame fr(n);
        for (std::size_t w = 0; w < n; ++w) {
            for (WorldSet x = 0; x <= fr.full(); ++x) {
                for (WorldSet y = 0; y <= fr.full(); ++y) fr.insert(w, x, y);
            }
        }
        EXPECT_TRUE(has_properties(fr, all_properties()));
    }
}

TEST(Truth, ImplicationReadsNeighbourhood) {
    NBModel m{NBFrame(2), {{"p", 1}, {"q", 2}}};
    EXPECT_EQ(truth_set(m, parse("p -> q")), 0u);
    m.frame.insert(1, 1, 2);
    EXPECT_EQ(truth_set(m, parse("p -> q")), 2u);
    EXPECT_EQ(truth_set(m, parse("p -> p | q")), 3u);
    EXPECT_EQ(truth_set(m, parse("p & q")), 0u);
    EXPECT_EQ(truth_set(m, Formula::top()), 3u);
}

TEST(Countermodel, LazySearchMatchesExhaustiveOracle) {
    testkit::FormulaGen gen(81, {"p", "q"});
    for (FrameProperty prop : all_properties()) {
        for (int i = 0; i < 60; ++i) {
            const Formula f = gen.formula_between(3, 8);
            const auto lazy = countermodel({prop}, f);
            const auto full = countermodel_exhaustive({prop}, f);
            ASSERT_EQ(lazy.has_value(), full.has_value()) << property_name(prop) << " " << print(f);
            if (lazy) {
                EXPECT_TRUE(has_property(lazy->model.frame, prop));
                EXPECT_FALSE(truth_set(lazy->model, f) >> lazy->world & 1u);
            }
        }
    }
}

TEST(Countermodel, SeparatesExtensions) {
    for (const char* s : {"I", "C", "D", "Chat", "Dhat"}) {
        const Formula f = instantiate_scheme(s, testkit::pqr());
        EXPECT_TRUE(countermodel({}, f).has_value()) << s;
    }
    EXPECT_FALSE(countermodel({FrameProperty::Transitivity}, instantiate_scheme("I", testkit::pqr())));
    EXPECT_FALSE(countermodel({FrameProperty::Intersection}, instantiate_scheme("C", testkit::pqr())));
    EXPECT_FALSE(countermodel({FrameProperty::Union}, instantiate_scheme("D", testkit::pqr())));
}

TEST(Countermodel, AtomBudget) {
    CountermodelConfig cfg;
    cfg.max_atoms = 2;
    EXPECT_THROW(countermodel({}, parse("p & q -> r"), cfg), Error);
}

TEST(PropertyClass, KnownNames) {
    EXPECT_TRUE(property_class(SystemId::GWF).empty());
    EXPECT_EQ(property_class("WFI"), std::vector<FrameProperty>{FrameProperty::Transitivity});
    EXPECT_EQ(property_class("GF")->size(), 3u);
    EXPECT_FALSE(property_class("nonsense").has_value());
}

// Each axiom fails on some frame lacking its property.
TEST(Correspondence, PropertyIsNeeded) {
    const std::vector<std::pair<const char*, FrameProperty>> pairs = {
        {"I", FrameProperty::Transitivity}, {"C", FrameProperty::Intersection}, {"D", FrameProperty::Union},
        {"Chat", FrameProperty::Upset},     {"Dhat", FrameProperty::Downset},
    };
    for (const auto& [s, prop] : pairs) {
        const auto cm = countermodel({}, instantiate_scheme(s, testkit::pqr()));
        ASSERT_TRUE(cm) << s;
        EXPECT_FALSE(has_property(cm->model.frame, prop)) << s;
    }
}

// The rules N and N2 preserve validity on frames with their property.
TEST(Correspondence, RulesPreserveTruthSets) {
    const std::vector<std::pair<const char*, FrameProperty>> rules = {
        {"N", FrameProperty::Equivalence}, {"N2", FrameProperty::SupersetEquivalence}};
    const std::vector<std::string> names = {"p", "q"};
    for (const auto& [rule, prop] : rules) {
        std::size_t applications = 0;
        for_each_frame(2, {prop}, [&](const NBFrame& fr) -> bool {
            NBModel m{fr, {}};
            for (unsigned code = 0; code < 16; ++code) {
                m.valuation["p"] = code & 3u;
                m.valuation["q"] = (code >> 2) & 3u;
                testkit::FormulaGen gen(code, names);
                for (int k = 0; k < 4; ++k) {
                    const Formula a = gen.formula_between(1, 3), b = gen.formula_between(1, 3),
                                  c = gen.formula_between(1, 3), d = gen.formula_between(1, 3);
                    std::vector<Formula> premises = {Formula::imp(c, Formula::disj(a, d)),
                                                     Formula::imp(Formula::conj(c, b), d)};
                    if (std::string(rule) == "N") {
                        premises = {Formula::imp(a, Formula::disj(b, c)), Formula::imp(c, Formula::disj(a, d)),
                                    Formula::imp(Formula::conj(a, d), b), Formula::imp(Formula::conj(c, b), d)};
                    }
                    bool holds = true;
                    for (const auto& pr : premises) {
                        if ((truth_set(m, pr.left()) & ~truth_set(m, pr.right()) & fr.full()) != 0) holds = false;
                    }
                    if (!holds) continue;
                    ++applications;
                    const Formula concl = rule_conclusion(rule, premises);
                    EXPECT_TRUE(valid_in_model(m, concl)) << rule << " " << print(concl);
                }
            }
            return true;
        });
        EXPECT_GT(applications, 0u) << rule;
    }
}

TEST(Soundness, ProvableSequentsHaveNoCountermodel) {
    for (SystemId sys : all_systems()) {
        if (!cut_free(sys)) continue;
        testkit::FormulaGen gen(91 + static_cast<int>(sys), {"p", "q"});
        for (int i = 0; i < 300; ++i) {
            const Sequent s = gen.sequent(discipline(sys), 8);
            if (!prove(sys, s).proved()) continue;
            ASSERT_FALSE(countermodel(property_class(sys), interpretation(s))) << system_name(sys) << " " << print(s);
        }
    }
}
