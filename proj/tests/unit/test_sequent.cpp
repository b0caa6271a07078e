#include <gtest/gtest.h>

#include "subint/error.hpp"
#include "subint/sequent.hpp"

using namespace subint;

TEST(Sequent, MultisetEquality) {
    EXPECT_EQ(parse_sequent("p, q => r"), parse_sequent("q, p => r"));
    EXPECT_FALSE(parse_sequent("p, p => r") == parse_sequent("p => r"));
}

TEST(Sequent, ParsesBareFormulaAsTheorem) {
    const Sequent s = parse_sequent("p -> p");
    EXPECT_TRUE(s.ant.empty());
    ASSERT_EQ(s.suc.size(), 1u);
    EXPECT_EQ(s.suc[0], parse("p -> p"));
}

TEST(Sequent, EmptySides) {
    const Sequent s = parse_sequent(" => ");
    EXPECT_TRUE(s.ant.empty());
    EXPECT_TRUE(s.suc.empty());
    EXPECT_EQ(interpretation(s), Formula::imp(Formula::top(), Formula::bottom()));
}

TEST(Sequent, DisciplineLimitsSuccedent) {
    EXPECT_TRUE(respects(parse_sequent("p => q, r"), Discipline::Multi));
    EXPECT_FALSE(respects(parse_sequent("p => q, r"), Discipline::Single));
    EXPECT_FALSE(respects(parse_sequent("p => "), Discipline::Single));
    EXPECT_TRUE(respects(parse_sequent("p => q"), Discipline::Single));
    EXPECT_THROW(require_discipline(parse_sequent("=> p, q"), Discipline::Single), Error);
}

TEST(Sequent, MultisetOperations) {
    const Formulas a = {parse("p"), parse("q"), parse("p")};
    EXPECT_EQ(count(a, parse("p")), 2u);
    EXPECT_TRUE(includes(a, {parse("p"), parse("p")}));
    EXPECT_FALSE(includes(a, {parse("q"), parse("q")}));
    EXPECT_TRUE(same_multiset(remove_one(a, parse("p")), {parse("q"), parse("p")}));
    EXPECT_THROW(remove_one(a, parse("r")), Error);
    EXPECT_TRUE(same_multiset(difference(a, {parse("p"), parse("q")}), {parse("p")}));
    EXPECT_THROW(difference(a, {parse("r")}), Error);
}

TEST(Sequent, InterpretationSortsByPrintString) {
    const Sequent s = parse_sequent("r, p & q => q, p");
    EXPECT_EQ(interpretation(s), parse("(p & q) & r -> p | q"));
    EXPECT_EQ(interpretation(parse_sequent("=> p")), parse("(false -> false) -> p"));
    EXPECT_EQ(interpretation(parse_sequent("p =>")), parse("p -> false"));
}

TEST(Sequent, PrintRoundTrip) {
    const Sequent s = parse_sequent("p -> q, p | r => q & r, false");
    EXPECT_EQ(parse_sequent(print(s)), s);
}

TEST(Sequent, WeightSumsBothSides) {
    EXPECT_EQ(parse_sequent("p & q => r").weight(), 4u);
}
