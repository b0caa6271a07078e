#include <gtest/gtest.h>

#include "generators.hpp"
#include "subint/calculus.hpp"
#include "subint/search.hpp"

using namespace subint;

namespace {

Derivation ax(const char* s) {
    const Sequent q = parse_sequent(s);
    for (const auto& f : q.ant) {
        if (f.is_atom() && contains(q.suc, f)) return Derivation::build(Rule::Ax, q, f, f, {});
    }
    return Derivation::build(Rule::Ax, q, q.ant[0], q.suc[0], {});
}

}  // namespace

TEST(Registry, SystemsAndDisciplines) {
    EXPECT_EQ(all_systems().size(), 11u);
    EXPECT_EQ(discipline(SystemId::GWF), Discipline::Multi);
    EXPECT_EQ(discipline(SystemId::GWFChat), Discipline::Multi);
    EXPECT_EQ(discipline(SystemId::GF), Discipline::Single);
    EXPECT_TRUE(has_rule(SystemId::GWF_N, Rule::ImpLR_N));
    EXPECT_FALSE(has_rule(SystemId::GWF_N, Rule::ImpLR));
    EXPECT_TRUE(has_rule(SystemId::GWFI, Rule::OrR1));
    EXPECT_FALSE(has_rule(SystemId::GWFI, Rule::OrR));
    EXPECT_TRUE(has_rule(SystemId::GWFChat, Rule::Cut));
    EXPECT_FALSE(has_rule(SystemId::GWF, Rule::Cut));
    EXPECT_TRUE(has_rule(SystemId::GF, Rule::ImpI));
    EXPECT_TRUE(has_rule(SystemId::GF, Rule::ImpC));
    EXPECT_TRUE(has_rule(SystemId::GF, Rule::ImpD));
    EXPECT_FALSE(cut_free(SystemId::GWFC));
    EXPECT_TRUE(cut_free(SystemId::GWFCI));
    for (SystemId s : all_systems()) EXPECT_EQ(system_from_name(system_name(s)), s);
    for (int r = 0; r <= static_cast<int>(Rule::Cut); ++r) {
        EXPECT_EQ(rule_from_name(rule_name(static_cast<Rule>(r))), static_cast<Rule>(r));
    }
}

TEST(Checker, AcceptsAxiomWithContext) {
    EXPECT_TRUE(check(SystemId::GWF, ax("q, p => p, r")));
    EXPECT_TRUE(check(SystemId::GWFI, ax("q, p => p")));
}

TEST(Checker, AxiomNeedsAnAtom) {
    const Sequent s = parse_sequent("p & q => p & q");
    auto report = check(SystemId::GWF, Derivation::build(Rule::Ax, s, s.ant[0], s.suc[0], {}));
    EXPECT_FALSE(report);
    EXPECT_NE(report.reason.find("shape"), std::string::npos);
}

TEST(Checker, RejectsForeignRule) {
    const Sequent s = parse_sequent("=> p -> p");
    const Derivation d = Derivation::build(Rule::ImpR, s, std::nullopt, s.suc[0], {ax("p => p")});
    EXPECT_TRUE(check(SystemId::GWF, d));
    const Sequent t = parse_sequent("p => p | q");
    const Derivation e = Derivation::build(Rule::OrR1, t, std::nullopt, t.suc[0], {ax("p => p")});
    auto report = check(SystemId::GWF, e);
    EXPECT_FALSE(report);
    EXPECT_NE(report.reason.find("not in"), std::string::npos);
    EXPECT_TRUE(check(SystemId::GWFI, e));
}

TEST(Checker, ImpRPremiseIsBare) {
    const Sequent s = parse_sequent("r => p -> p, q");
    EXPECT_TRUE(check(SystemId::GWF, Derivation::build(Rule::ImpR, s, std::nullopt, s.suc[0], {ax("p => p")})));
    const Derivation wrong = Derivation::build(Rule::ImpR, s, std::nullopt, s.suc[0], {ax("r, p => p")});
    EXPECT_FALSE(check(SystemId::GWF, wrong));
}

TEST(Checker, ReportsPathToFailingNode) {
    const Sequent root = parse_sequent("p & q => q & p");
    const Sequent mid = parse_sequent("p, q => q & p");
    const Derivation bad_leaf = Derivation::build(Rule::Ax, parse_sequent("p, q => p"), parse("q"), parse("p"), {});
    const Derivation and_r =
        Derivation::build(Rule::AndR, mid, std::nullopt, mid.suc[0], {ax("p, q => q"), bad_leaf});
    const Derivation d = Derivation::build(Rule::AndL, root, root.ant[0], std::nullopt, {and_r});
    auto report = check(SystemId::GWF, d);
    ASSERT_FALSE(report);
    EXPECT_EQ(report.path, (std::vector<std::size_t>{0, 1}));
    EXPECT_FALSE(report.describe().empty());
}

TEST(Checker, ConclusionDisciplineEnforced) {
    const Sequent s = parse_sequent("p => p, q");
    EXPECT_FALSE(check(SystemId::GWFI, Derivation::build(Rule::Ax, s, s.ant[0], s.suc[0], {})));
}

TEST(Checker, CutComposesPremises) {
    const Sequent c = parse_sequent("p => p");
    const Derivation cut =
        Derivation::make(Rule::Cut, c, {}, {ax("p => p"), ax("p => p")}, parse("p"));
    EXPECT_TRUE(check(SystemId::GWFChat, cut));
    EXPECT_FALSE(check(SystemId::GWF, cut));
    const Derivation wrong = Derivation::make(Rule::Cut, parse_sequent("p, p => p"), {},
                                              {ax("p => p"), ax("p => p")}, parse("p"));
    EXPECT_FALSE(check(SystemId::GWFChat, wrong));
}

TEST(Identity, DerivesArbitraryFormulasWithContext) {
    testkit::FormulaGen gen(11, {"p", "q", "r"});
    for (SystemId sys : all_systems()) {
        for (int i = 0; i < 100; ++i) {
            const Formula c = gen.formula_between(0, 8);
            const Formulas gamma = {gen.formula_between(1, 3)};
            const Formulas delta = discipline(sys) == Discipline::Multi ? Formulas{gen.formula_between(1, 3)}
                                                                        : Formulas{};
            const Derivation d = identity_derivation(c, gamma, delta, sys);
            ASSERT_TRUE(check(sys, d)) << system_name(sys) << " " << print(c) << "\n" << check(sys, d).describe();
            EXPECT_EQ(d.conclusion(), Sequent(with(gamma, c), with(delta, c)));
        }
    }
}

TEST(Derivation, HeightSizeAndCuts) {
    const Sequent s = parse_sequent("=> p -> p");
    const Derivation d = Derivation::build(Rule::ImpR, s, std::nullopt, s.suc[0], {ax("p => p")});
    EXPECT_EQ(d.height(), 1u);
    EXPECT_EQ(d.size(), 2u);
    EXPECT_EQ(d.cut_count(), 0u);
    EXPECT_EQ(ax("p => p").height(), 0u);
}

TEST(Derivation, WithConclusionRelocatesPrincipals) {
    const Derivation d = ax("q, p => p");
    const Derivation moved = d.with_conclusion(parse_sequent("p, q => p"));
    EXPECT_TRUE(check(SystemId::GWF, moved));
    EXPECT_EQ(*moved.principal().left, 0u);
}

TEST(Render, OneLinePerNode) {
    const Sequent s = parse_sequent("=> p -> p");
    const Derivation d = Derivation::build(Rule::ImpR, s, std::nullopt, s.suc[0], {ax("p => p")});
    const std::string text = render_tree(d);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
    EXPECT_NE(text.find("ImpR"), std::string::npos);
}
