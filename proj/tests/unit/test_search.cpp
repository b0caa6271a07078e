#include <gtest/gtest.h>

#include "generators.hpp"
#include "golden.hpp"
#include "subint/error.hpp"
#include "subint/hilbert.hpp"
#include "subint/search.hpp"

using namespace subint;

namespace {

bool provable(SystemId sys, const char* s, const SearchConfig& cfg = {}) {
    auto r = prove(sys, parse_sequent(s), cfg);
    if (r.proof) {
        EXPECT_TRUE(check(sys, *r.proof)) << s;
        EXPECT_EQ(r.proof->conclusion(), parse_sequent(s));
    }
    return r.proved();
}

Formula instance(const char* scheme) {
    Substitution sub;
    for (const auto& l : scheme_letters(scheme)) sub.emplace(l, testkit::pqr().at(l));
    return instantiate_scheme(scheme, sub);
}

}  // namespace

TEST(Prove, BasicTheorems) {
    EXPECT_TRUE(provable(SystemId::GWF, "=> p -> p"));
    EXPECT_TRUE(provable(SystemId::GWF, "p & q => q & p"));
    EXPECT_FALSE(provable(SystemId::GWF, "=> p, p -> q"));
    EXPECT_TRUE(provable(SystemId::GWF, "false => q"));
    EXPECT_FALSE(provable(SystemId::GWF, "p => q"));
    EXPECT_FALSE(provable(SystemId::GWF, "p, p -> q => q"));
}

TEST(Prove, SuccedentDiscipline) {
    EXPECT_TRUE(provable(SystemId::GWF, "p | q => q, p"));
    EXPECT_FALSE(provable(SystemId::GWFI, "p | q => q"));
}

TEST(Prove, ImplicationRuleVariants) {
    EXPECT_TRUE(provable(SystemId::GWF, "p & q -> r => q & p -> r"));
    EXPECT_FALSE(provable(SystemId::GWF, "p -> r => p & q -> r"));
    EXPECT_TRUE(provable(SystemId::GWF_N2, "p -> r => p & q -> r"));
    EXPECT_FALSE(provable(SystemId::GWF_N2, "p & q -> r => p -> r"));
    EXPECT_TRUE(provable(SystemId::GWF_N, "p -> q => p -> p & q"));
    EXPECT_TRUE(provable(SystemId::GWF_N2, "p -> q => p -> p & q"));
    EXPECT_FALSE(provable(SystemId::GWF, "p -> q => p -> p & q"));
}

TEST(Prove, Extensions) {
    EXPECT_TRUE(provable(SystemId::GWFI, "=> (p -> q) & (q -> r) -> (p -> r)"));
    EXPECT_TRUE(provable(SystemId::GWFCI, "p -> q, p -> r => p -> q & r"));
    EXPECT_TRUE(provable(SystemId::GWFDI, "p -> r, q -> r => p | q -> r"));
    EXPECT_TRUE(provable(SystemId::GF, "=> (p -> q) & (p -> r) -> (p -> q & r)"));
    EXPECT_FALSE(provable(SystemId::GWFI, "p -> q, p -> r => p -> q & r"));
}

TEST(Prove, WeakerSystemsFailOnExtensionAxioms) {
    for (const char* s : {"I", "C", "D", "Chat", "Dhat"}) {
        auto r = prove(SystemId::GWF, Sequent({}, {instance(s)}));
        EXPECT_FALSE(r.proved()) << s;
        EXPECT_EQ(r.reason, FailureReason::Exhausted) << s;
    }
}

TEST(Prove, DepthCapIsReported) {
    SearchConfig cfg;
    cfg.max_depth = 1;
    auto r = prove(SystemId::GWFI, parse_sequent("p -> q, q -> r, r -> s => p -> s"), cfg);
    EXPECT_FALSE(r.proved());
    EXPECT_EQ(r.reason, FailureReason::DepthCapped);
    EXPECT_TRUE(r.pool_limited);
    cfg.max_depth = 2;
    EXPECT_TRUE(prove(SystemId::GWFI, parse_sequent("p -> q, q -> r, r -> s => p -> s"), cfg).proved());
}

TEST(Prove, InterpolantPoolRestrictsImpI) {
    SearchConfig cfg;
    cfg.interpolant_pool = Formulas{parse("r")};
    EXPECT_FALSE(prove(SystemId::GWFI, parse_sequent("p -> q, q -> r => p -> r"), cfg).proved());
    cfg.interpolant_pool = Formulas{parse("q")};
    EXPECT_TRUE(prove(SystemId::GWFI, parse_sequent("p -> q, q -> r => p -> r"), cfg).proved());
}

TEST(Prove, RejectsBadRequests) {
    EXPECT_THROW(prove(SystemId::GWFChat, parse_sequent("=> p -> p")), UnsupportedError);
    EXPECT_THROW(prove(SystemId::GWFI, parse_sequent("=> p, q")), Error);
    SearchConfig cfg;
    cfg.max_depth = 0;
    EXPECT_THROW(prove(SystemId::GWF, parse_sequent("=> p -> p"), cfg), Error);
}

TEST(Prove, AxiomSevenHasDisplayedShape) {
    auto r = prove(SystemId::GWF, Sequent({}, {instance("7")}));
    ASSERT_TRUE(r.proved());
    EXPECT_EQ(testkit::skeleton(*r.proof), "ImpR(AndL(OrL(OrR(AndR(Id,Id)),OrR(AndR(Id,Id)))))");
}

TEST(Prove, AgreesWithRandomizedProver) {
    for (SystemId sys : {SystemId::GWF, SystemId::GWF_N, SystemId::GWF_N2, SystemId::GWFI}) {
        testkit::FormulaGen gen(41 + static_cast<int>(sys), {"p", "q"});
        for (int i = 0; i < 300; ++i) {
            const Sequent s = gen.sequent(discipline(sys), 7);
            const bool det = prove(sys, s).proved();
            if (!det) {
                for (int k = 0; k < 3; ++k) {
                    ASSERT_FALSE(testkit::random_prove(sys, s, gen.rng()).has_value())
                        << system_name(sys) << " " << print(s);
                }
            }
        }
    }
}

TEST(InvertImplication, RecoversBody) {
    for (SystemId sys : {SystemId::GWF, SystemId::GWFI, SystemId::GF}) {
        auto r = prove(sys, parse_sequent("=> p & q -> q | r"));
        ASSERT_TRUE(r.proved());
        const Derivation body = invert_implication(sys, *r.proof);
        EXPECT_TRUE(check(sys, body));
        EXPECT_EQ(body.conclusion(), parse_sequent("p & q => q | r"));
    }
}
