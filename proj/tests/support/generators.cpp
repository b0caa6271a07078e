#include "generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "subint/search.hpp"

namespace subint::testkit {

FormulaGen::FormulaGen(std::uint64_t seed, std::vector<std::string> atoms) : rng_(seed), atoms_(std::move(atoms)) {}

std::size_t FormulaGen::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool FormulaGen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Formula FormulaGen::formula(std::size_t weight) {
    if (weight == 0) return Formula::bottom();
    if (weight == 1) return Formula::atom(atoms_[uniform(0, atoms_.size() - 1)]);
    const std::size_t left = uniform(0, weight - 1);
    Formula l = formula(left);
    Formula r = formula(weight - 1 - left);
    switch (uniform(0, 2)) {
    case 0:
        return Formula::conj(l, r);
    case 1:
        return Formula::disj(l, r);
    default:
        return Formula::imp(l, r);
    }
}

Formula FormulaGen::formula_between(std::size_t lo, std::size_t hi) { return formula(uniform(lo, hi)); }

Sequent FormulaGen::sequent(Discipline d, std::size_t max_weight) {
    std::size_t budget = uniform(1, max_weight);
    const std::size_t count = uniform(1, 3);
    const std::size_t single_slot = uniform(0, count - 1);
    Sequent s;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t w = i + 1 == count ? budget : uniform(0, budget);
        budget -= w;
        const bool right = d == Discipline::Single ? i == single_slot : coin();
        (right ? s.suc : s.ant).push_back(formula(w));
    }
    return s;
}

namespace {

struct Candidate {
    Rule rule;
    std::optional<Formula> left;
    std::optional<Formula> right;
    std::vector<Sequent> premises;
};

class RandomProver {
public:
    RandomProver(SystemId system, std::mt19937_64& rng) : system_(system), rng_(rng) {}

    std::optional<Derivation> run(const Sequent& goal, std::size_t height) {
        pool_.clear();
        std::set<Formula> all;
        for (const auto& side : {goal.ant, goal.suc}) {
            for (const auto& f : side) {
                for (auto& g : subformulas(f)) all.insert(g);
            }
        }
        pool_.assign(all.begin(), all.end());
        nodes_ = 0;
        return solve(goal, height);
    }

private:
    SystemId system_;
    std::mt19937_64& rng_;
    Formulas pool_;
    std::size_t nodes_ = 0;
    static constexpr std::size_t node_budget = 20000;

    bool has(Rule r) const { return has_rule(system_, r); }

    std::vector<Candidate> candidates(const Sequent& s) const {
        std::vector<Candidate> out;
        const bool single = discipline(system_) == Discipline::Single;
        for (const auto& f : s.ant) {
            Formulas rest = remove_one(s.ant, f);
            if (f.is_and()) out.push_back({Rule::AndL, f, {}, {{concat({f.left(), f.right()}, rest), s.suc}}});
            if (f.is_or()) {
                out.push_back({Rule::OrL, f, {}, {{with(rest, f.left()), s.suc}, {with(rest, f.right()), s.suc}}});
            }
        }
        for (const auto& f : s.suc) {
            Formulas rest = remove_one(s.suc, f);
            if (f.is_and()) {
                out.push_back({Rule::AndR, {}, f, {{s.ant, with(rest, f.left())}, {s.ant, with(rest, f.right())}}});
            }
            if (f.is_or() && !single) out.push_back({Rule::OrR, {}, f, {{s.ant, concat(rest, {f.left(), f.right()})}}});
            if (f.is_or() && single) {
                out.push_back({Rule::OrR1, {}, f, {{s.ant, {f.left()}}}});
                out.push_back({Rule::OrR2, {}, f, {{s.ant, {f.right()}}}});
            }
            if (!f.is_imp()) continue;
            out.push_back({Rule::ImpR, {}, f, {{{f.left()}, {f.right()}}}});
            for (const auto& h : s.ant) {
                if (!h.is_imp()) continue;
                if (has(Rule::ImpLR)) {
                    out.push_back({Rule::ImpLR, h, f,
                                   {{{h.left()}, {f.left()}},
                                    {{f.left()}, {h.left()}},
                                    {{h.right()}, {f.right()}},
                                    {{f.right()}, {h.right()}}}});
                }
                if (has(Rule::ImpLR_N) || has(Rule::ImpLR_N2)) {
                    const Formula &a = f.left(), &b = f.right(), &c = h.left(), &d = h.right();
                    std::vector<Sequent> ps{{{a}, {c, b}}, {{a, d}, {b}}};
                    if (has(Rule::ImpLR_N)) {
                        ps.push_back({{c}, {a, d}});
                        ps.push_back({{c, b}, {d}});
                    }
                    out.push_back({has(Rule::ImpLR_N) ? Rule::ImpLR_N : Rule::ImpLR_N2, h, f, ps});
                }
                if (has(Rule::ImpChat) && h.left() == f.left()) {
                    out.push_back({Rule::ImpChat, h, f, {{{h.right()}, {f.right()}}}});
                }
                if (has(Rule::ImpDhat) && h.right() == f.right()) {
                    out.push_back({Rule::ImpDhat, h, f, {{{f.left()}, {h.left()}}}});
                }
            }
            if (!single) continue;
            const Formula &b = f.left(), &c = f.right();
            if (has(Rule::ImpC) && c.is_and()) {
                out.push_back({Rule::ImpC, {}, f, {{s.ant, {Formula::imp(b, c.left())}}, {s.ant, {Formula::imp(b, c.right())}}}});
            }
            if (has(Rule::ImpD) && b.is_or()) {
                out.push_back({Rule::ImpD, {}, f, {{s.ant, {Formula::imp(b.left(), c)}}, {s.ant, {Formula::imp(b.right(), c)}}}});
            }
            if (has(Rule::ImpI)) {
                for (const auto& x : pool_) {
                    if (x == b || x == c) continue;
                    out.push_back({Rule::ImpI, {}, f, {{s.ant, {Formula::imp(b, x)}}, {s.ant, {Formula::imp(x, c)}}}});
                }
            }
        }
        return out;
    }

    std::optional<Derivation> solve(const Sequent& s, std::size_t height) {
        if (++nodes_ > node_budget) return std::nullopt;
        for (const auto& f : s.ant) {
            if (f.is_bottom()) return Derivation::build(Rule::BotL, s, f, std::nullopt, {});
            if (f.is_atom() && contains(s.suc, f)) return Derivation::build(Rule::Ax, s, f, f, {});
        }
        if (height == 0) return std::nullopt;
        auto cs = candidates(s);
        std::shuffle(cs.begin(), cs.end(), rng_);
        for (const auto& c : cs) {
            std::vector<Derivation> premises;
            for (const auto& p : c.premises) {
                auto d = solve(p, height - 1);
                if (!d) break;
                premises.push_back(std::move(*d));
            }
            if (premises.size() == c.premises.size()) return Derivation::build(c.rule, s, c.left, c.right, premises);
            if (nodes_ > node_budget) return std::nullopt;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Derivation> random_prove(SystemId system, const Sequent& goal, std::mt19937_64& rng,
                                       std::size_t max_height) {
    return RandomProver(system, rng).run(goal, max_height);
}

std::vector<Derivation> derivation_corpus(SystemId system, std::size_t count, std::uint64_t seed,
                                          std::size_t max_weight) {
    FormulaGen gen(seed, {"p", "q", "r"});
    const Discipline d = discipline(system);
    std::vector<Derivation> out;
    SearchConfig cfg;
    cfg.max_depth = 2;
    for (std::size_t attempt = 0; out.size() < count && attempt < count * 200; ++attempt) {
        Sequent s = gen.sequent(d, max_weight);
        const std::size_t shape = gen.uniform(0, 3);
        if (shape == 1) {
            const Formula f = gen.formula_between(1, 4);
            s.ant.push_back(f);
            if (d == Discipline::Multi || s.suc.empty()) {
                s.suc.push_back(f);
            } else {
                s.suc = {f};
            }
        } else if (shape == 2 && !s.ant.empty()) {
            s.ant.push_back(s.ant[0]);
        }
        if (!respects(s, d)) continue;
        std::optional<Derivation> proof;
        if (cut_free(system)) {
            proof = prove(system, s, cfg).proof;
        } else {
            proof = random_prove(system, s, gen.rng());
        }
        if (!proof) continue;
        if (proof->height() < 4 && !gen.coin(0.1)) continue;
        out.push_back(std::move(*proof));
    }
    return out;
}

namespace {

Formula swap_top(const Formula& f) {
    if (f.is_and()) return Formula::conj(f.right(), f.left());
    if (f.is_or()) return Formula::disj(f.right(), f.left());
    return f;
}

// Cut on an implication X -> Y whose two sides are likely to end in rules
// that have the cut formula principal.
std::pair<Sequent, Sequent> implication_cut(SystemId system, FormulaGen& gen, Formula& a, bool& swapped_goal) {
    Formula x = gen.formula_between(1, 3), y = gen.formula_between(1, 3);
    const Formula z = gen.formula_between(1, 2), w = gen.formula_between(1, 2);
    const bool single = discipline(system) == Discipline::Single;
    Formulas gamma;
    switch (gen.uniform(0, 3)) {
    case 0: y = Formula::disj(x, z); break;
    case 1: x = Formula::conj(y, z); break;
    case 2:
        if (has_rule(system, Rule::ImpI)) {
            gamma = {Formula::imp(x, z), Formula::imp(z, y)};
            break;
        }
        [[fallthrough]];
    default: gamma = {Formula::imp(swap_top(x), swap_top(y))}; break;
    }
    a = Formula::imp(x, y);
    if (gen.coin(0.3)) gamma.push_back(gen.formula_between(1, 2));
    Sequent left(gamma, {a});
    if (!single && gen.coin(0.3)) left.suc.push_back(gen.formula_between(1, 2));

    Formulas pi = {a};
    Formula goal = Formula::imp(swap_top(x), swap_top(y));
    swapped_goal = true;
    switch (gen.uniform(0, 3)) {
    case 0:
        if (has_rule(system, Rule::ImpI)) {
            pi.push_back(Formula::imp(y, w));
            goal = Formula::imp(x, w);
            swapped_goal = false;
        }
        break;
    case 1:
        if (has_rule(system, Rule::ImpC)) {
            pi.push_back(Formula::imp(x, w));
            goal = Formula::imp(x, Formula::conj(y, w));
            swapped_goal = false;
        }
        break;
    case 2:
        if (has_rule(system, Rule::ImpD)) {
            pi.push_back(Formula::imp(w, y));
            goal = Formula::imp(Formula::disj(x, w), y);
            swapped_goal = false;
        }
        break;
    default: break;
    }
    Sequent right(pi, {goal});
    if (!single && gen.coin(0.3)) right.suc.push_back(gen.formula_between(1, 2));
    return {left, right};
}

// Derivation of s ending in the system's implication-left rule with the given
// principal formulas, so a cut on lp meets that rule even when the goal also
// has a direct proof.
std::optional<Derivation> implication_left(SystemId system, const Sequent& s, const Formula& lp, const Formula& rp) {
    const Formula &c = lp.left(), &d = lp.right(), &a = rp.left(), &b = rp.right();
    Rule rule = Rule::ImpLR;
    std::vector<Sequent> goals = {{{c}, {a}}, {{a}, {c}}, {{d}, {b}}, {{b}, {d}}};
    if (!has_rule(system, Rule::ImpLR)) {
        rule = has_rule(system, Rule::ImpLR_N) ? Rule::ImpLR_N : Rule::ImpLR_N2;
        goals = {{{a}, {c, b}}, {{a, d}, {b}}};
        if (rule == Rule::ImpLR_N) {
            goals.push_back({{c}, {a, d}});
            goals.push_back({{c, b}, {d}});
        }
    }
    std::vector<Derivation> premises;
    for (const auto& g : goals) {
        if (!respects(g, discipline(system))) return std::nullopt;
        auto r = prove(system, g);
        if (!r.proof) return std::nullopt;
        premises.push_back(*r.proof);
    }
    return Derivation::build(rule, s, lp, rp, premises);
}

}  // namespace

std::optional<CutInstance> random_cut_instance(SystemId system, FormulaGen& gen) {
    const Discipline d = discipline(system);
    Formula a = gen.formula_between(1, 5);
    Sequent left, right;
    bool swapped_goal = false;
    if (gen.coin(0.4)) {
        std::tie(left, right) = implication_cut(system, gen, a, swapped_goal);
    } else {
        const Formulas subs = subformulas(a);
        auto pick = [&]() {
            if (gen.coin(0.6)) return subs[gen.uniform(0, subs.size() - 1)];
            return gen.formula_between(1, 3);
        };
        auto picks = [&](std::size_t lo, std::size_t hi) {
            Formulas xs;
            for (std::size_t i = gen.uniform(lo, hi); i > 0; --i) xs.push_back(pick());
            return xs;
        };
        left = Sequent(picks(0, 2), d == Discipline::Multi ? picks(0, 1) : Formulas{});
        left.suc.push_back(a);
        right = Sequent(with(picks(0, 2), a), d == Discipline::Multi ? picks(1, 2) : picks(1, 1));
    }
    SearchConfig cfg;
    cfg.max_depth = 2;
    auto l = prove(system, left, cfg);
    if (!l.proof) return std::nullopt;
    if (swapped_goal && gen.coin()) {
        if (auto r = implication_left(system, right, a, right.suc[0])) return CutInstance{*l.proof, *r, a};
    }
    auto r = prove(system, right, cfg);
    if (!r.proof) return std::nullopt;
    return CutInstance{*l.proof, *r.proof, a};
}

HilbertDerivation random_assumption_derivation(FormulaGen& gen, const Formulas& assumptions, std::size_t depth) {
    using namespace tactics;
    if (depth == 0 || gen.coin(0.25)) {
        return HilbertDerivation::assumption(assumptions[gen.uniform(0, assumptions.size() - 1)]);
    }
    if (gen.coin(0.4)) {
        HilbertDerivation l = random_assumption_derivation(gen, assumptions, depth - 1);
        HilbertDerivation r = gen.coin(0.8) ? random_assumption_derivation(gen, assumptions, depth - 1)
                                            : ax("8", {{"A", gen.formula_between(1, 2)}});
        return gen.coin() ? conj(l, r) : conj(r, l);
    }
    HilbertDerivation sub = random_assumption_derivation(gen, assumptions, depth - 1);
    const Formula a = sub.conclusion();
    const Formula extra = gen.formula_between(1, 2);
    std::vector<HilbertDerivation> options{ax("1", {{"A", a}, {"B", extra}}), ax("2", {{"A", extra}, {"B", a}})};
    if (a.is_and()) {
        options.push_back(ax("3", {{"A", a.left()}, {"B", a.right()}}));
        options.push_back(ax("4", {{"A", a.left()}, {"B", a.right()}}));
        options.push_back(lattice_or_throw(a, Formula::conj(a.right(), a.left())));
    }
    if (a.is_and() && a.right().is_or()) {
        options.push_back(ax("7", {{"A", a.left()}, {"B", a.right().left()}, {"C", a.right().right()}}));
    }
    return mp(sub, options[gen.uniform(0, options.size() - 1)]);
}

}  // namespace subint::testkit
