#include <limits>
#include <utility>

#include "subint/error.hpp"
#include "subint/structural.hpp"

namespace subint {

namespace {

using Measure = std::pair<std::size_t, std::size_t>;

std::size_t saturating_fuel(std::size_t weight, std::size_t cut_height, std::size_t factor) {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::size_t pow = 1;
    for (std::size_t i = 0; i < weight; ++i) {
        if (pow > kMax / 4) return kMax;
        pow *= 4;
    }
    if (factor != 0 && cut_height > (kMax - pow) / factor) return kMax;
    return pow + cut_height * factor;
}

Sequent compose(const Derivation& l, const Derivation& r, const Formula& d) {
    const auto& ls = l.conclusion();
    const auto& rs = r.conclusion();
    return {concat(ls.ant, remove_one(rs.ant, d)), concat(remove_one(ls.suc, d), rs.suc)};
}

std::optional<Derivation> close(const Sequent& t) {
    for (const auto& f : t.ant) {
        if (f.is_bottom()) return Derivation::build(Rule::BotL, t, f, std::nullopt, {});
    }
    for (const auto& f : t.ant) {
        if (f.is_atom() && contains(t.suc, f)) return Derivation::build(Rule::Ax, t, f, f, {});
    }
    return std::nullopt;
}

class Eliminator {
public:
    Eliminator(SystemId system, CutStats* stats, const CutOptions& options)
        : system_(system), stats_(stats), options_(options) {}

    Derivation run(const Derivation& l, const Derivation& r, const Formula& d) {
        steps_ = 0;
        fuel_ = saturating_fuel(d.weight(), cut_height(l, r), options_.fuel_weight_factor);
        measures_.clear();
        Derivation out = cut(l, r, d);
        if (stats_) {
            stats_->rewrite_steps += steps_;
            stats_->max_steps_single_cut = std::max(stats_->max_steps_single_cut, steps_);
            stats_->max_fuel_single_cut = std::max(stats_->max_fuel_single_cut, fuel_);
        }
        return out;
    }

private:
    SystemId system_;
    CutStats* stats_;
    CutOptions options_;
    std::size_t steps_ = 0;
    std::size_t fuel_ = 0;
    std::vector<Measure> measures_;

    void hit(const char* name) {
        if (stats_) ++stats_->cases[name];
    }

    struct Frame {
        std::vector<Measure>& stack;
        ~Frame() { stack.pop_back(); }
    };

    Derivation contract_context(Derivation d, const Formulas& gamma, const Formulas& delta) {
        d = contract_all(system_, d, Side::Left, gamma);
        return contract_all(system_, d, Side::Right, delta);
    }

    Derivation cut(const Derivation& l, const Derivation& r, const Formula& d) {
        Measure m{d.weight(), cut_height(l, r)};
        if (!measures_.empty()) {
            const Measure& parent = measures_.back();
            if (!(m < parent)) {
                throw FuelExhausted("cut reduction did not decrease (weight, cut-height)");
            }
        }
        if (++steps_ > fuel_) {
            throw FuelExhausted("cut elimination exceeded its fuel of " + std::to_string(fuel_) + " steps");
        }
        measures_.push_back(m);
        Frame frame{measures_};

        const Sequent target = compose(l, r, d);
        if (auto leaf = close(target)) {
            hit("target closed by axiom");
            return *leaf;
        }

        const Rule lr = l.rule();
        const auto lp = l.right_principal();
        if (lr == Rule::Ax && lp && *lp == d) {
            hit("left axiom on cut formula");
            Derivation out = weaken_all(system_, r, Side::Left, remove_one(l.conclusion().ant, d));
            if (discipline(system_) == Discipline::Multi) {
                out = weaken_all(system_, out, Side::Right, remove_one(l.conclusion().suc, d));
            }
            return out;
        }
        if (!lp || !(*lp == d)) {
            if (bare_premises(lr)) {
                hit("left bare rule absorbs context");
                return l.with_conclusion(target);
            }
            if (context_sharing(lr)) {
                hit("permute into left premises");
                std::vector<Derivation> ps;
                for (const auto& p : l.premises()) ps.push_back(cut(p, r, d));
                return Derivation::build(lr, target, l.left_principal(), l.right_principal(), std::move(ps));
            }
            throw Error("unhandled left rule " + std::string(rule_name(lr)) + " in cut elimination");
        }

        const Rule rr = r.rule();
        const auto rp = r.left_principal();
        if (!rp || !(*rp == d)) {
            if (bare_premises(rr)) {
                hit("right bare rule absorbs context");
                return r.with_conclusion(target);
            }
            if (context_sharing(rr)) {
                hit("permute into right premises");
                std::vector<Derivation> ps;
                for (const auto& p : r.premises()) ps.push_back(cut(l, p, d));
                return Derivation::build(rr, target, r.left_principal(), r.right_principal(), std::move(ps));
            }
            throw Error("unhandled right rule " + std::string(rule_name(rr)) + " in cut elimination");
        }
        return principal(l, r, d, target);
    }

    Derivation principal(const Derivation& l, const Derivation& r, const Formula& d, const Sequent& target) {
        const Rule lr = l.rule();
        const Rule rr = r.rule();
        const Formulas gamma = l.conclusion().ant;
        const Formulas delta = remove_one(l.conclusion().suc, d);
        const Formulas gamma2 = remove_one(r.conclusion().ant, d);
        const Formulas delta2 = r.conclusion().suc;

        if (d.is_and() && lr == Rule::AndR && rr == Rule::AndL) {
            hit("conjunction principal on both sides");
            Derivation s1 = cut(l.premise(0), r.premise(0), d.left());
            Derivation s2 = cut(l.premise(1), s1, d.right());
            return contract_context(s2, gamma, delta);
        }
        if (d.is_or() && rr == Rule::OrL) {
            if (lr == Rule::OrR) {
                hit("disjunction principal on both sides");
                Derivation s1 = cut(l.premise(0), r.premise(0), d.left());
                Derivation s2 = cut(s1, r.premise(1), d.right());
                return contract_context(s2, gamma2, delta2);
            }
            if (lr == Rule::OrR1) {
                hit("left disjunct against disjunction elimination");
                return cut(l.premise(0), r.premise(0), d.left());
            }
            if (lr == Rule::OrR2) {
                hit("right disjunct against disjunction elimination");
                return cut(l.premise(0), r.premise(1), d.right());
            }
        }
        if (d.is_imp()) return implication(l, r, d, target);
        throw Error("unhandled principal cut " + std::string(rule_name(lr)) + "/" + std::string(rule_name(rr)));
    }

    Derivation implication(const Derivation& l, const Derivation& r, const Formula& d, const Sequent& target) {
        const Rule lr = l.rule();
        const Rule rr = r.rule();
        const Formula x = d.left();
        const Formula y = d.right();
        const Formula goal = *r.right_principal();
        const Formula e = goal.left();
        const Formula f = goal.right();
        const Formulas gamma2 = remove_one(r.conclusion().ant, d);

        auto imp_r = [&](const Derivation& premise) {
            return Derivation::build(Rule::ImpR, target, std::nullopt, goal, {premise});
        };
        auto squeeze = [&](const Derivation& s, const Formula& left_dup, const Formula& right_dup) {
            return contract(system_, contract(system_, s, Side::Left, left_dup), Side::Right, right_dup);
        };

        if (lr == Rule::ImpR && rr == Rule::ImpLR) {
            hit("ImpR against ImpLR");
            Derivation a = cut(r.premise(1), l.premise(0), x);
            return imp_r(cut(a, r.premise(2), y));
        }
        if (lr == Rule::ImpR && (rr == Rule::ImpLR_N || rr == Rule::ImpLR_N2)) {
            hit("ImpR against ImpLR_N family");
            Derivation a = cut(r.premise(0), l.premise(0), x);
            Derivation b = cut(a, r.premise(1), y);
            return imp_r(squeeze(b, e, f));
        }
        if (lr == Rule::ImpLR && rr == Rule::ImpLR) {
            hit("ImpLR against ImpLR");
            const Formula lc = *l.left_principal();
            Derivation n0 = cut(l.premise(0), r.premise(0), x);
            Derivation n1 = cut(r.premise(1), l.premise(1), x);
            Derivation n2 = cut(l.premise(2), r.premise(2), y);
            Derivation n3 = cut(r.premise(3), l.premise(3), y);
            return Derivation::build(Rule::ImpLR, target, lc, goal, {n0, n1, n2, n3});
        }
        if ((lr == Rule::ImpLR_N && rr == Rule::ImpLR_N) || (lr == Rule::ImpLR_N2 && rr == Rule::ImpLR_N2)) {
            hit(lr == Rule::ImpLR_N ? "ImpLR_N against ImpLR_N" : "ImpLR_N2 against ImpLR_N2");
            const Formula lc = *l.left_principal();
            const Formula c = lc.left();
            const Formula dd = lc.right();
            Derivation n0 = squeeze(cut(cut(r.premise(0), l.premise(0), x), r.premise(1), y), e, f);
            Derivation n1 = squeeze(cut(cut(r.premise(0), l.premise(1), x), r.premise(1), y), e, f);
            std::vector<Derivation> ps{n0, n1};
            if (lr == Rule::ImpLR_N) {
                ps.push_back(squeeze(cut(cut(l.premise(2), r.premise(2), x), l.premise(3), y), c, dd));
                ps.push_back(squeeze(cut(cut(l.premise(2), r.premise(3), x), l.premise(3), y), c, dd));
            }
            return Derivation::build(lr, target, lc, goal, std::move(ps));
        }
        if (rr == Rule::ImpLR && (lr == Rule::ImpI || lr == Rule::ImpC || lr == Rule::ImpD)) {
            const Formulas& g = target.ant;
            auto imp_r_at = [&](const Formula& a, const Formula& b, const Derivation& premise) {
                return Derivation::build(Rule::ImpR, {g, {Formula::imp(a, b)}}, std::nullopt, Formula::imp(a, b),
                                         {premise});
            };
            auto imp_i_at = [&](const Formula& a, const Formula& b, const Derivation& p0, const Derivation& p1) {
                return Derivation::build(Rule::ImpI, {g, {Formula::imp(a, b)}}, std::nullopt, Formula::imp(a, b),
                                         {p0, p1});
            };
            auto lift = [&](const Derivation& p) { return weaken_all(system_, p, Side::Left, gamma2); };
            if (lr == Rule::ImpI) {
                hit("ImpI against ImpLR");
                const Formula mid = l.premise(0).conclusion().suc[0].right();
                Derivation ec = imp_i_at(e, mid, imp_r_at(e, x, r.premise(1)), lift(l.premise(0)));
                Derivation cf = imp_i_at(mid, f, lift(l.premise(1)), imp_r_at(y, f, r.premise(2)));
                return imp_i_at(e, f, ec, cf);
            }
            if (lr == Rule::ImpC) {
                hit("ImpC against ImpLR");
                Derivation xf = imp_i_at(x, f, lift(l), imp_r_at(y, f, r.premise(2)));
                return imp_i_at(e, f, imp_r_at(e, x, r.premise(1)), xf);
            }
            hit("ImpD against ImpLR");
            Derivation ey = imp_i_at(e, y, imp_r_at(e, x, r.premise(1)), lift(l));
            return imp_i_at(e, f, ey, imp_r_at(y, f, r.premise(2)));
        }
        throw Error("unhandled implication cut " + std::string(rule_name(lr)) + "/" + std::string(rule_name(rr)));
    }
};

}  // namespace

Sequent cut_conclusion(SystemId system, const CutInstance& c) {
    const auto& ls = c.left.conclusion();
    const auto& rs = c.right.conclusion();
    if (!contains(ls.suc, c.cut_formula)) throw Error("left premise does not contain the cut formula on the right");
    if (!contains(rs.ant, c.cut_formula)) throw Error("right premise does not contain the cut formula on the left");
    if (discipline(system) == Discipline::Single && ls.suc.size() != 1) {
        throw Error("single-succedent cut needs a left premise of the form G => D");
    }
    return compose(c.left, c.right, c.cut_formula);
}

Derivation eliminate_cut(SystemId system, const CutInstance& c, CutStats* stats, const CutOptions& options) {
    if (!cut_free(system)) {
        throw UnsupportedError("cut elimination open for this system: " + std::string(system_name(system)));
    }
    if (c.left.cut_count() != 0 || c.right.cut_count() != 0) {
        throw Error("cut premises must be cut-free");
    }
    cut_conclusion(system, c);
    return Eliminator(system, stats, options).run(c.left, c.right, c.cut_formula);
}

namespace {

Derivation eliminate_rec(SystemId system, const Derivation& d, CutStats* stats, const CutOptions& options) {
    if (d.cut_count() == 0) return d;
    std::vector<Derivation> ps;
    ps.reserve(d.premises().size());
    for (const auto& p : d.premises()) ps.push_back(eliminate_rec(system, p, stats, options));
    if (d.rule() == Rule::Cut) {
        Derivation out = eliminate_cut(system, {ps[0], ps[1], *d.cut_formula()}, stats, options);
        return out.with_conclusion(d.conclusion());
    }
    return d.with_premises(std::move(ps));
}

}  // namespace

Derivation eliminate_all_cuts(SystemId system, const Derivation& d, CutStats* stats, const CutOptions& options) {
    if (!cut_free(system)) {
        throw UnsupportedError("cut elimination open for this system: " + std::string(system_name(system)));
    }
    if (stats) stats->initial_cuts += d.cut_count();
    Derivation out = eliminate_rec(system, d, stats, options);
    if (stats) stats->final_height = out.height();
    return out;
}

}  // namespace subint
