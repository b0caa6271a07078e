#include "subint/search.hpp"

#include <set>
#include <string>
#include <unordered_map>

#include "subint/error.hpp"

namespace subint {

std::string_view failure_name(FailureReason r) {
    return r == FailureReason::Exhausted ? "Exhausted" : "DepthCapped";
}

namespace {

std::string key_of(const Sequent& s, std::size_t depth, bool with_depth) {
    std::string k;
    for (const auto& f : s.ant) k += print(f) + ",";
    k += "=>";
    for (const auto& f : s.suc) k += print(f) + ",";
    if (with_depth) k += "#" + std::to_string(depth);
    return k;
}

Formulas distinct(const Formulas& xs) {
    Formulas out;
    for (const auto& f : xs) {
        if (!contains(out, f)) out.push_back(f);
    }
    return out;
}

class Searcher {
public:
    Searcher(SystemId system, const SearchConfig& cfg, const Sequent& goal)
        : system_(system), single_(discipline(system) == Discipline::Single), cfg_(cfg),
          uses_depth_(has_rule(system, Rule::ImpI)) {
        if (cfg.interpolant_pool) {
            pool_ = *cfg.interpolant_pool;
        } else {
            std::set<Formula> all;
            for (const auto& side : {goal.ant, goal.suc}) {
                for (const auto& f : side) {
                    for (auto& g : subformulas(f)) all.insert(std::move(g));
                }
            }
            pool_.assign(all.begin(), all.end());
        }
        if (uses_depth_ && pool_.empty()) throw Error("interpolant pool is empty");
    }

    std::optional<Derivation> solve(const Sequent& s, std::size_t depth) {
        ++stats.nodes;
        std::string key = key_of(s, depth, uses_depth_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats.memo_hits;
            if (it->second.capped) ++cap_events;
            return it->second.proof;
        }
        std::size_t before = cap_events;
        auto result = solve_uncached(s, depth);
        memo_.emplace(std::move(key), Entry{result, cap_events != before});
        return result;
    }

    SearchStats stats;
    std::size_t cap_events = 0;
    bool imp_i_tried = false;
    bool budget_hit = false;

private:
    struct Entry {
        std::optional<Derivation> proof;
        bool capped;
    };

    SystemId system_;
    bool single_;
    SearchConfig cfg_;
    bool uses_depth_;
    Formulas pool_;
    std::unordered_map<std::string, Entry> memo_;

    std::optional<Derivation> sub(Formulas ant, Formulas suc, std::size_t depth) {
        return solve(canonical({std::move(ant), std::move(suc)}), depth);
    }

    static std::optional<Derivation> node(Rule r, const Sequent& s, std::optional<Formula> lp,
                                          std::optional<Formula> rp, std::vector<std::optional<Derivation>> ps) {
        std::vector<Derivation> premises;
        for (auto& p : ps) {
            if (!p) return std::nullopt;
            premises.push_back(std::move(*p));
        }
        return Derivation::build(r, s, std::move(lp), std::move(rp), std::move(premises));
    }

    // Succedent conjunction with the fewest components missing from the antecedent.
    static std::optional<Formula> closest_conjunction(const Sequent& s) {
        std::optional<Formula> best;
        int best_missing = 3;
        for (const auto& f : s.suc) {
            if (!f.is_and()) continue;
            const int missing = int(!contains(s.ant, f.left())) + int(!contains(s.ant, f.right()));
            if (missing < best_missing) {
                best = f;
                best_missing = missing;
            }
        }
        return best;
    }

    std::optional<Derivation> solve_uncached(const Sequent& s, std::size_t depth) {
        for (const auto& f : s.ant) {
            if (f.is_bottom()) return Derivation::build(Rule::BotL, s, f, std::nullopt, {});
        }
        for (const auto& f : s.ant) {
            if (f.is_atom() && contains(s.suc, f)) return Derivation::build(Rule::Ax, s, f, f, {});
        }
        for (const auto& f : s.ant) {
            if (f.is_and()) {
                auto p = sub(concat({f.left(), f.right()}, remove_one(s.ant, f)), s.suc, depth);
                return node(Rule::AndL, s, f, std::nullopt, {p});
            }
        }
        for (const auto& f : s.ant) {
            if (f.is_or()) {
                Formulas rest = remove_one(s.ant, f);
                auto p0 = sub(with(rest, f.left()), s.suc, depth);
                if (!p0) return std::nullopt;
                auto p1 = sub(with(rest, f.right()), s.suc, depth);
                return node(Rule::OrL, s, f, std::nullopt, {p0, p1});
            }
        }
        if (auto chosen = closest_conjunction(s)) {
            const Formula f = *chosen;
            {
                Formulas rest = remove_one(s.suc, f);
                auto p0 = sub(s.ant, with(rest, f.left()), depth);
                if (!p0) return std::nullopt;
                auto p1 = sub(s.ant, with(rest, f.right()), depth);
                return node(Rule::AndR, s, std::nullopt, f, {p0, p1});
            }
        }
        if (!single_) {
            for (const auto& f : s.suc) {
                if (f.is_or()) {
                    auto p = sub(s.ant, concat(remove_one(s.suc, f), {f.left(), f.right()}), depth);
                    return node(Rule::OrR, s, std::nullopt, f, {p});
                }
            }
        }
        if (single_ && s.suc[0].is_or()) {
            const Formula& f = s.suc[0];
            if (auto p = sub(s.ant, {f.left()}, depth)) return node(Rule::OrR1, s, std::nullopt, f, {p});
            if (auto p = sub(s.ant, {f.right()}, depth)) return node(Rule::OrR2, s, std::nullopt, f, {p});
            return std::nullopt;
        }
        return implications(s, depth);
    }

    std::optional<Derivation> implications(const Sequent& s, std::size_t depth) {
        Formulas left_imps;
        Formulas right_imps;
        for (const auto& f : distinct(s.ant)) {
            if (f.is_imp()) left_imps.push_back(f);
        }
        for (const auto& f : distinct(s.suc)) {
            if (f.is_imp()) right_imps.push_back(f);
        }
        for (const auto& g : right_imps) {
            if (auto p = sub({g.left()}, {g.right()}, depth)) return node(Rule::ImpR, s, std::nullopt, g, {p});
        }
        const Rule family = has_rule(system_, Rule::ImpLR)     ? Rule::ImpLR
                            : has_rule(system_, Rule::ImpLR_N) ? Rule::ImpLR_N
                                                               : Rule::ImpLR_N2;
        std::size_t pairs = 0;
        for (const auto& h : left_imps) {
            for (const auto& g : right_imps) {
                if (pairs++ >= cfg_.pair_budget) {
                    budget_hit = true;
                    goto after_pairs;
                }
                if (auto d = implication_pair(s, family, h, g, depth)) return d;
            }
        }
    after_pairs:
        if (!single_ || right_imps.empty()) return std::nullopt;
        const Formula& g = right_imps[0];
        const Formula& b = g.left();
        const Formula& c = g.right();
        if (has_rule(system_, Rule::ImpC) && c.is_and()) {
            auto p0 = sub(s.ant, {Formula::imp(b, c.left())}, depth);
            if (p0) {
                auto p1 = sub(s.ant, {Formula::imp(b, c.right())}, depth);
                if (p1) return node(Rule::ImpC, s, std::nullopt, g, {p0, p1});
            }
        }
        if (has_rule(system_, Rule::ImpD) && b.is_or()) {
            auto p0 = sub(s.ant, {Formula::imp(b.left(), c)}, depth);
            if (p0) {
                auto p1 = sub(s.ant, {Formula::imp(b.right(), c)}, depth);
                if (p1) return node(Rule::ImpD, s, std::nullopt, g, {p0, p1});
            }
        }
        if (has_rule(system_, Rule::ImpI)) {
            imp_i_tried = true;
            if (depth == 0) {
                ++cap_events;
                return std::nullopt;
            }
            for (const auto& x : pool_) {
                if (x == b || x == c) continue;
                auto p0 = sub(s.ant, {Formula::imp(b, x)}, depth - 1);
                if (!p0) continue;
                auto p1 = sub(s.ant, {Formula::imp(x, c)}, depth - 1);
                if (p1) return node(Rule::ImpI, s, std::nullopt, g, {p0, p1});
            }
        }
        return std::nullopt;
    }

    std::optional<Derivation> implication_pair(const Sequent& s, Rule family, const Formula& h, const Formula& g,
                                               std::size_t depth) {
        if (family == Rule::ImpLR) {
            const Formula &a = h.left(), &c = h.right(), &b = g.left(), &d = g.right();
            auto p0 = sub({a}, {b}, depth);
            if (!p0) return std::nullopt;
            auto p1 = sub({b}, {a}, depth);
            if (!p1) return std::nullopt;
            auto p2 = sub({c}, {d}, depth);
            if (!p2) return std::nullopt;
            auto p3 = sub({d}, {c}, depth);
            return node(family, s, h, g, {p0, p1, p2, p3});
        }
        const Formula &c = h.left(), &d = h.right(), &a = g.left(), &b = g.right();
        auto p0 = sub({a}, {c, b}, depth);
        if (!p0) return std::nullopt;
        auto p1 = sub({a, d}, {b}, depth);
        if (!p1) return std::nullopt;
        if (family == Rule::ImpLR_N2) return node(family, s, h, g, {p0, p1});
        auto p2 = sub({c}, {a, d}, depth);
        if (!p2) return std::nullopt;
        auto p3 = sub({c, b}, {d}, depth);
        return node(family, s, h, g, {p0, p1, p2, p3});
    }
};

}  // namespace

ProveResult prove(SystemId system, const Sequent& goal, const SearchConfig& cfg) {
    if (!cut_free(system)) {
        throw UnsupportedError("proof search is not available for " + std::string(system_name(system)));
    }
    require_discipline(goal, discipline(system));
    if (cfg.max_depth < 1) throw Error("max depth must be at least 1");
    Searcher searcher(system, cfg, goal);
    ProveResult result;
    auto proof = searcher.solve(canonical(goal), cfg.max_depth);
    if (proof) result.proof = proof->with_conclusion(goal);
    result.reason = searcher.cap_events > 0 ? FailureReason::DepthCapped : FailureReason::Exhausted;
    result.pool_limited = searcher.imp_i_tried;
    result.budget_limited = searcher.budget_hit;
    result.stats = searcher.stats;
    return result;
}

}  // namespace subint
