#include <memory>
#include <utility>

#include "subint/error.hpp"
#include "subint/search.hpp"
#include "subint/structural.hpp"

namespace subint {

namespace {

Derivation make_cut(SystemId system, Derivation left, Derivation right, const Formula& d) {
    Sequent concl = cut_conclusion(system, {left, right, d});
    return Derivation::build(Rule::Cut, std::move(concl), std::nullopt, std::nullopt,
                             {std::move(left), std::move(right)}, d);
}

const Sequent& require_implication_goal(const Derivation& d) {
    const Sequent& s = d.conclusion();
    if (!s.ant.empty() || s.suc.size() != 1 || !s.suc[0].is_imp()) {
        throw Error("expected a derivation of => A -> B, got " + print(s));
    }
    return s;
}

Derivation invert_cut_free(SystemId system, const Derivation& d) {
    const Formula g = require_implication_goal(d).suc[0];
    switch (d.rule()) {
    case Rule::ImpR:
        return d.premise(0);
    case Rule::ImpI: {
        Derivation a = invert_cut_free(system, d.premise(0));
        Derivation b = invert_cut_free(system, d.premise(1));
        const Formula mid = d.premise(0).conclusion().suc[0].right();
        return eliminate_cut(system, {a, b, mid});
    }
    case Rule::ImpC: {
        Derivation a = invert_cut_free(system, d.premise(0));
        Derivation b = invert_cut_free(system, d.premise(1));
        return Derivation::build(Rule::AndR, Sequent::single({g.left()}, g.right()), std::nullopt, g.right(), {a, b});
    }
    case Rule::ImpD: {
        Derivation a = invert_cut_free(system, d.premise(0));
        Derivation b = invert_cut_free(system, d.premise(1));
        return Derivation::build(Rule::OrL, Sequent::single({g.left()}, g.right()), g.left(), std::nullopt, {a, b});
    }
    default:
        throw Error("unexpected last rule " + std::string(rule_name(d.rule())) + " for " + print(d.conclusion()));
    }
}

// Evidence that the empty antecedent proves a formula, shaped by its main
// connective; implications carry a derivation of their antecedent => consequent.
struct Witness;
using WitnessPtr = std::shared_ptr<const Witness>;

struct Witness {
    enum class Kind { Imp, And, Or };
    Formula formula;
    Kind kind;
    std::optional<Derivation> body;
    WitnessPtr first;
    WitnessPtr second;
    bool right_disjunct = false;
};

using Supports = std::vector<std::pair<Formula, WitnessPtr>>;

WitnessPtr imp_witness(const Formula& f, Derivation body) {
    return std::make_shared<const Witness>(Witness{f, Witness::Kind::Imp, std::move(body), nullptr, nullptr, false});
}

const WitnessPtr* find_support(const Supports& s, const Formula& f) {
    for (const auto& [g, w] : s) {
        if (g == f) return &w;
    }
    return nullptr;
}

class Extractor {
public:
    explicit Extractor(SystemId system) : system_(system) {}

    WitnessPtr extract(const Derivation& e, const Supports& supports) {
        const Sequent& s = e.conclusion();
        for (const auto& g : s.suc) {
            if (contains(s.ant, g)) {
                if (const auto* w = find_support(supports, g)) return *w;
            }
        }
        auto support_of = [&](const Formula& f) -> const Witness& {
            const auto* w = find_support(supports, f);
            if (!w) throw Error("no support for " + print(f));
            return **w;
        };
        switch (e.rule()) {
        case Rule::Ax:
        case Rule::BotL:
            throw Error("closed leaf without support at " + print(s));
        case Rule::AndL: {
            const Formula f = *e.left_principal();
            const Witness& w = support_of(f);
            Supports next = supports;
            next.emplace_back(f.left(), w.first);
            next.emplace_back(f.right(), w.second);
            return extract(e.premise(0), next);
        }
        case Rule::OrL: {
            const Formula f = *e.left_principal();
            const Witness& w = support_of(f);
            Supports next = supports;
            next.emplace_back(w.right_disjunct ? f.right() : f.left(), w.first);
            return extract(e.premise(w.right_disjunct ? 1 : 0), next);
        }
        case Rule::AndR: {
            const Formula f = *e.right_principal();
            WitnessPtr a = extract(e.premise(0), supports);
            if (a->formula != f.left()) return a;
            WitnessPtr b = extract(e.premise(1), supports);
            if (b->formula != f.right()) return b;
            return std::make_shared<const Witness>(Witness{f, Witness::Kind::And, std::nullopt, a, b, false});
        }
        case Rule::OrR:
        case Rule::OrR1:
        case Rule::OrR2: {
            const Formula f = *e.right_principal();
            WitnessPtr a = extract(e.premise(0), supports);
            bool right = e.rule() == Rule::OrR2;
            if (e.rule() == Rule::OrR) {
                if (a->formula == f.left()) {
                    right = false;
                } else if (a->formula == f.right()) {
                    right = true;
                } else {
                    return a;
                }
            }
            return std::make_shared<const Witness>(Witness{f, Witness::Kind::Or, std::nullopt, a, nullptr, right});
        }
        case Rule::ImpR:
            return imp_witness(*e.right_principal(), e.premise(0));
        case Rule::ImpLR: {
            const Formula h = *e.left_principal();
            const Formula g = *e.right_principal();
            const Witness& w = support_of(h);
            Derivation ba = make_cut(system_, e.premise(1), *w.body, h.left());
            return imp_witness(g, make_cut(system_, ba, e.premise(2), h.right()));
        }
        case Rule::ImpChat: {
            const Formula h = *e.left_principal();
            const Witness& w = support_of(h);
            return imp_witness(*e.right_principal(), make_cut(system_, *w.body, e.premise(0), h.right()));
        }
        case Rule::ImpDhat: {
            const Formula h = *e.left_principal();
            const Witness& w = support_of(h);
            return imp_witness(*e.right_principal(), make_cut(system_, e.premise(0), *w.body, h.left()));
        }
        case Rule::ImpI: {
            WitnessPtr a = extract(e.premise(0), supports);
            WitnessPtr b = extract(e.premise(1), supports);
            const Formula mid = a->formula.right();
            return imp_witness(*e.right_principal(), make_cut(system_, *a->body, *b->body, mid));
        }
        case Rule::ImpC:
        case Rule::ImpD: {
            const Formula g = *e.right_principal();
            WitnessPtr a = extract(e.premise(0), supports);
            WitnessPtr b = extract(e.premise(1), supports);
            Sequent concl = Sequent::single({g.left()}, g.right());
            Derivation body =
                e.rule() == Rule::ImpC
                    ? Derivation::build(Rule::AndR, concl, std::nullopt, g.right(), {*a->body, *b->body})
                    : Derivation::build(Rule::OrL, concl, g.left(), std::nullopt, {*a->body, *b->body});
            return imp_witness(g, std::move(body));
        }
        case Rule::Cut: {
            const Formula d = *e.cut_formula();
            WitnessPtr a = extract(e.premise(0), supports);
            if (a->formula != d) return a;
            Supports next = supports;
            next.emplace_back(d, a);
            return extract(e.premise(1), next);
        }
        default:
            throw UnsupportedError("witness extraction does not handle " + std::string(rule_name(e.rule())));
        }
    }

private:
    SystemId system_;
};

}  // namespace

Derivation invert_implication(SystemId system, const Derivation& d) {
    const Formula g = require_implication_goal(d).suc[0];
    if (cut_free(system)) return invert_cut_free(system, d);
    WitnessPtr w = Extractor(system).extract(d, {});
    if (w->formula != g || w->kind != Witness::Kind::Imp) throw Error("extraction produced the wrong witness");
    return *w->body;
}

}  // namespace subint
