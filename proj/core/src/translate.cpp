#include "subint/error.hpp"
#include "subint/hilbert.hpp"
#include "subint/search.hpp"
#include "subint/structural.hpp"

namespace subint {

using namespace tactics;

namespace {

using HD = HilbertDerivation;

HD compose(const HD& ab, const HD& bc) {
    auto identity = [](const HD& d) { return d.by() == Justification::Axiom && d.name() == "8"; };
    if (identity(ab)) return bc;
    if (identity(bc)) return ab;
    return trans(ab, bc);
}

HD id(const Formula& a) { return ax("8", {{"A", a}}); }

Formula ante(const Sequent& s) { return conjunction_of(s.ant); }
Formula succ(const Sequent& s) { return disjunction_of(s.suc); }

class ToHilbert {
public:
    explicit ToHilbert(SystemId system) : system_(system) {}

    HD translate(const Derivation& d) {
        const Sequent& s = d.conclusion();
        const Formula g = ante(s);
        const Formula c = succ(s);
        auto lat = [](const Formula& p, const Formula& q) { return lattice_or_throw(p, q); };
        switch (d.rule()) {
        case Rule::Ax:
        case Rule::BotL:
            return lat(g, c);
        case Rule::AndL:
            return compose(lat(g, ante(d.premise(0).conclusion())), translate(d.premise(0)));
        case Rule::OrR:
        case Rule::OrR1:
        case Rule::OrR2:
            return compose(translate(d.premise(0)), lat(succ(d.premise(0).conclusion()), c));
        case Rule::AndR: {
            HD both = pair_right(translate(d.premise(0)), translate(d.premise(1)));
            return compose(both, lat(both.conclusion().right(), c));
        }
        case Rule::OrL: {
            HD cases = cases_left(translate(d.premise(0)), translate(d.premise(1)));
            return compose(lat(g, cases.conclusion().left()), cases);
        }
        case Rule::ImpR: {
            const Formula imp = *d.right_principal();
            return compose(af(translate(d.premise(0)), g), lat(imp, c));
        }
        case Rule::ImpLR: {
            const Formula h = *d.left_principal();
            const Formula k = *d.right_principal();
            HD both = HD::rule("13", {conj(translate(d.premise(0)), translate(d.premise(1))),
                                      conj(translate(d.premise(2)), translate(d.premise(3)))});
            HD forward = mp(both, ax("3", {{"A", Formula::imp(h, k)}, {"B", Formula::imp(k, h)}}));
            return wrap(g, h, forward, k, c);
        }
        case Rule::ImpLR_N:
        case Rule::ImpLR_N2: {
            const Formula h = *d.left_principal();
            const Formula k = *d.right_principal();
            const Formula &a = k.left(), &b = k.right(), &cc = h.left(), &dd = h.right();
            HD t0 = translate(d.premise(0));
            HD q1 = compose(lat(Formula::conj(a, dd), ante(d.premise(1).conclusion())), translate(d.premise(1)));
            if (d.rule() == Rule::ImpLR_N2) {
                HD p0 = compose(t0, lat(succ(d.premise(0).conclusion()), Formula::disj(cc, b)));
                return wrap(g, h, HD::rule("N2", {p0, q1}), k, c);
            }
            HD q0 = compose(t0, lat(succ(d.premise(0).conclusion()), Formula::disj(b, cc)));
            HD q2 = compose(translate(d.premise(2)), lat(succ(d.premise(2).conclusion()), Formula::disj(a, dd)));
            HD q3 = compose(lat(Formula::conj(cc, b), ante(d.premise(3).conclusion())), translate(d.premise(3)));
            HD both = HD::rule("N", {q0, q2, q1, q3});
            HD backward = mp(both, ax("4", {{"A", Formula::imp(k, h)}, {"B", Formula::imp(h, k)}}));
            return wrap(g, h, backward, k, c);
        }
        case Rule::ImpChat: {
            const Formula h = *d.left_principal();
            const Formula k = *d.right_principal();
            const Formula &x = h.left(), &a = h.right(), &b = k.right();
            HD t = translate(d.premise(0));
            HD a_iff = conj(pair_right(id(a), t), ax("3", {{"A", a}, {"B", b}}));
            HD x_iff = conj(id(x), id(x));
            const Formula strengthened = Formula::imp(x, Formula::conj(a, b));
            HD both = HD::rule("13", {x_iff, a_iff});
            HD forward = mp(both, ax("3", {{"A", Formula::imp(h, strengthened)}, {"B", Formula::imp(strengthened, h)}}));
            HD split = trans(ax("Chat", {{"A", x}, {"B", a}, {"C", b}}),
                             ax("4", {{"A", Formula::imp(x, a)}, {"B", Formula::imp(x, b)}}));
            return wrap(g, h, trans(forward, split), k, c);
        }
        case Rule::ImpDhat: {
            const Formula h = *d.left_principal();
            const Formula k = *d.right_principal();
            const Formula &b = h.left(), &x = h.right(), &a = k.left();
            HD t = translate(d.premise(0));
            HD b_iff = conj(ax("2", {{"A", a}, {"B", b}}), cases_left(t, id(b)));
            HD x_iff = conj(id(x), id(x));
            const Formula widened = Formula::imp(Formula::disj(a, b), x);
            HD both = HD::rule("13", {b_iff, x_iff});
            HD forward = mp(both, ax("3", {{"A", Formula::imp(h, widened)}, {"B", Formula::imp(widened, h)}}));
            HD split = trans(ax("Dhat", {{"A", a}, {"B", b}, {"C", x}}),
                             ax("3", {{"A", Formula::imp(a, x)}, {"B", Formula::imp(b, x)}}));
            return wrap(g, h, trans(forward, split), k, c);
        }
        case Rule::ImpI:
        case Rule::ImpC:
        case Rule::ImpD: {
            const Formula k = *d.right_principal();
            HD both = pair_right(translate(d.premise(0)), translate(d.premise(1)));
            const Formula f0 = d.premise(0).conclusion().suc[0];
            const Formula f1 = d.premise(1).conclusion().suc[0];
            HD axiom = d.rule() == Rule::ImpI ? ax("I", {{"A", f0.left()}, {"B", f0.right()}, {"C", f1.right()}})
                       : d.rule() == Rule::ImpC
                           ? ax("C", {{"A", f0.left()}, {"B", f0.right()}, {"C", f1.right()}})
                           : ax("D", {{"A", f0.left()}, {"B", f1.left()}, {"C", f0.right()}});
            return compose(trans(both, axiom), lat(k, c));
        }
        case Rule::Cut: {
            const Formula cut = *d.cut_formula();
            const Sequent& left = d.premise(0).conclusion();
            const Sequent& right = d.premise(1).conclusion();
            const Formulas rest_ant = remove_one(right.ant, cut);
            const Formulas rest_suc = remove_one(left.suc, cut);
            const Formula side = conjunction_of(rest_ant);
            HD start = pair_right(compose(lat(g, ante(left)), translate(d.premise(0))), lat(g, side));
            const Formula carried = Formula::conj(cut, side);
            const Formula target = rest_suc.empty() ? carried : Formula::disj(carried, disjunction_of(rest_suc));
            HD spread = lat(start.conclusion().right(), target);
            HD through = compose(lat(carried, ante(right)), compose(translate(d.premise(1)), lat(succ(right), c)));
            HD finish = rest_suc.empty() ? through : cases_left(through, lat(disjunction_of(rest_suc), c));
            return compose(start, compose(spread, finish));
        }
        }
        throw Error("unhandled rule");
    }

private:
    SystemId system_;

    static HD wrap(const Formula& g, const Formula& h, const HD& step, const Formula& k, const Formula& c) {
        return compose(lattice_or_throw(g, h), compose(step, lattice_or_throw(k, c)));
    }
};

Derivation node(Rule r, Sequent s, std::optional<Formula> lp, std::optional<Formula> rp,
                std::vector<Derivation> premises) {
    return Derivation::build(r, std::move(s), std::move(lp), std::move(rp), std::move(premises));
}

Derivation imp_right(const Formula& f, Derivation premise) {
    return node(Rule::ImpR, Sequent({}, {f}), std::nullopt, f, {std::move(premise)});
}

class ToSequent {
public:
    explicit ToSequent(SystemId system) : system_(system), multi_(discipline(system) == Discipline::Multi) {}

    Derivation translate(const HD& d) {
        if (d.by() == Justification::Axiom) return axiom_derivation(system_, d.name(), d.substitution());
        if (d.by() == Justification::Assumption) throw Error("assumption in theorem-mode translation");
        const std::string& r = d.name();
        const Formula c = d.conclusion();
        if (r == "5") {
            const Formula a = d.premise(0).conclusion();
            return cut(translate(d.premise(0)), inverted(d.premise(1)), a);
        }
        if (r == "6") {
            Derivation inner = weaken(system_, translate(d.premise(0)), Side::Left, c.left());
            return imp_right(c, std::move(inner));
        }
        if (r == "9") {
            const Formula mid = d.premise(0).conclusion().right();
            return imp_right(c, cut(inverted(d.premise(0)), inverted(d.premise(1)), mid));
        }
        if (r == "10") {
            Sequent s({c.left()}, {c.right()});
            return imp_right(c, node(Rule::AndR, s, std::nullopt, c.right(),
                                     {inverted(d.premise(0)), inverted(d.premise(1))}));
        }
        if (r == "11") {
            Sequent s({c.left()}, {c.right()});
            return imp_right(c, node(Rule::OrL, s, c.left(), std::nullopt,
                                     {inverted(d.premise(0)), inverted(d.premise(1))}));
        }
        if (r == "12") {
            return node(Rule::AndR, Sequent({}, {c}), std::nullopt, c,
                        {translate(d.premise(0)), translate(d.premise(1))});
        }
        if (r == "13") {
            auto [ab, ba] = halves(d.premise(0));
            auto [cd, dc] = halves(d.premise(1));
            const Formula forward = c.left();
            const Formula backward = c.right();
            Derivation f = imp_right(forward, implication_step(forward.left(), forward.right(), ab, ba, cd, dc));
            Derivation b = imp_right(backward, implication_step(backward.left(), backward.right(), ba, ab, dc, cd));
            return node(Rule::AndR, Sequent({}, {c}), std::nullopt, c, {f, b});
        }
        if (r == "N") {
            Derivation q0 = split_right(inverted(d.premise(0)));
            Derivation q1 = split_right(inverted(d.premise(1)));
            Derivation q2 = split_left(inverted(d.premise(2)));
            Derivation q3 = split_left(inverted(d.premise(3)));
            const Formula ab = c.left().left();
            const Formula cd = c.left().right();
            Derivation f = imp_right(c.left(), node(Rule::ImpLR_N, Sequent({ab}, {cd}), ab, cd, {q1, q3, q0, q2}));
            Derivation b = imp_right(c.right(), node(Rule::ImpLR_N, Sequent({cd}, {ab}), cd, ab, {q0, q2, q1, q3}));
            return node(Rule::AndR, Sequent({}, {c}), std::nullopt, c, {f, b});
        }
        if (r == "N2") {
            Derivation q0 = split_right(inverted(d.premise(0)));
            Derivation q1 = split_left(inverted(d.premise(1)));
            const Formula ab = c.left();
            const Formula cd = c.right();
            return imp_right(c, node(Rule::ImpLR_N2, Sequent({ab}, {cd}), ab, cd, {q0, q1}));
        }
        throw Error("unknown Hilbert rule " + r);
    }

private:
    SystemId system_;
    bool multi_;

    Derivation inverted(const HD& d) { return invert_implication(system_, translate(d)); }

    Derivation cut(Derivation left, Derivation right, const Formula& f) {
        if (cut_free(system_)) return eliminate_cut(system_, {std::move(left), std::move(right), f});
        Sequent s = cut_conclusion(system_, {left, right, f});
        return Derivation::build(Rule::Cut, std::move(s), std::nullopt, std::nullopt,
                                 {std::move(left), std::move(right)}, f);
    }

    std::pair<Derivation, Derivation> halves(const HD& iff) {
        Derivation whole = translate(iff);
        auto parts = invert(system_, whole, InversionShape::AndR, iff.conclusion());
        return {invert_implication(system_, parts[0]), invert_implication(system_, parts[1])};
    }

    Derivation split_right(const Derivation& d) {
        if (!multi_) throw UnsupportedError("disjunction splitting needs a multi-succedent system");
        return invert(system_, d, InversionShape::OrR, d.conclusion().suc[0])[0];
    }

    Derivation split_left(const Derivation& d) {
        return invert(system_, d, InversionShape::AndL, d.conclusion().ant[0])[0];
    }

    // h => k from derivations of the two equivalences between the parts.
    Derivation implication_step(const Formula& h, const Formula& k, const Derivation& ab, const Derivation& ba,
                                const Derivation& cd, const Derivation& dc) {
        Sequent s({h}, {k});
        if (has_rule(system_, Rule::ImpLR)) return node(Rule::ImpLR, s, h, k, {ab, ba, cd, dc});
        const Rule r = has_rule(system_, Rule::ImpLR_N) ? Rule::ImpLR_N : Rule::ImpLR_N2;
        Derivation p0 = weaken(system_, ba, Side::Right, k.right());
        Derivation p1 = weaken(system_, cd, Side::Left, k.left());
        if (r == Rule::ImpLR_N2) return node(r, s, h, k, {p0, p1});
        Derivation p2 = weaken(system_, ab, Side::Right, h.right());
        Derivation p3 = weaken(system_, dc, Side::Left, h.left());
        return node(r, s, h, k, {p0, p1, p2, p3});
    }
};

Derivation identity(SystemId system, const Formula& c, Formulas gamma = {}, Formulas delta = {}) {
    return identity_derivation(c, gamma, delta, system);
}

Derivation or_right(SystemId system, Sequent s, bool right_side, const Derivation& component) {
    const Formula f = s.suc[0];
    if (discipline(system) == Discipline::Single) {
        return node(right_side ? Rule::OrR2 : Rule::OrR1, std::move(s), std::nullopt, f, {component});
    }
    Derivation widened = weaken(system, component, Side::Right, right_side ? f.left() : f.right());
    return node(Rule::OrR, std::move(s), std::nullopt, f, {widened});
}

Derivation project_left(SystemId system, const Formula& conj, bool right_side) {
    const Formula& want = right_side ? conj.right() : conj.left();
    const Formula& other = right_side ? conj.left() : conj.right();
    return node(Rule::AndL, Sequent({conj}, {want}), conj, std::nullopt, {identity(system, want, {other})});
}

}  // namespace

HilbertDerivation seq_to_hilbert(SystemId system, const Derivation& d) {
    CheckReport r = check(system, d);
    if (!r) throw Error("derivation rejected: " + r.describe());
    return ToHilbert(system).translate(d);
}

Derivation hilbert_to_seq(HilbertSystemId system, const HilbertDerivation& d) {
    CheckReport r = check_hilbert(system, d, HilbertMode::Theorem);
    if (!r) throw Error("Hilbert derivation rejected: " + r.describe());
    return ToSequent(alias(system)).translate(d);
}

Derivation axiom_derivation(SystemId system, std::string_view scheme, const Substitution& subst) {
    const bool extension = scheme == "I" || scheme == "C" || scheme == "D" || scheme == "Chat" || scheme == "Dhat";
    if (extension && !has_extension(alias(system), scheme)) {
        throw UnsupportedError("axiom " + std::string(scheme) + " is not available in " +
                               std::string(system_name(system)));
    }
    const Formula f = instantiate_scheme(scheme, subst);
    auto letter = [&](const char* l) { return subst.at(l); };
    if (scheme == "1" || scheme == "2") {
        const Formula disj = f.right();
        const bool right_side = scheme == "2";
        Derivation inner = or_right(system, Sequent({f.left()}, {disj}), right_side, identity(system, f.left()));
        return imp_right(f, inner);
    }
    if (scheme == "3" || scheme == "4") return imp_right(f, project_left(system, f.left(), scheme == "4"));
    if (scheme == "8") return imp_right(f, identity(system, f.left()));
    if (scheme == "14") {
        return imp_right(f, node(Rule::BotL, Sequent({f.left()}, {f.right()}), f.left(), std::nullopt, {}));
    }
    if (scheme == "7") {
        const Formula a = letter("A"), b = letter("B"), c = letter("C");
        const Formula goal = f.right();
        auto branch = [&](const Formula& x, bool right_side) {
            const Formula both = Formula::conj(a, x);
            Derivation pair = node(Rule::AndR, Sequent({a, x}, {both}), std::nullopt, both,
                                   {identity(system, a, {x}), identity(system, x, {a})});
            return or_right(system, Sequent({a, x}, {goal}), right_side, pair);
        };
        const Formula bc = Formula::disj(b, c);
        Derivation cases = node(Rule::OrL, Sequent({a, bc}, {goal}), bc, std::nullopt,
                                {branch(b, false), branch(c, true)});
        return imp_right(f, node(Rule::AndL, Sequent({f.left()}, {goal}), f.left(), std::nullopt, {cases}));
    }
    if (scheme == "I" || scheme == "C" || scheme == "D") {
        const Formula pair = f.left();
        const Formula goal = f.right();
        const Rule r = scheme == "I" ? Rule::ImpI : scheme == "C" ? Rule::ImpC : Rule::ImpD;
        return imp_right(f, node(r, Sequent({pair}, {goal}), std::nullopt, goal,
                                 {project_left(system, pair, false), project_left(system, pair, true)}));
    }
    if (scheme == "Chat") {
        const Formula h = f.left();
        const Formula a = letter("A"), bc = h.right();
        auto half = [&](bool right_side) {
            const Formula k = Formula::imp(a, right_side ? bc.right() : bc.left());
            return node(Rule::ImpChat, Sequent({h}, {k}), h, k, {project_left(system, bc, right_side)});
        };
        return imp_right(f, node(Rule::AndR, Sequent({h}, {f.right()}), std::nullopt, f.right(),
                                 {half(false), half(true)}));
    }
    const Formula h = f.left();
    const Formula ab = h.left(), c = letter("C");
    auto half = [&](bool right_side) {
        const Formula x = right_side ? ab.right() : ab.left();
        const Formula k = Formula::imp(x, c);
        Derivation inj = or_right(system, Sequent({x}, {ab}), right_side, identity(system, x));
        return node(Rule::ImpDhat, Sequent({h}, {k}), h, k, {inj});
    };
    return imp_right(f, node(Rule::AndR, Sequent({h}, {f.right()}), std::nullopt, f.right(),
                             {half(false), half(true)}));
}

}  // namespace subint
