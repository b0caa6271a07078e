#include <algorithm>

#include "subint/error.hpp"
#include "subint/hilbert.hpp"

namespace subint::tactics {

namespace {

using HD = HilbertDerivation;

bool is_identity(const HD& d) { return d.by() == Justification::Axiom && d.name() == "8"; }

HD id(const Formula& a) { return ax("8", {{"A", a}}); }

HD compose(const HD& ab, const HD& bc) {
    if (is_identity(ab)) return bc;
    if (is_identity(bc)) return ab;
    return trans(ab, bc);
}

void conjuncts(const Formula& f, Formulas& out) {
    if (f.is_and()) {
        conjuncts(f.left(), out);
        conjuncts(f.right(), out);
    } else {
        out.push_back(f);
    }
}

void disjuncts(const Formula& f, Formulas& out) {
    if (f.is_or()) {
        disjuncts(f.left(), out);
        disjuncts(f.right(), out);
    } else {
        out.push_back(f);
    }
}

Formulas conjuncts(const Formula& f) {
    Formulas out;
    conjuncts(f, out);
    return out;
}

Formulas disjuncts(const Formula& f) {
    Formulas out;
    disjuncts(f, out);
    return out;
}

HD project(const Formula& p, const Formula& l) {
    if (p == l) return id(l);
    if (p.is_and()) {
        if (contains(conjuncts(p.left()), l)) {
            return compose(ax("3", {{"A", p.left()}, {"B", p.right()}}), project(p.left(), l));
        }
        if (contains(conjuncts(p.right()), l)) {
            return compose(ax("4", {{"A", p.left()}, {"B", p.right()}}), project(p.right(), l));
        }
    }
    throw Error("no conjunct " + print(l) + " in " + print(p));
}

HD inject(const Formula& l, const Formula& q) {
    if (q == l) return id(l);
    if (q.is_or()) {
        if (contains(disjuncts(q.left()), l)) {
            return compose(inject(l, q.left()), ax("1", {{"A", q.left()}, {"B", q.right()}}));
        }
        if (contains(disjuncts(q.right()), l)) {
            return compose(inject(l, q.right()), ax("2", {{"A", q.left()}, {"B", q.right()}}));
        }
    }
    throw Error("no disjunct " + print(l) + " in " + print(q));
}

// (X | A) & (X | B) -> X | (A & B), from axioms 1-4 and 7 with rules 9-11.
HD distribute_join(const Formula& x, const Formula& a, const Formula& b) {
    const Formula xa = Formula::disj(x, a);
    const Formula ab = Formula::conj(a, b);
    const Formula target = Formula::disj(x, ab);
    HD spread = ax("7", {{"A", xa}, {"B", x}, {"C", b}});
    HD first = trans(ax("4", {{"A", xa}, {"B", x}}), ax("1", {{"A", x}, {"B", ab}}));
    HD swap = pair_right(ax("4", {{"A", xa}, {"B", b}}), ax("3", {{"A", xa}, {"B", b}}));
    HD inner = ax("7", {{"A", b}, {"B", x}, {"C", a}});
    HD via_x = trans(ax("4", {{"A", b}, {"B", x}}), ax("1", {{"A", x}, {"B", ab}}));
    HD via_ab = trans(pair_right(ax("4", {{"A", b}, {"B", a}}), ax("3", {{"A", b}, {"B", a}})),
                      ax("2", {{"A", x}, {"B", ab}}));
    HD second = trans(swap, trans(inner, cases_left(via_x, via_ab)));
    return trans(spread, cases_left(first, second));
}

Formulas without_one(const Formulas& xs, std::size_t i) {
    Formulas out = xs;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

}  // namespace

HD ax(std::string_view scheme, std::initializer_list<std::pair<const char*, Formula>> subst) {
    Substitution s;
    for (const auto& [k, v] : subst) s.emplace(k, v);
    return HD::axiom(std::string(scheme), std::move(s));
}

HD mp(const HD& a, const HD& ab) { return HD::rule("5", {a, ab}); }
HD af(const HD& a, const Formula& b) { return HD::rule("6", {a}, b); }
HD trans(const HD& ab, const HD& bc) { return HD::rule("9", {ab, bc}); }
HD pair_right(const HD& ab, const HD& ac) { return HD::rule("10", {ab, ac}); }
HD cases_left(const HD& ac, const HD& bc) { return HD::rule("11", {ac, bc}); }
HD conj(const HD& a, const HD& b) { return HD::rule("12", {a, b}); }

std::optional<HD> lattice(const Formula& p, const Formula& q) {
    const Formula top = Formula::top();
    if (p == q) return id(p);
    if (q == top) return af(ax("14", {{"A", Formula::bottom()}}), p);
    if (p.is_bottom()) return ax("14", {{"A", q}});
    if (p.is_or()) {
        auto l = lattice(p.left(), q);
        if (!l) return std::nullopt;
        auto r = lattice(p.right(), q);
        if (!r) return std::nullopt;
        return cases_left(*l, *r);
    }
    if (q.is_and()) {
        auto l = lattice(p, q.left());
        if (!l) return std::nullopt;
        auto r = lattice(p, q.right());
        if (!r) return std::nullopt;
        return pair_right(*l, *r);
    }
    const Formulas ls = conjuncts(p);
    const Formulas ms = disjuncts(q);
    if (contains(ls, Formula::bottom())) return compose(project(p, Formula::bottom()), ax("14", {{"A", q}}));
    if (contains(ls, q)) return project(p, q);
    if (contains(ms, p)) return inject(p, q);
    for (const auto& l : ls) {
        if (contains(ms, l)) return compose(project(p, l), inject(l, q));
    }
    if (contains(ms, top)) return compose(*lattice(p, top), inject(top, q));
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (!ls[i].is_or()) continue;
        const Formula& l = ls[i];
        const Formula rest = fold_conj(without_one(ls, i));
        auto regroup = lattice(p, Formula::conj(rest, l));
        if (!regroup) return std::nullopt;
        auto tail = lattice(Formula::disj(Formula::conj(rest, l.left()), Formula::conj(rest, l.right())), q);
        if (!tail) return std::nullopt;
        return compose(*regroup, trans(ax("7", {{"A", rest}, {"B", l.left()}, {"C", l.right()}}), *tail));
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (!ms[i].is_and()) continue;
        const Formula& m = ms[i];
        const Formula rest = fold_disj(without_one(ms, i));
        auto split = lattice(p, Formula::conj(Formula::disj(rest, m.left()), Formula::disj(rest, m.right())));
        if (!split) return std::nullopt;
        auto tail = lattice(Formula::disj(rest, m), q);
        if (!tail) return std::nullopt;
        return compose(*split, compose(distribute_join(rest, m.left(), m.right()), *tail));
    }
    return std::nullopt;
}

HD lattice_or_throw(const Formula& p, const Formula& q) {
    auto d = lattice(p, q);
    if (!d) throw Error("no lattice proof of " + print(p) + " -> " + print(q));
    return *d;
}

}  // namespace subint::tactics
