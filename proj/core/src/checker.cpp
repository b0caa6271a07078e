#include <optional>
#include <string>

#include "subint/calculus.hpp"

namespace subint {

namespace {

struct Failure {
    std::string reason;
    std::string expected;
    std::string actual;
};

using Result = std::optional<Failure>;

std::size_t arity(Rule r) {
    switch (r) {
    case Rule::Ax:
    case Rule::BotL: return 0;
    case Rule::AndL:
    case Rule::OrR:
    case Rule::OrR1:
    case Rule::OrR2:
    case Rule::ImpR:
    case Rule::ImpChat:
    case Rule::ImpDhat: return 1;
    case Rule::ImpLR:
    case Rule::ImpLR_N: return 4;
    default: return 2;
    }
}

bool needs_left(Rule r) {
    switch (r) {
    case Rule::Ax:
    case Rule::BotL:
    case Rule::AndL:
    case Rule::OrL:
    case Rule::ImpLR:
    case Rule::ImpLR_N:
    case Rule::ImpLR_N2:
    case Rule::ImpChat:
    case Rule::ImpDhat: return true;
    default: return false;
    }
}

bool needs_right(Rule r) {
    switch (r) {
    case Rule::BotL:
    case Rule::AndL:
    case Rule::OrL:
    case Rule::Cut: return false;
    default: return true;
    }
}

class NodeChecker {
public:
    NodeChecker(SystemId system, const Derivation& d) : system_(system), d_(d), s_(d.conclusion()) {}

    Result run() {
        const Rule r = d_.rule();
        if (!has_rule(system_, r)) {
            return Failure{"rule " + std::string(rule_name(r)) + " is not in " + std::string(system_name(system_)),
                           "", ""};
        }
        if (!respects(s_, discipline(system_))) {
            return Failure{"single-succedent discipline violated", "exactly one succedent formula", print(s_)};
        }
        if (d_.premises().size() != arity(r)) {
            return Failure{"wrong number of premises", std::to_string(arity(r)),
                           std::to_string(d_.premises().size())};
        }
        const auto& p = d_.principal();
        if (needs_left(r) && (!p.left || *p.left >= s_.ant.size())) {
            return Failure{"missing or out-of-range left principal position", "", print(s_)};
        }
        if (needs_right(r) && (!p.right || *p.right >= s_.suc.size())) {
            return Failure{"missing or out-of-range right principal position", "", print(s_)};
        }
        if (r != Rule::Cut && d_.cut_formula()) return Failure{"cut formula on a non-cut node", "", ""};
        if (needs_left(r)) {
            lp_ = s_.ant[*p.left];
            gamma_ = remove_at(s_.ant, *p.left);
        } else {
            gamma_ = s_.ant;
        }
        if (needs_right(r)) {
            rp_ = s_.suc[*p.right];
            delta_ = remove_at(s_.suc, *p.right);
        } else {
            delta_ = s_.suc;
        }
        return schema(r);
    }

private:
    SystemId system_;
    const Derivation& d_;
    const Sequent& s_;
    Formula lp_;
    Formula rp_;
    Formulas gamma_;
    Formulas delta_;

    static Failure shape(const std::string& what, const Formula& f) {
        return Failure{"principal formula has the wrong shape", what, print(f)};
    }

    Result premise(std::size_t i, const Sequent& expected) const {
        const Sequent& actual = d_.premise(i).conclusion();
        if (actual == expected) return std::nullopt;
        return Failure{"premise " + std::to_string(i) + " does not match the rule schema", print(expected),
                       print(actual)};
    }

    Result premises(const std::vector<Sequent>& expected) const {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (auto f = premise(i, expected[i])) return f;
        }
        return std::nullopt;
    }

    Result schema(Rule r) {
        switch (r) {
        case Rule::Ax:
            if (!lp_.is_atom()) return shape("atom", lp_);
            if (!(lp_ == rp_)) return Failure{"axiom sides differ", print(lp_), print(rp_)};
            return std::nullopt;
        case Rule::BotL:
            if (!lp_.is_bottom()) return shape("false", lp_);
            return std::nullopt;
        case Rule::AndL:
            if (!lp_.is_and()) return shape("A & B", lp_);
            return premise(0, {concat({lp_.left(), lp_.right()}, gamma_), delta_});
        case Rule::AndR:
            if (!rp_.is_and()) return shape("A & B", rp_);
            return premises({{gamma_, with(delta_, rp_.left())}, {gamma_, with(delta_, rp_.right())}});
        case Rule::OrL:
            if (!lp_.is_or()) return shape("A | B", lp_);
            return premises({{with(gamma_, lp_.left()), delta_}, {with(gamma_, lp_.right()), delta_}});
        case Rule::OrR:
            if (!rp_.is_or()) return shape("A | B", rp_);
            return premise(0, {gamma_, concat(delta_, {rp_.left(), rp_.right()})});
        case Rule::OrR1:
            if (!rp_.is_or()) return shape("A | B", rp_);
            return premise(0, {gamma_, with(delta_, rp_.left())});
        case Rule::OrR2:
            if (!rp_.is_or()) return shape("A | B", rp_);
            return premise(0, {gamma_, with(delta_, rp_.right())});
        case Rule::ImpR:
            if (!rp_.is_imp()) return shape("A -> B", rp_);
            return premise(0, {{rp_.left()}, {rp_.right()}});
        case Rule::ImpLR: {
            if (!lp_.is_imp()) return shape("A -> C", lp_);
            if (!rp_.is_imp()) return shape("B -> D", rp_);
            const Formula &a = lp_.left(), &c = lp_.right(), &b = rp_.left(), &dd = rp_.right();
            return premises({{{a}, {b}}, {{b}, {a}}, {{c}, {dd}}, {{dd}, {c}}});
        }
        case Rule::ImpLR_N:
        case Rule::ImpLR_N2: {
            if (!lp_.is_imp()) return shape("C -> D", lp_);
            if (!rp_.is_imp()) return shape("A -> B", rp_);
            const Formula &c = lp_.left(), &dd = lp_.right(), &a = rp_.left(), &b = rp_.right();
            std::vector<Sequent> ps{{{a}, {c, b}}, {{a, dd}, {b}}};
            if (r == Rule::ImpLR_N) {
                ps.push_back({{c}, {a, dd}});
                ps.push_back({{c, b}, {dd}});
            }
            return premises(ps);
        }
        case Rule::ImpChat: {
            if (!lp_.is_imp()) return shape("C -> A", lp_);
            if (!rp_.is_imp()) return shape("C -> B", rp_);
            if (!(lp_.left() == rp_.left())) {
                return Failure{"antecedents of the two implications differ", print(lp_.left()), print(rp_.left())};
            }
            return premise(0, {{lp_.right()}, {rp_.right()}});
        }
        case Rule::ImpDhat: {
            if (!lp_.is_imp()) return shape("B -> C", lp_);
            if (!rp_.is_imp()) return shape("A -> C", rp_);
            if (!(lp_.right() == rp_.right())) {
                return Failure{"consequents of the two implications differ", print(lp_.right()), print(rp_.right())};
            }
            return premise(0, {{rp_.left()}, {lp_.left()}});
        }
        case Rule::ImpI: {
            if (!rp_.is_imp()) return shape("B -> D", rp_);
            const auto& s0 = d_.premise(0).conclusion();
            if (s0.suc.size() != 1 || !s0.suc[0].is_imp() || !(s0.suc[0].left() == rp_.left())) {
                return Failure{"premise 0 must conclude B -> C", print(rp_.left()) + " -> C", print(s0)};
            }
            const Formula& mid = s0.suc[0].right();
            return premises({{gamma_, {Formula::imp(rp_.left(), mid)}}, {gamma_, {Formula::imp(mid, rp_.right())}}});
        }
        case Rule::ImpC:
            if (!rp_.is_imp() || !rp_.right().is_and()) return shape("B -> C & D", rp_);
            return premises({{gamma_, {Formula::imp(rp_.left(), rp_.right().left())}},
                             {gamma_, {Formula::imp(rp_.left(), rp_.right().right())}}});
        case Rule::ImpD:
            if (!rp_.is_imp() || !rp_.left().is_or()) return shape("B | D -> C", rp_);
            return premises({{gamma_, {Formula::imp(rp_.left().left(), rp_.right())}},
                             {gamma_, {Formula::imp(rp_.left().right(), rp_.right())}}});
        case Rule::Cut: {
            if (!d_.cut_formula()) return Failure{"cut node without cut formula", "", ""};
            const Formula& c = *d_.cut_formula();
            const auto& l = d_.premise(0).conclusion();
            const auto& rr = d_.premise(1).conclusion();
            if (!contains(l.suc, c)) return Failure{"left premise lacks the cut formula", print(c), print(l)};
            if (!contains(rr.ant, c)) return Failure{"right premise lacks the cut formula", print(c), print(rr)};
            Sequent expected{concat(l.ant, remove_one(rr.ant, c)), concat(remove_one(l.suc, c), rr.suc)};
            if (!(expected == s_)) return Failure{"cut conclusion does not compose its premises", print(expected),
                                                  print(s_)};
            return std::nullopt;
        }
        }
        return Failure{"unknown rule", "", ""};
    }
};

bool walk(SystemId system, const Derivation& d, std::vector<std::size_t>& path, CheckReport& report) {
    ++report.nodes_checked;
    if (auto f = NodeChecker(system, d).run()) {
        report.accepted = false;
        report.path = path;
        report.reason = std::string(rule_name(d.rule())) + ": " + f->reason;
        report.expected = f->expected;
        report.actual = f->actual;
        return false;
    }
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
        path.push_back(i);
        if (!walk(system, d.premise(i), path, report)) return false;
        path.pop_back();
    }
    return true;
}

}  // namespace

CheckReport check(SystemId system, const Derivation& d) {
    CheckReport report;
    std::vector<std::size_t> path;
    walk(system, d, path, report);
    return report;
}

}  // namespace subint
