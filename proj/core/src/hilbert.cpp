#include "subint/hilbert.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "subint/error.hpp"

namespace subint {

namespace {

struct HilbertInfo {
    HilbertSystemId id;
    std::string_view name;
    SystemId sequent;
    std::vector<std::string> extensions;
};

const std::vector<HilbertInfo>& hilbert_registry() {
    static const std::vector<HilbertInfo> table = {
        {HilbertSystemId::WF, "WF", SystemId::GWF, {}},
        {HilbertSystemId::WF_N, "WF_N", SystemId::GWF_N, {"N"}},
        {HilbertSystemId::WF_N2, "WF_N2", SystemId::GWF_N2, {"N2"}},
        {HilbertSystemId::WFChat, "WFChat", SystemId::GWFChat, {"Chat"}},
        {HilbertSystemId::WFDhat, "WFDhat", SystemId::GWFDhat, {"Dhat"}},
        {HilbertSystemId::WFI, "WFI", SystemId::GWFI, {"I"}},
        {HilbertSystemId::WFC, "WFC", SystemId::GWFC, {"C"}},
        {HilbertSystemId::WFD, "WFD", SystemId::GWFD, {"D"}},
        {HilbertSystemId::WFCI, "WFCI", SystemId::GWFCI, {"C", "I"}},
        {HilbertSystemId::WFDI, "WFDI", SystemId::GWFDI, {"D", "I"}},
        {HilbertSystemId::F, "F", SystemId::GF, {"C", "D", "I"}},
    };
    return table;
}

const HilbertInfo& hinfo(HilbertSystemId h) {
    for (const auto& i : hilbert_registry()) {
        if (i.id == h) return i;
    }
    throw Error("unknown Hilbert system");
}

const std::map<std::string, std::string, std::less<>>& scheme_table() {
    static const std::map<std::string, std::string, std::less<>> table = {
        {"1", "A -> A | B"},
        {"2", "B -> A | B"},
        {"3", "A & B -> A"},
        {"4", "A & B -> B"},
        {"7", "A & (B | C) -> (A & B) | (A & C)"},
        {"8", "A -> A"},
        {"14", "false -> A"},
        {"I", "(A -> B) & (B -> C) -> (A -> C)"},
        {"C", "(A -> B) & (A -> C) -> (A -> B & C)"},
        {"D", "(A -> C) & (B -> C) -> (A | B -> C)"},
        {"Chat", "(A -> B & C) -> (A -> B) & (A -> C)"},
        {"Dhat", "(A | B -> C) -> (A -> C) & (B -> C)"},
    };
    return table;
}

const std::map<std::string, std::size_t, std::less<>>& rule_arity() {
    static const std::map<std::string, std::size_t, std::less<>> table = {
        {"5", 2}, {"6", 1}, {"9", 2}, {"10", 2}, {"11", 2}, {"12", 2}, {"13", 2}, {"N", 4}, {"N2", 2},
    };
    return table;
}

bool is_extension_label(std::string_view name) {
    return name == "I" || name == "C" || name == "D" || name == "Chat" || name == "Dhat" || name == "N" ||
           name == "N2";
}

Formula substitute(const Formula& f, const Substitution& subst) {
    switch (f.kind()) {
    case Connective::Bottom:
        return f;
    case Connective::Atom: {
        auto it = subst.find(f.name());
        if (it == subst.end()) throw Error("substitution misses letter " + f.name());
        return it->second;
    }
    case Connective::And:
        return Formula::conj(substitute(f.left(), subst), substitute(f.right(), subst));
    case Connective::Or:
        return Formula::disj(substitute(f.left(), subst), substitute(f.right(), subst));
    case Connective::Imp:
        return Formula::imp(substitute(f.left(), subst), substitute(f.right(), subst));
    }
    throw Error("unreachable formula kind");
}

[[noreturn]] void shape_error(std::string_view rule, const Formula& f, std::string_view expected) {
    throw Error("rule " + std::string(rule) + ": premise " + print(f) + " is not of the form " +
                std::string(expected));
}

const Formula& expect_imp(std::string_view rule, const Formula& f, std::string_view expected) {
    if (!f.is_imp()) shape_error(rule, f, expected);
    return f;
}

std::pair<Formula, Formula> expect_iff(std::string_view rule, const Formula& f) {
    if (f.is_and() && f.left().is_imp() && f.right().is_imp() && f.left().left() == f.right().right() &&
        f.left().right() == f.right().left()) {
        return {f.left().left(), f.left().right()};
    }
    shape_error(rule, f, "(X -> Y) & (Y -> X)");
}

}  // namespace

std::string_view hilbert_system_name(HilbertSystemId h) { return hinfo(h).name; }

std::optional<HilbertSystemId> hilbert_system_from_name(std::string_view name) {
    for (const auto& i : hilbert_registry()) {
        if (i.name == name) return i.id;
    }
    if (name == "WFCDI" || name == "WF_N2C") return HilbertSystemId::F;
    return std::nullopt;
}

const std::vector<HilbertSystemId>& all_hilbert_systems() {
    static const std::vector<HilbertSystemId> ids = [] {
        std::vector<HilbertSystemId> out;
        for (const auto& i : hilbert_registry()) out.push_back(i.id);
        return out;
    }();
    return ids;
}

const std::vector<std::string>& extensions(HilbertSystemId h) { return hinfo(h).extensions; }

bool has_extension(HilbertSystemId h, std::string_view label) {
    const auto& ext = hinfo(h).extensions;
    return std::find(ext.begin(), ext.end(), label) != ext.end();
}

HilbertSystemId alias(SystemId s) {
    for (const auto& i : hilbert_registry()) {
        if (i.sequent == s) return i.id;
    }
    throw Error("no Hilbert alias");
}

SystemId alias(HilbertSystemId h) { return hinfo(h).sequent; }

bool is_axiom_scheme(std::string_view name) { return scheme_table().count(name) > 0; }

bool is_hilbert_rule(std::string_view name) { return rule_arity().count(name) > 0; }

std::vector<std::string> scheme_letters(std::string_view scheme) {
    auto it = scheme_table().find(scheme);
    if (it == scheme_table().end()) throw Error("unknown axiom scheme " + std::string(scheme));
    return atoms(parse(it->second));
}

Formula instantiate_scheme(std::string_view scheme, const Substitution& subst) {
    auto it = scheme_table().find(scheme);
    if (it == scheme_table().end()) throw Error("unknown axiom scheme " + std::string(scheme));
    static const std::map<std::string, Formula, std::less<>> parsed = [] {
        std::map<std::string, Formula, std::less<>> out;
        for (const auto& [k, text] : scheme_table()) out.emplace(k, parse(text));
        return out;
    }();
    return substitute(parsed.find(scheme)->second, subst);
}

Formula rule_conclusion(std::string_view rule, const std::vector<Formula>& premises,
                        const std::optional<Formula>& antecedent) {
    auto ar = rule_arity().find(rule);
    if (ar == rule_arity().end()) throw Error("unknown Hilbert rule " + std::string(rule));
    if (premises.size() != ar->second) {
        throw Error("rule " + std::string(rule) + " takes " + std::to_string(ar->second) + " premises, got " +
                    std::to_string(premises.size()));
    }
    const auto& p = premises;
    if (rule == "5") {
        const Formula& ab = expect_imp(rule, p[1], "A -> B");
        if (ab.left() != p[0]) throw Error("rule 5: minor premise " + print(p[0]) + " does not match " + print(ab));
        return ab.right();
    }
    if (rule == "6") {
        if (!antecedent) throw Error("rule 6 needs the new antecedent");
        return Formula::imp(*antecedent, p[0]);
    }
    if (rule == "9") {
        expect_imp(rule, p[0], "A -> B");
        expect_imp(rule, p[1], "B -> C");
        if (p[0].right() != p[1].left()) throw Error("rule 9: middle formulas differ");
        return Formula::imp(p[0].left(), p[1].right());
    }
    if (rule == "10") {
        expect_imp(rule, p[0], "A -> B");
        expect_imp(rule, p[1], "A -> C");
        if (p[0].left() != p[1].left()) throw Error("rule 10: antecedents differ");
        return Formula::imp(p[0].left(), Formula::conj(p[0].right(), p[1].right()));
    }
    if (rule == "11") {
        expect_imp(rule, p[0], "A -> C");
        expect_imp(rule, p[1], "B -> C");
        if (p[0].right() != p[1].right()) throw Error("rule 11: consequents differ");
        return Formula::imp(Formula::disj(p[0].left(), p[1].left()), p[0].right());
    }
    if (rule == "12") return Formula::conj(p[0], p[1]);
    if (rule == "13") {
        auto [a, b] = expect_iff(rule, p[0]);
        auto [c, d] = expect_iff(rule, p[1]);
        return Formula::iff(Formula::imp(a, c), Formula::imp(b, d));
    }
    if (rule == "N") {
        expect_imp(rule, p[0], "A -> B | C");
        if (!p[0].right().is_or()) shape_error(rule, p[0], "A -> B | C");
        expect_imp(rule, p[1], "C -> A | D");
        if (!p[1].right().is_or()) shape_error(rule, p[1], "C -> A | D");
        const Formula a = p[0].left();
        const Formula b = p[0].right().left();
        const Formula c = p[0].right().right();
        const Formula d = p[1].right().right();
        if (p[1] != Formula::imp(c, Formula::disj(a, d))) shape_error(rule, p[1], "C -> A | D");
        if (p[2] != Formula::imp(Formula::conj(a, d), b)) shape_error(rule, p[2], "A & D -> B");
        if (p[3] != Formula::imp(Formula::conj(c, b), d)) shape_error(rule, p[3], "C & B -> D");
        return Formula::iff(Formula::imp(a, b), Formula::imp(c, d));
    }
    expect_imp(rule, p[0], "C -> A | D");
    if (!p[0].right().is_or()) shape_error(rule, p[0], "C -> A | D");
    expect_imp(rule, p[1], "C & B -> D");
    if (!p[1].left().is_and()) shape_error(rule, p[1], "C & B -> D");
    const Formula c = p[0].left();
    const Formula a = p[0].right().left();
    const Formula d = p[0].right().right();
    const Formula b = p[1].left().right();
    if (p[1] != Formula::imp(Formula::conj(c, b), d)) shape_error(rule, p[1], "C & B -> D");
    return Formula::imp(Formula::imp(a, b), Formula::imp(c, d));
}

struct HilbertDerivation::Node {
    Justification by;
    std::string name;
    Formula conclusion;
    Substitution subst;
    std::vector<HilbertDerivation> premises;
    std::size_t size;
    bool assumptions;
};

HilbertDerivation::HilbertDerivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

HilbertDerivation HilbertDerivation::make(Justification by, std::string name, Formula conclusion, Substitution subst,
                                          std::vector<HilbertDerivation> premises) {
    std::size_t size = 1;
    bool assumptions = by == Justification::Assumption;
    for (const auto& p : premises) {
        size += p.size();
        assumptions = assumptions || p.has_assumptions();
    }
    return HilbertDerivation(std::make_shared<const Node>(Node{by, std::move(name), std::move(conclusion),
                                                               std::move(subst), std::move(premises), size,
                                                               assumptions}));
}

HilbertDerivation HilbertDerivation::axiom(std::string scheme, Substitution subst) {
    for (const auto& letter : scheme_letters(scheme)) {
        if (!subst.count(letter)) throw Error("axiom " + scheme + " needs letter " + letter);
    }
    if (subst.size() != scheme_letters(scheme).size()) throw Error("axiom " + scheme + ": extra letters");
    Formula c = instantiate_scheme(scheme, subst);
    return make(Justification::Axiom, std::move(scheme), std::move(c), std::move(subst), {});
}

HilbertDerivation HilbertDerivation::rule(std::string name, std::vector<HilbertDerivation> premises,
                                          const std::optional<Formula>& antecedent) {
    std::vector<Formula> cs;
    for (const auto& p : premises) cs.push_back(p.conclusion());
    Formula c = rule_conclusion(name, cs, antecedent);
    return make(Justification::Rule, std::move(name), std::move(c), {}, std::move(premises));
}

HilbertDerivation HilbertDerivation::assumption(Formula f) {
    return make(Justification::Assumption, "", std::move(f), {}, {});
}

Justification HilbertDerivation::by() const noexcept { return node_->by; }
const std::string& HilbertDerivation::name() const noexcept { return node_->name; }
const Formula& HilbertDerivation::conclusion() const noexcept { return node_->conclusion; }
const Substitution& HilbertDerivation::substitution() const noexcept { return node_->subst; }
const std::vector<HilbertDerivation>& HilbertDerivation::premises() const noexcept { return node_->premises; }

const HilbertDerivation& HilbertDerivation::premise(std::size_t i) const {
    if (i >= node_->premises.size()) throw Error("premise index out of range");
    return node_->premises[i];
}

std::size_t HilbertDerivation::size() const noexcept { return node_->size; }
bool HilbertDerivation::has_assumptions() const noexcept { return node_->assumptions; }

namespace {

class HilbertChecker {
public:
    HilbertChecker(HilbertSystemId system, HilbertMode mode, const std::optional<Formulas>& assumptions)
        : system_(system), mode_(mode), assumptions_(assumptions) {}

    bool walk(const HilbertDerivation& d, std::vector<std::size_t>& path, CheckReport& report) {
        ++report.nodes_checked;
        if (auto failure = check_node(d)) {
            report.accepted = false;
            report.path = path;
            report.reason = *failure;
            return false;
        }
        for (std::size_t i = 0; i < d.premises().size(); ++i) {
            path.push_back(i);
            if (!walk(d.premises()[i], path, report)) return false;
            path.pop_back();
        }
        return true;
    }

private:
    HilbertSystemId system_;
    HilbertMode mode_;
    const std::optional<Formulas>& assumptions_;

    std::optional<std::string> check_node(const HilbertDerivation& d) const {
        const std::string& name = d.name();
        switch (d.by()) {
        case Justification::Assumption:
            if (mode_ == HilbertMode::Theorem) return "assumption " + print(d.conclusion()) + " in theorem mode";
            if (!d.premises().empty()) return std::string("assumption with premises");
            if (assumptions_ && !contains(*assumptions_, d.conclusion())) {
                return "formula " + print(d.conclusion()) + " is not among the assumptions";
            }
            return std::nullopt;
        case Justification::Axiom: {
            if (!is_axiom_scheme(name)) return "unknown axiom scheme " + name;
            if (is_extension_label(name) && !has_extension(system_, name)) {
                return "axiom " + name + " is not available in " + std::string(hilbert_system_name(system_));
            }
            if (!d.premises().empty()) return std::string("axiom with premises");
            const auto letters = scheme_letters(name);
            if (d.substitution().size() != letters.size()) return "axiom " + name + ": substitution has wrong letters";
            for (const auto& l : letters) {
                if (!d.substitution().count(l)) return "axiom " + name + ": substitution misses " + l;
            }
            Formula expected = instantiate_scheme(name, d.substitution());
            if (expected != d.conclusion()) {
                return "axiom " + name + " instance is " + print(expected) + ", node states " + print(d.conclusion());
            }
            return std::nullopt;
        }
        case Justification::Rule: {
            if (!is_hilbert_rule(name)) return "unknown rule " + name;
            if (is_extension_label(name) && !has_extension(system_, name)) {
                return "rule " + name + " is not available in " + std::string(hilbert_system_name(system_));
            }
            std::vector<Formula> cs;
            for (const auto& p : d.premises()) cs.push_back(p.conclusion());
            std::optional<Formula> antecedent;
            if (name == "6" && d.conclusion().is_imp()) antecedent = d.conclusion().left();
            Formula expected;
            try {
                expected = rule_conclusion(name, cs, antecedent);
            } catch (const Error& e) {
                return std::string(e.what());
            }
            if (expected != d.conclusion()) {
                return "rule " + name + " yields " + print(expected) + ", node states " + print(d.conclusion());
            }
            if (mode_ == HilbertMode::FromAssumptions) {
                if (name == "5") {
                    if (d.premise(1).has_assumptions()) return std::string("rule 5 needs an assumption-free major premise");
                } else if (name != "12") {
                    for (const auto& p : d.premises()) {
                        if (p.has_assumptions()) return "rule " + name + " applied to a premise with assumptions";
                    }
                }
            }
            return std::nullopt;
        }
        }
        return std::string("unknown justification");
    }
};

}  // namespace

CheckReport check_hilbert(HilbertSystemId system, const HilbertDerivation& d, HilbertMode mode,
                          const std::optional<Formulas>& assumptions) {
    CheckReport report;
    std::vector<std::size_t> path;
    HilbertChecker(system, mode, assumptions).walk(d, path, report);
    return report;
}

namespace {

HilbertDerivation deduce(const HilbertDerivation& d, const Formula& g) {
    using namespace tactics;
    if (d.conclusion() == g) return ax("8", {{"A", g}});
    if (!d.has_assumptions()) return af(d, g);
    if (d.by() == Justification::Assumption) return lattice_or_throw(g, d.conclusion());
    if (d.name() == "12") return pair_right(deduce(d.premise(0), g), deduce(d.premise(1), g));
    if (d.name() == "5") return trans(deduce(d.premise(0), g), d.premise(1));
    throw Error("rule " + d.name() + " over assumptions");
}

}  // namespace

HilbertDerivation weak_deduction(HilbertSystemId system, const HilbertDerivation& d, const Formulas& assumptions) {
    if (assumptions.empty()) throw Error("weak deduction needs at least one assumption");
    CheckReport r = check_hilbert(system, d, HilbertMode::FromAssumptions, assumptions);
    if (!r) throw Error("invalid assumption-mode derivation: " + r.describe());
    return deduce(d, fold_conj(assumptions));
}

HilbertDerivation reattach_assumptions(const HilbertDerivation& d, const Formulas& assumptions) {
    if (assumptions.empty()) throw Error("no assumptions to reattach");
    if (d.has_assumptions()) throw Error("expected a theorem-mode derivation");
    HilbertDerivation acc = HilbertDerivation::assumption(assumptions.back());
    for (std::size_t i = assumptions.size() - 1; i-- > 0;) {
        acc = tactics::conj(HilbertDerivation::assumption(assumptions[i]), acc);
    }
    return tactics::mp(acc, d);
}

}  // namespace subint
