#include "subint/calculus.hpp"

#include <algorithm>
#include <array>

#include "subint/error.hpp"

namespace subint {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 18> kRuleNames{{
    {Rule::Ax, "Ax"},
    {Rule::BotL, "BotL"},
    {Rule::AndL, "AndL"},
    {Rule::AndR, "AndR"},
    {Rule::OrL, "OrL"},
    {Rule::OrR, "OrR"},
    {Rule::OrR1, "OrR1"},
    {Rule::OrR2, "OrR2"},
    {Rule::ImpR, "ImpR"},
    {Rule::ImpLR, "ImpLR"},
    {Rule::ImpLR_N, "ImpLR_N"},
    {Rule::ImpLR_N2, "ImpLR_N2"},
    {Rule::ImpChat, "ImpChat"},
    {Rule::ImpDhat, "ImpDhat"},
    {Rule::ImpI, "ImpI"},
    {Rule::ImpC, "ImpC"},
    {Rule::ImpD, "ImpD"},
    {Rule::Cut, "Cut"},
}};

std::vector<Rule> multi_base(Rule implication) {
    return {Rule::Ax, Rule::BotL, Rule::AndL, Rule::AndR, Rule::OrL, Rule::OrR, Rule::ImpR, implication};
}

std::vector<Rule> single_base() {
    return {Rule::Ax, Rule::BotL, Rule::AndL, Rule::AndR, Rule::OrL, Rule::OrR1, Rule::OrR2, Rule::ImpR, Rule::ImpLR};
}

std::vector<Rule> plus(std::vector<Rule> base, std::initializer_list<Rule> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

std::vector<SystemInfo> make_registry() {
    using D = Discipline;
    return {
        {SystemId::GWF, "GWF", D::Multi, multi_base(Rule::ImpLR), false},
        {SystemId::GWF_N, "GWF_N", D::Multi, multi_base(Rule::ImpLR_N), false},
        {SystemId::GWF_N2, "GWF_N2", D::Multi, multi_base(Rule::ImpLR_N2), false},
        {SystemId::GWFChat, "GWFChat", D::Multi, plus(multi_base(Rule::ImpLR), {Rule::ImpChat, Rule::Cut}), true},
        {SystemId::GWFDhat, "GWFDhat", D::Multi, plus(multi_base(Rule::ImpLR), {Rule::ImpDhat, Rule::Cut}), true},
        {SystemId::GWFI, "GWFI", D::Single, plus(single_base(), {Rule::ImpI}), false},
        {SystemId::GWFC, "GWFC", D::Single, plus(single_base(), {Rule::ImpC, Rule::Cut}), true},
        {SystemId::GWFD, "GWFD", D::Single, plus(single_base(), {Rule::ImpD, Rule::Cut}), true},
        {SystemId::GWFCI, "GWFCI", D::Single, plus(single_base(), {Rule::ImpI, Rule::ImpC}), false},
        {SystemId::GWFDI, "GWFDI", D::Single, plus(single_base(), {Rule::ImpI, Rule::ImpD}), false},
        {SystemId::GF, "GF", D::Single, plus(single_base(), {Rule::ImpI, Rule::ImpC, Rule::ImpD}), false},
    };
}

const std::vector<SystemInfo>& registry() {
    static const std::vector<SystemInfo> r = make_registry();
    return r;
}

}  // namespace

std::string_view rule_name(Rule r) {
    for (const auto& [rule, name] : kRuleNames) {
        if (rule == r) return name;
    }
    return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
    for (const auto& [rule, n] : kRuleNames) {
        if (n == name) return rule;
    }
    return std::nullopt;
}

const SystemInfo& info(SystemId s) { return registry().at(static_cast<std::size_t>(s)); }

std::string_view system_name(SystemId s) { return info(s).name; }

std::optional<SystemId> system_from_name(std::string_view name) {
    for (const auto& i : registry()) {
        if (i.name == name) return i.id;
    }
    return std::nullopt;
}

const std::vector<SystemId>& all_systems() {
    static const std::vector<SystemId> all = [] {
        std::vector<SystemId> v;
        for (const auto& i : registry()) v.push_back(i.id);
        return v;
    }();
    return all;
}

bool has_rule(SystemId s, Rule r) {
    const auto& rules = info(s).rules;
    return std::find(rules.begin(), rules.end(), r) != rules.end();
}

Discipline discipline(SystemId s) { return info(s).discipline; }

bool cut_free(SystemId s) { return !info(s).cut_primitive; }

bool bare_premises(Rule r) {
    switch (r) {
    case Rule::ImpR:
    case Rule::ImpLR:
    case Rule::ImpLR_N:
    case Rule::ImpLR_N2:
    case Rule::ImpChat:
    case Rule::ImpDhat: return true;
    default: return false;
    }
}

bool context_sharing(Rule r) {
    switch (r) {
    case Rule::AndL:
    case Rule::AndR:
    case Rule::OrL:
    case Rule::OrR:
    case Rule::OrR1:
    case Rule::OrR2:
    case Rule::ImpI:
    case Rule::ImpC:
    case Rule::ImpD: return true;
    default: return false;
    }
}

struct Derivation::Node {
    Rule rule;
    Sequent conclusion;
    Principal principal;
    std::vector<Derivation> premises;
    std::optional<Formula> cut;
    std::size_t height = 0;
    std::size_t size = 1;
    std::size_t cuts = 0;
};

Derivation::Derivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Derivation Derivation::make(Rule rule, Sequent conclusion, Principal principal, std::vector<Derivation> premises,
                            std::optional<Formula> cut) {
    auto n = std::make_shared<Node>();
    n->rule = rule;
    n->conclusion = std::move(conclusion);
    n->principal = principal;
    n->cut = std::move(cut);
    std::size_t h = 0;
    for (const auto& p : premises) {
        h = std::max(h, p.height() + 1);
        n->size += p.size();
        n->cuts += p.cut_count();
    }
    if (rule == Rule::Cut) ++n->cuts;
    n->height = premises.empty() ? 0 : h;
    n->premises = std::move(premises);
    return Derivation(std::move(n));
}

namespace {

std::optional<std::size_t> locate(const Formulas& xs, const std::optional<Formula>& f, const Sequent& s) {
    if (!f) return std::nullopt;
    auto it = std::find(xs.begin(), xs.end(), *f);
    if (it == xs.end()) throw Error("principal formula " + print(*f) + " not found in " + print(s));
    return static_cast<std::size_t>(it - xs.begin());
}

}  // namespace

Derivation Derivation::build(Rule rule, Sequent conclusion, std::optional<Formula> left_principal,
                             std::optional<Formula> right_principal, std::vector<Derivation> premises,
                             std::optional<Formula> cut) {
    Principal p{locate(conclusion.ant, left_principal, conclusion), locate(conclusion.suc, right_principal, conclusion)};
    return make(rule, std::move(conclusion), p, std::move(premises), std::move(cut));
}

Rule Derivation::rule() const noexcept { return node_->rule; }
const Sequent& Derivation::conclusion() const noexcept { return node_->conclusion; }
const Principal& Derivation::principal() const noexcept { return node_->principal; }
const std::vector<Derivation>& Derivation::premises() const noexcept { return node_->premises; }
const std::optional<Formula>& Derivation::cut_formula() const noexcept { return node_->cut; }
std::size_t Derivation::height() const noexcept { return node_->height; }
std::size_t Derivation::size() const noexcept { return node_->size; }
std::size_t Derivation::cut_count() const noexcept { return node_->cuts; }

const Derivation& Derivation::premise(std::size_t i) const {
    if (i >= node_->premises.size()) throw Error("premise index out of range");
    return node_->premises[i];
}

std::optional<Formula> Derivation::left_principal() const {
    const auto& p = node_->principal.left;
    if (!p || *p >= node_->conclusion.ant.size()) return std::nullopt;
    return node_->conclusion.ant[*p];
}

std::optional<Formula> Derivation::right_principal() const {
    const auto& p = node_->principal.right;
    if (!p || *p >= node_->conclusion.suc.size()) return std::nullopt;
    return node_->conclusion.suc[*p];
}

Derivation Derivation::with_conclusion(Sequent conclusion) const {
    return build(rule(), std::move(conclusion), left_principal(), right_principal(), premises(), cut_formula());
}

Derivation Derivation::with_premises(std::vector<Derivation> premises) const {
    return make(rule(), conclusion(), principal(), std::move(premises), cut_formula());
}

std::size_t height(const Derivation& d) noexcept { return d.height(); }

std::string CheckReport::describe() const {
    if (accepted) return "accepted (" + std::to_string(nodes_checked) + " nodes)";
    std::string p = "root";
    for (auto i : path) p += "." + std::to_string(i);
    std::string out = "rejected at " + p + ": " + reason;
    if (!expected.empty()) out += "\n  expected: " + expected;
    if (!actual.empty()) out += "\n  actual:   " + actual;
    return out;
}

namespace {

Derivation identity(const Formula& c, const Formulas& gamma, const Formulas& delta, SystemId system) {
    const bool single = discipline(system) == Discipline::Single;
    Sequent concl{concat({c}, gamma), concat(delta, {c})};
    switch (c.kind()) {
    case Connective::Bottom: return Derivation::build(Rule::BotL, concl, c, std::nullopt, {});
    case Connective::Atom: return Derivation::build(Rule::Ax, concl, c, c, {});
    case Connective::And: {
        const Formula& a = c.left();
        const Formula& b = c.right();
        Formulas ab_gamma = concat({a, b}, gamma);
        auto left = identity(a, concat({b}, gamma), delta, system);
        auto right = identity(b, concat({a}, gamma), delta, system);
        auto and_r = Derivation::build(Rule::AndR, {ab_gamma, concat(delta, {c})}, std::nullopt, c, {left, right});
        return Derivation::build(Rule::AndL, concl, c, std::nullopt, {and_r});
    }
    case Connective::Or: {
        const Formula& a = c.left();
        const Formula& b = c.right();
        Sequent s1{concat({a}, gamma), concat(delta, {c})};
        Sequent s2{concat({b}, gamma), concat(delta, {c})};
        Derivation p1 = single ? Derivation::build(Rule::OrR1, s1, std::nullopt, c, {identity(a, gamma, delta, system)})
                               : Derivation::build(Rule::OrR, s1, std::nullopt, c,
                                                   {identity(a, gamma, concat(delta, {b}), system)});
        Derivation p2 = single ? Derivation::build(Rule::OrR2, s2, std::nullopt, c, {identity(b, gamma, delta, system)})
                               : Derivation::build(Rule::OrR, s2, std::nullopt, c,
                                                   {identity(b, gamma, concat(delta, {a}), system)});
        return Derivation::build(Rule::OrL, concl, c, std::nullopt, {p1, p2});
    }
    case Connective::Imp: {
        const Formula& a = c.left();
        const Formula& b = c.right();
        if (a.is_bottom()) {
            auto leaf = Derivation::build(Rule::BotL, {{a}, {b}}, a, std::nullopt, {});
            return Derivation::build(Rule::ImpR, concl, std::nullopt, c, {leaf});
        }
        if (has_rule(system, Rule::ImpLR)) {
            auto ia = identity(a, {}, {}, system);
            auto ib = identity(b, {}, {}, system);
            return Derivation::build(Rule::ImpLR, concl, c, c, {ia, ia, ib, ib});
        }
        if (has_rule(system, Rule::ImpLR_N) || has_rule(system, Rule::ImpLR_N2)) {
            auto p1 = identity(a, {}, {b}, system);
            auto p2 = identity(b, {a}, {}, system);
            if (has_rule(system, Rule::ImpLR_N)) {
                return Derivation::build(Rule::ImpLR_N, concl, c, c, {p1, p2, p1, p2});
            }
            return Derivation::build(Rule::ImpLR_N2, concl, c, c, {p1, p2});
        }
        throw UnsupportedError("no implication rule closes identities in " + std::string(system_name(system)));
    }
    }
    throw Error("unreachable");
}

void render_into(const Derivation& d, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += rule_name(d.rule());
    out += "  ";
    out += print(d.conclusion());
    if (d.cut_formula()) out += "  [cut " + print(*d.cut_formula()) + "]";
    out += '\n';
    for (const auto& p : d.premises()) render_into(p, depth + 1, out);
}

}  // namespace

Derivation identity_derivation(const Formula& c, const Formulas& gamma, const Formulas& delta, SystemId system) {
    if (discipline(system) == Discipline::Single && !delta.empty()) {
        throw Error("single-succedent identity takes an empty delta");
    }
    return identity(c, gamma, delta, system);
}

std::string render_tree(const Derivation& d) {
    std::string out;
    render_into(d, 0, out);
    return out;
}

}  // namespace subint
