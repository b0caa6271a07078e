#include "golden.hpp"

namespace subint::testkit {

using namespace tactics;

Substitution pqr() { return {{"A", parse("p")}, {"B", parse("q")}, {"C", parse("r")}}; }

std::string skeleton(const Derivation& d) {
    for (const auto& f : d.conclusion().ant) {
        if (contains(d.conclusion().suc, f)) return "Id";
    }
    std::string out(rule_name(d.rule()));
    if (d.premises().empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
        if (i) out += ",";
        out += skeleton(d.premises()[i]);
    }
    return out + ")";
}

const std::vector<GoldenSequent>& golden_sequent_axioms() {
    static const std::vector<GoldenSequent> table = {
        {"7", SystemId::GWF, "ImpR(AndL(OrL(OrR(AndR(Id,Id)),OrR(AndR(Id,Id)))))"},
        {"Chat", SystemId::GWFChat, "ImpR(AndR(ImpChat(AndL(Id)),ImpChat(AndL(Id))))"},
        {"Dhat", SystemId::GWFDhat, "ImpR(AndR(ImpDhat(OrR(Id)),ImpDhat(OrR(Id))))"},
        {"I", SystemId::GWFI, "ImpR(ImpI(AndL(Id),AndL(Id)))"},
        {"C", SystemId::GWFC, "ImpR(ImpC(AndL(Id),AndL(Id)))"},
        {"C", SystemId::GWFCI, "ImpR(ImpC(AndL(Id),AndL(Id)))"},
        {"D", SystemId::GWFD, "ImpR(ImpD(AndL(Id),AndL(Id)))"},
    };
    return table;
}

std::vector<std::pair<std::string, HilbertDerivation>> golden_hilbert(HilbertSystemId system) {
    const Formula p = parse("p"), q = parse("q"), r = parse("r");
    const Formula pq = Formula::conj(p, q);
    std::vector<std::pair<std::string, HilbertDerivation>> out;
    for (const char* scheme : {"1", "2", "3", "4", "7", "8", "14", "I", "C", "D", "Chat", "Dhat"}) {
        const std::string s = scheme;
        const bool extension = s == "I" || s == "C" || s == "D" || s == "Chat" || s == "Dhat";
        if (extension && !has_extension(system, s)) continue;
        Substitution sub;
        for (const auto& letter : scheme_letters(s)) sub.emplace(letter, pqr().at(letter));
        out.emplace_back("axiom " + s, HilbertDerivation::axiom(s, sub));
    }
    HilbertDerivation swap_and = pair_right(ax("4", {{"A", p}, {"B", q}}), ax("3", {{"A", p}, {"B", q}}));
    HilbertDerivation swap_and_back = pair_right(ax("4", {{"A", q}, {"B", p}}), ax("3", {{"A", q}, {"B", p}}));
    HilbertDerivation swap_or = cases_left(ax("2", {{"A", r}, {"B", p}}), ax("1", {{"A", r}, {"B", p}}));
    HilbertDerivation swap_or_back = cases_left(ax("2", {{"A", p}, {"B", r}}), ax("1", {{"A", p}, {"B", r}}));
    out.emplace_back("modus ponens", mp(ax("14", {{"A", p}}), ax("1", {{"A", parse("false -> p")}, {"B", q}})));
    out.emplace_back("a fortiori", af(ax("8", {{"A", p}}), q));
    out.emplace_back("transitivity", trans(ax("3", {{"A", p}, {"B", q}}), ax("1", {{"A", p}, {"B", r}})));
    out.emplace_back("conjunction right", swap_and);
    out.emplace_back("disjunction left", cases_left(ax("2", {{"A", q}, {"B", p}}), ax("1", {{"A", q}, {"B", p}})));
    out.emplace_back("conjunction", conj(ax("8", {{"A", p}}), ax("14", {{"A", q}})));
    out.emplace_back("congruence",
                     HilbertDerivation::rule("13", {conj(swap_and, swap_and_back), conj(swap_or_back, swap_or)}));
    out.emplace_back("nested", mp(conj(ax("8", {{"A", p}}), ax("8", {{"A", q}})),
                                  ax("3", {{"A", parse("p -> p")}, {"B", parse("q -> q")}})));
    if (has_extension(system, "N")) {
        const Formula a = pq, b = p, c = q, d = q;
        HilbertDerivation n = HilbertDerivation::rule(
            "N", {lattice_or_throw(a, Formula::disj(b, c)), lattice_or_throw(c, Formula::disj(a, d)),
                  lattice_or_throw(Formula::conj(a, d), b), lattice_or_throw(Formula::conj(c, b), d)});
        out.emplace_back("rule N", n);
    }
    if (has_extension(system, "N2")) {
        const Formula a = p, b = q, c = parse("p & r"), d = parse("q | r");
        HilbertDerivation n2 = HilbertDerivation::rule(
            "N2", {lattice_or_throw(c, Formula::disj(a, d)), lattice_or_throw(Formula::conj(c, b), d)});
        out.emplace_back("rule N2", n2);
    }
    if (has_extension(system, "I")) {
        HilbertDerivation chain = conj(ax("3", {{"A", p}, {"B", q}}), ax("1", {{"A", p}, {"B", r}}));
        out.emplace_back("axiom I applied",
                         mp(chain, ax("I", {{"A", pq}, {"B", p}, {"C", Formula::disj(p, r)}})));
    }
    if (has_extension(system, "C")) {
        HilbertDerivation both = conj(ax("3", {{"A", p}, {"B", q}}), ax("4", {{"A", p}, {"B", q}}));
        out.emplace_back("axiom C applied", mp(both, ax("C", {{"A", pq}, {"B", p}, {"C", q}})));
    }
    if (has_extension(system, "D")) {
        const Formula por = Formula::disj(p, q);
        HilbertDerivation both = conj(ax("1", {{"A", p}, {"B", q}}), ax("2", {{"A", p}, {"B", q}}));
        out.emplace_back("axiom D applied", mp(both, ax("D", {{"A", p}, {"B", q}, {"C", por}})));
    }
    if (has_extension(system, "Chat")) {
        out.emplace_back("axiom Chat applied", mp(swap_and, ax("Chat", {{"A", pq}, {"B", q}, {"C", p}})));
    }
    if (has_extension(system, "Dhat")) {
        HilbertDerivation swap = cases_left(ax("2", {{"A", q}, {"B", p}}), ax("1", {{"A", q}, {"B", p}}));
        out.emplace_back("axiom Dhat applied",
                         mp(swap, ax("Dhat", {{"A", p}, {"B", q}, {"C", Formula::disj(q, p)}})));
    }
    return out;
}

}  // namespace subint::testkit
