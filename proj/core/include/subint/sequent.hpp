#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subint/syntax.hpp"

namespace subint {

enum class Discipline { Multi, Single };
enum class Side { Left, Right };

using Formulas = std::vector<Formula>;

/// Pair of formula multisets. Vector order is presentation only; equality
/// is multiset equality.
struct Sequent {
    Formulas ant;
    Formulas suc;

    Sequent() = default;
    Sequent(Formulas antecedent, Formulas succedent)
        : ant(std::move(antecedent)), suc(std::move(succedent)) {}

    /// Single-succedent sequent ant => c.
    static Sequent single(Formulas antecedent, Formula c) { return {std::move(antecedent), {std::move(c)}}; }

    const Formulas& side(Side s) const { return s == Side::Left ? ant : suc; }
    Formulas& side(Side s) { return s == Side::Left ? ant : suc; }

    /// Sum of formula weights on both sides.
    std::size_t weight() const;

    friend bool operator==(const Sequent& a, const Sequent& b);
};

bool respects(const Sequent& s, Discipline d);
/// Throws Error when s violates d.
void require_discipline(const Sequent& s, Discipline d);

std::size_t count(const Formulas& xs, const Formula& f);
bool contains(const Formulas& xs, const Formula& f);
bool same_multiset(const Formulas& a, const Formulas& b);
/// True when b is a sub-multiset of a.
bool includes(const Formulas& a, const Formulas& b);
/// a minus one copy of f; throws if f is absent.
Formulas remove_one(const Formulas& a, const Formula& f);
Formulas remove_at(const Formulas& a, std::size_t index);
/// Multiset difference a - b; throws unless b is included in a.
Formulas difference(const Formulas& a, const Formulas& b);
Formulas concat(const Formulas& a, const Formulas& b);
Formulas with(const Formulas& a, const Formula& f);
Formulas sorted(Formulas a);
Sequent canonical(const Sequent& s);

/// Conjunction of xs folded right in print-string order; empty gives falsum -> falsum.
Formula conjunction_of(const Formulas& xs);
/// Disjunction of xs folded right in print-string order; empty gives falsum.
Formula disjunction_of(const Formulas& xs);
/// conjunction_of(ant) -> disjunction_of(suc)
Formula interpretation(const Sequent& s);

/// "G1, G2 => D1, D2"; a bare formula means "=> F".
Sequent parse_sequent(std::string_view text);
std::string print(const Sequent& s);
std::string print(const Formulas& xs);

}  // namespace subint
