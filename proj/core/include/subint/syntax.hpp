#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace subint {

enum class Connective : std::uint8_t { Bottom, Atom, And, Or, Imp };

/// Immutable propositional formula over atoms, falsum, conjunction,
/// disjunction and implication. Copies share structure.
class Formula {
public:
    /// Default-constructed formula is falsum.
    Formula();

    static Formula bottom();
    static Formula atom(std::string name);
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula imp(Formula l, Formula r);
    /// (l -> r) & (r -> l)
    static Formula iff(const Formula& l, const Formula& r);
    /// falsum -> falsum
    static Formula top();

    Connective kind() const noexcept;
    bool is_bottom() const noexcept { return kind() == Connective::Bottom; }
    bool is_atom() const noexcept { return kind() == Connective::Atom; }
    bool is_and() const noexcept { return kind() == Connective::And; }
    bool is_or() const noexcept { return kind() == Connective::Or; }
    bool is_imp() const noexcept { return kind() == Connective::Imp; }
    bool is_binary() const noexcept { return kind() >= Connective::And; }

    /// Atom name; empty for non-atoms.
    const std::string& name() const noexcept;
    /// Children of a binary formula. Throws for atoms and falsum.
    const Formula& left() const;
    const Formula& right() const;

    std::size_t weight() const noexcept;
    /// Number of nodes in the syntax tree.
    std::size_t size() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Formula& a, const Formula& b) noexcept;
    /// Total structural order: weight, then connective, then children.
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    static Formula binary(Connective c, Formula l, Formula r);

    std::shared_ptr<const Node> node_;
};

std::size_t weight(const Formula& f) noexcept;

/// Parse the concrete grammar: false, identifiers, &, |, ->, <->, parentheses.
/// Precedence & > | > -> > <->; -> is right-associative, & and | left-associative.
Formula parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(print(f)) == f.
std::string print(const Formula& f);

/// Sorted, duplicate-free atom names occurring in f.
std::vector<std::string> atoms(const Formula& f);

/// All subformulas of f, duplicate-free, in structural order.
std::vector<Formula> subformulas(const Formula& f);

/// Right-folded conjunction/disjunction of a non-empty list, in the given order.
Formula fold_conj(const std::vector<Formula>& fs);
Formula fold_disj(const std::vector<Formula>& fs);

}  // namespace subint

template <>
struct std::hash<subint::Formula> {
    std::size_t operator()(const subint::Formula& f) const noexcept { return f.hash(); }
};
