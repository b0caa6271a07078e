#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subint/sequent.hpp"

namespace subint {

enum class Rule {
    Ax,
    BotL,
    AndL,
    AndR,
    OrL,
    OrR,
    OrR1,
    OrR2,
    ImpR,
    ImpLR,
    ImpLR_N,
    ImpLR_N2,
    ImpChat,
    ImpDhat,
    ImpI,
    ImpC,
    ImpD,
    Cut,
};

enum class SystemId { GWF, GWF_N, GWF_N2, GWFChat, GWFDhat, GWFI, GWFC, GWFD, GWFCI, GWFDI, GF };

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

struct SystemInfo {
    SystemId id;
    std::string_view name;
    Discipline discipline;
    std::vector<Rule> rules;
    bool cut_primitive;
};

const SystemInfo& info(SystemId s);
std::string_view system_name(SystemId s);
std::optional<SystemId> system_from_name(std::string_view name);
const std::vector<SystemId>& all_systems();
bool has_rule(SystemId s, Rule r);
Discipline discipline(SystemId s);
/// Systems where cut elimination and proof search are available.
bool cut_free(SystemId s);

/// Premises are bare sequents independent of the conclusion's context.
bool bare_premises(Rule r);
/// Premises repeat the conclusion's context.
bool context_sharing(Rule r);

/// Positions of the principal formula(s) in a node's conclusion.
struct Principal {
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;
    friend bool operator==(const Principal&, const Principal&) = default;
};

/// Immutable rule-labelled proof tree. Copies share structure.
class Derivation {
public:
    /// Raw constructor; no schema validation.
    static Derivation make(Rule rule, Sequent conclusion, Principal principal, std::vector<Derivation> premises,
                           std::optional<Formula> cut = std::nullopt);

    /// Builder resolving principal positions by the leftmost occurrence of the
    /// given principal formulas in the conclusion.
    static Derivation build(Rule rule, Sequent conclusion, std::optional<Formula> left_principal,
                            std::optional<Formula> right_principal, std::vector<Derivation> premises,
                            std::optional<Formula> cut = std::nullopt);

    Rule rule() const noexcept;
    const Sequent& conclusion() const noexcept;
    const Principal& principal() const noexcept;
    const std::vector<Derivation>& premises() const noexcept;
    const Derivation& premise(std::size_t i) const;
    const std::optional<Formula>& cut_formula() const noexcept;

    std::optional<Formula> left_principal() const;
    std::optional<Formula> right_principal() const;

    std::size_t height() const noexcept;
    /// Number of nodes.
    std::size_t size() const noexcept;
    /// Number of Cut nodes.
    std::size_t cut_count() const noexcept;

    /// Same rule and premises over a new conclusion; principal positions are
    /// re-resolved from the current principal formulas.
    Derivation with_conclusion(Sequent conclusion) const;
    Derivation with_premises(std::vector<Derivation> premises) const;

private:
    struct Node;
    explicit Derivation(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

std::size_t height(const Derivation& d) noexcept;

/// Cut-height of a cut between two derivations.
inline std::size_t cut_height(const Derivation& left, const Derivation& right) {
    return left.height() + right.height();
}

struct CheckReport {
    bool accepted = true;
    /// Premise indices from the root to the first failing node.
    std::vector<std::size_t> path;
    std::string reason;
    std::string expected;
    std::string actual;
    std::size_t nodes_checked = 0;

    explicit operator bool() const noexcept { return accepted; }
    std::string describe() const;
};

/// Validate every node against the system's rule schemas.
CheckReport check(SystemId system, const Derivation& d);

/// Derivation of c, gamma => delta, c (delta must be empty for single-succedent systems).
Derivation identity_derivation(const Formula& c, const Formulas& gamma, const Formulas& delta, SystemId system);

/// Indented text rendering, one node per line.
std::string render_tree(const Derivation& d);

}  // namespace subint
