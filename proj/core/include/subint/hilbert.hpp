#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subint/calculus.hpp"

namespace subint {

enum class HilbertSystemId { WF, WF_N, WF_N2, WFChat, WFDhat, WFI, WFC, WFD, WFCI, WFDI, F };

std::string_view hilbert_system_name(HilbertSystemId h);
std::optional<HilbertSystemId> hilbert_system_from_name(std::string_view name);
const std::vector<HilbertSystemId>& all_hilbert_systems();
/// Extension labels enabled on top of WF, drawn from I, C, D, Chat, Dhat, N, N2.
const std::vector<std::string>& extensions(HilbertSystemId h);
bool has_extension(HilbertSystemId h, std::string_view label);

/// Hilbert system axiomatizing the same logic as a sequent system, and back.
HilbertSystemId alias(SystemId s);
SystemId alias(HilbertSystemId h);

using Substitution = std::map<std::string, Formula>;

enum class Justification { Axiom, Rule, Assumption };

/// Scheme names: "1" "2" "3" "4" "7" "8" "14" "I" "C" "D" "Chat" "Dhat".
bool is_axiom_scheme(std::string_view name);
/// Rule names: "5" "6" "9" "10" "11" "12" "13" "N" "N2".
bool is_hilbert_rule(std::string_view name);
/// Scheme letters used by an axiom, in order.
std::vector<std::string> scheme_letters(std::string_view scheme);
Formula instantiate_scheme(std::string_view scheme, const Substitution& subst);
/// Conclusion of a rule applied to premises; rule 6 needs the new antecedent.
Formula rule_conclusion(std::string_view rule, const std::vector<Formula>& premises,
                        const std::optional<Formula>& antecedent = std::nullopt);

/// Immutable Hilbert-style proof tree.
class HilbertDerivation {
public:
    /// Raw node; no validation.
    static HilbertDerivation make(Justification by, std::string name, Formula conclusion, Substitution subst,
                                  std::vector<HilbertDerivation> premises);

    static HilbertDerivation axiom(std::string scheme, Substitution subst);
    static HilbertDerivation rule(std::string name, std::vector<HilbertDerivation> premises,
                                  const std::optional<Formula>& antecedent = std::nullopt);
    static HilbertDerivation assumption(Formula f);

    Justification by() const noexcept;
    const std::string& name() const noexcept;
    const Formula& conclusion() const noexcept;
    const Substitution& substitution() const noexcept;
    const std::vector<HilbertDerivation>& premises() const noexcept;
    const HilbertDerivation& premise(std::size_t i) const;

    std::size_t size() const noexcept;
    bool has_assumptions() const noexcept;

private:
    struct Node;
    explicit HilbertDerivation(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

enum class HilbertMode { Theorem, FromAssumptions };

/// Validate every node. In FromAssumptions mode the optional list restricts
/// which formulas may appear as assumption leaves.
CheckReport check_hilbert(HilbertSystemId system, const HilbertDerivation& d, HilbertMode mode,
                          const std::optional<Formulas>& assumptions = std::nullopt);

/// Theorem-mode derivation of fold_conj(assumptions) -> conclusion from an
/// assumption-mode derivation.
HilbertDerivation weak_deduction(HilbertSystemId system, const HilbertDerivation& d, const Formulas& assumptions);

/// Assumption-mode derivation of B from a theorem-mode derivation of
/// fold_conj(assumptions) -> B, via rule 12 and modus ponens.
HilbertDerivation reattach_assumptions(const HilbertDerivation& d, const Formulas& assumptions);

/// Theorem-mode derivation of interpretation(endsequent).
HilbertDerivation seq_to_hilbert(SystemId system, const Derivation& d);

/// Derivation of => conclusion in the aliased sequent system.
Derivation hilbert_to_seq(HilbertSystemId system, const HilbertDerivation& d);

/// Sequent derivation of => instance for an axiom scheme enabled in the system.
Derivation axiom_derivation(SystemId system, std::string_view scheme, const Substitution& subst);

namespace tactics {

HilbertDerivation ax(std::string_view scheme, std::initializer_list<std::pair<const char*, Formula>> subst);
/// Modus ponens from A and A -> B.
HilbertDerivation mp(const HilbertDerivation& a, const HilbertDerivation& ab);
/// From A, B -> A.
HilbertDerivation af(const HilbertDerivation& a, const Formula& b);
/// From A -> B and B -> C, A -> C.
HilbertDerivation trans(const HilbertDerivation& ab, const HilbertDerivation& bc);
HilbertDerivation pair_right(const HilbertDerivation& ab, const HilbertDerivation& ac);
HilbertDerivation cases_left(const HilbertDerivation& ac, const HilbertDerivation& bc);
HilbertDerivation conj(const HilbertDerivation& a, const HilbertDerivation& b);
/// Proof of p -> q when p is below q in the free distributive lattice over
/// the non-lattice subformulas, with bottom and top (bottom -> bottom).
std::optional<HilbertDerivation> lattice(const Formula& p, const Formula& q);
HilbertDerivation lattice_or_throw(const Formula& p, const Formula& q);

}  // namespace tactics

}  // namespace subint
