#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subint/hilbert.hpp"

namespace subint::testkit {

/// A := p, B := q, C := r.
Substitution pqr();

/// Rule skeleton of a derivation, with sequents sharing a formula across the
/// arrow collapsed to "Id", e.g. "ImpR(AndL(Id))".
std::string skeleton(const Derivation& d);

struct GoldenSequent {
    std::string scheme;
    SystemId system;
    std::string expected_skeleton;
};

/// Displayed sequent derivations of axioms 7, I, C, D, Chat and Dhat.
const std::vector<GoldenSequent>& golden_sequent_axioms();

/// Theorem-mode Hilbert derivations valid in the system: every enabled axiom
/// instance over p, q, r and small derivations exercising each rule.
std::vector<std::pair<std::string, HilbertDerivation>> golden_hilbert(HilbertSystemId system);

}  // namespace subint::testkit
