#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "subint/calculus.hpp"

namespace subint {

enum class InversionShape { AndL, OrL, AndR, OrR };

/// Add f to the given side of the endsequent without increasing height.
Derivation weaken(SystemId system, const Derivation& d, Side side, const Formula& f);
/// Weaken by every formula of fs in order.
Derivation weaken_all(SystemId system, const Derivation& d, Side side, const Formulas& fs);

/// Remove one of two copies of f from the given side without increasing height.
Derivation contract(SystemId system, const Derivation& d, Side side, const Formula& f);
/// Contract once for each formula of fs.
Derivation contract_all(SystemId system, const Derivation& d, Side side, const Formulas& fs);

/// Derivations of the premises of the named rule for the first formula of that
/// shape on the relevant side: AndL and OrR give one, OrL and AndR give two.
std::vector<Derivation> invert(SystemId system, const Derivation& d, InversionShape shape);
/// Same, for a specific principal formula.
std::vector<Derivation> invert(SystemId system, const Derivation& d, InversionShape shape, const Formula& target);

struct CutInstance {
    Derivation left;
    Derivation right;
    Formula cut_formula;
};

/// Endsequent of the cut rule applied to the instance; throws when the
/// premises do not compose.
Sequent cut_conclusion(SystemId system, const CutInstance& c);

struct CutOptions {
    /// Fuel = 4^weight(cut formula) + cut-height * fuel_weight_factor.
    std::size_t fuel_weight_factor = 1u << 16;
};

struct CutStats {
    std::size_t initial_cuts = 0;
    std::size_t rewrite_steps = 0;
    std::size_t final_height = 0;
    std::size_t max_steps_single_cut = 0;
    std::size_t max_fuel_single_cut = 0;
    /// Reduction cases taken, keyed by case name.
    std::map<std::string, std::size_t> cases;
};

/// Cut-free derivation of the instance's composed endsequent. Throws
/// UnsupportedError for systems whose cut is primitive and FuelExhausted
/// when the termination tripwire fires.
Derivation eliminate_cut(SystemId system, const CutInstance& c, CutStats* stats = nullptr,
                         const CutOptions& options = {});

/// Eliminate every Cut node, innermost first.
Derivation eliminate_all_cuts(SystemId system, const Derivation& d, CutStats* stats = nullptr,
                              const CutOptions& options = {});

}  // namespace subint
