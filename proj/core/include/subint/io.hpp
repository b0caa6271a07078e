#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "subint/hilbert.hpp"
#include "subint/search.hpp"
#include "subint/semantics.hpp"
#include "subint/structural.hpp"

namespace subint::io {

using Json = nlohmann::json;

Json to_json(const Formula& f);
Json to_json(const Sequent& s);
Json to_json(const Derivation& d);
Json to_json(const HilbertDerivation& d);
Json to_json(const Countermodel& c);
Json to_json(const CheckReport& r);
Json to_json(const CutStats& s);
Json to_json(const SearchStats& s);

/// Formulas may also be given as text.
Formula formula_from_json(const Json& j);
/// Sequents may also be given as "G => D" text.
Sequent sequent_from_json(const Json& j);
Derivation derivation_from_json(const Json& j);
HilbertDerivation hilbert_from_json(const Json& j);
Countermodel countermodel_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace subint::io
