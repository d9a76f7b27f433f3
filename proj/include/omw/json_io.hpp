#pragma once

#include "json.hpp"
#include "omw/extraction.hpp"
#include "omw/families.hpp"
#include "omw/search.hpp"
#include "omw/semigroup.hpp"
#include "omw/words.hpp"

// JSON (de)serialization for every CLI-visible type. All readers throw
// omw::domain_error with a readable message on malformed input.
namespace omw::json_io {

using nlohmann::json;

json word_to_json(const LocatedWord& w);
LocatedWord word_from_json(const json& j);

json omega_to_json(const OmegaWord& w);
OmegaWord omega_from_json(const json& j);

json tuple_to_json(const OrderlyTuple& t);
OrderlyTuple tuple_from_json(const json& j);

DominationSeq domination_from_json(const json& j);

json family_to_json(const families::FamilySpec& f);
families::FamilySpec family_from_json(const json& j);

SemigroupSpec semigroup_from_json(const json& j);

search::Coloring coloring_from_json(const json& j);

json sg_value_to_json(const SgValue& v);
SgValue sg_value_from_json(const json& j);

}  // namespace omw::json_io
