#include "omw/json_io.hpp"

#include "omw/errors.hpp"
#include "omw/ordinal.hpp"

namespace omw::json_io {

namespace {

void need(bool ok, const char* msg) {
  if (!ok) throw domain_error(msg);
}

std::uint64_t as_u64(const json& j, const char* what) {
  need(j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0),
       what);
  return j.get<std::uint64_t>();
}

}  // namespace

json word_to_json(const LocatedWord& w) {
  json entries = json::array();
  for (const auto& [n, l] : w.entries()) entries.push_back(json::array({n, l}));
  return json{{"entries", std::move(entries)}};
}

LocatedWord word_from_json(const json& j) {
  need(j.is_object() && j.contains("entries") && j["entries"].is_array(),
       "a word is {\"entries\": [[position, letter], ...]}");
  std::vector<LocatedWord::Entry> entries;
  for (const auto& e : j["entries"]) {
    need(e.is_array() && e.size() == 2, "each entry is a [position, letter] pair");
    entries.emplace_back(as_u64(e[0], "positions are nonnegative integers"),
                         as_u64(e[1], "letters are nonnegative integers"));
  }
  return LocatedWord::from_entries(std::move(entries));
}

json omega_to_json(const OmegaWord& w) {
  return json{{"letters", w.letters()}};
}

OmegaWord omega_from_json(const json& j) {
  need(j.is_object() && j.contains("letters") && j["letters"].is_array(),
       "an unlocated word is {\"letters\": [...]} with letters at 1,2,...");
  std::vector<Letter> letters;
  for (const auto& l : j["letters"])
    letters.push_back(as_u64(l, "letters are nonnegative integers"));
  return OmegaWord::from_letters(std::move(letters));
}

json tuple_to_json(const OrderlyTuple& t) {
  json arr = json::array();
  for (const auto& w : t.words()) arr.push_back(word_to_json(w));
  return arr;
}

OrderlyTuple tuple_from_json(const json& j) {
  need(j.is_array(), "a tuple is an array of words");
  std::vector<LocatedWord> ws;
  for (const auto& w : j) ws.push_back(word_from_json(w));
  return OrderlyTuple::from_words(std::move(ws));
}

DominationSeq domination_from_json(const json& j) {
  need(j.is_object() && j.contains("kind") && j["kind"].is_string(),
       "a domination sequence carries a \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "constant") {
    need(j.contains("c"), "constant domination needs \"c\"");
    return DominationSeq::constant(as_u64(j["c"], "\"c\" is a positive integer"));
  }
  if (kind == "affine") {
    need(j.contains("a") && j.contains("b"), "affine domination needs \"a\" and \"b\"");
    return DominationSeq::affine(as_u64(j["a"], "\"a\" is a nonnegative integer"),
                                 as_u64(j["b"], "\"b\" is a nonnegative integer"));
  }
  if (kind == "table") {
    need(j.contains("values") && j["values"].is_array() && !j["values"].empty(),
         "table domination needs a nonempty \"values\" array");
    std::vector<std::uint64_t> values;
    for (const auto& v : j["values"])
      values.push_back(as_u64(v, "table values are positive integers"));
    return DominationSeq::table(std::move(values));
  }
  throw domain_error("domination kind must be constant, affine, or table");
}

json family_to_json(const families::FamilySpec& f) {
  using families::FamilySpec;
  switch (f.kind()) {
    case FamilySpec::Kind::ExplicitFinite: {
      json members = json::array();
      for (const auto& t : f.members()) members.push_back(tuple_to_json(t));
      return json{{"ExplicitFinite", std::move(members)}};
    }
    case FamilySpec::Kind::LenAtMost:
      return json{{"LenAtMost", f.len_bound()}};
    case FamilySpec::Kind::SchreierHered:
      if (f.stage().is_zero()) return json{{"SchreierHered", f.xi().format()}};
      return json{{"SchreierHered",
                   json{{"xi", f.xi().format()}, {"stage", f.stage().format()}}}};
    case FamilySpec::Kind::Union:
    case FamilySpec::Kind::Intersect: {
      json parts = json::array();
      for (const auto& p : f.parts()) parts.push_back(family_to_json(p));
      return json{{f.kind() == FamilySpec::Kind::Union ? "Union" : "Intersect",
                   std::move(parts)}};
    }
  }
  throw domain_error("bad family kind");
}

families::FamilySpec family_from_json(const json& j) {
  using families::FamilySpec;
  need(j.is_object() && j.size() == 1,
       "a family is an object with exactly one of ExplicitFinite, LenAtMost, "
       "SchreierHered, Union, Intersect");
  auto it = j.begin();
  const std::string& key = it.key();
  const json& val = it.value();
  if (key == "ExplicitFinite") {
    need(val.is_array(), "ExplicitFinite takes an array of tuples");
    std::vector<OrderlyTuple> members;
    for (const auto& t : val) members.push_back(tuple_from_json(t));
    return FamilySpec::explicit_finite(std::move(members));
  }
  if (key == "LenAtMost")
    return FamilySpec::len_at_most(as_u64(val, "LenAtMost takes an integer"));
  if (key == "SchreierHered") {
    if (val.is_string())
      return FamilySpec::schreier_hered(Ordinal::parse(val.get<std::string>()));
    need(val.is_object() && val.contains("xi"),
         "SchreierHered takes an ordinal string or {\"xi\": ...}");
    need(val["xi"].is_string(), "\"xi\" is an ordinal string");
    return FamilySpec::schreier_hered(
        Ordinal::parse(val["xi"].get<std::string>()));
  }
  if (key == "Union" || key == "Intersect") {
    need(val.is_array(), "Union/Intersect take an array of families");
    std::vector<FamilySpec> parts;
    for (const auto& p : val) parts.push_back(family_from_json(p));
    return key == "Union" ? FamilySpec::union_of(std::move(parts))
                          : FamilySpec::intersect_of(std::move(parts));
  }
  throw domain_error(
      "family kind must be ExplicitFinite, LenAtMost, SchreierHered, Union, "
      "or Intersect");
}

json sg_value_to_json(const SgValue& v) {
  if (std::holds_alternative<std::int64_t>(v)) return std::get<std::int64_t>(v);
  return std::get<std::string>(v);
}

SgValue sg_value_from_json(const json& j) {
  if (j.is_string()) return SgValue{j.get<std::string>()};
  need(j.is_number_integer() || j.is_number_unsigned(),
       "semigroup values are integers or strings");
  return SgValue{j.get<std::int64_t>()};
}

SemigroupSpec semigroup_from_json(const json& j) {
  need(j.is_object() && j.contains("carrier") && j["carrier"].is_string(),
       "a semigroup carries a \"carrier\"");
  const std::string carrier = j["carrier"].get<std::string>();
  SemigroupSpec sg = SemigroupSpec::integers_add();
  if (carrier == "integers-add") {
    sg = SemigroupSpec::integers_add();
  } else if (carrier == "integers-max") {
    sg = SemigroupSpec::integers_max();
  } else if (carrier == "strings-concat") {
    sg = SemigroupSpec::strings_concat();
  } else if (carrier == "integers-mod-add") {
    need(j.contains("m"), "integers-mod-add needs \"m\"");
    sg = SemigroupSpec::integers_mod_add(as_u64(j["m"], "\"m\" is a positive integer"));
  } else {
    throw domain_error(
        "carrier must be integers-add, integers-max, strings-concat, or "
        "integers-mod-add");
  }
  need(j.contains("y") && j["y"].is_object(), "a semigroup carries a \"y\" rule");
  const json& y = j["y"];
  need(y.contains("kind") && y["kind"].is_string(), "the y rule carries a \"kind\"");
  const std::string kind = y["kind"].get<std::string>();
  if (kind == "pow") {
    need(y.contains("base"), "pow y rule needs \"base\"");
    need(y["base"].is_number_integer() || y["base"].is_number_unsigned(),
         "\"base\" is an integer");
    sg.with_y_pow(y["base"].get<std::int64_t>());
  } else if (kind == "affine") {
    need(y.contains("c"), "affine y rule needs \"c\"");
    need(y["c"].is_number_integer() || y["c"].is_number_unsigned(),
         "\"c\" is an integer");
    sg.with_y_affine(y["c"].get<std::int64_t>());
  } else if (kind == "table") {
    need(y.contains("entries") && y["entries"].is_array(),
         "table y rule needs \"entries\" of [letter, position, value] rows");
    std::map<std::pair<std::uint64_t, std::uint64_t>, SgValue> table;
    for (const auto& row : y["entries"]) {
      need(row.is_array() && row.size() == 3,
           "each y entry is [letter, position, value]");
      table[{as_u64(row[0], "letters are nonnegative integers"),
             as_u64(row[1], "positions are positive integers")}] =
          sg_value_from_json(row[2]);
    }
    sg.with_y_table(std::move(table));
  } else {
    throw domain_error("y rule kind must be pow, affine, or table");
  }
  return sg;
}

search::Coloring coloring_from_json(const json& j) {
  using search::Coloring;
  need(j.is_object() && j.contains("kind") && j["kind"].is_string(),
       "a coloring carries a \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "dom-size-parity") return Coloring::dom_size_parity();
  if (kind == "min-dom-mod") {
    need(j.contains("m"), "min-dom-mod needs \"m\"");
    return Coloring::min_dom_mod(as_u64(j["m"], "\"m\" is a positive integer"));
  }
  if (kind == "letter-sum-mod") {
    need(j.contains("m"), "letter-sum-mod needs \"m\"");
    return Coloring::letter_sum_mod(as_u64(j["m"], "\"m\" is a positive integer"));
  }
  if (kind == "max-letter-mod") {
    need(j.contains("m"), "max-letter-mod needs \"m\"");
    return Coloring::max_letter_mod(as_u64(j["m"], "\"m\" is a positive integer"));
  }
  if (kind == "table") {
    need(j.contains("arity") && j.contains("entries") && j["entries"].is_array(),
         "table coloring needs \"arity\" and \"entries\" of [word, color] rows");
    std::map<LocatedWord, std::uint64_t> table;
    for (const auto& row : j["entries"]) {
      need(row.is_array() && row.size() == 2,
           "each coloring entry is [word, color]");
      table.emplace(word_from_json(row[0]),
                    as_u64(row[1], "colors are positive integers"));
    }
    return Coloring::table(std::move(table),
                           as_u64(j["arity"], "\"arity\" is a positive integer"));
  }
  if (kind == "composed-g") {
    need(j.contains("r") && j.contains("sg"),
         "composed-g needs \"r\" and \"sg\"");
    return Coloring::composed_via_g(semigroup_from_json(j["sg"]),
                                    as_u64(j["r"], "\"r\" is a positive integer"));
  }
  throw domain_error(
      "coloring kind must be dom-size-parity, min-dom-mod, letter-sum-mod, "
      "max-letter-mod, table, or composed-g");
}

}  // namespace omw::json_io
