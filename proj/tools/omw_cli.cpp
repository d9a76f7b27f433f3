#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "omw/errors.hpp"
#include "omw/extraction.hpp"
#include "omw/families.hpp"
#include "omw/json_io.hpp"
#include "omw/ordinal.hpp"
#include "omw/schreier.hpp"
#include "omw/search.hpp"
#include "omw/semigroup.hpp"
#include "omw/words.hpp"

using nlohmann::json;
using namespace omw;

namespace {

constexpr const char* kSchema = "omega-words/1";

struct RunConfig {
  std::optional<DominationSeq> domination;
  std::string ordinal_budget = "w^(w)";
  std::uint64_t enum_cap = 2'000'000;
  std::uint64_t universe_budget = 50'000'000;
  std::uint64_t step_budget = 100'000;
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  std::string output;
};

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw domain_error(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot read file: " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// Inline JSON when it looks like JSON, otherwise a file path.
json json_or_file(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return parse_json(arg);
  return parse_json(read_file(arg));
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  if (path.empty()) return cfg;
  json j = parse_json(read_file(path));
  if (!j.is_object()) throw domain_error("config must be a JSON object");
  if (j.contains("domination"))
    cfg.domination = json_io::domination_from_json(j["domination"]);
  if (j.contains("ordinal_budget")) {
    cfg.ordinal_budget = j["ordinal_budget"].get<std::string>();
    Ordinal::parse(cfg.ordinal_budget);  // must be a valid ordinal
  }
  auto cap = [&](const char* key, std::uint64_t& slot) {
    if (!j.contains(key)) return;
    std::uint64_t v = j[key].get<std::uint64_t>();
    if (v < 1) throw domain_error(std::string(key) + " must be positive");
    slot = v;
  };
  cap("enum_cap", cfg.enum_cap);
  cap("universe_budget", cfg.universe_budget);
  cap("step_budget", cfg.step_budget);
  if (j.contains("threads")) {
    cfg.threads = j["threads"].get<std::size_t>();
    if (cfg.threads < 1) throw domain_error("threads must be positive");
  }
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  return cfg;
}

DominationSeq default_k(const RunConfig& cfg) {
  return cfg.domination ? *cfg.domination : DominationSeq::constant(1);
}

DominationSeq pick_k(const std::string& flag, const RunConfig& cfg) {
  if (flag.empty()) return default_k(cfg);
  return json_io::domination_from_json(parse_json(flag));
}

Ordinal parse_xi_guarded(const std::string& text, const RunConfig& cfg) {
  Ordinal xi = Ordinal::parse(text);
  if (xi > Ordinal::parse(cfg.ordinal_budget))
    throw budget_error("ordinal above the configured budget");
  return xi;
}

schreier::FiniteSet parse_set(const std::string& text) {
  schreier::FiniteSet s;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string tok = text.substr(i, j - i);
    if (!tok.empty()) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        throw domain_error("set elements are positive integers");
      }
      if (used != tok.size() || v == 0)
        throw domain_error("set elements are positive integers");
      s.push_back(v);
    }
    i = j + 1;
  }
  return s;
}

json set_to_json(const schreier::FiniteSet& s) { return json(s); }

int emit(const json& payload, const RunConfig& cfg, int code) {
  json out = payload;
  out["schema"] = kSchema;
  std::string text = out.dump() + "\n";
  std::fwrite(text.data(), 1, text.size(), stdout);
  std::fflush(stdout);
  if (!cfg.output.empty()) {
    std::ofstream f(cfg.output, std::ios::binary);
    f << text;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramsey-style combinatorics of located words"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path, "run configuration JSON file");

  // schreier
  auto* sch = app.add_subcommand("schreier", "Schreier family operations");
  sch->require_subcommand(0, 1);
  std::string xi_str, set_str, seq_str;
  std::uint64_t bound = 12;
  auto* sch_member = sch->add_subcommand("member", "batch membership");
  sch_member->add_option("--xi", xi_str)->required();
  sch_member->add_option("--set", set_str);
  auto* sch_decomp = sch->add_subcommand("decompose", "canonical block cut");
  sch_decomp->add_option("--xi", xi_str)->required();
  sch_decomp->add_option("--seq", seq_str)->required();
  auto* sch_audit = sch->add_subcommand("audit", "exhaustive thinness audit");
  sch_audit->add_option("--xi", xi_str)->required();
  sch_audit->add_option("--bound", bound);

  // word
  auto* wrd = app.add_subcommand("word", "located word operations");
  wrd->require_subcommand(0, 1);
  std::string word_str, left_str, right_str, k_str;
  std::uint64_t p = 0;
  auto* wrd_tp = wrd->add_subcommand("tp", "variable substitution");
  wrd_tp->add_option("--p", p)->required();
  wrd_tp->add_option("--word", word_str)->required();
  wrd_tp->add_option("--k", k_str);
  auto* wrd_plus = wrd->add_subcommand("plus", "merge of two words");
  wrd_plus->add_option("--left", left_str)->required();
  wrd_plus->add_option("--right", right_str)->required();
  auto* wrd_concat = wrd->add_subcommand("concat", "ordered concatenation");
  wrd_concat->add_option("--left", left_str)->required();
  wrd_concat->add_option("--right", right_str)->required();
  auto* wrd_unloc = wrd->add_subcommand("unlocate", "forget locations");
  wrd_unloc->add_option("--word", word_str)->required();

  // extract
  auto* ext = app.add_subcommand("extract", "extracted word sets");
  ext->require_subcommand(0, 1);
  std::string tuple_str, gens_str;
  std::uint64_t cap_flag = 0;
  auto* ext_ev = ext->add_subcommand("ev", "extracted variable words");
  ext_ev->add_option("--tuple", tuple_str)->required();
  ext_ev->add_option("--k", k_str);
  auto* ext_e = ext->add_subcommand("e", "extracted constant words");
  ext_e->add_option("--tuple", tuple_str)->required();
  ext_e->add_option("--k", k_str);
  auto* ext_tuples = ext->add_subcommand("tuples", "Schreier-indexed tuples");
  ext_tuples->add_option("--xi", xi_str)->required();
  ext_tuples->add_option("--generators", gens_str)->required();
  ext_tuples->add_option("--k", k_str);
  ext_tuples->add_option("--cap", cap_flag);

  // family
  auto* fam = app.add_subcommand("family", "hereditary family operations");
  fam->require_subcommand(0, 1);
  std::string spec_str;
  bool star_flag = false, hered_flag = false;
  auto* fam_cb = fam->add_subcommand("cb-index", "strong derivative index");
  fam_cb->add_option("--spec", spec_str)->required();
  fam_cb->add_option("--k", k_str);
  auto* fam_clo = fam->add_subcommand("closure", "star or hereditary closure");
  fam_clo->add_option("--spec", spec_str)->required();
  fam_clo->add_flag("--star", star_flag);
  fam_clo->add_flag("--hered", hered_flag);
  fam_clo->add_option("--k", k_str);
  auto* fam_canon = fam->add_subcommand("canon", "canonical representation");
  fam_canon->add_option("--xi", xi_str)->required();
  fam_canon->add_option("--tuple", tuple_str)->required();

  // search
  auto* sea = app.add_subcommand("search", "homogeneity search");
  sea->require_subcommand(0, 1);
  std::size_t m = 0;
  std::uint64_t big_n = 0;
  std::string dom_str, cvar_str, cconst_str, bridge_str;
  std::size_t threads_flag = 0, lambda_cap = 2;
  auto* sea_hom = sea->add_subcommand("homogeneous", "least witness search");
  sea_hom->add_option("--m", m)->required();
  sea_hom->add_option("--N", big_n)->required();
  sea_hom->add_option("--dom", dom_str);
  sea_hom->add_option("--color-var", cvar_str)->required();
  sea_hom->add_option("--color-const", cconst_str)->required();
  sea_hom->add_option("--vdw-bridge", bridge_str,
                      "semigroup JSON (inline or a file path)");
  sea_hom->add_option("--threads", threads_flag);
  sea_hom->add_option("--lambda-cap", lambda_cap);

  // semigroup
  auto* smg = app.add_subcommand("semigroup", "bridge map and FS sets");
  smg->require_subcommand(0, 1);
  std::string sg_str, values_str;
  auto* smg_g = smg->add_subcommand("g", "bridge value of a constant word");
  smg_g->add_option("--word", word_str)->required();
  smg_g->add_option("--sg", sg_str)->required();
  auto* smg_fs = smg->add_subcommand("fs", "finite subsequence sums");
  smg_fs->add_option("--values", values_str)->required();
  smg_fs->add_option("--sg", sg_str)->required();
  smg_fs->add_option("--lambda-cap", lambda_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err{{"error", "usage"}, {"detail", e.what()}};
    return emit(err, RunConfig{}, 64);
  }

  RunConfig cfg;
  try {
    cfg = load_config(config_path);

    json out;
    if (sch_member->parsed()) {
      Ordinal xi = parse_xi_guarded(xi_str, cfg);
      out["member"] = schreier::member(xi, parse_set(set_str));
    } else if (sch_decomp->parsed()) {
      Ordinal xi = parse_xi_guarded(xi_str, cfg);
      auto d = schreier::canonical_decomposition(xi, parse_set(seq_str));
      json blocks = json::array();
      for (const auto& b : d.blocks) blocks.push_back(set_to_json(b));
      out["blocks"] = std::move(blocks);
      out["remainder"] = set_to_json(d.remainder);
    } else if (sch_audit->parsed()) {
      Ordinal xi = parse_xi_guarded(xi_str, cfg);
      auto rep = schreier::thinness_audit(xi, bound);
      out["sets_checked"] = rep.sets_checked;
      json viols = json::array();
      for (const auto& [mem, pre] : rep.violations)
        viols.push_back(json::array({set_to_json(mem), set_to_json(pre)}));
      out["violations"] = std::move(viols);
    } else if (wrd_tp->parsed()) {
      auto w = json_io::word_from_json(parse_json(word_str));
      out = json_io::word_to_json(words::t_p(w, p, pick_k(k_str, cfg)));
    } else if (wrd_plus->parsed()) {
      auto l = json_io::word_from_json(parse_json(left_str));
      auto r = json_io::word_from_json(parse_json(right_str));
      out = json_io::word_to_json(words::plus(l, r));
    } else if (wrd_concat->parsed()) {
      auto l = json_io::word_from_json(parse_json(left_str));
      auto r = json_io::word_from_json(parse_json(right_str));
      out = json_io::word_to_json(words::concat(l, r));
    } else if (wrd_unloc->parsed()) {
      auto w = json_io::word_from_json(parse_json(word_str));
      out = json_io::omega_to_json(words::to_unlocated(w));
    } else if (ext_ev->parsed() || ext_e->parsed()) {
      auto t = json_io::tuple_from_json(parse_json(tuple_str));
      auto k = pick_k(k_str, cfg);
      auto ws = ext_ev->parsed() ? extraction::ev(t, k) : extraction::e(t, k);
      json arr = json::array();
      for (const auto& w : ws) arr.push_back(json_io::word_to_json(w));
      out["words"] = std::move(arr);
    } else if (ext_tuples->parsed()) {
      Ordinal xi = parse_xi_guarded(xi_str, cfg);
      auto gens = json_io::tuple_from_json(parse_json(gens_str));
      std::uint64_t cap = cap_flag ? cap_flag : cfg.enum_cap;
      auto ts = extraction::enumerate_L_xi_ev(xi, gens, pick_k(k_str, cfg), cap);
      json arr = json::array();
      for (const auto& t : ts) arr.push_back(json_io::tuple_to_json(t));
      out["tuples"] = std::move(arr);
    } else if (fam_cb->parsed()) {
      auto spec = json_io::family_from_json(parse_json(spec_str));
      auto idx =
          families::strong_cb_index(spec, pick_k(k_str, cfg), cfg.step_budget);
      out["index"] = idx.format();
    } else if (fam_clo->parsed()) {
      if (star_flag == hered_flag)
        throw domain_error("closure needs exactly one of --star, --hered");
      auto spec = json_io::family_from_json(parse_json(spec_str));
      auto closed = star_flag
                        ? families::star_closure(spec)
                        : families::hered_closure(spec, pick_k(k_str, cfg));
      out = json_io::family_to_json(closed);
    } else if (fam_canon->parsed()) {
      Ordinal xi = parse_xi_guarded(xi_str, cfg);
      auto t = json_io::tuple_from_json(parse_json(tuple_str));
      auto rep = families::canonical_rep_L_xi(xi, t);
      json blocks = json::array();
      for (const auto& b : rep.blocks) blocks.push_back(json_io::tuple_to_json(b));
      out["blocks"] = std::move(blocks);
      out["remainder"] = json_io::tuple_to_json(rep.remainder);
    } else if (sea_hom->parsed()) {
      auto col_var = json_io::coloring_from_json(parse_json(cvar_str));
      auto col_const = json_io::coloring_from_json(parse_json(cconst_str));
      DominationSeq dom = pick_k(dom_str, cfg);
      search::SearchOptions opts;
      opts.threads = threads_flag ? threads_flag : cfg.threads;
      opts.universe_budget = cfg.universe_budget;
      opts.const_ends = !bridge_str.empty();
      auto t0 = std::chrono::steady_clock::now();
      auto res = search::find_homogeneous(m, big_n, dom, col_var, col_const,
                                          opts);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::fprintf(stderr, "elapsed_ms=%lld\n", static_cast<long long>(ms));
      out["found"] = res.found;
      if (res.found) {
        json ws = json::array();
        for (const auto& w : res.witness.words)
          ws.push_back(json_io::word_to_json(w));
        out["words"] = std::move(ws);
        out["i0"] = res.witness.i0;
        out["j0"] = res.witness.j0;
        if (!bridge_str.empty()) {
          auto sg = json_io::semigroup_from_json(json_or_file(bridge_str));
          out["bridge"] = search::vdw_bridge_check(res.witness.words, dom, sg,
                                                   col_const, lambda_cap);
        }
      } else {
        out["bound"] = res.bound;
      }
      out["stats"] = json{{"candidates", res.witness.candidates}};
    } else if (smg_g->parsed()) {
      auto w = json_io::word_from_json(parse_json(word_str));
      auto sg = json_io::semigroup_from_json(json_or_file(sg_str));
      out["value"] = json_io::sg_value_to_json(search::g_eval(w, sg));
    } else if (smg_fs->parsed()) {
      auto sg = json_io::semigroup_from_json(json_or_file(sg_str));
      json vals = parse_json(values_str);
      if (!vals.is_array()) throw domain_error("--values takes a JSON array");
      std::vector<SgValue> xs;
      for (const auto& v : vals) xs.push_back(json_io::sg_value_from_json(v));
      json arr = json::array();
      for (const auto& v : search::fs_set(xs, sg, lambda_cap))
        arr.push_back(json_io::sg_value_to_json(v));
      out["values"] = std::move(arr);
    } else {
      json err{{"error", "usage"}, {"detail", "missing subcommand"}};
      return emit(err, cfg, 64);
    }
    return emit(out, cfg, 0);
  } catch (const budget_error& e) {
    json err{{"error", "budget"}, {"detail", e.what()}};
    return emit(err, cfg, 3);
  } catch (const domain_error& e) {
    json err{{"error", "domain"}, {"detail", e.what()}};
    return emit(err, cfg, 2);
  } catch (const std::exception& e) {
    json err{{"error", "domain"}, {"detail", e.what()}};
    return emit(err, cfg, 2);
  }
}
