// Command-line front end: verification, products, checkers, enumeration and
// classification over exact fields, reading and writing the JSON interchange
// documents described in the README.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "jja/io.hpp"

using namespace jja;

namespace {

// exit codes: 0 pass, 1 verification failure, 2 input error, 3 budget exceeded
constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct Context {
  std::string output = "text";  // text | json
  Budget budget;
  int jobs = 1;
  std::uint64_t seed = 0;  // reserved for sampled modes; current commands are exhaustive
  std::optional<std::string> field;
  std::optional<std::string> out_path;
  bool unchecked = false;

  bool json() const { return output == "json"; }
};

void emit(const Context& ctx, const Json& j, const std::string& text) {
  if (ctx.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void maybe_save(const Context& ctx, const Json& doc) {
  if (ctx.out_path) save_json(*ctx.out_path, doc);
}

JJAlgebra load_algebra(const Context& ctx, const std::string& path, bool verify = true) {
  JJAlgebra a = algebra_from_json(load_json(path), !ctx.unchecked && verify);
  if (ctx.field) a = algebra_to_field(a, Field::parse(*ctx.field));
  return a;
}

std::string render_matrix(const LinearMap& m) { return m.str(); }

std::string render_flag(const FlagDatum& fd) {
  std::string s = "D=" + fd.d.str() + " lambda=(";
  for (int i = 0; i < fd.lambda.dim(); ++i)
    s += (i ? "," : "") + fd.lambda.at(i).str();
  s += ") a0=" + fd.a0.str() + " alpha0=" + fd.alpha0.str();
  return s;
}

int report_result(const Context& ctx, const std::string& command, const Report& rep,
                  Json extra = Json::object()) {
  Json j;
  j["command"] = command;
  j["report"] = report_to_json(rep);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(ctx, j, rep.summary());
  return rep.pass() ? kExitPass : kExitCheckFailed;
}

int emit_product(const Context& ctx, const std::string& kind, const Report& checker,
                 const JJAlgebra* algebra) {
  Json j;
  j["command"] = "product " + kind;
  j["check"] = report_to_json(checker);
  std::string text = checker.summary();
  if (!checker.pass()) {
    emit(ctx, j, text + "invalid input system\n");
    return kExitCheckFailed;
  }
  Report axioms = verify_jj(*algebra);
  j["algebra"] = algebra_to_json(*algebra);
  j["verify"] = report_to_json(axioms);
  text += "dim " + std::to_string(algebra->dim) + " over " + algebra->field.name() + "\n" +
          axioms.summary();
  emit(ctx, j, text);
  maybe_save(ctx, algebra_to_json(*algebra));
  return axioms.pass() ? kExitPass : kExitCheckFailed;
}

LinearMap load_matrix(const std::string& path, const Field& f) {
  return matrix_from_json(load_json(path), f);
}

std::vector<Vector> matrix_columns(const LinearMap& m) {
  std::vector<Vector> cols;
  for (int j = 0; j < m.cols; ++j) cols.push_back(m.column(j));
  return cols;
}

int run(int argc, char** argv) {
  CLI::App app{"exact constructions and classification for Jacobi-Jordan algebras"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--output", ctx.output, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", ctx.budget.limit, "candidate cap for exhaustive searches");
  app.add_option("--jobs", ctx.jobs, "worker threads for enumeration stages");
  app.add_option("--seed", ctx.seed,
                 "seed reserved for sampled modes (current commands are exhaustive)");
  std::string field_opt;
  auto* field_flag = app.add_option("--field", field_opt,
                                    "reinterpret rational documents over F<p> (e.g. F5)");
  app.add_flag("--unchecked", ctx.unchecked, "skip axiom validation when loading algebras");
  std::string out_path;
  auto* out_flag = app.add_option("-o,--out", out_path, "write the main output document here");

  // verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check the JJ axioms of an algebra document");
  std::string verify_path;
  verify->add_option("algebra", verify_path)->required();

  // product ------------------------------------------------------------
  auto* product = app.add_subcommand("product", "build a product algebra");
  product->require_subcommand(1);
  std::string product_input, product_input2;
  auto* p_unified = product->add_subcommand("unified", "from an extending datum document");
  p_unified->add_option("datum", product_input)->required();
  auto* p_bicrossed = product->add_subcommand("bicrossed", "from a matched pair document");
  p_bicrossed->add_option("pair", product_input)->required();
  auto* p_crossed = product->add_subcommand("crossed", "from a crossed system document");
  p_crossed->add_option("system", product_input)->required();
  auto* p_skew = product->add_subcommand("skew", "from a skew crossed system document");
  p_skew->add_option("system", product_input)->required();
  auto* p_semidirect = product->add_subcommand("semidirect",
                                               "from a matched pair document with trivial left action");
  p_semidirect->add_option("pair", product_input)->required();
  auto* p_flag = product->add_subcommand("flag", "from a flag datum document");
  p_flag->add_option("datum", product_input)->required();

  // check ----------------------------------------------------------------
  auto* check = app.add_subcommand("check", "run a condition checker, witnesses included");
  check->require_subcommand(1);
  std::string check_input;
  for (const char* name : {"datum", "matched", "crossed", "skew", "supersolvable", "flag",
                           "galois-pair"})
    check->add_subcommand(name)->add_option("input", check_input)->required();

  // canonical-datum -------------------------------------------------------
  auto* canon = app.add_subcommand("canonical-datum",
                                   "datum of a subalgebra along a retraction");
  std::string canon_e, canon_basis, canon_proj;
  canon->add_option("algebra", canon_e)->required();
  canon->add_option("subalgebra", canon_basis, "matrix document: columns span A")->required();
  canon->add_option("--projection", canon_proj, "matrix document: a retraction onto A");

  // enumerate --------------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive enumeration");
  enumerate->require_subcommand(1);
  std::string enum_input;
  bool enum_naive_check = false;
  auto* e_flag = enumerate->add_subcommand("flag", "all flag data of an algebra over F_p");
  e_flag->add_option("algebra", enum_input)->required();
  e_flag->add_flag("--naive-check", enum_naive_check,
                   "cross-check against the raw quadruple scan");

  // classify -----------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "orbit classification");
  classify->require_subcommand(1);
  std::string classify_input;
  int classify_dim = 0;
  auto* c_h2 = classify->add_subcommand("h2", "codimension-1 classes of an algebra over F_p");
  c_h2->add_option("algebra", classify_input)->required();
  auto* c_all = classify->add_subcommand("all", "representatives dimension by dimension");
  c_all->add_option("--dim", classify_dim, "target dimension")->required();

  // galois --------------------------------------------------------------------
  auto* galois = app.add_subcommand("galois", "automorphisms of a bicrossed extension fixing A");
  std::string galois_input;
  galois->add_option("pair", galois_input)->required();

  // artin ----------------------------------------------------------------------
  auto* artin = app.add_subcommand("artin", "invariants, trace and reconstruction for an action");
  std::string artin_alg, artin_action;
  artin->add_option("algebra", artin_alg)->required();
  artin->add_option("action", artin_action)->required();

  // global options may follow the subcommand words
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }
  if (*field_flag) ctx.field = field_opt;
  if (*out_flag) ctx.out_path = out_path;

  if (*verify) {
    JJAlgebra a = load_algebra(ctx, verify_path, false);
    return report_result(ctx, "verify", verify_jj(a));
  }

  if (*product) {
    if (*p_unified) {
      ExtendingDatum d = datum_from_json(load_json(product_input), !ctx.unchecked);
      JJAlgebra prod = unified_product(d);
      return emit_product(ctx, "unified", check_extending(d), &prod);
    }
    if (*p_bicrossed || *p_semidirect) {
      MatchedPair mp = matched_pair_from_json(load_json(product_input), !ctx.unchecked);
      if (*p_semidirect && !mp.vact.is_zero())
        throw PreconditionError("semidirect product: left action must be trivial");
      Report rep = check_matched_pair(mp);
      if (!rep.pass()) return emit_product(ctx, *p_bicrossed ? "bicrossed" : "semidirect", rep, nullptr);
      JJAlgebra prod = unified_product(induced_datum(mp));
      return emit_product(ctx, *p_bicrossed ? "bicrossed" : "semidirect", rep, &prod);
    }
    if (*p_crossed) {
      CrossedSystem cs = crossed_from_json(load_json(product_input), !ctx.unchecked);
      Report rep = check_crossed_system(cs);
      if (!rep.pass()) return emit_product(ctx, "crossed", rep, nullptr);
      JJAlgebra prod = unified_product(induced_datum(cs));
      return emit_product(ctx, "crossed", rep, &prod);
    }
    if (*p_skew) {
      SkewCrossedSystem scs = skew_from_json(load_json(product_input), !ctx.unchecked);
      Report rep = check_skew_crossed(scs);
      if (!rep.pass()) return emit_product(ctx, "skew", rep, nullptr);
      JJAlgebra prod = unified_product(induced_datum(scs));
      return emit_product(ctx, "skew", rep, &prod);
    }
    if (*p_flag) {
      FlagDatum fd = flag_from_json(load_json(product_input), !ctx.unchecked);
      JJAlgebra prod = flag_extension(fd);
      return emit_product(ctx, "flag", check_flag_datum(fd), &prod);
    }
  }

  if (*check) {
    const Json j = load_json(check_input);
    if (check->get_subcommand("datum")->parsed())
      return report_result(ctx, "check datum", check_extending(datum_from_json(j, !ctx.unchecked)));
    if (check->get_subcommand("matched")->parsed())
      return report_result(ctx, "check matched",
                           check_matched_pair(matched_pair_from_json(j, !ctx.unchecked)));
    if (check->get_subcommand("crossed")->parsed())
      return report_result(ctx, "check crossed",
                           check_crossed_system(crossed_from_json(j, !ctx.unchecked)));
    if (check->get_subcommand("skew")->parsed())
      return report_result(ctx, "check skew", check_skew_crossed(skew_from_json(j, !ctx.unchecked)));
    if (check->get_subcommand("supersolvable")->parsed()) {
      auto [alg, sd] = supersolvable_from_json(j, !ctx.unchecked);
      return report_result(ctx, "check supersolvable",
                           check_supersolvable_datum(alg, sd.d, sd.a0));
    }
    if (check->get_subcommand("flag")->parsed())
      return report_result(ctx, "check flag", check_flag_datum(flag_from_json(j, !ctx.unchecked)));
    if (check->get_subcommand("galois-pair")->parsed()) {
      auto [mp, gp] = galois_pair_from_json(j, !ctx.unchecked);
      return report_result(ctx, "check galois-pair", check_galois_pair(mp, gp));
    }
  }

  if (*canon) {
    JJAlgebra e = load_algebra(ctx, canon_e);
    LinearMap basis_mat = load_matrix(canon_basis, e.field);
    std::vector<Vector> a_basis = matrix_columns(basis_mat);
    LinearMap p = canon_proj.empty()
                      ? projection_from_complement(e, a_basis, extend_to_complement(e, a_basis))
                      : load_matrix(canon_proj, e.field);
    CanonicalDatum cd = canonical_datum(e, a_basis, p);
    Json j;
    j["command"] = "canonical-datum";
    j["datum"] = datum_to_json(cd.datum);
    j["phi"] = matrix_to_json(cd.phi);
    j["check"] = report_to_json(check_extending(cd.datum));
    emit(ctx, j,
         "datum over V = ker p, vdim " + std::to_string(cd.datum.vdim) + "\nphi " +
             render_matrix(cd.phi) + "\n");
    maybe_save(ctx, datum_to_json(cd.datum));
    return kExitPass;
  }

  if (*enumerate) {
    JJAlgebra a = load_algebra(ctx, enum_input);
    FlagEnumeration fe = enumerate_flag_data(a, ctx.budget);
    bool naive_match = true;
    if (enum_naive_check) {
      auto naive = enumerate_flag_data_naive(a, ctx.budget);
      naive_match = naive.size() == fe.data.size();
      for (size_t i = 0; naive_match && i < naive.size(); ++i)
        naive_match = naive[i] == fe.data[i];
    }
    Json j;
    j["command"] = "enumerate flag";
    j["count"] = fe.data.size();
    j["stages"] = {{"lambda_candidates", fe.lambda_candidates},
                   {"d_candidates", fe.d_candidates},
                   {"a0_candidates", fe.a0_candidates}};
    Json items = Json::array();
    for (const auto& fd : fe.data) items.push_back(flag_to_json(fd));
    j["data"] = items;
    if (enum_naive_check) j["naive_check"] = naive_match;
    std::string text = "flag data: " + std::to_string(fe.data.size()) + "\n";
    for (const auto& fd : fe.data) text += "  " + render_flag(fd) + "\n";
    if (enum_naive_check)
      text += std::string("naive cross-check: ") + (naive_match ? "match" : "MISMATCH") + "\n";
    emit(ctx, j, text);
    return naive_match ? kExitPass : kExitCheckFailed;
  }

  if (*classify) {
    if (c_h2->parsed()) {
      JJAlgebra a = load_algebra(ctx, classify_input);
      H2Result res = classify_h2_codim1(a, ctx.budget, ctx.jobs);
      Json j;
      j["command"] = "classify h2";
      j["data_count"] = res.data.size();
      j["orbit_count"] = res.orbits.size();
      Json orbits = Json::array();
      for (const auto& o : res.orbits) {
        Json jo;
        jo["size"] = o.size();
        jo["representative"] = flag_to_json(res.data[o[0]]);
        orbits.push_back(std::move(jo));
      }
      j["orbits"] = orbits;
      j["certificates"] = {{"transports_applied", res.transports_applied},
                           {"exhaustive", res.exhaustive}};
      std::string text = std::to_string(res.data.size()) + " flag data in " +
                         std::to_string(res.orbits.size()) + " classes\n";
      for (size_t k = 0; k < res.orbits.size(); ++k)
        text += "  class " + std::to_string(k) + " size " + std::to_string(res.orbits[k].size()) +
                ": " + render_flag(res.representative(static_cast<int>(k))) + "\n";
      text += "transports applied: " + std::to_string(res.transports_applied) + " (exhaustive)\n";
      emit(ctx, j, text);
      return kExitPass;
    }
    if (c_all->parsed()) {
      if (!ctx.field) throw PreconditionError("classify all: --field F<p> is required");
      Field f = Field::parse(*ctx.field);
      ClassifyAllResult res = recursive_classify(f, classify_dim, ctx.budget, ctx.jobs);
      Json j;
      j["command"] = "classify all";
      j["field"] = f.name();
      j["complete"] = res.complete;
      if (!res.complete) j["caveat"] = res.caveat;
      Json dims = Json::array();
      for (const auto& reps : res.by_dim) {
        Json lvl = Json::array();
        for (const auto& a : reps) lvl.push_back(algebra_to_json(a));
        dims.push_back(std::move(lvl));
      }
      j["by_dim"] = dims;
      std::string text;
      if (!res.complete) text += "NOTE: " + res.caveat + "\n";
      for (size_t d = 0; d < res.by_dim.size(); ++d)
        text += "dim " + std::to_string(d) + ": " + std::to_string(res.by_dim[d].size()) +
                " algebra(s)\n";
      emit(ctx, j, text);
      return kExitPass;
    }
  }

  if (*galois) {
    MatchedPair mp = matched_pair_from_json(load_json(galois_input), !ctx.unchecked);
    GaloisGroup g = enumerate_galois_group(mp, ctx.budget);
    Json j;
    j["command"] = "galois";
    j["order"] = g.order();
    j["identity"] = g.identity;
    Json els = Json::array();
    for (const auto& e : g.elements) {
      Json je;
      je["sigma"] = matrix_to_json(e.sigma);
      je["r"] = matrix_to_json(e.r);
      els.push_back(std::move(je));
    }
    j["elements"] = els;
    j["table"] = g.table;
    j["table_validated"] = true;  // enumerate_galois_group throws otherwise
    std::string text = "galois group order " + std::to_string(g.order()) +
                       "\ncomposition table validated (closure, identity, inverses, block maps)\n";
    emit(ctx, j, text);
    return kExitPass;
  }

  if (*artin) {
    JJAlgebra a = load_algebra(ctx, artin_alg);
    Json jact = load_json(artin_action);
    // the action document may embed its own algebra copy; require consistency
    GroupAction action = [&] {
      if (jact.contains("algebra")) {
        GroupAction parsed = action_from_json(jact, !ctx.unchecked, ctx.budget);
        if (!(parsed.algebra == a))
          throw PreconditionError("artin: action document algebra differs from the given algebra");
        return parsed;
      }
      std::vector<LinearMap> gens;
      for (const auto& e : jact.at("elements")) gens.push_back(matrix_from_json(e, a.field));
      return GroupAction::generate(a, gens, ctx.budget);
    }();
    ArtinResult res = artin_reconstruct(action);
    JJAlgebra rebuilt = skew_crossed_product(res.system);
    Report iso = is_morphism(rebuilt, a, res.theta);
    bool ok = iso.pass() && res.theta.invertible();
    Json j;
    j["command"] = "artin";
    j["group_order"] = action.order();
    Json inv = Json::array();
    for (const auto& v : res.trace.invariant_basis) {
      Json coords = Json::array();
      for (const auto& s : v.c) coords.push_back(s.str());
      inv.push_back(std::move(coords));
    }
    j["invariant_basis"] = inv;
    j["trace"] = matrix_to_json(res.trace.trace);
    j["system"] = skew_to_json(res.system);
    j["theta"] = matrix_to_json(res.theta);
    j["reconstruction"] = ok ? "pass" : "fail";
    std::string text = "invariants: dim " + std::to_string(res.trace.invariant_basis.size()) +
                       "\ntrace " + render_matrix(res.trace.trace) + "\nreconstruction: " +
                       (ok ? "pass" : "FAIL") + "\n";
    emit(ctx, j, text);
    maybe_save(ctx, skew_to_json(res.system));
    return ok ? kExitPass : kExitCheckFailed;
  }

  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
