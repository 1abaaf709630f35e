#include "jja/io.hpp"

#include <fstream>

namespace jja {

namespace {

constexpr int kFormatVersion = 1;

Json scalar_list(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const auto& s : xs) out.push_back(s.str());
  return out;
}

std::vector<Scalar> parse_scalars(const Json& j, const Field& f, int expect, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != expect)
    throw ParseError(std::string(what) + ": expected " + std::to_string(expect) + " coefficients");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + ": coefficients must be strings");
    out.push_back(Scalar::parse(f, e.get<std::string>()));
  }
  return out;
}

Json vector_json(const Vector& v) { return scalar_list(v.c); }

Vector parse_vector(const Json& j, const Field& f, int dim, const char* what) {
  return Vector(f, parse_scalars(j, f, dim, what));
}

/// entries of a bilinear map as {i, j, c} triples; zero images omitted
Json bilinear_entries(const BilinearMap& m, bool upper_only) {
  Json out = Json::array();
  for (int i = 0; i < m.left_dim; ++i)
    for (int j = upper_only ? i : 0; j < m.right_dim; ++j) {
      if (m.at(i, j).is_zero()) continue;
      Json e;
      e["i"] = i;
      e["j"] = j;
      e["c"] = vector_json(m.at(i, j));
      out.push_back(std::move(e));
    }
  return out;
}

BilinearMap parse_bilinear(const Json& j, const Field& f, int l, int r, int t, bool symmetric,
                           const char* what) {
  BilinearMap m = BilinearMap::zero(f, l, r, t);
  if (j.is_null()) return m;
  if (!j.is_array()) throw ParseError(std::string(what) + ": entries must be an array");
  for (const auto& e : j) {
    if (!e.contains("i") || !e.contains("j") || !e.contains("c"))
      throw ParseError(std::string(what) + ": entry needs i, j, c");
    int i = e["i"].get<int>();
    int jj = e["j"].get<int>();
    if (i < 0 || i >= l || jj < 0 || jj >= r)
      throw ParseError(std::string(what) + ": entry (" + std::to_string(i) + "," +
                       std::to_string(jj) + ") out of range");
    if (symmetric && i > jj)
      throw ParseError(std::string(what) + ": store only i <= j entries (" + std::to_string(i) +
                       "," + std::to_string(jj) + ")");
    Vector v = parse_vector(e["c"], f, t, what);
    m.entry(i, jj) = v;
    if (symmetric && i != jj) m.entry(jj, i) = std::move(v);
  }
  return m;
}

Field field_of(const Json& j) {
  if (!j.contains("field")) throw ParseError("document lacks a field descriptor");
  return Field::parse(j["field"].get<std::string>());
}

void expect_format(const Json& j, const std::string& format) {
  if (!j.is_object()) throw ParseError("document is not an object");
  if (!j.contains("format") || j["format"].get<std::string>() != format)
    throw ParseError("expected a \"" + format + "\" document");
  if (j.contains("version") && j["version"].get<int>() > kFormatVersion)
    throw ParseError("document version is newer than this tool");
}

std::vector<std::string> parse_labels(const Json& j, int dim, const char* stem) {
  std::vector<std::string> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(e.get<std::string>());
    if (static_cast<int>(out.size()) != dim) throw ParseError("basis label count mismatch");
    return out;
  }
  for (int i = 1; i <= dim; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

void verify_or_throw(const JJAlgebra& a, const char* what) {
  Report rep = verify_jj(a);
  if (!rep.pass())
    throw PreconditionError(std::string(what) + ": axioms fail\n" + rep.summary());
}

}  // namespace

Json algebra_to_json(const JJAlgebra& a) {
  Json j;
  j["format"] = "jja.algebra";
  j["version"] = kFormatVersion;
  j["field"] = a.field.name();
  j["dim"] = a.dim;
  j["basis"] = a.basis;
  j["bracket"] = bilinear_entries(a.bracket, true);
  return j;
}

JJAlgebra algebra_from_json(const Json& j, bool verify) {
  expect_format(j, "jja.algebra");
  Field f = field_of(j);
  int dim = j.at("dim").get<int>();
  if (dim < 0) throw ParseError("negative dimension");
  BilinearMap bracket =
      parse_bilinear(j.contains("bracket") ? j["bracket"] : Json(), f, dim, dim, dim, true,
                     "bracket");
  JJAlgebra a(f, dim, std::move(bracket),
              parse_labels(j.contains("basis") ? j["basis"] : Json(), dim, "e"));
  if (verify) verify_or_throw(a, "algebra document");
  return a;
}

Json comm_assoc_to_json(const CommAssocAlgebra& b) {
  Json j;
  j["format"] = "jja.comm-assoc";
  j["version"] = kFormatVersion;
  j["field"] = b.field.name();
  j["dim"] = b.dim;
  j["basis"] = b.basis;
  j["mult"] = bilinear_entries(b.mult, true);
  return j;
}

CommAssocAlgebra comm_assoc_from_json(const Json& j, bool verify) {
  expect_format(j, "jja.comm-assoc");
  Field f = field_of(j);
  int dim = j.at("dim").get<int>();
  CommAssocAlgebra b(f, dim,
                     parse_bilinear(j.contains("mult") ? j["mult"] : Json(), f, dim, dim, dim, true,
                                    "mult"),
                     parse_labels(j.contains("basis") ? j["basis"] : Json(), dim, "f"));
  if (verify) {
    Report rep = verify_comm_assoc(b);
    if (!rep.pass()) throw PreconditionError("comm-assoc document: axioms fail\n" + rep.summary());
  }
  return b;
}

Json datum_to_json(const ExtendingDatum& d) {
  Json j;
  j["format"] = "jja.datum";
  j["version"] = kFormatVersion;
  j["algebra"] = algebra_to_json(d.algebra);
  j["vdim"] = d.vdim;
  j["vbasis"] = d.vbasis;
  j["left_act"] = bilinear_entries(d.vact, false);
  j["right_act"] = bilinear_entries(d.aact, false);
  j["cocycle"] = bilinear_entries(d.cocycle, true);
  j["brace"] = bilinear_entries(d.brace, true);
  return j;
}

ExtendingDatum datum_from_json(const Json& j, bool verify_algebra) {
  expect_format(j, "jja.datum");
  JJAlgebra a = algebra_from_json(j.at("algebra"), verify_algebra);
  int vdim = j.at("vdim").get<int>();
  if (vdim < 0) throw ParseError("negative vdim");
  const Field f = a.field;
  int n = a.dim;
  ExtendingDatum d(
      a, vdim,
      parse_bilinear(j.contains("left_act") ? j["left_act"] : Json(), f, vdim, n, vdim, false,
                     "left_act"),
      parse_bilinear(j.contains("right_act") ? j["right_act"] : Json(), f, vdim, n, n, false,
                     "right_act"),
      parse_bilinear(j.contains("cocycle") ? j["cocycle"] : Json(), f, vdim, vdim, n, true,
                     "cocycle"),
      parse_bilinear(j.contains("brace") ? j["brace"] : Json(), f, vdim, vdim, vdim, true, "brace"),
      parse_labels(j.contains("vbasis") ? j["vbasis"] : Json(), vdim, "x"));
  return d;
}

Json matched_pair_to_json(const MatchedPair& mp) {
  Json j;
  j["format"] = "jja.matched-pair";
  j["version"] = kFormatVersion;
  j["A"] = algebra_to_json(mp.a);
  j["V"] = algebra_to_json(mp.v);
  j["left_act"] = bilinear_entries(mp.vact, false);
  j["right_act"] = bilinear_entries(mp.aact, false);
  return j;
}

MatchedPair matched_pair_from_json(const Json& j, bool verify_algebras) {
  expect_format(j, "jja.matched-pair");
  JJAlgebra a = algebra_from_json(j.at("A"), verify_algebras);
  JJAlgebra v = algebra_from_json(j.at("V"), verify_algebras);
  if (a.field != v.field) throw ParseError("matched pair: fields differ");
  return MatchedPair{
      a, v,
      parse_bilinear(j.contains("left_act") ? j["left_act"] : Json(), a.field, v.dim, a.dim, v.dim,
                     false, "left_act"),
      parse_bilinear(j.contains("right_act") ? j["right_act"] : Json(), a.field, v.dim, a.dim,
                     a.dim, false, "right_act")};
}

Json crossed_to_json(const CrossedSystem& cs) {
  Json j;
  j["format"] = "jja.crossed-system";
  j["version"] = kFormatVersion;
  j["A"] = algebra_to_json(cs.a);
  j["V"] = algebra_to_json(cs.v);
  j["right_act"] = bilinear_entries(cs.aact, false);
  j["cocycle"] = bilinear_entries(cs.cocycle, true);
  return j;
}

CrossedSystem crossed_from_json(const Json& j, bool verify_algebras) {
  expect_format(j, "jja.crossed-system");
  JJAlgebra a = algebra_from_json(j.at("A"), verify_algebras);
  JJAlgebra v = algebra_from_json(j.at("V"), verify_algebras);
  if (a.field != v.field) throw ParseError("crossed system: fields differ");
  return CrossedSystem{
      a, v,
      parse_bilinear(j.contains("right_act") ? j["right_act"] : Json(), a.field, v.dim, a.dim,
                     a.dim, false, "right_act"),
      parse_bilinear(j.contains("cocycle") ? j["cocycle"] : Json(), a.field, v.dim, v.dim, a.dim,
                     true, "cocycle")};
}

Json skew_to_json(const SkewCrossedSystem& scs) {
  Json j;
  j["format"] = "jja.skew-system";
  j["version"] = kFormatVersion;
  j["algebra"] = algebra_to_json(scs.a);
  j["vdim"] = scs.vdim;
  j["left_act"] = bilinear_entries(scs.vact, false);
  j["cocycle"] = bilinear_entries(scs.cocycle, true);
  j["brace"] = bilinear_entries(scs.brace, true);
  return j;
}

SkewCrossedSystem skew_from_json(const Json& j, bool verify_algebra) {
  expect_format(j, "jja.skew-system");
  JJAlgebra a = algebra_from_json(j.at("algebra"), verify_algebra);
  int vdim = j.at("vdim").get<int>();
  const Field f = a.field;
  return SkewCrossedSystem{
      a, vdim,
      parse_bilinear(j.contains("left_act") ? j["left_act"] : Json(), f, vdim, a.dim, vdim, false,
                     "left_act"),
      parse_bilinear(j.contains("cocycle") ? j["cocycle"] : Json(), f, vdim, vdim, a.dim, true,
                     "cocycle"),
      parse_bilinear(j.contains("brace") ? j["brace"] : Json(), f, vdim, vdim, vdim, true,
                     "brace")};
}

Json matrix_to_json(const LinearMap& m) {
  Json cols = Json::array();
  for (int j = 0; j < m.cols; ++j) cols.push_back(vector_json(m.column(j)));
  Json out;
  out["rows"] = m.rows;
  out["cols"] = cols;
  return out;
}

LinearMap matrix_from_json(const Json& j, const Field& f) {
  if (!j.is_object() || !j.contains("cols")) throw ParseError("matrix: expected {rows, cols}");
  int rows = j.contains("rows") ? j["rows"].get<int>() : -1;
  const Json& cols = j["cols"];
  if (!cols.is_array()) throw ParseError("matrix: cols must be an array of columns");
  std::vector<Vector> columns;
  for (const auto& col : cols) {
    int r = rows >= 0 ? rows : static_cast<int>(col.size());
    columns.push_back(parse_vector(col, f, r, "matrix column"));
    rows = columns.back().dim();
  }
  if (columns.empty()) {
    if (rows < 0) throw ParseError("matrix: empty matrix needs rows");
    return LinearMap(f, rows, 0);
  }
  return LinearMap::from_columns(f, columns);
}

Json supersolvable_to_json(const JJAlgebra& a, const SupersolvableDatum& sd) {
  Json j;
  j["format"] = "jja.supersolvable-datum";
  j["version"] = kFormatVersion;
  j["algebra"] = algebra_to_json(a);
  j["D"] = matrix_to_json(sd.d);
  j["a0"] = vector_json(sd.a0);
  return j;
}

std::pair<JJAlgebra, SupersolvableDatum> supersolvable_from_json(const Json& j,
                                                                 bool verify_algebra) {
  expect_format(j, "jja.supersolvable-datum");
  JJAlgebra a = algebra_from_json(j.at("algebra"), verify_algebra);
  LinearMap d = matrix_from_json(j.at("D"), a.field);
  if (d.rows != a.dim || d.cols != a.dim) throw ParseError("supersolvable datum: D shape");
  Vector a0 = parse_vector(j.at("a0"), a.field, a.dim, "a0");
  return {std::move(a), SupersolvableDatum{std::move(d), std::move(a0)}};
}

Json flag_to_json(const FlagDatum& fd) {
  Json j;
  j["format"] = "jja.flag-datum";
  j["version"] = kFormatVersion;
  j["algebra"] = algebra_to_json(fd.algebra);
  j["D"] = matrix_to_json(fd.d);
  j["lambda"] = scalar_list(fd.lambda.coeffs);
  j["a0"] = vector_json(fd.a0);
  j["alpha0"] = fd.alpha0.str();
  return j;
}

FlagDatum flag_from_json(const Json& j, bool verify_algebra) {
  expect_format(j, "jja.flag-datum");
  JJAlgebra a = algebra_from_json(j.at("algebra"), verify_algebra);
  const Field f = a.field;
  LinearMap d = matrix_from_json(j.at("D"), f);
  if (d.rows != a.dim || d.cols != a.dim) throw ParseError("flag datum: D shape");
  LinearFunctional lambda(f, parse_scalars(j.at("lambda"), f, a.dim, "lambda"));
  Vector a0 = parse_vector(j.at("a0"), f, a.dim, "a0");
  Scalar alpha0 = Scalar::parse(f, j.at("alpha0").get<std::string>());
  return FlagDatum{std::move(a), std::move(d), std::move(lambda), std::move(a0), alpha0};
}

Json action_to_json(const GroupAction& action) {
  Json j;
  j["format"] = "jja.action";
  j["version"] = kFormatVersion;
  j["algebra"] = algebra_to_json(action.algebra);
  Json els = Json::array();
  for (const auto& g : action.elements) els.push_back(matrix_to_json(g));
  j["elements"] = els;
  return j;
}

GroupAction action_from_json(const Json& j, bool verify_algebra, const Budget& budget) {
  expect_format(j, "jja.action");
  JJAlgebra a = algebra_from_json(j.at("algebra"), verify_algebra);
  std::vector<LinearMap> gens;
  for (const auto& e : j.at("elements")) {
    LinearMap g = matrix_from_json(e, a.field);
    if (g.rows != a.dim || g.cols != a.dim) throw ParseError("action element shape");
    gens.push_back(std::move(g));
  }
  return GroupAction::generate(a, gens, budget);
}

Json galois_pair_to_json(const MatchedPair& mp, const GaloisPair& gp) {
  Json j;
  j["format"] = "jja.galois-pair";
  j["version"] = kFormatVersion;
  j["pair"] = matched_pair_to_json(mp);
  j["sigma"] = matrix_to_json(gp.sigma);
  j["r"] = matrix_to_json(gp.r);
  return j;
}

std::pair<MatchedPair, GaloisPair> galois_pair_from_json(const Json& j, bool verify_algebras) {
  expect_format(j, "jja.galois-pair");
  MatchedPair mp = matched_pair_from_json(j.at("pair"), verify_algebras);
  LinearMap sigma = matrix_from_json(j.at("sigma"), mp.a.field);
  LinearMap r = matrix_from_json(j.at("r"), mp.a.field);
  if (sigma.rows != mp.v.dim || sigma.cols != mp.v.dim) throw ParseError("galois pair: sigma shape");
  if (r.rows != mp.a.dim || r.cols != mp.v.dim) throw ParseError("galois pair: r shape");
  return {std::move(mp), GaloisPair{std::move(sigma), std::move(r)}};
}

Json report_to_json(const Report& rep) {
  Json out;
  out["pass"] = rep.pass();
  Json conds = Json::array();
  for (const auto& c : rep.conditions) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass();
    Json ws = Json::array();
    for (const auto& w : c.failures) {
      Json jw;
      jw["indices"] = w.indices;
      if (!w.note.empty()) jw["note"] = w.note;
      ws.push_back(std::move(jw));
    }
    jc["witnesses"] = ws;
    conds.push_back(std::move(jc));
  }
  out["conditions"] = conds;
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

JJAlgebra algebra_to_field(const JJAlgebra& a, const Field& target) {
  if (a.field == target) return a;
  if (a.field != Field::rationals())
    throw PreconditionError("algebra_to_field: only rational documents can be reinterpreted");
  BilinearMap t = BilinearMap::zero(target, a.dim, a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vector v = Vector::zero(target, a.dim);
      for (int m = 0; m < a.dim; ++m) {
        const mpq_class& q = a.bracket.at(i, j).c[m].rational();
        if (q.get_den() != 1)
          throw PreconditionError("algebra_to_field: non-integral entry " + q.get_str());
        v.c[m] = Scalar::of(target, q);
      }
      t.entry(i, j) = std::move(v);
    }
  return JJAlgebra(target, a.dim, std::move(t), a.basis);
}

}  // namespace jja
