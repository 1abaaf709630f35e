#include "jja/galois.hpp"

#include <map>

namespace jja {

namespace {

void throw_if_failing(const Report& rep, const char* what) {
  if (!rep.pass()) throw PreconditionError(std::string(what) + ":\n" + rep.summary());
}

std::string matrix_key(const LinearMap& m) { return m.str(); }

}  // namespace

Report check_galois_pair(const MatchedPair& mp, const GaloisPair& pair, const CheckOptions& opts) {
  const JJAlgebra& A = mp.a;
  const JJAlgebra& V = mp.v;
  int n = A.dim, m = V.dim;
  const LinearMap& sg = pair.sigma;
  const LinearMap& r = pair.r;
  if (sg.rows != m || sg.cols != m || r.rows != n || r.cols != m)
    throw DimensionMismatch("check_galois_pair: pair shape");
  if (!sg.invertible()) throw PreconditionError("check_galois_pair: sigma is singular");
  Report rep;
  {
    ConditionSink sink(rep.add("G1"), opts);
    for (int x = 0; x < m; ++x)
      for (int i = 0; i < n; ++i) {
        Vector lhs = mp.vact.apply_right_basis(sg.column(x), i);
        Vector rhs = sg.apply(mp.vact.at(x, i));
        if (lhs != rhs)
          if (!sink.fail({x, i})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("G2"), opts);
    for (int x = 0; x < m; ++x)
      for (int i = 0; i < n; ++i) {
        Vector lhs = mp.aact.apply_right_basis(sg.column(x), i);
        Vector rhs = r.apply(mp.vact.at(x, i)) + mp.aact.at(x, i) -
                     A.bracket.apply_left_basis(i, r.column(x));
        if (lhs != rhs)
          if (!sink.fail({x, i})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("G3"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y) {
        Vector lhs = sg.apply(V.bracket_at(x, y));
        Vector rhs = V.bracket.apply(sg.column(x), sg.column(y));
        rhs = rhs + mp.vact.apply(sg.column(x), r.column(y));
        rhs = rhs + mp.vact.apply(sg.column(y), r.column(x));
        if (lhs != rhs)
          if (!sink.fail({x, y})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("G4"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y) {
        Vector lhs = r.apply(V.bracket_at(x, y));
        Vector rhs = A.bracket_of(r.column(x), r.column(y));
        rhs = rhs + mp.aact.apply(sg.column(x), r.column(y));
        rhs = rhs + mp.aact.apply(sg.column(y), r.column(x));
        if (lhs != rhs)
          if (!sink.fail({x, y})) return rep;
      }
  }
  return rep;
}

LinearMap galois_automorphism_matrix(const MatchedPair& mp, const GaloisPair& pair) {
  int n = mp.a.dim, m = mp.v.dim;
  LinearMap psi = LinearMap::identity(mp.a.field, n + m);
  for (int x = 0; x < m; ++x) {
    for (int i = 0; i < n; ++i) psi.at(i, n + x) = pair.r.at(i, x);
    for (int y = 0; y < m; ++y) psi.at(n + y, n + x) = pair.sigma.at(y, x);
  }
  return psi;
}

GaloisPair compose_pairs(const GaloisPair& g, const GaloisPair& h) {
  // (sigma, r) . (sigma', r') = (sigma o sigma', r o sigma' + r')
  return GaloisPair{g.sigma.compose(h.sigma), g.r.compose(h.sigma) + h.r};
}

GaloisPair inverse_pair(const GaloisPair& g) {
  auto si = g.sigma.inverse();
  if (!si) throw PreconditionError("inverse_pair: sigma is singular");
  LinearMap r_inv = g.r.compose(*si).scaled(-Scalar::one(g.r.field));
  return GaloisPair{*si, std::move(r_inv)};
}

GaloisGroup enumerate_galois_group(const MatchedPair& mp, const Budget& budget) {
  throw_if_failing(check_matched_pair(mp), "enumerate_galois_group: invalid matched pair");
  const Field& f = mp.a.field;
  if (!f.finite()) throw PreconditionError("enumerate_galois_group: needs a finite field");
  int n = mp.a.dim, m = mp.v.dim;

  MatrixRange rmaps(f, n, m);
  MatrixRange smaps(f, m, m);
  if (rmaps.size() > 0 && smaps.size() > UINT64_MAX / rmaps.size())
    throw BudgetExceeded("enumerate_galois_group: candidate space overflows");
  budget.require(rmaps.size() * smaps.size(), "enumerate_galois_group");

  GaloisGroup grp;
  grp.pair = mp;
  CheckOptions quick;
  quick.early_exit = true;
  quick.max_witnesses = 0;

  LinearMap sg(f, m, m), r(f, n, m);
  for (std::uint64_t ks = 0; ks < smaps.size(); ++ks) {
    smaps.fill(ks, sg);
    if (!sg.invertible()) continue;
    for (std::uint64_t kr = 0; kr < rmaps.size(); ++kr) {
      rmaps.fill(kr, r);
      GaloisPair cand{sg, r};
      if (check_galois_pair(mp, cand, quick).pass()) grp.elements.push_back(std::move(cand));
    }
  }

  // index by matrix content for the table
  std::map<std::string, int> index;
  for (size_t i = 0; i < grp.elements.size(); ++i)
    index[matrix_key(grp.elements[i].sigma) + "|" + matrix_key(grp.elements[i].r)] =
        static_cast<int>(i);

  auto find = [&](const GaloisPair& g) {
    auto it = index.find(matrix_key(g.sigma) + "|" + matrix_key(g.r));
    return it == index.end() ? -1 : it->second;
  };

  GaloisPair id{LinearMap::identity(f, m), LinearMap::zero(f, n, m)};
  grp.identity = find(id);
  if (grp.identity < 0)
    throw PreconditionError("enumerate_galois_group: identity pair missing from the filtered set");

  size_t g_count = grp.elements.size();
  grp.table.assign(g_count, std::vector<int>(g_count, -1));
  grp.inverse.assign(g_count, -1);
  for (size_t i = 0; i < g_count; ++i)
    for (size_t j = 0; j < g_count; ++j) {
      int k = find(compose_pairs(grp.elements[i], grp.elements[j]));
      if (k < 0)
        throw PreconditionError("enumerate_galois_group: set not closed under the pair law");
      grp.table[i][j] = k;
      if (k == grp.identity && grp.inverse[i] < 0) grp.inverse[i] = static_cast<int>(j);
    }
  for (size_t i = 0; i < g_count; ++i)
    if (grp.inverse[i] < 0)
      throw PreconditionError("enumerate_galois_group: element without inverse");

  // the induced block maps must be automorphisms of the product fixing A,
  // and the matrix composition must realize the table
  JJAlgebra prod = unified_product(induced_datum(mp));
  std::vector<LinearMap> mats;
  mats.reserve(g_count);
  for (const auto& g : grp.elements) {
    LinearMap psi = galois_automorphism_matrix(mp, g);
    if (!psi.invertible())
      throw PreconditionError("enumerate_galois_group: induced map not invertible");
    if (!is_morphism(prod, prod, psi, quick).pass())
      throw PreconditionError("enumerate_galois_group: induced map is not an automorphism");
    for (int i = 0; i < n; ++i)
      if (psi.column(i) != Vector::unit(f, n + m, i))
        throw PreconditionError("enumerate_galois_group: induced map moves A");
    mats.push_back(std::move(psi));
  }
  for (size_t i = 0; i < g_count; ++i)
    for (size_t j = 0; j < g_count; ++j)
      if (mats[i].compose(mats[j]) != mats[grp.table[i][j]])
        throw PreconditionError("enumerate_galois_group: matrix composition deviates from the table");

  return grp;
}

std::vector<LinearMap> stabilizer_automorphisms(const JJAlgebra& e, int adim, const Budget& budget) {
  if (!e.field.finite()) throw PreconditionError("stabilizer_automorphisms: needs a finite field");
  int n = e.dim, m = n - adim;
  if (m < 0) throw DimensionMismatch("stabilizer_automorphisms: adim too large");
  MatrixRange images(e.field, n, m);  // free images of the non-A basis vectors
  budget.require(images.size(), "stabilizer_automorphisms");

  std::vector<LinearMap> out;
  CheckOptions quick;
  quick.early_exit = true;
  quick.max_witnesses = 0;
  LinearMap block(e.field, n, m);
  for (std::uint64_t k = 0; k < images.size(); ++k) {
    images.fill(k, block);
    LinearMap psi = LinearMap::identity(e.field, n);
    for (int x = 0; x < m; ++x)
      for (int i = 0; i < n; ++i) psi.at(i, adim + x) = block.at(i, x);
    if (!psi.invertible()) continue;
    if (!is_morphism(e, e, psi, quick).pass()) continue;
    out.push_back(std::move(psi));
  }
  return out;
}

GroupAction GroupAction::generate(const JJAlgebra& a, const std::vector<LinearMap>& generators,
                                  const Budget& budget) {
  GroupAction act;
  act.algebra = a;
  CheckOptions quick;
  quick.early_exit = true;
  quick.max_witnesses = 0;

  std::map<std::string, int> index;
  auto add = [&](const LinearMap& g) -> int {
    std::string key = matrix_key(g);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (!g.invertible()) throw PreconditionError("GroupAction: element not invertible");
    if (!is_morphism(a, a, g, quick).pass())
      throw PreconditionError("GroupAction: element is not an automorphism");
    int id = static_cast<int>(act.elements.size());
    budget.require(id + 1, "GroupAction closure");
    act.elements.push_back(g);
    index[key] = id;
    return id;
  };

  add(LinearMap::identity(a.field, a.dim));
  for (const auto& g : generators) add(g);
  // close under products
  for (size_t i = 0; i < act.elements.size(); ++i)
    for (size_t j = 0; j < act.elements.size(); ++j) add(act.elements[i].compose(act.elements[j]));

  size_t g_count = act.elements.size();
  act.identity = 0;
  act.table.assign(g_count, std::vector<int>(g_count, -1));
  act.inverse.assign(g_count, -1);
  for (size_t i = 0; i < g_count; ++i)
    for (size_t j = 0; j < g_count; ++j) {
      int k = index.at(matrix_key(act.elements[i].compose(act.elements[j])));
      act.table[i][j] = k;
      if (k == act.identity && act.inverse[i] < 0) act.inverse[i] = static_cast<int>(j);
    }
  return act;
}

Report validate_action(const GroupAction& action, const CheckOptions& opts) {
  const JJAlgebra& a = action.algebra;
  Report rep;
  {
    ConditionSink sink(rep.add("automorphisms"), opts);
    for (size_t i = 0; i < action.elements.size(); ++i) {
      const auto& g = action.elements[i];
      if (g.rows != a.dim || g.cols != a.dim) throw DimensionMismatch("action element shape");
      if (!g.invertible() || !is_morphism(a, a, g).pass())
        if (!sink.fail({static_cast<int>(i)})) return rep;
    }
  }
  {
    ConditionSink sink(rep.add("closure"), opts);
    std::map<std::string, int> index;
    for (size_t i = 0; i < action.elements.size(); ++i)
      index[matrix_key(action.elements[i])] = static_cast<int>(i);
    for (size_t i = 0; i < action.elements.size(); ++i)
      for (size_t j = 0; j < action.elements.size(); ++j) {
        auto it = index.find(matrix_key(action.elements[i].compose(action.elements[j])));
        if (it == index.end() || action.table[i][j] != it->second)
          if (!sink.fail({static_cast<int>(i), static_cast<int>(j)})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("order-invertible"), opts);
    if (a.field.finite() && static_cast<std::int64_t>(action.order()) % a.field.p == 0)
      sink.fail({}, "|G| is divisible by the characteristic");
  }
  return rep;
}

TraceData invariants_and_trace(const GroupAction& action) {
  const JJAlgebra& a = action.algebra;
  const Field& f = a.field;
  std::int64_t order = static_cast<std::int64_t>(action.order());
  Scalar order_scalar = Scalar::of(f, order);
  if (order_scalar.is_zero())
    throw PreconditionError("invariants_and_trace: |G| is not invertible in the field");

  // A^G = intersection of ker(g - id): stack (g - id) blocks
  LinearMap sys(f, a.dim * static_cast<int>(order), a.dim);
  for (size_t g = 0; g < action.order(); ++g) {
    LinearMap diff = action.elements[g] - LinearMap::identity(f, a.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) sys.at(static_cast<int>(g) * a.dim + i, j) = diff.at(i, j);
  }
  LinearSolution sol = solve_linear(sys, Vector::zero(f, sys.rows));
  std::vector<Vector> inv_basis = sol.kernel;

  LinearMap trace = LinearMap::zero(f, a.dim, a.dim);
  for (const auto& g : action.elements) trace = trace + g;
  trace = trace.scaled(order_scalar.inverse());

  // retraction checks
  for (const auto& v : inv_basis)
    if (trace.apply(v) != v)
      throw PreconditionError("invariants_and_trace: trace does not fix the invariants");
  for (int i = 0; i < a.dim; ++i)
    if (!in_span(inv_basis, trace.column(i)))
      throw PreconditionError("invariants_and_trace: trace image leaves the invariants");
  for (int i = 0; i < a.dim; ++i)
    for (const auto& v : inv_basis) {
      Vector lhs = trace.apply(a.bracket.apply_left_basis(i, v));
      Vector rhs = a.bracket_of(trace.column(i), v);
      if (lhs != rhs)
        throw PreconditionError("invariants_and_trace: t([x,a]) != [t(x),a] on invariants");
    }

  // structure constants of A^G
  int k = static_cast<int>(inv_basis.size());
  BilinearMap sub(f, k, k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto coords = coordinates_in(inv_basis, a.bracket_of(inv_basis[i], inv_basis[j]));
      if (!coords) throw PreconditionError("invariants_and_trace: invariants are not a subalgebra");
      sub.entry(i, j) = *coords;
    }

  LinearSolution ker = solve_linear(trace, Vector::zero(f, a.dim));
  return TraceData{inv_basis, JJAlgebra(f, k, std::move(sub)), trace, ker.kernel};
}

ArtinResult artin_reconstruct(const GroupAction& action) {
  TraceData td = invariants_and_trace(action);
  const JJAlgebra& a = action.algebra;
  const Field& f = a.field;
  int k = static_cast<int>(td.invariant_basis.size());

  // the trace as a map A -> A^G in invariant-basis coordinates
  LinearMap p(f, k, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    auto coords = coordinates_in(td.invariant_basis, td.trace.column(j));
    if (!coords) throw PreconditionError("artin_reconstruct: trace image leaves the invariants");
    for (int i = 0; i < k; ++i) p.at(i, j) = coords->c[i];
  }

  CanonicalDatum cd = canonical_datum(a, td.invariant_basis, p);
  if (!cd.datum.aact.is_zero())
    throw PreconditionError("artin_reconstruct: |> along the trace retraction is nonzero");

  SkewCrossedSystem scs{cd.sub, cd.datum.vdim, cd.datum.vact, cd.datum.cocycle, cd.datum.brace};
  return ArtinResult{std::move(td), std::move(scs), cd.phi};
}

}  // namespace jja
