#include "jja/extend.hpp"

namespace jja {

namespace {

std::vector<std::string> default_vlabels(int n) {
  std::vector<std::string> out;
  if (n == 1) {
    out.push_back("x");
    return out;
  }
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

void check_datum_shapes(const ExtendingDatum& d) {
  const Field& f = d.algebra.field;
  int n = d.algebra.dim, m = d.vdim;
  auto bad = [&](const BilinearMap& t, int l, int r, int tg) {
    return t.field != f || t.left_dim != l || t.right_dim != r || t.target_dim != tg;
  };
  if (bad(d.vact, m, n, m)) throw DimensionMismatch("extending datum: <| shape");
  if (bad(d.aact, m, n, n)) throw DimensionMismatch("extending datum: |> shape");
  if (bad(d.cocycle, m, m, n)) throw DimensionMismatch("extending datum: cocycle shape");
  if (bad(d.brace, m, m, m)) throw DimensionMismatch("extending datum: brace shape");
}

}  // namespace

ExtendingDatum::ExtendingDatum(JJAlgebra a, int vdim_, BilinearMap vact_, BilinearMap aact_,
                               BilinearMap cocycle_, BilinearMap brace_,
                               std::vector<std::string> vlabels)
    : algebra(std::move(a)), vdim(vdim_), vbasis(std::move(vlabels)), vact(std::move(vact_)),
      aact(std::move(aact_)), cocycle(std::move(cocycle_)), brace(std::move(brace_)) {
  check_datum_shapes(*this);
  if (vbasis.empty()) vbasis = default_vlabels(vdim);
  if (static_cast<int>(vbasis.size()) != vdim) throw DimensionMismatch("extending datum: labels");
}

ExtendingDatum ExtendingDatum::zero(const JJAlgebra& a, int vdim) {
  const Field& f = a.field;
  int n = a.dim;
  return ExtendingDatum(a, vdim, BilinearMap::zero(f, vdim, n, vdim),
                        BilinearMap::zero(f, vdim, n, n), BilinearMap::zero(f, vdim, vdim, n),
                        BilinearMap::zero(f, vdim, vdim, vdim));
}

Report check_extending(const ExtendingDatum& d, const CheckOptions& opts) {
  check_datum_shapes(d);
  const JJAlgebra& A = d.algebra;
  const Field& f = A.field;
  int n = A.dim, m = d.vdim;
  Report rep;

  {
    ConditionSink sink(rep.add("E1"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        if (d.cocycle.at(x, y) != d.cocycle.at(y, x))
          if (!sink.fail({x, y}, "cocycle not symmetric")) return rep;
        if (d.brace.at(x, y) != d.brace.at(y, x))
          if (!sink.fail({x, y}, "brace not symmetric")) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("E2"), opts);
    for (int x = 0; x < m; ++x)
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Vector lhs = d.vact.apply_left_basis(x, A.bracket_at(i, j));
          Vector rhs = -d.vact.apply_right_basis(d.vact.at(x, i), j) -
                       d.vact.apply_right_basis(d.vact.at(x, j), i);
          if (lhs != rhs)
            if (!sink.fail({x, i, j})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("E3"), opts);
    for (int x = 0; x < m; ++x)
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Vector lhs = d.aact.apply_left_basis(x, A.bracket_at(i, j));
          Vector rhs = -A.bracket.apply_right_basis(d.aact.at(x, i), j) -
                       A.bracket.apply_left_basis(i, d.aact.at(x, j)) -
                       d.aact.apply_right_basis(d.vact.at(x, i), j) -
                       d.aact.apply_right_basis(d.vact.at(x, j), i);
          if (lhs != rhs)
            if (!sink.fail({x, i, j})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("E4"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int i = 0; i < n; ++i) {
          Vector lhs = d.vact.apply_right_basis(d.brace.at(x, y), i);
          Vector rhs = -d.brace.apply_left_basis(x, d.vact.at(y, i)) -
                       d.brace.apply_right_basis(d.vact.at(x, i), y) -
                       d.vact.apply_left_basis(x, d.aact.at(y, i)) -
                       d.vact.apply_left_basis(y, d.aact.at(x, i));
          if (lhs != rhs)
            if (!sink.fail({x, y, i})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("E5"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int i = 0; i < n; ++i) {
          Vector lhs = d.aact.apply_right_basis(d.brace.at(x, y), i);
          Vector rhs = -d.aact.apply_left_basis(x, d.aact.at(y, i)) -
                       d.aact.apply_left_basis(y, d.aact.at(x, i)) -
                       A.bracket.apply_left_basis(i, d.cocycle.at(x, y)) -
                       d.cocycle.apply_left_basis(x, d.vact.at(y, i)) -
                       d.cocycle.apply_right_basis(d.vact.at(x, i), y);
          if (lhs != rhs)
            if (!sink.fail({x, y, i})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("E6"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int z = y; z < m; ++z) {
          Vector s = Vector::zero(f, n);
          const int tri[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
          for (auto& t : tri) {
            s = s + d.cocycle.apply_left_basis(t[0], d.brace.at(t[1], t[2]));
            s = s + d.aact.apply_left_basis(t[0], d.cocycle.at(t[1], t[2]));
          }
          if (!s.is_zero())
            if (!sink.fail({x, y, z})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("E7"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int z = y; z < m; ++z) {
          Vector s = Vector::zero(f, m);
          const int tri[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
          for (auto& t : tri) {
            s = s + d.brace.apply_left_basis(t[0], d.brace.at(t[1], t[2]));
            s = s + d.vact.apply_left_basis(t[0], d.cocycle.at(t[1], t[2]));
          }
          if (!s.is_zero())
            if (!sink.fail({x, y, z})) return rep;
        }
  }
  return rep;
}

bool passes_extending(const ExtendingDatum& d) {
  CheckOptions opts;
  opts.early_exit = true;
  opts.max_witnesses = 1;
  return check_extending(d, opts).pass();
}

JJAlgebra unified_product(const ExtendingDatum& d) {
  check_datum_shapes(d);
  const JJAlgebra& A = d.algebra;
  const Field& f = A.field;
  int n = A.dim, m = d.vdim, N = n + m;

  auto embed = [&](const Vector& a_part, const Vector& v_part) {
    Vector out = Vector::zero(f, N);
    for (int i = 0; i < n; ++i) out.c[i] = a_part.c[i];
    for (int j = 0; j < m; ++j) out.c[n + j] = v_part.c[j];
    return out;
  };

  BilinearMap t = BilinearMap::zero(f, N, N, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.entry(i, j) = embed(A.bracket_at(i, j), Vector::zero(f, m));
  // [(a,0),(0,y)] = (y |> a, y <| a)
  for (int i = 0; i < n; ++i)
    for (int y = 0; y < m; ++y) {
      Vector w = embed(d.aact.at(y, i), d.vact.at(y, i));
      t.entry(i, n + y) = w;
      t.entry(n + y, i) = std::move(w);
    }
  // [(0,x),(0,y)] = (f(x,y), {x,y})
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      t.entry(n + x, n + y) = embed(d.cocycle.at(x, y), d.brace.at(x, y));

  std::vector<std::string> labels = A.basis;
  labels.insert(labels.end(), d.vbasis.begin(), d.vbasis.end());
  return JJAlgebra(f, N, std::move(t), std::move(labels));
}

Report check_morphism_pair(const ExtendingDatum& d, const ExtendingDatum& dp,
                           const MorphismPair& pair, const CheckOptions& opts) {
  const JJAlgebra& A = d.algebra;
  if (!(A == dp.algebra) || d.vdim != dp.vdim)
    throw DimensionMismatch("check_morphism_pair: data not over the same A and V");
  const LinearMap& r = pair.r;
  const LinearMap& v = pair.v;
  if (r.rows != A.dim || r.cols != d.vdim || v.rows != d.vdim || v.cols != d.vdim)
    throw DimensionMismatch("check_morphism_pair: pair shape");
  int n = A.dim, m = d.vdim;
  Report rep;

  {
    ConditionSink sink(rep.add("M1"), opts);
    for (int x = 0; x < m; ++x)
      for (int i = 0; i < n; ++i) {
        Vector lhs = dp.vact.apply_right_basis(v.column(x), i);
        Vector rhs = v.apply(d.vact.at(x, i));
        if (lhs != rhs)
          if (!sink.fail({x, i})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("M2"), opts);
    for (int x = 0; x < m; ++x)
      for (int i = 0; i < n; ++i) {
        Vector lhs = dp.aact.apply_right_basis(v.column(x), i);
        Vector rhs = r.apply(d.vact.at(x, i)) + d.aact.at(x, i) -
                     A.bracket.apply_left_basis(i, r.column(x));
        if (lhs != rhs)
          if (!sink.fail({x, i})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("M3"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y) {
        Vector lhs = v.apply(d.brace.at(x, y));
        Vector rhs = dp.brace.apply(v.column(x), v.column(y));
        rhs = rhs + dp.vact.apply(v.column(x), r.column(y));
        rhs = rhs + dp.vact.apply(v.column(y), r.column(x));
        if (lhs != rhs)
          if (!sink.fail({x, y})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("M4"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y) {
        Vector lhs = r.apply(d.brace.at(x, y));
        Vector rhs = A.bracket_of(r.column(x), r.column(y));
        rhs = rhs + dp.aact.apply(v.column(x), r.column(y));
        rhs = rhs + dp.aact.apply(v.column(y), r.column(x));
        rhs = rhs + dp.cocycle.apply(v.column(x), v.column(y));
        rhs = rhs - d.cocycle.at(x, y);
        if (lhs != rhs)
          if (!sink.fail({x, y})) return rep;
      }
  }
  return rep;
}

LinearMap morphism_pair_matrix(const ExtendingDatum& d, const MorphismPair& pair) {
  int n = d.algebra.dim, m = d.vdim, N = n + m;
  LinearMap psi = LinearMap::identity(d.algebra.field, N);
  for (int x = 0; x < m; ++x) {
    for (int i = 0; i < n; ++i) psi.at(i, n + x) = pair.r.at(i, x);
    for (int y = 0; y < m; ++y) psi.at(n + y, n + x) = pair.v.at(y, x);
  }
  return psi;
}

ExtendingDatum transport_datum(const ExtendingDatum& d, const LinearMap& r, const LinearMap& v) {
  const JJAlgebra& A = d.algebra;
  int n = A.dim, m = d.vdim;
  if (r.rows != n || r.cols != m || v.rows != m || v.cols != m)
    throw DimensionMismatch("transport_datum: pair shape");
  auto vinv_opt = v.inverse();
  if (!vinv_opt) throw PreconditionError("transport_datum: v is singular");
  const LinearMap vinv = *vinv_opt;

  ExtendingDatum out = ExtendingDatum::zero(A, m);
  out.vbasis = d.vbasis;
  // images of the V basis under v^-1 and r o v^-1
  std::vector<Vector> w(m), rw(m);
  for (int x = 0; x < m; ++x) {
    w[x] = vinv.column(x);
    rw[x] = r.apply(w[x]);
  }

  for (int x = 0; x < m; ++x)
    for (int i = 0; i < n; ++i) {
      Vector wa = d.vact.apply_right_basis(w[x], i);  // v^-1(x) <| a
      out.vact.entry(x, i) = v.apply(wa);
      out.aact.entry(x, i) = r.apply(wa) + d.aact.apply_right_basis(w[x], i) -
                             A.bracket.apply_left_basis(i, rw[x]);
    }

  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Vector brace_w = d.brace.apply(w[x], w[y]);
      Vector xy_f = d.cocycle.apply(w[x], w[y]);
      Vector x_act_ry = d.vact.apply(w[x], rw[y]);  // v^-1(x) <| r(v^-1(y))
      Vector y_act_rx = d.vact.apply(w[y], rw[x]);

      Vector fe = xy_f + r.apply(brace_w) + A.bracket_of(rw[x], rw[y]);
      fe = fe - r.apply(x_act_ry) - d.aact.apply(w[x], rw[y]);
      fe = fe - r.apply(y_act_rx) - d.aact.apply(w[y], rw[x]);
      out.cocycle.entry(x, y) = std::move(fe);

      Vector be = v.apply(brace_w) - v.apply(x_act_ry) - v.apply(y_act_rx);
      out.brace.entry(x, y) = std::move(be);
    }
  return out;
}

std::optional<MorphismPair> are_equivalent(const ExtendingDatum& d, const ExtendingDatum& dp,
                                           const Budget& budget) {
  const JJAlgebra& A = d.algebra;
  if (!(A == dp.algebra) || d.vdim != dp.vdim)
    throw DimensionMismatch("are_equivalent: data not over the same A and V");
  if (!A.field.finite()) throw PreconditionError("are_equivalent: witness search needs a finite field");
  int n = A.dim, m = d.vdim;

  MatrixRange rmaps(A.field, n, m);
  MatrixRange vmaps(A.field, m, m);
  if (rmaps.size() > 0 && vmaps.size() > UINT64_MAX / rmaps.size())
    throw BudgetExceeded("are_equivalent: candidate space overflows");
  budget.require(rmaps.size() * vmaps.size(), "are_equivalent");

  LinearMap v(A.field, m, m), r(A.field, n, m);
  for (std::uint64_t kv = 0; kv < vmaps.size(); ++kv) {
    vmaps.fill(kv, v);
    if (!v.invertible()) continue;
    for (std::uint64_t kr = 0; kr < rmaps.size(); ++kr) {
      rmaps.fill(kr, r);
      if (transport_datum(dp, r, v) == d) return MorphismPair{r, v};
    }
  }
  return std::nullopt;
}

std::vector<Vector> extend_to_complement(const JJAlgebra& e, const std::vector<Vector>& a_basis) {
  std::vector<Vector> all = a_basis;
  std::vector<Vector> complement;
  for (int i = 0; i < e.dim && static_cast<int>(all.size()) < e.dim; ++i) {
    Vector cand = Vector::unit(e.field, e.dim, i);
    if (!in_span(all, cand)) {
      all.push_back(cand);
      complement.push_back(cand);
    }
  }
  if (static_cast<int>(all.size()) != e.dim)
    throw PreconditionError("extend_to_complement: given vectors are dependent");
  return complement;
}

LinearMap projection_from_complement(const JJAlgebra& e, const std::vector<Vector>& a_basis,
                                     const std::vector<Vector>& v_basis) {
  int n = e.dim, k = static_cast<int>(a_basis.size());
  if (k + static_cast<int>(v_basis.size()) != n)
    throw PreconditionError("projection_from_complement: dimensions do not add up");
  std::vector<Vector> cols = a_basis;
  cols.insert(cols.end(), v_basis.begin(), v_basis.end());
  LinearMap basis_mat = LinearMap::from_columns(e.field, cols);
  auto inv = basis_mat.inverse();
  if (!inv) throw PreconditionError("projection_from_complement: not a basis of E");
  LinearMap p(e.field, k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) p.at(i, j) = inv->at(i, j);
  return p;
}

CanonicalDatum canonical_datum(const JJAlgebra& e, const std::vector<Vector>& a_basis,
                               const LinearMap& p) {
  const Field& f = e.field;
  int n = e.dim, k = static_cast<int>(a_basis.size());
  if (p.rows != k || p.cols != n || p.field != f)
    throw DimensionMismatch("canonical_datum: projection shape");
  for (const auto& v : a_basis)
    if (v.dim() != n) throw DimensionMismatch("canonical_datum: subalgebra basis shape");
  if (rank_of(a_basis) != k) throw PreconditionError("canonical_datum: dependent subalgebra basis");

  // p must restrict to the identity on A
  for (int j = 0; j < k; ++j) {
    Vector img = p.apply(a_basis[j]);
    if (img != Vector::unit(f, k, j))
      throw PreconditionError("canonical_datum: p is not a retraction onto A (basis vector " +
                              std::to_string(j) + ")");
  }

  // structure constants of A in the given basis; also the subalgebra check
  BilinearMap sub_bracket = BilinearMap::zero(f, k, k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vector prod = e.bracket_of(a_basis[i], a_basis[j]);
      auto coords = coordinates_in(a_basis, prod);
      if (!coords)
        throw PreconditionError("canonical_datum: span is not a subalgebra (witness " +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      sub_bracket.entry(i, j) = *coords;
    }
  JJAlgebra sub(f, k, std::move(sub_bracket));

  // V = ker p
  LinearSolution ker = solve_linear(p, Vector::zero(f, k));
  std::vector<Vector> v_basis = ker.kernel;
  int m = static_cast<int>(v_basis.size());
  if (k + m != n) throw PreconditionError("canonical_datum: p is not surjective onto A");

  auto a_embed = [&](const Vector& coords_k) {  // A coords -> E
    Vector out = Vector::zero(f, n);
    for (int i = 0; i < k; ++i) out.add_scaled(a_basis[i], coords_k.c[i]);
    return out;
  };
  auto v_coords = [&](const Vector& w) {  // vector of E lying in V -> V coords
    auto c = coordinates_in(v_basis, w);
    if (!c) throw PreconditionError("canonical_datum: internal: vector not in ker p");
    return *c;
  };

  ExtendingDatum datum = ExtendingDatum::zero(sub, m);
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < k; ++i) {
      Vector br = e.bracket_of(v_basis[x], a_basis[i]);
      Vector pa = p.apply(br);               // A coords of p([x,a])
      Vector rest = br - a_embed(pa);        // [x,a] - p([x,a]) in E
      datum.aact.entry(x, i) = pa;
      datum.vact.entry(x, i) = v_coords(rest);
    }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Vector br = e.bracket_of(v_basis[x], v_basis[y]);
      Vector pa = p.apply(br);
      Vector rest = br - a_embed(pa);
      datum.cocycle.entry(x, y) = pa;
      datum.brace.entry(x, y) = v_coords(rest);
    }

  std::vector<Vector> cols = a_basis;
  cols.insert(cols.end(), v_basis.begin(), v_basis.end());
  LinearMap phi = LinearMap::from_columns(f, cols);

  return CanonicalDatum{std::move(datum), std::move(sub), a_basis, std::move(v_basis), std::move(phi)};
}

}  // namespace jja
