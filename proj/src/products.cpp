#include "jja/products.hpp"

#include <map>

namespace jja {

namespace {

void throw_if_failing(const Report& rep, const char* what) {
  if (!rep.pass()) throw PreconditionError(std::string(what) + ":\n" + rep.summary());
}

}  // namespace

ExtendingDatum induced_datum(const MatchedPair& mp) {
  if (mp.a.field != mp.v.field) throw FieldMismatch("matched pair: fields differ");
  ExtendingDatum d = ExtendingDatum::zero(mp.a, mp.v.dim);
  d.vbasis = mp.v.basis;
  d.vact = mp.vact;
  d.aact = mp.aact;
  d.brace = mp.v.bracket;
  return d;
}

Report check_matched_pair(const MatchedPair& mp, const CheckOptions& opts) {
  const JJAlgebra& A = mp.a;
  const JJAlgebra& V = mp.v;
  Report rep;

  {
    Report vrep = verify_jj(V, opts);
    Condition& c = rep.add("V-jj");
    for (const auto& vc : vrep.conditions) {
      c.failure_count += vc.failure_count;
      for (const auto& w : vc.failures) c.failures.push_back(w);
    }
    if (!c.pass() && opts.early_exit) return rep;
  }
  {
    Report mrep = is_right_module(V.dim, A, mp.vact, opts);
    rep.conditions.push_back(mrep.conditions[0]);
    rep.conditions.back().name = "right-module";
    if (!rep.conditions.back().pass() && opts.early_exit) return rep;
  }
  {
    // (A, |>) a left V-module: {x,y} |> a = -x|>(y|>a) - y|>(x|>a).
    ConditionSink sink(rep.add("left-module"), opts);
    for (int x = 0; x < V.dim; ++x)
      for (int y = x; y < V.dim; ++y)
        for (int i = 0; i < A.dim; ++i) {
          Vector lhs = mp.aact.apply_right_basis(V.bracket_at(x, y), i);
          Vector rhs = -mp.aact.apply_left_basis(x, mp.aact.at(y, i)) -
                       mp.aact.apply_left_basis(y, mp.aact.at(x, i));
          if (lhs != rhs)
            if (!sink.fail({x, y, i})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("MP1"), opts);
    for (int x = 0; x < V.dim; ++x)
      for (int i = 0; i < A.dim; ++i)
        for (int j = i; j < A.dim; ++j) {
          Vector lhs = mp.aact.apply_left_basis(x, A.bracket_at(i, j));
          Vector rhs = -A.bracket.apply_right_basis(mp.aact.at(x, i), j) -
                       A.bracket.apply_left_basis(i, mp.aact.at(x, j)) -
                       mp.aact.apply_right_basis(mp.vact.at(x, i), j) -
                       mp.aact.apply_right_basis(mp.vact.at(x, j), i);
          if (lhs != rhs)
            if (!sink.fail({x, i, j})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("MP2"), opts);
    for (int x = 0; x < V.dim; ++x)
      for (int y = x; y < V.dim; ++y)
        for (int i = 0; i < A.dim; ++i) {
          Vector lhs = mp.vact.apply_right_basis(V.bracket_at(x, y), i);
          Vector rhs = -V.bracket.apply_left_basis(x, mp.vact.at(y, i)) -
                       V.bracket.apply_right_basis(mp.vact.at(x, i), y) -
                       mp.vact.apply_left_basis(x, mp.aact.at(y, i)) -
                       mp.vact.apply_left_basis(y, mp.aact.at(x, i));
          if (lhs != rhs)
            if (!sink.fail({x, y, i})) return rep;
        }
  }
  return rep;
}

JJAlgebra bicrossed_product(const MatchedPair& mp) {
  throw_if_failing(check_matched_pair(mp), "bicrossed_product: invalid matched pair");
  return unified_product(induced_datum(mp));
}

JJAlgebra semidirect_product(const JJAlgebra& v, const JJAlgebra& a, const BilinearMap& aact) {
  MatchedPair mp{a, v, BilinearMap::zero(a.field, v.dim, a.dim, v.dim), aact};
  Report rep = check_matched_pair(mp);
  throw_if_failing(rep, "semidirect_product: invalid action");
  return unified_product(induced_datum(mp));
}

Factorization factorize(const JJAlgebra& e, const std::vector<Vector>& a_basis,
                        const std::vector<Vector>& v_basis) {
  int k = static_cast<int>(a_basis.size()), m = static_cast<int>(v_basis.size());
  if (k + m != e.dim) throw PreconditionError("factorize: dim A + dim V != dim E");
  throw_if_failing(is_subalgebra(e, a_basis), "factorize: A is not a subalgebra");
  throw_if_failing(is_subalgebra(e, v_basis), "factorize: V is not a subalgebra");

  LinearMap p = projection_from_complement(e, a_basis, v_basis);  // also checks independence
  CanonicalDatum cd = canonical_datum(e, a_basis, p);
  if (!cd.datum.cocycle.is_zero())
    throw PreconditionError("factorize: internal: cocycle of a subalgebra complement is nonzero");

  // ker p = span(v_basis), but canonical_datum picks its own kernel basis;
  // rebuild the tensors in the caller's v_basis coordinates.
  if (rref_basis(cd.complement_basis) != rref_basis(v_basis))
    throw PreconditionError("factorize: internal: kernel does not match the complement");
  auto vcoords = [&](const Vector& w) {
    auto c = coordinates_in(v_basis, w);
    if (!c) throw PreconditionError("factorize: internal: vector not in V");
    return *c;
  };

  BilinearMap vact(e.field, m, k, m), aact(e.field, m, k, k), vbr(e.field, m, m, m);
  auto a_embed = [&](const Vector& coords) {
    Vector out = Vector::zero(e.field, e.dim);
    for (int i = 0; i < k; ++i) out.add_scaled(a_basis[i], coords.c[i]);
    return out;
  };
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < k; ++i) {
      Vector br = e.bracket_of(v_basis[x], a_basis[i]);
      Vector pa = p.apply(br);
      aact.entry(x, i) = pa;
      vact.entry(x, i) = vcoords(br - a_embed(pa));
    }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      vbr.entry(x, y) = vcoords(e.bracket_of(v_basis[x], v_basis[y]));

  JJAlgebra valg(e.field, m, std::move(vbr));
  MatchedPair mp{cd.sub, std::move(valg), std::move(vact), std::move(aact)};
  throw_if_failing(check_matched_pair(mp), "factorize: internal: recovered pair invalid");

  std::vector<Vector> cols = a_basis;
  cols.insert(cols.end(), v_basis.begin(), v_basis.end());
  return Factorization{std::move(mp), LinearMap::from_columns(e.field, cols)};
}

ExtendingDatum induced_datum(const CrossedSystem& cs) {
  if (cs.a.field != cs.v.field) throw FieldMismatch("crossed system: fields differ");
  ExtendingDatum d = ExtendingDatum::zero(cs.a, cs.v.dim);
  d.vbasis = cs.v.basis;
  d.aact = cs.aact;
  d.cocycle = cs.cocycle;
  d.brace = cs.v.bracket;
  return d;
}

Report check_crossed_system(const CrossedSystem& cs, const CheckOptions& opts) {
  const JJAlgebra& A = cs.a;
  const JJAlgebra& V = cs.v;
  int n = A.dim, m = V.dim;
  Report rep;
  {
    ConditionSink sink(rep.add("CP1"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        if (cs.cocycle.at(x, y) != cs.cocycle.at(y, x))
          if (!sink.fail({x, y})) return rep;
  }
  {
    ConditionSink sink(rep.add("CP2"), opts);
    for (int x = 0; x < m; ++x)
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Vector lhs = cs.aact.apply_left_basis(x, A.bracket_at(i, j));
          Vector rhs = -A.bracket.apply_right_basis(cs.aact.at(x, i), j) -
                       A.bracket.apply_left_basis(i, cs.aact.at(x, j));
          if (lhs != rhs)
            if (!sink.fail({x, i, j})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("CP3"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int i = 0; i < n; ++i) {
          Vector lhs = cs.aact.apply_right_basis(V.bracket_at(x, y), i);
          Vector rhs = -cs.aact.apply_left_basis(x, cs.aact.at(y, i)) -
                       cs.aact.apply_left_basis(y, cs.aact.at(x, i)) -
                       A.bracket.apply_left_basis(i, cs.cocycle.at(x, y));
          if (lhs != rhs)
            if (!sink.fail({x, y, i})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("CP4"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int z = y; z < m; ++z) {
          Vector s = Vector::zero(A.field, n);
          const int tri[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
          for (auto& t : tri) {
            s = s + cs.cocycle.apply_left_basis(t[0], V.bracket_at(t[1], t[2]));
            s = s + cs.aact.apply_left_basis(t[0], cs.cocycle.at(t[1], t[2]));
          }
          if (!s.is_zero())
            if (!sink.fail({x, y, z})) return rep;
        }
  }
  return rep;
}

JJAlgebra crossed_product(const CrossedSystem& cs) {
  throw_if_failing(verify_jj(cs.v), "crossed_product: V is not a JJ algebra");
  throw_if_failing(check_crossed_system(cs), "crossed_product: invalid crossed system");
  return unified_product(induced_datum(cs));
}

Report check_supersolvable_datum(const JJAlgebra& a, const LinearMap& d, const Vector& a0,
                                 const CheckOptions& opts) {
  if (d.rows != a.dim || d.cols != a.dim || a0.dim() != a.dim)
    throw DimensionMismatch("supersolvable datum shape");
  Report rep;
  {
    Report ad = is_antiderivation(a, d, opts);
    Condition c = ad.conditions[0];
    c.name = "S1-antiderivation";
    rep.conditions.push_back(std::move(c));
    if (!rep.conditions.back().pass() && opts.early_exit) return rep;
  }
  {
    ConditionSink sink(rep.add("S1-trace"), opts);
    Vector da0 = d.apply(a0);
    Vector t = da0 + da0 + da0;
    if (!t.is_zero()) sink.fail({}, "3 D(a0) != 0");
    if (!rep.conditions.back().pass() && opts.early_exit) return rep;
  }
  {
    ConditionSink sink(rep.add("S2"), opts);
    for (int i = 0; i < a.dim; ++i) {
      Vector dd = d.apply(d.column(i));
      Vector lhs = dd + dd;
      Vector rhs = -a.bracket.apply_left_basis(i, a0);
      if (lhs != rhs)
        if (!sink.fail({i})) return rep;
    }
  }
  return rep;
}

CrossedSystem crossed_system_from_supersolvable(const JJAlgebra& a, const LinearMap& d,
                                                const Vector& a0) {
  const Field& f = a.field;
  JJAlgebra line = JJAlgebra::abelian(f, 1);
  line.basis = {"x"};
  BilinearMap aact(f, 1, a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) aact.entry(0, i) = d.column(i);
  BilinearMap cocycle(f, 1, 1, a.dim);
  cocycle.entry(0, 0) = a0;
  return CrossedSystem{a, std::move(line), std::move(aact), std::move(cocycle)};
}

SupersolvableDatum supersolvable_from_crossed(const CrossedSystem& cs) {
  if (cs.v.dim != 1) throw PreconditionError("supersolvable_from_crossed: V must be a line");
  LinearMap d(cs.a.field, cs.a.dim, cs.a.dim);
  for (int i = 0; i < cs.a.dim; ++i)
    for (int r = 0; r < cs.a.dim; ++r) d.at(r, i) = cs.aact.at(0, i).c[r];
  return SupersolvableDatum{std::move(d), cs.cocycle.at(0, 0)};
}

JJAlgebra supersolvable_extension(const JJAlgebra& a, const LinearMap& d, const Vector& a0) {
  if (a.field.characteristic() == 3)
    throw PreconditionError("supersolvable_extension: characteristic 3 is excluded");
  throw_if_failing(check_supersolvable_datum(a, d, a0), "supersolvable_extension: invalid datum");
  return crossed_product(crossed_system_from_supersolvable(a, d, a0));
}

namespace {

// canonical key for a subspace: the rref basis, flattened to strings
std::string span_key(const std::vector<Vector>& basis) {
  std::string key;
  for (const auto& v : basis) {
    key += v.str();
    key += ";";
  }
  return key;
}

bool chain_step(const JJAlgebra& e, const std::vector<Vector>& current,
                std::vector<std::vector<Vector>>& chain, std::map<std::string, bool>& seen,
                ChainReading reading, const Budget& budget, std::uint64_t& used) {
  int n = e.dim;
  int cur_dim = static_cast<int>(current.size());
  if (cur_dim == n) return true;

  VectorRange cands(e.field, n);
  CheckOptions quick;
  quick.early_exit = true;
  quick.max_witnesses = 0;
  for (std::uint64_t k = 0; k < cands.size(); ++k) {
    if (++used > budget.limit) throw BudgetExceeded("is_supersolvable: candidate budget exhausted");
    Vector w = cands.at(k);
    if (in_span(current, w)) continue;
    std::vector<Vector> next = current;
    next.push_back(std::move(w));
    next = rref_basis(next);
    std::string key = span_key(next);
    if (seen.count(key)) continue;
    seen[key] = true;

    bool ok;
    if (reading == ChainReading::ideals_of_e) {
      ok = is_ideal(e, next, quick).pass();
    } else {
      // previous member must sit as an ideal inside the span of `next`;
      // realize `next` as a subalgebra first.
      ok = is_subalgebra(e, next, quick).pass();
      if (ok && cur_dim > 0) {
        for (size_t i = 0; ok && i < next.size(); ++i)
          for (const auto& v : current) {
            Vector prod = e.bracket_of(next[i], v);
            if (!in_span(current, prod)) {
              ok = false;
              break;
            }
          }
      }
    }
    if (!ok) continue;
    chain.push_back(next);
    if (chain_step(e, next, chain, seen, reading, budget, used)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::vector<Vector>>> is_supersolvable(const JJAlgebra& e,
                                                                 const Budget& budget,
                                                                 ChainReading reading) {
  throw_if_failing(verify_jj(e), "is_supersolvable: input fails the JJ axioms");
  if (!e.field.finite()) throw PreconditionError("is_supersolvable: needs a finite field");
  std::vector<std::vector<Vector>> chain;
  std::map<std::string, bool> seen;
  std::uint64_t used = 0;
  if (chain_step(e, {}, chain, seen, reading, budget, used)) return chain;
  return std::nullopt;
}

ExtendingDatum induced_datum(const SkewCrossedSystem& scs) {
  ExtendingDatum d = ExtendingDatum::zero(scs.a, scs.vdim);
  d.vact = scs.vact;
  d.cocycle = scs.cocycle;
  d.brace = scs.brace;
  return d;
}

Report check_skew_crossed(const SkewCrossedSystem& scs, const CheckOptions& opts) {
  const JJAlgebra& A = scs.a;
  int n = A.dim, m = scs.vdim;
  Report rep;
  {
    ConditionSink sink(rep.add("SC1"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        if (scs.cocycle.at(x, y) != scs.cocycle.at(y, x))
          if (!sink.fail({x, y}, "cocycle not symmetric")) return rep;
        if (scs.brace.at(x, y) != scs.brace.at(y, x))
          if (!sink.fail({x, y}, "brace not symmetric")) return rep;
      }
  }
  {
    Report mrep = is_right_module(m, A, scs.vact, opts);
    Condition c = mrep.conditions[0];
    c.name = "SC2";
    rep.conditions.push_back(std::move(c));
    if (!rep.conditions.back().pass() && opts.early_exit) return rep;
  }
  {
    ConditionSink sink(rep.add("SC3"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int i = 0; i < n; ++i) {
          Vector lhs = scs.vact.apply_right_basis(scs.brace.at(x, y), i);
          Vector rhs = -scs.brace.apply_left_basis(x, scs.vact.at(y, i)) -
                       scs.brace.apply_right_basis(scs.vact.at(x, i), y);
          if (lhs != rhs)
            if (!sink.fail({x, y, i})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("SC4"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int i = 0; i < n; ++i) {
          Vector s = A.bracket.apply_left_basis(i, scs.cocycle.at(x, y));
          s = s + scs.cocycle.apply_left_basis(x, scs.vact.at(y, i));
          s = s + scs.cocycle.apply_right_basis(scs.vact.at(x, i), y);
          if (!s.is_zero())
            if (!sink.fail({x, y, i})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("SC5"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int z = y; z < m; ++z) {
          Vector s = Vector::zero(A.field, n);
          const int tri[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
          for (auto& t : tri) s = s + scs.cocycle.apply_left_basis(t[0], scs.brace.at(t[1], t[2]));
          if (!s.is_zero())
            if (!sink.fail({x, y, z})) return rep;
        }
  }
  {
    ConditionSink sink(rep.add("SC6"), opts);
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int z = y; z < m; ++z) {
          Vector s = Vector::zero(A.field, m);
          const int tri[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
          for (auto& t : tri) {
            s = s + scs.brace.apply_left_basis(t[0], scs.brace.at(t[1], t[2]));
            s = s + scs.vact.apply_left_basis(t[0], scs.cocycle.at(t[1], t[2]));
          }
          if (!s.is_zero())
            if (!sink.fail({x, y, z})) return rep;
        }
  }
  return rep;
}

JJAlgebra skew_crossed_product(const SkewCrossedSystem& scs) {
  throw_if_failing(check_skew_crossed(scs), "skew_crossed_product: invalid system");
  return unified_product(induced_datum(scs));
}

}  // namespace jja
