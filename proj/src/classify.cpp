#include "jja/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

namespace jja {

namespace {

void check_flag_shapes(const FlagDatum& fd) {
  int n = fd.algebra.dim;
  const Field& f = fd.algebra.field;
  if (fd.d.rows != n || fd.d.cols != n || fd.d.field != f) throw DimensionMismatch("flag datum: D shape");
  if (fd.lambda.dim() != n || fd.lambda.field != f) throw DimensionMismatch("flag datum: lambda shape");
  if (fd.a0.dim() != n || fd.a0.field != f) throw DimensionMismatch("flag datum: a0 shape");
  if (fd.alpha0.field() != f) throw FieldMismatch("flag datum: alpha0 field");
}

Scalar three(const Field& f) { return Scalar::of(f, 3); }
Scalar two(const Field& f) { return Scalar::of(f, 2); }

}  // namespace

std::vector<std::int64_t> FlagDatum::encode() const {
  std::vector<std::int64_t> out;
  out.reserve(algebra.dim * algebra.dim + 2 * algebra.dim + 1);
  for (const auto& s : lambda.coeffs) out.push_back(s.residue());
  for (const auto& s : d.a) out.push_back(s.residue());
  for (const auto& s : a0.c) out.push_back(s.residue());
  out.push_back(alpha0.residue());
  return out;
}

Report check_flag_datum(const FlagDatum& fd, const CheckOptions& opts) {
  check_flag_shapes(fd);
  const JJAlgebra& A = fd.algebra;
  const Field& f = A.field;
  int n = A.dim;
  Report rep;
  {
    ConditionSink sink(rep.add("F1"), opts);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Scalar v = fd.lambda.eval(A.bracket_at(i, j)) + two(f) * fd.lambda.at(i) * fd.lambda.at(j);
        if (!v.is_zero())
          if (!sink.fail({i, j})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("F2"), opts);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Vector lhs = fd.d.apply(A.bracket_at(i, j));
        Vector rhs = -A.bracket.apply_right_basis(fd.d.column(i), j) -
                     A.bracket.apply_left_basis(i, fd.d.column(j));
        rhs = rhs - fd.d.column(j).scaled(fd.lambda.at(i)) - fd.d.column(i).scaled(fd.lambda.at(j));
        if (lhs != rhs)
          if (!sink.fail({i, j})) return rep;
      }
  }
  {
    ConditionSink sink(rep.add("F3"), opts);
    for (int i = 0; i < n; ++i) {
      Vector v = A.bracket.apply_left_basis(i, fd.a0);
      v.add_scaled(fd.d.column(i), fd.alpha0);
      v.add_scaled(fd.d.apply(fd.d.column(i)), two(f));
      v.add_scaled(fd.a0, two(f) * fd.lambda.at(i));
      if (!v.is_zero())
        if (!sink.fail({i})) return rep;
    }
  }
  {
    ConditionSink sink(rep.add("F4"), opts);
    for (int i = 0; i < n; ++i) {
      Scalar v = three(f) * fd.lambda.at(i) * fd.alpha0 + two(f) * fd.lambda.eval(fd.d.column(i));
      if (!v.is_zero())
        if (!sink.fail({i})) return rep;
    }
  }
  {
    ConditionSink sink(rep.add("F5"), opts);
    Vector v = fd.d.apply(fd.a0).scaled(three(f));
    v.add_scaled(fd.a0, three(f) * fd.alpha0);
    if (!v.is_zero()) sink.fail({});
    if (!rep.conditions.back().pass() && opts.early_exit) return rep;
  }
  {
    ConditionSink sink(rep.add("F6"), opts);
    Scalar v = three(f) * fd.lambda.eval(fd.a0) + three(f) * fd.alpha0 * fd.alpha0;
    if (!v.is_zero()) sink.fail({});
  }
  return rep;
}

bool passes_flag(const FlagDatum& fd) {
  CheckOptions opts;
  opts.early_exit = true;
  opts.max_witnesses = 0;
  return check_flag_datum(fd, opts).pass();
}

ExtendingDatum induced_datum(const FlagDatum& fd) {
  check_flag_shapes(fd);
  const JJAlgebra& A = fd.algebra;
  int n = A.dim;
  ExtendingDatum d = ExtendingDatum::zero(A, 1);
  for (int i = 0; i < n; ++i) {
    d.vact.entry(0, i).c[0] = fd.lambda.at(i);
    d.aact.entry(0, i) = fd.d.column(i);
  }
  d.cocycle.entry(0, 0) = fd.a0;
  d.brace.entry(0, 0).c[0] = fd.alpha0;
  return d;
}

JJAlgebra flag_extension(const FlagDatum& fd, FlagBracketForm form) {
  JJAlgebra ext = unified_product(induced_datum(fd));
  if (form == FlagBracketForm::printed) {
    int n = fd.algebra.dim;
    for (int i = 0; i < n; ++i) {
      Vector& v1 = ext.bracket.entry(i, n);
      Vector& v2 = ext.bracket.entry(n, i);
      for (int m = 0; m < n; ++m) {
        v1.c[m] += fd.a0.c[m];
        v2.c[m] += fd.a0.c[m];
      }
    }
  }
  return ext;
}

FlagWitness FlagWitness::then(const FlagWitness& next) const {
  return FlagWitness{r + next.r.scaled(u), u * next.u};
}

FlagWitness FlagWitness::inverted() const {
  Scalar ui = u.inverse();
  return FlagWitness{r.scaled(-ui), ui};
}

FlagDatum flag_transport(const FlagDatum& fd, const FlagWitness& w) {
  check_flag_shapes(fd);
  if (w.u.is_zero()) throw PreconditionError("flag_transport: u must be nonzero");
  const JJAlgebra& A = fd.algebra;
  const Field& f = A.field;
  int n = A.dim;
  Scalar ui = w.u.inverse();
  Scalar lam_r = fd.lambda.eval(w.r);

  FlagDatum out = fd;
  for (int j = 0; j < n; ++j) {
    Vector col = fd.d.column(j);
    col.add_scaled(w.r, fd.lambda.at(j));
    col = col - A.bracket.apply_left_basis(j, w.r);
    col = col.scaled(ui);
    for (int i = 0; i < n; ++i) out.d.at(i, j) = col.c[i];
  }
  out.alpha0 = ui * (fd.alpha0 - two(f) * lam_r);
  Vector a0p = fd.a0;
  a0p.add_scaled(w.r, fd.alpha0);
  a0p = a0p + A.bracket_of(w.r, w.r);
  a0p.add_scaled(w.r, -(two(f) * lam_r));
  a0p.add_scaled(fd.d.apply(w.r), -two(f));
  out.a0 = a0p.scaled(ui * ui);
  return out;
}

bool check_flag_equivalence(const FlagDatum& fd, const FlagDatum& fd_prime, const FlagWitness& w) {
  check_flag_shapes(fd);
  check_flag_shapes(fd_prime);
  if (!(fd.algebra == fd_prime.algebra))
    throw DimensionMismatch("check_flag_equivalence: different algebras");
  if (w.u.is_zero()) throw PreconditionError("check_flag_equivalence: u must be nonzero");
  const JJAlgebra& A = fd.algebra;
  const Field& f = A.field;
  int n = A.dim;

  if (!(fd.lambda == fd_prime.lambda)) return false;
  Scalar lam_r = fd_prime.lambda.eval(w.r);
  for (int j = 0; j < n; ++j) {
    Vector rhs = fd_prime.d.column(j).scaled(w.u) + A.bracket.apply_left_basis(j, w.r);
    rhs.add_scaled(w.r, -fd_prime.lambda.at(j));
    if (fd.d.column(j) != rhs) return false;
  }
  if (fd.alpha0 != w.u * fd_prime.alpha0 + two(f) * lam_r) return false;
  Vector rhs = fd_prime.a0.scaled(w.u * w.u) + A.bracket_of(w.r, w.r);
  rhs.add_scaled(fd_prime.d.apply(w.r), two(f) * w.u);
  rhs.add_scaled(w.r, -(w.u * fd_prime.alpha0));
  rhs.add_scaled(w.r, -(two(f) * lam_r));
  return fd.a0 == rhs;
}

namespace {

// Rows of the linear system F2 poses on the entries of D for a fixed lambda.
// Unknown order: D(r,c) at index r*n + c.
LinearMap f2_system(const JJAlgebra& A, const LinearFunctional& lambda) {
  const Field& f = A.field;
  int n = A.dim;
  int unknowns = n * n;
  int rows = (n * (n + 1) / 2) * n;
  LinearMap sys(f, rows, unknowns);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Vector& bij = A.bracket_at(i, j);
      for (int m = 0; m < n; ++m, ++row) {
        // D([ei,ej])_m = sum_c bij_c D(m,c)
        for (int c = 0; c < n; ++c) sys.at(row, m * n + c) += bij.c[c];
        // [D(ei), ej]_m = sum_k D(k,i) [e_k, e_j]_m ; same with i and j swapped
        for (int k = 0; k < n; ++k) {
          sys.at(row, k * n + i) += A.bracket_at(k, j).c[m];
          sys.at(row, k * n + j) += A.bracket_at(i, k).c[m];
        }
        // lambda(ei) D(ej)_m + lambda(ej) D(ei)_m
        sys.at(row, m * n + j) += lambda.at(i);
        sys.at(row, m * n + i) += lambda.at(j);
      }
    }
  return sys;
}

LinearMap d_from_flat(const Field& f, int n, const Vector& flat) {
  LinearMap d(f, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) d.at(r, c) = flat.c[r * n + c];
  return d;
}

// Joint affine system F3/F5/F6 poses on a0 for fixed (lambda, D, alpha0).
void a0_system(const JJAlgebra& A, const LinearFunctional& lambda, const LinearMap& d,
               const Scalar& alpha0, LinearMap& sys, Vector& rhs) {
  const Field& f = A.field;
  int n = A.dim;
  Scalar tw = two(f), th = three(f);
  int rows = n * n + n + 1;
  sys = LinearMap(f, rows, n);
  rhs = Vector::zero(f, rows);
  int row = 0;
  // F3: [e_i, a0]_m + 2 lambda(e_i) (a0)_m = -(alpha0 D(e_i) + 2 D^2(e_i))_m
  for (int i = 0; i < n; ++i) {
    Vector dd = d.apply(d.column(i));
    for (int m = 0; m < n; ++m, ++row) {
      for (int c = 0; c < n; ++c) sys.at(row, c) += A.bracket_at(i, c).c[m];
      sys.at(row, m) += tw * lambda.at(i);
      rhs.c[row] = -(alpha0 * d.at(m, i) + tw * dd.c[m]);
    }
  }
  // F5: 3 D(a0) + 3 alpha0 a0 = 0
  for (int m = 0; m < n; ++m, ++row) {
    for (int c = 0; c < n; ++c) sys.at(row, c) += th * d.at(m, c);
    sys.at(row, m) += th * alpha0;
  }
  // F6: 3 lambda(a0) = -3 alpha0^2
  for (int c = 0; c < n; ++c) sys.at(row, c) += th * lambda.at(c);
  rhs.c[row] = -(th * alpha0 * alpha0);
}

void sort_by_encoding(std::vector<FlagDatum>& data) {
  std::sort(data.begin(), data.end(),
            [](const FlagDatum& a, const FlagDatum& b) { return a.encode() < b.encode(); });
}

}  // namespace

FlagEnumeration enumerate_flag_data(const JJAlgebra& a, const Budget& budget) {
  if (!a.field.finite()) throw PreconditionError("enumerate_flag_data: needs a prime field");
  const Field& f = a.field;
  int n = a.dim;
  FlagEnumeration out;

  VectorRange lambdas(f, n);
  budget.require(lambdas.size(), "enumerate_flag_data: lambda stage");
  std::uint64_t charged = lambdas.size();

  Scalar tw = two(f);
  for (std::uint64_t kl = 0; kl < lambdas.size(); ++kl) {
    ++out.lambda_candidates;
    LinearFunctional lambda(f, lambdas.at(kl).c);
    bool f1 = true;
    for (int i = 0; i < n && f1; ++i)
      for (int j = i; j < n && f1; ++j)
        if (!(lambda.eval(a.bracket_at(i, j)) + tw * lambda.at(i) * lambda.at(j)).is_zero())
          f1 = false;
    if (!f1) continue;

    LinearMap sys = f2_system(a, lambda);
    LinearSolution dsol = solve_linear(sys, Vector::zero(f, sys.rows));
    // homogeneous system: particular solution is zero, D-space = kernel
    VectorRange dcoeffs(f, static_cast<int>(dsol.kernel.size()));
    charged += dcoeffs.size();
    budget.require(charged, "enumerate_flag_data: D stage");

    for (std::uint64_t kd = 0; kd < dcoeffs.size(); ++kd) {
      ++out.d_candidates;
      Vector coeff = dcoeffs.at(kd);
      Vector flat = Vector::zero(f, n * n);
      for (int t = 0; t < static_cast<int>(dsol.kernel.size()); ++t)
        flat.add_scaled(dsol.kernel[t], coeff.c[t]);
      LinearMap d = d_from_flat(f, n, flat);

      for (std::int64_t av = 0; av < f.p; ++av) {
        Scalar alpha0 = Scalar::of(f, av);
        // F4 depends only on (lambda, D, alpha0)
        bool f4 = true;
        for (int i = 0; i < n && f4; ++i)
          if (!(three(f) * lambda.at(i) * alpha0 + tw * lambda.eval(d.column(i))).is_zero())
            f4 = false;
        if (!f4) continue;

        LinearMap asys;
        Vector arhs;
        a0_system(a, lambda, d, alpha0, asys, arhs);
        LinearSolution asol = solve_linear(asys, arhs);
        if (!asol.solvable) continue;
        VectorRange acoeffs(f, static_cast<int>(asol.kernel.size()));
        charged += acoeffs.size();
        budget.require(charged, "enumerate_flag_data: a0 stage");
        for (std::uint64_t ka = 0; ka < acoeffs.size(); ++ka) {
          ++out.a0_candidates;
          Vector ac = acoeffs.at(ka);
          Vector a0 = asol.particular;
          for (int t = 0; t < static_cast<int>(asol.kernel.size()); ++t)
            a0.add_scaled(asol.kernel[t], ac.c[t]);
          FlagDatum fd{a, d, lambda, a0, alpha0};
          if (passes_flag(fd)) out.data.push_back(std::move(fd));
        }
      }
    }
  }
  sort_by_encoding(out.data);
  return out;
}

std::vector<FlagDatum> enumerate_flag_data_naive(const JJAlgebra& a, const Budget& budget) {
  if (!a.field.finite()) throw PreconditionError("enumerate_flag_data_naive: needs a prime field");
  const Field& f = a.field;
  int n = a.dim;
  MatrixRange ds(f, n, n);
  VectorRange lambdas(f, n);
  VectorRange a0s(f, n);
  std::uint64_t total = ds.size();
  for (std::uint64_t s : {lambdas.size(), a0s.size(), static_cast<std::uint64_t>(f.p)}) {
    if (total > UINT64_MAX / s) throw BudgetExceeded("enumerate_flag_data_naive: space overflows");
    total *= s;
  }
  budget.require(total, "enumerate_flag_data_naive");

  std::vector<FlagDatum> out;
  LinearMap d(f, n, n);
  for (std::uint64_t kd = 0; kd < ds.size(); ++kd) {
    ds.fill(kd, d);
    for (std::uint64_t kl = 0; kl < lambdas.size(); ++kl) {
      LinearFunctional lambda(f, lambdas.at(kl).c);
      for (std::uint64_t ka = 0; ka < a0s.size(); ++ka) {
        Vector a0 = a0s.at(ka);
        for (std::int64_t av = 0; av < f.p; ++av) {
          FlagDatum fd{a, d, lambda, a0, Scalar::of(f, av)};
          if (passes_flag(fd)) out.push_back(std::move(fd));
        }
      }
    }
  }
  sort_by_encoding(out);
  return out;
}

FlagWitness H2Result::witness_to_representative(int i) const {
  const Field& f = algebra.field;
  auto to_root = [&](int start) {
    FlagWitness w{Vector::zero(f, algebra.dim), Scalar::one(f)};
    int cur = start;
    while (parent[cur] != cur) {
      w = w.then(step[cur]);
      cur = parent[cur];
    }
    return w;
  };
  int rep = orbits[orbit_of[i]][0];
  return to_root(i).then(to_root(rep).inverted());
}

H2Result classify_h2_codim1(const JJAlgebra& a, const Budget& budget, int jobs) {
  H2Result res;
  res.algebra = a;
  FlagEnumeration fe = enumerate_flag_data(a, budget);
  res.data = std::move(fe.data);
  const Field& f = a.field;
  int n = a.dim;
  std::size_t count = res.data.size();

  std::map<std::vector<std::int64_t>, int> index;
  for (std::size_t i = 0; i < count; ++i) index[res.data[i].encode()] = static_cast<int>(i);

  res.parent.resize(count);
  res.step.assign(count, FlagWitness{Vector::zero(f, n), Scalar::one(f)});
  for (std::size_t i = 0; i < count; ++i) res.parent[i] = static_cast<int>(i);

  std::function<int(int)> find = [&](int x) {
    while (res.parent[x] != x) x = res.parent[x];
    return x;
  };
  // merge roots so that witnesses can be rebuilt by composing along parents
  auto unite = [&](int from, int to, const FlagWitness& w) {
    // w carries data[from] onto data[to]
    int rf = find(from), rt = find(to);
    if (rf == rt) return;
    // carry data[rf] onto data[from] (inverse of stored chain), then w, then chain to rt:
    // simplest sound scheme: re-root rf's tree at `from`, then hang from->to.
    // Re-rooting: walk up from `from`, reversing edges.
    int cur = from;
    FlagWitness carry = res.step[cur];
    int next = res.parent[cur];
    res.parent[cur] = cur;
    while (cur != next) {
      int nn = res.parent[next];
      FlagWitness nw = res.step[next];
      res.parent[next] = cur;
      res.step[next] = carry.inverted();
      cur = next;
      next = nn;
      carry = nw;
    }
    res.parent[from] = to;
    res.step[from] = w;
  };

  VectorRange rs(f, n);
  std::uint64_t group_size = rs.size() * static_cast<std::uint64_t>(f.p - 1);
  if (count > 0) budget.require(group_size * count, "classify_h2_codim1: transport stage");

  struct Edge {
    int from, to;
    FlagWitness w;
  };
  std::vector<Edge> edges;
  std::mutex edges_mutex;
  std::atomic<std::uint64_t> applied{0};

  parallel_for(count, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<Edge> local;
    for (std::uint64_t i = lo; i < hi; ++i) {
      for (std::int64_t uv = 1; uv < f.p; ++uv)
        for (std::uint64_t kr = 0; kr < rs.size(); ++kr) {
          FlagWitness w{rs.at(kr), Scalar::of(f, uv)};
          FlagDatum img = flag_transport(res.data[i], w);
          auto it = index.find(img.encode());
          if (it == index.end())
            throw PreconditionError("classify_h2_codim1: transport left the flag set");
          applied.fetch_add(1, std::memory_order_relaxed);
          if (it->second != static_cast<int>(i))
            local.push_back(Edge{static_cast<int>(i), it->second, std::move(w)});
        }
    }
    std::lock_guard<std::mutex> lock(edges_mutex);
    for (auto& e : local) edges.push_back(std::move(e));
  });
  for (const auto& e : edges) unite(e.from, e.to, e.w);
  res.transports_applied = applied.load();
  res.exhaustive = true;

  std::map<int, std::vector<int>> orbit_map;
  for (std::size_t i = 0; i < count; ++i) orbit_map[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  res.orbit_of.assign(count, -1);
  for (auto& [root, members] : orbit_map) {
    std::sort(members.begin(), members.end());  // data are sorted by encoding, so [0] is lex-least
    res.orbits.push_back(members);
  }
  // deterministic orbit numbering: by lex-least member
  std::sort(res.orbits.begin(), res.orbits.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  for (std::size_t k = 0; k < res.orbits.size(); ++k)
    for (int m : res.orbits[k]) res.orbit_of[m] = static_cast<int>(k);
  return res;
}

FlagDatum heisenberg_oracle(const Field& f, const Scalar& alpha, const Scalar& beta,
                            const Scalar& gamma) {
  if (f.characteristic() == 2 || f.characteristic() == 3)
    throw PreconditionError("heisenberg_oracle: characteristic 2 and 3 are excluded");
  if (!(alpha * gamma).is_zero())
    throw PreconditionError("heisenberg_oracle: alpha * gamma must vanish");
  JJAlgebra h = JJAlgebra::heisenberg3(f);
  LinearMap d(f, 3, 3);
  d.at(2, 0) = beta;
  d.at(2, 1) = gamma;
  Vector a0 = Vector::zero(f, 3);
  a0.c[1] = alpha;
  return FlagDatum{std::move(h), std::move(d), LinearFunctional::zero(f, 3), std::move(a0),
                   Scalar::zero(f)};
}

FlagDatum abelian_oracle(const JJAlgebra& abelian, const LinearMap& d, const Vector& a0) {
  const Field& f = abelian.field;
  if (f.characteristic() == 2 || f.characteristic() == 3)
    throw PreconditionError("abelian_oracle: characteristic 2 and 3 are excluded");
  if (!abelian.bracket.is_zero()) throw PreconditionError("abelian_oracle: algebra is not abelian");
  if (!d.compose(d).is_zero()) throw PreconditionError("abelian_oracle: D^2 != 0");
  if (!d.apply(a0).is_zero()) throw PreconditionError("abelian_oracle: D(a0) != 0");
  return FlagDatum{abelian, d, LinearFunctional::zero(f, abelian.dim), a0, Scalar::zero(f)};
}

ClassifyAllResult recursive_classify(const Field& f, int target_dim, const Budget& budget,
                                     int jobs) {
  if (!f.finite()) throw PreconditionError("recursive_classify: needs a prime field");
  ClassifyAllResult res;
  std::int64_t p = f.characteristic();
  res.complete = (p != 2 && p != 3 && p != 5);
  if (!res.complete)
    res.caveat = "characteristic " + std::to_string(p) +
                 ": construction only, the emitted list may be incomplete";

  res.by_dim.push_back({JJAlgebra::zero_algebra(f)});
  for (int d = 0; d < target_dim; ++d) {
    std::vector<JJAlgebra> next;
    for (const JJAlgebra& a : res.by_dim[d]) {
      H2Result h2 = classify_h2_codim1(a, budget, jobs);
      for (std::size_t orbit = 0; orbit < h2.orbits.size(); ++orbit) {
        JJAlgebra raw = flag_extension(h2.representative(static_cast<int>(orbit)));
        JJAlgebra ext(f, raw.dim, raw.bracket);  // fresh e1..en labels
        if (!is_jj(ext))
          throw PreconditionError("recursive_classify: internal: extension fails the JJ axioms");
        bool fresh = true;
        for (const JJAlgebra& seen : next)
          if (is_isomorphic(seen, ext, budget)) {
            fresh = false;
            break;
          }
        if (fresh) next.push_back(std::move(ext));
      }
    }
    res.by_dim.push_back(std::move(next));
  }
  return res;
}

}  // namespace jja
