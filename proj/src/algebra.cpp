#include "jja/algebra.hpp"

#include <sstream>

namespace jja {

namespace {

std::vector<std::string> default_labels(const char* stem, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(std::string(stem) + std::to_string(i));
  return out;
}

void check_tensor_shape(const Field& f, int dim, const BilinearMap& t, const char* what) {
  if (t.field != f || t.left_dim != dim || t.right_dim != dim || t.target_dim != dim)
    throw DimensionMismatch(std::string(what) + ": tensor shape does not match dim");
}

}  // namespace

JJAlgebra::JJAlgebra(Field f, int n, BilinearMap b, std::vector<std::string> labels)
    : field(f), dim(n), basis(std::move(labels)), bracket(std::move(b)) {
  check_tensor_shape(field, dim, bracket, "JJAlgebra");
  if (basis.empty()) basis = default_labels("e", dim);
  if (static_cast<int>(basis.size()) != dim) throw DimensionMismatch("JJAlgebra: basis labels");
}

JJAlgebra JJAlgebra::abelian(const Field& f, int n) {
  return JJAlgebra(f, n, BilinearMap::zero(f, n, n, n));
}

JJAlgebra JJAlgebra::heisenberg3(const Field& f) {
  BilinearMap b = BilinearMap::zero(f, 3, 3, 3);
  b.entry(0, 1) = Vector::unit(f, 3, 2);
  b.entry(1, 0) = Vector::unit(f, 3, 2);
  return JJAlgebra(f, 3, std::move(b));
}

CommAssocAlgebra::CommAssocAlgebra(Field f, int n, BilinearMap m, std::vector<std::string> labels)
    : field(f), dim(n), basis(std::move(labels)), mult(std::move(m)) {
  check_tensor_shape(field, dim, mult, "CommAssocAlgebra");
  if (basis.empty()) basis = default_labels("f", dim);
  if (static_cast<int>(basis.size()) != dim) throw DimensionMismatch("CommAssocAlgebra: basis labels");
}

CommAssocAlgebra CommAssocAlgebra::ground_field(const Field& f) {
  BilinearMap m = BilinearMap::zero(f, 1, 1, 1);
  m.entry(0, 0) = Vector::unit(f, 1, 0);
  return CommAssocAlgebra(f, 1, std::move(m), {"1"});
}

CommAssocAlgebra CommAssocAlgebra::truncated_polynomials(const Field& f, int m) {
  BilinearMap t = BilinearMap::zero(f, m, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i + j < m) t.entry(i, j) = Vector::unit(f, m, i + j);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
  return CommAssocAlgebra(f, m, std::move(t), std::move(labels));
}

Report verify_jj(const Field& f, int dim, const BilinearMap& bracket, const CheckOptions& opts) {
  check_tensor_shape(f, dim, bracket, "verify_jj");
  Report rep;
  {
    ConditionSink sink(rep.add("commutative"), opts);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        if (bracket.at(i, j) != bracket.at(j, i))
          if (!sink.fail({i, j})) return rep;
  }
  {
    ConditionSink sink(rep.add("jacobi"), opts);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        for (int k = j; k < dim; ++k) {
          // circular sum over a representative of each multiset; commutativity
          // failures are reported separately, so order inside brackets is fixed.
          Vector s = bracket.apply_left_basis(i, bracket.at(j, k));
          s = s + bracket.apply_left_basis(j, bracket.at(k, i));
          s = s + bracket.apply_left_basis(k, bracket.at(i, j));
          if (!s.is_zero())
            if (!sink.fail({i, j, k})) return rep;
        }
  }
  return rep;
}

Report verify_jj(const JJAlgebra& a, const CheckOptions& opts) {
  return verify_jj(a.field, a.dim, a.bracket, opts);
}

bool is_jj(const JJAlgebra& a) {
  CheckOptions opts;
  opts.early_exit = true;
  opts.max_witnesses = 1;
  return verify_jj(a, opts).pass();
}

Report verify_comm_assoc(const CommAssocAlgebra& b, const CheckOptions& opts) {
  Report rep;
  {
    ConditionSink sink(rep.add("commutative"), opts);
    for (int i = 0; i < b.dim; ++i)
      for (int j = i + 1; j < b.dim; ++j)
        if (b.mult.at(i, j) != b.mult.at(j, i))
          if (!sink.fail({i, j})) return rep;
  }
  {
    ConditionSink sink(rep.add("associative"), opts);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j)
        for (int k = 0; k < b.dim; ++k) {
          Vector lhs = b.mult.apply(b.mult.at(i, j), Vector::unit(b.field, b.dim, k));
          Vector rhs = b.mult.apply_left_basis(i, b.mult.at(j, k));
          if (lhs != rhs)
            if (!sink.fail({i, j, k})) return rep;
        }
  }
  return rep;
}

Report is_antiderivation(const JJAlgebra& a, const LinearMap& d, const CheckOptions& opts) {
  if (d.rows != a.dim || d.cols != a.dim || d.field != a.field)
    throw DimensionMismatch("is_antiderivation: map shape");
  Report rep;
  ConditionSink sink(rep.add("antiderivation"), opts);
  for (int i = 0; i < a.dim; ++i)
    for (int j = i; j < a.dim; ++j) {
      Vector lhs = d.apply(a.bracket_at(i, j));
      Vector rhs = -a.bracket_of(d.column(i), Vector::unit(a.field, a.dim, j)) -
                   a.bracket.apply_left_basis(i, d.column(j));
      if (lhs != rhs)
        if (!sink.fail({i, j})) return rep;
    }
  return rep;
}

Report ModuleStructure::validate(const CheckOptions& opts) const {
  return side == ActionSide::left ? is_left_module(algebra, space_dim, action, opts)
                                  : is_right_module(space_dim, algebra, action, opts);
}

Report is_left_module(const JJAlgebra& a, int vdim, const BilinearMap& act, const CheckOptions& opts) {
  if (act.field != a.field || act.left_dim != a.dim || act.right_dim != vdim || act.target_dim != vdim)
    throw DimensionMismatch("is_left_module: action shape");
  Report rep;
  ConditionSink sink(rep.add("left-module"), opts);
  for (int i = 0; i < a.dim; ++i)
    for (int j = i; j < a.dim; ++j)
      for (int x = 0; x < vdim; ++x) {
        Vector ex = Vector::unit(a.field, vdim, x);
        Vector lhs = act.apply(a.bracket_at(i, j), ex);
        Vector rhs = -act.apply_left_basis(i, act.apply_left_basis(j, ex)) -
                     act.apply_left_basis(j, act.apply_left_basis(i, ex));
        if (lhs != rhs)
          if (!sink.fail({i, j, x})) return rep;
      }
  return rep;
}

Report is_right_module(int vdim, const JJAlgebra& a, const BilinearMap& act, const CheckOptions& opts) {
  if (act.field != a.field || act.left_dim != vdim || act.right_dim != a.dim || act.target_dim != vdim)
    throw DimensionMismatch("is_right_module: action shape");
  Report rep;
  ConditionSink sink(rep.add("right-module"), opts);
  for (int x = 0; x < vdim; ++x)
    for (int i = 0; i < a.dim; ++i)
      for (int j = i; j < a.dim; ++j) {
        Vector lhs = act.apply_left_basis(x, a.bracket_at(i, j));
        const Vector& xa = act.at(x, i);
        const Vector& xb = act.at(x, j);
        Vector rhs = -act.apply_right_basis(xa, j) - act.apply_right_basis(xb, i);
        if (lhs != rhs)
          if (!sink.fail({x, i, j})) return rep;
      }
  return rep;
}

BilinearMap adjoint_action(const JJAlgebra& a) { return a.bracket; }

BilinearMap dual_action(const JJAlgebra& a) {
  // image of (e_i, e*_j): the functional x -> e*_j([e_i, x]); its k-th dual
  // coordinate is the j-th coordinate of [e_i, e_k].
  BilinearMap act = BilinearMap::zero(a.field, a.dim, a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vector v = Vector::zero(a.field, a.dim);
      for (int k = 0; k < a.dim; ++k) v.c[k] = a.bracket_at(i, k).c[j];
      act.entry(i, j) = std::move(v);
    }
  return act;
}

JJAlgebra current_algebra(const JJAlgebra& a, const CommAssocAlgebra& b) {
  if (a.field != b.field) throw FieldMismatch("current_algebra: fields differ");
  int n = a.dim, m = b.dim, nm = n * m;
  BilinearMap t = BilinearMap::zero(a.field, nm, nm, nm);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < m; ++p)
      for (int j = 0; j < n; ++j)
        for (int q = 0; q < m; ++q) {
          const Vector& ab = a.bracket_at(i, j);
          const Vector& bb = b.mult.at(p, q);
          Vector v = Vector::zero(a.field, nm);
          for (int k = 0; k < n; ++k) {
            if (ab.c[k].is_zero()) continue;
            for (int r = 0; r < m; ++r) v.c[k * m + r] = ab.c[k] * bb.c[r];
          }
          t.entry(i * m + p, j * m + q) = std::move(v);
        }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < m; ++p) labels.push_back(a.basis[i] + "*" + b.basis[p]);
  return JJAlgebra(a.field, nm, std::move(t), std::move(labels));
}

Report is_morphism(const JJAlgebra& a, const JJAlgebra& b, const LinearMap& phi,
                   const CheckOptions& opts) {
  if (phi.field != a.field || phi.cols != a.dim || phi.rows != b.dim || a.field != b.field)
    throw DimensionMismatch("is_morphism: map shape");
  Report rep;
  ConditionSink sink(rep.add("morphism"), opts);
  for (int i = 0; i < a.dim; ++i)
    for (int j = i; j < a.dim; ++j) {
      Vector lhs = phi.apply(a.bracket_at(i, j));
      Vector rhs = b.bracket_of(phi.column(i), phi.column(j));
      if (lhs != rhs)
        if (!sink.fail({i, j})) return rep;
    }
  return rep;
}

Report is_ideal(const JJAlgebra& a, const std::vector<Vector>& subspace, const CheckOptions& opts) {
  Report rep;
  ConditionSink sink(rep.add("ideal"), opts);
  for (int i = 0; i < a.dim; ++i)
    for (size_t w = 0; w < subspace.size(); ++w) {
      Vector prod = a.bracket.apply_left_basis(i, subspace[w]);
      if (!in_span(subspace, prod))
        if (!sink.fail({i, static_cast<int>(w)})) return rep;
    }
  return rep;
}

Report is_subalgebra(const JJAlgebra& a, const std::vector<Vector>& subspace,
                     const CheckOptions& opts) {
  Report rep;
  ConditionSink sink(rep.add("subalgebra"), opts);
  for (size_t v = 0; v < subspace.size(); ++v)
    for (size_t w = v; w < subspace.size(); ++w) {
      Vector prod = a.bracket_of(subspace[v], subspace[w]);
      if (!in_span(subspace, prod))
        if (!sink.fail({static_cast<int>(v), static_cast<int>(w)})) return rep;
    }
  return rep;
}

std::vector<Vector> derived_subspace(const JJAlgebra& a) {
  std::vector<Vector> gens;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i; j < a.dim; ++j)
      if (!a.bracket_at(i, j).is_zero()) gens.push_back(a.bracket_at(i, j));
  return rref_basis(gens);
}

std::vector<Vector> annihilator(const JJAlgebra& a) {
  // rows: for each (i, component m) the map v -> [e_i, v]_m
  LinearMap sys(a.field, a.dim * a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int m = 0; m < a.dim; ++m)
      for (int j = 0; j < a.dim; ++j) sys.at(i * a.dim + m, j) = a.bracket_at(i, j).c[m];
  LinearSolution sol = solve_linear(sys, Vector::zero(a.field, a.dim * a.dim));
  return sol.kernel;
}

IsoInvariants iso_invariants(const JJAlgebra& a) {
  return IsoInvariants{static_cast<int>(derived_subspace(a).size()),
                       static_cast<int>(annihilator(a).size())};
}

std::optional<LinearMap> is_isomorphic(const JJAlgebra& a, const JJAlgebra& b, const Budget& budget) {
  if (a.field != b.field || a.dim != b.dim) return std::nullopt;
  if (a.dim == 0) return LinearMap::identity(a.field, 0);
  if (!(iso_invariants(a) == iso_invariants(b))) return std::nullopt;
  if (!a.field.finite()) throw PreconditionError("is_isomorphic: isomorphism search needs a finite field");

  std::optional<LinearMap> found;
  CheckOptions quick;
  quick.early_exit = true;
  quick.max_witnesses = 0;
  for_each_invertible(a.field, a.dim, budget, [&](const LinearMap& phi) {
    if (is_morphism(a, b, phi, quick).pass()) {
      found = phi;
      return false;
    }
    return true;
  });
  return found;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& c : conditions) {
    os << c.name << ": " << (c.pass() ? "pass" : "FAIL");
    if (!c.pass()) {
      os << " [";
      for (size_t i = 0; i < c.failures.size(); ++i) {
        if (i) os << " ";
        os << "(";
        for (size_t j = 0; j < c.failures[i].indices.size(); ++j)
          os << (j ? "," : "") << c.failures[i].indices[j];
        os << ")";
      }
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace jja
