#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jja/linalg.hpp"
#include "jja/report.hpp"

namespace jja {

/// Finite-dimensional algebra with a symmetric bracket, given by its
/// structure-constant tensor. Construction does not validate the axioms:
/// verify_jj reports on them, and the biconditional checks need non-examples.
struct JJAlgebra {
  Field field;
  int dim = 0;
  std::vector<std::string> basis;
  BilinearMap bracket;  // dim x dim -> dim

  JJAlgebra() : field(Field::rationals()) {}
  JJAlgebra(Field f, int n, BilinearMap b, std::vector<std::string> labels = {});

  static JJAlgebra zero_algebra(const Field& f) { return abelian(f, 0); }
  static JJAlgebra abelian(const Field& f, int n);
  static JJAlgebra heisenberg3(const Field& f);

  const Vector& bracket_at(int i, int j) const { return bracket.at(i, j); }
  Vector bracket_of(const Vector& u, const Vector& v) const { return bracket.apply(u, v); }

  bool operator==(const JJAlgebra& o) const {
    return field == o.field && dim == o.dim && bracket == o.bracket;
  }
};

/// Commutative associative partner algebra for current algebras.
struct CommAssocAlgebra {
  Field field;
  int dim = 0;
  std::vector<std::string> basis;
  BilinearMap mult;

  CommAssocAlgebra() : field(Field::rationals()) {}
  CommAssocAlgebra(Field f, int n, BilinearMap m, std::vector<std::string> labels = {});

  /// k itself: one basis vector u with u*u = u.
  static CommAssocAlgebra ground_field(const Field& f);
  /// k[t]/(t^m), basis 1, t, ..., t^{m-1}.
  static CommAssocAlgebra truncated_polynomials(const Field& f, int m);
};

Report verify_jj(const Field& f, int dim, const BilinearMap& bracket, const CheckOptions& = {});
Report verify_jj(const JJAlgebra& a, const CheckOptions& = {});
bool is_jj(const JJAlgebra& a);

Report verify_comm_assoc(const CommAssocAlgebra& b, const CheckOptions& = {});

/// D([a,b]) = -[D(a),b] - [a,D(b)] on every basis pair.
Report is_antiderivation(const JJAlgebra& a, const LinearMap& d, const CheckOptions& = {});

/// Side-tagged action of an algebra on a space.
enum class ActionSide { left, right };
struct ModuleStructure {
  JJAlgebra algebra;
  int space_dim = 0;
  ActionSide side = ActionSide::left;
  BilinearMap action;  // left: A x V -> V ; right: V x A -> V

  Report validate(const CheckOptions& = {}) const;
};

/// [a,b] |> x = -a |> (b |> x) - b |> (a |> x)
Report is_left_module(const JJAlgebra& a, int vdim, const BilinearMap& act, const CheckOptions& = {});
/// x <| [a,b] = -(x <| a) <| b - (x <| b) <| a
Report is_right_module(int vdim, const JJAlgebra& a, const BilinearMap& act, const CheckOptions& = {});

/// a |> x := [a,x] on A itself.
BilinearMap adjoint_action(const JJAlgebra& a);
/// (a |> a*)(x) := a*([a,x]) on the dual space, in the dual basis.
BilinearMap dual_action(const JJAlgebra& a);

/// Tensor-product algebra with [a (x) b, a' (x) b'] = [a,a'] (x) bb'.
/// Basis e_i (x) f_j at index i*dim(B) + j.
JJAlgebra current_algebra(const JJAlgebra& a, const CommAssocAlgebra& b);

Report is_morphism(const JJAlgebra& a, const JJAlgebra& b, const LinearMap& phi,
                   const CheckOptions& = {});
Report is_ideal(const JJAlgebra& a, const std::vector<Vector>& subspace, const CheckOptions& = {});
Report is_subalgebra(const JJAlgebra& a, const std::vector<Vector>& subspace,
                     const CheckOptions& = {});

/// Cheap isomorphism invariants used to prune the GL search.
struct IsoInvariants {
  int derived_dim = 0;      // dim span{ [e_i,e_j] }
  int annihilator_dim = 0;  // dim { v : [A, v] = 0 }
  bool operator==(const IsoInvariants& o) const {
    return derived_dim == o.derived_dim && annihilator_dim == o.annihilator_dim;
  }
};
IsoInvariants iso_invariants(const JJAlgebra& a);
std::vector<Vector> derived_subspace(const JJAlgebra& a);
std::vector<Vector> annihilator(const JJAlgebra& a);

/// Search GL(A) for a bracket-preserving bijection onto B.
std::optional<LinearMap> is_isomorphic(const JJAlgebra& a, const JJAlgebra& b,
                                       const Budget& budget = {});

}  // namespace jja
