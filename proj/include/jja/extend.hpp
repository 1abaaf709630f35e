#pragma once

#include <optional>
#include <vector>

#include "jja/algebra.hpp"

namespace jja {

/// The four connecting maps between an algebra A and a space V:
///   vact    <|  : V x A -> V      (right action candidate)
///   aact    |>  : V x A -> A
///   cocycle f   : V x V -> A
///   brace  {-,-}: V x V -> V
/// A raw datum carries no algebraic guarantees; check_extending reports on
/// the compatibility conditions E1..E7.
struct ExtendingDatum {
  JJAlgebra algebra;  // A
  int vdim = 0;
  std::vector<std::string> vbasis;
  BilinearMap vact;
  BilinearMap aact;
  BilinearMap cocycle;
  BilinearMap brace;

  ExtendingDatum() = default;
  ExtendingDatum(JJAlgebra a, int vdim, BilinearMap vact, BilinearMap aact, BilinearMap cocycle,
                 BilinearMap brace, std::vector<std::string> vlabels = {});

  static ExtendingDatum zero(const JJAlgebra& a, int vdim);

  bool operator==(const ExtendingDatum& o) const {
    return algebra == o.algebra && vdim == o.vdim && vact == o.vact && aact == o.aact &&
           cocycle == o.cocycle && brace == o.brace;
  }
};

/// E1  f and {-,-} symmetric
/// E2  (V, <|) is a right module over A
/// E3  x |> [a,b] = -[x|>a, b] - [a, x|>b] - (x<|a)|>b - (x<|b)|>a
/// E4  {x,y} <| a = -{x, y<|a} - {x<|a, y} - x<|(y|>a) - y<|(x|>a)
/// E5  {x,y} |> a = -x|>(y|>a) - y|>(x|>a) - [a, f(x,y)] - f(x, y<|a) - f(x<|a, y)
/// E6  circular f(x,{y,z}) + circular x|>f(y,z) = 0
/// E7  circular {x,{y,z}} + circular x<|f(y,z) = 0
Report check_extending(const ExtendingDatum& d, const CheckOptions& = {});
bool passes_extending(const ExtendingDatum& d);

/// Bracket on A x V (A block first):
///   [(a,x),(b,y)] = ([a,b] + x|>b + y|>a + f(x,y), {x,y} + x<|b + y<|a)
/// Defined for raw data; the result satisfies the JJ axioms iff E1..E7 hold.
JJAlgebra unified_product(const ExtendingDatum& d);

/// (r, v): V -> A and V -> V inducing psi(a,x) = (a + r(x), v(x)).
struct MorphismPair {
  LinearMap r;  // V -> A
  LinearMap v;  // V -> V
};

/// M1..M4; pass iff psi is a bracket-preserving map of the two products
/// restricting to the identity on A.
Report check_morphism_pair(const ExtendingDatum& d, const ExtendingDatum& dprime,
                           const MorphismPair& pair, const CheckOptions& = {});

/// The induced block matrix [(I, r), (0, v)] on A x V coordinates.
LinearMap morphism_pair_matrix(const ExtendingDatum& d, const MorphismPair& pair);

/// Push a datum along (r, v), v invertible; the argument plays the unprimed
/// role and the result the primed one. Transporting by (0, id) is the
/// identity and transports compose along (r1 + v1-then-r2, v2 o v1).
ExtendingDatum transport_datum(const ExtendingDatum& d, const LinearMap& r, const LinearMap& v);

/// Exhaustive witness search: some (r, v) with transport_datum(dprime, r, v) == d.
std::optional<MorphismPair> are_equivalent(const ExtendingDatum& d, const ExtendingDatum& dprime,
                                           const Budget& budget = {});

/// Canonical datum of a subalgebra A <= E along a retraction p: E -> A:
///   x |> a = p([x,a]),  x <| a = [x,a] - p([x,a]),
///   f(x,y) = p([x,y]),  {x,y} = [x,y] - p([x,y])
/// over V = ker p, together with phi(a,x) = a + x identifying the unified
/// product with E.
struct CanonicalDatum {
  ExtendingDatum datum;                // over the abstract copy of A below
  JJAlgebra sub;                       // A in the coordinates of sub_basis
  std::vector<Vector> sub_basis;       // basis of A inside E
  std::vector<Vector> complement_basis;  // basis of V = ker p inside E
  LinearMap phi;                       // (A x V)-coords -> E-coords, columns sub_basis ++ complement_basis
};

/// p is (dim A) x (dim E) in the coordinates of a_basis; requires p to restrict
/// to the identity on a_basis and a_basis to span a subalgebra.
CanonicalDatum canonical_datum(const JJAlgebra& e, const std::vector<Vector>& a_basis,
                               const LinearMap& p);

/// Coordinate projection onto span(a_basis) along span(v_basis).
LinearMap projection_from_complement(const JJAlgebra& e, const std::vector<Vector>& a_basis,
                                     const std::vector<Vector>& v_basis);

/// Greedy completion of a_basis to a basis of E by standard basis vectors.
std::vector<Vector> extend_to_complement(const JJAlgebra& e, const std::vector<Vector>& a_basis);

}  // namespace jja
