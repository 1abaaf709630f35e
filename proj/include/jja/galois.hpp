#pragma once

#include "jja/products.hpp"

namespace jja {

/// Candidate automorphism data of a bicrossed extension: an invertible sigma
/// on V and an arbitrary r : V -> A.
struct GaloisPair {
  LinearMap sigma;  // V -> V, invertible
  LinearMap r;      // V -> A

  bool operator==(const GaloisPair& o) const { return sigma == o.sigma && r == o.r; }
};

/// G1 sigma(x) <| a = sigma(x <| a)
/// G2 sigma(x) |> a = r(x <| a) + x |> a - [a, r(x)]
/// G3 sigma({x,y}) = {sigma(x),sigma(y)} + sigma(x) <| r(y) + sigma(y) <| r(x)
/// G4 r({x,y}) = [r(x),r(y)] + sigma(x) |> r(y) + sigma(y) |> r(x)
Report check_galois_pair(const MatchedPair& mp, const GaloisPair& pair, const CheckOptions& = {});

/// The block matrix (a,x) -> (a + r(x), sigma(x)) on the product coordinates.
LinearMap galois_automorphism_matrix(const MatchedPair& mp, const GaloisPair& pair);

/// Pairs under (s,r)(s',r') = (s o s', r o s' + r'); closed with identity
/// (id, 0) and inverses. Built and validated by enumerate_galois_group.
struct GaloisGroup {
  MatchedPair pair;
  std::vector<GaloisPair> elements;
  std::vector<std::vector<int>> table;  // table[i][j] = index of elements[i] * elements[j]
  std::vector<int> inverse;
  int identity = -1;

  std::size_t order() const { return elements.size(); }
};

GaloisPair compose_pairs(const GaloisPair& g, const GaloisPair& h);
GaloisPair inverse_pair(const GaloisPair& g);

/// Filters GL(V) x Hom(V, A) through the four conditions, then validates:
/// closure under the pair law, identity and inverses, that every element's
/// block matrix is an automorphism of the bicrossed product fixing A
/// pointwise, and that composition of matrices matches the table.
GaloisGroup enumerate_galois_group(const MatchedPair& mp, const Budget& budget = {});

/// All automorphisms of E fixing span(e_0..e_{adim-1}) pointwise, found by
/// scanning every assignment of the remaining basis images. Independent of
/// the pair machinery; used to cross-check enumerate_galois_group.
std::vector<LinearMap> stabilizer_automorphisms(const JJAlgebra& e, int adim,
                                                const Budget& budget = {});

/// A finite group of automorphisms given by explicit matrices and a
/// composition table.
struct GroupAction {
  JJAlgebra algebra;
  std::vector<LinearMap> elements;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  int identity = -1;

  std::size_t order() const { return elements.size(); }

  /// Close the generated set and build the table; throws when some element
  /// is not an automorphism or the closure exceeds the budget.
  static GroupAction generate(const JJAlgebra& a, const std::vector<LinearMap>& generators,
                              const Budget& budget = {});
};

Report validate_action(const GroupAction& action, const CheckOptions& = {});

/// Fixed space, averaged projection t(x) = |G|^-1 sum_g g.x, and its kernel.
struct TraceData {
  std::vector<Vector> invariant_basis;  // basis of A^G inside A
  JJAlgebra invariants;                 // A^G with structure constants in that basis
  LinearMap trace;                      // t : A -> A (endomorphism form)
  std::vector<Vector> kernel_basis;     // basis of ker t = complement V
};

/// Requires |G| invertible in the field. Verifies that t is a retraction
/// onto the fixed space and that t([x,a]) = [t(x),a] for invariant a.
TraceData invariants_and_trace(const GroupAction& action);

/// A as a skew crossed product of its invariants: the canonical datum along
/// the trace retraction has trivial |>, which is asserted.
struct ArtinResult {
  TraceData trace;
  SkewCrossedSystem system;  // on A^G through V = ker t
  LinearMap theta;           // (A^G x V)-coords -> A-coords, theta(a,x) = a + x
};

ArtinResult artin_reconstruct(const GroupAction& action);

}  // namespace jja
