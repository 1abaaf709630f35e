#pragma once

#include <cstdint>
#include <optional>

#include "jja/extend.hpp"

namespace jja {

/// Codimension-1 extension data: an endomorphism D, a functional lambda, a
/// vector a0 and a scalar alpha0, subject to F1..F6.
struct FlagDatum {
  JJAlgebra algebra;
  LinearMap d;               // A -> A
  LinearFunctional lambda;   // A -> k
  Vector a0;                 // in A
  Scalar alpha0;

  bool operator==(const FlagDatum& o) const {
    return algebra == o.algebra && d == o.d && lambda == o.lambda && a0 == o.a0 &&
           alpha0 == o.alpha0;
  }
  /// (lambda, D row-major, a0, alpha0) as residues; prime fields only.
  std::vector<std::int64_t> encode() const;
};

/// F1 lambda([a,b]) + 2 lambda(a) lambda(b) = 0
/// F2 D([a,b]) = -[D(a),b] - [a,D(b)] - lambda(a) D(b) - lambda(b) D(a)
/// F3 [a,a0] + alpha0 D(a) + 2 D^2(a) + 2 lambda(a) a0 = 0
/// F4 3 lambda(a) alpha0 + 2 lambda(D(a)) = 0
/// F5 3 D(a0) + 3 alpha0 a0 = 0
/// F6 3 lambda(a0) + 3 alpha0^2 = 0
Report check_flag_datum(const FlagDatum& fd, const CheckOptions& = {});
bool passes_flag(const FlagDatum& fd);

/// The vdim-1 datum: x<|a = lambda(a) x, x|>a = D(a), f(x,x) = a0,
/// {x,x} = alpha0 x.
ExtendingDatum induced_datum(const FlagDatum& fd);

/// `printed` adds a0 into every [e_i, x] entry; kept only to document how the
/// two published bracket tables differ. `unified` is the supported form.
enum class FlagBracketForm { unified, printed };

/// Algebra of dimension dim(A)+1 with [e_i,x] = D(e_i) + lambda(e_i) x and
/// [x,x] = a0 + alpha0 x on top of the bracket of A.
JJAlgebra flag_extension(const FlagDatum& fd, FlagBracketForm form = FlagBracketForm::unified);

/// Base-change witness (r, u), u nonzero. Composition law:
/// (r1,u1) then (r2,u2) = (r1 + u1 r2, u1 u2); identity (0,1).
struct FlagWitness {
  Vector r;   // in A
  Scalar u;   // nonzero

  FlagWitness then(const FlagWitness& next) const;
  FlagWitness inverted() const;
};

/// Image of fd under (r,u):
///   D'(a)   = u^-1 (D(a) + lambda(a) r - [a,r])
///   lambda' = lambda
///   alpha0' = u^-1 (alpha0 - 2 lambda(r))
///   a0'     = u^-2 (a0 + alpha0 r + [r,r] - 2 lambda(r) r - 2 D(r))
/// This is the vdim-1 shadow of transport_datum along (x -> r, x -> u x).
FlagDatum flag_transport(const FlagDatum& fd, const FlagWitness& w);

/// lambda = lambda' and
///   D(a)   = u D'(a) + [a,r] - lambda'(a) r
///   alpha0 = u alpha0' + 2 lambda'(r)
///   a0     = u^2 a0' + [r,r] + 2u D'(r) - u alpha0' r - 2 lambda'(r) r
/// Holds iff flag_transport(fd, w) == fd'.
bool check_flag_equivalence(const FlagDatum& fd, const FlagDatum& fd_prime, const FlagWitness& w);

struct FlagEnumeration {
  std::vector<FlagDatum> data;  // sorted by encode()
  std::uint64_t lambda_candidates = 0;
  std::uint64_t d_candidates = 0;
  std::uint64_t a0_candidates = 0;
};

/// Staged search: lambda filtered by F1; per lambda, D from the F2 linear
/// system; per (lambda, D, alpha0) with F4, a0 from the joint F3/F5/F6
/// affine system; survivors re-checked in full.
FlagEnumeration enumerate_flag_data(const JJAlgebra& a, const Budget& budget = {});

/// Scan of every raw quadruple through check_flag_datum; the independent
/// route used to validate the staged search.
std::vector<FlagDatum> enumerate_flag_data_naive(const JJAlgebra& a, const Budget& budget = {});

/// Orbit partition of the flag data under all (r, u). The group action is
/// applied exhaustively to every datum, so two data in distinct orbits carry
/// a no-witness certificate by exhaustion.
struct H2Result {
  JJAlgebra algebra;
  std::vector<FlagDatum> data;
  std::vector<std::vector<int>> orbits;     // index lists; orbit[k][0] is the lex-least member
  std::vector<int> orbit_of;                // datum index -> orbit number
  std::uint64_t transports_applied = 0;
  bool exhaustive = false;

  const FlagDatum& representative(int orbit) const { return data[orbits[orbit][0]]; }
  /// Witness carrying datum i onto its orbit representative.
  FlagWitness witness_to_representative(int i) const;

  // union-find internals kept for witness reconstruction
  std::vector<int> parent;
  std::vector<FlagWitness> step;  // step[i] carries data[i] onto data[parent[i]]
};

H2Result classify_h2_codim1(const JJAlgebra& a, const Budget& budget = {}, int jobs = 1);

/// Flag datum from the (alpha, beta, gamma) table for the 3-dimensional
/// Heisenberg algebra: lambda = 0, alpha0 = 0, a0 = alpha e2, D(e1) = beta e3,
/// D(e2) = gamma e3, D(e3) = 0. Requires alpha*gamma = 0 and char not in
/// {2,3}. Emissions with alpha != 0 fail F3; see check_flag_datum.
FlagDatum heisenberg_oracle(const Field& f, const Scalar& alpha, const Scalar& beta,
                            const Scalar& gamma);

/// Flag datum (D, 0, a0, 0) on an abelian algebra; requires D^2 = 0,
/// D(a0) = 0 and char not in {2,3}. Always passes the checker.
FlagDatum abelian_oracle(const JJAlgebra& abelian, const LinearMap& d, const Vector& a0);

struct ClassifyAllResult {
  std::vector<std::vector<JJAlgebra>> by_dim;  // by_dim[d] = representatives of dimension d
  bool complete;                               // classification claim valid for this field
  std::string caveat;                          // set when only construction is claimed
};

/// Dimension-by-dimension: extend every representative by classify_h2_codim1,
/// then deduplicate across parents with is_isomorphic. Completeness of the
/// emitted list is claimed only for characteristic not in {2,3,5}.
ClassifyAllResult recursive_classify(const Field& f, int target_dim, const Budget& budget = {},
                                     int jobs = 1);

}  // namespace jja
