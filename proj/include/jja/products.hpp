#pragma once

#include <optional>

#include "jja/extend.hpp"

namespace jja {

/// Two algebras tied by a pair of actions; cocycle-free case of the datum.
struct MatchedPair {
  JJAlgebra a;         // A
  JJAlgebra v;         // V, with its own bracket as the brace
  BilinearMap vact;    // <| : V x A -> V
  BilinearMap aact;    // |> : V x A -> A
};

ExtendingDatum induced_datum(const MatchedPair& mp);

/// Conditions: V is a JJ algebra, (V,<|) right module, (A,|>) left V-module,
/// MP1 (= E3), MP2 (= E4).
Report check_matched_pair(const MatchedPair& mp, const CheckOptions& = {});

/// [(a,x),(b,y)] = ([a,b] + x|>b + y|>a, {x,y} + x<|b + y<|a);
/// throws PreconditionError when the pair fails its checker.
JJAlgebra bicrossed_product(const MatchedPair& mp);

/// Matched pair with trivial <|. Requires (A,|>) a left V-module with every
/// x |> - an antiderivation of A.
JJAlgebra semidirect_product(const JJAlgebra& v, const JJAlgebra& a, const BilinearMap& aact);

struct Factorization {
  MatchedPair pair;
  LinearMap phi;  // (A x V)-coords -> E-coords
};

/// E = span(a_basis) (+) span(v_basis) with both spans subalgebras; recovers
/// the matched pair realizing E as a bicrossed product. The cocycle of the
/// canonical datum vanishes because V is a subalgebra; this is asserted.
Factorization factorize(const JJAlgebra& e, const std::vector<Vector>& a_basis,
                        const std::vector<Vector>& v_basis);

/// Trivial <| case of the datum: A an ideal of the product.
struct CrossedSystem {
  JJAlgebra a;
  JJAlgebra v;
  BilinearMap aact;     // |> : V x A -> A
  BilinearMap cocycle;  // f : V x V -> A
};

ExtendingDatum induced_datum(const CrossedSystem& cs);

/// CP1 f symmetric; CP2 each x |> - an antiderivation; CP3 {x,y}|>a =
/// -x|>(y|>a) - y|>(x|>a) - [a,f(x,y)]; CP4 circular f(x,{y,z}) + circular
/// x|>f(y,z) = 0.
Report check_crossed_system(const CrossedSystem& cs, const CheckOptions& = {});

/// [(a,x),(b,y)] = ([a,b] + x|>b + y|>a + f(x,y), {x,y})
JJAlgebra crossed_product(const CrossedSystem& cs);

/// (D, a0) with D an antiderivation, 3 D(a0) = 0 and 2 D^2(a) = -[a, a0];
/// the vdim-1 shadow of a crossed system.
struct SupersolvableDatum {
  LinearMap d;
  Vector a0;
};

/// S1: antiderivation and 3 D(a0) = 0.  S2: 2 D^2(a) = -[a, a0] on the basis.
Report check_supersolvable_datum(const JJAlgebra& a, const LinearMap& d, const Vector& a0,
                                 const CheckOptions& = {});

/// The crossed system on a line: x |> a = D(a), f(x,x) = a0, abelian brace.
CrossedSystem crossed_system_from_supersolvable(const JJAlgebra& a, const LinearMap& d,
                                                const Vector& a0);
SupersolvableDatum supersolvable_from_crossed(const CrossedSystem& cs);

/// Crossed product with a line; requires char != 3 and a valid datum.
JJAlgebra supersolvable_extension(const JJAlgebra& a, const LinearMap& d, const Vector& a0);

enum class ChainReading {
  ideals_of_e,   // every chain member an ideal of the whole algebra
  in_successor,  // each member only an ideal of the next one
};

/// Chain 0 = I_0 < I_1 < ... < I_n = E with codimension-1 steps; returns the
/// bases of I_1..I_n on success. Input must satisfy the JJ axioms.
std::optional<std::vector<std::vector<Vector>>> is_supersolvable(
    const JJAlgebra& e, const Budget& budget = {}, ChainReading reading = ChainReading::ideals_of_e);

/// Trivial |> case of the datum; the invariant-reconstruction shape.
struct SkewCrossedSystem {
  JJAlgebra a;
  int vdim = 0;
  BilinearMap vact;     // <| : V x A -> V
  BilinearMap cocycle;  // f : V x V -> A
  BilinearMap brace;    // {-,-} : V x V -> V
};

ExtendingDatum induced_datum(const SkewCrossedSystem& scs);

/// SC1 f, brace symmetric; SC2 right module; SC3 {x,y}<|a = -{x,y<|a} -
/// {x<|a,y}; SC4 [a,f(x,y)] + f(x,y<|a) + f(x<|a,y) = 0; SC5 circular
/// f(x,{y,z}) = 0; SC6 circular {x,{y,z}} + circular x<|f(y,z) = 0.
Report check_skew_crossed(const SkewCrossedSystem& scs, const CheckOptions& = {});

/// [(a,x),(b,y)] = ([a,b] + f(x,y), {x,y} + x<|b + y<|a)
JJAlgebra skew_crossed_product(const SkewCrossedSystem& scs);

}  // namespace jja
