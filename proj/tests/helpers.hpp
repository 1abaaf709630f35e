#pragma once

#include <random>

#include "jja/classify.hpp"
#include "jja/galois.hpp"

namespace jja::testing {

using Rng = std::mt19937_64;

inline Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.finite()) return Scalar::of(f, static_cast<std::int64_t>(rng() % f.p));
  std::int64_t num = static_cast<std::int64_t>(rng() % 21) - 10;
  std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 7);
  return Scalar::of(f, mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

inline Vector random_vector(const Field& f, int n, Rng& rng) {
  Vector v = Vector::zero(f, n);
  for (auto& c : v.c) c = random_scalar(f, rng);
  return v;
}

inline LinearMap random_matrix(const Field& f, int rows, int cols, Rng& rng) {
  LinearMap m(f, rows, cols);
  for (auto& c : m.a) c = random_scalar(f, rng);
  return m;
}

inline BilinearMap random_bilinear(const Field& f, int l, int r, int t, Rng& rng) {
  BilinearMap m = BilinearMap::zero(f, l, r, t);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < r; ++j) m.entry(i, j) = random_vector(f, t, rng);
  return m;
}

inline BilinearMap random_symmetric_bilinear(const Field& f, int n, int t, Rng& rng) {
  BilinearMap m = BilinearMap::zero(f, n, n, t);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vector v = random_vector(f, t, rng);
      m.entry(i, j) = v;
      m.entry(j, i) = std::move(v);
    }
  return m;
}

inline ExtendingDatum random_datum(const JJAlgebra& a, int vdim, Rng& rng) {
  ExtendingDatum d = ExtendingDatum::zero(a, vdim);
  d.vact = random_bilinear(a.field, vdim, a.dim, vdim, rng);
  d.aact = random_bilinear(a.field, vdim, a.dim, a.dim, rng);
  d.cocycle = random_bilinear(a.field, vdim, vdim, a.dim, rng);
  d.brace = random_bilinear(a.field, vdim, vdim, vdim, rng);
  return d;
}

/// Random datum with symmetric cocycle and brace (passes E1 by construction).
inline ExtendingDatum random_symmetric_datum(const JJAlgebra& a, int vdim, Rng& rng) {
  ExtendingDatum d = ExtendingDatum::zero(a, vdim);
  d.vact = random_bilinear(a.field, vdim, a.dim, vdim, rng);
  d.aact = random_bilinear(a.field, vdim, a.dim, a.dim, rng);
  d.cocycle = random_symmetric_bilinear(a.field, vdim, a.dim, rng);
  d.brace = random_symmetric_bilinear(a.field, vdim, vdim, rng);
  return d;
}

/// [e1,e1] = e2, the 2-dimensional algebra with a one-dimensional square.
inline JJAlgebra line_square(const Field& f) {
  BilinearMap b = BilinearMap::zero(f, 2, 2, 2);
  b.entry(0, 0) = Vector::unit(f, 2, 1);
  return JJAlgebra(f, 2, std::move(b));
}

}  // namespace jja::testing
