#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "jja/field.hpp"

namespace jja {

struct Vector {
  Field field;
  std::vector<Scalar> c;

  Vector() : field(Field::rationals()) {}
  Vector(Field f, std::vector<Scalar> coords) : field(f), c(std::move(coords)) {}

  static Vector zero(const Field& f, int n) { return Vector(f, std::vector<Scalar>(n, Scalar::zero(f))); }
  static Vector unit(const Field& f, int n, int i);

  int dim() const { return static_cast<int>(c.size()); }
  bool is_zero() const;

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector scaled(const Scalar& s) const;
  Vector& add_scaled(const Vector& v, const Scalar& s);  // *this += s*v

  bool operator==(const Vector& o) const { return field == o.field && c == o.c; }
  bool operator!=(const Vector& o) const { return !(*this == o); }
  int cmp(const Vector& o) const;

  std::string str() const;
};

struct LinearFunctional {
  Field field;
  std::vector<Scalar> coeffs;

  LinearFunctional() : field(Field::rationals()) {}
  LinearFunctional(Field f, std::vector<Scalar> cs) : field(f), coeffs(std::move(cs)) {}
  static LinearFunctional zero(const Field& f, int n) {
    return LinearFunctional(f, std::vector<Scalar>(n, Scalar::zero(f)));
  }

  int dim() const { return static_cast<int>(coeffs.size()); }
  Scalar eval(const Vector& v) const;
  Scalar at(int i) const { return coeffs.at(i); }
  bool is_zero() const;
  bool operator==(const LinearFunctional& o) const { return field == o.field && coeffs == o.coeffs; }
};

/// Dense matrix, column-per-basis-vector: column j is the image of e_j.
struct LinearMap {
  Field field;
  int rows = 0, cols = 0;
  std::vector<Scalar> a;  // row-major

  LinearMap() : field(Field::rationals()) {}
  LinearMap(Field f, int r, int c) : field(f), rows(r), cols(c), a(static_cast<size_t>(r) * c, Scalar::zero(f)) {}

  static LinearMap identity(const Field& f, int n);
  static LinearMap zero(const Field& f, int r, int c) { return LinearMap(f, r, c); }
  static LinearMap from_columns(const Field& f, const std::vector<Vector>& cols);

  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vector apply(const Vector& v) const;
  Vector column(int j) const;
  LinearMap compose(const LinearMap& inner) const;  // (*this) o inner
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap scaled(const Scalar& s) const;
  std::optional<LinearMap> inverse() const;
  bool invertible() const;
  bool is_zero() const;

  bool operator==(const LinearMap& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator!=(const LinearMap& o) const { return !(*this == o); }

  std::string str() const;
};

/// Basis-indexed bilinear map  W_l x W_r -> W_t ; entry(i,j) is the image of (e_i, e_j).
struct BilinearMap {
  Field field;
  int left_dim = 0, right_dim = 0, target_dim = 0;
  std::vector<Vector> c;  // c[i*right_dim + j]

  BilinearMap() : field(Field::rationals()) {}
  BilinearMap(Field f, int l, int r, int t)
      : field(f), left_dim(l), right_dim(r), target_dim(t),
        c(static_cast<size_t>(l) * r, Vector::zero(f, t)) {}

  static BilinearMap zero(const Field& f, int l, int r, int t) { return BilinearMap(f, l, r, t); }

  Vector& entry(int i, int j) { return c[static_cast<size_t>(i) * right_dim + j]; }
  const Vector& at(int i, int j) const { return c[static_cast<size_t>(i) * right_dim + j]; }

  /// Bilinear extension of the basis tensor: sum_i sum_j u_i w_j c[i][j].
  Vector apply(const Vector& u, const Vector& w) const;
  /// Partial application with a basis vector on one side.
  Vector apply_left_basis(int i, const Vector& w) const;
  Vector apply_right_basis(const Vector& u, int j) const;

  bool symmetric() const;  // requires left_dim == right_dim
  bool is_zero() const;

  bool operator==(const BilinearMap& o) const {
    return field == o.field && left_dim == o.left_dim && right_dim == o.right_dim &&
           target_dim == o.target_dim && c == o.c;
  }
  bool operator!=(const BilinearMap& o) const { return !(*this == o); }
};

/// f(x,y,z) + f(y,z,x) + f(z,x,y)
template <class Fn>
Vector circular_sum(Fn&& f, const Vector& x, const Vector& y, const Vector& z) {
  Vector s = f(x, y, z);
  s = s + f(y, z, x);
  s = s + f(z, x, y);
  return s;
}

/// Full affine solution set of  system * x = rhs.
struct LinearSolution {
  bool solvable = false;
  Vector particular;            // any solution, when solvable
  std::vector<Vector> kernel;   // basis of the homogeneous solution space
  int rank = 0;
};

LinearSolution solve_linear(const LinearMap& system, const Vector& rhs);

/// Reduced row-echelon basis of the span; canonical for a given span.
std::vector<Vector> rref_basis(const std::vector<Vector>& vectors);
int rank_of(const std::vector<Vector>& vectors);
bool in_span(const std::vector<Vector>& basis, const Vector& v);
/// Coordinates of v in the given (independent) spanning set, if any.
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v);

/// All p^dim vectors of F_p^dim in a fixed lexicographic order (coordinate 0
/// most significant). Random access by index keeps partitioning trivial.
class VectorRange {
 public:
  VectorRange(const Field& f, int dim);
  std::uint64_t size() const { return size_; }
  Vector at(std::uint64_t k) const;

 private:
  Field field_;
  int dim_;
  std::uint64_t size_;
};

/// All rows x cols matrices over F_p, same ordering scheme.
class MatrixRange {
 public:
  MatrixRange(const Field& f, int rows, int cols);
  std::uint64_t size() const { return size_; }
  LinearMap at(std::uint64_t k) const;
  void fill(std::uint64_t k, LinearMap& buf) const;

 private:
  Field field_;
  int rows_, cols_;
  std::uint64_t size_;
};

/// |GL_n(F_p)| = prod_{i<n} (p^n - p^i)
std::uint64_t invertible_count(const Field& f, int n);

/// Invoke fn on every invertible n x n map over F_p, each exactly once, in the
/// MatrixRange order. fn returns false to stop early. Returns false if stopped.
bool for_each_invertible(const Field& f, int n, const Budget& budget,
                         const std::function<bool(const LinearMap&)>& fn);

std::vector<LinearMap> enumerate_invertible(const Field& f, int n, const Budget& budget = {});

/// Chunked index-range parallelism; jobs <= 1 runs inline. fn(begin, end).
void parallel_for(std::uint64_t n, int jobs, const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace jja
