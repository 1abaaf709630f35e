#include "jja/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

namespace jja {

Vector Vector::unit(const Field& f, int n, int i) {
  Vector v = zero(f, n);
  v.c.at(i) = Scalar::one(f);
  return v;
}

bool Vector::is_zero() const {
  for (const auto& s : c)
    if (!s.is_zero()) return false;
  return true;
}

Vector Vector::operator+(const Vector& o) const {
  if (field != o.field || dim() != o.dim()) throw DimensionMismatch("vector add shape");
  Vector r = *this;
  for (int i = 0; i < dim(); ++i) r.c[i] += o.c[i];
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  if (field != o.field || dim() != o.dim()) throw DimensionMismatch("vector sub shape");
  Vector r = *this;
  for (int i = 0; i < dim(); ++i) r.c[i] -= o.c[i];
  return r;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& s : r.c) s = -s;
  return r;
}

Vector Vector::scaled(const Scalar& s) const {
  Vector r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

Vector& Vector::add_scaled(const Vector& v, const Scalar& s) {
  if (dim() != v.dim()) throw DimensionMismatch("add_scaled shape");
  if (s.is_zero()) return *this;
  for (int i = 0; i < dim(); ++i) c[i] += v.c[i] * s;
  return *this;
}

int Vector::cmp(const Vector& o) const {
  for (int i = 0; i < std::min(dim(), o.dim()); ++i)
    if (int d = c[i].cmp(o.c[i]); d != 0) return d;
  return dim() < o.dim() ? -1 : dim() > o.dim() ? 1 : 0;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) os << (i ? ", " : "") << c[i].str();
  os << ")";
  return os.str();
}

Scalar LinearFunctional::eval(const Vector& v) const {
  if (field != v.field || dim() != v.dim()) throw DimensionMismatch("functional shape");
  Scalar s = Scalar::zero(field);
  for (int i = 0; i < dim(); ++i) s += coeffs[i] * v.c[i];
  return s;
}

bool LinearFunctional::is_zero() const {
  for (const auto& s : coeffs)
    if (!s.is_zero()) return false;
  return true;
}

LinearMap LinearMap::identity(const Field& f, int n) {
  LinearMap m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

LinearMap LinearMap::from_columns(const Field& f, const std::vector<Vector>& cols) {
  int r = cols.empty() ? 0 : cols[0].dim();
  LinearMap m(f, r, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != r) throw DimensionMismatch("ragged columns");
    for (int i = 0; i < r; ++i) m.at(i, static_cast<int>(j)) = cols[j].c[i];
  }
  return m;
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.dim() != cols || v.field != field) throw DimensionMismatch("matrix apply shape");
  Vector out = Vector::zero(field, rows);
  for (int j = 0; j < cols; ++j) {
    if (v.c[j].is_zero()) continue;
    for (int i = 0; i < rows; ++i) out.c[i] += at(i, j) * v.c[j];
  }
  return out;
}

Vector LinearMap::column(int j) const {
  Vector v = Vector::zero(field, rows);
  for (int i = 0; i < rows; ++i) v.c[i] = at(i, j);
  return v;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (cols != inner.rows || field != inner.field) throw DimensionMismatch("compose shape");
  LinearMap out(field, rows, inner.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < inner.cols; ++j) out.at(i, j) += at(i, k) * inner.at(k, j);
    }
  return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (rows != o.rows || cols != o.cols || field != o.field) throw DimensionMismatch("matrix add");
  LinearMap out = *this;
  for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
  return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  if (rows != o.rows || cols != o.cols || field != o.field) throw DimensionMismatch("matrix sub");
  LinearMap out = *this;
  for (size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
  return out;
}

LinearMap LinearMap::scaled(const Scalar& s) const {
  LinearMap out = *this;
  for (auto& x : out.a) x *= s;
  return out;
}

bool LinearMap::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<LinearMap> LinearMap::inverse() const {
  if (rows != cols) return std::nullopt;
  int n = rows;
  LinearMap m = *this;
  LinearMap inv = identity(field, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Scalar s = m.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      m.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool LinearMap::invertible() const {
  if (rows != cols) return false;
  LinearMap m = *this;
  int n = rows;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col)
      for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
    Scalar s = m.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col) * s;
      for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return true;
}

std::string LinearMap::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Vector BilinearMap::apply(const Vector& u, const Vector& w) const {
  if (u.dim() != left_dim || w.dim() != right_dim || u.field != field || w.field != field)
    throw DimensionMismatch("bilinear apply shape");
  Vector out = Vector::zero(field, target_dim);
  for (int i = 0; i < left_dim; ++i) {
    if (u.c[i].is_zero()) continue;
    for (int j = 0; j < right_dim; ++j) {
      if (w.c[j].is_zero()) continue;
      out.add_scaled(at(i, j), u.c[i] * w.c[j]);
    }
  }
  return out;
}

Vector BilinearMap::apply_left_basis(int i, const Vector& w) const {
  if (w.dim() != right_dim) throw DimensionMismatch("bilinear apply shape");
  Vector out = Vector::zero(field, target_dim);
  for (int j = 0; j < right_dim; ++j) {
    if (w.c[j].is_zero()) continue;
    out.add_scaled(at(i, j), w.c[j]);
  }
  return out;
}

Vector BilinearMap::apply_right_basis(const Vector& u, int j) const {
  if (u.dim() != left_dim) throw DimensionMismatch("bilinear apply shape");
  Vector out = Vector::zero(field, target_dim);
  for (int i = 0; i < left_dim; ++i) {
    if (u.c[i].is_zero()) continue;
    out.add_scaled(at(i, j), u.c[i]);
  }
  return out;
}

bool BilinearMap::symmetric() const {
  if (left_dim != right_dim) return false;
  for (int i = 0; i < left_dim; ++i)
    for (int j = i + 1; j < right_dim; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool BilinearMap::is_zero() const {
  for (const auto& v : c)
    if (!v.is_zero()) return false;
  return true;
}

LinearSolution solve_linear(const LinearMap& system, const Vector& rhs) {
  if (rhs.dim() != system.rows || rhs.field != system.field)
    throw DimensionMismatch("solve_linear shape");
  const Field& f = system.field;
  int m = system.rows, n = system.cols;
  LinearMap a = system;
  Vector b = rhs;

  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
      std::swap(b.c[piv], b.c[r]);
    }
    Scalar s = a.at(r, col).inverse();
    for (int j = 0; j < n; ++j) a.at(r, j) *= s;
    b.c[r] *= s;
    for (int i = 0; i < m; ++i) {
      if (i == r || a.at(i, col).is_zero()) continue;
      Scalar fac = a.at(i, col);
      for (int j = 0; j < n; ++j) a.at(i, j) -= fac * a.at(r, j);
      b.c[i] -= fac * b.c[r];
    }
    pivot_col.push_back(col);
    ++r;
  }

  LinearSolution sol;
  sol.rank = r;
  for (int i = r; i < m; ++i)
    if (!b.c[i].is_zero()) {
      sol.solvable = false;
      return sol;
    }
  sol.solvable = true;
  sol.particular = Vector::zero(f, n);
  for (int i = 0; i < r; ++i) sol.particular.c[pivot_col[i]] = b.c[i];

  std::vector<bool> is_pivot(n, false);
  for (int pc : pivot_col) is_pivot[pc] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    Vector k = Vector::zero(f, n);
    k.c[col] = Scalar::one(f);
    for (int i = 0; i < r; ++i) k.c[pivot_col[i]] = -a.at(i, col);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<Vector> rref_basis(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  const Field& f = vectors[0].field;
  int n = vectors[0].dim();
  std::vector<Vector> rows = vectors;
  int r = 0;
  for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i].c[col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    Scalar s = rows[r].c[col].inverse();
    rows[r] = rows[r].scaled(s);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i].c[col].is_zero()) continue;
      Scalar fac = rows[i].c[col];
      rows[i] = rows[i] - rows[r].scaled(fac);
    }
    ++r;
  }
  rows.resize(r, Vector::zero(f, n));
  return rows;
}

int rank_of(const std::vector<Vector>& vectors) { return static_cast<int>(rref_basis(vectors).size()); }

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return v.is_zero();
  LinearMap m = LinearMap::from_columns(v.field, basis);
  return solve_linear(m, v).solvable;
}

std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) {
    if (v.is_zero()) return Vector::zero(v.field, 0);
    return std::nullopt;
  }
  LinearMap m = LinearMap::from_columns(v.field, basis);
  LinearSolution s = solve_linear(m, v);
  if (!s.solvable) return std::nullopt;
  return s.particular;
}

namespace {
std::uint64_t checked_pow(std::uint64_t base, int e, const char* what) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / base) throw BudgetExceeded(std::string(what) + ": candidate space overflows");
    r *= base;
  }
  return r;
}
}  // namespace

VectorRange::VectorRange(const Field& f, int dim) : field_(f), dim_(dim) {
  if (!f.finite()) throw PreconditionError("vector enumeration needs a finite field");
  size_ = checked_pow(static_cast<std::uint64_t>(f.p), dim, "enumerate_vectors");
}

Vector VectorRange::at(std::uint64_t k) const {
  Vector v = Vector::zero(field_, dim_);
  for (int i = dim_ - 1; i >= 0; --i) {
    v.c[i] = Scalar::of(field_, static_cast<std::int64_t>(k % field_.p));
    k /= field_.p;
  }
  return v;
}

MatrixRange::MatrixRange(const Field& f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (!f.finite()) throw PreconditionError("matrix enumeration needs a finite field");
  size_ = checked_pow(static_cast<std::uint64_t>(f.p), rows * cols, "enumerate_matrices");
}

LinearMap MatrixRange::at(std::uint64_t k) const {
  LinearMap m(field_, rows_, cols_);
  fill(k, m);
  return m;
}

void MatrixRange::fill(std::uint64_t k, LinearMap& buf) const {
  if (buf.rows != rows_ || buf.cols != cols_ || buf.field != field_)
    buf = LinearMap(field_, rows_, cols_);
  for (int i = rows_ * cols_ - 1; i >= 0; --i) {
    buf.a[i] = Scalar::of(field_, static_cast<std::int64_t>(k % field_.p));
    k /= field_.p;
  }
}

std::uint64_t invertible_count(const Field& f, int n) {
  std::uint64_t pn = checked_pow(static_cast<std::uint64_t>(f.p), n, "invertible_count");
  std::uint64_t total = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    total *= pn - pi;
    pi *= f.p;
  }
  return total;
}

bool for_each_invertible(const Field& f, int n, const Budget& budget,
                         const std::function<bool(const LinearMap&)>& fn) {
  MatrixRange range(f, n, n);
  budget.require(range.size(), "enumerate_invertible");
  LinearMap buf(f, n, n);
  for (std::uint64_t k = 0; k < range.size(); ++k) {
    range.fill(k, buf);
    if (!buf.invertible()) continue;
    if (!fn(buf)) return false;
  }
  return true;
}

std::vector<LinearMap> enumerate_invertible(const Field& f, int n, const Budget& budget) {
  std::vector<LinearMap> out;
  for_each_invertible(f, n, budget, [&](const LinearMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

void parallel_for(std::uint64_t n, int jobs, const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  if (n == 0) return;
  if (jobs <= 1 || n < 1024) {
    fn(0, n);
    return;
  }
  unsigned workers = std::min<std::uint64_t>(static_cast<unsigned>(jobs), n);
  std::vector<std::thread> threads;
  std::uint64_t chunk = (n + workers - 1) / workers;
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t b = w * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&, b, e] {
      try {
        fn(b, e);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace jja
