#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace jja {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

/// Hard cap on exhaustive searches. Checked before an enumeration starts and
/// charged incrementally inside long scans.
struct Budget {
  std::uint64_t limit = 100'000'000ULL;

  void require(std::uint64_t need, const char* what) const {
    if (need > limit)
      throw BudgetExceeded(std::string(what) + ": " + std::to_string(need) +
                           " candidates exceed budget " + std::to_string(limit));
  }
};

/// Exact coefficient domain: the rationals, or a prime field F_p with p < 2^31.
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::int64_t p = 0;  // modulus, prime kind only

  static Field rationals() { return Field{Kind::rationals, 0}; }
  static Field prime(std::int64_t p);

  bool finite() const { return kind == Kind::prime; }
  std::int64_t characteristic() const { return kind == Kind::prime ? p : 0; }

  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string name() const;                    // "Q" or "F5"
  static Field parse(const std::string& s);    // inverse of name()
};

/// A canonical field element: reduced fraction over Q, residue in [0,p) over F_p.
/// Prime-field values never touch GMP, so arithmetic over F_p does not allocate.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), v_(std::int64_t{0}) {}

  static Scalar zero(const Field& f) { return of(f, 0); }
  static Scalar one(const Field& f) { return of(f, 1); }
  static Scalar of(const Field& f, std::int64_t n);
  static Scalar of(const Field& f, const mpq_class& q);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws PreconditionError on zero
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  int cmp(const Scalar& o) const;  // total order on canonical representatives

  /// Residue in [0,p); prime fields only.
  std::int64_t residue() const;
  /// Canonical fraction; rationals only.
  const mpq_class& rational() const;

  std::string str() const;
  static Scalar parse(const Field& f, const std::string& s);

 private:
  Scalar(const Field& f, std::int64_t r) : field_(f), v_(r) {}
  Scalar(const Field& f, mpq_class q) : field_(f), v_(std::move(q)) {}
  void check_same(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch("scalar fields differ");
  }

  Field field_;
  std::variant<std::int64_t, mpq_class> v_;
};

/// Modular inverse of a mod p, a not divisible by p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace jja
