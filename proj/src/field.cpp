#include "jja/field.hpp"

#include <cctype>

namespace jja {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31))
    throw PreconditionError("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw PreconditionError("modulus is not prime: " + std::to_string(p));
  return Field{Kind::prime, p};
}

std::string Field::name() const {
  return kind == Kind::rationals ? std::string("Q") : "F" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.size() >= 2 && s[0] == 'F') {
    try {
      return prime(std::stoll(s.substr(1)));
    } catch (const PreconditionError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad field descriptor: " + s);
    }
  }
  throw ParseError("bad field descriptor: " + s);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  if (nr == 0) throw PreconditionError("zero has no inverse");
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return t;
}

Scalar Scalar::of(const Field& f, std::int64_t n) {
  if (f.kind == Field::Kind::prime) {
    std::int64_t r = n % f.p;
    if (r < 0) r += f.p;
    return Scalar(f, r);
  }
  return Scalar(f, mpq_class(static_cast<long>(n)));
}

Scalar Scalar::of(const Field& f, const mpq_class& q) {
  if (f.kind == Field::Kind::rationals) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(f, std::move(c));
  }
  // reduce num * den^-1 mod p; den must be invertible
  mpq_class c = q;
  c.canonicalize();
  mpz_class pz(static_cast<long>(f.p));
  mpz_class num = c.get_num() % pz;
  mpz_class den = c.get_den() % pz;
  if (den == 0) throw PreconditionError("denominator not invertible mod " + std::to_string(f.p));
  std::int64_t n = num.get_si();
  std::int64_t d = den.get_si();
  std::int64_t r = (n % f.p) * mod_inverse(d, f.p) % f.p;
  if (r < 0) r += f.p;
  return Scalar(f, r);
}

bool Scalar::is_zero() const {
  if (field_.kind == Field::Kind::prime) return std::get<std::int64_t>(v_) == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.kind == Field::Kind::prime) return std::get<std::int64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (field_.kind == Field::Kind::prime) {
    std::int64_t r = std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_);
    if (r >= field_.p) r -= field_.p;
    return Scalar(field_, r);
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (field_.kind == Field::Kind::prime) {
    std::int64_t r = std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_);
    if (r < 0) r += field_.p;
    return Scalar(field_, r);
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (field_.kind == Field::Kind::prime)
    return Scalar(field_, std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_) % field_.p);
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-() const {
  if (field_.kind == Field::Kind::prime) {
    std::int64_t r = std::get<std::int64_t>(v_);
    return Scalar(field_, r == 0 ? 0 : field_.p - r);
  }
  return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("zero has no inverse");
  if (field_.kind == Field::Kind::prime)
    return Scalar(field_, mod_inverse(std::get<std::int64_t>(v_), field_.p));
  return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.kind == Field::Kind::prime)
    return std::get<std::int64_t>(v_) == std::get<std::int64_t>(o.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

int Scalar::cmp(const Scalar& o) const {
  check_same(o);
  if (field_.kind == Field::Kind::prime) {
    std::int64_t a = std::get<std::int64_t>(v_), b = std::get<std::int64_t>(o.v_);
    return a < b ? -1 : a > b ? 1 : 0;
  }
  return mpq_cmp(std::get<mpq_class>(v_).get_mpq_t(), std::get<mpq_class>(o.v_).get_mpq_t());
}

std::int64_t Scalar::residue() const {
  if (field_.kind != Field::Kind::prime) throw PreconditionError("residue() on a rational scalar");
  return std::get<std::int64_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (field_.kind != Field::Kind::rationals) throw PreconditionError("rational() on a residue");
  return std::get<mpq_class>(v_);
}

std::string Scalar::str() const {
  if (field_.kind == Field::Kind::prime) return std::to_string(std::get<std::int64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  if (s.empty()) throw ParseError("empty scalar");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw ParseError("bad scalar literal: " + s);
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    return of(f, q);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar literal: " + s);
  }
}

}  // namespace jja
