#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace jja;
using jja::testing::Rng;

TEST_CASE("prime field axioms, exhaustive for small p") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    Field f = Field::prime(p);
    for (std::int64_t a = 1; a < p; ++a) {
      Scalar s = Scalar::of(f, a);
      CHECK(s * s.inverse() == Scalar::one(f));
    }
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b) {
        Scalar x = Scalar::of(f, a), y = Scalar::of(f, b);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x - y == -(y - x));
        CHECK((x + y).residue() == (a + b) % p);
        CHECK((x * y).residue() == (a * b) % p);
      }
  }
}

TEST_CASE("rational scalars are canonical") {
  Field q = Field::rationals();
  CHECK(Scalar::of(q, mpq_class(2, 4)) == Scalar::of(q, mpq_class(1, 2)));
  CHECK(Scalar::of(q, mpq_class(-3, -9)) == Scalar::of(q, mpq_class(1, 3)));
  CHECK(Scalar::of(q, 7).str() == "7");
  CHECK(Scalar::of(q, mpq_class(3, 7)).str() == "3/7");
  CHECK(Scalar::parse(q, "3/7") * Scalar::of(q, 7) == Scalar::of(q, 3));
  CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
  CHECK_THROWS_AS(Scalar::of(q, 0).inverse(), PreconditionError);
}

TEST_CASE("prime field rejects composite and large moduli") {
  CHECK_THROWS_AS(Field::prime(4), PreconditionError);
  CHECK_THROWS_AS(Field::prime(1), PreconditionError);
  CHECK_NOTHROW(Field::prime(2147483629));  // largest prime below 2^31
  CHECK_THROWS_AS(Field::prime(std::int64_t{1} << 32), PreconditionError);
  CHECK(Field::parse("F5") == Field::prime(5));
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK_THROWS_AS(Field::parse("F"), ParseError);
}

TEST_CASE("apply_bilinear on zero and basis slots") {
  Field f = Field::prime(5);
  JJAlgebra h = JJAlgebra::heisenberg3(f);
  Vector z = Vector::zero(f, 3);
  Vector e1 = Vector::unit(f, 3, 0), e2 = Vector::unit(f, 3, 1);
  CHECK(h.bracket.apply(z, e1).is_zero());
  CHECK(h.bracket.apply(e1, z).is_zero());
  CHECK(h.bracket.apply(e1, e2) == Vector::unit(f, 3, 2));
  // 2 e1 and 3 e2 multiply to 6 e3 = e3 mod 5
  CHECK(h.bracket.apply(e1.scaled(Scalar::of(f, 2)), e2.scaled(Scalar::of(f, 3))) ==
        Vector::unit(f, 3, 2));
}

TEST_CASE("apply_bilinear is bilinear in both slots") {
  Rng rng(42);
  for (const Field& f : {Field::prime(5), Field::rationals()}) {
    BilinearMap m = jja::testing::random_bilinear(f, 3, 2, 4, rng);
    for (int trial = 0; trial < 50; ++trial) {
      Vector u = jja::testing::random_vector(f, 3, rng);
      Vector u2 = jja::testing::random_vector(f, 3, rng);
      Vector w = jja::testing::random_vector(f, 2, rng);
      Scalar s = jja::testing::random_scalar(f, rng);
      CHECK(m.apply(u + u2, w) == m.apply(u, w) + m.apply(u2, w));
      CHECK(m.apply(u.scaled(s), w) == m.apply(u, w).scaled(s));
      CHECK(m.apply(u, w.scaled(s)) == m.apply(u, w).scaled(s));
    }
  }
}

TEST_CASE("solve_linear identity and zero systems") {
  Field f = Field::prime(7);
  LinearMap id = LinearMap::identity(f, 4);
  Rng rng(7);
  Vector rhs = jja::testing::random_vector(f, 4, rng);
  LinearSolution s = solve_linear(id, rhs);
  REQUIRE(s.solvable);
  CHECK(s.particular == rhs);
  CHECK(s.kernel.empty());

  LinearMap zero = LinearMap::zero(f, 3, 3);
  LinearSolution z = solve_linear(zero, Vector::zero(f, 3));
  REQUIRE(z.solvable);
  CHECK(z.kernel.size() == 3);
  LinearSolution bad = solve_linear(zero, Vector::unit(f, 3, 0));
  CHECK_FALSE(bad.solvable);
}

TEST_CASE("solve_linear matches exhaustive enumeration over F5") {
  // x + 2y = 1: the oracle walks all 25 pairs
  Field f = Field::prime(5);
  LinearMap sys(f, 1, 2);
  sys.at(0, 0) = Scalar::one(f);
  sys.at(0, 1) = Scalar::of(f, 2);
  Vector rhs = Vector::unit(f, 1, 0);

  std::set<std::pair<std::int64_t, std::int64_t>> expected;
  for (std::int64_t x = 0; x < 5; ++x)
    for (std::int64_t y = 0; y < 5; ++y)
      if ((x + 2 * y) % 5 == 1) expected.insert({x, y});
  REQUIRE(expected.size() == 5);

  LinearSolution s = solve_linear(sys, rhs);
  REQUIRE(s.solvable);
  REQUIRE(s.kernel.size() == 1);
  std::set<std::pair<std::int64_t, std::int64_t>> produced;
  for (std::int64_t t = 0; t < 5; ++t) {
    Vector sol = s.particular;
    sol.add_scaled(s.kernel[0], Scalar::of(f, t));
    produced.insert({sol.c[0].residue(), sol.c[1].residue()});
  }
  CHECK(produced == expected);
}

TEST_CASE("solve_linear solutions reproduce the rhs") {
  Rng rng(11);
  for (const Field& f : {Field::prime(5), Field::rationals()}) {
    for (int trial = 0; trial < 40; ++trial) {
      LinearMap sys = jja::testing::random_matrix(f, 3, 4, rng);
      Vector rhs = jja::testing::random_vector(f, 3, rng);
      LinearSolution s = solve_linear(sys, rhs);
      if (!s.solvable) continue;
      Vector x = s.particular;
      for (const auto& k : s.kernel) x.add_scaled(k, jja::testing::random_scalar(f, rng));
      CHECK(sys.apply(x) == rhs);
    }
  }
}

TEST_CASE("vector enumeration is exhaustive, deterministic and rejects Q") {
  Field f2 = Field::prime(2);
  VectorRange r1(f2, 1);
  CHECK(r1.size() == 2);
  CHECK(r1.at(0).is_zero());
  CHECK(r1.at(1) == Vector::unit(f2, 1, 0));

  Field f5 = Field::prime(5);
  for (int dim : {2, 3}) {
    VectorRange r(f5, dim);
    CHECK(r.size() == (dim == 2 ? 25u : 125u));
    std::set<std::string> seen;
    for (std::uint64_t k = 0; k < r.size(); ++k) seen.insert(r.at(k).str());
    CHECK(seen.size() == r.size());
    // lexicographic order: consecutive encodings increase
    for (std::uint64_t k = 1; k < r.size(); ++k) CHECK(r.at(k - 1).cmp(r.at(k)) < 0);
  }
  CHECK_THROWS_AS(VectorRange(Field::rationals(), 2), PreconditionError);
}

TEST_CASE("invertible enumeration counts match theory and brute force") {
  Field f5 = Field::prime(5);
  CHECK(enumerate_invertible(f5, 1).size() == 4);
  CHECK(enumerate_invertible(f5, 2).size() == 480);
  CHECK(invertible_count(f5, 2) == 480);

  // independent brute force: a matrix is invertible iff some matrix composes
  // with it to the identity
  Field f2 = Field::prime(2);
  MatrixRange all(f2, 2, 2);
  LinearMap id = LinearMap::identity(f2, 2);
  std::set<std::string> brute;
  for (std::uint64_t i = 0; i < all.size(); ++i)
    for (std::uint64_t j = 0; j < all.size(); ++j)
      if (all.at(i).compose(all.at(j)) == id) brute.insert(all.at(i).str());
  CHECK(brute.size() == 6);
  auto listed = enumerate_invertible(f2, 2);
  CHECK(listed.size() == 6);
  for (const auto& m : listed) CHECK(brute.count(m.str()) == 1);

  for (std::int64_t p : {2, 3})
    for (int n : {1, 2, 3}) {
      Field f = Field::prime(p);
      std::uint64_t count = 0;
      for_each_invertible(f, n, Budget{}, [&](const LinearMap&) {
        ++count;
        return true;
      });
      CHECK(count == invertible_count(f, n));
    }
}

TEST_CASE("enumeration budget is a hard error") {
  Budget tiny;
  tiny.limit = 100;
  CHECK_THROWS_AS(enumerate_invertible(Field::prime(5), 3, tiny), BudgetExceeded);
}

TEST_CASE("circular_sum") {
  Field f = Field::prime(5);
  JJAlgebra h = JJAlgebra::heisenberg3(f);
  Vector c = Vector::unit(f, 3, 1);
  auto constant = [&](const Vector&, const Vector&, const Vector&) { return c; };
  CHECK(circular_sum(constant, c, c, c) == c.scaled(Scalar::of(f, 3)));

  auto nested = [&](const Vector& x, const Vector& y, const Vector& z) {
    return h.bracket_of(x, h.bracket_of(y, z));
  };
  Vector e1 = Vector::unit(f, 3, 0), e2 = Vector::unit(f, 3, 1);
  CHECK(circular_sum(nested, e1, e2, e1).is_zero());
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    Vector x = jja::testing::random_vector(f, 3, rng);
    Vector y = jja::testing::random_vector(f, 3, rng);
    Vector z = jja::testing::random_vector(f, 3, rng);
    CHECK(circular_sum(nested, x, y, z).is_zero());
  }
}

TEST_CASE("rref and span helpers") {
  Field f = Field::prime(5);
  Rng rng(9);
  std::vector<Vector> vs = {jja::testing::random_vector(f, 4, rng),
                            jja::testing::random_vector(f, 4, rng)};
  std::vector<Vector> doubled = vs;
  doubled.push_back(vs[0] + vs[1]);
  CHECK(rank_of(doubled) == rank_of(vs));
  CHECK(in_span(vs, vs[0] + vs[1].scaled(Scalar::of(f, 3))));
  auto co = coordinates_in(vs, vs[1]);
  REQUIRE(co.has_value());
  CHECK(co->c[1] == Scalar::one(f));
}

TEST_CASE("matrix inverse") {
  Rng rng(5);
  for (const Field& f : {Field::prime(7), Field::rationals()}) {
    for (int t = 0; t < 30; ++t) {
      LinearMap m = jja::testing::random_matrix(f, 3, 3, rng);
      auto inv = m.inverse();
      CHECK(m.invertible() == inv.has_value());
      if (inv) CHECK(m.compose(*inv) == LinearMap::identity(f, 3));
    }
  }
}
