#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "helpers.hpp"
#include "jja/io.hpp"

using namespace jja;
using jja::testing::Rng;

#ifndef JJA_DATA_DIR
#define JJA_DATA_DIR "."
#endif

namespace {
std::string data(const std::string& name) { return std::string(JJA_DATA_DIR) + "/" + name; }
}  // namespace

TEST_CASE("algebra documents round-trip exactly") {
  Rng rng(2);
  for (const Field& f : {Field::prime(5), Field::rationals()}) {
    for (const JJAlgebra& a :
         {JJAlgebra::heisenberg3(f), JJAlgebra::abelian(f, 2), jja::testing::line_square(f)}) {
      Json j = algebra_to_json(a);
      JJAlgebra back = algebra_from_json(j);
      CHECK(back == a);
      CHECK(back.basis == a.basis);
      // serialization is canonical: dump(load(dump)) is stable
      CHECK(algebra_to_json(back).dump() == j.dump());
    }
  }
}

TEST_CASE("stock documents load") {
  JJAlgebra h5 = algebra_from_json(load_json(data("heisenberg_f5.json")));
  CHECK(h5 == JJAlgebra::heisenberg3(Field::prime(5)));
  JJAlgebra hq = algebra_from_json(load_json(data("heisenberg.json")));
  CHECK(hq == JJAlgebra::heisenberg3(Field::rationals()));
  CHECK(algebra_to_field(hq, Field::prime(7)) == JJAlgebra::heisenberg3(Field::prime(7)));
}

TEST_CASE("documents failing the axioms need the unchecked path") {
  Json bad = load_json(data("not_jacobi.json"));
  CHECK_THROWS_AS(algebra_from_json(bad), PreconditionError);
  JJAlgebra loose = algebra_from_json(bad, false);
  CHECK_FALSE(verify_jj(loose).pass());
}

TEST_CASE("parse errors carry the offending entry") {
  Json j = load_json(data("heisenberg_f5.json"));
  j["bracket"][0]["i"] = 7;
  try {
    algebra_from_json(j);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("(7,1)") != std::string::npos);
  }
  Json asym = load_json(data("heisenberg_f5.json"));
  asym["bracket"][0]["i"] = 1;
  asym["bracket"][0]["j"] = 0;
  CHECK_THROWS_AS(algebra_from_json(asym), ParseError);
}

TEST_CASE("datum documents round-trip") {
  Field f = Field::prime(5);
  Rng rng(8);
  JJAlgebra h = JJAlgebra::heisenberg3(f);
  ExtendingDatum d = jja::testing::random_symmetric_datum(h, 2, rng);
  ExtendingDatum back = datum_from_json(datum_to_json(d));
  CHECK(back == d);
}

TEST_CASE("matched pair, crossed, skew and flag documents round-trip") {
  Field f = Field::prime(5);
  JJAlgebra h = JJAlgebra::heisenberg3(f);
  JJAlgebra line = JJAlgebra::abelian(f, 1);

  MatchedPair mp{h, line, BilinearMap::zero(f, 1, 3, 1), BilinearMap::zero(f, 1, 3, 3)};
  mp.aact.entry(0, 0) = Vector::unit(f, 3, 2);
  MatchedPair mp2 = matched_pair_from_json(matched_pair_to_json(mp));
  CHECK(mp2.a == mp.a);
  CHECK(mp2.v == mp.v);
  CHECK(mp2.vact == mp.vact);
  CHECK(mp2.aact == mp.aact);

  CrossedSystem cs = crossed_system_from_supersolvable(h, LinearMap::zero(f, 3, 3),
                                                       Vector::unit(f, 3, 2));
  CrossedSystem cs2 = crossed_from_json(crossed_to_json(cs));
  CHECK(cs2.aact == cs.aact);
  CHECK(cs2.cocycle == cs.cocycle);

  SkewCrossedSystem scs{h, 1, BilinearMap::zero(f, 1, 3, 1), BilinearMap::zero(f, 1, 1, 3),
                        BilinearMap::zero(f, 1, 1, 1)};
  scs.cocycle.entry(0, 0) = Vector::unit(f, 3, 2);
  SkewCrossedSystem scs2 = skew_from_json(skew_to_json(scs));
  CHECK(scs2.cocycle == scs.cocycle);
  CHECK(scs2.vdim == 1);

  FlagDatum fd = flag_from_json(load_json(data("flag_beta1_h3_f5.json")));
  CHECK(fd.d.at(2, 0) == Scalar::one(f));
  CHECK(passes_flag(fd));
  FlagDatum fd2 = flag_from_json(flag_to_json(fd));
  CHECK(fd2 == fd);
}

TEST_CASE("action documents close the generated group") {
  GroupAction act = action_from_json(load_json(data("action_signflip_h3_f5.json")));
  CHECK(act.order() == 2);
  CHECK(validate_action(act).pass());
  Json again = action_to_json(act);
  GroupAction act2 = action_from_json(again);
  CHECK(act2.order() == 2);
}

TEST_CASE("scalar strings: fractions only over Q") {
  Field f = Field::prime(5);
  Field q = Field::rationals();
  CHECK(Scalar::parse(f, "7").residue() == 2);
  CHECK(Scalar::parse(f, "3/2") == Scalar::of(f, 4));  // 3 * inv(2) = 3 * 3
  CHECK(Scalar::parse(q, "-4/6") == Scalar::of(q, mpq_class(-2, 3)));
  CHECK_THROWS_AS(Scalar::parse(q, "1.5"), ParseError);
}

TEST_CASE("galois pair document") {
  Field f = Field::prime(5);
  MatchedPair mp = matched_pair_from_json(load_json(data("pair_trivial_h3_f5.json")));
  LinearMap sigma(f, 1, 1);
  sigma.at(0, 0) = Scalar::of(f, 2);
  LinearMap r(f, 3, 1);
  r.at(2, 0) = Scalar::one(f);
  Json j = galois_pair_to_json(mp, GaloisPair{sigma, r});
  auto [mp2, gp2] = galois_pair_from_json(j);
  CHECK(gp2.sigma == sigma);
  CHECK(gp2.r == r);
  CHECK(check_galois_pair(mp2, gp2).pass());
}

TEST_CASE("report serialization keeps witnesses") {
  Field f = Field::prime(5);
  JJAlgebra bad = algebra_from_json(load_json(data("not_jacobi.json")), false);
  Json j = report_to_json(verify_jj(bad));
  CHECK_FALSE(j["pass"].get<bool>());
  bool found = false;
  for (const auto& c : j["conditions"])
    if (c["name"] == "jacobi") {
      CHECK_FALSE(c["pass"].get<bool>());
      CHECK(c["witnesses"][0]["indices"] == Json::array({0, 0, 0}));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("save and load files") {
  Field f = Field::prime(5);
  JJAlgebra h = JJAlgebra::heisenberg3(f);
  std::string path = "io_test_tmp.json";
  save_json(path, algebra_to_json(h));
  CHECK(algebra_from_json(load_json(path)) == h);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_json("does_not_exist.json"), ParseError);
}
