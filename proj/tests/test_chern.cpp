// Copyright 2026 The paraspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "paraspec/chern.hpp"
#include "paraspec/errors.hpp"

using namespace paraspec;
using testing_support::datum;
using testing_support::flag;
using testing_support::R;

namespace {

GradedClass c1(int i, int j, int D) { return GradedClass::generator(Generator::chern(i, j, 1), D); }
GradedClass one(int D) { return GradedClass::constant(1, D); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Schema;
}

}  // namespace

TEST_CASE("graded multiplication") {
  const int D = 4;
  GradedClass want = one(D);
  want.add_term({{Generator::chern(0, 0, 1), 2}}, -1);
  CHECK(graded_multiply(one(D) + c1(0, 0, D), one(D) - c1(0, 0, D)) == want);

  const GradedClass x = chern_character(0, 1, 3, false, D) + R("1/2") * c1(0, 0, D);
  CHECK(graded_multiply(x, one(D)) == x);
  CHECK(graded_multiply(one(D), x) == x);

  // Ch(E_ij) Ch(E_il*) in degree 2 is k_l c1(E_ij) - k_j c1(E_il).
  const GradedClass prod =
      graded_multiply(chern_character(0, 0, 2, false, 2), chern_character(0, 1, 3, true, 2));
  CHECK(prod.degree_part(2) == 3 * c1(0, 0, 2) - 2 * c1(0, 1, 2));
  CHECK(numerical_index(prod) == 6);

  // Degrees above the truncation are dropped.
  const GradedClass c = c1(0, 0, 2);
  CHECK(graded_multiply(c, c).is_zero());
  CHECK(kind_of([&] { graded_multiply(c1(0, 0, 2), c1(0, 0, 4)); }) == ErrorKind::TruncationMismatch);
  CHECK(kind_of([] { GradedClass bad(3); }) == ErrorKind::Domain);
}

TEST_CASE("chern character") {
  const int D = 4;
  const GradedClass ch2 = GradedClass::generator(Generator::chern(0, 0, 2), D);
  CHECK(chern_character(0, 0, 2, false, D) == 2 * one(D) + c1(0, 0, D) + ch2);
  CHECK(chern_character(0, 0, 2, true, D) == 2 * one(D) - c1(0, 0, D) + ch2);
  CHECK(chern_character(0, 0, 2, false, 0) == 2 * one(0));
}

TEST_CASE("rendering is canonical") {
  CHECK(GradedClass(2).render() == "0");
  CHECK((R("-1/4") * c1(0, 0, 2) + R("1/4") * c1(0, 1, 2) - 3 * one(2)).render() ==
        "-3 - 1/4*ch1(E[1,1]) + 1/4*ch1(E[1,2])");
  GradedClass sq = one(4);
  sq.add_term({{Generator::chern(1, 0, 1), 2}}, R("2/3"));
  CHECK(sq.render() == "1 + 2/3*ch1(E[2,1])^2");
  CHECK(GradedClass::generator(Generator::interior(Bundle::End, 1), 2).render() == "Int_End[2]");
  CHECK(GradedClass::generator(Generator::exact(1), 2).render() == "dT[2]");
}

TEST_CASE("eta forms") {
  const ParabolicData ex = testing_support::worked_example();
  const GradedClass want = R("1/4") * chern_character(0, 0, 1, false, 2) -
                           R("1/4") * chern_character(0, 1, 1, false, 2);
  CHECK(eta_form_E(ex, 2) == want);
  CHECK(numerical_index(eta_form_E(ex, 2)) == 0);
  CHECK(eta_form_E(datum(2, 2, 0, {flag({"0"}, {2})}), 2).is_zero());

  const ParabolicData pair = datum(2, 2, -1, {flag({"1/4", "5/12"}, {1, 1})});
  const GradedClass h21 =
      graded_multiply(chern_character(0, 1, 1, false, 2), chern_character(0, 0, 1, true, 2));
  const GradedClass h12 =
      graded_multiply(chern_character(0, 0, 1, false, 2), chern_character(0, 1, 1, true, 2));
  CHECK(eta_form_End(pair, 2) == R("1/3") * h21 - R("1/3") * h12);
  CHECK(eta_form_End(pair, 2).coefficient({{Generator::chern(0, 1, 1), 1}}) == R("2/3"));
  CHECK(eta_form_End(datum(2, 3, 0, {flag({"1/3"}, {3})}), 4).is_zero());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const FlagData f = oracle::random_flag(rng, 1 + trial % 5, 24);
    CHECK(numerical_index(eta_form_End(datum(2, f.total_rank(), 0, {f}), 2)) == 0);
  }
}

TEST_CASE("horizontal eta forms") {
  CHECK(horizontal_eta_form(testing_support::worked_example(), Bundle::E, 2).is_zero());
  const ParabolicData z = datum(2, 3, 0, {flag({"0", "1/2"}, {2, 1})});
  const GradedClass h = horizontal_eta_form(z, Bundle::E, 2);
  CHECK(h == R("-1/2") * chern_character(0, 0, 2, false, 2));
  CHECK(numerical_index(h) == -1);
  CHECK(numerical_index(horizontal_eta_form(testing_support::worked_example(), Bundle::End, 2)) == -1);
}

TEST_CASE("index class of E") {
  const ParabolicData line = datum(2, 1, 0, {flag({"0"}, {1})});
  CHECK(numerical_index(index_class_E(line, 0)) == -1);
  const ParabolicData ex = testing_support::worked_example();
  CHECK(numerical_index(index_class_E(ex, 2)) == -3);
  CHECK(index_class_E(ex, 2).degree_part(2).boundary_part() ==
        R("-1/4") * c1(0, 0, 2) + R("1/4") * c1(0, 1, 2));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const ParabolicData d = oracle::random_admissible(rng, 4, 3, 3);
    for (int D : {0, 2, 4}) {
      const GradedClass assembled = interior_term(d, Bundle::E).as_class(D) - eta_form_E(d, D) -
                                    horizontal_eta_form(d, Bundle::E, D);
      CHECK(index_class_E(d, D) == assembled);
    }
    CHECK(numerical_index(index_class_E(d, 2)) == oracle::riemann_roch_index(d));
  }
}

TEST_CASE("index class of End") {
  const ParabolicData ex = testing_support::worked_example();
  CHECK(numerical_index(index_class_End(ex, 2)) == -5);
  CHECK(numerical_index(index_class_End(ex, 2, true)) == -5);
  CHECK(index_class_End(ex, 2, true) - index_class_End(ex, 2) ==
        R("-1") * GradedClass::generator(Generator::exact(1), 2));
  CHECK(mu_coefficient(R("5/12"), R("1/4")) == R("1/3"));
  CHECK(mu_coefficient(R("1/4"), R("5/12")) == R("-1/3"));
  CHECK(mu_coefficient(R("1/4"), R("1/4")) == 0);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const ParabolicData d = oracle::random_admissible(rng, 4, 3, 3);
    const GradedClass assembled = interior_term(d, Bundle::End).as_class(2) - eta_form_End(d, 2) -
                                  horizontal_eta_form(d, Bundle::End, 2);
    CHECK(index_class_End(d, 2) == assembled);
  }
}

TEST_CASE("numerical index rejects symbolic residue") {
  GradedClass bad(2);
  bad.add_term({{Generator::chern(0, 0, 1), 1}}, 1);
  CHECK(numerical_index(bad) == 0);  // degree 2, fine
  GradedClass junk(0);
  junk.add_term({{Generator{Generator::Kind::Chern, 0, 0, Bundle::E, 0}, 1}}, 1);
  CHECK(kind_of([&] { numerical_index(junk); }) == ErrorKind::SymbolicResidue);
}

TEST_CASE("moduli dimension") {
  CHECK(moduli_dimension(testing_support::worked_example()) == 6);
  CHECK(moduli_dimension(datum(3, 1, -1, {flag({"1/3"}, {1}), flag({"2/3"}, {1})})) == 3);
  // A single weight 1/2 in rank one never has parabolic degree 0; the index
  // itself still gives 1 - index = g.
  const ParabolicData half = datum(2, 1, 0, {flag({"1/2"}, {1})});
  CHECK(kind_of([&] { moduli_dimension(half); }) == ErrorKind::NotDegreeZero);
  CHECK(1 - numerical_index(index_class_End(half, 0)) == 2);
  // Genus 0 with trivial flags in rank 2: k^2(g-1) + 1 < 0.
  const ParabolicData sphere =
      datum(0, 2, 0, {flag({"0"}, {2}), flag({"0"}, {2}), flag({"0"}, {2})});
  CHECK(kind_of([&] { moduli_dimension(sphere); }) == ErrorKind::NegativeDimension);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const ParabolicData d = oracle::random_admissible(rng, 4, 4, 3);
    const Rational want = oracle::flag_count_dimension(d);
    if (want < 0) {
      CHECK(kind_of([&] { moduli_dimension(d); }) == ErrorKind::NegativeDimension);
    } else {
      CHECK(Rational(moduli_dimension(d)) == want);
    }
  }
}

TEST_CASE("quillen curvature") {
  const GradedClass int_end = GradedClass::generator(Generator::interior(Bundle::End, 1), 2);
  const GradedClass int_e = GradedClass::generator(Generator::interior(Bundle::E, 1), 2);
  CHECK(quillen_curvature(testing_support::worked_example(), Bundle::End) == int_end);
  const ParabolicData pair = datum(2, 2, -1, {flag({"1/4", "5/12"}, {1, 1})});
  CHECK(quillen_curvature(pair, Bundle::End) ==
        int_end - R("2/3") * (c1(0, 1, 2) - c1(0, 0, 2)));
  CHECK(quillen_curvature(testing_support::worked_example(), Bundle::E) ==
        int_e - R("1/4") * c1(0, 0, 2) + R("1/4") * c1(0, 1, 2));
  CHECK(kind_of([] { quillen_curvature(datum(2, 1, 0, {flag({"0"}, {1})}), Bundle::E); }) ==
        ErrorKind::ZeroWeightPresent);
  CHECK(kind_of([] { quillen_curvature(testing_support::worked_example(), Bundle::End, 0); }) ==
        ErrorKind::Domain);
}

TEST_CASE("End curvature matches the degree-2 boundary part of the End index") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const FlagData f = oracle::random_flag(rng, 1 + trial % 5, 24);
    const ParabolicData d = datum(2, f.total_rank(), 0, {f, oracle::random_flag(rng, f.total_rank(), 24)});
    CHECK(index_class_End(d, 2).degree_part(2).boundary_part() ==
          quillen_curvature(d, Bundle::End).boundary_part());
  }
}
