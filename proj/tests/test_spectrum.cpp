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

#include "paraspec/errors.hpp"
#include "paraspec/spectrum.hpp"

#include <cmath>
#include <map>

using namespace paraspec;
using testing_support::datum;
using testing_support::flag;
using testing_support::R;

namespace {

SpectrumFamily family(std::initializer_list<std::pair<const char*, long long>> items) {
  std::vector<Progression> p;
  for (const auto& [o, m] : items) p.push_back({R(o), m});
  return SpectrumFamily::from_progressions(p);
}

}  // namespace

TEST_CASE("vertical spectrum of E") {
  CHECK(vertical_spectrum_E(flag({"0", "1/4"}, {1, 2})) == family({{"0", 1}, {"1/4", 2}}));
  CHECK(vertical_spectrum_E(flag({"0"}, {3})) == family({{"0", 3}}));
  CHECK(vertical_spectrum_E(flag({"1/3", "2/3"}, {1, 1})) == family({{"1/3", 1}, {"2/3", 1}}));
}

TEST_CASE("vertical spectrum of End") {
  CHECK(vertical_spectrum_End(flag({"1/4", "3/4"}, {1, 1})) ==
        family({{"0", 2}, {"1/2", 1}, {"-1/2", 1}}));
  CHECK(vertical_spectrum_End(flag({"0"}, {3})) == family({{"0", 9}}));
  CHECK(vertical_spectrum_End(flag({"0", "1/3"}, {1, 2})) ==
        family({{"0", 5}, {"1/3", 2}, {"-1/3", 2}}));
}

TEST_CASE("End spectrum by brute-force enumeration of ordered pairs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const FlagData f = oracle::random_flag(rng, 1 + trial % 5, 24);
    std::map<Rational, long long> want;
    for (std::size_t j = 0; j < f.levels(); ++j)
      for (std::size_t l = 0; l < f.levels(); ++l)
        want[f.weights[j] - f.weights[l]] += static_cast<long long>(f.mults[j]) * f.mults[l];
    std::map<Rational, long long> got;
    const SpectrumFamily end = vertical_spectrum_End(f);
    for (const auto& p : end.progressions()) got[p.offset] = p.multiplicity;
    CHECK(got == want);
    long long squares = 0;
    for (int m : f.mults) squares += static_cast<long long>(m) * m;
    CHECK(vertical_kernel_rank(vertical_spectrum_End(f)) == squares);
    CHECK(vertical_spectrum_End(f).total_multiplicity() == f.total_rank() * f.total_rank());
  }
}

TEST_CASE("families merge equal offsets and reject bad ones") {
  CHECK(family({{"1/4", 1}, {"1/4", 2}}) == family({{"1/4", 3}}));
  CHECK_THROWS_AS(family({{"1", 1}}), Error);
  CHECK_THROWS_AS(family({{"-1", 1}}), Error);
  CHECK_THROWS_AS(family({{"1/2", 0}}), Error);
  const SpectrumFamily merged =
      merge_spectra({family({{"1/4", 1}}), family({{"1/4", 2}, {"0", 1}})});
  CHECK(merged == family({{"0", 1}, {"1/4", 3}}));
}

TEST_CASE("eigenvalues in a window") {
  const double two_pi = 2.0 * oracle::kPi;
  SUBCASE("integer lattice") {
    const auto ev = eigenvalues_in_window(family({{"0", 1}}), two_pi);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0].position == -1);
    CHECK(ev[1].position == 0);
    CHECK(ev[2].position == 1);
    for (const auto& e : ev) CHECK(e.multiplicity == 1);
    CHECK(std::abs(ev[0].value + two_pi) < 1e-15);
  }
  SUBCASE("shifted lattice") {
    const auto ev = eigenvalues_in_window(family({{"1/4", 2}}), two_pi);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].position == R("-3/4"));
    CHECK(ev[1].position == R("1/4"));
    CHECK(ev[0].multiplicity == 2);
    CHECK(std::abs(ev[1].value - two_pi / 4.0) < 1e-15);
  }
  SUBCASE("small window") {
    CHECK(eigenvalues_in_window(family({{"1/4", 1}, {"-1/3", 2}}), 0.1).empty());
  }
  SUBCASE("offsets differing by an integer merge") {
    const auto ev = eigenvalues_in_window(family({{"1/2", 1}, {"-1/2", 1}}), two_pi);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].multiplicity == 2);
    CHECK(ev[1].multiplicity == 2);
  }
  SUBCASE("count matches lattice enumeration") {
    const SpectrumFamily s = family({{"-2/7", 3}, {"1/5", 1}, {"0", 2}});
    const double bound = 25.0;
    long long want = 0;
    for (const auto& p : s.progressions())
      for (int m = -20; m <= 20; ++m)
        if (std::abs(two_pi * (to_double(p.offset) + m)) <= bound) want += p.multiplicity;
    long long got = 0;
    double previous = -1e300;
    for (const auto& e : eigenvalues_in_window(s, bound)) {
      got += e.multiplicity;
      CHECK(e.value > previous);
      previous = e.value;
    }
    CHECK(got == want);
  }
}

TEST_CASE("vertical kernel rank") {
  CHECK(vertical_kernel_rank(vertical_spectrum_E(flag({"1/4", "3/4"}, {1, 1}))) == 0);
  CHECK(vertical_kernel_rank(vertical_spectrum_E(flag({"0", "1/2"}, {2, 1}))) == 2);
  CHECK(vertical_kernel_rank(vertical_spectrum_End(flag({"0", "1/2"}, {2, 1}))) == 5);
}

TEST_CASE("fredholm classification") {
  SUBCASE("E without zero weights") {
    const FredholmReport r = fredholm_classify(testing_support::worked_example(), Bundle::E);
    CHECK(r.fredholm);
    CHECK(r.discrete_spectrum);
    CHECK(r.vertical_kernel_rank_per_puncture == std::vector<long long>{0});
  }
  SUBCASE("E with a zero weight") {
    const FredholmReport r =
        fredholm_classify(datum(2, 2, 0, {flag({"0", "1/2"}, {1, 1})}), Bundle::E);
    CHECK(r.fredholm);
    CHECK_FALSE(r.discrete_spectrum);
    CHECK(r.vertical_kernel_rank_per_puncture == std::vector<long long>{1});
    CHECK(r.horizontal_invertible);
  }
  SUBCASE("End always has a kernel") {
    const FredholmReport r = fredholm_classify(
        datum(2, 3, 0, {flag({"1/4", "3/4"}, {1, 2}), flag({"0"}, {3})}), Bundle::End);
    CHECK(r.fredholm);
    CHECK_FALSE(r.discrete_spectrum);
    CHECK(r.vertical_kernel_rank_per_puncture == std::vector<long long>{5, 9});
  }
  CHECK(horizontal_spectrum_datum() == R("-1/2"));
}
