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
#include "paraspec/heat.hpp"
#include "paraspec/spectrum.hpp"

#include <cmath>

using namespace paraspec;
using testing_support::R;

namespace {

constexpr double kPi = oracle::kPi;

SpectrumFamily single(const char* offset, long long mult) {
  return SpectrumFamily::from_progressions({{R(offset), mult}});
}

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

TEST_CASE("heat trace examples") {
  const SpectrumFamily half = single("1/2", 1);
  double previous = heat_trace_vertical(half, 0.1);
  for (double t : {0.2, 0.5, 1.0, 2.0, 5.0}) {
    const double v = heat_trace_vertical(half, t);
    CHECK(v < previous);
    CHECK(v > 0.0);
    previous = v;
  }
  CHECK(heat_trace_vertical(half, 50.0) < 1e-200);
  const double at_one = 2.0 * std::exp(-kPi * kPi) + 2.0 * std::exp(-9.0 * kPi * kPi);
  CHECK(std::abs(heat_trace_vertical(half, 1.0) - at_one) < 1e-18);
  CHECK(std::abs(heat_trace_vertical(half, 1.0) - 1.03446e-4) < 1e-9);
  for (double t : {1e-4, 1e-3, 1e-2}) {
    const double correction = 1.0 + 2.0 * std::exp(-1.0 / (4.0 * t));
    CHECK(std::abs(heat_trace_vertical(single("0", 1), t) * 2.0 * std::sqrt(kPi * t) - correction) < 1e-13);
  }
}

TEST_CASE("direct and dual summation agree with an independent Poisson sum") {
  for (const char* o : {"0", "1/4", "1/2", "-1/3", "5/7"}) {
    const SpectrumFamily s = single(o, 2);
    for (double t : {1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.5, 1.0, 10.0}) {
      CAPTURE(o);
      CAPTURE(t);
      const double direct = heat_trace_direct(s, t);
      const double dual = heat_trace_dual(s, t);
      CHECK(std::abs(direct - dual) < 1e-12 * std::max(1.0, std::abs(direct)));
      CHECK(std::abs(dual - oracle::poisson_trace(to_double(R(o)), 2.0, t)) <
            1e-12 * std::max(1.0, std::abs(dual)));
    }
  }
}

TEST_CASE("eta integrand") {
  for (double t : {1e-4, 0.01, 0.1, 1.0}) {
    CHECK(eta_heat_integrand(single("0", 3), t) == 0.0);
    CHECK(eta_heat_integrand(single("1/2", 1), t) == 0.0);
    CHECK(eta_heat_integrand(single("-1/2", 2), t) == 0.0);
    CHECK(std::abs(eta_heat_integrand_direct(single("1/3", 1), t) -
                   eta_heat_integrand_dual(single("1/3", 1), t)) < 1e-9);
  }
  CHECK(std::abs(eta_heat_integrand(single("1/4", 1), 1e-3)) < 1e-60);
  CHECK(std::abs(eta_heat_integrand(single("1/4", 1), 1e-2)) < 1e-5);
  // Sign follows the offset.
  CHECK(eta_heat_integrand(single("1/4", 1), 0.1) > 0.0);
  CHECK(eta_heat_integrand(single("-1/4", 1), 0.1) < 0.0);
}

TEST_CASE("renormalized integrals") {
  auto f1 = [](double x) { return 1.0 / (x * x) + 1.0 / x + 1.0; };
  CHECK(std::abs(renormalized_integral(f1, {{1.0, -2.0}, {1.0, -1.0}})) < 1e-10);
  CHECK(std::abs(renormalized_integral([](double) { return 1.0; }, {}) - 1.0) < 1e-12);
  CHECK(std::abs(renormalized_integral([](double x) { return 1.0 / x; }, {{1.0, -1.0}})) < 1e-12);
  // Integrable singularity without a model.
  CHECK(std::abs(renormalized_integral([](double x) { return 1.0 / std::sqrt(x); }, {}) - 2.0) < 1e-10);
  // FP of x^{-3/2} over (0,1] is -2; plus int cos = sin 1.
  auto f2 = [](double x) { return std::pow(x, -1.5) + std::cos(x); };
  CHECK(std::abs(renormalized_integral(f2, {{1.0, -1.5}}) - (-2.0 + std::sin(1.0))) < 1e-9);
  // Log term with a smooth remainder over (0, 2].
  auto f3 = [](double x) { return 3.0 / x + std::exp(-x); };
  CHECK(std::abs(renormalized_integral(f3, {{3.0, -1.0}}, 2.0) -
                 (3.0 * std::log(2.0) + 1.0 - std::exp(-2.0))) < 1e-9);
  CHECK(kind_of([] { renormalized_integral([](double x) { return 1.0 / (x * x); }, {}); }) ==
        ErrorKind::UndeclaredDivergence);
  CHECK(kind_of([] {
          renormalized_integral([](double x) { return 1.0 / (x * x) + 1.0 / x; }, {{1.0, -2.0}});
        }) == ErrorKind::UndeclaredDivergence);
}

TEST_CASE("asymptotic expansion container") {
  AsymptoticExpansion e;
  e.add(2.0, -1);
  e.add(1.0, -1);
  e.add(0.5, 0, 1);
  CHECK(e.coefficient(-1) == 3.0);
  CHECK(e.coefficient(0, 1) == 0.5);
  CHECK(e.coefficient(4) == 0.0);
  CHECK(std::abs(e.evaluate(4.0) - (1.5 + 0.5 * std::log(4.0))) < 1e-15);
  CHECK(e.max_log_coefficient() == 0.5);
  CHECK(e.terms().size() == 2);
  CHECK(kind_of([&] { e.add(1.0, 0, 2); }) == ErrorKind::Domain);
}

TEST_CASE("corner asymptotics examples") {
  SyntheticKernel k01;
  k01.corner = Corner::Face01_11;
  k01.coefficients = {{{0, -1}, 1.0}};
  const AsymptoticExpansion a = corner_asymptotics(k01);
  // -log(C/eps^2) = -(1/2) log t + 2 log eps.
  CHECK(a.coefficient(0, 1) == doctest::Approx(-0.5));
  CHECK(a.coefficient(0, 0) == doctest::Approx(2.0 * std::log(0.5)));

  k01.coefficients = {{{1, 2}, 1.0}};
  const AsymptoticExpansion b = corner_asymptotics(k01);
  CHECK(b.max_log_coefficient() == 0.0);
  CHECK(b.terms().size() == 2);
  CHECK(b.coefficient(1) != 0.0);
  CHECK(b.coefficient(3) != 0.0);

  SyntheticKernel k10;
  k10.corner = Corner::Face10_11;
  k10.coefficients = {{{-1, 1}, 2.5}};
  const AsymptoticExpansion c = corner_asymptotics(k10);
  // Coefficient of C^l log C equals a; in t that is a/2 on t^{l/2} log t.
  CHECK(c.coefficient(1, 1) == doctest::Approx(1.25));
  CHECK(kind_of([&] { corner_asymptotics(k10, false); }) == ErrorKind::Domain);

  SyntheticKernel bad;
  bad.coefficients = {{{-3, 0}, 1.0}};
  CHECK(kind_of([&] { corner_asymptotics(bad); }) == ErrorKind::Domain);
}

TEST_CASE("corner asymptotics against brute-force slice integrals") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 12; ++trial) {
    SyntheticKernel k;
    k.corner = trial % 2 == 0 ? Corner::Face01_11 : Corner::Face10_11;
    k.epsilon = trial % 3 == 0 ? 0.5 : 0.6;
    std::uniform_int_distribution<int> kd(k.corner == Corner::Face01_11 ? -2 : -1, 2);
    std::uniform_int_distribution<int> ld(k.corner == Corner::Face01_11 ? -2 : -1, 2);
    for (int term = 0; term < 3; ++term) k.coefficients[{kd(rng), ld(rng)}] = coef(rng);
    const AsymptoticExpansion e = corner_asymptotics(k);
    for (double C : {0.02, 0.07, 0.2}) {
      CAPTURE(trial);
      CAPTURE(C);
      const double want = oracle::corner_slice_integral(k, C);
      CHECK(oracle::rel_err(e.evaluate(C * C), want) < 1e-8);
    }
  }
}

TEST_CASE("small-time fits") {
  auto grid = [](auto f) {
    std::vector<Sample> s;
    for (int i = 0; i < 24; ++i) {
      const double t = std::pow(10.0, -5.0 + 3.0 * i / 23.0);
      s.push_back({t, f(t)});
    }
    return s;
  };
  const std::vector<std::pair<int, int>> tmpl = {{-2, 0}, {-1, 0}, {-2, 1}, {-1, 1}};
  FitResult r = fit_small_time_expansion(grid([](double t) { return (2.0 + 3.0 * std::sqrt(t)) / t; }), tmpl);
  CHECK(std::abs(r.expansion.coefficient(-2) - 2.0) < 1e-8);
  CHECK(std::abs(r.expansion.coefficient(-1) - 3.0) < 1e-8);
  CHECK(r.expansion.max_log_coefficient() < 1e-8);

  r = fit_small_time_expansion(grid([](double t) { return std::log(t) / std::sqrt(t); }),
                               {{-1, 0}, {-1, 1}, {0, 0}, {0, 1}});
  CHECK(std::abs(r.expansion.coefficient(-1, 1) - 1.0) < 1e-8);
  CHECK(std::abs(r.expansion.coefficient(-1, 0)) < 1e-8);

  const SpectrumFamily s = single("1/4", 1);
  r = fit_small_time_expansion(grid([&](double t) { return heat_trace_vertical(s, t); }),
                               {{-1, 0}, {0, 0}, {-1, 1}, {0, 1}});
  CHECK(std::abs(r.expansion.coefficient(-1) - 1.0 / (2.0 * std::sqrt(kPi))) < 1e-8);
  CHECK(r.expansion.max_log_coefficient() < 1e-8);

  CHECK(kind_of([&] { fit_small_time_expansion({{1e-3, 1.0}, {2e-3, 1.0}}, tmpl); }) ==
        ErrorKind::Domain);
  // Duplicated columns are rank deficient.
  CHECK(kind_of([&] {
          fit_small_time_expansion(grid([](double t) { return t; }), {{2, 0}, {2, 0}, {0, 0}});
        }) == ErrorKind::IllConditioned);
}

TEST_CASE("model determinants") {
  CHECK(std::abs(log_det_model_vertical(R("1/2"), 1) - std::log(4.0)) < 1e-10);
  CHECK(std::abs(log_det_model_vertical(R("1/4"), 1) - std::log(2.0)) < 1e-10);
  CHECK(std::abs(log_det_model_vertical(R("1/3"), 2) - 2.0 * std::log(3.0)) < 1e-10);
  for (const char* b : {"1/7", "2/9", "5/12"}) {
    const Rational beta = R(b);
    const double x = std::sin(kPi * to_double(beta));
    CHECK(std::abs(log_det_model_vertical(beta, 3) - 3.0 * std::log(4.0 * x * x)) < 1e-10);
    CHECK(std::abs(log_det_model_vertical(beta, 1) - log_det_model_vertical(1 - beta, 1)) < 1e-12);
    CHECK(log_det_model_vertical(-beta, 1) == log_det_model_vertical(beta, 1));
  }
  CHECK(kind_of([] { log_det_model_vertical(R("0"), 1); }) == ErrorKind::ZeroMode);
  CHECK(kind_of([] { log_det_model_vertical(R("1"), 1); }) == ErrorKind::Domain);
}
