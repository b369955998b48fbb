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

#pragma once

#include "paraspec/rational.hpp"

namespace paraspec {

/// Accuracy contract for the series-based special functions.
struct PrecisionPolicy {
  double target_abs_tol = 1e-12;
  int max_terms = 100000;

  /// Throws Error(Domain) unless target_abs_tol > 0 and max_terms >= 8.
  void check() const;
};

/// Hurwitz zeta sum_{k>=0} (k + beta)^-s for real s != 1 and beta in (0,1],
/// analytically continued below s = 1 by Euler-Maclaurin summation.
///
/// Throws PoleAtOne at s == 1, Domain for beta outside (0,1], and
/// NonConvergence when the tolerance cannot be met within max_terms.
double hurwitz_zeta(double s, const Rational& beta, const PrecisionPolicy& policy = {});

/// Exact value 1/2 - beta of the continuation at s = 0.
Rational hurwitz_zeta_at_zero(const Rational& beta);

/// d/ds zeta_H(s, beta) at s = 0, from Lerch's formula
/// log Gamma(beta) - log(2 pi) / 2.
double hurwitz_zeta_deriv_at_zero(const Rational& beta, const PrecisionPolicy& policy = {});

/// Plain partial sum sum_{k=0}^{N-1} (k + beta)^-s, s > 1. Independent of the
/// continuation; used as its oracle in the convergent region.
double truncated_dirichlet_sum(double s, const Rational& beta, long long terms);

namespace detail {

/// Euler-Maclaurin evaluation for any real beta > 0, without the public
/// domain checks. Exposed for recurrence testing across beta = 1.
double hurwitz_zeta_em(double s, double beta, const PrecisionPolicy& policy);

}  // namespace detail

}  // namespace paraspec
