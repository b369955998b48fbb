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

#include "paraspec/parabolic.hpp"
#include "paraspec/rational.hpp"
#include "paraspec/spectrum.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace paraspec {

/// Formal even-degree generator of the characteristic ring.
///
/// - Chern: ch_m(E_ij), the 2m-form part of the Chern character of the
///   eigenbundle of weight level j at puncture i. Generators with distinct
///   (i, j, m) are algebraically independent.
/// - Interior: the 2m-form part of the fibre integral of Td(Sigma) Ch(bundle),
///   which weight data cannot evaluate for m >= 1.
/// - Exact: the 2m-form part of the exact transgression term. Inert.
struct Generator {
  enum class Kind { Chern, Interior, Exact };

  Kind kind = Kind::Chern;
  int puncture = 0;  // Chern only, 0-based
  int level = 0;     // Chern only, 0-based
  Bundle bundle = Bundle::E;  // Interior only
  int m = 1;         // form degree is 2m

  static Generator chern(int puncture, int level, int m) {
    return {Kind::Chern, puncture, level, Bundle::E, m};
  }
  static Generator interior(Bundle bundle, int m) { return {Kind::Interior, 0, 0, bundle, m}; }
  static Generator exact(int m) { return {Kind::Exact, 0, 0, Bundle::E, m}; }

  int form_degree() const noexcept { return 2 * m; }
  std::string render() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Product of generators with positive exponents, kept sorted.
using Monomial = std::vector<std::pair<Generator, int>>;

int form_degree(const Monomial& monomial) noexcept;

/// Element of the truncated ring Q[generators] / (form degree > D). All
/// generators are even, so the ring is commutative.
class GradedClass {
 public:
  explicit GradedClass(int truncation_degree = 0);

  static GradedClass constant(const Rational& c, int truncation_degree);
  static GradedClass generator(const Generator& g, int truncation_degree);

  int truncation_degree() const noexcept { return truncation_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of a monomial (0 if absent). The empty monomial is 1.
  Rational coefficient(const Monomial& monomial) const;

  /// Component of exact form degree `degree`.
  GradedClass degree_part(int degree) const;

  /// Drops every monomial containing an Interior or Exact generator.
  GradedClass boundary_part() const;

  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass& operator*=(const Rational& scalar);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }
  friend bool operator==(const GradedClass&, const GradedClass&) = default;

  /// Deterministic text: monomials by (degree, generators), exact
  /// coefficients, "0" for the zero class.
  std::string render() const;

  void add_term(Monomial monomial, const Rational& coefficient);

 private:
  void check_compatible(const GradedClass& other) const;

  int truncation_;
  std::map<Monomial, Rational> terms_;
};

/// Truncated polynomial product. Throws Error(TruncationMismatch) when the
/// truncation degrees differ.
GradedClass graded_multiply(const GradedClass& a, const GradedClass& b);

/// Ch(E_ij) = k_j + sum_{2m <= D} ch_m(E_ij); the dual flips the sign of odd
/// m.
GradedClass chern_character(int puncture, int level, int rank, bool dual, int truncation_degree);

/// Interior contribution: numeric degree-0 part rank * (2 - 2g - n)/2 (flat
/// bundle, Gauss-Bonnet), opaque generators in positive degrees.
struct InteriorTerm {
  Bundle bundle = Bundle::E;
  Rational numeric_degree0;

  GradedClass as_class(int truncation_degree) const;
};

InteriorTerm interior_term(const ParabolicData& data, Bundle bundle);

/// sum_i sum_{a_j > 0} (1/2 - a_j) Ch(E_ij).
GradedClass eta_form_E(const ParabolicData& data, int truncation_degree);

/// sum_i sum_{j != l} sign(a_j - a_l)(1 - 2|a_j - a_l|)/2 Ch(E_ij) Ch(E_il*).
GradedClass eta_form_End(const ParabolicData& data, int truncation_degree);

/// E: -(1/2) sum over punctures with a_1 = 0 of Ch(E_i1).
/// End: -(1/2) sum_i sum_j Ch(E_ij) Ch(E_ij*).
GradedClass horizontal_eta_form(const ParabolicData& data, Bundle bundle, int truncation_degree);

/// sign(a_j - a_l)(1/2 - |a_j - a_l|).
Rational mu_coefficient(const Rational& weight_j, const Rational& weight_l);

/// Interior - sum_i sum_j (1/2 - a_j) Ch(E_ij) + sum_{a_1(p_i) = 0} Ch(E_i1);
/// the first sum includes zero weights.
GradedClass index_class_E(const ParabolicData& data, int truncation_degree);

/// Interior - sum_i sum_{j != l} mu_jl Ch(E_ij) Ch(E_il*)
///          + (1/2) sum_i sum_l Ch(E_il) Ch(E_il*)  [+ exact marker].
GradedClass index_class_End(const ParabolicData& data, int truncation_degree,
                            bool include_exact_term_symbol = false);

/// Degree-0 coefficient. Throws Error(SymbolicResidue) if a degree-0
/// monomial other than the unit is present.
Rational numerical_index(const GradedClass& cls);

/// 1 - index of the End family. Requires parabolic degree 0
/// (Error(NotDegreeZero)); throws Error(NegativeDimension) below 0.
long long moduli_dimension(const ParabolicData& data);

/// Two-form class of the Quillen connection. For E every weight must be
/// nonzero (Error(ZeroWeightPresent)).
GradedClass quillen_curvature(const ParabolicData& data, Bundle bundle, int truncation_degree = 2);

}  // namespace paraspec
