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

#include "paraspec/chern.hpp"

#include "paraspec/errors.hpp"

#include <algorithm>

namespace paraspec {

namespace {

void check_truncation(int d) {
  if (d < 0 || d % 2 != 0)
    throw Error(ErrorKind::Domain, "truncation degree must be even and nonnegative");
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool has_symbolic_generator(const Monomial& monomial) {
  return std::any_of(monomial.begin(), monomial.end(), [](const auto& factor) {
    return factor.first.kind != Generator::Kind::Chern;
  });
}

}  // namespace

std::string Generator::render() const {
  switch (kind) {
    case Kind::Chern:
      return "ch" + std::to_string(m) + "(E[" + std::to_string(puncture + 1) + "," +
             std::to_string(level + 1) + "])";
    case Kind::Interior:
      return std::string("Int_") + bundle_name(bundle) + "[" + std::to_string(form_degree()) + "]";
    case Kind::Exact:
      return "dT[" + std::to_string(form_degree()) + "]";
  }
  return "?";
}

int form_degree(const Monomial& monomial) noexcept {
  int degree = 0;
  for (const auto& [g, e] : monomial) degree += g.form_degree() * e;
  return degree;
}

// ---------------------------------------------------------------------------

GradedClass::GradedClass(int truncation_degree) : truncation_(truncation_degree) {
  check_truncation(truncation_degree);
}

GradedClass GradedClass::constant(const Rational& c, int truncation_degree) {
  GradedClass out(truncation_degree);
  out.add_term({}, c);
  return out;
}

GradedClass GradedClass::generator(const Generator& g, int truncation_degree) {
  GradedClass out(truncation_degree);
  out.add_term({{g, 1}}, 1);
  return out;
}

void GradedClass::add_term(Monomial monomial, const Rational& coefficient) {
  if (coefficient == 0 || form_degree(monomial) > truncation_) return;
  auto it = terms_.find(monomial);
  if (it == terms_.end()) {
    terms_.emplace(std::move(monomial), coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Rational GradedClass::coefficient(const Monomial& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedClass GradedClass::degree_part(int degree) const {
  GradedClass out(truncation_);
  for (const auto& [monomial, c] : terms_)
    if (form_degree(monomial) == degree) out.terms_.emplace(monomial, c);
  return out;
}

GradedClass GradedClass::boundary_part() const {
  GradedClass out(truncation_);
  for (const auto& [monomial, c] : terms_)
    if (!has_symbolic_generator(monomial)) out.terms_.emplace(monomial, c);
  return out;
}

void GradedClass::check_compatible(const GradedClass& other) const {
  if (truncation_ != other.truncation_)
    throw Error(ErrorKind::TruncationMismatch,
                "truncation degrees " + std::to_string(truncation_) + " and " +
                    std::to_string(other.truncation_) + " differ");
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  check_compatible(other);
  for (const auto& [monomial, c] : other.terms_) add_term(monomial, c);
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
  check_compatible(other);
  for (const auto& [monomial, c] : other.terms_) add_term(monomial, -c);
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [monomial, c] : terms_) c *= scalar;
  return *this;
}

std::string GradedClass::render() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, const Monomial*>> order;
  order.reserve(terms_.size());
  for (const auto& [monomial, c] : terms_) order.emplace_back(form_degree(monomial), &monomial);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string out;
  bool first = true;
  for (const auto& [degree, monomial] : order) {
    const Rational& c = terms_.at(*monomial);
    const Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;

    std::string body;
    for (const auto& [g, e] : *monomial) {
      if (!body.empty()) body += "*";
      body += g.render();
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += to_string(magnitude) + "*" + body;
    }
  }
  return out;
}

GradedClass graded_multiply(const GradedClass& a, const GradedClass& b) {
  if (a.truncation_degree() != b.truncation_degree())
    throw Error(ErrorKind::TruncationMismatch, "cannot multiply classes of different truncation");
  GradedClass out(a.truncation_degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (form_degree(ma) + form_degree(mb) > a.truncation_degree()) continue;
      out.add_term(multiply(ma, mb), ca * cb);
    }
  return out;
}

GradedClass chern_character(int puncture, int level, int rank, bool dual, int truncation_degree) {
  if (puncture < 0 || level < 0 || rank < 1)
    throw Error(ErrorKind::Domain, "invalid Chern character indices");
  GradedClass out = GradedClass::constant(rank, truncation_degree);
  for (int m = 1; 2 * m <= truncation_degree; ++m) {
    const int sign = dual && (m % 2 == 1) ? -1 : 1;
    out.add_term({{Generator::chern(puncture, level, m), 1}}, sign);
  }
  return out;
}

// ---------------------------------------------------------------------------

GradedClass InteriorTerm::as_class(int truncation_degree) const {
  GradedClass out = GradedClass::constant(numeric_degree0, truncation_degree);
  for (int m = 1; 2 * m <= truncation_degree; ++m)
    out.add_term({{Generator::interior(bundle, m), 1}}, 1);
  return out;
}

InteriorTerm interior_term(const ParabolicData& data, Bundle bundle) {
  const Integer rank = bundle == Bundle::E ? Integer(data.rank) : Integer(data.rank) * data.rank;
  return {bundle, Rational(rank * euler_characteristic(data.surface), 2)};
}

namespace {

GradedClass ch(std::size_t i, std::size_t j, const FlagData& flag, bool dual, int d) {
  return chern_character(static_cast<int>(i), static_cast<int>(j), flag.mults[j], dual, d);
}

// Ch(E_ij) Ch(E_il*)
GradedClass hom_character(std::size_t i, std::size_t j, std::size_t l, const FlagData& flag,
                          int d) {
  return graded_multiply(ch(i, j, flag, false, d), ch(i, l, flag, true, d));
}

}  // namespace

GradedClass eta_form_E(const ParabolicData& data, int truncation_degree) {
  require_valid(data);
  GradedClass out(truncation_degree);
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    const FlagData& flag = data.flags[i];
    for (std::size_t j = 0; j < flag.levels(); ++j)
      if (flag.weights[j] > 0)
        out += (Rational(1, 2) - flag.weights[j]) * ch(i, j, flag, false, truncation_degree);
  }
  return out;
}

GradedClass eta_form_End(const ParabolicData& data, int truncation_degree) {
  require_valid(data);
  GradedClass out(truncation_degree);
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    const FlagData& flag = data.flags[i];
    for (std::size_t j = 0; j < flag.levels(); ++j)
      for (std::size_t l = 0; l < flag.levels(); ++l) {
        if (j == l) continue;
        const Rational delta = flag.weights[j] - flag.weights[l];
        const Rational coefficient = Rational(sign(delta)) * (1 - 2 * abs(delta)) / 2;
        out += coefficient * hom_character(i, j, l, flag, truncation_degree);
      }
  }
  return out;
}

GradedClass horizontal_eta_form(const ParabolicData& data, Bundle bundle, int truncation_degree) {
  require_valid(data);
  GradedClass out(truncation_degree);
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    const FlagData& flag = data.flags[i];
    if (bundle == Bundle::E) {
      if (flag.weights.front() == 0)
        out -= Rational(1, 2) * ch(i, 0, flag, false, truncation_degree);
    } else {
      for (std::size_t j = 0; j < flag.levels(); ++j)
        out -= Rational(1, 2) * hom_character(i, j, j, flag, truncation_degree);
    }
  }
  return out;
}

Rational mu_coefficient(const Rational& weight_j, const Rational& weight_l) {
  const Rational delta = weight_j - weight_l;
  return Rational(sign(delta)) * (Rational(1, 2) - abs(delta));
}

GradedClass index_class_E(const ParabolicData& data, int truncation_degree) {
  require_valid(data);
  GradedClass out = interior_term(data, Bundle::E).as_class(truncation_degree);
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    const FlagData& flag = data.flags[i];
    for (std::size_t j = 0; j < flag.levels(); ++j)
      out -= (Rational(1, 2) - flag.weights[j]) * ch(i, j, flag, false, truncation_degree);
    if (flag.weights.front() == 0) out += ch(i, 0, flag, false, truncation_degree);
  }
  return out;
}

GradedClass index_class_End(const ParabolicData& data, int truncation_degree,
                            bool include_exact_term_symbol) {
  require_valid(data);
  GradedClass out = interior_term(data, Bundle::End).as_class(truncation_degree);
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    const FlagData& flag = data.flags[i];
    for (std::size_t j = 0; j < flag.levels(); ++j)
      for (std::size_t l = 0; l < flag.levels(); ++l) {
        if (j == l) continue;
        out -= mu_coefficient(flag.weights[j], flag.weights[l]) *
               hom_character(i, j, l, flag, truncation_degree);
      }
    for (std::size_t l = 0; l < flag.levels(); ++l)
      out += Rational(1, 2) * hom_character(i, l, l, flag, truncation_degree);
  }
  if (include_exact_term_symbol) {
    // Exact, so it has no degree-0 part.
    for (int m = 1; 2 * m <= truncation_degree; ++m)
      out.add_term({{Generator::exact(m), 1}}, -1);
  }
  return out;
}

Rational numerical_index(const GradedClass& cls) {
  for (const auto& [monomial, c] : cls.terms())
    if (form_degree(monomial) == 0 && !monomial.empty())
      throw Error(ErrorKind::SymbolicResidue, "non-numeric degree-0 term remains");
  return cls.coefficient({});
}

long long moduli_dimension(const ParabolicData& data) {
  require_valid(data);
  if (parabolic_degree(data) != 0)
    throw Error(ErrorKind::NotDegreeZero,
                "parabolic degree is " + to_string(parabolic_degree(data)) + ", not 0");
  const Rational dimension = 1 - numerical_index(index_class_End(data, 0));
  if (!is_integer(dimension))
    throw std::logic_error("moduli dimension is not an integer: " + to_string(dimension));
  if (dimension < 0)
    throw Error(ErrorKind::NegativeDimension,
                "expected dimension " + to_string(dimension) + " is negative");
  return boost::multiprecision::numerator(dimension).convert_to<long long>();
}

GradedClass quillen_curvature(const ParabolicData& data, Bundle bundle, int truncation_degree) {
  require_valid(data);
  if (truncation_degree < 2)
    throw Error(ErrorKind::Domain, "curvature is a two-form; truncation degree must be >= 2");
  GradedClass out = GradedClass::generator(Generator::interior(bundle, 1), truncation_degree);
  auto c1 = [&](std::size_t i, std::size_t j) {
    return GradedClass::generator(
        Generator::chern(static_cast<int>(i), static_cast<int>(j), 1), truncation_degree);
  };
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    const FlagData& flag = data.flags[i];
    if (bundle == Bundle::E) {
      if (flag.weights.front() == 0)
        throw Error(ErrorKind::ZeroWeightPresent,
                    "puncture " + std::to_string(i) + " carries a zero weight");
      for (std::size_t j = 0; j < flag.levels(); ++j)
        out -= (Rational(1, 2) - flag.weights[j]) * c1(i, j);
    } else {
      for (std::size_t j = 0; j < flag.levels(); ++j)
        for (std::size_t l = 0; l < flag.levels(); ++l) {
          if (j == l) continue;
          const Rational delta = flag.weights[j] - flag.weights[l];
          out -= Rational(sign(delta)) * (1 - 2 * abs(delta)) * flag.mults[l] * c1(i, j);
        }
    }
  }
  return out;
}

}  // namespace paraspec
