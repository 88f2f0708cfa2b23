#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knotkit/laurent.hpp"
#include "knotkit/presentation.hpp"

namespace knotkit {

// Element of the integral group ring of a free group.
class GroupRingElement {
 public:
  using Terms = std::map<Word, Coeff>;

  GroupRingElement() = default;
  static GroupRingElement of(const Word& w, Coeff coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement lhs, const GroupRingElement& rhs) { return lhs += rhs; }
  friend GroupRingElement operator-(GroupRingElement lhs, const GroupRingElement& rhs) { return lhs -= rhs; }
  friend GroupRingElement operator*(const GroupRingElement& lhs, const GroupRingElement& rhs);

  bool operator==(const GroupRingElement&) const = default;

 private:
  void add_term(const Word& w, Coeff c);

  Terms terms_;
};

std::string to_string(const GroupRingElement& e, const Presentation& names);

// Free derivative d/dg of w.
GroupRingElement fox_derivative(const Word& w, std::uint32_t generator);

// Image of a group ring element under the map to Z[t, 1/t].
IntLaurent abelianize(const GroupRingElement& e, const AbelianizationMap& m);
// t^(weighted exponent sum of w).
IntLaurent abelianize(const Word& w, const AbelianizationMap& m);

IntLaurent abelianized_fox(const Word& w, std::uint32_t generator, const AbelianizationMap& m);

// sum_j m(d_j w) (t^{w_j} - 1) - (m(w) - 1). Zero for every word.
IntLaurent fox_identity_residual(const Word& w, std::size_t generator_count, const AbelianizationMap& m);

// Rows are relators, columns generators.
struct AlexanderMatrix {
  std::vector<std::vector<IntLaurent>> entries;
  AbelianizationMap map;
};

// Throws ValidationError if m does not kill every relator.
AlexanderMatrix alexander_matrix(const Presentation& p, const AbelianizationMap& m);

// One row per line, entries separated by " | ".
std::string to_string(const AlexanderMatrix& a);

// Determinant by cofactor expansion; the empty matrix has determinant 1.
IntLaurent laurent_determinant(const std::vector<std::vector<IntLaurent>>& m);

// gcd of all (n-1)-minors, in canonical unit form; zero if every minor
// vanishes. Throws ValidationError with fewer than n-1 relators.
IntLaurent alexander_polynomial(const Presentation& p, const AbelianizationMap& m);
IntLaurent alexander_polynomial(const AlexanderMatrix& a);

}  // namespace knotkit
