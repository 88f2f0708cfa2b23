#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "knotkit/checked.hpp"

namespace knotkit {

// Integer Laurent polynomial in one variable (t). Zero coefficients are never
// stored, so the zero polynomial has an empty term map and structural
// equality is polynomial equality.
class IntLaurent {
 public:
  using Terms = std::map<int, Coeff>;

  IntLaurent() = default;
  IntLaurent(Coeff constant);  // NOLINT(google-explicit-constructor)

  static IntLaurent monomial(Coeff coefficient, int exponent);
  static IntLaurent from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(int exponent) const;

  // Both throw ValidationError on the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  // Multiplication by t^k.
  IntLaurent shifted(int k) const;
  // gcd of the coefficients; 0 for the zero polynomial.
  Coeff content() const;

  IntLaurent operator-() const;
  IntLaurent& operator+=(const IntLaurent& other);
  IntLaurent& operator-=(const IntLaurent& other);
  IntLaurent& operator*=(const IntLaurent& other);
  friend IntLaurent operator+(IntLaurent lhs, const IntLaurent& rhs) { return lhs += rhs; }
  friend IntLaurent operator-(IntLaurent lhs, const IntLaurent& rhs) { return lhs -= rhs; }
  friend IntLaurent operator*(const IntLaurent& lhs, const IntLaurent& rhs);

  bool operator==(const IntLaurent&) const = default;

 private:
  void add_term(int exponent, Coeff coefficient);

  Terms terms_;
};

// Canonical representative of the class {±t^k p}: lowest exponent 0 and a
// positive constant coefficient. Rejects zero.
IntLaurent normalize_unit(const IntLaurent& p);

// True iff p and q differ by a unit ±t^k, or (with allow_inversion) by a unit
// after substituting t -> 1/t in one of them. Zero is equivalent only to zero.
bool unit_equivalent(const IntLaurent& p, const IntLaurent& q, bool allow_inversion);

// gcd in Z[t, 1/t], returned in normalize_unit form. Rejects gcd(0, 0).
IntLaurent laurent_gcd(const IntLaurent& p, const IntLaurent& q);

// p / q when q divides p in Z[t, 1/t]; nullopt otherwise. Rejects q = 0.
std::optional<IntLaurent> exact_quotient(const IntLaurent& p, const IntLaurent& q);

// t^k -> t^-k.
IntLaurent substitute_inverse(const IntLaurent& p);

// Renders as e.g. "4*t^2 - 4*t + 1" (descending exponents).
std::string to_string(const IntLaurent& p, std::string_view variable = "t");
// Inverse of to_string; whitespace-insensitive, '*' optional, exponents may
// be written t^-1 or t^(-1).
IntLaurent parse_int_laurent(std::string_view text, std::string_view variable = "t");

// Exponent pair for a^i z^j.
struct AZ {
  int a = 0;
  int z = 0;
  auto operator<=>(const AZ&) const = default;
};

// Integer Laurent polynomial in a and z, used for Kauffman polynomials.
class BiLaurent {
 public:
  using Terms = std::map<AZ, Coeff>;

  BiLaurent() = default;
  BiLaurent(Coeff constant);  // NOLINT(google-explicit-constructor)

  static BiLaurent monomial(Coeff coefficient, int a_exponent, int z_exponent);
  static BiLaurent from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(int a_exponent, int z_exponent) const;

  // Multiplication by a^da z^dz.
  BiLaurent shifted(int da, int dz) const;

  BiLaurent operator-() const;
  BiLaurent& operator+=(const BiLaurent& other);
  BiLaurent& operator-=(const BiLaurent& other);
  BiLaurent& operator*=(const BiLaurent& other);
  friend BiLaurent operator+(BiLaurent lhs, const BiLaurent& rhs) { return lhs += rhs; }
  friend BiLaurent operator-(BiLaurent lhs, const BiLaurent& rhs) { return lhs -= rhs; }
  friend BiLaurent operator*(const BiLaurent& lhs, const BiLaurent& rhs);

  bool operator==(const BiLaurent&) const = default;

 private:
  void add_term(AZ exponent, Coeff coefficient);

  Terms terms_;
};

// a^i z^j -> a^-i z^j.
BiLaurent a_mirror(const BiLaurent& f);
// Least / greatest a-exponent with a nonzero coefficient. Reject zero.
int min_deg_a(const BiLaurent& f);
int max_deg_a(const BiLaurent& f);
// Least z-exponent. Rejects zero.
int min_deg_z(const BiLaurent& f);

// Renders as e.g. "a^-2*z + a" (descending z, then descending a).
std::string to_string(const BiLaurent& f);
BiLaurent parse_bi_laurent(std::string_view text);

}  // namespace knotkit
