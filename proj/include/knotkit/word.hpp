#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace knotkit {

// A generator raised to +1 or -1.
class Letter {
 public:
  constexpr Letter(std::uint32_t generator, int sign) : generator_(generator), sign_(sign < 0 ? -1 : 1) {}

  constexpr std::uint32_t generator() const { return generator_; }
  constexpr int sign() const { return sign_; }
  constexpr Letter inverse() const { return Letter(generator_, -sign_); }

  auto operator<=>(const Letter&) const = default;

 private:
  std::uint32_t generator_;
  std::int8_t sign_;
};

// Element of a free group, always stored freely reduced.
class Word {
 public:
  Word() = default;
  // Freely reduces the raw letter sequence.
  explicit Word(std::span<const Letter> raw);

  static Word free_reduce(std::span<const Letter> raw) { return Word(raw); }
  // generator^power.
  static Word power(std::uint32_t generator, int power);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  // The (already reduced) prefix of the first n letters.
  Word prefix(std::size_t n) const;
  Word inverse() const;
  // Signed exponent sum of one generator.
  int exponent_sum(std::uint32_t generator) const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

inline Word word_mul(const Word& u, const Word& v) { return u * v; }
inline Word word_inv(const Word& u) { return u.inverse(); }

}  // namespace knotkit
