#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotkit/presentation.hpp"

namespace knotkit {

// Permutation of {0..n-1}, stored as its image list. Composition follows the
// right action used for words: (p * q)(i) = q(p(i)), so a word's leftmost
// letter acts first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t n);
  // Cycle notation on 1-based symbols, e.g. "(1 2 3)(4 5)"; "()" is the
  // identity.
  static Permutation parse_cycles(std::string_view text, std::size_t n);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint8_t>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

std::string to_cycles(const Permutation& p);

// One permutation per generator, all of the same degree.
struct FiniteAssignment {
  std::vector<Permutation> images;
};

// Throws ValidationError on an empty or mismatched-degree assignment.
Permutation evaluate(const Word& w, const FiniteAssignment& a);

// True iff every relator evaluates to the identity. Throws ValidationError
// if the assignment length differs from the generator count or degrees
// disagree.
bool check_finite_hom(const Presentation& p, const FiniteAssignment& a);
bool is_image_abelian(const FiniteAssignment& a);

struct HomCount {
  std::uint64_t count = 0;
  std::uint64_t non_abelian = 0;
  // The first non-abelian homomorphism in enumeration order, if any.
  std::optional<FiniteAssignment> witness;
};

inline constexpr std::uint64_t kDefaultHomBudget = 100'000'000;

// Counts homomorphisms into the symmetric group on n symbols by exhaustive
// enumeration of (n!)^g assignments. Throws BudgetExceeded when that number
// exceeds the budget. threads = 0 picks the hardware concurrency; the result
// does not depend on it.
HomCount count_homs(const Presentation& p, std::size_t n, std::uint64_t budget = kDefaultHomBudget,
                    unsigned threads = 0);

}  // namespace knotkit
