#include "knotkit/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotkit {

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::power(std::uint32_t generator, int power) {
  Word w;
  const Letter l(generator, power < 0 ? -1 : 1);
  w.letters_.assign(static_cast<std::size_t>(std::abs(power)), l);
  return w;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, letters_.size())));
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

int Word::exponent_sum(std::uint32_t generator) const {
  int sum = 0;
  for (Letter l : letters_)
    if (l.generator() == generator) sum += l.sign();
  return sum;
}

Word operator*(const Word& lhs, const Word& rhs) {
  // Cancel across the seam only; both halves are already reduced.
  std::size_t cancel = 0;
  const std::size_t n = lhs.letters_.size();
  while (cancel < n && cancel < rhs.letters_.size() &&
         lhs.letters_[n - 1 - cancel] == rhs.letters_[cancel].inverse())
    ++cancel;
  Word w;
  w.letters_.reserve(n + rhs.letters_.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), lhs.letters_.begin(), lhs.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  w.letters_.insert(w.letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), rhs.letters_.end());
  return w;
}

}  // namespace knotkit
