#pragma once

// Tietze-move helpers shared by the group and fox tests.

#include <random>
#include <string>
#include <vector>

#include "knotkit/presentation.hpp"

namespace tietze {

using knotkit::Letter;
using knotkit::Presentation;
using knotkit::Word;

inline Word random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, gens - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> raw;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) raw.emplace_back(static_cast<std::uint32_t>(gen(rng)), sign(rng) ? 1 : -1);
  return Word(raw);
}

inline Presentation conjugate_relator(const Presentation& p, std::size_t i, const Word& w) {
  auto rels = p.relators();
  rels[i] = w * rels[i] * w.inverse();
  return Presentation(p.generator_names(), rels);
}

inline Presentation invert_relator(const Presentation& p, std::size_t i) {
  auto rels = p.relators();
  rels[i] = rels[i].inverse();
  return Presentation(p.generator_names(), rels);
}

inline Presentation swap_relators(const Presentation& p, std::size_t i, std::size_t j) {
  auto rels = p.relators();
  std::swap(rels[i], rels[j]);
  return Presentation(p.generator_names(), rels);
}

// Adds a fresh generator g and the relator g w^-1.
inline Presentation stabilize(const Presentation& p, const Word& w) {
  auto names = p.generator_names();
  std::string fresh = "s" + std::to_string(names.size());
  while (p.generator_index(fresh)) fresh += "_";
  names.push_back(fresh);
  auto rels = p.relators();
  const auto g = static_cast<std::uint32_t>(names.size() - 1);
  rels.push_back(Word::power(g, 1) * w.inverse());
  return Presentation(names, rels);
}

// One random move of the kinds above; `extra` receives the weight the new
// generator must get when a map has to follow along (only for stabilize).
inline Presentation random_move(std::mt19937& rng, const Presentation& p, Word* stabilized_by = nullptr) {
  const std::size_t r = p.relators().size();
  std::uniform_int_distribution<int> kind(0, 3);
  const int k = r == 0 ? 3 : kind(rng);
  std::uniform_int_distribution<std::size_t> pick(0, r == 0 ? 0 : r - 1);
  switch (k) {
    case 0:
      return conjugate_relator(p, pick(rng), random_word(rng, p.generator_count(), 4));
    case 1:
      return invert_relator(p, pick(rng));
    case 2:
      return swap_relators(p, pick(rng), pick(rng));
    default: {
      const Word w = random_word(rng, p.generator_count(), 4);
      if (stabilized_by) *stabilized_by = w;
      return stabilize(p, w);
    }
  }
}

}  // namespace tietze
