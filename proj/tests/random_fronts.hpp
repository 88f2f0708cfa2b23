#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotkit/front.hpp"
#include "knotkit/front_diagram.hpp"
#include "knotkit/kauffman.hpp"

namespace fronts {

using namespace knotkit;

// "L 1 R 1" style words on one line.
inline FrontWord W(const char* s) {
  std::string text;
  std::istringstream in(s);
  for (std::string kind, pos; in >> kind >> pos;) text += kind + " " + pos + "\n";
  return parse_front(text);
}

// Random fronts: a random walk of Legendrian moves away from a few seeds,
// plus random pinches so that links show up too.
inline std::vector<FrontWord> random_fronts(std::mt19937& rng, int count, std::size_t max_crossings) {
  const std::vector<FrontWord> seeds{W("L 1 R 1"), W("L 1 L 3 X 2 X 2 X 2 R 3 R 1"), W("L 1 L 3 R 2 R 1"),
                                     W("L 1 L 3 X 2 X 2 R 3 R 1")};
  std::vector<FrontWord> out;
  while (static_cast<int>(out.size()) < count) {
    OrientedFront f = orient(seeds[rng() % seeds.size()]);
    const int steps = 1 + static_cast<int>(rng() % 12);
    for (int s = 0; s < steps; ++s) {
      auto moves = enumerate_moves(f.front);
      f = apply_move(f, moves[rng() % moves.size()]);
    }
    if (rng() % 3 == 0) {
      const std::size_t column = rng() % (f.front.events.size() + 1);
      const int n = strands_before(f.front, column);
      if (n >= 2) f.front = pinch_unoriented(f.front, column, 1 + static_cast<int>(rng() % (n - 1)));
    }
    if (crossing_count(front_to_pd(f.front)) <= max_crossings) out.push_back(f.front);
  }
  return out;
}

}  // namespace fronts
