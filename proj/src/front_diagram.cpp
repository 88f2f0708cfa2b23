#include "knotkit/front_diagram.hpp"

#include <map>
#include <numeric>
#include <set>

namespace knotkit {

LinkDiagram front_to_pd(const FrontWord& f) {
  require_valid(f);
  std::vector<int> parent;
  auto fresh = [&] {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  };
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> strand;  // edge label at each position, top first
  std::vector<std::array<int, 4>> crossings;
  for (const Event& e : f.events) {
    const auto k = static_cast<std::size_t>(e.k - 1);
    switch (e.kind) {
      case EventKind::Left: {
        const int label = fresh();
        strand.insert(strand.begin() + static_cast<std::ptrdiff_t>(k), {label, label});
        break;
      }
      case EventKind::Right: {
        const int a = find(strand[k]), b = find(strand[k + 1]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
        strand.erase(strand.begin() + static_cast<std::ptrdiff_t>(k),
                     strand.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        break;
      }
      case EventKind::Cross: {
        // ea runs from upper left to lower right in front of eb.
        const int ea = strand[k], eb = strand[k + 1];
        const int fa = fresh(), fb = fresh();
        crossings.push_back({eb, fa, fb, ea});
        strand[k] = fb;
        strand[k + 1] = fa;
        break;
      }
    }
  }
  LinkDiagram d;
  std::map<int, int> ids;
  for (auto& x : crossings) {
    for (int& label : x) label = ids.try_emplace(find(label), static_cast<int>(ids.size()) + 1).first->second;
    d.crossings.push_back(x);
  }
  std::set<int> loops;
  for (std::size_t label = 0; label < parent.size(); ++label) {
    const int r = find(static_cast<int>(label));
    if (!ids.count(r)) loops.insert(r);
  }
  d.loops = static_cast<int>(loops.size());
  return d;
}

}  // namespace knotkit
