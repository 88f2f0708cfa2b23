#include "knotkit/kauffman.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "knotkit/errors.hpp"

namespace knotkit {

namespace {

// Pairings of the four slots used when a crossing is removed.
enum Pairing { kJoin01 = 0, kJoin03 = 1, kPassThrough = 2 };

constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kPairs{{
    {{{0, 1}, {2, 3}}},
    {{{0, 3}, {1, 2}}},
    {{{0, 2}, {1, 3}}},
}};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int max_label(const LinkDiagram& d) {
  int m = -1;
  for (const auto& x : d.crossings)
    for (int e : x) m = std::max(m, e);
  return m;
}

// Labels 0..E-1 in order of first appearance.
LinkDiagram compact(const LinkDiagram& d) {
  std::map<int, int> ids;
  LinkDiagram out;
  out.loops = d.loops;
  for (const auto& x : d.crossings) {
    std::array<int, 4> y{};
    for (int s = 0; s < 4; ++s) y[s] = ids.try_emplace(x[s], static_cast<int>(ids.size())).first->second;
    out.crossings.push_back(y);
  }
  return out;
}

// Dart 4i+s is slot s of crossing i; partner[d] is the dart at the other end
// of its edge.
std::vector<int> partners(const LinkDiagram& d) {
  const int labels = max_label(d) + 1;
  std::vector<int> first(static_cast<std::size_t>(labels), -1);
  std::vector<int> partner(4 * d.crossings.size(), -1);
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    for (int s = 0; s < 4; ++s) {
      const int e = d.crossings[i][s];
      const int dart = static_cast<int>(4 * i) + s;
      if (first[e] < 0) {
        first[e] = dart;
      } else {
        partner[dart] = first[e];
        partner[first[e]] = dart;
      }
    }
  return partner;
}

int next_ccw(int dart) { return (dart & ~3) | ((dart + 1) & 3); }
int opposite(int dart) { return (dart & ~3) | ((dart + 2) & 3); }

struct Faces {
  std::vector<int> of_dart;
  std::vector<int> size;
};

// Orbits of next_ccw after partner.
Faces faces(const std::vector<int>& partner) {
  Faces f;
  f.of_dart.assign(partner.size(), -1);
  for (std::size_t start = 0; start < partner.size(); ++start) {
    if (f.of_dart[start] >= 0) continue;
    const int id = static_cast<int>(f.size.size());
    int len = 0;
    int d = static_cast<int>(start);
    while (f.of_dart[d] < 0) {
      f.of_dart[d] = id;
      ++len;
      d = next_ccw(partner[d]);
    }
    f.size.push_back(len);
  }
  return f;
}

int crossing_pieces(const LinkDiagram& d, const std::vector<int>& partner, std::vector<int>* piece_of = nullptr) {
  Dsu dsu(d.crossings.size());
  for (std::size_t dart = 0; dart < partner.size(); ++dart) dsu.unite(static_cast<int>(dart / 4), partner[dart] / 4);
  std::vector<int> id(d.crossings.size(), -1);
  int n = 0;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const int r = dsu.find(static_cast<int>(i));
    if (id[r] < 0) id[r] = n++;
    if (piece_of) piece_of->push_back(id[r]);
  }
  return n;
}

// One traversal step is a passage: entering crossing dart/4 through slot
// dart%4 and leaving through the opposite slot.
std::vector<std::vector<int>> strand_cycles(const std::vector<int>& partner) {
  std::vector<bool> used(partner.size(), false);
  std::vector<std::vector<int>> cycles;
  for (std::size_t start = 0; start < partner.size(); ++start) {
    if (used[start]) continue;
    std::vector<int> cycle;
    int d = static_cast<int>(start);
    while (!used[d]) {
      used[d] = true;
      used[opposite(d)] = true;
      cycle.push_back(d);
      d = partner[opposite(d)];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// Removes the listed crossings, joining slots per pairing; edge classes
// left with no crossing become loops.
LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<std::pair<std::size_t, Pairing>>& ops) {
  Dsu dsu(static_cast<std::size_t>(max_label(d) + 1));
  std::vector<bool> removed(d.crossings.size(), false);
  for (auto [i, p] : ops) {
    removed[i] = true;
    for (const auto& pair : kPairs[p]) dsu.unite(d.crossings[i][pair[0]], d.crossings[i][pair[1]]);
  }
  LinkDiagram out;
  out.loops = d.loops;
  std::vector<bool> live(dsu.parent.size(), false);
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (removed[i]) continue;
    std::array<int, 4> x{};
    for (int s = 0; s < 4; ++s) {
      x[s] = dsu.find(d.crossings[i][s]);
      live[x[s]] = true;
    }
    out.crossings.push_back(x);
  }
  std::vector<bool> counted(dsu.parent.size(), false);
  for (auto [i, p] : ops) {
    (void)p;
    for (int e : d.crossings[i]) {
      const int r = dsu.find(e);
      if (!live[r] && !counted[r]) {
        counted[r] = true;
        ++out.loops;
      }
    }
  }
  return out;
}

void check_structure(const LinkDiagram& d) {
  if (d.loops < 0) throw ValidationError("negative loop count");
  std::map<int, int> uses;
  for (const auto& x : d.crossings)
    for (int e : x) ++uses[e];
  for (auto [e, n] : uses)
    if (n != 2)
      throw ValidationError("edge label " + std::to_string(e) + " is used " + std::to_string(n) +
                            " times; every label must appear exactly twice");
  const LinkDiagram c = compact(d);
  const std::vector<int> partner = partners(c);
  const int v = static_cast<int>(c.crossings.size());
  if (v == 0) return;
  const Faces f = faces(partner);
  const int components = crossing_pieces(c, partner);
  const int euler = v - 2 * v + static_cast<int>(f.size.size());
  if (euler != 2 * components)
    throw ValidationError("PD code is not planar: V - E + F = " + std::to_string(euler) + " but " +
                          std::to_string(components) + " connected pieces need " + std::to_string(2 * components));
}

BiLaurent power(const BiLaurent& base, int n) {
  BiLaurent out(1);
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

// Kink at crossing i: its loop edge joins two cyclically adjacent slots.
// Returns the writhe of the kink, or 0 if there is none.
int kink_sign(const std::array<int, 4>& x, int* slot) {
  for (int s = 0; s < 4; ++s)
    if (x[s] == x[(s + 1) % 4]) {
      *slot = s;
      return s % 2 == 0 ? 1 : -1;
    }
  return 0;
}

// Bigon whose two edges stay on one level (over at both ends or under at
// both ends); removing both crossings is a Reidemeister II move.
bool find_reducing_bigon(const LinkDiagram& d, std::size_t* a, std::size_t* b) {
  const std::vector<int> partner = partners(d);
  const Faces f = faces(partner);
  for (std::size_t dart = 0; dart < partner.size(); ++dart) {
    if (f.size[f.of_dart[dart]] != 2) continue;
    const int p = partner[dart];
    const auto i = dart / 4, j = static_cast<std::size_t>(p / 4);
    if (i == j) continue;
    if ((dart % 2) == static_cast<std::size_t>(p % 2)) {
      *a = i;
      *b = j;
      return true;
    }
  }
  return false;
}

Simplified simplify_compact(LinkDiagram d) {
  Simplified out{std::move(d), BiLaurent(1)};
  int a_power = 0;
  while (true) {
    bool changed = false;
    for (std::size_t i = 0; i < out.diagram.crossings.size(); ++i) {
      int slot = 0;
      if (const int sign = kink_sign(out.diagram.crossings[i], &slot)) {
        a_power -= sign;
        out.diagram = remove_crossings(out.diagram, {{i, kPassThrough}});
        changed = true;
        break;
      }
    }
    if (changed) continue;
    std::size_t a = 0, b = 0;
    if (find_reducing_bigon(out.diagram, &a, &b)) {
      out.diagram = remove_crossings(out.diagram, {{a, kPassThrough}, {b, kPassThrough}});
      continue;
    }
    break;
  }
  out.factor = BiLaurent::monomial(1, a_power, 0);
  return out;
}

std::vector<LinkDiagram> split_pieces(const LinkDiagram& d) {
  const std::vector<int> partner = partners(d);
  std::vector<int> piece_of;
  const int n = crossing_pieces(d, partner, &piece_of);
  std::vector<LinkDiagram> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < d.crossings.size(); ++i) out[piece_of[i]].crossings.push_back(d.crossings[i]);
  return out;
}

// Minimum BFS code over all starting crossings and both admissible
// rotations; labels renumbered by first appearance.
std::vector<int> piece_code(const LinkDiagram& d) {
  const std::vector<int> partner = partners(d);
  const std::size_t n = d.crossings.size();
  std::vector<int> best;
  std::vector<int> order, rot(n), index(n);
  std::vector<int> relabel(static_cast<std::size_t>(max_label(d) + 1));
  std::vector<int> code;
  for (std::size_t start = 0; start < n; ++start)
    for (int r0 : {0, 2}) {
      std::fill(index.begin(), index.end(), -1);
      order.clear();
      order.push_back(static_cast<int>(start));
      index[start] = 0;
      rot[start] = r0;
      for (std::size_t q = 0; q < order.size(); ++q) {
        const int c = order[q];
        for (int t = 0; t < 4; ++t) {
          const int p = partner[4 * c + (rot[c] + t) % 4];
          const int j = p / 4;
          if (index[j] >= 0) continue;
          index[j] = static_cast<int>(order.size());
          rot[j] = (p % 4) & ~1;
          order.push_back(j);
        }
      }
      std::fill(relabel.begin(), relabel.end(), -1);
      int next = 0;
      code.clear();
      bool worse = false, better = best.empty();
      for (int c : order) {
        for (int t = 0; t < 4; ++t) {
          int& l = relabel[d.crossings[c][(rot[c] + t) % 4]];
          if (l < 0) l = next++;
          code.push_back(l);
          // Stop early once this start is known to lose.
          if (!better) {
            const std::size_t k = code.size() - 1;
            if (code[k] > best[k]) worse = true;
            if (code[k] < best[k]) better = true;
          }
          if (worse) break;
        }
        if (worse) break;
      }
      if (!worse && better) best = code;
    }
  return best;
}

struct Plan {
  std::vector<int> bad;  // crossings met first from below
  int writhe = 0;
  int components = 0;
};

// Basepoints, directions and a stacking order of the components that
// minimize the number of crossings violating the descending rule.
Plan descending_plan(const LinkDiagram& d) {
  const std::vector<int> partner = partners(d);
  const auto cycles = strand_cycles(partner);
  const std::size_t n = d.crossings.size();
  const std::size_t c = cycles.size();

  // The component of each passage through each crossing.
  std::vector<std::array<int, 2>> comp_at(n, {-1, -1});  // [under, over]
  for (std::size_t k = 0; k < c; ++k)
    for (int dart : cycles[k]) comp_at[dart / 4][(dart % 4) & 1] = static_cast<int>(k);

  struct Choice {
    std::vector<int> passages;  // entry darts in traversal order
    int bad = 0;
  };
  std::vector<Choice> chosen(c);
  std::vector<int> seen(n, -1);
  int stamp = 0;
  for (std::size_t k = 0; k < c; ++k) {
    const auto& cyc = cycles[k];
    const std::size_t len = cyc.size();
    Choice best;
    best.bad = -1;
    for (int dir = 0; dir < 2; ++dir)
      for (std::size_t p = 0; p < len; ++p) {
        ++stamp;
        Choice cur;
        for (std::size_t t = 0; t < len; ++t) {
          int dart;
          if (dir == 0)
            dart = cyc[(p + t) % len];
          else
            dart = opposite(cyc[(p + len - t) % len]);
          cur.passages.push_back(dart);
          const int x = dart / 4;
          const bool self = comp_at[x][0] == comp_at[x][1];
          if (!self) continue;
          if (seen[x] != stamp) {
            seen[x] = stamp;
            if ((dart % 4) % 2 == 0) ++cur.bad;
          }
        }
        if (best.bad < 0 || cur.bad < best.bad) best = std::move(cur);
      }
    chosen[k] = std::move(best);
  }

  // cost[a][b]: mixed crossings where b is over a, bad if a is stacked above b.
  std::vector<std::vector<int>> cost(c, std::vector<int>(c, 0));
  for (std::size_t x = 0; x < n; ++x) {
    const int under = comp_at[x][0], over = comp_at[x][1];
    if (under != over) ++cost[under][over];
  }
  std::vector<int> order(c);
  std::iota(order.begin(), order.end(), 0);
  auto order_cost = [&](const std::vector<int>& o) {
    int total = 0;
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j) total += cost[o[i]][o[j]];
    return total;
  };
  if (c <= 6) {
    std::vector<int> best = order, cur = order;
    int best_cost = order_cost(order);
    while (std::next_permutation(cur.begin(), cur.end())) {
      const int v = order_cost(cur);
      if (v < best_cost) {
        best_cost = v;
        best = cur;
      }
    }
    order = best;
  }
  std::vector<int> rank(c);
  for (std::size_t i = 0; i < c; ++i) rank[order[i]] = static_cast<int>(i);

  Plan plan;
  plan.components = static_cast<int>(c);
  // Direction of each passage: entry slot per crossing and level.
  std::vector<std::array<int, 2>> entry(n, {-1, -1});
  std::vector<int> first_level(n, -1);
  for (std::size_t k = 0; k < c; ++k)
    for (int dart : chosen[k].passages) {
      const int x = dart / 4, slot = dart % 4;
      entry[x][slot & 1] = slot;
      if (first_level[x] < 0) first_level[x] = slot & 1;
    }
  for (std::size_t x = 0; x < n; ++x) {
    const int under = comp_at[x][0], over = comp_at[x][1];
    bool is_bad;
    if (under == over)
      is_bad = first_level[x] == 0;
    else
      is_bad = rank[under] < rank[over];
    if (is_bad) plan.bad.push_back(static_cast<int>(x));
    plan.writhe += (entry[x][0] == 0) == (entry[x][1] == 3) ? 1 : -1;
  }
  return plan;
}

// Size of the smallest face touching each crossing.
std::vector<int> smallest_face(const LinkDiagram& d) {
  const std::vector<int> partner = partners(d);
  const Faces f = faces(partner);
  std::vector<int> out(d.crossings.size(), 1 << 30);
  for (std::size_t dart = 0; dart < partner.size(); ++dart)
    out[dart / 4] = std::min(out[dart / 4], f.size[f.of_dart[dart]]);
  return out;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Engine {
 public:
  explicit Engine(const KauffmanOptions& options) : options_(options), delta_(kauffman_delta()) {}

  BiLaurent eval(const LinkDiagram& d, int depth) {
    Simplified s = simplify_compact(d);
    const std::vector<LinkDiagram> pieces = split_pieces(s.diagram);
    const int parts = static_cast<int>(pieces.size()) + s.diagram.loops;
    if (parts == 0) throw ValidationError("empty diagram");
    BiLaurent out = s.factor * power(delta_, parts - 1);
    for (const LinkDiagram& p : pieces) out *= eval_piece(p, depth);
    return out;
  }

  KauffmanStats stats() const { return {nodes_.load(), hits_.load()}; }

 private:
  BiLaurent eval_piece(const LinkDiagram& piece, int depth) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    std::vector<int> key = piece_code(piece);
    {
      std::shared_lock lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
      }
    }
    const Plan plan = descending_plan(piece);
    BiLaurent value;
    if (plan.bad.empty()) {
      value = BiLaurent::monomial(1, -plan.writhe, 0) * power(delta_, plan.components - 1);
    } else {
      const std::vector<int> face = smallest_face(piece);
      int pick = plan.bad.front();
      for (int x : plan.bad)
        if (face[x] < face[pick]) pick = x;
      const auto x = static_cast<std::size_t>(pick);
      const LinkDiagram switched = switch_crossing(piece, x);
      const LinkDiagram s0 = remove_crossings(piece, {{x, kJoin01}});
      const LinkDiagram s1 = remove_crossings(piece, {{x, kJoin03}});
      BiLaurent v0, v1, vs;
      if (options_.threads > 1 && depth < 2) {
        auto f0 = std::async(std::launch::async, [&] { return eval(s0, depth + 1); });
        auto f1 = std::async(std::launch::async, [&] { return eval(s1, depth + 1); });
        vs = eval(switched, depth + 1);
        v0 = f0.get();
        v1 = f1.get();
      } else {
        v0 = eval(s0, depth + 1);
        v1 = eval(s1, depth + 1);
        vs = eval(switched, depth + 1);
      }
      value = BiLaurent::monomial(1, 0, 1) * (v0 + v1) - vs;
    }
    std::unique_lock lock(memo_mutex_);
    memo_.try_emplace(std::move(key), value);
    return value;
  }

  KauffmanOptions options_;
  BiLaurent delta_;
  std::shared_mutex memo_mutex_;
  std::unordered_map<std::vector<int>, BiLaurent, VecHash> memo_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> hits_{0};
};

void check_budget(const LinkDiagram& d, const KauffmanOptions& options) {
  if (d.crossings.size() > options.max_crossings)
    throw BudgetExceeded("diagram has " + std::to_string(d.crossings.size()) + " crossings, above the budget of " +
                         std::to_string(options.max_crossings));
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  LinkDiagram d;
  std::set<int> loop_labels;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
      throw ParseError("PD line " + std::to_string(line_no) + ": " + why);
    };
    auto skip = [&] {
      while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',')) ++i;
    };
    while (true) {
      skip();
      if (i >= line.size()) break;
      const char kind = line[i];
      if (kind != 'X' && kind != 'O') fail(std::string("unexpected '") + kind + "'");
      ++i;
      skip();
      if (i >= line.size() || (line[i] != '(' && line[i] != '[')) fail("expected '(' after " + std::string(1, kind));
      const char close = line[i] == '(' ? ')' : ']';
      ++i;
      std::vector<int> labels;
      while (true) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size() && line[i] == close) {
          ++i;
          break;
        }
        if (i < line.size() && line[i] == ',') {
          ++i;
          continue;
        }
        std::size_t j = i;
        if (j < line.size() && line[j] == '-') ++j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        int v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
        if (j == i || ec != std::errc() || ptr != line.data() + j) fail("malformed label");
        labels.push_back(v);
        i = j;
      }
      if (kind == 'X') {
        if (labels.size() != 4) fail("a crossing needs 4 labels, got " + std::to_string(labels.size()));
        d.crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
      } else {
        if (labels.size() != 1) fail("a loop takes exactly one label");
        if (!loop_labels.insert(labels[0]).second) fail("loop label " + std::to_string(labels[0]) + " repeated");
        ++d.loops;
      }
    }
  }
  for (const auto& x : d.crossings)
    for (int e : x)
      if (loop_labels.count(e)) throw ValidationError("loop label " + std::to_string(e) + " also used by a crossing");
  validate(d);
  return d;
}

std::string format_pd(const LinkDiagram& d) {
  std::ostringstream os;
  for (const auto& x : d.crossings) os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ")\n";
  int next = max_label(d) + 1;
  for (int i = 0; i < d.loops; ++i) os << "O(" << next++ << ")\n";
  return os.str();
}

void validate(const LinkDiagram& d) { check_structure(d); }

std::size_t crossing_count(const LinkDiagram& d) { return d.crossings.size(); }

int link_components(const LinkDiagram& d) {
  const LinkDiagram c = compact(d);
  return static_cast<int>(strand_cycles(partners(c)).size()) + d.loops;
}

int writhe(const LinkDiagram& d) {
  const LinkDiagram c = compact(d);
  const std::vector<int> partner = partners(c);
  const auto cycles = strand_cycles(partner);
  std::vector<std::array<int, 2>> entry(c.crossings.size(), {-1, -1});
  for (const auto& cyc : cycles) {
    // Orientation rule: at the lowest-numbered crossing where the component
    // runs under, it enters through slot 0; a component that is never under
    // enters its lowest crossing through slot 1.
    int ref = -1;
    bool under = false;
    for (int dart : cyc) {
      const int x = dart / 4;
      const bool u = (dart % 2) == 0;
      if (ref < 0 || (u && !under) || (u == under && x < ref / 4)) {
        ref = dart;
        under = u;
      }
    }
    const int want = under ? 0 : 1;
    const bool forward = ref % 4 == want;
    for (int dart : cyc) {
      const int in = forward ? dart : opposite(dart);
      entry[in / 4][in % 2] = in % 4;
    }
  }
  int w = 0;
  for (const auto& e : entry) w += (e[0] == 0) == (e[1] == 3) ? 1 : -1;
  return w;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& x : out.crossings) x = {x[1], x[2], x[3], x[0]};
  return out;
}

LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t crossing) {
  if (crossing >= d.crossings.size()) throw ValidationError("no crossing " + std::to_string(crossing));
  LinkDiagram out = d;
  auto& x = out.crossings[crossing];
  x = {x[1], x[2], x[3], x[0]};
  return out;
}

LinkDiagram smooth(const LinkDiagram& d, std::size_t crossing, int which) {
  if (crossing >= d.crossings.size()) throw ValidationError("no crossing " + std::to_string(crossing));
  if (which != 0 && which != 1) throw ValidationError("smoothing must be 0 or 1");
  return remove_crossings(compact(d), {{crossing, which == 0 ? kJoin01 : kJoin03}});
}

Simplified simplify(const LinkDiagram& d) {
  validate(d);
  return simplify_compact(compact(d));
}

std::vector<int> skein_key(const LinkDiagram& d) {
  const LinkDiagram c = compact(d);
  std::vector<std::vector<int>> codes;
  for (const LinkDiagram& p : split_pieces(c)) codes.push_back(piece_code(compact(p)));
  std::sort(codes.begin(), codes.end());
  std::vector<int> key{c.loops};
  for (const auto& code : codes) {
    key.push_back(static_cast<int>(code.size()));
    key.insert(key.end(), code.begin(), code.end());
  }
  return key;
}

BiLaurent kauffman_delta() {
  return BiLaurent::monomial(1, 1, -1) + BiLaurent::monomial(1, -1, -1) - BiLaurent(1);
}

BiLaurent regular_isotopy_polynomial(const LinkDiagram& d, const KauffmanOptions& options, KauffmanStats* stats) {
  validate(d);
  check_budget(d, options);
  Engine engine(options);
  BiLaurent out = engine.eval(compact(d), 0);
  if (stats) *stats = engine.stats();
  return out;
}

BiLaurent kauffman_F(const LinkDiagram& d, const KauffmanOptions& options, KauffmanStats* stats) {
  const BiLaurent lambda = regular_isotopy_polynomial(d, options, stats);
  const BiLaurent f = lambda.shifted(writhe(d), 0);
  if (link_components(d) == 1 && !f.is_zero() && min_deg_z(f) < 0)
    throw ValidationError("Kauffman polynomial came out with a negative z-exponent; the diagram is inconsistent");
  return f;
}

int tb_upper_bound(const LinkDiagram& d, const KauffmanOptions& options) {
  validate(d);
  if (link_components(d) != 1)
    throw ValidationError("tb bound needs a knot diagram, got " + std::to_string(link_components(d)) + " components");
  return min_deg_a(kauffman_F(d, options)) - 1;
}

}  // namespace knotkit
