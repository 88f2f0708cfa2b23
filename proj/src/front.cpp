#include "knotkit/front.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "knotkit/errors.hpp"

namespace knotkit {

std::string to_string(const Event& e) { return std::string(1, static_cast<char>(e.kind)) + " " + std::to_string(e.k); }

std::string to_string(const FrontWord& f) {
  std::string out;
  for (const Event& e : f.events) {
    if (!out.empty()) out += ", ";
    out += to_string(e);
  }
  return out.empty() ? "(empty)" : out;
}

FrontWord parse_front(std::string_view text) {
  FrontWord f;
  std::size_t line_no = 0;
  std::string body(text);
  std::replace(body.begin(), body.end(), ';', '\n');
  std::istringstream in{body};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind, pos, extra;
    if (!(ls >> kind)) continue;
    if (!(ls >> pos) || (ls >> extra))
      throw ParseError("front line " + std::to_string(line_no) + ": expected '<L|R|X> <position>'");
    if (kind.size() != 1 || std::string_view("LRX").find(kind[0]) == std::string_view::npos)
      throw ParseError("front line " + std::to_string(line_no) + ": unknown event '" + kind + "'");
    int k = 0;
    auto [ptr, ec] = std::from_chars(pos.data(), pos.data() + pos.size(), k);
    if (ec != std::errc() || ptr != pos.data() + pos.size() || k < 1)
      throw ParseError("front line " + std::to_string(line_no) + ": bad position '" + pos + "'");
    f.events.push_back({static_cast<EventKind>(kind[0]), k});
  }
  return f;
}

std::string format_front(const FrontWord& f) {
  std::string out;
  for (const Event& e : f.events) out += to_string(e) + "\n";
  return out;
}

namespace {

int delta(EventKind kind) { return kind == EventKind::Left ? 2 : kind == EventKind::Right ? -2 : 0; }

// Problem with event i given n strands before it.
std::optional<std::string> event_problem(const Event& e, int n) {
  if (e.k < 1) return "position " + std::to_string(e.k) + " is below 1";
  switch (e.kind) {
    case EventKind::Left:
      if (e.k > n + 1)
        return "left cusp at " + std::to_string(e.k) + " but only " + std::to_string(n) + " strands exist";
      return std::nullopt;
    case EventKind::Right:
    case EventKind::Cross:
      if (e.k + 1 > n)
        return std::string(e.kind == EventKind::Right ? "right cusp" : "crossing") + " needs strands " +
               std::to_string(e.k) + " and " + std::to_string(e.k + 1) + " but only " + std::to_string(n) +
               " exist";
      return std::nullopt;
  }
  return "unknown event kind";
}

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

// A strand segment is named by the left cusp that created it and its side.
struct Seg {
  int cusp;
  int side;  // 0 upper, 1 lower
};

// Runs the front, calling on_right(upper, lower) at each right cusp and
// on_cross(top, bottom) at each crossing.
template <typename OnRight, typename OnCross>
void trace(const FrontWord& f, OnRight&& on_right, OnCross&& on_cross) {
  std::vector<Seg> state;
  int cusp = 0;
  for (const Event& e : f.events) {
    const auto i = static_cast<std::size_t>(e.k - 1);
    switch (e.kind) {
      case EventKind::Left:
        state.insert(state.begin() + static_cast<std::ptrdiff_t>(i), {Seg{cusp, 0}, Seg{cusp, 1}});
        ++cusp;
        break;
      case EventKind::Right:
        on_right(state[i], state[i + 1]);
        state.erase(state.begin() + static_cast<std::ptrdiff_t>(i), state.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        break;
      case EventKind::Cross:
        on_cross(state[i], state[i + 1]);
        std::swap(state[i], state[i + 1]);
        break;
    }
  }
}

int count_left(const FrontWord& f, std::size_t upto) {
  int n = 0;
  for (std::size_t i = 0; i < upto && i < f.events.size(); ++i)
    if (f.events[i].kind == EventKind::Left) ++n;
  return n;
}

}  // namespace

std::optional<FrontProblem> validate(const FrontWord& f) {
  int n = 0;
  for (std::size_t i = 0; i < f.events.size(); ++i) {
    if (auto p = event_problem(f.events[i], n))
      return FrontProblem{i, "event " + std::to_string(i) + " (" + to_string(f.events[i]) + "): " + *p};
    n += delta(f.events[i].kind);
  }
  if (n != 0)
    return FrontProblem{f.events.size(), "front ends with " + std::to_string(n) + " open strands instead of 0"};
  return std::nullopt;
}

void require_valid(const FrontWord& f) {
  if (auto p = validate(f)) throw ValidationError("invalid front: " + p->message);
}

int strands_before(const FrontWord& f, std::size_t column) {
  int n = 0;
  for (std::size_t i = 0; i < column && i < f.events.size(); ++i) n += delta(f.events[i].kind);
  return n;
}

std::vector<int> cusp_components(const FrontWord& f) {
  require_valid(f);
  const int cusps = count_left(f, f.events.size());
  Dsu dsu(static_cast<std::size_t>(cusps));
  trace(f, [&](Seg a, Seg b) { dsu.unite(a.cusp, b.cusp); }, [](Seg, Seg) {});
  std::vector<int> id(static_cast<std::size_t>(cusps), -1);
  std::vector<int> of_root(static_cast<std::size_t>(cusps), -1);
  int next = 0;
  for (int c = 0; c < cusps; ++c) {
    const int r = dsu.find(c);
    if (of_root[r] < 0) of_root[r] = next++;
    id[c] = of_root[r];
  }
  return id;
}

int components(const FrontWord& f) {
  const auto ids = cusp_components(f);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

OrientedFront orient(const FrontWord& f) {
  require_valid(f);
  const int cusps = count_left(f, f.events.size());
  // A right cusp needs opposite directions on its two strands, i.e.
  // flag[a] ^ side_a ^ flag[b] ^ side_b = 1.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(cusps));
  trace(
      f,
      [&](Seg a, Seg b) {
        const int parity = 1 ^ a.side ^ b.side;
        adj[a.cusp].emplace_back(b.cusp, parity);
        adj[b.cusp].emplace_back(a.cusp, parity);
      },
      [](Seg, Seg) {});
  std::vector<int> flag(static_cast<std::size_t>(cusps), -1);
  for (int root = 0; root < cusps; ++root) {
    if (flag[root] >= 0) continue;
    flag[root] = 1;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      const int c = todo.front();
      todo.pop();
      for (auto [d, parity] : adj[c]) {
        const int want = flag[c] ^ parity;
        if (flag[d] < 0) {
          flag[d] = want;
          todo.push(d);
        } else if (flag[d] != want) {
          throw ValidationError("front admits no consistent orientation");
        }
      }
    }
  }
  OrientedFront o{f, {}};
  for (int v : flag) o.upper_rightward.push_back(v == 1);
  return o;
}

namespace {

// Directions of the strands before `column`; also checks right cusps up to
// there when `check` is set.
std::vector<bool> directions(const OrientedFront& f, std::size_t column, bool check, bool* consistent) {
  std::vector<bool> dirs;
  std::size_t cusp = 0;
  if (consistent) *consistent = true;
  for (std::size_t i = 0; i < column && i < f.front.events.size(); ++i) {
    const Event& e = f.front.events[i];
    const auto k = static_cast<std::size_t>(e.k - 1);
    switch (e.kind) {
      case EventKind::Left: {
        if (cusp >= f.upper_rightward.size()) throw ValidationError("orientation lists fewer left cusps than the front");
        const bool up = f.upper_rightward[cusp++];
        dirs.insert(dirs.begin() + static_cast<std::ptrdiff_t>(k), {up, !up});
        break;
      }
      case EventKind::Right:
        if (check && dirs[k] == dirs[k + 1] && consistent) *consistent = false;
        dirs.erase(dirs.begin() + static_cast<std::ptrdiff_t>(k), dirs.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        break;
      case EventKind::Cross: {
        const bool tmp = dirs[k];
        dirs[k] = dirs[k + 1];
        dirs[k + 1] = tmp;
        break;
      }
    }
  }
  return dirs;
}

}  // namespace

bool orientation_consistent(const OrientedFront& f) {
  if (validate(f.front)) return false;
  if (static_cast<int>(f.upper_rightward.size()) != count_left(f.front, f.front.events.size())) return false;
  bool ok = true;
  directions(f, f.front.events.size(), true, &ok);
  return ok;
}

std::vector<bool> strand_directions(const OrientedFront& f, std::size_t column) {
  return directions(f, column, false, nullptr);
}

int writhe(const OrientedFront& f) {
  if (!orientation_consistent(f)) throw ValidationError("writhe needs a consistently oriented front");
  int w = 0;
  std::vector<bool> dirs;
  std::size_t cusp = 0;
  for (const Event& e : f.front.events) {
    const auto k = static_cast<std::size_t>(e.k - 1);
    if (e.kind == EventKind::Left) {
      const bool up = f.upper_rightward[cusp++];
      dirs.insert(dirs.begin() + static_cast<std::ptrdiff_t>(k), {up, !up});
    } else if (e.kind == EventKind::Right) {
      dirs.erase(dirs.begin() + static_cast<std::ptrdiff_t>(k), dirs.begin() + static_cast<std::ptrdiff_t>(k) + 2);
    } else {
      w += dirs[k] == dirs[k + 1] ? 1 : -1;
      const bool tmp = dirs[k];
      dirs[k] = dirs[k + 1];
      dirs[k + 1] = tmp;
    }
  }
  return w;
}

int right_cusps(const FrontWord& f) {
  return static_cast<int>(std::count_if(f.events.begin(), f.events.end(),
                                        [](const Event& e) { return e.kind == EventKind::Right; }));
}

int thurston_bennequin(const OrientedFront& f) { return writhe(f) - right_cusps(f.front); }

int thurston_bennequin(const FrontWord& f) { return thurston_bennequin(orient(f)); }

std::vector<int> rotation(const OrientedFront& f) {
  if (!orientation_consistent(f)) throw ValidationError("rotation needs a consistently oriented front");
  const std::vector<int> comp = cusp_components(f.front);
  const int n = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> down(static_cast<std::size_t>(n), 0), up(static_cast<std::size_t>(n), 0);
  std::vector<bool> dirs;
  std::vector<int> owner;  // component of each strand
  std::size_t cusp = 0;
  for (const Event& e : f.front.events) {
    const auto k = static_cast<std::size_t>(e.k - 1);
    if (e.kind == EventKind::Left) {
      const bool r = f.upper_rightward[cusp];
      const int c = comp[cusp++];
      // Entering along the lower strand and leaving along the upper one
      // moves upward through the cusp.
      (r ? up : down)[c] += 1;
      dirs.insert(dirs.begin() + static_cast<std::ptrdiff_t>(k), {r, !r});
      owner.insert(owner.begin() + static_cast<std::ptrdiff_t>(k), {c, c});
    } else if (e.kind == EventKind::Right) {
      (dirs[k] ? down : up)[owner[k]] += 1;
      dirs.erase(dirs.begin() + static_cast<std::ptrdiff_t>(k), dirs.begin() + static_cast<std::ptrdiff_t>(k) + 2);
      owner.erase(owner.begin() + static_cast<std::ptrdiff_t>(k), owner.begin() + static_cast<std::ptrdiff_t>(k) + 2);
    } else {
      const bool tmp = dirs[k];
      dirs[k] = dirs[k + 1];
      dirs[k + 1] = tmp;
      std::swap(owner[k], owner[k + 1]);
    }
  }
  std::vector<int> rot;
  for (int c = 0; c < n; ++c) rot.push_back((down[c] - up[c]) / 2);
  return rot;
}

namespace {

void check_pinch_site(const FrontWord& f, std::size_t column, int k) {
  if (column > f.events.size())
    throw ValidationError("pinch column " + std::to_string(column) + " is past the end of the front (" +
                          std::to_string(f.events.size()) + " events)");
  const int n = strands_before(f, column);
  if (k < 1 || k + 1 > n)
    throw ValidationError("pinch at column " + std::to_string(column) + " needs strands " + std::to_string(k) +
                          " and " + std::to_string(k + 1) + " but " + std::to_string(n) + " exist");
}

}  // namespace

FrontWord pinch_unoriented(const FrontWord& f, std::size_t column, int k) {
  check_pinch_site(f, column, k);
  FrontWord out = f;
  out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(column), {R(k), L(k)});
  return out;
}

OrientedFront pinch(const OrientedFront& f, std::size_t column, int k) {
  check_pinch_site(f.front, column, k);
  const std::vector<bool> dirs = strand_directions(f, column);
  const auto i = static_cast<std::size_t>(k - 1);
  if (dirs[i] == dirs[i + 1])
    throw ValidationError("pinch at column " + std::to_string(column) + " joins strands " + std::to_string(k) +
                          " and " + std::to_string(k + 1) + ", which are parallel");
  OrientedFront out{pinch_unoriented(f.front, column, k), f.upper_rightward};
  const int ord = count_left(f.front, column);
  out.upper_rightward.insert(out.upper_rightward.begin() + ord, dirs[i]);
  return out;
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1a: return "R1a";
    case MoveKind::R1b: return "R1b";
    case MoveKind::R2a: return "R2a";
    case MoveKind::R2b: return "R2b";
    case MoveKind::R2c: return "R2c";
    case MoveKind::R2d: return "R2d";
    case MoveKind::R3: return "R3";
    case MoveKind::Slide: return "SLIDE";
  }
  return "?";
}

std::optional<MoveKind> parse_move_kind(std::string_view name) {
  for (MoveKind k : {MoveKind::R1a, MoveKind::R1b, MoveKind::R2a, MoveKind::R2b, MoveKind::R2c, MoveKind::R2d,
                     MoveKind::R3, MoveKind::Slide})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string to_string(const Move& m) {
  if (m.kind == MoveKind::Slide) return "SLIDE " + std::to_string(m.column);
  return to_string(m.kind) + " " + (m.create ? "+" : "-") + " " + std::to_string(m.column) + " " + std::to_string(m.k);
}

namespace {

struct Pattern {
  std::vector<Event> small;
  std::vector<Event> big;
};

Pattern pattern(MoveKind kind, int k) {
  switch (kind) {
    case MoveKind::R1a: return {{}, {L(k + 1), X(k), R(k + 1)}};
    case MoveKind::R1b: return {{}, {L(k), X(k + 1), R(k)}};
    case MoveKind::R2a: return {{L(k + 1)}, {L(k), X(k + 1), X(k)}};
    case MoveKind::R2b: return {{L(k)}, {L(k + 1), X(k), X(k + 1)}};
    case MoveKind::R2c: return {{R(k + 1)}, {X(k), X(k + 1), R(k)}};
    case MoveKind::R2d: return {{R(k)}, {X(k + 1), X(k), R(k + 1)}};
    case MoveKind::R3: return {{X(k), X(k + 1), X(k)}, {X(k + 1), X(k), X(k + 1)}};
    case MoveKind::Slide: break;
  }
  throw ValidationError("no pattern for SLIDE");
}

// Strands that must exist before the small side, beyond what its own
// events already force.
int strands_needed(MoveKind kind, int k) {
  switch (kind) {
    case MoveKind::R1a:
    case MoveKind::R1b:
    case MoveKind::R2b: return k;
    case MoveKind::R2d: return k + 2;
    default: return 0;
  }
}

bool matches(const FrontWord& f, std::size_t column, const std::vector<Event>& pat) {
  if (column + pat.size() > f.events.size()) return false;
  return std::equal(pat.begin(), pat.end(), f.events.begin() + static_cast<std::ptrdiff_t>(column));
}

std::string found_at(const FrontWord& f, std::size_t column, std::size_t count) {
  FrontWord piece;
  for (std::size_t i = column; i < column + count && i < f.events.size(); ++i) piece.events.push_back(f.events[i]);
  return to_string(piece);
}

struct Span {
  int lo, hi;
};

// Footprints in doubled coordinates: strand p sits at 2p, the gap above it
// at 2p - 1.
Span input_span(const Event& e) {
  if (e.kind == EventKind::Left) return {2 * e.k - 1, 2 * e.k - 1};
  return {2 * e.k, 2 * e.k + 2};
}

Span output_span(const Event& e) {
  if (e.kind == EventKind::Right) return {2 * e.k - 1, 2 * e.k - 1};
  return {2 * e.k, 2 * e.k + 2};
}

// The swapped pair, or nullopt when the events interact.
std::optional<std::pair<Event, Event>> slid(const Event& e1, const Event& e2) {
  const Span out1 = output_span(e1);
  const Span in2 = input_span(e2);
  if (in2.hi < out1.lo) return std::pair{e2, Event{e1.kind, e1.k + delta(e2.kind)}};
  if (in2.lo > out1.hi) return std::pair{Event{e2.kind, e2.k - delta(e1.kind)}, e1};
  return std::nullopt;
}

OrientedFront rewrite(const OrientedFront& f, const Move& m, bool track) {
  const FrontWord& w = f.front;
  const std::size_t c = m.column;
  OrientedFront out = f;
  auto& ev = out.front.events;
  auto& flags = out.upper_rightward;
  const int ord = count_left(w, c);

  if (m.kind == MoveKind::Slide) {
    if (c + 1 >= w.events.size())
      throw ValidationError("SLIDE " + std::to_string(c) + ": needs events at columns " + std::to_string(c) + " and " +
                            std::to_string(c + 1));
    const auto s = slid(w.events[c], w.events[c + 1]);
    if (!s)
      throw ValidationError("SLIDE " + std::to_string(c) + ": " + to_string(w.events[c]) + " and " +
                            to_string(w.events[c + 1]) + " do not commute");
    ev[c] = s->first;
    ev[c + 1] = s->second;
    if (track && w.events[c].kind == EventKind::Left && w.events[c + 1].kind == EventKind::Left)
      std::swap(flags[ord], flags[ord + 1]);
    return out;
  }

  if (m.k < 1) throw ValidationError(to_string(m) + ": position must be at least 1");
  const Pattern p = pattern(m.kind, m.k);
  const std::vector<Event>& from = m.create ? p.small : p.big;
  const std::vector<Event>& to = m.create ? p.big : p.small;
  if (c > w.events.size()) throw ValidationError(to_string(m) + ": column past the end of the front");
  if (!matches(w, c, from)) {
    std::string expected = from.empty() ? "(nothing)" : to_string(FrontWord{from});
    throw ValidationError(to_string(m) + ": expected " + expected + " at column " + std::to_string(c) + " but found " +
                          found_at(w, c, std::max<std::size_t>(from.size(), 1)));
  }
  if (m.create) {
    const int need = strands_needed(m.kind, m.k);
    const int have = strands_before(w, c);
    if (have < need)
      throw ValidationError(to_string(m) + ": needs " + std::to_string(need) + " strands at column " +
                            std::to_string(c) + " but " + std::to_string(have) + " exist");
  }

  // Orientation of any left cusp the rewrite creates.
  bool new_flag = false;
  if (track && m.create && (m.kind == MoveKind::R1a || m.kind == MoveKind::R1b)) {
    const bool s = strand_directions(f, c)[static_cast<std::size_t>(m.k - 1)];
    new_flag = m.kind == MoveKind::R1a ? s : !s;
  }
  ev.erase(ev.begin() + static_cast<std::ptrdiff_t>(c), ev.begin() + static_cast<std::ptrdiff_t>(c + from.size()));
  ev.insert(ev.begin() + static_cast<std::ptrdiff_t>(c), to.begin(), to.end());
  if (track && (m.kind == MoveKind::R1a || m.kind == MoveKind::R1b)) {
    if (m.create)
      flags.insert(flags.begin() + ord, new_flag);
    else
      flags.erase(flags.begin() + ord);
  }
  if (auto problem = validate(out.front)) throw ValidationError(to_string(m) + ": result is invalid: " + problem->message);
  return out;
}

}  // namespace

FrontWord apply_move(const FrontWord& f, const Move& m) { return rewrite(OrientedFront{f, {}}, m, false).front; }

OrientedFront apply_move(const OrientedFront& f, const Move& m) { return rewrite(f, m, true); }

std::vector<Move> enumerate_moves(const FrontWord& f) {
  std::vector<Move> out;
  const std::size_t size = f.events.size();
  std::vector<int> strands(size + 1, 0);
  for (std::size_t i = 0; i < size; ++i) strands[i + 1] = strands[i] + delta(f.events[i].kind);

  for (std::size_t c = 0; c <= size; ++c) {
    const int n = strands[c];
    for (int k = 1; k <= n; ++k) {
      out.push_back({MoveKind::R1a, true, c, k});
      out.push_back({MoveKind::R1b, true, c, k});
    }
    if (c == size) break;
    const Event& e = f.events[c];
    if (e.kind == EventKind::Left) {
      if (e.k >= 2) out.push_back({MoveKind::R2a, true, c, e.k - 1});
      if (n >= e.k) out.push_back({MoveKind::R2b, true, c, e.k});
    } else if (e.kind == EventKind::Right) {
      if (e.k >= 2) out.push_back({MoveKind::R2c, true, c, e.k - 1});
      if (n >= e.k + 2) out.push_back({MoveKind::R2d, true, c, e.k});
    }
    if (c + 2 < size) {
      for (MoveKind kind : {MoveKind::R1a, MoveKind::R1b, MoveKind::R2a, MoveKind::R2b, MoveKind::R2c, MoveKind::R2d}) {
        // The big side's first event fixes k.
        const bool shifted = kind == MoveKind::R1a || kind == MoveKind::R2b || kind == MoveKind::R2d;
        const int k = e.k - (shifted ? 1 : 0);
        if (k >= 1 && matches(f, c, pattern(kind, k).big)) out.push_back({kind, false, c, k});
      }
      if (matches(f, c, pattern(MoveKind::R3, e.k).small)) out.push_back({MoveKind::R3, true, c, e.k});
      if (e.k >= 2 && matches(f, c, pattern(MoveKind::R3, e.k - 1).big)) out.push_back({MoveKind::R3, false, c, e.k - 1});
    }
    if (c + 1 < size && slid(f.events[c], f.events[c + 1])) out.push_back({MoveKind::Slide, true, c, 1});
  }
  return out;
}

OrientedFront death(const OrientedFront& f, int component) {
  const std::vector<int> comp = cusp_components(f.front);
  const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  if (component < 1 || component > count)
    throw ValidationError("death of component " + std::to_string(component) + " but the front has " +
                          std::to_string(count) + " components");
  std::vector<int> cusps;
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (comp[i] == component - 1) cusps.push_back(static_cast<int>(i));
  if (cusps.size() != 1)
    throw ValidationError("death of component " + std::to_string(component) + ": it has " +
                          std::to_string(cusps.size()) + " left cusps, not a standard unknot");
  std::size_t column = 0;
  for (int seen = -1; column < f.front.events.size(); ++column)
    if (f.front.events[column].kind == EventKind::Left && ++seen == cusps[0]) break;
  const Event& l = f.front.events[column];
  if (column + 1 >= f.front.events.size() || f.front.events[column + 1] != R(l.k))
    throw ValidationError("death of component " + std::to_string(component) + ": its left cusp " + to_string(l) +
                          " at column " + std::to_string(column) + " is followed by " +
                          found_at(f.front, column + 1, 1) + ", not " + to_string(R(l.k)));
  OrientedFront out = f;
  out.front.events.erase(out.front.events.begin() + static_cast<std::ptrdiff_t>(column),
                         out.front.events.begin() + static_cast<std::ptrdiff_t>(column) + 2);
  out.upper_rightward.erase(out.upper_rightward.begin() + cusps[0]);
  return out;
}

FrontWord connected_sum(const FrontWord& f1, const FrontWord& f2) {
  for (const FrontWord* f : {&f1, &f2}) {
    require_valid(*f);
    if (components(*f) != 1) throw ValidationError("connected sum needs single-component fronts");
  }
  // A valid one-component front starts with L 1 and ends with R 1.
  FrontWord out;
  out.events.assign(f1.events.begin(), f1.events.end() - 1);
  out.events.insert(out.events.end(), f2.events.begin() + 1, f2.events.end() - 1);
  out.events.push_back(R(1));
  return out;
}

}  // namespace knotkit
