#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotkit {

// Front events, read left to right. Positions count strands from the top,
// starting at 1.
//   L k  inserts two strands joined by a left cusp at positions k, k+1
//   R k  joins the strands at k, k+1 with a right cusp
//   X k  crosses the strands at k, k+1; the one descending from k to k+1
//        is in front
enum class EventKind : char { Left = 'L', Right = 'R', Cross = 'X' };

struct Event {
  EventKind kind;
  int k;
  auto operator<=>(const Event&) const = default;
};

inline Event L(int k) { return {EventKind::Left, k}; }
inline Event R(int k) { return {EventKind::Right, k}; }
inline Event X(int k) { return {EventKind::Cross, k}; }

std::string to_string(const Event& e);

struct FrontWord {
  std::vector<Event> events;
  bool operator==(const FrontWord&) const = default;
};

// One event per line, "L k" / "R k" / "X k"; ';' also separates events and
// '#' starts a comment.
FrontWord parse_front(std::string_view text);
std::string format_front(const FrontWord& f);
// Space separated on one line, for messages.
std::string to_string(const FrontWord& f);

struct FrontProblem {
  std::size_t event;  // index of the offending event; events.size() for end-of-word problems
  std::string message;
};

// Structural check; nullopt when the word is a valid front.
std::optional<FrontProblem> validate(const FrontWord& f);
// Throws ValidationError carrying the first problem.
void require_valid(const FrontWord& f);

// Strand count just before event `column` (column = size gives the final count).
int strands_before(const FrontWord& f, std::size_t column);

// Component index of every left cusp, components numbered 0.. in order of
// their first left cusp.
std::vector<int> cusp_components(const FrontWord& f);
int components(const FrontWord& f);

// A front together with the direction of the upper strand leaving each left
// cusp (true = rightward), indexed by left cusp in order of appearance.
struct OrientedFront {
  FrontWord front;
  std::vector<bool> upper_rightward;
  bool operator==(const OrientedFront&) const = default;
};

// Canonical orientation: the first left cusp of every component has its
// upper strand pointing right.
OrientedFront orient(const FrontWord& f);
// True iff every right cusp joins strands of opposite direction.
bool orientation_consistent(const OrientedFront& f);
// Directions (true = rightward) of the strands just before event `column`.
std::vector<bool> strand_directions(const OrientedFront& f, std::size_t column);

int writhe(const OrientedFront& f);
int right_cusps(const FrontWord& f);
// writhe - #right cusps, over the whole diagram.
int thurston_bennequin(const OrientedFront& f);
int thurston_bennequin(const FrontWord& f);
// (down cusps - up cusps) / 2 for each component.
std::vector<int> rotation(const OrientedFront& f);

// Saddle: inserts R k, L k before event `column`. In oriented mode the two
// strands must be anti-parallel; the new left cusp continues the direction
// of strand k.
OrientedFront pinch(const OrientedFront& f, std::size_t column, int k);
FrontWord pinch_unoriented(const FrontWord& f, std::size_t column, int k);

// Legendrian Reidemeister moves and planar slides. `create` reads the
// pattern left to right:
//   R1a  strand at k        <-> L k+1, X k,   R k+1
//   R1b  strand at k        <-> L k,   X k+1, R k
//   R2a  L k+1              <-> L k,   X k+1, X k
//   R2b  L k                <-> L k+1, X k,   X k+1
//   R2c  R k+1              <-> X k,   X k+1, R k
//   R2d  R k                <-> X k+1, X k,   R k+1
//   R3   X k, X k+1, X k    <-> X k+1, X k,   X k+1
// SLIDE swaps events column and column+1 when their supports are disjoint,
// adjusting positions; `create` and `k` are ignored.
enum class MoveKind { R1a, R1b, R2a, R2b, R2c, R2d, R3, Slide };

struct Move {
  MoveKind kind;
  bool create = true;
  std::size_t column = 0;
  int k = 1;
  auto operator<=>(const Move&) const = default;
};

std::string to_string(MoveKind kind);
std::optional<MoveKind> parse_move_kind(std::string_view name);
std::string to_string(const Move& m);

// Throws ValidationError naming the expected and found events when the
// pattern is absent.
FrontWord apply_move(const FrontWord& f, const Move& m);
// Same rewrite; left cusp orientations are carried along.
OrientedFront apply_move(const OrientedFront& f, const Move& m);

// Every move applicable to f (creations and cancellations of all kinds).
std::vector<Move> enumerate_moves(const FrontWord& f);

// Removes component `component` (1-based, ordered by first left cusp),
// which must be a left cusp immediately followed by its right cusp.
OrientedFront death(const OrientedFront& f, int component);

// Legendrian connected sum: f2 spliced into f1's final right cusp.
FrontWord connected_sum(const FrontWord& f1, const FrontWord& f2);

}  // namespace knotkit
