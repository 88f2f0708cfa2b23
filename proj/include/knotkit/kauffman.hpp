#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotkit/laurent.hpp"

namespace knotkit {

// Unoriented link diagram as a PD code. Crossing X(a,b,c,d) lists its four
// edge labels counterclockwise: a and c lie on the under strand, b and d on
// the over strand. Crossingless components are counted in `loops`.
struct LinkDiagram {
  std::vector<std::array<int, 4>> crossings;
  int loops = 0;
  bool operator==(const LinkDiagram&) const = default;
};

// "X(a,b,c,d)" tokens, one or more per line, and "O(e)" for each
// crossingless loop. '#' starts a comment. Throws ParseError on malformed
// tokens and ValidationError on inconsistent labels or a non-planar code.
LinkDiagram parse_pd(std::string_view text);
std::string format_pd(const LinkDiagram& d);

// Every label used exactly twice, and the code describes a planar diagram.
void validate(const LinkDiagram& d);

std::size_t crossing_count(const LinkDiagram& d);
int link_components(const LinkDiagram& d);
// Writhe with each component oriented so that its lowest-numbered crossing
// is first entered through slot 0 (the PD convention for oriented codes).
int writhe(const LinkDiagram& d);

LinkDiagram mirror(const LinkDiagram& d);
// Relabels the crossing so the other strand is under.
LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t crossing);
// The two smoothings of a crossing: which = 0 joins slots (0,1) and (2,3),
// which = 1 joins (0,3) and (1,2).
LinkDiagram smooth(const LinkDiagram& d, std::size_t crossing, int which);

struct Simplified {
  LinkDiagram diagram;
  BiLaurent factor;  // a^k collected from removed kinks
};

// Removes kinks and reducing Reidemeister II bigons until none are left.
Simplified simplify(const LinkDiagram& d);

// Relabel-invariant code of a diagram (components in any order).
std::vector<int> skein_key(const LinkDiagram& d);

struct KauffmanOptions {
  std::size_t max_crossings = 16;
  // Worker threads for the top levels of the recursion; 1 = serial.
  unsigned threads = 1;
};

struct KauffmanStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
};

// The regular isotopy invariant: 1 on the unknot, a per positive kink,
// delta = (a + 1/a - z)/z per extra split component, and
// L(D+) + L(D-) = z (L(D0) + L(Dinf)). A positive kink here is a curl of
// writhe -1, so that the right-handed trefoil has min deg_a F = 2 and
// tb <= min deg_a F - 1 holds for Legendrian fronts.
BiLaurent regular_isotopy_polynomial(const LinkDiagram& d, const KauffmanOptions& options = {},
                                     KauffmanStats* stats = nullptr);
// a^writhe times the above. For a knot, throws ValidationError if a
// z-exponent ends up negative (links legitimately reach z^(1-components)).
BiLaurent kauffman_F(const LinkDiagram& d, const KauffmanOptions& options = {}, KauffmanStats* stats = nullptr);
// min_deg_a(F) - 1. Knots only.
int tb_upper_bound(const LinkDiagram& d, const KauffmanOptions& options = {});

// (a + a^-1 - z) z^-1
BiLaurent kauffman_delta();

}  // namespace knotkit
