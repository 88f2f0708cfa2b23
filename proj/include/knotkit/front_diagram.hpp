#pragma once

#include "knotkit/front.hpp"
#include "knotkit/kauffman.hpp"

namespace knotkit {

// The knot diagram of a front, drawn with x to the right and z up: the
// descending strand at each crossing is over, cusps are smoothed out.
// Labels are 1..E; crossingless components become loops.
LinkDiagram front_to_pd(const FrontWord& f);

}  // namespace knotkit
