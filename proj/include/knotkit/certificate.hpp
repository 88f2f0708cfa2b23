#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotkit/front.hpp"

namespace knotkit {

struct PinchStep {
  std::size_t column;
  int k;
  auto operator<=>(const PinchStep&) const = default;
};

struct DeathStep {
  int component;  // 1-based, ordered by first left cusp
  auto operator<=>(const DeathStep&) const = default;
};

using Step = std::variant<Move, PinchStep, DeathStep>;

std::string to_string(const Step& s);

struct FillingCertificate {
  std::vector<Step> steps;
  // Expected (pinches, deaths), when declared.
  std::optional<std::pair<int, int>> declared_surface;
};

// Lines:
//   MOVE <R1a|R1b|R2a|R2b|R2c|R2d|R3> <+|-> <column> <k>
//   MOVE SLIDE <column>
//   PINCH <column> <k>
//   DEATH <component>
//   SURFACE <pinches> <deaths>
// Columns are 0-based event indices; ';' also separates steps and '#'
// starts a comment.
FillingCertificate parse_certificate(std::string_view text);
std::string format_certificate(const FillingCertificate& c);

struct FillingReport {
  bool accepted = false;
  int pinches = 0;
  int deaths = 0;
  int euler = 0;  // deaths - pinches
  std::optional<int> genus;  // (1 - euler) / 2 for a connected orientable filling
  std::optional<int> tb;     // of the starting knot
  bool tb_consistent = false;  // tb == -euler
  std::optional<std::size_t> failed_step;  // 0-based
  std::string message;
};

struct CheckOptions {
  // Oriented pinches must join anti-parallel strands.
  bool oriented = true;
};

// Replays the certificate from the canonically oriented front. The report
// is accepted iff every step applies, the final front is empty, the
// declared surface (if any) matches, and tb == -euler.
FillingReport check_certificate(const FrontWord& f, const FillingCertificate& c, CheckOptions options = {});

// Applies one step, in place. Pinches and deaths are tallied by the caller.
void apply_step(OrientedFront& f, const Step& s, bool oriented = true);

// Certificate for connected_sum(f1, f2) built from certificates of f1 and
// f2: pinch the sum back into f1 and f2 side by side, fill f2 with c2, then
// f1 with c1.
FillingCertificate compose_certificates(const FrontWord& f1, const FillingCertificate& c1, const FrontWord& f2,
                                        const FillingCertificate& c2);

struct FamilyMember {
  std::vector<int> choice;  // index into the certificate list for each summand
  FillingCertificate certificate;
};

// The n-fold connected sum of f with itself, and one certificate for every
// sequence of choices from `certs` (certs.size()^n of them).
FrontWord iterated_sum(const FrontWord& f, int n);
std::vector<FamilyMember> certificate_family(const FrontWord& f, const std::vector<FillingCertificate>& certs, int n);

}  // namespace knotkit
