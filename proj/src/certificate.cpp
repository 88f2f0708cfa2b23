#include "knotkit/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "knotkit/errors.hpp"

namespace knotkit {

std::string to_string(const Step& s) {
  if (const auto* m = std::get_if<Move>(&s)) return "MOVE " + to_string(*m);
  if (const auto* p = std::get_if<PinchStep>(&s)) return "PINCH " + std::to_string(p->column) + " " + std::to_string(p->k);
  return "DEATH " + std::to_string(std::get<DeathStep>(s).component);
}

namespace {

template <typename T>
T number(const std::string& token, std::size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("certificate line " + std::to_string(line_no) + ": bad number '" + token + "'");
  return v;
}

}  // namespace

FillingCertificate parse_certificate(std::string_view text) {
  FillingCertificate c;
  std::string body(text);
  std::replace(body.begin(), body.end(), ';', '\n');
  std::istringstream in{body};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto arity = [&](std::size_t n) {
      if (tok.size() != n)
        throw ParseError("certificate line " + std::to_string(line_no) + ": '" + tok[0] + "' takes " +
                         std::to_string(n - 1) + " arguments");
    };
    if (tok[0] == "MOVE") {
      if (tok.size() < 2) throw ParseError("certificate line " + std::to_string(line_no) + ": MOVE needs a kind");
      const auto kind = parse_move_kind(tok[1]);
      if (!kind) throw ParseError("certificate line " + std::to_string(line_no) + ": unknown move '" + tok[1] + "'");
      if (*kind == MoveKind::Slide) {
        arity(3);
        c.steps.emplace_back(Move{MoveKind::Slide, true, number<std::size_t>(tok[2], line_no), 1});
      } else {
        arity(5);
        if (tok[2] != "+" && tok[2] != "-")
          throw ParseError("certificate line " + std::to_string(line_no) + ": direction must be + or -");
        c.steps.emplace_back(
            Move{*kind, tok[2] == "+", number<std::size_t>(tok[3], line_no), number<int>(tok[4], line_no)});
      }
    } else if (tok[0] == "PINCH") {
      arity(3);
      c.steps.emplace_back(PinchStep{number<std::size_t>(tok[1], line_no), number<int>(tok[2], line_no)});
    } else if (tok[0] == "DEATH") {
      arity(2);
      c.steps.emplace_back(DeathStep{number<int>(tok[1], line_no)});
    } else if (tok[0] == "SURFACE") {
      arity(3);
      c.declared_surface = std::pair{number<int>(tok[1], line_no), number<int>(tok[2], line_no)};
    } else {
      throw ParseError("certificate line " + std::to_string(line_no) + ": unknown step '" + tok[0] + "'");
    }
  }
  return c;
}

std::string format_certificate(const FillingCertificate& c) {
  std::string out;
  if (c.declared_surface)
    out += "SURFACE " + std::to_string(c.declared_surface->first) + " " + std::to_string(c.declared_surface->second) +
           "\n";
  for (const Step& s : c.steps) out += to_string(s) + "\n";
  return out;
}

void apply_step(OrientedFront& f, const Step& s, bool oriented) {
  if (const auto* m = std::get_if<Move>(&s)) {
    f = apply_move(f, *m);
  } else if (const auto* p = std::get_if<PinchStep>(&s)) {
    if (oriented) {
      f = pinch(f, p->column, p->k);
    } else {
      // Without orientations the new cusp's flag is arbitrary.
      const FrontWord w = pinch_unoriented(f.front, p->column, p->k);
      int before = 0;
      for (std::size_t i = 0; i < p->column; ++i)
        if (f.front.events[i].kind == EventKind::Left) ++before;
      f.front = w;
      f.upper_rightward.insert(f.upper_rightward.begin() + before, true);
    }
  } else {
    f = death(f, std::get<DeathStep>(s).component);
  }
}

FillingReport check_certificate(const FrontWord& f, const FillingCertificate& c, CheckOptions options) {
  FillingReport report;
  require_valid(f);
  if (components(f) != 1) throw ValidationError("check_certificate needs a knot, got " + std::to_string(components(f)) + " components");
  OrientedFront cur = orient(f);
  report.tb = thurston_bennequin(cur);
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    try {
      apply_step(cur, c.steps[i], options.oriented);
    } catch (const Error& e) {
      report.failed_step = i;
      report.message = "step " + std::to_string(i) + " (" + to_string(c.steps[i]) + "): " + e.what();
      return report;
    }
    if (std::holds_alternative<PinchStep>(c.steps[i])) ++report.pinches;
    if (std::holds_alternative<DeathStep>(c.steps[i])) ++report.deaths;
  }
  report.euler = report.deaths - report.pinches;
  report.tb_consistent = *report.tb == -report.euler;
  if (report.euler <= 1 && (1 - report.euler) % 2 == 0) report.genus = (1 - report.euler) / 2;
  if (!cur.front.events.empty()) {
    report.message = "non-empty final word after all steps: " + to_string(cur.front) + " (" +
                     std::to_string(components(cur.front)) + " components left)";
    return report;
  }
  if (c.declared_surface && (c.declared_surface->first != report.pinches || c.declared_surface->second != report.deaths)) {
    report.message = "declared surface has " + std::to_string(c.declared_surface->first) + " pinches and " +
                     std::to_string(c.declared_surface->second) + " deaths, replay found " +
                     std::to_string(report.pinches) + " and " + std::to_string(report.deaths);
    return report;
  }
  if (!report.tb_consistent) {
    report.message = "tb = " + std::to_string(*report.tb) + " but the filling has euler characteristic " +
                     std::to_string(report.euler) + "; tb + euler must vanish";
    return report;
  }
  report.accepted = true;
  report.message = "ok";
  return report;
}

FillingCertificate compose_certificates(const FrontWord& f1, const FillingCertificate& c1, const FrontWord& f2,
                                        const FillingCertificate& c2) {
  connected_sum(f1, f2);  // rejects anything but two knots
  const std::size_t cut = f1.events.size() - 1;
  FillingCertificate out;
  // After this pinch the word reads f1 followed by f2, side by side.
  out.steps.emplace_back(PinchStep{cut, 1});
  const std::size_t offset = f1.events.size();
  int pinches = 1, deaths = 0;
  for (const Step& s : c2.steps) {
    if (const auto* m = std::get_if<Move>(&s)) {
      Move moved = *m;
      moved.column += offset;
      out.steps.emplace_back(moved);
    } else if (const auto* p = std::get_if<PinchStep>(&s)) {
      out.steps.emplace_back(PinchStep{p->column + offset, p->k});
      ++pinches;
    } else {
      // The f1 block is one component and its left cusps come first.
      out.steps.emplace_back(DeathStep{std::get<DeathStep>(s).component + 1});
      ++deaths;
    }
  }
  for (const Step& s : c1.steps) {
    out.steps.push_back(s);
    if (std::holds_alternative<PinchStep>(s)) ++pinches;
    if (std::holds_alternative<DeathStep>(s)) ++deaths;
  }
  out.declared_surface = std::pair{pinches, deaths};
  return out;
}

FrontWord iterated_sum(const FrontWord& f, int n) {
  if (n < 1) throw ValidationError("iterated connected sum needs n >= 1");
  FrontWord out = f;
  for (int i = 1; i < n; ++i) out = connected_sum(out, f);
  return out;
}

std::vector<FamilyMember> certificate_family(const FrontWord& f, const std::vector<FillingCertificate>& certs, int n) {
  if (n < 1) throw ValidationError("certificate family needs n >= 1");
  if (certs.empty()) throw ValidationError("certificate family needs at least one certificate");
  std::vector<FamilyMember> level;
  for (std::size_t j = 0; j < certs.size(); ++j) level.push_back({{static_cast<int>(j)}, certs[j]});
  FrontWord sum = f;
  for (int m = 1; m < n; ++m) {
    std::vector<FamilyMember> next;
    for (const FamilyMember& member : level)
      for (std::size_t j = 0; j < certs.size(); ++j) {
        FamilyMember grown{member.choice, compose_certificates(sum, member.certificate, f, certs[j])};
        grown.choice.push_back(static_cast<int>(j));
        next.push_back(std::move(grown));
      }
    level = std::move(next);
    sum = connected_sum(sum, f);
  }
  return level;
}

}  // namespace knotkit
