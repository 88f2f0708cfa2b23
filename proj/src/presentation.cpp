#include "knotkit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "knotkit/errors.hpp"

namespace knotkit {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int parse_int(std::string_view s, std::string_view context) {
  if (s.size() > 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("invalid integer '" + std::string(s) + "' in " + std::string(context));
  return v;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  std::set<std::string_view> seen;
  for (const std::string& n : names_) {
    if (!valid_name(n)) throw ValidationError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate generator name '" + n + "'");
  }
  for (std::size_t r = 0; r < relators_.size(); ++r)
    for (Letter l : relators_[r].letters())
      if (l.generator() >= names_.size())
        throw ValidationError("relator " + std::to_string(r + 1) + " uses generator index " +
                              std::to_string(l.generator()) + " but only " + std::to_string(names_.size()) +
                              " generators exist");
}

std::optional<std::uint32_t> Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

Word Presentation::parse_word(std::string_view text) const {
  const auto eq = text.find('=');
  if (eq != std::string_view::npos) {
    if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("more than one '=' in relation");
    return parse_word(text.substr(0, eq)) * parse_word(text.substr(eq + 1)).inverse();
  }
  std::vector<Letter> raw;
  for (std::string_view token : split_ws(text)) {
    if (token == "1") continue;
    const auto caret = token.find('^');
    const std::string_view name = token.substr(0, caret);
    const int power = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), token);
    const auto index = generator_index(name);
    if (!index) throw ParseError("unknown generator '" + std::string(name) + "'");
    const Letter l(*index, power < 0 ? -1 : 1);
    for (int k = 0; k < std::abs(power); ++k) raw.push_back(l);
  }
  return Word(raw);
}

std::string Presentation::format_word(const Word& w) const {
  if (w.is_identity()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += names_.at(l.generator());
    if (l.sign() < 0) out += "^-1";
  }
  return out;
}

AbelianizationMap parse_map(const Presentation& p, std::string_view text) {
  AbelianizationMap m;
  m.weights.assign(p.generator_count(), 0);
  std::vector<bool> assigned(p.generator_count(), false);
  for (std::string_view token : split_ws(text)) {
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) throw ParseError("map entry '" + std::string(token) + "' lacks '='");
    const auto index = p.generator_index(token.substr(0, eq));
    if (!index) throw ParseError("map names unknown generator '" + std::string(token.substr(0, eq)) + "'");
    if (assigned[*index]) throw ParseError("map assigns '" + std::string(token.substr(0, eq)) + "' twice");
    assigned[*index] = true;
    m.weights[*index] = parse_int(token.substr(eq + 1), token);
  }
  for (std::size_t i = 0; i < assigned.size(); ++i)
    if (!assigned[i]) throw ParseError("map omits generator '" + p.generator_names()[i] + "'");
  return m;
}

std::string format_map(const Presentation& p, const AbelianizationMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.weights.size(); ++i) {
    if (i) out += ' ';
    out += p.generator_names().at(i) + "=" + std::to_string(m.weights[i]);
  }
  return out;
}

PresentationFile parse_presentation_file(std::string_view text) {
  std::optional<std::vector<std::string>> gens;
  std::vector<std::pair<std::size_t, std::string>> rel_lines, map_lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'gens:', 'rel:' or 'map:'");
    const std::string_view key = strip(line.substr(0, colon));
    const std::string_view body = strip(line.substr(colon + 1));
    if (key == "gens") {
      if (gens) throw ParseError("line " + std::to_string(line_no) + ": second 'gens:' line");
      gens.emplace();
      for (std::string_view n : split_ws(body)) gens->emplace_back(n);
    } else if (key == "rel") {
      rel_lines.emplace_back(line_no, std::string(body));
    } else if (key == "map") {
      map_lines.emplace_back(line_no, std::string(body));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!gens) throw ParseError("presentation has no 'gens:' line");

  Presentation names_only(*gens, {});
  std::vector<Word> relators;
  for (const auto& [no, body] : rel_lines) {
    try {
      relators.push_back(names_only.parse_word(body));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  PresentationFile file{Presentation(*gens, std::move(relators)), {}};
  for (const auto& [no, body] : map_lines) {
    try {
      file.maps.push_back(parse_map(file.presentation, body));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return file;
}

std::string format_presentation_file(const PresentationFile& file) {
  const Presentation& p = file.presentation;
  std::ostringstream os;
  os << "gens:";
  for (const auto& n : p.generator_names()) os << ' ' << n;
  os << '\n';
  for (const Word& r : p.relators()) os << "rel: " << p.format_word(r) << '\n';
  for (const auto& m : file.maps) os << "map: " << format_map(p, m) << '\n';
  return os.str();
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (Letter l : p.relators()[i].letters()) m(i, l.generator()) += l.sign();
  return m;
}

std::string to_string(const AbelianGroup& g) {
  std::string out;
  if (g.free_rank > 0) out = g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
  for (Coeff t : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

AbelianGroup h1(const Presentation& p) {
  const SmithForm snf = smith_normal_form(exponent_matrix(p));
  AbelianGroup g;
  g.free_rank = p.generator_count() - snf.rank();
  for (Coeff d : snf.invariant_factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

bool validate_abelianization(const Presentation& p, const AbelianizationMap& m) {
  if (m.weights.size() != p.generator_count())
    throw ValidationError("abelianization map has " + std::to_string(m.weights.size()) + " weights for " +
                          std::to_string(p.generator_count()) + " generators");
  for (const Word& r : p.relators()) {
    long long sum = 0;
    for (Letter l : r.letters()) sum += static_cast<long long>(l.sign()) * m.weights[l.generator()];
    if (sum != 0) return false;
  }
  return true;
}

AbelianizationMap z_surjection(const Presentation& p) {
  const IntMatrix em = exponent_matrix(p);
  const SmithForm snf = smith_normal_form(em);
  const std::size_t free_rank = p.generator_count() - snf.rank();
  if (free_rank != 1)
    throw ValidationError("z_surjection needs H1 of free rank 1, got free rank " + std::to_string(free_rank));
  // M V = U^-1 D, and column `rank` of D is zero, so that column of V spans
  // the kernel of M; it is primitive because V is unimodular.
  AbelianizationMap m;
  const std::size_t col = snf.rank();
  for (std::size_t i = 0; i < p.generator_count(); ++i) m.weights.push_back(static_cast<int>(snf.right(i, col)));
  const auto first = std::find_if(m.weights.begin(), m.weights.end(), [](int w) { return w != 0; });
  if (first != m.weights.end() && *first < 0)
    for (int& w : m.weights) w = -w;
  return m;
}

}  // namespace knotkit
