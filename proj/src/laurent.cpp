#include "knotkit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace knotkit {

// ---------------------------------------------------------------------------
// IntLaurent

IntLaurent::IntLaurent(Coeff constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

IntLaurent IntLaurent::monomial(Coeff coefficient, int exponent) {
  IntLaurent p;
  p.add_term(exponent, coefficient);
  return p;
}

IntLaurent IntLaurent::from_terms(const Terms& terms) {
  IntLaurent p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

void IntLaurent::add_term(int exponent, Coeff coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

Coeff IntLaurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int IntLaurent::min_exponent() const {
  if (is_zero()) throw ValidationError("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

int IntLaurent::max_exponent() const {
  if (is_zero()) throw ValidationError("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

IntLaurent IntLaurent::shifted(int k) const {
  IntLaurent r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

Coeff IntLaurent::content() const {
  Coeff g = 0;
  for (auto [e, c] : terms_) g = gcd_abs(g, c);
  return g;
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked_neg(c));
  return r;
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& other) {
  for (auto [e, c] : other.terms_) add_term(e, c);
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& other) {
  for (auto [e, c] : other.terms_) add_term(e, checked_neg(c));
  return *this;
}

IntLaurent& IntLaurent::operator*=(const IntLaurent& other) {
  *this = *this * other;
  return *this;
}

IntLaurent operator*(const IntLaurent& lhs, const IntLaurent& rhs) {
  IntLaurent r;
  for (auto [e1, c1] : lhs.terms_)
    for (auto [e2, c2] : rhs.terms_) r.add_term(e1 + e2, checked_mul(c1, c2));
  return r;
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers (coefficients low -> high, no trailing zeros).

namespace {

using Dense = std::vector<Coeff>;

// p = t^shift * dense(p), with dense(p)[0] != 0.
Dense to_dense(const IntLaurent& p, int& shift) {
  shift = p.min_exponent();
  Dense d(static_cast<std::size_t>(p.max_exponent() - shift + 1), 0);
  for (auto [e, c] : p.terms()) d[static_cast<std::size_t>(e - shift)] = c;
  return d;
}

IntLaurent from_dense(const Dense& d, int shift) {
  IntLaurent::Terms terms;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) terms.emplace(static_cast<int>(i) + shift, d[i]);
  return IntLaurent::from_terms(terms);
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Coeff dense_content(const Dense& d) {
  Coeff g = 0;
  for (Coeff c : d) g = gcd_abs(g, c);
  return g;
}

void make_primitive(Dense& d) {
  Coeff g = dense_content(d);
  if (g > 1)
    for (Coeff& c : d) c /= g;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Coeff lead = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t da = a.size() - 1;
    const Coeff top = a.back();
    for (Coeff& c : a) c = checked_mul(c, lead);
    for (std::size_t i = 0; i <= db; ++i) {
      Coeff& slot = a[da - db + i];
      slot = checked_sub(slot, checked_mul(top, b[i]));
    }
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

IntLaurent normalize_unit(const IntLaurent& p) {
  if (p.is_zero()) throw ValidationError("normalize_unit: zero polynomial has no canonical unit form");
  IntLaurent r = p.shifted(-p.min_exponent());
  if (r.coefficient(0) < 0) r = -r;
  return r;
}

IntLaurent substitute_inverse(const IntLaurent& p) {
  IntLaurent::Terms terms;
  for (auto [e, c] : p.terms()) terms.emplace(-e, c);
  return IntLaurent::from_terms(terms);
}

bool unit_equivalent(const IntLaurent& p, const IntLaurent& q, bool allow_inversion) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const IntLaurent nq = normalize_unit(q);
  if (normalize_unit(p) == nq) return true;
  return allow_inversion && normalize_unit(substitute_inverse(p)) == nq;
}

IntLaurent laurent_gcd(const IntLaurent& p, const IntLaurent& q) {
  if (p.is_zero() && q.is_zero()) throw ValidationError("laurent_gcd: both arguments are zero");
  if (p.is_zero()) return normalize_unit(q);
  if (q.is_zero()) return normalize_unit(p);

  const Coeff content = std::gcd(p.content(), q.content());
  int shift = 0;
  Dense a = to_dense(p, shift);
  Dense b = to_dense(q, shift);
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  for (Coeff& c : a) c = checked_mul(c, content);
  return normalize_unit(from_dense(a, 0));
}

std::optional<IntLaurent> exact_quotient(const IntLaurent& p, const IntLaurent& q) {
  if (q.is_zero()) throw ValidationError("exact_quotient: division by zero");
  if (p.is_zero()) return IntLaurent{};
  int sp = 0;
  int sq = 0;
  Dense num = to_dense(p, sp);
  const Dense den = to_dense(q, sq);
  if (num.size() < den.size()) return std::nullopt;
  Dense quot(num.size() - den.size() + 1, 0);
  const Coeff lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Coeff top = num[i + den.size() - 1];
    if (top % lead != 0) return std::nullopt;
    const Coeff c = top / lead;
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] = checked_sub(num[i + j], checked_mul(c, den[j]));
  }
  if (std::any_of(num.begin(), num.end(), [](Coeff c) { return c != 0; })) return std::nullopt;
  return from_dense(quot, sp - sq);
}

// ---------------------------------------------------------------------------
// BiLaurent

BiLaurent::BiLaurent(Coeff constant) {
  if (constant != 0) terms_.emplace(AZ{0, 0}, constant);
}

BiLaurent BiLaurent::monomial(Coeff coefficient, int a_exponent, int z_exponent) {
  BiLaurent f;
  f.add_term({a_exponent, z_exponent}, coefficient);
  return f;
}

BiLaurent BiLaurent::from_terms(const Terms& terms) {
  BiLaurent f;
  for (auto [e, c] : terms) f.add_term(e, c);
  return f;
}

void BiLaurent::add_term(AZ exponent, Coeff coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

Coeff BiLaurent::coefficient(int a_exponent, int z_exponent) const {
  auto it = terms_.find(AZ{a_exponent, z_exponent});
  return it == terms_.end() ? 0 : it->second;
}

BiLaurent BiLaurent::shifted(int da, int dz) const {
  BiLaurent r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), AZ{e.a + da, e.z + dz}, c);
  return r;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked_neg(c));
  return r;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& other) {
  for (auto [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& other) {
  for (auto [e, c] : other.terms_) add_term(e, checked_neg(c));
  return *this;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& other) {
  *this = *this * other;
  return *this;
}

BiLaurent operator*(const BiLaurent& lhs, const BiLaurent& rhs) {
  BiLaurent r;
  for (auto [e1, c1] : lhs.terms_)
    for (auto [e2, c2] : rhs.terms_) r.add_term({e1.a + e2.a, e1.z + e2.z}, checked_mul(c1, c2));
  return r;
}

BiLaurent a_mirror(const BiLaurent& f) {
  BiLaurent::Terms terms;
  for (auto [e, c] : f.terms()) terms.emplace(AZ{-e.a, e.z}, c);
  return BiLaurent::from_terms(terms);
}

int min_deg_a(const BiLaurent& f) {
  if (f.is_zero()) throw ValidationError("min_deg_a of the zero polynomial");
  return f.terms().begin()->first.a;
}

int max_deg_a(const BiLaurent& f) {
  if (f.is_zero()) throw ValidationError("max_deg_a of the zero polynomial");
  return f.terms().rbegin()->first.a;
}

int min_deg_z(const BiLaurent& f) {
  if (f.is_zero()) throw ValidationError("min_deg_z of the zero polynomial");
  int lowest = f.terms().begin()->first.z;
  for (const auto& [e, c] : f.terms()) lowest = std::min(lowest, e.z);
  return lowest;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

void append_power(std::string& out, std::string_view var, int exponent) {
  if (exponent == 0) return;
  if (!out.empty() && out.back() != ' ' && out.back() != '-') out += '*';
  out += var;
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
}

// One signed term; `first` controls whether the sign is spaced.
void append_term(std::string& out, Coeff c, std::string_view body, bool first) {
  const bool negative = c < 0;
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  const std::string magnitude = negative ? std::to_string(c).substr(1) : std::to_string(c);
  if (body.empty()) {
    out += magnitude;
    return;
  }
  if (magnitude != "1") {
    out += magnitude;
    out += '*';
  }
  out += body;
}

struct ParsedTerm {
  Coeff coefficient = 1;
  std::vector<int> exponents;
};

class TermParser {
 public:
  TermParser(std::string_view text, std::vector<std::string_view> vars) : vars_(std::move(vars)) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
  }

  std::vector<ParsedTerm> parse() {
    if (text_.empty()) fail("empty polynomial");
    std::vector<ParsedTerm> out;
    bool first = true;
    while (pos_ < text_.size()) {
      Coeff sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out.push_back(parse_term(sign));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  Coeff parse_unsigned() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    Coeff v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  int parse_exponent() {
    const bool paren = peek() == '(';
    if (paren) ++pos_;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    const Coeff v = parse_unsigned();
    if (v > 1'000'000) fail("exponent out of range");
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return sign * static_cast<int>(v);
  }

  int match_var() const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (std::string_view(text_).substr(pos_).starts_with(vars_[i])) return static_cast<int>(i);
    return -1;
  }

  ParsedTerm parse_term(Coeff sign) {
    ParsedTerm term;
    term.exponents.assign(vars_.size(), 0);
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coefficient = parse_unsigned();
      have_coefficient = true;
      if (peek() == '*') {
        ++pos_;
        if (match_var() < 0) fail("expected a variable after '*'");
      }
    }
    bool have_factor = false;
    while (true) {
      const int v = match_var();
      if (v < 0) break;
      pos_ += vars_[static_cast<std::size_t>(v)].size();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_exponent();
      }
      term.exponents[static_cast<std::size_t>(v)] += e;
      have_factor = true;
      if (peek() == '*') {
        ++pos_;
        if (match_var() < 0) fail("expected a variable after '*'");
      }
    }
    if (!have_coefficient && !have_factor) fail("expected a term");
    term.coefficient = checked_mul(term.coefficient, sign);
    return term;
  }

  std::string text_;
  std::vector<std::string_view> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const IntLaurent& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string body;
    append_power(body, variable, it->first);
    append_term(out, it->second, body, first);
    first = false;
  }
  return out;
}

IntLaurent parse_int_laurent(std::string_view text, std::string_view variable) {
  IntLaurent p;
  for (const ParsedTerm& t : TermParser(text, {variable}).parse())
    p += IntLaurent::monomial(t.coefficient, t.exponents[0]);
  return p;
}

std::string to_string(const BiLaurent& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<AZ, Coeff>> order(f.terms().begin(), f.terms().end());
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first.z != y.first.z) return x.first.z > y.first.z;
    return x.first.a > y.first.a;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : order) {
    std::string body;
    append_power(body, "a", e.a);
    append_power(body, "z", e.z);
    append_term(out, c, body, first);
    first = false;
  }
  return out;
}

BiLaurent parse_bi_laurent(std::string_view text) {
  BiLaurent f;
  for (const ParsedTerm& t : TermParser(text, {"a", "z"}).parse())
    f += BiLaurent::monomial(t.coefficient, t.exponents[0], t.exponents[1]);
  return f;
}

}  // namespace knotkit
