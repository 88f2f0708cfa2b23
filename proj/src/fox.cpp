#include "knotkit/fox.hpp"

#include <sstream>

#include "knotkit/errors.hpp"

namespace knotkit {

GroupRingElement GroupRingElement::of(const Word& w, Coeff coefficient) {
  GroupRingElement e;
  e.add_term(w, coefficient);
  return e;
}

void GroupRingElement::add_term(const Word& w, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, checked_neg(c));
  return *this;
}

GroupRingElement operator*(const GroupRingElement& lhs, const GroupRingElement& rhs) {
  GroupRingElement out;
  for (const auto& [u, a] : lhs.terms_)
    for (const auto& [v, b] : rhs.terms_) out.add_term(u * v, checked_mul(a, b));
  return out;
}

std::string to_string(const GroupRingElement& e, const Presentation& names) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const Coeff mag = c < 0 ? -c : c;
    if (mag != 1 || w.is_identity()) out += std::to_string(mag);
    if (!w.is_identity()) {
      if (mag != 1) out += '*';
      out += '(' + names.format_word(w) + ')';
    }
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, std::uint32_t generator) {
  GroupRingElement out;
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].generator() != generator) continue;
    if (letters[i].sign() > 0)
      out += GroupRingElement::of(w.prefix(i));
    else
      out -= GroupRingElement::of(w.prefix(i + 1));
  }
  return out;
}

IntLaurent abelianize(const Word& w, const AbelianizationMap& m) {
  long long e = 0;
  for (Letter l : w.letters()) {
    if (l.generator() >= m.weights.size()) throw ValidationError("abelianization map is shorter than the alphabet");
    e += static_cast<long long>(l.sign()) * m.weights[l.generator()];
  }
  return IntLaurent::monomial(1, static_cast<int>(e));
}

IntLaurent abelianize(const GroupRingElement& e, const AbelianizationMap& m) {
  IntLaurent out;
  for (const auto& [w, c] : e.terms()) out += abelianize(w, m) * IntLaurent(c);
  return out;
}

IntLaurent abelianized_fox(const Word& w, std::uint32_t generator, const AbelianizationMap& m) {
  return abelianize(fox_derivative(w, generator), m);
}

IntLaurent fox_identity_residual(const Word& w, std::size_t generator_count, const AbelianizationMap& m) {
  IntLaurent sum;
  for (std::size_t j = 0; j < generator_count; ++j) {
    const auto g = static_cast<std::uint32_t>(j);
    sum += abelianized_fox(w, g, m) * (IntLaurent::monomial(1, m.weights.at(j)) - IntLaurent(1));
  }
  return sum - (abelianize(w, m) - IntLaurent(1));
}

AlexanderMatrix alexander_matrix(const Presentation& p, const AbelianizationMap& m) {
  if (!validate_abelianization(p, m))
    throw ValidationError("map " + format_map(p, m) + " does not kill every relator");
  AlexanderMatrix a;
  a.map = m;
  for (const Word& r : p.relators()) {
    std::vector<IntLaurent> row;
    for (std::size_t j = 0; j < p.generator_count(); ++j)
      row.push_back(abelianized_fox(r, static_cast<std::uint32_t>(j), m));
    a.entries.push_back(std::move(row));
  }
  return a;
}

std::string to_string(const AlexanderMatrix& a) {
  std::ostringstream os;
  for (const auto& row : a.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " | " : "") << to_string(row[j]);
    os << '\n';
  }
  return os.str();
}

IntLaurent laurent_determinant(const std::vector<std::vector<IntLaurent>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntLaurent(1);
  for (const auto& row : m)
    if (row.size() != n) throw ValidationError("determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  IntLaurent det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<IntLaurent>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntLaurent> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const IntLaurent term = m[0][j] * laurent_determinant(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

namespace {

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

IntLaurent alexander_polynomial(const AlexanderMatrix& a) {
  const std::size_t rows = a.entries.size();
  const std::size_t n = a.map.weights.size();
  if (n == 0) throw ValidationError("Alexander polynomial of a presentation with no generators");
  if (rows + 1 < n)
    throw ValidationError("need at least " + std::to_string(n - 1) + " relators, got " + std::to_string(rows));
  const std::size_t k = n - 1;
  if (k == 0) return IntLaurent(1);

  IntLaurent g;
  bool any = false;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& row_set) {
    for (std::size_t skip = 0; skip < n; ++skip) {
      std::vector<std::vector<IntLaurent>> minor;
      for (std::size_t r : row_set) {
        std::vector<IntLaurent> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != skip) row.push_back(a.entries[r][c]);
        minor.push_back(std::move(row));
      }
      const IntLaurent d = laurent_determinant(minor);
      if (d.is_zero()) continue;
      g = any ? laurent_gcd(g, d) : normalize_unit(d);
      any = true;
    }
  });
  return any ? g : IntLaurent();
}

IntLaurent alexander_polynomial(const Presentation& p, const AbelianizationMap& m) {
  return alexander_polynomial(alexander_matrix(p, m));
}

}  // namespace knotkit
