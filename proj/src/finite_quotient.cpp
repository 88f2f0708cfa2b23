#include "knotkit/finite_quotient.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>
#include <thread>

#include "knotkit/errors.hpp"

namespace knotkit {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint8_t i : images_) {
    if (i >= images_.size() || seen[i]) throw ValidationError("image list is not a permutation");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n > 255) throw ValidationError("permutation degree above 255");
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t n) {
  Permutation p = identity(n);
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip();
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw ParseError("expected a symbol in cycle notation");
      const std::size_t s = std::stoul(std::string(text.substr(i, j - i)));
      if (s < 1 || s > n) throw ParseError("symbol " + std::to_string(s) + " outside 1.." + std::to_string(n));
      if (used[s - 1]) throw ParseError("symbol " + std::to_string(s) + " repeated in cycle notation");
      used[s - 1] = true;
      cycle.push_back(s - 1);
      i = j;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images_[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    skip();
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw ValidationError("composing permutations of different degree");
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (std::size_t s = 0; s < p.degree(); ++s) {
    if (done[s] || p(s) == s) continue;
    out += '(';
    for (std::size_t k = s; !done[k]; k = p(k)) {
      done[k] = true;
      if (k != s) out += ' ';
      out += std::to_string(k + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

std::size_t common_degree(const FiniteAssignment& a) {
  if (a.images.empty()) return 0;
  const std::size_t n = a.images.front().degree();
  for (const Permutation& p : a.images)
    if (p.degree() != n) throw ValidationError("assignment permutations act on different symbol counts");
  return n;
}

}  // namespace

Permutation evaluate(const Word& w, const FiniteAssignment& a) {
  const std::size_t n = common_degree(a);
  Permutation r = Permutation::identity(n);
  for (Letter l : w.letters()) {
    if (l.generator() >= a.images.size()) throw ValidationError("word uses a generator with no assigned image");
    const Permutation& g = a.images[l.generator()];
    r = r * (l.sign() > 0 ? g : g.inverse());
  }
  return r;
}

bool check_finite_hom(const Presentation& p, const FiniteAssignment& a) {
  if (a.images.size() != p.generator_count())
    throw ValidationError("assignment has " + std::to_string(a.images.size()) + " images for " +
                          std::to_string(p.generator_count()) + " generators");
  common_degree(a);
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return evaluate(r, a).is_identity(); });
}

bool is_image_abelian(const FiniteAssignment& a) {
  common_degree(a);
  for (std::size_t i = 0; i < a.images.size(); ++i)
    for (std::size_t j = i + 1; j < a.images.size(); ++j)
      if (a.images[i] * a.images[j] != a.images[j] * a.images[i]) return false;
  return true;
}

namespace {

struct Enumerator {
  const Presentation& pres;
  std::size_t n;
  std::vector<Permutation> perms;
  std::vector<Permutation> inverses;

  // Relators as flat (generator, sign) lists for the inner loop.
  std::vector<std::vector<Letter>> relators;

  bool satisfies(const std::vector<std::size_t>& choice) const {
    for (const auto& r : relators)
      for (std::size_t s = 0; s < n; ++s) {
        std::size_t x = s;
        for (Letter l : r) {
          const std::size_t idx = choice[l.generator()];
          x = l.sign() > 0 ? perms[idx](x) : inverses[idx](x);
        }
        if (x != s) return false;
      }
    return true;
  }

  bool commute(const std::vector<std::size_t>& choice) const {
    for (std::size_t i = 0; i < choice.size(); ++i)
      for (std::size_t j = i + 1; j < choice.size(); ++j) {
        const Permutation& p = perms[choice[i]];
        const Permutation& q = perms[choice[j]];
        for (std::size_t s = 0; s < n; ++s)
          if (q(p(s)) != p(q(s))) return false;
      }
    return true;
  }
};

struct Partial {
  std::uint64_t count = 0;
  std::uint64_t non_abelian = 0;
  std::optional<std::vector<std::size_t>> witness;
};

}  // namespace

HomCount count_homs(const Presentation& p, std::size_t n, std::uint64_t budget, unsigned threads) {
  if (n < 1) throw ValidationError("count_homs needs at least one symbol");
  if (n > 12) throw ValidationError("count_homs supports at most 12 symbols");
  const std::size_t g = p.generator_count();

  std::uint64_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= k;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < g; ++k) {
    if (total > budget / fact) {
      throw BudgetExceeded("count_homs needs " + std::to_string(n) + "!^" + std::to_string(g) +
                           " assignments, above the budget of " + std::to_string(budget));
    }
    total *= fact;
  }
  if (total > budget)
    throw BudgetExceeded("count_homs needs " + std::to_string(total) + " assignments, above the budget of " +
                         std::to_string(budget));

  Enumerator e{p, n, {}, {}, {}};
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  do {
    e.perms.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  for (const Permutation& q : e.perms) e.inverses.push_back(q.inverse());
  for (const Word& r : p.relators()) e.relators.push_back(r.letters());

  HomCount out;
  if (g == 0) {
    out.count = 1;
    return out;
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, fact));
  // Small jobs are not worth the thread start-up.
  if (total < 20000) threads = 1;

  std::vector<Partial> partial(threads);
  auto work = [&](unsigned t) {
    Partial& mine = partial[t];
    std::vector<std::size_t> choice(g, 0);
    // Odometer over generators 1..g-1; generator 0 is fixed per stripe.
    auto advance = [&] {
      for (std::size_t k = g; k-- > 1;) {
        if (++choice[k] < fact) return true;
        choice[k] = 0;
      }
      return false;
    };
    for (std::size_t first = t; first < fact; first += threads) {
      choice.assign(g, 0);
      choice[0] = first;
      do {
        if (e.satisfies(choice)) {
          ++mine.count;
          if (!e.commute(choice)) {
            ++mine.non_abelian;
            if (!mine.witness) mine.witness = choice;
          }
        }
      } while (advance());
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::optional<std::vector<std::size_t>> best;
  for (const Partial& part : partial) {
    out.count += part.count;
    out.non_abelian += part.non_abelian;
    if (part.witness && (!best || *part.witness < *best)) best = part.witness;
  }
  if (best) {
    FiniteAssignment a;
    for (std::size_t c : *best) a.images.push_back(e.perms[c]);
    out.witness = std::move(a);
  }
  return out;
}

}  // namespace knotkit
