#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "knotkit/errors.hpp"
#include "knotkit/fox.hpp"
#include "tietze.hpp"

using namespace knotkit;

namespace {

PresentationFile load(const std::string& name) {
  std::ifstream in(std::string(KNOTKIT_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation_file(ss.str());
}

IntLaurent P(const char* s) { return parse_int_laurent(s); }

}  // namespace

TEST_CASE("fox derivative axioms") {
  const Presentation p = parse_presentation_file("gens: x y").presentation;
  const Word x = p.parse_word("x");
  CHECK(fox_derivative(x, 0) == GroupRingElement::of(Word()));
  CHECK(fox_derivative(x.inverse(), 0) == GroupRingElement::of(x.inverse(), -1));
  CHECK(fox_derivative(p.parse_word("y"), 0).is_zero());
}

TEST_CASE("fox derivative of r1") {
  const PresentationFile f = load("w22.pres");
  const Presentation& p = f.presentation;
  const Word r1 = p.relators()[0];
  // Leibniz by hand: 1 - x1 x2 x1^-1 + x1 x2 x1^-1 x2^-1.
  const GroupRingElement expect = GroupRingElement::of(Word()) - GroupRingElement::of(p.parse_word("x1 x2 x1^-1")) +
                                  GroupRingElement::of(p.parse_word("x1 x2 x1^-1 x2^-1"));
  CHECK(fox_derivative(r1, 0) == expect);
  CHECK(abelianize(expect, f.maps[0]) == P("2 - t^-1"));
}

TEST_CASE("abelianized fox derivatives of the bundled relators") {
  const PresentationFile w22 = load("w22.pres");
  const PresentationFile w12 = load("w12.pres");
  const AbelianizationMap& alpha = w22.maps[0];
  const AbelianizationMap& beta = w12.maps[0];
  const Word r1 = w22.presentation.relators()[0];
  const Word r2 = w22.presentation.relators()[1];
  const Word r3 = w12.presentation.relators()[1];
  CHECK(abelianized_fox(r1, 0, alpha) == P("2 - t^-1"));
  CHECK(abelianized_fox(r1, 0, beta) == P("2 - t^-1"));
  CHECK(abelianized_fox(r1, 1, alpha) == P("2*t - 1"));
  CHECK(abelianized_fox(r1, 1, beta) == P("2*t - 1"));
  CHECK(abelianized_fox(r2, 1, alpha) == P("2*t - 1"));
  CHECK(abelianized_fox(r2, 2, alpha) == P("2 - t^-1"));
  CHECK(abelianized_fox(r3, 1, beta) == P("-2 + t"));
  CHECK(abelianized_fox(r3, 2, beta) == P("2 - t"));
  CHECK(abelianized_fox(r1, 2, alpha).is_zero());
  CHECK(abelianized_fox(r2, 0, alpha).is_zero());
  CHECK(abelianized_fox(r3, 0, beta).is_zero());
}

TEST_CASE("alexander matrices") {
  const PresentationFile w22 = load("w22.pres");
  const PresentationFile w12 = load("w12.pres");
  using Row = std::vector<IntLaurent>;
  CHECK(alexander_matrix(w22.presentation, w22.maps[0]).entries ==
        std::vector<Row>{{P("2 - t^-1"), P("2*t - 1"), IntLaurent()}, {IntLaurent(), P("2*t - 1"), P("2 - t^-1")}});
  CHECK(alexander_matrix(w12.presentation, w12.maps[0]).entries ==
        std::vector<Row>{{P("2 - t^-1"), P("2*t - 1"), IntLaurent()}, {IntLaurent(), P("t - 2"), P("2 - t")}});
  const Presentation free2 = parse_presentation_file("gens: x y").presentation;
  CHECK(alexander_matrix(free2, AbelianizationMap{{1, 0}}).entries.empty());
  CHECK_THROWS_AS(alexander_matrix(w22.presentation, AbelianizationMap{{1, 1, 1}}), ValidationError);
}

TEST_CASE("alexander polynomials") {
  const PresentationFile w22 = load("w22.pres");
  const PresentationFile w12 = load("w12.pres");
  const IntLaurent a22 = alexander_polynomial(w22.presentation, w22.maps[0]);
  const IntLaurent a12 = alexander_polynomial(w12.presentation, w12.maps[0]);
  CHECK(to_string(a22) == "4*t^2 - 4*t + 1");
  CHECK(to_string(a12) == "2*t^2 - 5*t + 2");
  CHECK(unit_equivalent(a22, P("2 - t^-1") * P("2 - t^-1"), false));
  CHECK(unit_equivalent(a12, P("2 - t^-1") * P("2 - t"), false));
  CHECK_FALSE(unit_equivalent(a22, a12, true));

  const Presentation xy = parse_presentation_file("gens: x y\nrel: x").presentation;
  CHECK(alexander_polynomial(xy, AbelianizationMap{{0, 1}}) == IntLaurent(1));
  const Presentation x = parse_presentation_file("gens: x").presentation;
  CHECK(alexander_polynomial(x, AbelianizationMap{{1}}) == IntLaurent(1));
  const Presentation bs = load("bs12.pres").presentation;
  CHECK(to_string(alexander_polynomial(bs, AbelianizationMap{{0, 1}})) == "-2*t + 1");
  // Too few relators.
  const Presentation free3 = parse_presentation_file("gens: x y z\nrel: x").presentation;
  CHECK_THROWS_AS(alexander_polynomial(free3, AbelianizationMap{{0, 1, 1}}), ValidationError);
  const Presentation comm = parse_presentation_file("gens: x y\nrel: x y x^-1 y^-1").presentation;
  CHECK(to_string(alexander_polynomial(comm, AbelianizationMap{{1, 0}})) == "-t + 1");
  // All minors vanish.
  const Presentation trivial = parse_presentation_file("gens: x y\nrel: 1").presentation;
  CHECK(alexander_polynomial(trivial, AbelianizationMap{{1, 0}}).is_zero());
}

TEST_CASE("fundamental fox identity") {
  for (const char* name : {"w22.pres", "w12.pres", "bs12.pres"}) {
    const PresentationFile f = load(name);
    const AbelianizationMap m = f.maps.at(0);
    for (const Word& r : f.presentation.relators()) {
      CHECK(fox_identity_residual(r, f.presentation.generator_count(), m).is_zero());
      IntLaurent sum;
      for (std::size_t j = 0; j < m.weights.size(); ++j)
        sum += abelianized_fox(r, static_cast<std::uint32_t>(j), m) *
               (IntLaurent::monomial(1, m.weights[j]) - IntLaurent(1));
      CHECK(sum.is_zero());
    }
  }
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> weight(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const Word w = tietze::random_word(rng, 3, 10);
    const AbelianizationMap m{{weight(rng), weight(rng), weight(rng)}};
    CHECK(fox_identity_residual(w, 3, m).is_zero());
  }
}

TEST_CASE("property: leibniz rule") {
  std::mt19937 rng(22);
  for (int i = 0; i < 300; ++i) {
    const Word u = tietze::random_word(rng, 3, 8);
    const Word v = tietze::random_word(rng, 3, 8);
    for (std::uint32_t g = 0; g < 3; ++g)
      CHECK(fox_derivative(u * v, g) == fox_derivative(u, g) + GroupRingElement::of(u) * fox_derivative(v, g));
  }
}

TEST_CASE("property: alexander polynomial is Tietze invariant") {
  std::mt19937 rng(23);
  for (const char* name : {"w22.pres", "w12.pres"}) {
    const PresentationFile f = load(name);
    const IntLaurent expect = alexander_polynomial(f.presentation, f.maps[0]);
    for (int i = 0; i < 60; ++i) {
      Presentation p = f.presentation;
      AbelianizationMap m = f.maps[0];
      for (int j = 0; j < 3; ++j) {
        Word w;
        const std::size_t before = p.generator_count();
        p = tietze::random_move(rng, p, &w);
        if (p.generator_count() > before) {
          long long e = 0;
          for (Letter l : w.letters()) e += l.sign() * m.weights[l.generator()];
          m.weights.push_back(static_cast<int>(e));
        }
      }
      CHECK(validate_abelianization(p, m));
      CHECK(unit_equivalent(alexander_polynomial(p, m), expect, false));
    }
    // Negating the map costs at most t -> 1/t.
    AbelianizationMap neg = f.maps[0];
    for (int& w : neg.weights) w = -w;
    CHECK(unit_equivalent(alexander_polynomial(f.presentation, neg), expect, true));
  }
}
