#include <random>

#include "doctest.h"
#include "kauffman_oracle.hpp"
#include "random_fronts.hpp"
#include "knotkit/certificate.hpp"
#include "knotkit/errors.hpp"
#include "knotkit/front_diagram.hpp"
#include "knotkit/kauffman.hpp"
#include "testdata.hpp"

using namespace knotkit;

namespace {

BiLaurent B(const char* s) { return parse_bi_laurent(s); }

LinkDiagram load_pd(const std::string& name) { return parse_pd(slurp_data(name)); }

BiLaurent naive(const LinkDiagram& d) { return oracle::lambda(oracle::Pd{d.crossings, d.loops}); }

using fronts::W;
using fronts::random_fronts;

// Standard table codes.
const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* k819 =
    "X(2,14,3,13) X(5,11,6,10) X(7,15,8,14) X(9,5,10,4) X(11,7,12,6) X(12,2,13,1) X(15,9,16,8) X(16,4,1,3)";
const char* k946 =
    "X(2,10,3,9) X(3,14,4,15) X(6,17,7,18) X(8,11,9,12) X(10,2,11,1) X(13,4,14,5) X(15,13,16,12) X(16,7,17,8) "
    "X(18,5,1,6)";

}  // namespace

TEST_CASE("PD parsing and validation") {
  const LinkDiagram t = parse_pd(kTrefoil);
  CHECK(crossing_count(t) == 3);
  CHECK(t.crossings[1] == std::array<int, 4>{3, 1, 4, 6});
  CHECK(parse_pd(format_pd(t)) == t);
  CHECK(parse_pd("# a comment\nX(1,5,2,4)\nX(3,1,4,6) X(5,3,6,2)\n") == t);
  CHECK(parse_pd("O(1)\nO(2)").loops == 2);
  CHECK(load_pd("unknot.pd").loops == 1);
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), ParseError);
  CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), ParseError);
  CHECK_THROWS_AS(parse_pd("X(1,2,3,4"), ParseError);
  CHECK_THROWS_AS(parse_pd("O(1) O(1)"), ParseError);
  CHECK_THROWS_WITH_AS(parse_pd("X(1,2,3,4)"), doctest::Contains("exactly twice"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_pd("X(1,2,3,4) X(1,2,3,4)"), doctest::Contains("planar"), ValidationError);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,2) O(1)"), ValidationError);
}

TEST_CASE("components, writhe and mirror") {
  CHECK(link_components(parse_pd(kTrefoil)) == 1);
  CHECK(link_components(parse_pd("X(1,3,2,4) X(3,1,4,2)")) == 2);
  CHECK(link_components(parse_pd("X(1,1,2,2) O(3)")) == 2);
  CHECK(writhe(parse_pd(kTrefoil)) == 3);
  CHECK(writhe(parse_pd(kFigureEight)) == 0);
  CHECK(writhe(parse_pd(k819)) == 8);
  CHECK(writhe(mirror(parse_pd(kTrefoil))) == -3);
  CHECK(mirror(parse_pd(kTrefoil)) == load_pd("trefoil_lh.pd"));
  CHECK(mirror(parse_pd(k946)) == load_pd("9_46.pd"));
  CHECK(writhe(parse_pd("X(1,1,2,2)")) == 1);
  CHECK(writhe(parse_pd("X(1,2,2,1)")) == -1);
  CHECK(switch_crossing(parse_pd(kTrefoil), 0).crossings[0] == std::array<int, 4>{5, 2, 4, 1});
  CHECK_THROWS_AS(switch_crossing(parse_pd(kTrefoil), 3), ValidationError);
  CHECK_THROWS_AS(smooth(parse_pd(kTrefoil), 0, 2), ValidationError);
}

TEST_CASE("unknots, kinks and split unions") {
  const BiLaurent a = BiLaurent::monomial(1, 1, 0);
  CHECK(regular_isotopy_polynomial(parse_pd("O(1)")) == BiLaurent(1));
  CHECK(regular_isotopy_polynomial(parse_pd("X(1,2,2,1)")) == a);
  CHECK(regular_isotopy_polynomial(parse_pd("X(1,1,2,2)")) == BiLaurent::monomial(1, -1, 0));
  CHECK(regular_isotopy_polynomial(parse_pd("O(1) O(2)")) == kauffman_delta());
  CHECK(kauffman_delta() == B("a*z^-1 + a^-1*z^-1 - 1"));
  for (const char* kinked : {"X(1,2,2,1)", "X(1,1,2,2)", "X(1,2,2,3) X(3,4,4,1)", "X(1,2,2,3) X(4,4,1,3)"})
    CHECK(kauffman_F(parse_pd(kinked)) == BiLaurent(1));

  const Simplified s = simplify(parse_pd("X(1,2,2,3) X(3,4,4,5) X(5,6,6,1)"));
  CHECK(s.diagram.crossings.empty());
  CHECK(s.diagram.loops == 1);
  CHECK(s.factor == a * a * a);

  const BiLaurent t = regular_isotopy_polynomial(parse_pd(kTrefoil));
  CHECK(regular_isotopy_polynomial(parse_pd(std::string(kTrefoil) + " O(7)")) == t * kauffman_delta());
  CHECK(regular_isotopy_polynomial(
            parse_pd(std::string(kTrefoil) + " X(11,15,12,14) X(13,11,14,16) X(15,13,16,12)")) ==
        t * t * kauffman_delta());
}

TEST_CASE("simplify removes reducing bigons") {
  // Two strands laid across each other and pulled apart again.
  const Simplified s = simplify(parse_pd("X(1,4,2,3) X(2,4,1,3)"));
  CHECK(s.diagram.crossings.empty());
  CHECK(s.factor == BiLaurent(1));
  // The Hopf link has a bigon between alternating crossings: nothing to do.
  const Simplified h = simplify(parse_pd("X(1,3,2,4) X(3,1,4,2)"));
  CHECK(h.diagram.crossings.size() == 2);
}

TEST_CASE("Kauffman polynomials of table knots") {
  // Table values, up to the a -> 1/a convention used here.
  CHECK(kauffman_F(parse_pd(kTrefoil)) ==
        a_mirror(B("-a^-4 - 2*a^-2 + a^-5*z + a^-3*z + a^-4*z^2 + a^-2*z^2")));
  CHECK(kauffman_F(parse_pd(kFigureEight)) ==
        B("-a^-2 - 1 - a^2 - a^-1*z - a*z + a^-2*z^2 + 2*z^2 + a^2*z^2 + a^-1*z^3 + a*z^3"));
  CHECK(kauffman_F(parse_pd(k819)) ==
        a_mirror(B("-a^-10 - 5*a^-8 - 5*a^-6 + 5*a^-9*z + 5*a^-7*z + 10*a^-8*z^2 + 10*a^-6*z^2 - 5*a^-9*z^3 "
                   "- 5*a^-7*z^3 - 6*a^-8*z^4 - 6*a^-6*z^4 + a^-9*z^5 + a^-7*z^5 + a^-8*z^6 + a^-6*z^6")));
  const BiLaurent f946 =
      B("2 + a^2 - a^4 - a^6 - 2*a*z - 6*a^3*z - 4*a^5*z + 3*a^2*z^2 + 9*a^4*z^2 + 6*a^6*z^2 + a*z^3 + 8*a^3*z^3 "
        "+ 7*a^5*z^3 - 4*a^2*z^4 - 9*a^4*z^4 - 5*a^6*z^4 - 5*a^3*z^5 - 5*a^5*z^5 + a^2*z^6 + 2*a^4*z^6 + a^6*z^6 "
        "+ a^3*z^7 + a^5*z^7");
  CHECK(kauffman_F(parse_pd(k946)) == a_mirror(f946));
  CHECK(kauffman_F(load_pd("9_46.pd")) == f946);
  CHECK(kauffman_F(load_pd("trefoil_rh.pd")) == kauffman_F(parse_pd(kTrefoil)));
}

TEST_CASE("mirror property") {
  for (const char* name : {"trefoil_rh.pd", "trefoil_lh.pd", "9_46.pd", "unknot.pd"}) {
    const LinkDiagram d = load_pd(name);
    CHECK(kauffman_F(mirror(d)) == a_mirror(kauffman_F(d)));
  }
  CHECK(kauffman_F(load_pd("trefoil_lh.pd")) == a_mirror(kauffman_F(load_pd("trefoil_rh.pd"))));
  std::mt19937 rng(8);
  for (const FrontWord& f : random_fronts(rng, 40, 10)) {
    const LinkDiagram d = front_to_pd(f);
    CHECK(regular_isotopy_polynomial(mirror(d)) == a_mirror(regular_isotopy_polynomial(d)));
  }
}

TEST_CASE("memoized engine agrees with the naive recursion") {
  for (const char* pd : {kTrefoil, kFigureEight, k819, "X(1,3,2,4) X(3,1,4,2)", "X(1,4,2,3) X(2,4,1,3)"}) {
    const LinkDiagram d = parse_pd(pd);
    CHECK(regular_isotopy_polynomial(d) == naive(d));
  }
  for (const char* name : {"trefoil_rh.pd", "trefoil_lh.pd", "unknot.pd"}) CHECK(regular_isotopy_polynomial(load_pd(name)) == naive(load_pd(name)));
  std::mt19937 rng(3);
  int links = 0;
  for (const FrontWord& f : random_fronts(rng, 120, 8)) {
    const LinkDiagram d = front_to_pd(f);
    if (link_components(d) > 1) ++links;
    INFO(to_string(f));
    CHECK(regular_isotopy_polynomial(d) == naive(d));
  }
  CHECK(links > 5);
}

TEST_CASE("bundled mirror 9_46 against the naive recursion") {
  const LinkDiagram d = load_pd("9_46.pd");
  const BiLaurent lambda = naive(d);
  CHECK(regular_isotopy_polynomial(d) == lambda);
  CHECK(kauffman_F(d) == lambda.shifted(writhe(d), 0));
}

TEST_CASE("skein relation at sampled crossings") {
  std::mt19937 rng(17);
  const BiLaurent z = BiLaurent::monomial(1, 0, 1);
  int sampled = 0;
  for (const FrontWord& f : random_fronts(rng, 60, 9)) {
    const LinkDiagram d = front_to_pd(f);
    if (d.crossings.empty()) continue;
    const std::size_t x = rng() % d.crossings.size();
    const BiLaurent lhs = regular_isotopy_polynomial(d) + regular_isotopy_polynomial(switch_crossing(d, x));
    const BiLaurent rhs = z * (regular_isotopy_polynomial(smooth(d, x, 0)) + regular_isotopy_polynomial(smooth(d, x, 1)));
    CHECK(lhs == rhs);
    ++sampled;
  }
  CHECK(sampled > 30);
}

TEST_CASE("F is invariant under Legendrian moves of the front") {
  // For links F depends on the orientation, so use the one carried along
  // with the front.
  const auto oriented_F = [](const OrientedFront& f) {
    return regular_isotopy_polynomial(front_to_pd(f.front)).shifted(writhe(f), 0);
  };
  std::mt19937 rng(99);
  for (const char* s : {"L 1 L 3 X 2 X 2 X 2 R 3 R 1", "L 1 L 3 R 2 R 1", "L 1 L 3 X 2 X 2 R 3 R 1"}) {
    OrientedFront f = orient(W(s));
    const BiLaurent F = oriented_F(f);
    if (components(f.front) == 1) CHECK(F == kauffman_F(front_to_pd(f.front)));
    for (int step = 0; step < 60; ++step) {
      auto moves = enumerate_moves(f.front);
      if (crossing_count(front_to_pd(f.front)) >= 8)
        std::erase_if(moves, [](const Move& m) { return m.create && m.kind != MoveKind::R3 && m.kind != MoveKind::Slide; });
      f = apply_move(f, moves[rng() % moves.size()]);
      INFO(s << " -> " << to_string(f.front));
      CHECK(oriented_F(f) == F);
    }
  }
}

TEST_CASE("skein keys ignore labels and crossing order") {
  const LinkDiagram t = parse_pd(kTrefoil);
  LinkDiagram shuffled;
  for (auto x : {t.crossings[2], t.crossings[0], t.crossings[1]}) {
    for (int& e : x) e = 100 - e;
    shuffled.crossings.push_back({x[2], x[3], x[0], x[1]});
  }
  CHECK(skein_key(shuffled) == skein_key(t));
  CHECK(skein_key(mirror(t)) != skein_key(t));
  CHECK(skein_key(parse_pd("O(1) O(2)")) != skein_key(parse_pd("O(1)")));
}

TEST_CASE("budgets, threads and statistics") {
  const LinkDiagram d = load_pd("9_46.pd");
  KauffmanOptions tight;
  tight.max_crossings = 8;
  CHECK_THROWS_AS(kauffman_F(d, tight), BudgetExceeded);
  KauffmanOptions threaded;
  threaded.threads = 4;
  KauffmanStats stats;
  CHECK(kauffman_F(d, threaded, &stats) == kauffman_F(d));
  CHECK(stats.nodes > 0);
  const LinkDiagram big = front_to_pd(iterated_sum(parse_front("L 1\nL 3\nX 2\nX 2\nX 2\nR 3\nR 1\n"), 5));
  CHECK(crossing_count(big) == 15);
  KauffmanStats big_stats;
  CHECK(min_deg_a(kauffman_F(big, {}, &big_stats)) == 10);
}

TEST_CASE("tb upper bound") {
  CHECK(tb_upper_bound(load_pd("unknot.pd")) == -1);
  CHECK(tb_upper_bound(load_pd("trefoil_rh.pd")) == 1);
  CHECK(tb_upper_bound(load_pd("trefoil_lh.pd")) == -6);
  CHECK(tb_upper_bound(load_pd("9_46.pd")) == -1);
  CHECK(tb_upper_bound(mirror(load_pd("9_46.pd"))) == -7);
  CHECK(tb_upper_bound(parse_pd(k819)) == 5);
  CHECK_THROWS_AS(tb_upper_bound(parse_pd("X(1,3,2,4) X(3,1,4,2)")), ValidationError);

  const FrontWord k = parse_front(slurp_data("9_46.front"));
  CHECK(tb_upper_bound(front_to_pd(k)) == thurston_bennequin(k));
  CHECK(kauffman_F(front_to_pd(k)) == kauffman_F(load_pd("9_46.pd")));

  // The bound holds along random knotted fronts.
  std::mt19937 rng(4);
  for (const FrontWord& f : random_fronts(rng, 60, 10)) {
    if (components(f) != 1) continue;
    CHECK(thurston_bennequin(f) <= tb_upper_bound(front_to_pd(f)));
  }
}

TEST_CASE("the two bundled disks cut different bands") {
  const FrontWord k = parse_front(slurp_data("9_46.front"));
  const auto site = [](const char* name) { return std::get<PinchStep>(parse_certificate(slurp_data(name)).steps.front()); };
  const PinchStep p1 = site("d1.cert"), p2 = site("d2.cert");
  REQUIRE(p1.column < p2.column);
  // Cutting two different bands of the ribbon reconnects the two halves.
  const LinkDiagram both = front_to_pd(pinch_unoriented(pinch_unoriented(k, p2.column, p2.k), p1.column, p1.k));
  CHECK(link_components(both) == 1);
  // Cutting one band twice splits off a small unknot.
  const LinkDiagram twice = front_to_pd(pinch_unoriented(pinch_unoriented(k, 9, 1), p1.column, p1.k));
  CHECK(kauffman_F(twice) == kauffman_delta() * kauffman_delta());
}
