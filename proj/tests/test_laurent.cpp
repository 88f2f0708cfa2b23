#include <random>

#include "doctest.h"
#include "knotkit/errors.hpp"
#include "knotkit/laurent.hpp"

using namespace knotkit;

namespace {

IntLaurent P(const char* s) { return parse_int_laurent(s); }

// Value of t^shift * p at an integer point, done in 128-bit so it does not
// share code with the library arithmetic.
__int128 eval_at(const IntLaurent& p, __int128 t, int shift) {
  __int128 sum = 0;
  for (const auto& [e, c] : p.terms()) {
    __int128 v = c;
    for (int k = 0; k < e + shift; ++k) v *= t;
    sum += v;
  }
  return sum;
}

IntLaurent random_poly(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> n_terms(0, max_terms), expo(-3, 3), coef(-5, 5);
  IntLaurent::Terms terms;
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i) {
    const int c = coef(rng);
    if (c != 0) terms[expo(rng)] = c;
  }
  return IntLaurent::from_terms(terms);
}

IntLaurent random_nonzero(std::mt19937& rng) {
  IntLaurent p;
  while (p.is_zero()) p = random_poly(rng);
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic on small examples") {
  CHECK(P("2*t - 1") * P("2*t - 1") == P("4*t^2 - 4*t + 1"));
  CHECK(P("2 - t^-1") * P("t") == P("2*t - 1"));
  const IntLaurent sq = P("2 - t^-1") * P("2 - t^-1");
  CHECK(sq == P("4 - 4*t^-1 + t^-2"));
  for (__int128 t : {2, 3}) CHECK(eval_at(sq, t, 2) == eval_at(P("2*t - 1"), t, 0) * eval_at(P("2*t - 1"), t, 0));
  CHECK((P("t") - P("t")).is_zero());
  CHECK(IntLaurent(0).is_zero());
}

TEST_CASE("laurent text round trip") {
  CHECK(to_string(P("4*t^2 - 4*t + 1")) == "4*t^2 - 4*t + 1");
  CHECK(to_string(P("-t^(-2) + 3 t")) == "3*t - t^-2");
  CHECK(to_string(IntLaurent()) == "0");
  CHECK(to_string(P("-1")) == "-1");
  CHECK(to_string(P("t^-1")) == "t^-1");
  CHECK_THROWS_AS(P("2*x"), ParseError);
  CHECK_THROWS_AS(P("t^"), ParseError);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const IntLaurent p = random_poly(rng);
    CHECK(parse_int_laurent(to_string(p)) == p);
  }
}

TEST_CASE("bilaurent basics") {
  const BiLaurent f = parse_bi_laurent("a^2*z + a^-1");
  CHECK(to_string(a_mirror(f)) == "a^-2*z + a");
  CHECK(min_deg_a(BiLaurent(1)) == 0);
  CHECK(min_deg_a(f) == -1);
  CHECK(max_deg_a(f) == 2);
  CHECK(min_deg_z(f) == 0);
  CHECK_THROWS_AS(min_deg_a(BiLaurent()), ValidationError);
  const BiLaurent g = parse_bi_laurent("-a^-4 - 2*a^-2 + a^-5*z + a^-3*z + a^-4*z^2 + a^-2*z^2");
  CHECK(parse_bi_laurent(to_string(g)) == g);
  CHECK(to_string(BiLaurent::monomial(1, 1, -1)) == "a*z^-1");
}

TEST_CASE("normalize_unit") {
  CHECK(normalize_unit(P("2 - t^-1")) == P("1 - 2*t"));
  CHECK(normalize_unit(P("1")) == P("1"));
  CHECK(normalize_unit(P("-t^5")) == P("1"));
  CHECK_THROWS_AS(normalize_unit(IntLaurent()), ValidationError);
}

TEST_CASE("unit_equivalent") {
  CHECK(unit_equivalent(P("2*t - 1"), P("2 - t^-1"), false));
  CHECK_FALSE(unit_equivalent(P("2*t - 1"), P("2 - t"), false));
  CHECK(unit_equivalent(P("2*t - 1"), P("2 - t"), true));
  const IntLaurent a = P("2 - t^-1") * P("2 - t^-1");
  const IntLaurent b = P("2 - t^-1") * P("2 - t");
  CHECK_FALSE(unit_equivalent(a, b, false));
  CHECK_FALSE(unit_equivalent(a, b, true));
  CHECK(unit_equivalent(IntLaurent(), IntLaurent(), true));
  CHECK_FALSE(unit_equivalent(IntLaurent(), P("1"), true));
}

TEST_CASE("laurent_gcd examples") {
  const IntLaurent u = P("2 - t^-1");
  CHECK(laurent_gcd(u * P("2*t - 1"), u * u) == normalize_unit(P("2*t - 1") * P("2*t - 1")));
  CHECK(laurent_gcd(P("3*t - 1 + t^-2"), IntLaurent()) == normalize_unit(P("3*t - 1 + t^-2")));
  CHECK(laurent_gcd(P("2*t - 1"), P("2 - t")) == P("1"));
  // Resultant of 2t - 1 and 2 - t is 2*2 - (-1)(-1) = 3, nonzero.
  CHECK(laurent_gcd(P("6*t - 3"), P("4 - 2*t")) == P("1"));
  CHECK(laurent_gcd(P("6*t - 3"), P("12*t - 6")) == P("3 - 6*t"));
  CHECK_THROWS_AS(laurent_gcd(IntLaurent(), IntLaurent()), ValidationError);
}

TEST_CASE("exact_quotient and substitute_inverse") {
  CHECK(substitute_inverse(P("2 - t")) == P("2 - t^-1"));
  CHECK(exact_quotient(P("4*t^2 - 4*t + 1"), P("2*t - 1")) == P("2*t - 1"));
  CHECK_FALSE(exact_quotient(P("4*t^2 - 4*t + 1"), P("t - 2")).has_value());
  CHECK(exact_quotient(P("2*t^3"), P("t^-1")) == P("2*t^4"));
  CHECK_FALSE(exact_quotient(P("3*t"), P("2")).has_value());
}

TEST_CASE("overflow is reported") {
  const Coeff big = Coeff{1} << 62;
  CHECK_THROWS_AS(IntLaurent(big) * IntLaurent(4), OverflowError);
  CHECK_THROWS_AS(IntLaurent(big) + IntLaurent(big), OverflowError);
}

TEST_CASE("property: ring laws") {
  std::mt19937 rng(1);
  for (int i = 0; i < 300; ++i) {
    const IntLaurent p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - q) + q == p);
    // Evaluation oracle: a shift of 3 clears the worst negative exponent.
    for (__int128 t : {2, 3, -5}) CHECK(eval_at(p * q, t, 6) == eval_at(p, t, 3) * eval_at(q, t, 3));
  }
}

TEST_CASE("property: normalize_unit idempotent and unit invariant") {
  std::mt19937 rng(2);
  for (int i = 0; i < 300; ++i) {
    const IntLaurent p = random_nonzero(rng);
    const IntLaurent n = normalize_unit(p);
    CHECK(normalize_unit(n) == n);
    CHECK(n.min_exponent() == 0);
    CHECK(n.coefficient(0) > 0);
    for (int k = -4; k <= 4; ++k) {
      CHECK(normalize_unit(p.shifted(k)) == n);
      CHECK(normalize_unit(-p.shifted(k)) == n);
    }
  }
}

TEST_CASE("property: gcd divides and is unit invariant") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const IntLaurent common = random_nonzero(rng);
    const IntLaurent p = common * random_nonzero(rng);
    const IntLaurent q = common * random_poly(rng);
    const IntLaurent g = laurent_gcd(p, q);
    CHECK(exact_quotient(p, g).has_value());
    CHECK(exact_quotient(q, g).has_value());
    // The planted common factor must divide the gcd.
    CHECK(exact_quotient(g, common).has_value());
    CHECK(laurent_gcd(-p.shifted(2), q.shifted(-3)) == g);
    CHECK(laurent_gcd(q, p) == g);
  }
}

TEST_CASE("property: unit_equivalent is an equivalence") {
  std::mt19937 rng(4);
  for (int i = 0; i < 200; ++i) {
    const IntLaurent p = random_nonzero(rng);
    const IntLaurent q = -p.shifted(i % 5 - 2);
    const IntLaurent r = substitute_inverse(q).shifted(1);
    const IntLaurent other = random_nonzero(rng);
    for (bool inv : {false, true}) {
      CHECK(unit_equivalent(p, p, inv));
      CHECK(unit_equivalent(p, other, inv) == unit_equivalent(other, p, inv));
      CHECK(unit_equivalent(p, q, inv));
    }
    CHECK(unit_equivalent(q, r, true));
    CHECK(unit_equivalent(p, r, true));
  }
}
