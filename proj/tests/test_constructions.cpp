#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringplane/classify.hpp"
#include "ringplane/construct.hpp"
#include "ringplane/errors.hpp"

using namespace ringplane;

TEST_CASE("prime and prime power helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9));
  CHECK(prime_power(8) == std::pair<unsigned, unsigned>{2, 3});
  CHECK(prime_power(9) == std::pair<unsigned, unsigned>{3, 2});
  CHECK(prime_power(5) == std::pair<unsigned, unsigned>{5, 1});
  CHECK_THROWS_AS(prime_power(12), std::invalid_argument);
  CHECK_THROWS_AS(prime_power(1), std::invalid_argument);
}

TEST_CASE("least irreducible polynomials, constant-coefficient-major order") {
  CHECK(least_irreducible(2, 2) == std::vector<unsigned>{1, 1, 1});        // x^2+x+1
  CHECK(least_irreducible(2, 3) == std::vector<unsigned>{1, 0, 1, 1});     // x^3+x^2+1
  CHECK(least_irreducible(2, 4) == std::vector<unsigned>{1, 0, 0, 1, 1});  // x^4+x^3+1
  CHECK(least_irreducible(3, 2) == std::vector<unsigned>{1, 0, 1});        // x^2+1
  CHECK(least_irreducible(5, 1) == std::vector<unsigned>{0, 1});           // x
}

TEST_CASE("finite fields") {
  FiniteRing f4 = gf(2, 2);
  CHECK(f4.order() == 4);
  CHECK(units(f4).size() == 3);
  CHECK(characteristic(f4) == 2);
  CHECK(jacobson_radical(f4).size() == 1);
  // index 2 is the adjoined root y of x^2+x+1: y^2 = y+1 = index 3
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.pow(2, 3) == 1);

  CHECK(units(gf(2, 3)).size() == 7);
  CHECK(units(gf(3, 2)).size() == 8);
  CHECK(units(gf(5, 1)).size() == 4);

  // explicit modulus, and a reducible one is rejected
  CHECK(gf(2, 2, {1, 1, 1}).order() == 4);
  CHECK_THROWS_AS(gf(2, 2, {1, 0, 1}), std::invalid_argument);  // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(gf(4, 1), std::invalid_argument);
}

TEST_CASE("galois rings") {
  FiniteRing gr = galois_ring(2, 2, 2);  // order 16, characteristic 4
  CHECK(gr.order() == 16);
  CHECK(characteristic(gr) == 4);
  CHECK(units(gr).size() == 12);
  CHECK(jacobson_radical(gr).size() == 4);
  CHECK(radical_nil_index(gr) == 2);
  // the adjoined root, index 4, has multiplicative order 3
  CHECK(gr.pow(4, 3) == 1);
  CHECK(gr.pow(4, 2) != 1);

  CHECK(find_isomorphism(galois_ring(2, 3, 1), zmod(8)).has_value());
  CHECK(find_isomorphism(galois_ring(3, 2, 1), zmod(9)).has_value());
  CHECK(find_isomorphism(galois_ring(2, 1, 2), gf(2, 2)).has_value());
}

TEST_CASE("truncated twisted polynomial rings") {
  FiniteRing d2 = trunc_skew(2, 2, 0);
  CHECK(d2.order() == 4);
  CHECK(d2.commutative());
  CHECK(d2.mul(2, 2) == 0);  // x^2 = 0
  CHECK(characteristic(d2) == 2);
  CHECK(jacobson_radical(d2).members == std::vector<elem_t>{0, 2});

  // twisted: x*a = sigma(a)*x with sigma the squaring map on GF(4)
  FiniteRing tw = trunc_skew(4, 2, 1);
  CHECK(!tw.commutative());
  // y has index 2, x has index 4; x*y = y^2 x = (y+1)x = index 12, y*x = index 8
  CHECK(tw.mul(4, 2) == 12);
  CHECK(tw.mul(2, 4) == 8);

  FiniteRing un = trunc_skew(4, 2, 0);
  CHECK(un.commutative());
  CHECK(un.mul(4, 2) == un.mul(2, 4));

  CHECK(is_chain(trunc_skew(3, 2, 0)));
  CHECK(radical_nil_index(trunc_skew(2, 4, 0)) == 4);
  // twist exponent is reduced mod the field degree
  CHECK(trunc_skew(4, 2, 2).commutative());
}

TEST_CASE("length-2 Witt vectors") {
  FiniteRing w2 = witt2(2);
  CHECK(w2.order() == 4);
  CHECK(characteristic(w2) == 4);
  // (1,0)+(1,0) = (0,1): the carry makes this ring Z/4, not the dual numbers
  CHECK(w2.add(1, 1) == 2);
  CHECK(find_isomorphism(w2, zmod(4)).has_value());

  FiniteRing w3 = witt2(3);
  // carry term (x^3+y^3-(x+y)^3)/3 evaluated at (1,2) is 0, at (1,1) is 1
  CHECK(w3.add(1, 2) == 0);
  CHECK(w3.add(1, 1) == 5);
  CHECK(find_isomorphism(w3, zmod(9)).has_value());

  CHECK(find_isomorphism(witt2(4), galois_ring(2, 2, 2)).has_value());
  CHECK(characteristic(witt2(4)) == 4);
}

TEST_CASE("double numbers have two maximal ideals") {
  FiniteRing b2 = double_numbers(2);
  CHECK(b2.order() == 4);
  CHECK(b2.mul(2, 2) == 2);  // t^2 = t
  CHECK(units(b2).size() == 1);
  CHECK(jacobson_radical(b2).size() == 1);
  CHECK(!is_local(b2));
  CHECK(idempotents(b2).size() == 4);

  FiniteRing b3 = double_numbers(3);
  CHECK(units(b3).size() == 4);
  CHECK(find_isomorphism(b3, direct_sum(gf(3, 1), gf(3, 1))).has_value());
}

TEST_CASE("matrix rings") {
  FiniteRing m2 = matrix_ring(gf(2, 1), 2);
  CHECK(m2.order() == 16);
  CHECK(!m2.commutative());
  CHECK(units(m2).size() == 6);  // |GL_2(2)|
  CHECK(jacobson_radical(m2).size() == 1);

  FiniteRing m3 = matrix_ring(gf(3, 1), 2);
  CHECK(m3.order() == 81);
  CHECK(units(m3).size() == 48);  // (9-1)(9-3)

  FiniteRing mz4 = matrix_ring(zmod(4), 2);
  CHECK(mz4.order() == 256);
  CHECK(units(mz4).size() == 96);  // 2^4 * |GL_2(2)|
  CHECK(jacobson_radical(mz4).size() == 16);
}

TEST_CASE("two-variable truncated ring is local but not chain") {
  FiniteRing r = ixy(2, 2);
  CHECK(r.order() == 8);
  CHECK(r.commutative());
  CHECK(characteristic(r) == 2);
  // basis 1, x, y: indices 2 and 4; x^2 = xy = y^2 = 0
  CHECK(r.mul(2, 2) == 0);
  CHECK(r.mul(2, 4) == 0);
  CHECK(r.mul(4, 4) == 0);
  CHECK(jacobson_radical(r).members == std::vector<elem_t>{0, 2, 4, 6});
  CHECK(is_local(r));
  CHECK(!is_chain(r));
  CHECK(radical_nil_index(r) == 2);

  CHECK(ixy(3, 2).order() == 27);
  CHECK_THROWS_AS(ixy(2, 1), std::invalid_argument);
}

TEST_CASE("general chain ring construction") {
  EisensteinSpec es;
  es.p = 2;
  es.n = 3;
  es.r = 1;
  es.k = 2;
  es.s = 2;
  es.t = 1;
  es.frob = 0;
  es.a = {1};
  FiniteRing e8 = eisenstein_chain(es);
  CHECK(e8.order() == 8);
  CHECK(characteristic(e8) == 4);
  CHECK(is_chain(e8));
  CHECK(radical_nil_index(e8) == 3);
  CHECK(ramification_index(e8) == 2);
  // x has index 4; x^2 = 2*a0 = 2, and 2x = 0
  CHECK(e8.mul(4, 4) == 2);
  CHECK(e8.mul(2, 4) == 0);
  CHECK(jacobson_radical(e8).members == std::vector<elem_t>{0, 2, 4, 6});

  // degenerate k=1 collapses to the untwisted truncated polynomial ring
  EisensteinSpec flat;
  flat.p = 2;
  flat.n = 2;
  flat.r = 1;
  flat.k = 1;
  flat.s = 2;
  flat.t = 2;
  flat.a = {1};
  CHECK(find_isomorphism(eisenstein_chain(flat), trunc_skew(2, 2, 0)).has_value());

  EisensteinSpec bad = es;
  bad.t = 3;  // t must stay <= s
  CHECK_THROWS_AS(eisenstein_chain(bad), std::invalid_argument);
  bad = es;
  bad.a = {0};  // a0 must be a unit
  CHECK_THROWS_AS(eisenstein_chain(bad), std::invalid_argument);
  bad = es;
  bad.n = 4;  // n is determined by (k-1)s + t
  CHECK_THROWS_AS(eisenstein_chain(bad), std::invalid_argument);
}

TEST_CASE("spec strings round-trip through their canonical form") {
  for (const char* spec : {"zmod:4", "gf:2", "gf:2,2", "gr:2,2,2", "ts:2,2,id", "ts:4,2,frob^1",
                           "witt:3", "double:2", "ixy:2,2", "mat:2(gf:2)", "mat:2(gf:2,2)",
                           "eis:2,3,1,2,2,1,id[1]", "sum(zmod:2;zmod:3)",
                           "sum(gf:2,2;zmod:4)"}) {
    FiniteRing r = parse_ring_spec(spec);
    CHECK(r.tag().spec == spec);
  }
  CHECK(parse_ring_spec("ZMOD:4").tag().spec == "zmod:4");
  CHECK(parse_ring_spec("ts:2,2,frob^0").tag().spec == "ts:2,2,id");
  CHECK(parse_ring_spec("gf:2,1").tag().spec == "gf:2");
}

TEST_CASE("spec parsing rejects malformed input with a byte position") {
  CHECK_THROWS_AS(parse_ring_spec(""), spec_parse_error);
  CHECK_THROWS_AS(parse_ring_spec("nosuch:3"), spec_parse_error);
  CHECK_THROWS_AS(parse_ring_spec("zmod"), spec_parse_error);
  CHECK_THROWS_AS(parse_ring_spec("zmod:"), spec_parse_error);
  CHECK_THROWS_AS(parse_ring_spec("mat:2(zmod:4"), spec_parse_error);
  CHECK_THROWS_AS(parse_ring_spec("sum(zmod:2)"), spec_parse_error);
  try {
    parse_ring_spec("zmod:4x");
    CHECK(false);
  } catch (const spec_parse_error& e) {
    CHECK(e.input == "zmod:4x");
    CHECK(e.position == 6);
  }
  // construction-level rejections surface as invalid_argument
  CHECK_THROWS_AS(parse_ring_spec("gf:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring_spec("witt:6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring_spec("zmod:1"), std::invalid_argument);
  // capacity is separate from syntax
  CHECK_THROWS_AS(parse_ring_spec("zmod:5000"), capacity_error);
  CHECK_THROWS_AS(parse_ring_spec("zmod:60", 50), capacity_error);
  CHECK(parse_ring_spec("zmod:60", 64).order() == 60);
}

TEST_CASE("construction tags carry family names and parameters") {
  CHECK(zmod(6).tag().family == "zmod");
  CHECK(gf(2, 2).tag().family == "gf");
  CHECK(galois_ring(2, 2, 2).tag().family == "galois");
  CHECK(trunc_skew(2, 2, 0).tag().family == "trunc_skew");
  CHECK(witt2(2).tag().family == "witt2");
  CHECK(double_numbers(2).tag().family == "double");
  CHECK(matrix_ring(gf(2, 1), 2).tag().family == "matrix");
  CHECK(ixy(2, 2).tag().family == "ixy");
  CHECK(opposite(zmod(4)).tag().family == "opposite");
  CHECK(quotient(zmod(4), jacobson_radical(zmod(4))).first.tag().family == "quotient");
}
