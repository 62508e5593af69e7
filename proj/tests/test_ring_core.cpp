#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ringplane/construct.hpp"
#include "ringplane/ring.hpp"

using namespace ringplane;

namespace {

std::vector<elem_t> sorted(std::vector<elem_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("bitset counting and matrix rows") {
  Bitset b(100);
  CHECK(b.count() == 0);
  b.set(3);
  b.set(64);
  b.set(99);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK(!b.test(63));
  b.reset(64);
  CHECK(b.count() == 2);

  Bitset c(100);
  c.set(3);
  c.set(77);
  CHECK(b.count_and(c) == 1);

  BitMatrix m(4, 70);
  m.set(1, 65);
  m.set(2, 65);
  m.set(2, 3);
  CHECK(m.row_count(2) == 2);
  CHECK(m.row_and_count(1, 2) == 1);
  CHECK(!m.rows_equal(1, 2));
  m.set(1, 3);
  CHECK(m.rows_equal(1, 2));
}

TEST_CASE("modular ring tables satisfy every axiom") {
  for (unsigned n : {2u, 3u, 4u, 6u, 9u, 12u}) {
    FiniteRing r = zmod(n);
    AxiomReport rep = check_axioms(r);
    CHECK(rep.pass);
    CHECK(r.order() == n);
    CHECK(characteristic(r) == n);
    CHECK(r.commutative());
  }
}

TEST_CASE("a corrupted product cell is caught by the associativity scan") {
  FiniteRing r = zmod(4);
  std::vector<elem_t> mul = r.mul_table();
  mul[3 * 4 + 3] = static_cast<elem_t>((mul[3 * 4 + 3] + 1) % 4);
  AxiomReport rep = check_axioms(4, r.zero(), r.one(), r.add_table(), mul);
  CHECK(!rep.pass);
  CHECK(rep.axiom == "multiplicative_associativity");
  CHECK(rep.witness[0] == 2);
  CHECK(rep.witness[1] == 3);
  CHECK(rep.witness[2] == 3);
}

TEST_CASE("constructor validates table shape") {
  std::vector<elem_t> add = zmod(2).add_table(), mul = zmod(2).mul_table();
  CHECK_THROWS_AS(FiniteRing(2, 0, 0, add, mul), std::invalid_argument);  // zero == one
  CHECK_THROWS_AS(FiniteRing(3, 0, 1, add, mul), std::invalid_argument);  // wrong size
  std::vector<elem_t> bad = add;
  bad[0] = 7;
  CHECK_THROWS_AS(FiniteRing(2, 0, 1, bad, mul), std::invalid_argument);  // out of range
}

TEST_CASE("arithmetic helpers") {
  FiniteRing r = zmod(5);
  CHECK(r.from_int(-3) == 2);
  CHECK(r.from_int(12) == 2);
  CHECK(r.pow(2, 3) == 3);
  CHECK(r.pow(2, 0) == 1);
  CHECK(r.neg(2) == 3);
  CHECK(r.sub(1, 3) == 3);
}

TEST_CASE("units and zero divisors partition Z/12") {
  FiniteRing r = zmod(12);
  CHECK(sorted(units(r)) == std::vector<elem_t>{1, 5, 7, 11});
  CHECK(zero_divisors(r).size() == 8);
  for (elem_t x = 0; x < 12; ++x) CHECK(r.is_unit(x) != r.is_zero_divisor(x));
  CHECK(unit_mask(r).count() == 4);
}

TEST_CASE("radical of modular rings is the squarefree kernel") {
  CHECK(jacobson_radical(zmod(12)).members == std::vector<elem_t>{0, 6});
  CHECK(jacobson_radical(zmod(8)).members == std::vector<elem_t>{0, 2, 4, 6});
  CHECK(jacobson_radical(zmod(6)).members == std::vector<elem_t>{0});
  CHECK(radical_nil_index(zmod(8)) == 3);
  CHECK(radical_nil_index(zmod(12)) == 2);
  CHECK(radical_nil_index(zmod(7)) == 1);
}

TEST_CASE("radical contains exactly the nilpotents in a local ring") {
  FiniteRing r = zmod(9);
  const IdealSet& j = jacobson_radical(r);
  for (elem_t x = 0; x < 9; ++x) {
    bool nil = r.mul(x, x) == 0 || r.mul(r.mul(x, x), x) == 0;
    CHECK(j.contains(x) == nil);
  }
}

TEST_CASE("generated ideals in a matrix ring are one-sided") {
  FiniteRing r = matrix_ring(gf(2, 1), 2);
  // a nonzero idempotent that is neither 0 nor 1 generates a proper one-sided
  // ideal of order 4 on each side, and the full ring two-sidedly
  bool found = false;
  for (elem_t e : idempotents(r)) {
    if (e == r.zero() || e == r.one()) continue;
    IdealSet right = generated_ideal(r, {e}, Side::right);
    IdealSet left = generated_ideal(r, {e}, Side::left);
    IdealSet two = generated_ideal(r, {e}, Side::two_sided);
    CHECK(right.size() == 4);
    CHECK(left.size() == 4);
    CHECK(two.size() == 16);
    found = true;
    break;
  }
  CHECK(found);
  CHECK(idempotents(r).size() == 8);
}

TEST_CASE("ideal lattices of known rings") {
  CHECK(all_ideals(zmod(12), Side::two_sided).size() == 6);
  CHECK(all_ideals(zmod(8), Side::two_sided).size() == 4);
  FiniteRing m2 = matrix_ring(gf(2, 1), 2);
  CHECK(all_ideals(m2, Side::left).size() == 5);
  CHECK(all_ideals(m2, Side::right).size() == 5);
  CHECK(all_ideals(m2, Side::two_sided).size() == 2);
  CHECK_THROWS_AS(all_ideals(zmod(32), Side::left, 16), capacity_error);
}

TEST_CASE("quotient by the radical") {
  FiniteRing r = zmod(12);
  auto [q, pi] = quotient(r, jacobson_radical(r));
  CHECK(q.order() == 6);
  CHECK(pi.map.size() == 12);
  CHECK(find_isomorphism(q, zmod(6)).has_value());
  // projection is a homomorphism
  for (elem_t a = 0; a < 12; ++a)
    for (elem_t b = 0; b < 12; ++b) {
      CHECK(pi.map[r.add(a, b)] == q.add(pi.map[a], pi.map[b]));
      CHECK(pi.map[r.mul(a, b)] == q.mul(pi.map[a], pi.map[b]));
    }
}

TEST_CASE("direct sum multiplies invariants and matches the modular ring") {
  FiniteRing s = direct_sum(zmod(2), zmod(3));
  CHECK(s.order() == 6);
  CHECK(units(s).size() == 2);
  CHECK(find_isomorphism(s, zmod(6)).has_value());
  CHECK(s.tag().family == "direct_sum");
  CHECK(s.tag().spec == "sum(zmod:2;zmod:3)");
}

TEST_CASE("opposite ring transposes multiplication") {
  FiniteRing r = matrix_ring(gf(2, 1), 2);
  FiniteRing o = opposite(r);
  for (elem_t a = 0; a < r.order(); ++a)
    for (elem_t b = 0; b < r.order(); ++b) CHECK(o.mul(a, b) == r.mul(b, a));
  CHECK(opposite(o).mul_table() == r.mul_table());
  // a full matrix ring over a field is isomorphic to its opposite
  CHECK(find_isomorphism(r, o).has_value());
}

TEST_CASE("idempotent counts") {
  CHECK(idempotents(zmod(4)).size() == 2);
  CHECK(idempotents(zmod(6)).size() == 4);
  CHECK(idempotents(double_numbers(2)).size() == 4);
  CHECK(idempotents(gf(3, 2)).size() == 2);
}

TEST_CASE("isomorphism search separates the order-4 rings") {
  FiniteRing z4 = zmod(4), f4 = gf(2, 2), d2 = trunc_skew(2, 2, 0), b2 = double_numbers(2);
  const FiniteRing* all[] = {&z4, &f4, &d2, &b2};
  for (int i = 0; i < 4; ++i) {
    CHECK(find_isomorphism(*all[i], *all[i]).has_value());
    for (int j = i + 1; j < 4; ++j) CHECK(!find_isomorphism(*all[i], *all[j]).has_value());
  }
}

TEST_CASE("isomorphism maps are verified structurally") {
  FiniteRing a = zmod(6);
  RingMorphism id{{0, 1, 2, 3, 4, 5}};
  CHECK(is_isomorphism(a, a, id));
  RingMorphism wrong{{0, 5, 2, 3, 4, 1}};  // 5 is not 1's image under any automorphism
  CHECK(!is_isomorphism(a, a, wrong));
  auto f = find_isomorphism(direct_sum(zmod(3), zmod(2)), zmod(6));
  REQUIRE(f.has_value());
  CHECK(is_isomorphism(direct_sum(zmod(3), zmod(2)), zmod(6), *f));
}

TEST_CASE("capacity bounds are enforced") {
  CHECK_THROWS_AS(zmod(100, 50), capacity_error);
  CHECK_THROWS_AS(find_isomorphism(gf(2, 6), gf(2, 6)), capacity_error);
  CHECK(find_isomorphism(gf(2, 6), gf(2, 6), 64).has_value());
}

TEST_CASE("ideal membership helper") {
  FiniteRing r = zmod(8);
  CHECK(is_ideal(r, {0, 2, 4, 6}, Side::two_sided));
  CHECK(is_ideal(r, {0, 4}, Side::two_sided));
  CHECK(!is_ideal(r, {0, 2}, Side::two_sided));  // 2+2=4 missing
  CHECK(!is_ideal(r, {0, 3}, Side::two_sided));  // 3+3=6 missing
  IdealSet j = jacobson_radical(r);
  CHECK(j.contains(6));
  CHECK(!j.contains(1));
}
