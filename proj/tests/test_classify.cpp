#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringplane/classify.hpp"
#include "ringplane/construct.hpp"
#include "ringplane/corpus.hpp"
#include "ringplane/errors.hpp"

using namespace ringplane;

TEST_CASE("three characterizations of localness agree") {
  for (const char* spec : {"zmod:4", "zmod:9", "gf:2,3", "ts:2,3,id", "ixy:2,2", "gr:2,2,2"}) {
    LocalReport rep = local_report(parse_ring_spec(spec));
    CHECK(rep.is_local);
    CHECK(rep.nonunits_ideal);
    CHECK(rep.one_minus);
    CHECK(rep.quotient_div);
    CHECK(!rep.witness.has_value());
  }
  for (const char* spec : {"zmod:6", "double:2", "mat:2(gf:2)", "sum(zmod:4;zmod:4)"}) {
    LocalReport rep = local_report(parse_ring_spec(spec));
    CHECK(!rep.is_local);
    CHECK(!rep.nonunits_ideal);
    CHECK(!rep.one_minus);
    CHECK(rep.witness.has_value());
  }
  // the witness is an element r with both r and 1-r non-units
  FiniteRing z6 = zmod(6);
  LocalReport rep = local_report(z6);
  REQUIRE(rep.witness.has_value());
  CHECK(!z6.is_unit(*rep.witness));
  CHECK(!z6.is_unit(z6.sub(z6.one(), *rep.witness)));
}

TEST_CASE("chain verdicts and witnesses") {
  CHECK(is_chain(zmod(8)));
  CHECK(is_chain(gf(3, 2)));
  CHECK(is_chain(trunc_skew(4, 2, 1)));
  CHECK(!is_chain(zmod(6)));
  CHECK(!is_chain(ixy(2, 2)));

  ChainReport rep = chain_report(ixy(2, 2));
  CHECK(!rep.left);
  CHECK(!rep.right);
  REQUIRE(rep.witness.has_value());
  // the witness pair generates incomparable ideals (x and y do)
  auto [a, b] = *rep.witness;
  FiniteRing r = ixy(2, 2);
  IdealSet ia = generated_ideal(r, {a}, Side::right);
  IdealSet ib = generated_ideal(r, {b}, Side::right);
  CHECK(!ia.contains(b));
  CHECK(!ib.contains(a));
}

TEST_CASE("principal ideal verdicts") {
  CHECK(is_pir(zmod(12)));
  CHECK(is_pir(zmod(8)));
  CHECK(is_pir(gf(2, 2)));
  CHECK(is_pir(double_numbers(2)));
  CHECK(is_pir(matrix_ring(gf(2, 1), 2)));
  CHECK(!is_pir(ixy(2, 2)));
  CHECK(!is_pir(ixy(3, 2)));
}

TEST_CASE("local parameters of chain and non-chain rings") {
  LocalParams z4 = local_params(zmod(4));
  CHECK(z4.p == 2);
  CHECK(z4.n == 2);
  CHECK(z4.r == 1);
  CHECK(z4.k == 2);
  CHECK(z4.nil_index == 2);
  CHECK(z4.chain_consistent);

  LocalParams g16 = local_params(galois_ring(2, 2, 2));
  CHECK(g16.p == 2);
  CHECK(g16.n == 2);
  CHECK(g16.r == 2);
  CHECK(g16.k == 2);
  CHECK(g16.chain_consistent);

  LocalParams ts = local_params(trunc_skew(4, 2, 1));
  CHECK(ts.p == 2);
  CHECK(ts.n == 2);
  CHECK(ts.r == 2);
  CHECK(ts.k == 1);

  // |R| = 8 = q^n with q = 2 forces n = 3, but J needs only 2 steps to vanish
  LocalParams xy = local_params(ixy(2, 2));
  CHECK(xy.p == 2);
  CHECK(xy.n == 3);
  CHECK(xy.r == 1);
  CHECK(xy.k == 1);
  CHECK(xy.nil_index == 2);
  CHECK(!xy.chain_consistent);

  CHECK_THROWS_AS(local_params(zmod(6)), std::invalid_argument);
}

TEST_CASE("ramification index separates equal-size chain rings") {
  CHECK(ramification_index(zmod(4)) == 1);
  CHECK(ramification_index(zmod(8)) == 1);
  CHECK(ramification_index(galois_ring(2, 3, 1)) == 1);
  CHECK(ramification_index(trunc_skew(2, 2, 0)) == 2);   // char p: (p) = 0 = J^2
  CHECK(ramification_index(trunc_skew(2, 3, 0)) == 3);
  EisensteinSpec es;
  es.p = 2;
  es.n = 3;
  es.r = 1;
  es.k = 2;
  es.s = 2;
  es.t = 1;
  es.a = {1};
  CHECK(ramification_index(eisenstein_chain(es)) == 2);
  CHECK_THROWS_AS(ramification_index(ixy(2, 2)), std::invalid_argument);
}

TEST_CASE("commutative decomposition into local components") {
  std::vector<FiniteRing> parts = decompose_commutative(zmod(12));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].order() == 3);
  CHECK(parts[1].order() == 4);
  CHECK(find_isomorphism(parts[0], zmod(3)).has_value());
  CHECK(find_isomorphism(parts[1], zmod(4)).has_value());

  parts = decompose_commutative(double_numbers(3));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].order() == 3);
  CHECK(parts[1].order() == 3);

  // local input decomposes trivially
  CHECK(decompose_commutative(zmod(8)).size() == 1);
  CHECK(decompose_commutative(gf(2, 2)).size() == 1);

  parts = decompose_commutative(zmod(30));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].order() * parts[1].order() * parts[2].order() == 30);

  CHECK_THROWS_AS(decompose_commutative(matrix_ring(gf(2, 1), 2)), std::invalid_argument);
}

TEST_CASE("zero divisor counting test") {
  // |R| = p^m, |Z| = p^n, 1 <= n < m detects localness among non-fields
  ZeroDivisorLocalReport z4 = zero_divisor_local_test(zmod(4));
  CHECK(z4.verdict);
  CHECK(z4.p == 2);
  CHECK(z4.m == 2);
  CHECK(z4.n == 1);
  CHECK(z4.r == 1);

  ZeroDivisorLocalReport xy = zero_divisor_local_test(ixy(2, 2));
  CHECK(xy.verdict);
  CHECK(xy.m == 3);
  CHECK(xy.n == 2);
  CHECK(xy.r == 1);

  CHECK(!zero_divisor_local_test(double_numbers(2)).verdict);
  CHECK(!zero_divisor_local_test(zmod(6)).verdict);
  CHECK(!zero_divisor_local_test(gf(2, 2)).verdict);  // fields have n = 0
  CHECK(!zero_divisor_local_test(matrix_ring(gf(2, 1), 2)).verdict);
}

TEST_CASE("four-case classification") {
  ClassificationReport rep = classify_case(gf(2, 2));
  CHECK(rep.label == RingCase::field);
  CHECK(to_string(rep.label) == "field");
  CHECK(rep.pir.has_value());
  CHECK(*rep.pir);

  rep = classify_case(zmod(4));
  CHECK(rep.label == RingCase::chain);
  REQUIRE(rep.params.has_value());
  CHECK(rep.params->p == 2);
  REQUIRE(rep.ramification.has_value());
  CHECK(*rep.ramification == 1);

  rep = classify_case(ixy(2, 2));
  CHECK(rep.label == RingCase::local_non_chain);
  CHECK(rep.params.has_value());
  CHECK(!rep.ramification.has_value());

  rep = classify_case(double_numbers(2));
  CHECK(rep.label == RingCase::semilocal_non_local);
  CHECK(!rep.params.has_value());

  rep = classify_case(matrix_ring(gf(2, 1), 2));
  CHECK(rep.label == RingCase::semilocal_non_local);
  CHECK(rep.pir.has_value());
  CHECK(*rep.pir);
}

TEST_CASE("corpus enumeration is deterministic and ordered") {
  std::vector<std::string> specs = suite_corpus(16);
  CHECK(specs.size() == 38);
  CHECK(specs == suite_corpus(16));
  // every modulus appears, the order-4 census entries are pinned
  CHECK(std::count(specs.begin(), specs.end(), "zmod:16") == 1);
  CHECK(std::count(specs.begin(), specs.end(), "gf:2,2") == 1);
  CHECK(std::count(specs.begin(), specs.end(), "ts:2,2,id") == 1);
  CHECK(std::count(specs.begin(), specs.end(), "double:2") == 1);
  CHECK(std::count(specs.begin(), specs.end(), "mat:2(gf:2)") == 1);
  CHECK(std::count(specs.begin(), specs.end(), "witt:4") == 1);
  CHECK(std::count(specs.begin(), specs.end(), "eis:2,3,1,2,2,1,id[1]") == 1);
  // no duplicates
  std::vector<std::string> s2 = specs;
  std::sort(s2.begin(), s2.end());
  CHECK(std::adjacent_find(s2.begin(), s2.end()) == s2.end());
  // smaller bound is a prefix-compatible subset
  for (const std::string& s : suite_corpus(9))
    CHECK(std::count(specs.begin(), specs.end(), s) == 1);
}

TEST_CASE("suite passes clean and fails under table corruption") {
  SuiteOptions opts;
  opts.max_order = 8;
  SuiteResult res = run_suite(opts);
  CHECK(res.all_pass());
  CHECK(res.checks.size() >= 20);

  opts.corrupt_index = 2;  // zmod:4
  SuiteResult bad = run_suite(opts);
  CHECK(!bad.all_pass());
  bool axiom_named = false;
  for (const SuiteCheck& c : bad.checks)
    if (!c.pass && c.name == "ring axioms hold" &&
        c.detail.find("multiplicative_associativity") != std::string::npos)
      axiom_named = true;
  CHECK(axiom_named);
}
