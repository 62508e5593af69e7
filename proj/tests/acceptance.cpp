// End-to-end acceptance harness. Each criterion prints one PASS/FAIL line
// with its runtime; every numeric comparison is exact. Exit code 0 only when
// all criteria pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ringplane/classify.hpp"
#include "ringplane/construct.hpp"
#include "ringplane/corpus.hpp"
#include "ringplane/plane.hpp"

using namespace ringplane;

namespace {

struct Criterion {
  int num;
  std::string name;
  double limit_ms;
  // body(fails, notes): fails => FAIL with reasons; notes print as witnesses
  std::function<void(std::vector<std::string>&, std::vector<std::string>&)> body;
};

void expect(std::vector<std::string>& fails, bool cond, const std::string& what) {
  if (!cond) fails.push_back(what);
}

std::string show(std::size_t v) { return std::to_string(v); }

// number of k-dimensional subspaces of an n-dimensional space over GF(q)
unsigned long long gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  unsigned long long num = 1, den = 1;
  auto qpow = [&](unsigned e) {
    unsigned long long v = 1;
    for (unsigned i = 0; i < e; ++i) v *= q;
    return v;
  };
  for (unsigned i = 0; i < k; ++i) {
    num *= qpow(n - i) - 1;
    den *= qpow(k - i) - 1;
  }
  return num / den;
}

void unique_joins_and_meets(std::vector<std::string>& fails, const RingPlane& pl,
                            const std::string& label) {
  const std::size_t np = pl.points().size(), nl = pl.lines().size();
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b)
      expect(fails, pl.incidence_matrix().row_and_count(a, b) == 1,
             label + ": points " + show(a) + "," + show(b) + " lack a unique joining line");
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t b = a + 1; b < nl; ++b) {
      std::size_t common = 0;
      for (std::size_t p = 0; p < np; ++p)
        if (pl.incident(p, a) && pl.incident(p, b)) ++common;
      expect(fails, common == 1,
             label + ": lines " + show(a) + "," + show(b) + " meet in " + show(common) +
                 " points");
    }
}

void check_local_profile(std::vector<std::string>& fails, const char* spec, std::size_t classes,
                         unsigned per_line, unsigned nb_class, unsigned flag_nb) {
  RingPlane pl = build_plane(parse_ring_spec(spec));
  const PlaneParams& p = pl.params();
  expect(fails, p.point_count == classes,
         std::string(spec) + ": " + show(p.point_count) + " points, wanted " + show(classes));
  expect(fails, p.line_count == classes,
         std::string(spec) + ": " + show(p.line_count) + " lines, wanted " + show(classes));
  expect(fails, p.points_per_line == per_line, std::string(spec) + ": points per line");
  expect(fails, p.lines_per_point == per_line, std::string(spec) + ": lines per point");
  expect(fails, p.neighbor_class_size == nb_class, std::string(spec) + ": neighbor class");
  expect(fails, p.flag_neighbor_count == flag_nb, std::string(spec) + ": flag neighbors");
  expect(fails, p.t_divides_s == true, std::string(spec) + ": t | s");
  expect(fails, p.s_le_t2_or_t_is_1 == true, std::string(spec) + ": s <= t^2");
  expect(fails, p.counts_match_formula == true, std::string(spec) + ": count formula");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "field planes have q^2+q+1 classes with unique joins and meets", 1000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        for (unsigned q : {2u, 3u, 4u, 5u}) {
                          FiniteRing f = q == 4 ? gf(2, 2) : gf(q, 1);
                          RingPlane pl = build_plane(f);
                          std::size_t n = q * q + q + 1;
                          expect(fails, pl.points().size() == n,
                                 "q=" + show(q) + ": " + show(pl.points().size()) + " points");
                          expect(fails, pl.lines().size() == n,
                                 "q=" + show(q) + ": " + show(pl.lines().size()) + " lines");
                          unique_joins_and_meets(fails, pl, "q=" + show(q));
                        }
                      }});

  criteria.push_back({2, "the order-4 modular ring yields the 28-point plane over the binary field",
                      1000, [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        check_local_profile(fails, "zmod:4", 28, 6, 4, 2);
                        RingPlane pl = build_plane(zmod(4));
                        // every line through p carries exactly 2 points neighboring p
                        // (p itself included)
                        for (std::size_t p = 0; p < 28; ++p)
                          for (std::size_t l = 0; l < 28; ++l) {
                            if (!pl.incident(p, l)) continue;
                            unsigned nb = 0;
                            for (std::size_t q = 0; q < 28; ++q)
                              if (pl.incident(q, l) && pl.point_neighbors(p, q)) ++nb;
                            expect(fails, nb == 2,
                                   "line " + show(l) + " through point " + show(p) + " has " +
                                       show(nb) + " neighbors of it");
                          }
                        auto [qpl, rep] = epimorphism_check(pl);
                        expect(fails, qpl.points().size() == 7, "quotient plane size");
                        expect(fails, qpl.lines().size() == 7, "quotient plane line count");
                        unique_joins_and_meets(fails, qpl, "quotient");
                        expect(fails, rep.fiber_size == 4, "fiber size " + show(rep.fiber_size));
                        expect(fails, rep.fibers_uniform, "fibers not uniform");
                        expect(fails, rep.flag_biconditional, "flag biconditional");
                        expect(fails, rep.point_biconditional, "point biconditional");
                        expect(fails, rep.line_biconditional, "line biconditional");
                      }});

  criteria.push_back({3, "the order-4 truncated polynomial ring matches that profile yet is not isomorphic",
                      1000, [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        check_local_profile(fails, "ts:2,2,id", 28, 6, 4, 2);
                        expect(fails, !find_isomorphism(zmod(4), trunc_skew(2, 2, 0)).has_value(),
                               "the two order-4 chain rings came back isomorphic");
                      }});

  criteria.push_back({4, "order-9 chain rings give 117-class planes with 12 points per line", 5000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        check_local_profile(fails, "zmod:9", 117, 12, 9, 3);
                        check_local_profile(fails, "ts:3,2,id", 117, 12, 9, 3);
                        for (const char* spec : {"zmod:9", "ts:3,2,id"}) {
                          RingPlane pl = build_plane(parse_ring_spec(spec));
                          expect(fails, pl.params().s == 9, std::string(spec) + ": s");
                          expect(fails, pl.params().t == 3, std::string(spec) + ": t");
                        }
                      }});

  criteria.push_back({5, "the local non-chain ring's plane leaves some point pairs unjoined", 10000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        FiniteRing r = ixy(2, 2);
                        ClassificationReport cls = classify_case(r);
                        expect(fails, cls.label == RingCase::local_non_chain,
                               "classified " + to_string(cls.label));
                        RingPlane pl = build_plane(r);
                        expect(fails, pl.points().size() == 112,
                               show(pl.points().size()) + " points");
                        std::size_t s = r.order(), t = jacobson_radical(r).size();
                        expect(fails, (s * s * s - t * t * t) / (s - t) == pl.points().size(),
                               "formula count mismatch");
                        bool unjoined = false;
                        std::string witness;
                        for (std::size_t a = 0; a < 112 && !unjoined; ++a)
                          for (std::size_t b = a + 1; b < 112; ++b)
                            if (pl.incidence_matrix().row_and_count(a, b) == 0) {
                              unjoined = true;
                              witness = triple_to_string(pl.points()[a].rep) + " and " +
                                        triple_to_string(pl.points()[b].rep);
                              break;
                            }
                        expect(fails, unjoined, "no unjoined point pair found");
                        if (unjoined) notes.push_back("unjoined pair: " + witness);
                      }});

  criteria.push_back({6, "planes over the two non-local order-4 and order-16 rings", 60000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        FiniteRing b2 = double_numbers(2);
                        expect(fails, classify_case(b2).label == RingCase::semilocal_non_local,
                               "double:2 case");
                        RingPlane pb = build_plane(b2);
                        expect(fails, pb.points().size() == 49,
                               show(pb.points().size()) + " points over double:2");
                        bool triple_found = false;
                        std::string witness;
                        std::size_t n = pb.points().size();
                        for (std::size_t a = 0; a < n && !triple_found; ++a)
                          for (std::size_t b = 0; b < n && !triple_found; ++b) {
                            if (a == b || !pb.point_neighbors(a, b)) continue;
                            for (std::size_t c = 0; c < n; ++c)
                              if (c != a && c != b && pb.point_neighbors(b, c) &&
                                  !pb.point_neighbors(a, c)) {
                                triple_found = true;
                                witness = triple_to_string(pb.points()[a].rep) + " ~ " +
                                          triple_to_string(pb.points()[b].rep) + " ~ " +
                                          triple_to_string(pb.points()[c].rep);
                                break;
                              }
                          }
                        expect(fails, triple_found, "no transitivity failure found over double:2");
                        if (triple_found)
                          notes.push_back("neighbor chain without closure: " + witness);

                        FiniteRing m2 = matrix_ring(gf(2, 1), 2);
                        expect(fails, classify_case(m2).label == RingCase::semilocal_non_local,
                               "matrix ring case");
                        RingPlane pm = build_plane(m2);
                        expect(fails, pm.points().size() == 651,
                               show(pm.points().size()) + " points over the matrix ring");
                        expect(fails, gaussian_binomial(6, 2, 2) == 651,
                               "independent subspace count is not 651");
                        expect(fails, pm.points().size() == gaussian_binomial(6, 2, 2),
                               "plane size differs from the subspace count");
                      }});

  criteria.push_back({7, "the order-4 census finds exactly four rings with cases a,b,b,d", 5000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        std::vector<FiniteRing> four;
                        for (const std::string& spec : suite_corpus(16)) {
                          FiniteRing r = parse_ring_spec(spec);
                          if (r.order() == 4) four.push_back(std::move(r));
                        }
                        expect(fails, four.size() == 4,
                               show(four.size()) + " order-4 corpus entries");
                        for (std::size_t i = 0; i < four.size(); ++i)
                          for (std::size_t j = i + 1; j < four.size(); ++j)
                            expect(fails, !find_isomorphism(four[i], four[j]).has_value(),
                                   four[i].tag().spec + " isomorphic to " + four[j].tag().spec);
                        unsigned fields = 0, chains = 0, semis = 0;
                        for (const FiniteRing& r : four) {
                          switch (classify_case(r).label) {
                            case RingCase::field: ++fields; break;
                            case RingCase::chain: ++chains; break;
                            case RingCase::semilocal_non_local: ++semis; break;
                            default: break;
                          }
                        }
                        expect(fails, fields == 1 && chains == 2 && semis == 1,
                               "case multiset is not {field, chain, chain, semilocal}");
                      }});

  criteria.push_back({8, "carry-vector and unramified-chain rings are the expected classics", 10000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        expect(fails, find_isomorphism(witt2(2), zmod(4)).has_value(),
                               "witt:2 is not the order-4 modular ring");
                        expect(fails, find_isomorphism(witt2(3), zmod(9)).has_value(),
                               "witt:3 is not the order-9 modular ring");
                        expect(fails,
                               find_isomorphism(witt2(4), galois_ring(2, 2, 2)).has_value(),
                               "witt:4 is not gr:2,2,2");
                        expect(fails, find_isomorphism(galois_ring(2, 2, 1), zmod(4)).has_value(),
                               "gr:2,2,1 is not the order-4 modular ring");
                        expect(fails, find_isomorphism(galois_ring(2, 1, 2), gf(2, 2)).has_value(),
                               "gr:2,1,2 is not the order-4 field");
                      }});

  criteria.push_back({9, "chain = local + principal, and left/right chain agree, on every corpus ring",
                      60000, [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        for (const std::string& spec : suite_corpus(16)) {
                          FiniteRing r = parse_ring_spec(spec);
                          ChainReport ch = chain_report(r);
                          expect(fails, ch.left == ch.right, spec + ": one-sided chain");
                          bool lp = is_local(r) && is_pir(r);
                          expect(fails, ch.is_chain() == lp,
                                 spec + ": chain=" + (ch.is_chain() ? "yes" : "no") +
                                     " local+principal=" + (lp ? "yes" : "no"));
                        }
                      }});

  criteria.push_back({10, "counting and matrix-extension neighbor predicates agree on order <= 4 planes",
                      30000, [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        for (const std::string& spec : suite_corpus(16)) {
                          FiniteRing r = parse_ring_spec(spec);
                          if (r.order() > 4) continue;
                          RingPlane pl = build_plane(r);
                          const auto& pts = pl.points();
                          const auto& lns = pl.lines();
                          for (std::size_t a = 0; a < pts.size(); ++a)
                            for (std::size_t b = 0; b < pts.size(); ++b) {
                              if (a == b) continue;
                              expect(fails,
                                     pl.point_neighbors(a, b) ==
                                         neighbors_by_extension(r, pts[a].rep, pts[b].rep),
                                     spec + ": point pair " + show(a) + "," + show(b));
                            }
                          for (std::size_t a = 0; a < lns.size(); ++a)
                            for (std::size_t b = 0; b < lns.size(); ++b) {
                              if (a == b) continue;
                              expect(fails,
                                     pl.line_neighbors(a, b) ==
                                         neighbors_by_extension(r, lns[a].rep, lns[b].rep),
                                     spec + ": line pair " + show(a) + "," + show(b));
                            }
                        }
                      }});

  criteria.push_back({11, "the zero-divisor counting test detects localness across the corpus", 30000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        for (const std::string& spec : suite_corpus(16)) {
                          FiniteRing r = parse_ring_spec(spec);
                          ZeroDivisorLocalReport rep = zero_divisor_local_test(r);
                          bool field = zero_divisors(r).size() == 1;
                          if (field)
                            expect(fails, !rep.verdict && is_local(r), spec + ": field handling");
                          else
                            expect(fails, rep.verdict == is_local(r), spec + ": verdict");
                          if (rep.verdict)
                            expect(fails, rep.r == rep.m - rep.n,
                                   spec + ": r=" + show(rep.r) + " m=" + show(rep.m) +
                                       " n=" + show(rep.n));
                        }
                      }});

  criteria.push_back({12, "the general chain construction yields a third order-8 chain ring", 5000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
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
                        expect(fails, is_chain(e8), "not a chain ring");
                        expect(fails, ramification_index(e8) == 2,
                               "ramification " + show(ramification_index(e8)));
                        expect(fails, !find_isomorphism(e8, zmod(8)).has_value(),
                               "isomorphic to the modular ring");
                        expect(fails, !find_isomorphism(e8, trunc_skew(2, 3, 0)).has_value(),
                               "isomorphic to the truncated polynomial ring");
                      }});

  criteria.push_back({13, "the full invariant suite passes over the corpus", 300000,
                      [](std::vector<std::string>& fails, std::vector<std::string>& notes) {
                        SuiteResult res = run_suite({});
                        for (const SuiteCheck& c : res.checks)
                          expect(fails, c.pass, c.name + ": " + c.detail);
                      }});

  int passed = 0;
  for (const Criterion& c : criteria) {
    std::vector<std::string> fails, notes;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(fails, notes);
    } catch (const std::exception& e) {
      fails.push_back(std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    if (ms > c.limit_ms)
      fails.push_back("runtime " + std::to_string(ms) + " ms exceeds " +
                      std::to_string(c.limit_ms) + " ms");
    bool ok = fails.empty();
    passed += ok;
    std::printf("criterion %2d [%s] %7.0f ms  %s\n", c.num, ok ? "PASS" : "FAIL", ms,
                c.name.c_str());
    for (const std::string& n : notes) std::cout << "             " << n << "\n";
    for (std::size_t i = 0; i < fails.size() && i < 5; ++i)
      std::cout << "             " << fails[i] << "\n";
    if (fails.size() > 5)
      std::cout << "             (" << fails.size() - 5 << " more)\n";
  }
  std::printf("acceptance: %d/13 criteria passed\n", passed);
  return passed == 13 ? 0 : 1;
}
