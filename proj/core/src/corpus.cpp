#include "ringplane/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ringplane/classify.hpp"
#include "ringplane/construct.hpp"
#include "ringplane/errors.hpp"
#include "ringplane/json_io.hpp"
#include "ringplane/plane.hpp"

namespace ringplane {

namespace {

bool is_prime_power_of(std::size_t o, unsigned p, unsigned* exp = nullptr) {
  unsigned e = 0;
  std::size_t m = o;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (exp) *exp = e;
  return m == 1 && e > 0;
}

std::vector<unsigned> primes_upto(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::vector<unsigned> prime_powers_upto(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= n; ++q) {
    try {
      prime_power(q);
      out.push_back(q);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_corpus(std::size_t max_order) {
  if (max_order < 4) throw std::invalid_argument("suite_corpus: max_order must be at least 4");
  std::vector<std::string> out;
  std::vector<unsigned> primes = primes_upto(max_order);
  std::vector<unsigned> ppowers = prime_powers_upto(max_order);

  for (std::size_t o = 2; o <= max_order; ++o) {
    out.push_back("zmod:" + std::to_string(o));
    if (o == 4) {
      // the four order-4 rings, pinned: Z/4 above, then these three
      out.push_back("gf:2,2");
      out.push_back("ts:2,2,id");
      out.push_back("double:2");
      continue;
    }
    if (o <= 4) continue;
    // gf: proper extensions only (prime fields already appear as Z/p)
    for (unsigned p : primes)
      for (unsigned r = 2;; ++r) {
        std::size_t v = 1;
        for (unsigned i = 0; i < r && v <= o; ++i) v *= p;
        if (v > o) break;
        if (v == o) out.push_back("gf:" + std::to_string(p) + "," + std::to_string(r));
      }
    for (unsigned p : primes)
      for (unsigned n = 2; ; ++n) {
        std::size_t pn = 1;
        for (unsigned i = 0; i < n && pn <= o; ++i) pn *= p;
        if (pn > o) break;
        for (unsigned r = 1;; ++r) {
          std::size_t v = 1;
          for (unsigned i = 0; i < n * r && v <= o; ++i) v *= p;
          if (v > o) break;
          if (v == o)
            out.push_back("gr:" + std::to_string(p) + "," + std::to_string(n) + "," +
                          std::to_string(r));
        }
      }
    for (unsigned q : ppowers)
      for (unsigned n = 2;; ++n) {
        std::size_t v = 1;
        for (unsigned i = 0; i < n && v <= o; ++i) v *= q;
        if (v > o) break;
        if (v == o) {
          unsigned k = prime_power(q).second;
          for (unsigned e = 0; e < k; ++e)
            out.push_back("ts:" + std::to_string(q) + "," + std::to_string(n) + "," +
                          (e == 0 ? "id" : "frob^" + std::to_string(e)));
        }
      }
    for (unsigned q : ppowers)
      if (std::size_t{q} * q == o) out.push_back("witt:" + std::to_string(q));
    for (unsigned q : ppowers)
      if (std::size_t{q} * q == o) out.push_back("double:" + std::to_string(q));
    for (unsigned q : ppowers)
      for (unsigned n = 2;; ++n) {
        std::size_t v = 1;
        for (unsigned i = 0; i < 2 * n - 1 && v <= o; ++i) v *= q;
        if (v > o) break;
        if (v == o) out.push_back("ixy:" + std::to_string(q) + "," + std::to_string(n));
      }
    for (unsigned k = 2;; ++k) {
      if (std::size_t{1} << (k * k) > o) break;  // smallest base is GF(2)
      for (unsigned q : ppowers) {
        std::size_t v = 1;
        bool over = false;
        for (unsigned i = 0; i < k * k && !over; ++i) {
          if (v > o / q) over = true;
          v *= q;
        }
        if (!over && v == o) {
          auto [p, r] = prime_power(q);
          std::string base = r == 1 ? "gf:" + std::to_string(p)
                                    : "gf:" + std::to_string(p) + "," + std::to_string(r);
          out.push_back("mat:" + std::to_string(k) + "(" + base + ")");
        }
      }
    }
    // one fixed Eisenstein family: k=2, s=2, r=1, identity twist, g = x^2 - p
    for (unsigned p : primes)
      for (unsigned t = 1; t <= 2; ++t) {
        std::size_t v = 1;
        for (unsigned i = 0; i < 2 + t; ++i) {
          if (v > o) break;
          v *= p;
        }
        if (v == o)
          out.push_back("eis:" + std::to_string(p) + "," + std::to_string(2 + t) +
                        ",1,2,2," + std::to_string(t) + ",id[1]");
      }
  }
  return out;
}

namespace {

struct Subject {
  std::string spec;
  std::optional<FiniteRing> ring;
  std::optional<RingPlane> plane;
  std::string build_error;
};

struct Agg {
  std::string name;
  bool pass = true;
  std::string detail;
  std::size_t n = 0;

  void ok() { ++n; }
  void fail(const std::string& d) {
    ++n;
    if (pass) {
      pass = false;
      detail = d;
    }
  }
  SuiteCheck done() const {
    SuiteCheck c;
    c.name = name;
    c.pass = pass;
    c.detail = pass ? std::to_string(n) + " subjects" : detail;
    return c;
  }
};

FiniteRing corrupt_ring(const FiniteRing& r) {
  const std::size_t m = r.order();
  std::vector<elem_t> mul = r.mul_table();
  elem_t& cell = mul[(m - 1) * m + (m - 1)];
  cell = static_cast<elem_t>((cell + 1) % m);
  ConstructionTag tag = r.tag();
  tag.params.emplace_back("corrupted", "mul");
  return FiniteRing(m, r.zero(), r.one(), r.add_table(), std::move(mul), std::move(tag));
}

// Runs body for every subject with a usable ring; exceptions become failures.
void per_ring(std::vector<Subject>& subjects, Agg& agg,
              const std::function<void(Subject&)>& body) {
  for (Subject& s : subjects) {
    if (!s.ring) continue;
    try {
      body(s);
      agg.ok();
    } catch (const std::exception& e) {
      agg.fail(s.spec + ": " + e.what());
    }
  }
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& opts) {
  SuiteResult result;
  std::vector<std::string> specs = suite_corpus(opts.max_order);
  std::vector<Subject> subjects;
  for (const std::string& spec : specs) {
    Subject s;
    s.spec = spec;
    try {
      s.ring = parse_ring_spec(spec, opts.max_order);
    } catch (const std::exception& e) {
      s.build_error = e.what();
    }
    subjects.push_back(std::move(s));
  }
  {
    Agg a{"corpus entries construct"};
    for (Subject& s : subjects) {
      if (s.ring)
        a.ok();
      else
        a.fail(s.spec + ": " + s.build_error);
    }
    result.checks.push_back(a.done());
  }
  if (opts.corrupt_index) {
    std::size_t i = *opts.corrupt_index;
    if (i >= subjects.size())
      throw std::invalid_argument("corrupt index exceeds the corpus size " +
                                  std::to_string(subjects.size()));
    if (subjects[i].ring) subjects[i].ring = corrupt_ring(*subjects[i].ring);
  }

  std::map<std::string, std::size_t> by_spec;
  for (std::size_t i = 0; i < subjects.size(); ++i) by_spec[subjects[i].spec] = i;

  {
    Agg a{"ring axioms hold"};
    for (Subject& s : subjects) {
      if (!s.ring) continue;
      AxiomReport rep = check_axioms(*s.ring);
      if (rep.pass) {
        a.ok();
      } else {
        a.fail(s.spec + ": axiom " + rep.axiom + " fails at (" +
               std::to_string(rep.witness[0]) + "," + std::to_string(rep.witness[1]) + "," +
               std::to_string(rep.witness[2]) + ")");
        s.ring.reset();  // exclude broken tables from the remaining checks
      }
    }
    result.checks.push_back(a.done());
  }

  {
    Agg a{"units and zero divisors partition the ring"};
    per_ring(subjects, a, [](Subject& s) {
      const FiniteRing& r = *s.ring;
      if (units(r).size() + zero_divisors(r).size() != r.order())
        throw verification_error("unit/zero-divisor partition fails");
      for (elem_t u : units(r))
        if (r.is_zero_divisor(u)) throw verification_error("a unit divides zero");
    });
    result.checks.push_back(a.done());
  }
  {
    Agg a{"radical vanishes in the radical quotient"};
    per_ring(subjects, a, [](Subject& s) {
      auto [q, pi] = quotient(*s.ring, jacobson_radical(*s.ring));
      (void)pi;
      if (jacobson_radical(q).size() != 1)
        throw verification_error("J(R/J) is not trivial");
    });
    result.checks.push_back(a.done());
  }
  {
    Agg a{"isomorphism search finds the identity case"};
    std::size_t bound = std::max(kDefaultIsoBound, opts.max_order);
    per_ring(subjects, a, [bound](Subject& s) {
      if (!find_isomorphism(*s.ring, *s.ring, bound))
        throw verification_error("no self-isomorphism found");
    });
    result.checks.push_back(a.done());
  }
  {
    Agg a{"chain condition is left-right symmetric"};
    per_ring(subjects, a, [](Subject& s) {
      ChainReport rep = chain_report(*s.ring);
      if (rep.left != rep.right) throw verification_error("one-sided chain condition");
    });
    result.checks.push_back(a.done());
  }
  {
    Agg a{"chain rings are exactly the local principal ideal rings"};
    per_ring(subjects, a, [](Subject& s) {
      bool chain = is_chain(*s.ring);
      bool lp = is_local(*s.ring) && is_pir(*s.ring);
      if (chain != lp)
        throw verification_error(std::string("chain=") + (chain ? "true" : "false") +
                                 " local&pir=" + (lp ? "true" : "false"));
    });
    result.checks.push_back(a.done());
  }
  {
    Agg a{"local parameter identities"};
    per_ring(subjects, a, [](Subject& s) {
      const FiniteRing& r = *s.ring;
      if (!is_local(r)) return;
      LocalParams lp = local_params(r);
      std::size_t q = 1;
      for (unsigned i = 0; i < lp.r; ++i) q *= lp.p;
      std::size_t order = 1;
      for (unsigned i = 0; i < lp.n; ++i) order *= q;
      if (order != r.order()) throw verification_error("|R| != q^n");
      if (lp.chain_consistent != is_chain(r))
        throw verification_error("n == nil index does not characterize the chain case");
    });
    result.checks.push_back(a.done());
  }
  {
    Agg a{"zero-divisor count locates local rings"};
    per_ring(subjects, a, [](Subject& s) {
      const FiniteRing& r = *s.ring;
      ZeroDivisorLocalReport rep = zero_divisor_local_test(r);
      bool field = zero_divisors(r).size() == 1;
      if (!field && rep.p != 0 && rep.verdict != is_local(r))
        throw verification_error("counting test disagrees with localness");
      if (rep.verdict && rep.r + rep.n != rep.m)
        throw verification_error("r != m - n in the counting test");
    });
    result.checks.push_back(a.done());
  }
  {
    Agg a{"commutative rings split into local factors"};
    per_ring(subjects, a, [](Subject& s) {
      const FiniteRing& r = *s.ring;
      if (!r.commutative()) return;
      std::vector<FiniteRing> parts = decompose_commutative(r);
      std::size_t prod = 1;
      for (const FiniteRing& c : parts) prod *= c.order();
      if (prod != r.order()) throw verification_error("component orders do not multiply up");
      for (const FiniteRing& c : parts)
        if (!is_local(c)) throw verification_error("a component is not local");
    });
    result.checks.push_back(a.done());
  }
  {
    Agg a{"direct sums multiply unit and idempotent counts"};
    const char* pairs[][2] = {{"zmod:2", "zmod:3"}, {"zmod:4", "gf:2,2"}, {"double:2", "zmod:3"}};
    for (auto& pr : pairs) {
      try {
        FiniteRing x = parse_ring_spec(pr[0]);
        FiniteRing y = parse_ring_spec(pr[1]);
        FiniteRing s = direct_sum(x, y);
        bool ok = s.order() == x.order() * y.order() &&
                  units(s).size() == units(x).size() * units(y).size() &&
                  idempotents(s).size() == idempotents(x).size() * idempotents(y).size();
        if (ok)
          a.ok();
        else
          a.fail(std::string(pr[0]) + " + " + pr[1] + ": an invariant is not multiplicative");
      } catch (const std::exception& e) {
        a.fail(std::string(pr[0]) + " + " + pr[1] + ": " + e.what());
      }
    }
    result.checks.push_back(a.done());
  }
  {
    Agg a{"order-4 census: four rings, cases a b b d"};
    const char* four[] = {"gf:2,2", "zmod:4", "ts:2,2,id", "double:2"};
    const RingCase expect[] = {RingCase::field, RingCase::chain, RingCase::chain,
                               RingCase::semilocal_non_local};
    try {
      std::vector<const FiniteRing*> rings;
      for (const char* spec : four) {
        auto it = by_spec.find(spec);
        if (it == by_spec.end() || !subjects[it->second].ring)
          throw verification_error(std::string("corpus is missing ") + spec);
        rings.push_back(&*subjects[it->second].ring);
      }
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          if (find_isomorphism(*rings[i], *rings[j]))
            throw verification_error(std::string(four[i]) + " and " + four[j] +
                                     " are isomorphic");
      for (std::size_t i = 0; i < 4; ++i)
        if (classify_case(*rings[i]).label != expect[i])
          throw verification_error(std::string(four[i]) + " has an unexpected case label");
      // no fifth class: every order-4 corpus entry matches one of the four
      for (Subject& s : subjects) {
        if (!s.ring || s.ring->order() != 4) continue;
        bool matched = false;
        for (const FiniteRing* c : rings)
          if (find_isomorphism(*s.ring, *c)) {
            matched = true;
            break;
          }
        if (!matched)
          throw verification_error(s.spec + " matches none of the four order-4 rings");
      }
      a.ok();
    } catch (const std::exception& e) {
      a.fail(e.what());
    }
    result.checks.push_back(a.done());
  }
  {
    Agg a{"Witt and Galois identifications"};
    auto expect_iso = [&](const std::string& what, const FiniteRing& x, const FiniteRing& y) {
      if (!find_isomorphism(x, y)) throw verification_error(what + ": no isomorphism found");
    };
    try {
      expect_iso("witt:2 = zmod:4", witt2(2), zmod(4));
      expect_iso("gr:2,2,1 = zmod:4", galois_ring(2, 2, 1), zmod(4));
      expect_iso("gr:2,1,2 = gf:2,2", galois_ring(2, 1, 2), gf(2, 2));
      if (opts.max_order >= 9) expect_iso("witt:3 = zmod:9", witt2(3), zmod(9));
      if (opts.max_order >= 16) expect_iso("witt:4 = gr:2,2,2", witt2(4), galois_ring(2, 2, 2));
      a.ok();
    } catch (const std::exception& e) {
      a.fail(e.what());
    }
    result.checks.push_back(a.done());
  }
  if (opts.max_order >= 8) {
    Agg a{"order-8 chain rings of distinct type stay distinct"};
    try {
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
      if (characteristic(e8) != 4) throw verification_error("eis ring characteristic is not 4");
      if (ramification_index(e8) != 2) throw verification_error("eis ramification is not 2");
      if (find_isomorphism(e8, zmod(8)))
        throw verification_error("eis ring is isomorphic to zmod:8");
      if (find_isomorphism(e8, trunc_skew(2, 3, 0)))
        throw verification_error("eis ring is isomorphic to ts:2,3,id");
      a.ok();
    } catch (const std::exception& e) {
      a.fail(e.what());
    }
    result.checks.push_back(a.done());
  }

  // planes
  {
    Agg a{"planes build within budget"};
    PlaneOptions popts;
    popts.triple_budget = opts.triple_budget;
    popts.workers = opts.workers;
    for (Subject& s : subjects) {
      if (!s.ring) continue;
      try {
        s.plane = build_plane(*s.ring, popts);
        a.ok();
      } catch (const std::exception& e) {
        a.fail(s.spec + ": " + e.what());
      }
    }
    result.checks.push_back(a.done());
  }
  auto per_plane = [&](Agg& a, const std::function<void(Subject&)>& body) {
    for (Subject& s : subjects) {
      if (!s.plane) continue;
      try {
        body(s);
        a.ok();
      } catch (const std::exception& e) {
        a.fail(s.spec + ": " + e.what());
      }
    }
    result.checks.push_back(a.done());
  };
  {
    Agg a{"scaling orbits have unit-group size"};
    per_plane(a, [](Subject& s) {
      std::size_t u = units(*s.ring).size();
      for (const ProjClass& c : s.plane->points())
        if (c.orbit.size() != u) throw verification_error("a point orbit has the wrong size");
      for (const ProjClass& c : s.plane->lines())
        if (c.orbit.size() != u) throw verification_error("a line orbit has the wrong size");
    });
  }
  {
    Agg a{"incidence is representative independent"};
    per_plane(a, [](Subject& s) {
      if (!check_orbit_independence(*s.plane))
        throw verification_error("a verdict depends on the representative");
    });
  }
  {
    Agg a{"incidence implies flag neighborhood"};
    per_plane(a, [](Subject& s) {
      for (std::size_t p = 0; p < s.plane->points().size(); ++p)
        for (std::size_t l = 0; l < s.plane->lines().size(); ++l)
          if (s.plane->incident(p, l) && !s.plane->flag_neighbor(p, l))
            throw verification_error("an incident pair is not flag-neighboring");
    });
  }
  {
    Agg a{"neighbor relations are reflexive and symmetric"};
    per_plane(a, [](Subject& s) {
      const BitMatrix& pn = s.plane->point_neighbor_matrix();
      for (std::size_t p = 0; p < pn.rows(); ++p) {
        if (!pn.test(p, p)) throw verification_error("point neighbors are not reflexive");
        for (std::size_t q = 0; q < p; ++q)
          if (pn.test(p, q) != pn.test(q, p))
            throw verification_error("point neighbors are not symmetric");
      }
      const BitMatrix& ln = s.plane->line_neighbor_matrix();
      for (std::size_t l = 0; l < ln.rows(); ++l) {
        if (!ln.test(l, l)) throw verification_error("line neighbors are not reflexive");
        for (std::size_t k = 0; k < l; ++k)
          if (ln.test(l, k) != ln.test(k, l))
            throw verification_error("line neighbors are not symmetric");
      }
    });
  }
  {
    Agg a{"class counts agree with the direct triple scan"};
    per_plane(a, [](Subject& s) {
      const FiniteRing& r = *s.ring;
      const std::size_t m = r.order();
      std::size_t left = 0, right = 0;
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
          for (std::size_t z = 0; z < m; ++z) {
            Triple t{static_cast<elem_t>(x), static_cast<elem_t>(y), static_cast<elem_t>(z)};
            if (is_left_unimodular(r, t)) ++left;
            if (is_right_unimodular(r, t)) ++right;
          }
      std::size_t u = units(r).size();
      if (left != s.plane->points().size() * u)
        throw verification_error("left-unimodular triple count mismatch");
      if (right != s.plane->lines().size() * u)
        throw verification_error("right-unimodular triple count mismatch");
    });
  }
  {
    Agg a{"theorem battery agrees on every plane"};
    per_plane(a, [](Subject& s) {
      TheoremReport rep = verify_theorems(*s.plane);
      for (const TheoremCheck& c : rep.checks)
        if (c.applicable && !c.agree)
          throw verification_error("check " + c.id +
                                   (c.witness.empty() ? "" : ": " + c.witness));
    });
  }
  {
    Agg a{"radical quotient maps planes compatibly"};
    per_plane(a, [](Subject& s) {
      if (!s.plane->local()) return;
      auto [qp, rep] = epimorphism_check(*s.plane);
      (void)qp;
      if (!rep.pass()) throw verification_error("an epimorphism biconditional fails");
      std::size_t t = jacobson_radical(*s.ring).size();
      if (rep.fiber_size != t * t) throw verification_error("fiber size is not t^2");
    });
  }
  {
    Agg a{"commutative planes are self-dual"};
    per_plane(a, [](Subject& s) {
      if (!s.ring->commutative()) return;
      const auto& pts = s.plane->points();
      const auto& lns = s.plane->lines();
      if (pts.size() != lns.size()) throw verification_error("point and line counts differ");
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].rep != lns[i].rep)
          throw verification_error("point and line representatives differ");
    });
  }
  {
    Agg a{"field planes have q^2+q+1 classes and unique joins"};
    per_plane(a, [](Subject& s) {
      if (zero_divisors(*s.ring).size() != 1) return;
      std::size_t q = s.ring->order();
      if (s.plane->points().size() != q * q + q + 1 ||
          s.plane->lines().size() != q * q + q + 1)
        throw verification_error("class count differs from q^2+q+1");
      const BitMatrix& inc = s.plane->incidence_matrix();
      for (std::size_t p = 0; p < inc.rows(); ++p)
        for (std::size_t r2 = p + 1; r2 < inc.rows(); ++r2)
          if (inc.row_and_count(p, r2) != 1)
            throw verification_error("two points without a unique joining line");
    });
  }
  return result;
}

}  // namespace ringplane
