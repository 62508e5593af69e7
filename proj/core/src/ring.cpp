#include "ringplane/ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ringplane {

namespace {

std::string elem_str(elem_t x) { return std::to_string(x); }

}  // namespace

std::string to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    default: return "two_sided";
  }
}

bool IdealSet::contains(elem_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

struct FiniteRing::Cache {
  std::mutex mu;
  std::optional<Bitset> unit_mask;
  std::optional<std::vector<elem_t>> units;
  std::optional<std::vector<elem_t>> zdivs;
  std::optional<IdealSet> radical;
  unsigned nil_index = 0;
  std::optional<unsigned> characteristic;
  std::optional<bool> commutative;
};

FiniteRing::FiniteRing(std::size_t order, elem_t zero, elem_t one, std::vector<elem_t> add,
                       std::vector<elem_t> mul, ConstructionTag tag)
    : m_(order),
      zero_(zero),
      one_(one),
      add_(std::move(add)),
      mul_(std::move(mul)),
      tag_(std::move(tag)),
      cache_(std::make_shared<Cache>()) {
  if (m_ < 2) throw std::invalid_argument("ring order must be at least 2");
  if (m_ > 65535) throw capacity_error("ring order " + std::to_string(m_) + " exceeds element type ceiling 65535");
  if (add_.size() != m_ * m_ || mul_.size() != m_ * m_)
    throw std::invalid_argument("table size does not match order");
  if (zero_ >= m_ || one_ >= m_ || zero_ == one_)
    throw std::invalid_argument("zero/one indices invalid");
  for (elem_t v : add_)
    if (v >= m_) throw std::invalid_argument("addition table entry out of range");
  for (elem_t v : mul_)
    if (v >= m_) throw std::invalid_argument("multiplication table entry out of range");
  neg_.assign(m_, 0);
  for (std::size_t a = 0; a < m_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m_; ++b)
      if (add_[a * m_ + b] == zero_) {
        neg_[a] = static_cast<elem_t>(b);
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("element " + std::to_string(a) + " has no additive inverse");
  }
}

elem_t FiniteRing::pow(elem_t a, unsigned k) const {
  elem_t acc = one_;
  for (unsigned i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

elem_t FiniteRing::from_int(long long n) const {
  long long c = characteristic(*this);
  long long nn = ((n % c) + c) % c;
  elem_t acc = zero_;
  for (long long i = 0; i < nn; ++i) acc = add(acc, one_);
  return acc;
}

bool FiniteRing::is_unit(elem_t x) const { return unit_mask(*this).test(x); }

bool FiniteRing::is_zero_divisor(elem_t x) const {
  const auto& z = zero_divisors(*this);
  return std::binary_search(z.begin(), z.end(), x);
}

bool FiniteRing::commutative() const { return commutative_impl(*this); }

// ---------------------------------------------------------------- axioms ----

AxiomReport check_axioms(std::size_t m, elem_t zero, elem_t one, const std::vector<elem_t>& add,
                         const std::vector<elem_t>& mul) {
  AxiomReport rep;
  auto fail = [&](const std::string& axiom, elem_t a, elem_t b, elem_t c,
                  const std::string& detail) {
    rep.pass = false;
    rep.axiom = axiom;
    rep.witness = {a, b, c};
    rep.detail = detail;
    return rep;
  };
  if (m == 0) return fail("shape", 0, 0, 0, "order is zero");
  if (add.size() != m * m || mul.size() != m * m)
    return fail("shape", 0, 0, 0, "table size does not match order");
  if (zero >= m || one >= m) return fail("shape", 0, 0, 0, "zero or one out of range");
  for (std::size_t i = 0; i < m * m; ++i) {
    if (add[i] >= m)
      return fail("shape", static_cast<elem_t>(i / m), static_cast<elem_t>(i % m), 0,
                  "addition entry out of range");
    if (mul[i] >= m)
      return fail("shape", static_cast<elem_t>(i / m), static_cast<elem_t>(i % m), 0,
                  "multiplication entry out of range");
  }
  if (zero == one) return fail("one_distinct_from_zero", zero, one, 0, "one equals zero");

  auto A = [&](std::size_t a, std::size_t b) { return add[a * m + b]; };
  auto M = [&](std::size_t a, std::size_t b) { return mul[a * m + b]; };

  for (std::size_t a = 0; a < m; ++a) {
    if (A(a, zero) != a || A(zero, a) != a)
      return fail("additive_identity", static_cast<elem_t>(a), zero, 0, "a + 0 != a");
  }
  for (std::size_t a = 0; a < m; ++a) {
    bool inv = false;
    for (std::size_t b = 0; b < m && !inv; ++b) inv = A(a, b) == zero;
    if (!inv)
      return fail("additive_inverse", static_cast<elem_t>(a), 0, 0, "no additive inverse");
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (A(a, b) != A(b, a))
        return fail("additive_commutativity", static_cast<elem_t>(a), static_cast<elem_t>(b), 0,
                    "a + b != b + a");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (A(A(a, b), c) != A(a, A(b, c)))
          return fail("additive_associativity", static_cast<elem_t>(a), static_cast<elem_t>(b),
                      static_cast<elem_t>(c), "(a+b)+c != a+(b+c)");
  for (std::size_t a = 0; a < m; ++a)
    if (M(a, one) != a || M(one, a) != a)
      return fail("multiplicative_identity", static_cast<elem_t>(a), one, 0, "a * 1 != a");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (M(M(a, b), c) != M(a, M(b, c)))
          return fail("multiplicative_associativity", static_cast<elem_t>(a),
                      static_cast<elem_t>(b), static_cast<elem_t>(c), "(ab)c != a(bc)");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          return fail("left_distributivity", static_cast<elem_t>(a), static_cast<elem_t>(b),
                      static_cast<elem_t>(c), "a(b+c) != ab+ac");
        if (M(A(a, b), c) != A(M(a, c), M(b, c)))
          return fail("right_distributivity", static_cast<elem_t>(a), static_cast<elem_t>(b),
                      static_cast<elem_t>(c), "(a+b)c != ac+bc");
      }
  return rep;
}

AxiomReport check_axioms(const FiniteRing& r) {
  return check_axioms(r.order(), r.zero(), r.one(), r.add_table(), r.mul_table());
}

// ----------------------------------------------------------------- units ----

const std::vector<elem_t>& units(const FiniteRing& r) {
  auto& c = *r.cache_;
  {
    std::lock_guard lk(c.mu);
    if (c.units) return *c.units;
  }
  const std::size_t m = r.order();
  Bitset right_inv(m), left_inv(m);  // right_inv: x with xy = 1 for some y
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (r.mul(static_cast<elem_t>(x), static_cast<elem_t>(y)) == r.one()) {
        right_inv.set(x);
        left_inv.set(y);
      }
  for (std::size_t x = 0; x < m; ++x)
    if (right_inv.test(x) != left_inv.test(x))
      throw invariant_error("one-sided invertible element in a finite ring: element " +
                            elem_str(static_cast<elem_t>(x)) + " of " + r.tag().family);
  std::vector<elem_t> u;
  for (std::size_t x = 0; x < m; ++x)
    if (right_inv.test(x)) u.push_back(static_cast<elem_t>(x));
  std::lock_guard lk(c.mu);
  if (!c.units) {
    c.unit_mask = std::move(right_inv);
    c.units = std::move(u);
  }
  return *c.units;
}

const Bitset& unit_mask(const FiniteRing& r) {
  units(r);
  std::lock_guard lk(r.cache_->mu);
  return *r.cache_->unit_mask;
}

// --------------------------------------------------------- zero divisors ----

const std::vector<elem_t>& zero_divisors(const FiniteRing& r) {
  auto& c = *r.cache_;
  {
    std::lock_guard lk(c.mu);
    if (c.zdivs) return *c.zdivs;
  }
  const std::size_t m = r.order();
  Bitset leftz(m), rightz(m);  // leftz: x with xy = 0 for some y != 0
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (r.mul(static_cast<elem_t>(x), static_cast<elem_t>(y)) != r.zero()) continue;
      if (y != r.zero()) leftz.set(x);
      if (x != r.zero()) rightz.set(y);
    }
  if (m >= 2) {
    leftz.set(r.zero());  // 0 * y = 0 with y != 0
    rightz.set(r.zero());
  }
  for (std::size_t x = 0; x < m; ++x)
    if (leftz.test(x) != rightz.test(x))
      throw invariant_error("one-sided zero divisor in a finite ring: element " +
                            elem_str(static_cast<elem_t>(x)));
  std::vector<elem_t> z;
  for (std::size_t x = 0; x < m; ++x)
    if (leftz.test(x)) z.push_back(static_cast<elem_t>(x));
  std::lock_guard lk(c.mu);
  if (!c.zdivs) c.zdivs = std::move(z);
  return *c.zdivs;
}

// -------------------------------------------------------- closures/ideals ----

namespace {

// Additive subgroup generated by the seed, as a sorted member list.
std::vector<elem_t> additive_closure(const FiniteRing& r, std::vector<elem_t> seed) {
  Bitset in(r.order());
  std::vector<elem_t> members;
  auto push = [&](elem_t x) {
    if (!in.test(x)) {
      in.set(x);
      members.push_back(x);
    }
  };
  push(r.zero());
  for (elem_t g : seed) push(g);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(r.add(members[i], members[j]));
  std::sort(members.begin(), members.end());
  return members;
}

bool absorbs(const FiniteRing& r, const Bitset& in, const std::vector<elem_t>& members,
             Side side) {
  for (elem_t x : members)
    for (std::size_t a = 0; a < r.order(); ++a) {
      elem_t av = static_cast<elem_t>(a);
      if ((side == Side::left || side == Side::two_sided) && !in.test(r.mul(av, x))) return false;
      if ((side == Side::right || side == Side::two_sided) && !in.test(r.mul(x, av))) return false;
    }
  return true;
}

Bitset member_mask(const FiniteRing& r, const std::vector<elem_t>& members) {
  Bitset in(r.order());
  for (elem_t x : members) in.set(x);
  return in;
}

std::vector<elem_t> nilpotent_set(const FiniteRing& r) {
  std::vector<elem_t> nil;
  for (std::size_t x = 0; x < r.order(); ++x) {
    Bitset seen(r.order());
    elem_t cur = static_cast<elem_t>(x);
    while (true) {
      if (cur == r.zero()) {
        nil.push_back(static_cast<elem_t>(x));
        break;
      }
      if (seen.test(cur)) break;
      seen.set(cur);
      cur = r.mul(cur, static_cast<elem_t>(x));
    }
  }
  return nil;
}

}  // namespace

bool is_ideal(const FiniteRing& r, const std::vector<elem_t>& members, Side side) {
  if (members.empty()) return false;
  Bitset in = member_mask(r, members);
  if (!in.test(r.zero())) return false;
  for (elem_t a : members)
    for (elem_t b : members)
      if (!in.test(r.add(a, b))) return false;
  return absorbs(r, in, members, side);
}

IdealSet generated_ideal(const FiniteRing& r, const std::vector<elem_t>& gens, Side side) {
  for (elem_t g : gens)
    if (g >= r.order()) throw std::invalid_argument("generator index out of range");
  std::vector<elem_t> members = additive_closure(r, gens);
  while (true) {
    Bitset in = member_mask(r, members);
    std::vector<elem_t> extra;
    for (elem_t x : members)
      for (std::size_t a = 0; a < r.order(); ++a) {
        elem_t av = static_cast<elem_t>(a);
        if (side == Side::left || side == Side::two_sided) {
          elem_t p = r.mul(av, x);
          if (!in.test(p)) {
            in.set(p);
            extra.push_back(p);
          }
        }
        if (side == Side::right || side == Side::two_sided) {
          elem_t p = r.mul(x, av);
          if (!in.test(p)) {
            in.set(p);
            extra.push_back(p);
          }
        }
      }
    if (extra.empty()) break;
    for (elem_t e : extra) members.push_back(e);
    members = additive_closure(r, members);
  }
  return IdealSet{side, members};
}

std::vector<IdealSet> all_ideals(const FiniteRing& r, Side side, std::size_t bound) {
  if (r.order() > bound)
    throw capacity_error("ideal enumeration bound " + std::to_string(bound) +
                         " exceeded by ring of order " + std::to_string(r.order()));
  // Every additive subgroup arises by repeatedly adjoining one element to {0}.
  std::set<std::vector<elem_t>> subgroups;
  std::vector<std::vector<elem_t>> queue;
  std::vector<elem_t> zero_only{r.zero()};
  subgroups.insert(zero_only);
  queue.push_back(zero_only);
  while (!queue.empty()) {
    std::vector<elem_t> h = std::move(queue.back());
    queue.pop_back();
    Bitset in = member_mask(r, h);
    for (std::size_t g = 0; g < r.order(); ++g) {
      if (in.test(g)) continue;
      std::vector<elem_t> seed = h;
      seed.push_back(static_cast<elem_t>(g));
      std::vector<elem_t> ext = additive_closure(r, seed);
      if (subgroups.insert(ext).second) queue.push_back(ext);
    }
  }
  std::vector<IdealSet> out;
  for (const auto& h : subgroups)
    if (is_ideal(r, h, side)) out.push_back(IdealSet{side, h});
  std::sort(out.begin(), out.end(), [](const IdealSet& a, const IdealSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

// --------------------------------------------------------------- radical ----

const IdealSet& jacobson_radical(const FiniteRing& r) {
  auto& c = *r.cache_;
  {
    std::lock_guard lk(c.mu);
    if (c.radical) return *c.radical;
  }
  const std::size_t m = r.order();
  const Bitset& u = unit_mask(r);
  // L = {y : 1 - a*y is a unit for every a}; already a two-sided ideal.
  Bitset lmask(m);
  for (std::size_t y = 0; y < m; ++y) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      ok = u.test(r.sub(r.one(), r.mul(static_cast<elem_t>(a), static_cast<elem_t>(y))));
    if (ok) lmask.set(y);
  }
  // Two-sided criterion {x : 1 - a*x*b a unit for all a,b} = {x : x*b in L for all b}.
  std::vector<elem_t> members;
  for (std::size_t x = 0; x < m; ++x) {
    bool ok = true;
    for (std::size_t b = 0; b < m && ok; ++b)
      ok = lmask.test(r.mul(static_cast<elem_t>(x), static_cast<elem_t>(b)));
    if (ok) members.push_back(static_cast<elem_t>(x));
  }
  Bitset jmask = member_mask(r, members);
  if (!(jmask == lmask))
    throw invariant_error("two-sided radical criterion disagrees with one-sided criterion");
  if (!is_ideal(r, members, Side::two_sided))
    throw invariant_error("radical is not a two-sided ideal");
  // Local shape: radical = non-units forces radical = nilpotents.
  bool radical_is_nonunits = true;
  for (std::size_t x = 0; x < m && radical_is_nonunits; ++x)
    radical_is_nonunits = jmask.test(x) != u.test(x);
  if (radical_is_nonunits) {
    std::vector<elem_t> nil = nilpotent_set(r);
    if (nil != members)
      throw invariant_error("local-shape radical differs from the nilpotent set");
  }
  // Nilpotency index: least k with J^k = 0.
  unsigned k = 1;
  std::vector<elem_t> cur = members;
  std::vector<elem_t> zero_only{r.zero()};
  while (cur != zero_only) {
    std::vector<elem_t> prods;
    for (elem_t a : cur)
      for (elem_t b : members) prods.push_back(r.mul(a, b));
    cur = additive_closure(r, prods);
    ++k;
    if (k > m + 1) throw invariant_error("radical failed to nilpotate within ring order");
  }
  std::lock_guard lk(c.mu);
  if (!c.radical) {
    c.radical = IdealSet{Side::two_sided, std::move(members)};
    c.nil_index = k;
  }
  return *c.radical;
}

unsigned radical_nil_index(const FiniteRing& r) {
  jacobson_radical(r);
  std::lock_guard lk(r.cache_->mu);
  return r.cache_->nil_index;
}

unsigned characteristic(const FiniteRing& r) {
  auto& c = *r.cache_;
  {
    std::lock_guard lk(c.mu);
    if (c.characteristic) return *c.characteristic;
  }
  unsigned n = 1;
  elem_t cur = r.one();
  while (cur != r.zero()) {
    cur = r.add(cur, r.one());
    ++n;
    if (n > r.order())
      throw invariant_error("characteristic exceeds ring order");
  }
  std::lock_guard lk(c.mu);
  if (!c.characteristic) c.characteristic = n;
  return *c.characteristic;
}

bool commutative_impl(const FiniteRing& r) {
  auto& c = *r.cache_;
  {
    std::lock_guard lk(c.mu);
    if (c.commutative) return *c.commutative;
  }
  bool comm = true;
  for (std::size_t a = 0; a < r.order() && comm; ++a)
    for (std::size_t b = a + 1; b < r.order() && comm; ++b)
      comm = r.mul(static_cast<elem_t>(a), static_cast<elem_t>(b)) ==
             r.mul(static_cast<elem_t>(b), static_cast<elem_t>(a));
  std::lock_guard lk(c.mu);
  if (!c.commutative) c.commutative = comm;
  return *c.commutative;
}

// -------------------------------------------------------------- quotient ----

std::pair<FiniteRing, RingMorphism> quotient(const FiniteRing& r, const IdealSet& ideal) {
  if (!is_ideal(r, ideal.members, Side::two_sided))
    throw std::invalid_argument("quotient requires a two-sided ideal");
  if (ideal.members.size() >= r.order())
    throw std::invalid_argument("quotient requires a proper ideal");
  const std::size_t m = r.order();
  std::vector<elem_t> rep(m);
  for (std::size_t x = 0; x < m; ++x) {
    elem_t best = static_cast<elem_t>(m - 1);
    bool first = true;
    for (elem_t i : ideal.members) {
      elem_t v = r.add(static_cast<elem_t>(x), i);
      if (first || v < best) {
        best = v;
        first = false;
      }
    }
    rep[x] = best;
  }
  std::vector<elem_t> reps;
  for (std::size_t x = 0; x < m; ++x)
    if (rep[x] == x) reps.push_back(static_cast<elem_t>(x));
  std::vector<elem_t> class_of(m);
  for (std::size_t x = 0; x < m; ++x)
    class_of[x] = static_cast<elem_t>(
        std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  const std::size_t q = reps.size();
  std::vector<elem_t> qadd(q * q), qmul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      qadd[a * q + b] = class_of[r.add(reps[a], reps[b])];
      qmul[a * q + b] = class_of[r.mul(reps[a], reps[b])];
    }
  ConstructionTag tag;
  tag.family = "quotient";
  tag.params = {{"base", r.tag().spec.empty() ? r.tag().family : r.tag().spec},
                {"ideal_size", std::to_string(ideal.members.size())}};
  FiniteRing qr(q, class_of[r.zero()], class_of[r.one()], std::move(qadd), std::move(qmul),
                std::move(tag));
  RingMorphism pi{std::move(class_of)};
  return {std::move(qr), std::move(pi)};
}

// ------------------------------------------------------------ direct sum ----

FiniteRing direct_sum(const FiniteRing& r, const FiniteRing& s) {
  const std::size_t mr = r.order(), ms = s.order(), m = mr * ms;
  if (m > 65535)
    throw capacity_error("direct sum order " + std::to_string(m) + " exceeds ceiling 65535");
  auto idx = [&](std::size_t a, std::size_t b) { return a * ms + b; };
  std::vector<elem_t> add(m * m), mul(m * m);
  for (std::size_t a1 = 0; a1 < mr; ++a1)
    for (std::size_t a2 = 0; a2 < ms; ++a2)
      for (std::size_t b1 = 0; b1 < mr; ++b1)
        for (std::size_t b2 = 0; b2 < ms; ++b2) {
          std::size_t a = idx(a1, a2), b = idx(b1, b2);
          add[a * m + b] = static_cast<elem_t>(
              idx(r.add(static_cast<elem_t>(a1), static_cast<elem_t>(b1)),
                  s.add(static_cast<elem_t>(a2), static_cast<elem_t>(b2))));
          mul[a * m + b] = static_cast<elem_t>(
              idx(r.mul(static_cast<elem_t>(a1), static_cast<elem_t>(b1)),
                  s.mul(static_cast<elem_t>(a2), static_cast<elem_t>(b2))));
        }
  ConstructionTag tag;
  tag.family = "direct_sum";
  std::string lhs = r.tag().spec.empty() ? r.tag().family : r.tag().spec;
  std::string rhs = s.tag().spec.empty() ? s.tag().family : s.tag().spec;
  tag.params = {{"left", lhs}, {"right", rhs}};
  if (!r.tag().spec.empty() && !s.tag().spec.empty())
    tag.spec = "sum(" + r.tag().spec + ";" + s.tag().spec + ")";
  return FiniteRing(m, static_cast<elem_t>(idx(r.zero(), s.zero())),
                    static_cast<elem_t>(idx(r.one(), s.one())), std::move(add), std::move(mul),
                    std::move(tag));
}

FiniteRing opposite(const FiniteRing& r) {
  const std::size_t m = r.order();
  std::vector<elem_t> mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      mul[a * m + b] = r.mul(static_cast<elem_t>(b), static_cast<elem_t>(a));
  ConstructionTag tag;
  tag.family = "opposite";
  tag.params = {{"base", r.tag().spec.empty() ? r.tag().family : r.tag().spec}};
  return FiniteRing(m, r.zero(), r.one(), r.add_table(), std::move(mul), std::move(tag));
}

std::vector<elem_t> idempotents(const FiniteRing& r) {
  std::vector<elem_t> e;
  for (std::size_t x = 0; x < r.order(); ++x)
    if (r.mul(static_cast<elem_t>(x), static_cast<elem_t>(x)) == x)
      e.push_back(static_cast<elem_t>(x));
  return e;
}

// ---------------------------------------------------------- isomorphisms ----

namespace {

// Per-element invariants preserved by any isomorphism.
struct Profile {
  unsigned add_order = 0;
  unsigned nil_deg = 0;  // 0 when not nilpotent
  bool unit = false;
  unsigned unit_order = 0;
  bool idem = false;
  bool in_radical = false;
  bool zdiv = false;
  bool central = false;
  std::size_t left_multiples = 0;   // |Rx|
  std::size_t right_multiples = 0;  // |xR|

  auto key() const {
    return std::tuple(add_order, nil_deg, unit, unit_order, idem, in_radical, zdiv, central,
                      left_multiples, right_multiples);
  }
  bool operator==(const Profile& o) const { return key() == o.key(); }
  bool operator<(const Profile& o) const { return key() < o.key(); }
};

std::vector<Profile> element_profiles(const FiniteRing& r) {
  const std::size_t m = r.order();
  const Bitset& u = unit_mask(r);
  const IdealSet& j = jacobson_radical(r);
  const auto& z = zero_divisors(r);
  std::vector<Profile> out(m);
  for (std::size_t xi = 0; xi < m; ++xi) {
    elem_t x = static_cast<elem_t>(xi);
    Profile& p = out[xi];
    elem_t cur = x;
    p.add_order = 1;
    while (cur != r.zero()) {
      cur = r.add(cur, x);
      ++p.add_order;
    }
    Bitset seen(m);
    cur = x;
    unsigned deg = 1;
    while (true) {
      if (cur == r.zero()) {
        p.nil_deg = deg;
        break;
      }
      if (seen.test(cur)) break;
      seen.set(cur);
      cur = r.mul(cur, x);
      ++deg;
    }
    p.unit = u.test(xi);
    if (p.unit) {
      cur = x;
      p.unit_order = 1;
      while (cur != r.one()) {
        cur = r.mul(cur, x);
        ++p.unit_order;
      }
    }
    p.idem = r.mul(x, x) == x;
    p.in_radical = j.contains(x);
    p.zdiv = std::binary_search(z.begin(), z.end(), x);
    p.central = true;
    for (std::size_t a = 0; a < m && p.central; ++a)
      p.central = r.mul(x, static_cast<elem_t>(a)) == r.mul(static_cast<elem_t>(a), x);
    Bitset lm(m), rm(m);
    for (std::size_t a = 0; a < m; ++a) {
      lm.set(r.mul(static_cast<elem_t>(a), x));
      rm.set(r.mul(x, static_cast<elem_t>(a)));
    }
    p.left_multiples = lm.count();
    p.right_multiples = rm.count();
  }
  return out;
}

// Expression DAG: how each element of R is reached from 0, 1 and generators.
struct Expr {
  enum Kind { zero, one, gen, add, mul } kind;
  std::size_t a = 0, b = 0;  // gen slot, or operand element indices
};

// Grows closure from the current known set, recording expressions in
// discovery order. Returns elements in discovery order.
void grow_closure(const FiniteRing& r, std::vector<elem_t>& order, std::vector<Expr>& expr,
                  Bitset& known) {
  std::size_t i = 0;
  while (i < order.size()) {
    elem_t x = order[i];
    for (std::size_t j = 0; j <= i; ++j) {
      elem_t y = order[j];
      struct Cand {
        elem_t v;
        Expr e;
      };
      Cand cands[4] = {
          {r.add(x, y), {Expr::add, x, y}},
          {r.add(y, x), {Expr::add, y, x}},
          {r.mul(x, y), {Expr::mul, x, y}},
          {r.mul(y, x), {Expr::mul, y, x}},
      };
      for (const auto& cd : cands)
        if (!known.test(cd.v)) {
          known.set(cd.v);
          expr[cd.v] = cd.e;
          order.push_back(cd.v);
        }
    }
    ++i;
  }
}

struct GenStage {
  elem_t gen;                     // generator adjoined at this stage
  std::vector<elem_t> discovered; // elements first reachable at this stage, discovery order
};

}  // namespace

bool is_isomorphism(const FiniteRing& src, const FiniteRing& dst, const RingMorphism& f) {
  const std::size_t m = src.order();
  if (dst.order() != m || f.map.size() != m) return false;
  Bitset hit(m);
  for (elem_t v : f.map) {
    if (v >= m || hit.test(v)) return false;
    hit.set(v);
  }
  if (f.map[src.one()] != dst.one() || f.map[src.zero()] != dst.zero()) return false;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      elem_t av = static_cast<elem_t>(a), bv = static_cast<elem_t>(b);
      if (f.map[src.add(av, bv)] != dst.add(f.map[a], f.map[b])) return false;
      if (f.map[src.mul(av, bv)] != dst.mul(f.map[a], f.map[b])) return false;
    }
  return true;
}

std::optional<RingMorphism> find_isomorphism(const FiniteRing& r, const FiniteRing& s,
                                             std::size_t bound) {
  if (r.order() > bound || s.order() > bound)
    throw capacity_error("isomorphism search bound " + std::to_string(bound) +
                         " exceeded (orders " + std::to_string(r.order()) + ", " +
                         std::to_string(s.order()) + ")");
  const std::size_t m = r.order();
  if (s.order() != m) return std::nullopt;
  if (characteristic(r) != characteristic(s)) return std::nullopt;
  if (units(r).size() != units(s).size()) return std::nullopt;
  if (jacobson_radical(r).size() != jacobson_radical(s).size()) return std::nullopt;
  if (radical_nil_index(r) != radical_nil_index(s)) return std::nullopt;
  if (zero_divisors(r).size() != zero_divisors(s).size()) return std::nullopt;
  if (idempotents(r).size() != idempotents(s).size()) return std::nullopt;
  if (r.commutative() != s.commutative()) return std::nullopt;

  std::vector<Profile> pr = element_profiles(r), ps = element_profiles(s);
  {
    std::vector<Profile> a = pr, b = ps;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (!(a == b)) return std::nullopt;
  }

  // Generator stages: adjoin least element outside the generated subring.
  std::vector<Expr> expr(m);
  std::vector<elem_t> order;
  Bitset known(m);
  known.set(r.zero());
  expr[r.zero()] = {Expr::zero, 0, 0};
  order.push_back(r.zero());
  if (!known.test(r.one())) {
    known.set(r.one());
    expr[r.one()] = {Expr::one, 0, 0};
    order.push_back(r.one());
  }
  std::vector<GenStage> stages;
  {
    std::size_t base = 0;
    grow_closure(r, order, expr, known);
    stages.push_back(GenStage{0, {order.begin(), order.end()}});  // stage 0: prime subring
    base = order.size();
    while (order.size() < m) {
      elem_t g = 0;
      for (std::size_t x = 0; x < m; ++x)
        if (!known.test(x)) {
          g = static_cast<elem_t>(x);
          break;
        }
      known.set(g);
      expr[g] = {Expr::gen, stages.size() - 1, 0};  // gen slot index
      order.push_back(g);
      grow_closure(r, order, expr, known);
      stages.push_back(GenStage{g, {order.begin() + base, order.end()}});
      base = order.size();
    }
  }
  const std::size_t ngens = stages.size() - 1;

  // Candidate images per generator: profile-matched elements of s.
  std::vector<std::vector<elem_t>> cands(ngens);
  for (std::size_t k = 0; k < ngens; ++k) {
    const Profile& want = pr[stages[k + 1].gen];
    for (std::size_t y = 0; y < m; ++y)
      if (ps[y] == want) cands[k].push_back(static_cast<elem_t>(y));
  }

  std::vector<elem_t> img(m, 0);
  Bitset used(m);
  std::vector<bool> assigned(m, false);

  // Evaluate one stage of expressions under the current assignment; returns
  // false (and rolls back nothing; caller tracks) on collision or profile
  // mismatch. Elements touched are appended to `touched`.
  auto eval_stage = [&](const GenStage& st, std::size_t slot, elem_t gen_img,
                        std::vector<elem_t>& touched) -> bool {
    (void)slot;
    for (elem_t x : st.discovered) {
      const Expr& e = expr[x];
      elem_t v;
      switch (e.kind) {
        case Expr::zero: v = s.zero(); break;
        case Expr::one: v = s.one(); break;
        case Expr::gen: v = gen_img; break;
        case Expr::add: v = s.add(img[e.a], img[e.b]); break;
        default: v = s.mul(img[e.a], img[e.b]); break;
      }
      if (!(ps[v] == pr[x])) return false;
      if (used.test(v)) return false;
      used.set(v);
      img[x] = v;
      assigned[x] = true;
      touched.push_back(x);
    }
    return true;
  };

  std::vector<std::vector<elem_t>> touched_per_depth(ngens + 1);
  // Stage 0 (prime subring) has no generator choice.
  {
    std::vector<elem_t>& t = touched_per_depth[0];
    if (!eval_stage(stages[0], 0, 0, t)) return std::nullopt;
  }

  std::optional<RingMorphism> found;
  auto rollback = [&](std::vector<elem_t>& t) {
    for (elem_t x : t) {
      used.reset(img[x]);
      assigned[x] = false;
    }
    t.clear();
  };

  std::vector<std::size_t> choice(ngens, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == ngens) {
      RingMorphism f{img};
      if (is_isomorphism(r, s, f)) {
        found = std::move(f);
        break;
      }
      // dead end despite full assignment: backtrack
      if (ngens == 0) break;
      --depth;
      rollback(touched_per_depth[depth + 1]);
      ++choice[depth];
      continue;
    }
    bool advanced = false;
    while (choice[depth] < cands[depth].size()) {
      elem_t gi = cands[depth][choice[depth]];
      if (used.test(gi)) {
        ++choice[depth];
        continue;
      }
      std::vector<elem_t>& t = touched_per_depth[depth + 1];
      if (eval_stage(stages[depth + 1], depth, gi, t)) {
        advanced = true;
        break;
      }
      rollback(t);
      ++choice[depth];
    }
    if (advanced) {
      ++depth;
      if (depth < ngens) choice[depth] = 0;
      continue;
    }
    if (depth == 0) break;
    --depth;
    rollback(touched_per_depth[depth + 1]);
    ++choice[depth];
  }
  return found;
}

}  // namespace ringplane
