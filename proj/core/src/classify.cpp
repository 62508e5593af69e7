#include "ringplane/classify.hpp"

#include <algorithm>
#include <map>

namespace ringplane {

namespace {

// order = p^e with p prime, or nullopt.
std::optional<std::pair<unsigned, unsigned>> prime_power_split(std::size_t n) {
  if (n < 2) return std::nullopt;
  unsigned p = 2;
  while (p * 1ull * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = static_cast<unsigned>(n);  // n prime
  unsigned e = 0;
  std::size_t m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, e);
}

std::vector<elem_t> nonunit_list(const FiniteRing& r) {
  const Bitset& u = unit_mask(r);
  std::vector<elem_t> nu;
  for (std::size_t x = 0; x < r.order(); ++x)
    if (!u.test(x)) nu.push_back(static_cast<elem_t>(x));
  return nu;
}

}  // namespace

std::string to_string(RingCase c) {
  switch (c) {
    case RingCase::field: return "field";
    case RingCase::chain: return "chain";
    case RingCase::local_non_chain: return "local_non_chain";
    default: return "semilocal_non_local";
  }
}

LocalReport local_report(const FiniteRing& r) {
  LocalReport rep;
  const Bitset& u = unit_mask(r);
  std::vector<elem_t> nu = nonunit_list(r);
  rep.nonunits_ideal = is_ideal(r, nu, Side::two_sided);

  rep.one_minus = true;
  for (std::size_t x = 0; x < r.order(); ++x) {
    elem_t xv = static_cast<elem_t>(x);
    if (!u.test(xv) && !u.test(r.sub(r.one(), xv))) {
      rep.one_minus = false;
      rep.witness = xv;
      break;
    }
  }

  const IdealSet& j = jacobson_radical(r);
  auto [q, pi] = quotient(r, j);
  (void)pi;
  rep.quotient_div = units(q).size() == q.order() - 1;

  if (rep.nonunits_ideal != rep.one_minus || rep.one_minus != rep.quotient_div)
    throw invariant_error("local characterizations disagree on ring " + r.tag().family);
  rep.is_local = rep.one_minus;
  return rep;
}

bool is_local(const FiniteRing& r) { return local_report(r).is_local; }

ChainReport chain_report(const FiniteRing& r) {
  const std::size_t m = r.order();
  BitMatrix right_mult(m, m), left_mult(m, m);  // right_mult row b = bR
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t x = 0; x < m; ++x) {
      right_mult.set(b, r.mul(static_cast<elem_t>(b), static_cast<elem_t>(x)));
      left_mult.set(b, r.mul(static_cast<elem_t>(x), static_cast<elem_t>(b)));
    }
  ChainReport rep;
  rep.right = true;
  rep.left = true;
  for (std::size_t a = 0; a < m && rep.right; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!right_mult.test(b, a) && !right_mult.test(a, b)) {
        rep.right = false;
        rep.witness = {static_cast<elem_t>(a), static_cast<elem_t>(b)};
        break;
      }
  for (std::size_t a = 0; a < m && rep.left; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!left_mult.test(b, a) && !left_mult.test(a, b)) {
        rep.left = false;
        if (!rep.witness) rep.witness = {static_cast<elem_t>(a), static_cast<elem_t>(b)};
        break;
      }
  if (rep.left != rep.right)
    throw invariant_error("left/right chain conditions disagree on a finite ring");
  return rep;
}

bool is_chain(const FiniteRing& r) { return chain_report(r).is_chain(); }

bool is_pir(const FiniteRing& r, std::size_t bound) {
  if (is_local(r)) {
    const IdealSet& j = jacobson_radical(r);
    Bitset jm(r.order());
    for (elem_t x : j.members) jm.set(x);
    auto principal = [&](bool right_side) {
      for (elem_t a : j.members) {
        bool all_in = true;
        Bitset hit(r.order());
        std::size_t n = 0;
        for (std::size_t x = 0; x < r.order() && all_in; ++x) {
          elem_t p = right_side ? r.mul(a, static_cast<elem_t>(x))
                                : r.mul(static_cast<elem_t>(x), a);
          if (!jm.test(p)) all_in = false;
          if (!hit.test(p)) {
            hit.set(p);
            ++n;
          }
        }
        if (all_in && n == j.members.size()) return true;
      }
      return false;
    };
    bool right_principal = principal(true);
    bool left_principal = principal(false);
    if (right_principal != left_principal)
      throw invariant_error("radical is principal on one side only in a finite local ring");
    return right_principal;
  }
  for (Side side : {Side::left, Side::right}) {
    for (const IdealSet& ideal : all_ideals(r, side, bound)) {
      bool principal = false;
      for (elem_t a : ideal.members) {
        if (generated_ideal(r, {a}, side).members == ideal.members) {
          principal = true;
          break;
        }
      }
      if (!principal) return false;
    }
  }
  return true;
}

LocalParams local_params(const FiniteRing& r) {
  if (!is_local(r)) throw std::invalid_argument("parameters require a local ring");
  const IdealSet& j = jacobson_radical(r);
  const std::size_t q_order = r.order() / j.size();
  if (r.order() % j.size() != 0)
    throw invariant_error("|J| does not divide |R| in a local ring");
  auto pp = prime_power_split(q_order);
  if (!pp) throw invariant_error("residue ring of a finite local ring has non-prime-power order");
  LocalParams out;
  out.p = pp->first;
  out.r = pp->second;
  // |R| = (p^r)^n
  std::size_t acc = 1;
  unsigned n = 0;
  while (acc < r.order()) {
    acc *= q_order;
    ++n;
  }
  if (acc != r.order())
    throw invariant_error("|R| is not a power of |R/J| in a local ring");
  out.n = n;
  auto cp = prime_power_split(characteristic(r));
  if (!cp || cp->first != out.p)
    throw invariant_error("characteristic is not a power of the residue prime");
  out.k = cp->second;
  if (out.k < 1 || out.k > out.n)
    throw invariant_error("characteristic exponent outside [1, n]");
  // |J| = p^((n-1)r)
  std::size_t expect_j = 1;
  for (unsigned i = 0; i < (out.n - 1) * out.r; ++i) expect_j *= out.p;
  if (j.size() != expect_j)
    throw invariant_error("|J| differs from p^((n-1)r) in a local ring");
  if (out.k == out.n && !r.commutative())
    throw invariant_error("k = n forces commutativity, but the ring is not commutative");
  out.nil_index = radical_nil_index(r);
  out.chain_consistent = out.n == out.nil_index;
  return out;
}

unsigned ramification_index(const FiniteRing& r) {
  ChainReport ch = chain_report(r);
  if (!ch.is_chain()) throw std::invalid_argument("ramification index requires a chain ring");
  LocalParams lp = local_params(r);
  elem_t pe = r.from_int(lp.p);
  std::vector<elem_t> p_ideal = generated_ideal(r, {pe}, Side::two_sided).members;
  const IdealSet& j = jacobson_radical(r);
  std::vector<elem_t> power = j.members;  // J^1
  for (unsigned s = 1; s <= lp.nil_index; ++s) {
    if (power == p_ideal) return s;
    std::vector<elem_t> prods;
    for (elem_t a : power)
      for (elem_t b : j.members) prods.push_back(r.mul(a, b));
    power = generated_ideal(r, prods, Side::two_sided).members;
  }
  throw invariant_error("(p) is not a power of J in a chain ring");
}

std::vector<FiniteRing> decompose_commutative(const FiniteRing& r) {
  if (!r.commutative())
    throw std::invalid_argument("decomposition requires a commutative ring");
  std::vector<elem_t> idem = idempotents(r);
  std::vector<elem_t> prim;
  for (elem_t e : idem) {
    if (e == r.zero()) continue;
    bool primitive = true;
    for (elem_t f : idem) {
      if (f == r.zero() || f == e) continue;
      if (r.mul(e, f) == f) {  // f lies under e
        primitive = false;
        break;
      }
    }
    if (primitive) prim.push_back(e);
  }
  // Primitive idempotents must be orthogonal and sum to 1.
  elem_t total = r.zero();
  for (std::size_t i = 0; i < prim.size(); ++i) {
    for (std::size_t j = i + 1; j < prim.size(); ++j)
      if (r.mul(prim[i], prim[j]) != r.zero())
        throw invariant_error("primitive idempotents are not orthogonal");
    total = r.add(total, prim[i]);
  }
  if (total != r.one())
    throw invariant_error("primitive idempotents do not sum to 1");

  struct Component {
    FiniteRing ring;
    std::vector<elem_t> members;  // parent elements, sorted; members[i] is element i
  };
  std::vector<Component> comps;
  for (elem_t e : prim) {
    Bitset in(r.order());
    std::vector<elem_t> members;
    for (std::size_t x = 0; x < r.order(); ++x) {
      elem_t v = r.mul(e, static_cast<elem_t>(x));
      if (!in.test(v)) {
        in.set(v);
        members.push_back(v);
      }
    }
    std::sort(members.begin(), members.end());
    const std::size_t n = members.size();
    auto pos = [&](elem_t v) {
      return static_cast<elem_t>(std::lower_bound(members.begin(), members.end(), v) -
                                 members.begin());
    };
    std::vector<elem_t> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = pos(r.add(members[a], members[b]));
        mul[a * n + b] = pos(r.mul(members[a], members[b]));
      }
    ConstructionTag tag;
    tag.family = "component";
    tag.params = {{"base", r.tag().spec.empty() ? r.tag().family : r.tag().spec},
                  {"idempotent", std::to_string(e)}};
    comps.push_back(Component{
        FiniteRing(n, pos(r.zero()), pos(e), std::move(add), std::move(mul), std::move(tag)),
        std::move(members)});
  }
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    if (a.ring.order() != b.ring.order()) return a.ring.order() < b.ring.order();
    return a.ring.mul_table() < b.ring.mul_table();
  });

  for (const Component& c : comps)
    if (!is_local(c.ring)) throw invariant_error("decomposition component is not local");
  std::size_t prod = 1;
  for (const Component& c : comps) prod *= c.ring.order();
  if (prod != r.order())
    throw invariant_error("component orders do not multiply to the ring order");

  // The canonical map x -> (e1 x, ..., eK x) must be an isomorphism onto the
  // assembled direct sum (built by left fold, row-major index pairing).
  if (comps.size() > 1) {
    FiniteRing assembled = comps[0].ring;
    for (std::size_t i = 1; i < comps.size(); ++i)
      assembled = direct_sum(assembled, comps[i].ring);
    RingMorphism f;
    f.map.resize(r.order());
    // each component's 1 as a parent element: members[] inverts the position map
    std::vector<elem_t> comp_idem(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
      comp_idem[i] = comps[i].members[comps[i].ring.one()];
    for (std::size_t x = 0; x < r.order(); ++x) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const Component& c = comps[i];
        elem_t proj = r.mul(comp_idem[i], static_cast<elem_t>(x));
        std::size_t pos = static_cast<std::size_t>(
            std::lower_bound(c.members.begin(), c.members.end(), proj) - c.members.begin());
        idx = idx * c.ring.order() + pos;
      }
      f.map[x] = static_cast<elem_t>(idx);
    }
    if (!is_isomorphism(r, assembled, f))
      throw invariant_error("canonical decomposition map is not an isomorphism");
  }

  std::vector<FiniteRing> out;
  out.reserve(comps.size());
  for (Component& c : comps) out.push_back(std::move(c.ring));
  return out;
}

ZeroDivisorLocalReport zero_divisor_local_test(const FiniteRing& r) {
  ZeroDivisorLocalReport rep;
  auto rp = prime_power_split(r.order());
  const auto& z = zero_divisors(r);
  bool field = z.size() == 1;
  if (!rp) {
    // Non-prime-power order can never be local.
    if (is_local(r)) throw invariant_error("local ring of non-prime-power order");
    return rep;
  }
  rep.p = rp->first;
  rep.m = rp->second;
  auto zp = prime_power_split(z.size());
  bool zmatch = z.size() == 1 || (zp && zp->first == rep.p);
  unsigned n = z.size() == 1 ? 0 : (zp ? zp->second : 0);
  rep.verdict = zmatch && n >= 1 && n < rep.m;
  if (rep.verdict) {
    rep.n = n;
    rep.r = rep.m - n;
    std::size_t expect_q = 1;
    for (unsigned i = 0; i < rep.r; ++i) expect_q *= rep.p;
    if (r.order() / jacobson_radical(r).size() != expect_q)
      throw invariant_error("counting test |R/J| differs from p^(m-n)");
  }
  if (!field && rep.verdict != is_local(r))
    throw invariant_error("zero-divisor counting test disagrees with localness");
  return rep;
}

ClassificationReport classify_case(const FiniteRing& r, std::size_t ideal_bound) {
  ClassificationReport rep;
  rep.local = local_report(r);
  rep.chain = chain_report(r);
  bool field = zero_divisors(r).size() == 1;
  if (rep.local.is_local) {
    rep.pir = is_pir(r, ideal_bound);
  } else {
    try {
      rep.pir = is_pir(r, ideal_bound);
    } catch (const capacity_error&) {
      rep.pir = std::nullopt;
    }
  }
  if (field)
    rep.label = RingCase::field;
  else if (rep.local.is_local)
    rep.label = *rep.pir ? RingCase::chain : RingCase::local_non_chain;
  else
    rep.label = RingCase::semilocal_non_local;
  if (rep.local.is_local) rep.params = local_params(r);
  if (rep.chain.is_chain()) rep.ramification = ramification_index(r);
  return rep;
}

}  // namespace ringplane
