#include "ringplane/construct.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ringplane/classify.hpp"
#include "ringplane/errors.hpp"
#include "ringplane/json_io.hpp"

namespace ringplane {

namespace {

// base^exp, saturating at cap+1 so callers can compare against cap.
std::size_t checked_pow(std::size_t base, unsigned exp, std::size_t cap) {
  std::size_t v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

void require_order(std::size_t order, std::size_t max_order, const std::string& family) {
  if (order > max_order)
    throw capacity_error(family + ": order exceeds the configured limit " +
                         std::to_string(max_order));
}

unsigned modpow(unsigned a, unsigned e, unsigned m) {
  unsigned long long v = 1, b = a % m;
  for (; e; e >>= 1) {
    if (e & 1) v = v * b % m;
    b = b * b % m;
  }
  return static_cast<unsigned>(v);
}

// ----------------------------------------------- polynomials over Z/M -------
// Little-endian coefficient vectors; trailing zeros allowed.

unsigned poly_deg(const std::vector<unsigned>& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i]) return static_cast<unsigned>(i);
  return 0;
}

bool poly_zero(const std::vector<unsigned>& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

std::vector<unsigned> poly_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                               unsigned M) {
  std::vector<unsigned> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<unsigned>((out[i + j] + 1ull * a[i] * b[j]) % M);
  }
  return out;
}

// Remainder of a modulo the monic polynomial f (deg f >= 1).
std::vector<unsigned> poly_rem(std::vector<unsigned> a, const std::vector<unsigned>& f,
                               unsigned M) {
  const unsigned d = poly_deg(f);
  if (a.size() > d)
    for (std::size_t i = a.size(); i-- > d;) {
      unsigned c = a[i];
      if (!c) continue;
      a[i] = 0;
      for (unsigned j = 0; j < d; ++j) {
        unsigned sub = static_cast<unsigned>(1ull * c * f[j] % M);
        a[i - d + j] = (a[i - d + j] + M - sub) % M;
      }
    }
  a.resize(std::max<std::size_t>(d, 1), 0);
  return a;
}

// Irreducibility over GF(p) by trial division with monic divisors of degree
// <= deg(f)/2. f must be monic of degree >= 1.
bool poly_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const unsigned r = poly_deg(f);
  if (r == 0) return false;
  if (r == 1) return true;
  for (unsigned d = 1; 2 * d <= r; ++d) {
    std::size_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<unsigned> g(d + 1, 0);
      g[d] = 1;
      std::size_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      if (poly_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

// -------------------------------------------------------- table builders ----

// Runs a full axiom audit on freshly built tables when the order is small
// enough for the cubic scan to be cheap.
FiniteRing finalize(FiniteRing r) {
  if (r.order() <= 256) {
    AxiomReport rep = check_axioms(r);
    if (!rep.pass)
      throw invariant_error("constructed tables violate axiom " + rep.axiom + " (family " +
                            r.tag().family + ")");
  }
  return r;
}

// Z/M[y] modulo a monic f of degree r: element index = sum of digits base M.
FiniteRing build_poly_quotient(unsigned M, const std::vector<unsigned>& f, unsigned r,
                               ConstructionTag tag, std::size_t max_order) {
  const std::size_t m = checked_pow(M, r, max_order);
  require_order(m, max_order, tag.family);
  auto decode = [&](std::size_t idx) {
    std::vector<unsigned> d(r);
    for (unsigned i = 0; i < r; ++i) {
      d[i] = static_cast<unsigned>(idx % M);
      idx /= M;
    }
    return d;
  };
  auto encode = [&](const std::vector<unsigned>& d) {
    std::size_t idx = 0;
    for (unsigned i = r; i-- > 0;) idx = idx * M + d[i] % M;
    return static_cast<elem_t>(idx);
  };
  std::vector<elem_t> add(m * m), mul(m * m);
  std::vector<std::vector<unsigned>> digs(m);
  for (std::size_t x = 0; x < m; ++x) digs[x] = decode(x);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<unsigned> s(r);
      for (unsigned i = 0; i < r; ++i) s[i] = (digs[x][i] + digs[y][i]) % M;
      add[x * m + y] = encode(s);
      std::vector<unsigned> pr = poly_rem(poly_mul(digs[x], digs[y], M), f, M);
      pr.resize(r, 0);
      mul[x * m + y] = encode(pr);
    }
  return FiniteRing(m, 0, 1, std::move(add), std::move(mul), std::move(tag));
}

// Galois ring Z/p^n[y]/(f) with f the least monic irreducible of degree r
// over GF(p), coefficients lifted as integers.
struct GRCtx {
  unsigned p = 2, n = 1, r = 1;
  unsigned M = 2;  // p^n, the coefficient modulus
  std::vector<unsigned> f;
  FiniteRing ring;

  std::vector<unsigned> digits(elem_t x) const {
    std::vector<unsigned> d(r);
    std::size_t v = x;
    for (unsigned i = 0; i < r; ++i) {
      d[i] = static_cast<unsigned>(v % M);
      v /= M;
    }
    return d;
  }
  elem_t enc(const std::vector<unsigned>& d) const {
    std::size_t idx = 0;
    for (unsigned i = r; i-- > 0;) idx = idx * M + d[i] % M;
    return static_cast<elem_t>(idx);
  }
};

GRCtx make_gr(unsigned p, unsigned n, unsigned r, std::size_t max_order, ConstructionTag tag) {
  if (!is_prime(p)) throw std::invalid_argument("galois ring: p must be prime");
  if (n < 1 || r < 1) throw std::invalid_argument("galois ring: n and r must be positive");
  std::size_t M = checked_pow(p, n, 65535);
  if (M > 65535) throw capacity_error("galois ring: coefficient modulus p^n exceeds 65535");
  std::vector<unsigned> f = least_irreducible(p, r);
  FiniteRing ring =
      build_poly_quotient(static_cast<unsigned>(M), f, r, std::move(tag), max_order);
  GRCtx ctx{p, n, r, static_cast<unsigned>(M), std::move(f), std::move(ring)};
  return ctx;
}

// The image of y in the quotient (reduced in case deg f = 1).
elem_t gr_y(const GRCtx& s) {
  std::vector<unsigned> y(s.r + 1, 0);
  y[1] = 1;
  std::vector<unsigned> red = poly_rem(y, s.f, s.M);
  red.resize(s.r, 0);
  return s.enc(red);
}

// Frobenius power: y maps to the unique root of f congruent to y^(p^e) mod p.
// Built by root matching and certified as an automorphism.
RingMorphism gr_frobenius(const GRCtx& s, unsigned e) {
  const FiniteRing& R = s.ring;
  std::vector<elem_t> roots;
  for (std::size_t x = 0; x < R.order(); ++x) {
    elem_t acc = R.from_int(s.f[s.r]);  // leading coefficient (1)
    for (unsigned j = s.r; j-- > 0;)
      acc = R.add(R.mul(acc, static_cast<elem_t>(x)), R.from_int(s.f[j]));
    if (acc == R.zero()) roots.push_back(static_cast<elem_t>(x));
  }
  if (roots.size() != s.r)
    throw invariant_error("galois ring: modulus does not have deg(f) roots");
  elem_t y = gr_y(s);
  // exponent p^e as a plain integer; e < r keeps it small
  unsigned long long pe = 1;
  for (unsigned i = 0; i < e % s.r; ++i) pe *= s.p;
  elem_t target = R.pow(y, static_cast<unsigned>(pe));
  elem_t xi = 0;
  bool found = false;
  for (elem_t root : roots) {
    std::vector<unsigned> d = s.digits(R.sub(root, target));
    bool cong = std::all_of(d.begin(), d.end(), [&](unsigned c) { return c % s.p == 0; });
    if (cong) {
      if (found) throw invariant_error("galois ring: Frobenius root is not unique");
      xi = root;
      found = true;
    }
  }
  if (!found) throw invariant_error("galois ring: no root matches y^(p^e) mod p");
  RingMorphism sig;
  sig.map.resize(R.order());
  for (std::size_t x = 0; x < R.order(); ++x) {
    std::vector<unsigned> d = s.digits(static_cast<elem_t>(x));
    elem_t acc = R.zero();
    for (unsigned j = s.r; j-- > 0;) acc = R.add(R.mul(acc, xi), R.from_int(d[j]));
    sig.map[x] = acc;
  }
  if (!is_isomorphism(R, R, sig))
    throw invariant_error("galois ring: Frobenius map is not an automorphism");
  return sig;
}

RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
  RingMorphism out;
  out.map.resize(f.map.size());
  for (std::size_t x = 0; x < f.map.size(); ++x) out.map[x] = g.map[f.map[x]];
  return out;
}

std::string sigma_name(unsigned e) {
  return e == 0 ? std::string("id") : "frob^" + std::to_string(e);
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; 1ull * d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power(unsigned q) {
  if (q < 2) throw std::invalid_argument("prime power expected, got " + std::to_string(q));
  unsigned p = 2;
  while (p * 1ull * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned k = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return {p, k};
}

std::vector<unsigned> least_irreducible(unsigned p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("least_irreducible: p must be prime");
  if (r < 1) throw std::invalid_argument("least_irreducible: degree must be positive");
  std::size_t count = 1;
  for (unsigned i = 0; i < r; ++i) count *= p;
  for (std::size_t code = 0; code < count; ++code) {
    // a0-major: the constant coefficient is the most significant digit
    std::vector<unsigned> f(r + 1, 0);
    f[r] = 1;
    std::size_t c = code;
    for (unsigned j = r; j-- > 0;) {
      f[j] = static_cast<unsigned>(c % p);
      c /= p;
    }
    if (poly_irreducible(f, p)) return f;
  }
  throw invariant_error("no irreducible polynomial found");  // unreachable
}

FiniteRing zmod(unsigned n, std::size_t max_order) {
  if (n < 2) throw std::invalid_argument("zmod: modulus must be at least 2");
  require_order(n, max_order, "zmod");
  std::vector<elem_t> add(std::size_t{n} * n), mul(std::size_t{n} * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<elem_t>((a + b) % n);
      mul[a * n + b] = static_cast<elem_t>(a * b % n);
    }
  ConstructionTag tag;
  tag.family = "zmod";
  tag.params = {{"n", std::to_string(n)}};
  tag.spec = "zmod:" + std::to_string(n);
  FiniteRing r = finalize(FiniteRing(n, 0, 1, std::move(add), std::move(mul), std::move(tag)));
  // Euler phi and squarefree-kernel checks pin the unit and radical sizes.
  unsigned phi = 0;
  for (unsigned x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) ++phi;
  if (units(r).size() != phi) throw invariant_error("zmod: unit count differs from phi(n)");
  unsigned rad = 1, m = n;
  for (unsigned d = 2; d <= m; ++d)
    if (m % d == 0) {
      rad *= d;
      while (m % d == 0) m /= d;
    }
  if (jacobson_radical(r).size() != n / rad)
    throw invariant_error("zmod: radical size differs from n over its squarefree kernel");
  return r;
}

FiniteRing gf(unsigned p, unsigned r, const std::vector<unsigned>& f_in,
              std::size_t max_order) {
  if (!is_prime(p)) throw std::invalid_argument("gf: p must be prime");
  if (r < 1) throw std::invalid_argument("gf: extension degree must be positive");
  require_order(checked_pow(p, r, max_order), max_order, "gf");
  std::vector<unsigned> f = f_in;
  bool custom = !f.empty();
  if (custom) {
    if (f.size() != r + 1 || f[r] != 1)
      throw std::invalid_argument("gf: modulus must be monic of degree r");
    for (unsigned c : f)
      if (c >= p) throw std::invalid_argument("gf: modulus coefficients must lie below p");
    if (!poly_irreducible(f, p)) throw std::invalid_argument("gf: modulus is reducible");
  } else {
    f = least_irreducible(p, r);
  }
  ConstructionTag tag;
  tag.family = "gf";
  tag.params = {{"p", std::to_string(p)}, {"r", std::to_string(r)}};
  if (!custom)
    tag.spec = r == 1 ? "gf:" + std::to_string(p)
                      : "gf:" + std::to_string(p) + "," + std::to_string(r);
  FiniteRing ring = finalize(build_poly_quotient(p, f, r, std::move(tag), max_order));
  if (units(ring).size() != ring.order() - 1)
    throw invariant_error("gf: a nonzero element is not invertible");
  return ring;
}

FiniteRing galois_ring(unsigned p, unsigned n, unsigned r, std::size_t max_order) {
  ConstructionTag tag;
  tag.family = "galois";
  tag.params = {{"p", std::to_string(p)}, {"n", std::to_string(n)}, {"r", std::to_string(r)}};
  tag.spec = "gr:" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(r);
  GRCtx ctx = make_gr(p, n, r, max_order, std::move(tag));
  FiniteRing ring = finalize(std::move(ctx.ring));
  if (characteristic(ring) != checked_pow(p, n, 65535))
    throw invariant_error("galois ring: characteristic is not p^n");
  const IdealSet& j = jacobson_radical(ring);
  if (j.size() != checked_pow(p, (n - 1) * r, 65536))
    throw invariant_error("galois ring: |J| differs from p^((n-1)r)");
  if (!(generated_ideal(ring, {ring.from_int(p)}, Side::two_sided) == j))
    throw invariant_error("galois ring: J is not generated by p");
  if (!is_local(ring)) throw invariant_error("galois ring: not local");
  return ring;
}

FiniteRing trunc_skew(unsigned q, unsigned n, unsigned frob, std::size_t max_order) {
  auto [p, k] = prime_power(q);
  if (n < 1) throw std::invalid_argument("trunc_skew: length must be positive");
  const unsigned e = frob % k;
  const std::size_t m = checked_pow(q, n, max_order);
  require_order(m, max_order, "trunc_skew");
  FiniteRing field = gf(p, k, {}, 65535);
  // sigma = Frobenius^e, certified as an automorphism of the field
  RingMorphism sig;
  sig.map.resize(q);
  unsigned pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  for (std::size_t x = 0; x < q; ++x)
    sig.map[x] = field.pow(static_cast<elem_t>(x), pe);
  if (!is_isomorphism(field, field, sig))
    throw invariant_error("trunc_skew: Frobenius power is not an automorphism");
  std::vector<RingMorphism> sig_pow(n);
  sig_pow[0].map.resize(q);
  for (std::size_t x = 0; x < q; ++x) sig_pow[0].map[x] = static_cast<elem_t>(x);
  for (unsigned i = 1; i < n; ++i) sig_pow[i] = compose(sig, sig_pow[i - 1]);

  auto decode = [&](std::size_t idx) {
    std::vector<elem_t> d(n);
    for (unsigned i = 0; i < n; ++i) {
      d[i] = static_cast<elem_t>(idx % q);
      idx /= q;
    }
    return d;
  };
  auto encode = [&](const std::vector<elem_t>& d) {
    std::size_t idx = 0;
    for (unsigned i = n; i-- > 0;) idx = idx * q + d[i];
    return static_cast<elem_t>(idx);
  };
  std::vector<std::vector<elem_t>> digs(m);
  for (std::size_t x = 0; x < m; ++x) digs[x] = decode(x);
  std::vector<elem_t> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<elem_t> s(n), pr(n, 0);
      for (unsigned i = 0; i < n; ++i) s[i] = field.add(digs[x][i], digs[y][i]);
      add[x * m + y] = encode(s);
      for (unsigned i = 0; i < n; ++i) {
        if (!digs[x][i]) continue;
        for (unsigned j = 0; i + j < n; ++j)
          pr[i + j] =
              field.add(pr[i + j], field.mul(digs[x][i], sig_pow[i].map[digs[y][j]]));
      }
      mul[x * m + y] = encode(pr);
    }
  ConstructionTag tag;
  tag.family = "trunc_skew";
  tag.params = {{"q", std::to_string(q)}, {"n", std::to_string(n)}, {"sigma", sigma_name(e)}};
  tag.spec = "ts:" + std::to_string(q) + "," + std::to_string(n) + "," + sigma_name(e);
  FiniteRing ring =
      finalize(FiniteRing(m, 0, 1, std::move(add), std::move(mul), std::move(tag)));
  if (characteristic(ring) != p) throw invariant_error("trunc_skew: characteristic is not p");
  if (jacobson_radical(ring).size() != m / q)
    throw invariant_error("trunc_skew: |J| differs from q^(n-1)");
  if (!is_chain(ring)) throw invariant_error("trunc_skew: not a chain ring");
  if (ring.commutative() != (n == 1 || e == 0))
    throw invariant_error("trunc_skew: commutativity does not match the twist");
  if (radical_nil_index(ring) != n)
    throw invariant_error("trunc_skew: radical nil index differs from n");
  return ring;
}

FiniteRing witt2(unsigned q, std::size_t max_order) {
  auto [p, k] = prime_power(q);
  const std::size_t m = checked_pow(q, 2, max_order);
  require_order(m, max_order, "witt2");
  FiniteRing field = gf(p, k, {}, 65535);
  // carry coefficients c_i = binom(p,i)/p mod p, built by the modular
  // recurrence c_1 = 1, c_{i+1} = c_i (p-i) / (i+1)
  std::vector<unsigned> carry_c(p, 0);
  if (p >= 2) {
    carry_c[1] = 1;
    for (unsigned i = 1; i + 1 < p; ++i)
      carry_c[i + 1] = static_cast<unsigned>(
          1ull * carry_c[i] * ((p - i) % p) % p * modpow(i + 1, p - 2, p) % p);
  }
  auto carry = [&](elem_t x, elem_t y) {
    elem_t acc = field.zero();
    for (unsigned i = 1; i < p; ++i) {
      if (!carry_c[i]) continue;
      elem_t term = field.mul(field.pow(x, i), field.pow(y, p - i));
      acc = field.add(acc, field.mul(field.from_int(carry_c[i]), term));
    }
    return field.neg(acc);
  };
  std::vector<elem_t> add(m * m), mul(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    elem_t a0 = static_cast<elem_t>(a % q), a1 = static_cast<elem_t>(a / q);
    for (std::size_t b = 0; b < m; ++b) {
      elem_t b0 = static_cast<elem_t>(b % q), b1 = static_cast<elem_t>(b / q);
      elem_t s0 = field.add(a0, b0);
      elem_t s1 = field.add(field.add(a1, b1), carry(a0, b0));
      add[a * m + b] = static_cast<elem_t>(s0 + std::size_t{q} * s1);
      elem_t m0 = field.mul(a0, b0);
      elem_t m1 = field.add(field.mul(field.pow(a0, p), b1), field.mul(a1, field.pow(b0, p)));
      mul[a * m + b] = static_cast<elem_t>(m0 + std::size_t{q} * m1);
    }
  }
  ConstructionTag tag;
  tag.family = "witt2";
  tag.params = {{"q", std::to_string(q)}};
  tag.spec = "witt:" + std::to_string(q);
  FiniteRing ring =
      finalize(FiniteRing(m, 0, 1, std::move(add), std::move(mul), std::move(tag)));
  if (!ring.commutative()) throw invariant_error("witt2: not commutative");
  if (characteristic(ring) != std::size_t{p} * p)
    throw invariant_error("witt2: characteristic is not p^2");
  if (jacobson_radical(ring).size() != q) throw invariant_error("witt2: |J| differs from q");
  if (!is_chain(ring)) throw invariant_error("witt2: not a chain ring");
  return ring;
}

FiniteRing double_numbers(unsigned q, std::size_t max_order) {
  auto [p, k] = prime_power(q);
  const std::size_t m = checked_pow(q, 2, max_order);
  require_order(m, max_order, "double");
  FiniteRing field = gf(p, k, {}, 65535);
  std::vector<elem_t> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    elem_t a = static_cast<elem_t>(x % q), b = static_cast<elem_t>(x / q);
    for (std::size_t y = 0; y < m; ++y) {
      elem_t c = static_cast<elem_t>(y % q), d = static_cast<elem_t>(y / q);
      add[x * m + y] =
          static_cast<elem_t>(field.add(a, c) + std::size_t{q} * field.add(b, d));
      // (a+bt)(c+dt) = ac + (ad+bc+bd)t since t^2 = t
      elem_t lin = field.add(field.add(field.mul(a, d), field.mul(b, c)), field.mul(b, d));
      mul[x * m + y] = static_cast<elem_t>(field.mul(a, c) + std::size_t{q} * lin);
    }
  }
  ConstructionTag tag;
  tag.family = "double";
  tag.params = {{"q", std::to_string(q)}};
  tag.spec = "double:" + std::to_string(q);
  FiniteRing ring =
      finalize(FiniteRing(m, 0, 1, std::move(add), std::move(mul), std::move(tag)));
  if (!ring.commutative()) throw invariant_error("double: not commutative");
  if (jacobson_radical(ring).size() != 1)
    throw invariant_error("double: radical is not trivial");
  if (idempotents(ring).size() != 4)
    throw invariant_error("double: idempotent count is not 4");
  if (is_local(ring)) throw invariant_error("double: unexpectedly local");
  if (units(ring).size() != std::size_t{q - 1} * (q - 1))
    throw invariant_error("double: unit count differs from (q-1)^2");
  return ring;
}

FiniteRing matrix_ring(const FiniteRing& r0, unsigned k, std::size_t max_order) {
  if (k < 1) throw std::invalid_argument("matrix_ring: dimension must be positive");
  const std::size_t m0 = r0.order();
  const std::size_t m = checked_pow(m0, k * k, max_order);
  require_order(m, max_order, "matrix_ring");
  const unsigned kk = k * k;
  auto decode = [&](std::size_t idx) {
    std::vector<elem_t> d(kk);
    for (unsigned i = 0; i < kk; ++i) {
      d[i] = static_cast<elem_t>(idx % m0);
      idx /= m0;
    }
    return d;  // d[i*k + j] is the (i,j) entry
  };
  auto encode = [&](const std::vector<elem_t>& d) {
    std::size_t idx = 0;
    for (unsigned i = kk; i-- > 0;) idx = idx * m0 + d[i];
    return static_cast<elem_t>(idx);
  };
  std::vector<std::vector<elem_t>> digs(m);
  for (std::size_t x = 0; x < m; ++x) digs[x] = decode(x);
  std::vector<elem_t> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<elem_t> s(kk), pr(kk);
      for (unsigned i = 0; i < kk; ++i) s[i] = r0.add(digs[x][i], digs[y][i]);
      add[x * m + y] = encode(s);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
          elem_t acc = r0.zero();
          for (unsigned l = 0; l < k; ++l)
            acc = r0.add(acc, r0.mul(digs[x][i * k + l], digs[y][l * k + j]));
          pr[i * k + j] = acc;
        }
      mul[x * m + y] = encode(pr);
    }
  std::vector<elem_t> ident(kk, r0.zero());
  for (unsigned i = 0; i < k; ++i) ident[i * k + i] = r0.one();
  ConstructionTag tag;
  tag.family = "matrix";
  std::string base = r0.tag().spec;
  tag.params = {{"k", std::to_string(k)}, {"base", base.empty() ? r0.tag().family : base}};
  if (!base.empty()) tag.spec = "mat:" + std::to_string(k) + "(" + base + ")";
  FiniteRing ring =
      finalize(FiniteRing(m, 0, encode(ident), std::move(add), std::move(mul), std::move(tag)));
  if (m <= 4096) {
    std::size_t jr = 1;
    for (unsigned i = 0; i < kk; ++i) jr *= jacobson_radical(r0).size();
    if (jacobson_radical(ring).size() != jr)
      throw invariant_error("matrix_ring: |J| differs from |J(base)|^(k^2)");
    if (zero_divisors(r0).size() == 1) {
      // base is a field: the unit group is the general linear group
      std::size_t gl = 1, qk = checked_pow(m0, k, m + 1), qi = 1;
      for (unsigned i = 0; i < k; ++i) {
        gl *= qk - qi;
        qi *= m0;
      }
      if (units(ring).size() != gl)
        throw invariant_error("matrix_ring: unit count differs from |GL_k|");
    }
  }
  return ring;
}

FiniteRing ixy(unsigned q, unsigned n, std::size_t max_order) {
  auto [p, k] = prime_power(q);
  if (n < 2) throw std::invalid_argument("ixy: n must be at least 2");
  const unsigned dim = 2 * n - 1;
  const std::size_t m = checked_pow(q, dim, max_order);
  require_order(m, max_order, "ixy");
  FiniteRing field = gf(p, k, {}, 65535);
  auto decode = [&](std::size_t idx) {
    std::vector<elem_t> d(dim);
    for (unsigned i = 0; i < dim; ++i) {
      d[i] = static_cast<elem_t>(idx % q);
      idx /= q;
    }
    return d;  // d[0]=const, d[1..n-1]=x powers, d[n..2n-2]=y powers
  };
  auto encode = [&](const std::vector<elem_t>& d) {
    std::size_t idx = 0;
    for (unsigned i = dim; i-- > 0;) idx = idx * q + d[i];
    return static_cast<elem_t>(idx);
  };
  std::vector<std::vector<elem_t>> digs(m);
  for (std::size_t x = 0; x < m; ++x) digs[x] = decode(x);
  std::vector<elem_t> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const auto& a = digs[x];
      const auto& b = digs[y];
      std::vector<elem_t> s(dim), pr(dim, 0);
      for (unsigned i = 0; i < dim; ++i) s[i] = field.add(a[i], b[i]);
      add[x * m + y] = encode(s);
      pr[0] = field.mul(a[0], b[0]);
      // x and y tracks convolve separately; every x^i y^j with i,j >= 1 dies
      for (unsigned t = 1; t < n; ++t) {
        elem_t cx = field.add(field.mul(a[0], b[t]), field.mul(a[t], b[0]));
        elem_t cy = field.add(field.mul(a[0], b[n - 1 + t]), field.mul(a[n - 1 + t], b[0]));
        for (unsigned i = 1; i < t; ++i) {
          cx = field.add(cx, field.mul(a[i], b[t - i]));
          cy = field.add(cy, field.mul(a[n - 1 + i], b[n - 1 + t - i]));
        }
        pr[t] = cx;
        pr[n - 1 + t] = cy;
      }
      mul[x * m + y] = encode(pr);
    }
  ConstructionTag tag;
  tag.family = "ixy";
  tag.params = {{"q", std::to_string(q)}, {"n", std::to_string(n)}};
  tag.spec = "ixy:" + std::to_string(q) + "," + std::to_string(n);
  FiniteRing ring =
      finalize(FiniteRing(m, 0, 1, std::move(add), std::move(mul), std::move(tag)));
  if (!ring.commutative()) throw invariant_error("ixy: not commutative");
  if (characteristic(ring) != p) throw invariant_error("ixy: characteristic is not p");
  if (jacobson_radical(ring).size() != m / q)
    throw invariant_error("ixy: |J| differs from q^(2n-2)");
  if (!is_local(ring)) throw invariant_error("ixy: not local");
  if (is_chain(ring)) throw invariant_error("ixy: unexpectedly a chain ring");
  if (radical_nil_index(ring) != n)
    throw invariant_error("ixy: radical nil index differs from n");
  return ring;
}

FiniteRing eisenstein_chain(const EisensteinSpec& es, std::size_t max_order) {
  if (!is_prime(es.p)) throw std::invalid_argument("eisenstein: p must be prime");
  if (es.r < 1 || es.k < 1 || es.s < 1 || es.t < 1)
    throw std::invalid_argument("eisenstein: r, k, s, t must be positive");
  if (es.t > es.s) throw std::invalid_argument("eisenstein: t must not exceed s");
  if (es.n != (es.k - 1) * es.s + es.t)
    throw std::invalid_argument("eisenstein: n must equal (k-1)s + t");
  if (es.a.empty() || es.a.size() > es.s)
    throw std::invalid_argument("eisenstein: need 1..s coefficients");
  const unsigned e = es.frob % es.r;

  ConstructionTag stag;
  stag.family = "galois";
  GRCtx S = make_gr(es.p, es.k, es.r, max_order, std::move(stag));
  const FiniteRing& SR = S.ring;
  const std::size_t Ms = SR.order();

  std::vector<elem_t> a(es.s, SR.zero());
  for (std::size_t i = 0; i < es.a.size(); ++i) {
    if (es.a[i] >= Ms)
      throw std::invalid_argument("eisenstein: coefficient index out of range");
    a[i] = es.a[i];
  }
  if (!SR.is_unit(a[0])) throw std::invalid_argument("eisenstein: a0 must be a unit");

  const std::size_t m = checked_pow(es.p, es.n * es.r, max_order);
  require_order(m, max_order, "eisenstein");

  const unsigned pk1 = static_cast<unsigned>(checked_pow(es.p, es.k - 1, 65535));
  const std::size_t low_radix = checked_pow(pk1, es.r, 65535);  // reps mod p^(k-1)

  std::vector<RingMorphism> sig(es.s);
  for (unsigned j = 0; j < es.s; ++j) sig[j] = gr_frobenius(S, (e * j) % es.r);

  elem_t p_elem = SR.from_int(es.p);
  std::vector<elem_t> pa(es.s);
  for (unsigned i = 0; i < es.s; ++i) pa[i] = SR.mul(p_elem, a[i]);

  // coefficient at positions >= t lives mod p^(k-1): digitwise reduction
  auto rho = [&](elem_t x) {
    std::vector<unsigned> d = S.digits(x);
    for (unsigned& c : d) c %= pk1;
    return S.enc(d);
  };
  auto compress = [&](elem_t x) {
    std::vector<unsigned> d = S.digits(x);
    std::size_t idx = 0;
    for (unsigned i = es.r; i-- > 0;) idx = idx * pk1 + d[i];
    return idx;
  };
  auto decompress = [&](std::size_t idx) {
    std::vector<unsigned> d(es.r);
    for (unsigned i = 0; i < es.r; ++i) {
      d[i] = static_cast<unsigned>(idx % pk1);
      idx /= pk1;
    }
    return S.enc(d);
  };
  auto decode = [&](std::size_t idx) {
    std::vector<elem_t> c(es.s);
    for (unsigned i = 0; i < es.s; ++i) {
      if (i < es.t) {
        c[i] = static_cast<elem_t>(idx % Ms);
        idx /= Ms;
      } else {
        c[i] = decompress(idx % low_radix);
        idx /= low_radix;
      }
    }
    return c;
  };
  auto encode = [&](const std::vector<elem_t>& c) {
    std::size_t idx = 0;
    for (unsigned i = es.s; i-- > 0;) {
      if (i < es.t)
        idx = idx * Ms + c[i];
      else
        idx = idx * low_radix + compress(rho(c[i]));
    }
    return static_cast<elem_t>(idx);
  };
  auto normalize = [&](std::vector<elem_t>& c) {
    for (unsigned i = es.t; i < es.s; ++i) c[i] = rho(c[i]);
  };
  // x^s = p(a0 + ... + a_{s-1}x^{s-1}); degrees >= s rewrite downward
  auto reduce = [&](std::vector<elem_t>& c) {
    for (unsigned deg = static_cast<unsigned>(c.size()); deg-- > es.s;) {
      elem_t v = c[deg];
      if (v == SR.zero()) continue;
      c[deg] = SR.zero();
      const unsigned shift = deg - es.s;
      for (unsigned i = 0; i < es.s; ++i) {
        elem_t term = SR.mul(v, sig[shift].map[pa[i]]);
        c[shift + i] = SR.add(c[shift + i], term);
      }
    }
    c.resize(es.s);
  };

  std::vector<std::vector<elem_t>> digs(m);
  for (std::size_t x = 0; x < m; ++x) digs[x] = decode(x);
  std::vector<elem_t> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<elem_t> s(es.s);
      for (unsigned i = 0; i < es.s; ++i) s[i] = SR.add(digs[x][i], digs[y][i]);
      normalize(s);
      add[x * m + y] = encode(s);
      std::vector<elem_t> pr(2 * es.s - 1, SR.zero());
      for (unsigned i = 0; i < es.s; ++i) {
        if (digs[x][i] == SR.zero()) continue;
        for (unsigned j = 0; j < es.s; ++j)
          pr[i + j] = SR.add(pr[i + j], SR.mul(digs[x][i], sig[i].map[digs[y][j]]));
      }
      reduce(pr);
      normalize(pr);
      mul[x * m + y] = encode(pr);
    }
  ConstructionTag tag;
  tag.family = "eisenstein";
  tag.params = {{"p", std::to_string(es.p)}, {"n", std::to_string(es.n)},
                {"r", std::to_string(es.r)}, {"k", std::to_string(es.k)},
                {"s", std::to_string(es.s)}, {"t", std::to_string(es.t)},
                {"sigma", sigma_name(e)}};
  // a spec string is emitted only when every coefficient is a constant, so
  // the CLI integer form reproduces the same ring
  bool spec_ok =
      std::all_of(a.begin(), a.end(), [&](elem_t c) { return c < S.M; });
  if (spec_ok) {
    std::string coeffs;
    std::size_t upto = a.size();
    while (upto > 1 && a[upto - 1] == 0) --upto;
    for (std::size_t i = 0; i < upto; ++i)
      coeffs += (i ? "," : "") + std::to_string(a[i]);
    tag.spec = "eis:" + std::to_string(es.p) + "," + std::to_string(es.n) + "," +
               std::to_string(es.r) + "," + std::to_string(es.k) + "," +
               std::to_string(es.s) + "," + std::to_string(es.t) + "," + sigma_name(e) + "[" +
               coeffs + "]";
  }
  FiniteRing ring =
      finalize(FiniteRing(m, 0, 1, std::move(add), std::move(mul), std::move(tag)));
  if (characteristic(ring) != checked_pow(es.p, es.k, 65536))
    throw invariant_error("eisenstein: characteristic is not p^k");
  const IdealSet& j = jacobson_radical(ring);
  if (j.size() != m / checked_pow(es.p, es.r, 65535))
    throw invariant_error("eisenstein: |J| differs from q^(n-1)");
  if (!is_chain(ring)) throw invariant_error("eisenstein: not a chain ring");
  if (radical_nil_index(ring) != es.n)
    throw invariant_error("eisenstein: radical nil index differs from n");
  if (ramification_index(ring) != es.s)
    throw invariant_error("eisenstein: ramification index differs from s");
  return ring;
}

// ------------------------------------------------------------ spec parser ---

namespace {

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t max_order;

  [[noreturn]] void fail(const std::string& msg) const {
    throw spec_parse_error(msg, s, pos);
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  unsigned number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<unsigned>(v);
  }
  std::string name() {
    std::size_t start = pos;
    while (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')
      ++pos;
    std::string out = s.substr(start, pos - start);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  }
  unsigned sigma() {
    std::size_t at = pos;
    std::string w = name();
    if (w == "id") return 0;
    if (w == "frob") {
      if (eat('^')) return number();
      return 1;
    }
    pos = at;
    fail("expected id or frob^E");
  }

  FiniteRing parse() {
    std::size_t at = pos;
    std::string fam = name();
    if (fam == "sum") {
      expect('(');
      FiniteRing lhs = parse();
      expect(';');
      FiniteRing rhs = parse();
      expect(')');
      return direct_sum(lhs, rhs);
    }
    if (fam == "file") {
      expect(':');
      std::size_t start = pos;
      while (!done() && peek() != ';' && peek() != ')') ++pos;
      std::string path = s.substr(start, pos - start);
      if (path.empty()) fail("expected a file path");
      return load_ring_file(path, max_order);
    }
    if (fam == "mat") {
      expect(':');
      unsigned k = number();
      expect('(');
      FiniteRing base = parse();
      expect(')');
      return matrix_ring(base, k, max_order);
    }
    expect(':');
    if (fam == "zmod") return zmod(number(), max_order);
    if (fam == "gf") {
      unsigned p = number();
      unsigned r = eat(',') ? number() : 1;
      return gf(p, r, {}, max_order);
    }
    if (fam == "gr") {
      unsigned p = number();
      expect(',');
      unsigned n = number();
      expect(',');
      unsigned r = number();
      return galois_ring(p, n, r, max_order);
    }
    if (fam == "ts") {
      unsigned q = number();
      expect(',');
      unsigned n = number();
      expect(',');
      unsigned e = sigma();
      return trunc_skew(q, n, e, max_order);
    }
    if (fam == "witt") return witt2(number(), max_order);
    if (fam == "double") return double_numbers(number(), max_order);
    if (fam == "ixy") {
      unsigned q = number();
      expect(',');
      unsigned n = number();
      return ixy(q, n, max_order);
    }
    if (fam == "eis") {
      EisensteinSpec es;
      es.p = number();
      expect(',');
      es.n = number();
      expect(',');
      es.r = number();
      expect(',');
      es.k = number();
      expect(',');
      es.s = number();
      expect(',');
      es.t = number();
      expect(',');
      es.frob = sigma();
      expect('[');
      es.a.push_back(static_cast<elem_t>(number()));
      while (eat(',')) es.a.push_back(static_cast<elem_t>(number()));
      expect(']');
      // integers name constant elements n*1 of the coefficient ring
      std::size_t M = checked_pow(es.p, es.k, 65535);
      for (elem_t& c : es.a) c = static_cast<elem_t>(c % M);
      return eisenstein_chain(es, max_order);
    }
    pos = at;
    fail("unknown ring family '" + fam + "'");
  }
};

}  // namespace

FiniteRing parse_ring_spec(const std::string& spec, std::size_t max_order) {
  SpecParser p{spec, 0, max_order};
  FiniteRing r = p.parse();
  if (!p.done()) p.fail("trailing characters after ring spec");
  return r;
}

}  // namespace ringplane
