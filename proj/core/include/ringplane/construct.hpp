#pragma once

#include <string>
#include <vector>

#include "ringplane/ring.hpp"

namespace ringplane {

// Z/n for n >= 2.
FiniteRing zmod(unsigned n, std::size_t max_order = kDefaultMaxOrder);

// GF(p^r). f = little-endian coefficients of a monic irreducible of degree r
// (length r+1, leading 1); empty picks the lexicographically least one by
// coefficient sequence (a0 major). Element index = sum c_i p^i.
FiniteRing gf(unsigned p, unsigned r, const std::vector<unsigned>& f = {},
              std::size_t max_order = kDefaultMaxOrder);

// Galois ring GR(q^n, p^n), q = p^r: Z/p^n[y] modulo the least monic lift of
// the default GF(p^r) irreducible. Order p^(nr), characteristic p^n,
// |radical| = p^((n-1)r).
FiniteRing galois_ring(unsigned p, unsigned n, unsigned r,
                       std::size_t max_order = kDefaultMaxOrder);

// Truncated twisted polynomial ring GF(q)[x;sigma]/(x^n) with x*a = sigma(a)*x,
// sigma = Frobenius^frob. frob is reduced mod k where q = p^k. n = 2 gives the
// (twisted) dual numbers.
FiniteRing trunc_skew(unsigned q, unsigned n, unsigned frob,
                      std::size_t max_order = kDefaultMaxOrder);

// Length-2 Witt vectors over GF(q): pairs with carry addition
// (x0,y0)+(x1,y1) = (x0+y0, x1+y1+C(x0,y0)), C = (X^p+Y^p-(X+Y)^p)/p mod p,
// multiplication (x0*y0, x0^p*y1 + x1*y0^p). Element index = x0 + q*x1.
FiniteRing witt2(unsigned q, std::size_t max_order = kDefaultMaxOrder);

// GF(q) + GF(q)t with t^2 = t (two maximal ideals). Index = a + q*b for a+bt.
FiniteRing double_numbers(unsigned q, std::size_t max_order = kDefaultMaxOrder);

// k x k matrices over r0, row-major positional index base |r0|.
FiniteRing matrix_ring(const FiniteRing& r0, unsigned k,
                       std::size_t max_order = kDefaultMaxOrder);

// GF(q)[x,y]/(x^n, xy, y^n): local, not a chain ring. Basis
// (1, x..x^(n-1), y..y^(n-1)), index little-endian base q. n >= 2.
FiniteRing ixy(unsigned q, unsigned n, std::size_t max_order = kDefaultMaxOrder);

// Chain ring S[x;sigma]/(g(x), p^(k-1)x^t) over S = GR(q^k, p^k), q = p^r,
// with g = x^s - p(a0 + a1 x + ... + a_{s-1} x^{s-1}), a0 a unit of S,
// n = (k-1)s + t, 1 <= t <= s <= n. Coefficients a_i are S element indices.
struct EisensteinSpec {
  unsigned p = 2, n = 1, r = 1, k = 1, s = 1, t = 1;
  unsigned frob = 0;
  std::vector<elem_t> a;
};
FiniteRing eisenstein_chain(const EisensteinSpec& es, std::size_t max_order = kDefaultMaxOrder);

// Lexicographically least monic irreducible of degree r over GF(p),
// little-endian, length r+1.
std::vector<unsigned> least_irreducible(unsigned p, unsigned r);

bool is_prime(unsigned n);

// Splits q into (p, k) with q = p^k, p prime; throws std::invalid_argument
// when q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q);

// Builds a ring from a spec string:
//   zmod:N | gf:P,R | gr:P,N,R | ts:Q,N,SIGMA | witt:Q | double:Q | ixy:Q,N
//   | mat:K(SPEC) | eis:P,N,R,K,S,T,SIGMA[A0,...] | sum(SPEC;SPEC) | file:PATH
// SIGMA = id | frob^E. Case-insensitive except file paths. Throws
// spec_parse_error with a byte position on bad input.
FiniteRing parse_ring_spec(const std::string& spec, std::size_t max_order = kDefaultMaxOrder);

}  // namespace ringplane
