#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringplane/ring.hpp"

namespace ringplane {

// Three characterizations of localness, all evaluated; they must agree.
//   nonunits_ideal: the non-units form a two-sided ideal
//   one_minus:      for every r, r or 1-r is a unit
//   quotient_div:   R/J is a division ring
// witness: element r with both r and 1-r non-units (when one_minus fails).
struct LocalReport {
  bool is_local = false;
  bool nonunits_ideal = false;
  bool one_minus = false;
  bool quotient_div = false;
  std::optional<elem_t> witness;
};
LocalReport local_report(const FiniteRing& r);
bool is_local(const FiniteRing& r);

// Chain condition: any two elements are comparable under divisibility on the
// given side (a in bR or b in aR; dually Ra/Rb). Left and right verdicts must
// agree for finite rings. witness: an incomparable pair when not a chain.
struct ChainReport {
  bool left = false;
  bool right = false;
  std::optional<std::pair<elem_t, elem_t>> witness;
  bool is_chain() const { return left && right; }
};
ChainReport chain_report(const FiniteRing& r);
bool is_chain(const FiniteRing& r);

// Principal ideal ring. Local rings: tests whether J is principal (one-sided
// generation, both sides must agree). Otherwise enumerates all one-sided
// ideals (capacity error above `bound`) and tests each for a single generator.
bool is_pir(const FiniteRing& r, std::size_t bound = kDefaultIdealBound);

// Invariants of a local ring R: |R| = p^(nr), |R/J| = p^r, |J| = p^((n-1)r),
// char = p^k, 1 <= k <= n. nil_index is the nilpotency index of J;
// chain_consistent = (n == nil_index). k = n forces commutativity (asserted).
struct LocalParams {
  unsigned p = 0, n = 0, r = 0, k = 0;
  unsigned nil_index = 0;
  bool chain_consistent = false;
};
LocalParams local_params(const FiniteRing& r);

// Least s >= 1 with (p*1) = J^s, for chain rings. When p*1 = 0 this is the
// nilpotency index n (the zero ideal first appears as J^n).
unsigned ramification_index(const FiniteRing& r);

// Direct decomposition of a commutative ring into local components via
// primitive idempotents. Components sorted by (order, multiplication table).
// Verifies the canonical map x -> (e1 x, e2 x, ...) is an isomorphism.
std::vector<FiniteRing> decompose_commutative(const FiniteRing& r);

// Localness from counting alone: |R| = p^m and |Z(R)| = p^n with 1 <= n < m.
// For non-field prime-power rings the verdict must match is_local; when true,
// |R/J| = p^(m-n).
struct ZeroDivisorLocalReport {
  bool verdict = false;
  unsigned p = 0, m = 0, n = 0, r = 0;
};
ZeroDivisorLocalReport zero_divisor_local_test(const FiniteRing& r);

enum class RingCase { field, chain, local_non_chain, semilocal_non_local };
std::string to_string(RingCase c);

struct ClassificationReport {
  RingCase label = RingCase::field;
  LocalReport local;
  ChainReport chain;
  std::optional<bool> pir;  // null when ideal enumeration was out of capacity
  std::optional<LocalParams> params;
  std::optional<unsigned> ramification;
};
ClassificationReport classify_case(const FiniteRing& r,
                                   std::size_t ideal_bound = kDefaultIdealBound);

}  // namespace ringplane
