#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringplane/bitset.hpp"
#include "ringplane/errors.hpp"

namespace ringplane {

using elem_t = std::uint16_t;

inline constexpr std::size_t kDefaultMaxOrder = 4096;
inline constexpr std::size_t kDefaultIdealBound = 16;
inline constexpr std::size_t kDefaultIsoBound = 32;

// How a ring was made; spec is the canonical spec string when one exists.
struct ConstructionTag {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::string spec;
};

enum class Side { left, right, two_sided };

std::string to_string(Side s);

// Additive subgroup closed under the stated side of multiplication.
// Members are sorted element indices; the owning ring is passed alongside.
struct IdealSet {
  Side side = Side::two_sided;
  std::vector<elem_t> members;

  bool contains(elem_t x) const;
  std::size_t size() const { return members.size(); }
  bool operator==(const IdealSet& o) const { return members == o.members; }
};

// Map src element index -> dst element index.
struct RingMorphism {
  std::vector<elem_t> map;
};

struct AxiomReport {
  bool pass = true;
  std::string axiom;                 // empty when pass
  std::array<elem_t, 3> witness{};   // elements violating the axiom
  std::string detail;
};

// Finite unital ring as addition/multiplication index tables.
// Immutable after construction; analysis results are cached write-once.
class FiniteRing {
 public:
  FiniteRing(std::size_t order, elem_t zero, elem_t one, std::vector<elem_t> add,
             std::vector<elem_t> mul, ConstructionTag tag = {});

  std::size_t order() const { return m_; }
  elem_t zero() const { return zero_; }
  elem_t one() const { return one_; }
  const ConstructionTag& tag() const { return tag_; }

  elem_t add(elem_t a, elem_t b) const { return add_[std::size_t{a} * m_ + b]; }
  elem_t mul(elem_t a, elem_t b) const { return mul_[std::size_t{a} * m_ + b]; }
  elem_t neg(elem_t a) const { return neg_[a]; }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg_[b]); }
  elem_t pow(elem_t a, unsigned k) const;     // a^k, a^0 = 1
  elem_t from_int(long long n) const;         // n * 1

  const std::vector<elem_t>& add_table() const { return add_; }
  const std::vector<elem_t>& mul_table() const { return mul_; }

  bool is_unit(elem_t x) const;
  bool is_zero_divisor(elem_t x) const;
  bool commutative() const;

 private:
  std::size_t m_;
  elem_t zero_, one_;
  std::vector<elem_t> add_, mul_;
  std::vector<elem_t> neg_;
  ConstructionTag tag_;

  struct Cache;
  std::shared_ptr<Cache> cache_;

  friend const std::vector<elem_t>& units(const FiniteRing&);
  friend const Bitset& unit_mask(const FiniteRing&);
  friend const std::vector<elem_t>& zero_divisors(const FiniteRing&);
  friend const IdealSet& jacobson_radical(const FiniteRing&);
  friend unsigned radical_nil_index(const FiniteRing&);
  friend unsigned characteristic(const FiniteRing&);
  friend bool commutative_impl(const FiniteRing&);
};

// Full axiom audit of candidate tables. O(order^3); first violated axiom wins.
// Check order: shape, zero/one distinct, additive abelian group, multiplicative
// identity, multiplicative associativity, distributivity.
AxiomReport check_axioms(std::size_t order, elem_t zero, elem_t one,
                         const std::vector<elem_t>& add, const std::vector<elem_t>& mul);
AxiomReport check_axioms(const FiniteRing& r);

// Two-sided units, sorted. Left- and right-invertible sets are computed
// separately and must coincide (finite rings are Dedekind-finite); a mismatch
// throws invariant_error naming the witness.
const std::vector<elem_t>& units(const FiniteRing& r);
const Bitset& unit_mask(const FiniteRing& r);

// Elements x with xy = 0 or yx = 0 for some y != 0; includes 0. Left and right
// sets are computed separately and must coincide in a finite ring.
const std::vector<elem_t>& zero_divisors(const FiniteRing& r);

// Jacobson radical via the two-sided criterion {x : forall a,b, 1-axb a unit},
// evaluated as {x : forall b, xb in L}, L = {y : forall a, 1-ay a unit}.
// Asserts the result is a two-sided ideal equal to L; when it equals the
// non-unit set, additionally asserts it equals the nilpotent set.
const IdealSet& jacobson_radical(const FiniteRing& r);

// Least k >= 1 with J^k = 0 (1 when J = 0).
unsigned radical_nil_index(const FiniteRing& r);

// Additive order of 1.
unsigned characteristic(const FiniteRing& r);

// Smallest ideal of the given side containing gens.
IdealSet generated_ideal(const FiniteRing& r, const std::vector<elem_t>& gens, Side side);

// Every ideal of the given side, sorted by size then lexicographic membership.
// Refuses orders above `bound`.
std::vector<IdealSet> all_ideals(const FiniteRing& r, Side side,
                                 std::size_t bound = kDefaultIdealBound);

bool is_ideal(const FiniteRing& r, const std::vector<elem_t>& members, Side side);

// Quotient by a proper two-sided ideal; coset representative = least index.
// Returns the quotient and the projection morphism.
std::pair<FiniteRing, RingMorphism> quotient(const FiniteRing& r, const IdealSet& ideal);

// Componentwise ring on the index product, row-major: (a,b) -> a*|S| + b.
FiniteRing direct_sum(const FiniteRing& r, const FiniteRing& s);

// Same elements, multiplication transposed.
FiniteRing opposite(const FiniteRing& r);

std::vector<elem_t> idempotents(const FiniteRing& r);

// Isomorphism search by backtracking over generator images with invariant
// pruning (element profiles, unit count, |J|, characteristic). Orders up to
// `bound`; returns nothing when no isomorphism exists.
std::optional<RingMorphism> find_isomorphism(const FiniteRing& r, const FiniteRing& s,
                                             std::size_t bound = kDefaultIsoBound);

// True when f is a bijective unital ring homomorphism src -> dst.
bool is_isomorphism(const FiniteRing& src, const FiniteRing& dst, const RingMorphism& f);

}  // namespace ringplane
