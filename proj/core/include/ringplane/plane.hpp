#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ringplane/bitset.hpp"
#include "ringplane/classify.hpp"
#include "ringplane/ring.hpp"

namespace ringplane {

using Triple = std::array<elem_t, 3>;

// One projective class: the lexicographically least triple of its scaling
// orbit plus the full orbit, sorted.
struct ProjClass {
  Triple rep{};
  std::vector<Triple> orbit;
};

struct PlaneParams {
  std::size_t point_count = 0;
  std::size_t line_count = 0;
  // set only when every count of the kind is uniform across the plane
  std::optional<unsigned> points_per_line;
  std::optional<unsigned> lines_per_point;
  std::optional<unsigned> neighbor_class_size;  // points, includes the point itself
  // the rest is reported for local base rings only
  std::optional<unsigned> s;  // |R|
  std::optional<unsigned> t;  // |J|
  std::optional<unsigned> flag_neighbor_count;  // neighbors of p on a line through p, incl. p
  std::optional<unsigned> quotient_order;       // s / t
  std::optional<bool> t_divides_s;
  std::optional<bool> s_le_t2_or_t_is_1;
  std::optional<bool> counts_match_formula;
};

struct PlaneOptions {
  std::size_t triple_budget = std::size_t{1} << 24;  // |R|^3 must stay within
  std::size_t max_points = 32768;
  unsigned workers = 1;
};

// Projective plane over a finite ring: points are left-unimodular triples up
// to right unit scaling, lines are right-unimodular triples up to left unit
// scaling, incidence is ux + vy + wz = 0 with line coordinates on the left.
class RingPlane {
 public:
  const FiniteRing& ring() const { return ring_; }
  bool local() const { return local_; }
  const std::vector<ProjClass>& points() const { return points_; }
  const std::vector<ProjClass>& lines() const { return lines_; }

  bool incident(std::size_t p, std::size_t l) const { return incidence_.test(p, l); }
  bool flag_neighbor(std::size_t p, std::size_t l) const { return flag_nb_.test(p, l); }
  bool point_neighbors(std::size_t p, std::size_t q) const { return point_nb_.test(p, q); }
  bool line_neighbors(std::size_t l, std::size_t k) const { return line_nb_.test(l, k); }

  const BitMatrix& incidence_matrix() const { return incidence_; }
  const BitMatrix& flag_neighbor_matrix() const { return flag_nb_; }
  const BitMatrix& point_neighbor_matrix() const { return point_nb_; }
  const BitMatrix& line_neighbor_matrix() const { return line_nb_; }

  const PlaneParams& params() const { return params_; }

 private:
  RingPlane(FiniteRing ring, bool local)
      : ring_(std::move(ring)), local_(local) {}

  FiniteRing ring_;
  bool local_;
  std::vector<ProjClass> points_, lines_;
  BitMatrix incidence_{0, 0};   // points x lines
  BitMatrix flag_nb_{0, 0};     // points x lines
  BitMatrix point_nb_{0, 0};    // points x points
  BitMatrix line_nb_{0, 0};     // lines x lines
  PlaneParams params_;

  friend RingPlane build_plane(const FiniteRing& r, const PlaneOptions& opts);
};

RingPlane build_plane(const FiniteRing& r, const PlaneOptions& opts = {});

// 1 lies in the left (resp. right) ideal generated by the three coordinates.
// For local rings the subgroup test is cross-checked against the presence of
// a unit coordinate.
bool is_left_unimodular(const FiniteRing& r, const Triple& v);
bool is_right_unimodular(const FiniteRing& r, const Triple& v);

// u*x + v*y + w*z for point (x,y,z) and line [u,v,w].
elem_t incidence_form(const FiniteRing& r, const Triple& point, const Triple& line);

// Representative independence audit: incidence and flag-neighbor verdicts
// agree across all orbit member pairs of every point/line class.
bool check_orbit_independence(const RingPlane& pl);

// Definitional neighbor test: two classes are NOT neighbors exactly when the
// 2x3 matrix of their representatives extends by one row to a matrix whose
// action on R^3 is bijective.
bool neighbors_by_extension(const FiniteRing& r, const Triple& a, const Triple& b);

struct EpimorphismReport {
  bool flag_biconditional = true;   // incidence survives and reflects through pi
  bool point_biconditional = true;  // p, q neighbors  <=>  same image
  bool line_biconditional = true;
  bool fibers_uniform = true;
  std::size_t fiber_size = 0;       // |J|^2 expected
  bool pass() const {
    return flag_biconditional && point_biconditional && line_biconditional && fibers_uniform;
  }
};

// Quotient plane over R/J plus the compatibility audit. Local rings only.
std::pair<RingPlane, EpimorphismReport> epimorphism_check(const RingPlane& pl,
                                                          const PlaneOptions& opts = {});

struct TheoremCheck {
  std::string id;
  std::string statement;
  bool applicable = true;
  bool ring_side = false;
  bool plane_side = false;
  bool agree = true;
  std::string witness;  // set when a side is false and a counterexample exists
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool all_agree() const {
    for (const TheoremCheck& c : checks)
      if (c.applicable && !c.agree) return false;
    return true;
  }
};

// Runs the structure-theorem battery for this plane: ring-side predicate
// against plane-side predicate, with witnesses on disagreement or one-sided
// failure.
TheoremReport verify_theorems(const RingPlane& pl, std::size_t ideal_bound = kDefaultIdealBound);

PlaneParams plane_stats(const RingPlane& pl);

std::string triple_to_string(const Triple& t);

}  // namespace ringplane
