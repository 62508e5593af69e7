#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "ringplane/classify.hpp"
#include "ringplane/plane.hpp"
#include "ringplane/ring.hpp"

namespace ringplane {

using ojson = nlohmann::ordered_json;

// Full table dump: order, zero, one, add, mul, meta {name, construction}.
ojson ring_to_json(const FiniteRing& r);

// Inverse of ring_to_json. Structural problems throw std::invalid_argument;
// tables that fail the axiom audit throw verification_error. The audit runs
// only up to order 256 (cubic scan); axioms_audited_on_import tells whether a
// given order is covered.
FiniteRing ring_from_json(const ojson& j, std::size_t max_order = kDefaultMaxOrder);
FiniteRing load_ring_file(const std::string& path, std::size_t max_order = kDefaultMaxOrder);
bool axioms_audited_on_import(std::size_t order);

// Short profile: order, characteristic, unit/zero-divisor/radical sizes.
ojson ring_summary_json(const FiniteRing& r);

ojson classification_to_json(const FiniteRing& r, const ClassificationReport& rep);

ojson params_to_json(const PlaneParams& p);

// Ring spec, class representatives, incidence rows as lowercase hex (columns
// packed four per nibble, most significant bit first), params.
ojson plane_to_json(const RingPlane& pl);

ojson theorems_to_json(const TheoremReport& rep);
ojson epimorphism_to_json(const EpimorphismReport& rep, const RingPlane& qplane);

std::string incidence_hex_row(const BitMatrix& mat, std::size_t row);

// Raw 0/1 incidence matrix, one comma-separated row per line of text.
void write_plane_csv(const RingPlane& pl, std::ostream& os);

// Human-readable verification certificate; stable output, no timestamps.
std::string plane_certificate(const RingPlane& pl, const ClassificationReport& cls,
                              const TheoremReport& thm);

// Canonical spec string if the construction is grammar-expressible, family
// name otherwise.
std::string ring_label(const FiniteRing& r);

}  // namespace ringplane
