#include "ringplane/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ringplane/errors.hpp"

namespace ringplane {

std::string ring_label(const FiniteRing& r) {
  return r.tag().spec.empty() ? r.tag().family : r.tag().spec;
}

ojson ring_to_json(const FiniteRing& r) {
  const std::size_t m = r.order();
  ojson add = ojson::array(), mul = ojson::array();
  for (std::size_t a = 0; a < m; ++a) {
    ojson arow = ojson::array(), mrow = ojson::array();
    for (std::size_t b = 0; b < m; ++b) {
      arow.push_back(r.add(static_cast<elem_t>(a), static_cast<elem_t>(b)));
      mrow.push_back(r.mul(static_cast<elem_t>(a), static_cast<elem_t>(b)));
    }
    add.push_back(std::move(arow));
    mul.push_back(std::move(mrow));
  }
  ojson meta;
  meta["name"] = r.tag().family;
  meta["construction"] = ring_label(r);
  ojson out;
  out["order"] = m;
  out["zero"] = r.zero();
  out["one"] = r.one();
  out["add"] = std::move(add);
  out["mul"] = std::move(mul);
  out["meta"] = std::move(meta);
  return out;
}

bool axioms_audited_on_import(std::size_t order) { return order <= 256; }

FiniteRing ring_from_json(const ojson& j, std::size_t max_order) {
  if (!j.is_object()) throw std::invalid_argument("ring JSON: object expected");
  for (const char* key : {"order", "zero", "one", "add", "mul"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("ring JSON: missing field '") + key + "'");
  if (!j["order"].is_number_unsigned())
    throw std::invalid_argument("ring JSON: order must be a non-negative integer");
  const std::size_t m = j["order"].get<std::size_t>();
  if (m < 2 || m > 65535) throw std::invalid_argument("ring JSON: order out of range [2,65535]");
  if (m > max_order)
    throw capacity_error("ring JSON: order exceeds the configured limit " +
                         std::to_string(max_order));
  auto scalar = [&](const char* key) {
    if (!j[key].is_number_unsigned() || j[key].get<std::size_t>() >= m)
      throw std::invalid_argument(std::string("ring JSON: '") + key +
                                  "' must be an element index below the order");
    return static_cast<elem_t>(j[key].get<std::size_t>());
  };
  elem_t zero = scalar("zero"), one = scalar("one");
  auto table = [&](const char* key) {
    const ojson& t = j[key];
    if (!t.is_array() || t.size() != m)
      throw std::invalid_argument(std::string("ring JSON: '") + key + "' must be " +
                                  std::to_string(m) + " rows");
    std::vector<elem_t> out;
    out.reserve(m * m);
    for (const ojson& row : t) {
      if (!row.is_array() || row.size() != m)
        throw std::invalid_argument(std::string("ring JSON: '") + key + "' rows must have " +
                                    std::to_string(m) + " entries");
      for (const ojson& cell : row) {
        if (!cell.is_number_unsigned() || cell.get<std::size_t>() >= m)
          throw std::invalid_argument(std::string("ring JSON: '") + key +
                                      "' entries must be element indices below the order");
        out.push_back(static_cast<elem_t>(cell.get<std::size_t>()));
      }
    }
    return out;
  };
  std::vector<elem_t> add = table("add"), mul = table("mul");
  if (axioms_audited_on_import(m)) {
    AxiomReport rep = check_axioms(m, zero, one, add, mul);
    if (!rep.pass)
      throw verification_error("imported tables violate axiom " + rep.axiom + " at (" +
                               std::to_string(rep.witness[0]) + "," +
                               std::to_string(rep.witness[1]) + "," +
                               std::to_string(rep.witness[2]) + ")");
  }
  ConstructionTag tag;
  tag.family = "import";
  if (j.contains("meta") && j["meta"].is_object() && j["meta"].contains("construction") &&
      j["meta"]["construction"].is_string())
    tag.params = {{"source", j["meta"]["construction"].get<std::string>()}};
  return FiniteRing(m, zero, one, std::move(add), std::move(mul), std::move(tag));
}

FiniteRing load_ring_file(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ring file: " + path);
  ojson j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("ring file " + path + ": " + e.what());
  }
  FiniteRing r = ring_from_json(j, max_order);
  ConstructionTag tag = r.tag();
  tag.spec = "file:" + path;
  return FiniteRing(r.order(), r.zero(), r.one(), r.add_table(), r.mul_table(),
                    std::move(tag));
}

ojson ring_summary_json(const FiniteRing& r) {
  ojson out;
  out["ring"] = ring_label(r);
  out["family"] = r.tag().family;
  out["order"] = r.order();
  out["characteristic"] = characteristic(r);
  out["commutative"] = r.commutative();
  out["units"] = units(r).size();
  out["zero_divisors"] = zero_divisors(r).size();
  out["radical_size"] = jacobson_radical(r).size();
  out["radical_nil_index"] = radical_nil_index(r);
  return out;
}

ojson classification_to_json(const FiniteRing& r, const ClassificationReport& rep) {
  ojson out;
  out["ring"] = ring_label(r);
  out["case"] = to_string(rep.label);
  out["is_local"] = rep.local.is_local;
  out["is_chain"] = rep.chain.is_chain();
  if (rep.pir)
    out["is_pir"] = *rep.pir;
  else
    out["is_pir"] = nullptr;
  if (rep.params) {
    ojson p;
    p["p"] = rep.params->p;
    p["n"] = rep.params->n;
    p["r"] = rep.params->r;
    p["k"] = rep.params->k;
    p["nil_index"] = rep.params->nil_index;
    p["chain_consistent"] = rep.params->chain_consistent;
    out["params"] = std::move(p);
  } else {
    out["params"] = nullptr;
  }
  if (rep.ramification)
    out["ramification"] = *rep.ramification;
  else
    out["ramification"] = nullptr;
  ojson local;
  local["nonunits_form_ideal"] = rep.local.nonunits_ideal;
  local["one_minus_nonunit_is_unit"] = rep.local.one_minus;
  local["radical_quotient_is_division_ring"] = rep.local.quotient_div;
  if (rep.local.witness)
    local["witness"] = *rep.local.witness;
  else
    local["witness"] = nullptr;
  ojson chain;
  chain["left"] = rep.chain.left;
  chain["right"] = rep.chain.right;
  if (rep.chain.witness)
    chain["witness"] = ojson::array({rep.chain.witness->first, rep.chain.witness->second});
  else
    chain["witness"] = nullptr;
  ojson evidence;
  evidence["local"] = std::move(local);
  evidence["chain"] = std::move(chain);
  out["evidence"] = std::move(evidence);
  return out;
}

namespace {

template <typename T>
ojson opt_json(const std::optional<T>& v) {
  if (v) return ojson(*v);
  return ojson(nullptr);
}

}  // namespace

ojson params_to_json(const PlaneParams& p) {
  ojson out;
  out["points"] = p.point_count;
  out["lines"] = p.line_count;
  out["points_per_line"] = opt_json(p.points_per_line);
  out["lines_per_point"] = opt_json(p.lines_per_point);
  out["neighbor_class_size"] = opt_json(p.neighbor_class_size);
  out["s"] = opt_json(p.s);
  out["t"] = opt_json(p.t);
  out["flag_neighbor_count"] = opt_json(p.flag_neighbor_count);
  out["quotient_order"] = opt_json(p.quotient_order);
  out["t_divides_s"] = opt_json(p.t_divides_s);
  out["s_le_t2_or_t_is_1"] = opt_json(p.s_le_t2_or_t_is_1);
  out["counts_match_formula"] = opt_json(p.counts_match_formula);
  return out;
}

std::string incidence_hex_row(const BitMatrix& mat, std::size_t row) {
  const std::size_t cols = mat.cols();
  std::string out;
  out.reserve((cols + 3) / 4);
  for (std::size_t base = 0; base < cols; base += 4) {
    unsigned nibble = 0;
    for (std::size_t k = 0; k < 4 && base + k < cols; ++k)
      if (mat.test(row, base + k)) nibble |= 8u >> k;
    out += "0123456789abcdef"[nibble];
  }
  return out;
}

ojson plane_to_json(const RingPlane& pl) {
  ojson out;
  out["ring"] = ring_label(pl.ring());
  out["order"] = pl.ring().order();
  ojson pts = ojson::array(), lns = ojson::array();
  for (const ProjClass& c : pl.points())
    pts.push_back(ojson::array({c.rep[0], c.rep[1], c.rep[2]}));
  for (const ProjClass& c : pl.lines())
    lns.push_back(ojson::array({c.rep[0], c.rep[1], c.rep[2]}));
  out["points"] = std::move(pts);
  out["lines"] = std::move(lns);
  ojson rows = ojson::array();
  for (std::size_t p = 0; p < pl.points().size(); ++p)
    rows.push_back(incidence_hex_row(pl.incidence_matrix(), p));
  out["incidence"] = std::move(rows);
  out["params"] = params_to_json(pl.params());
  return out;
}

ojson theorems_to_json(const TheoremReport& rep) {
  ojson checks = ojson::array();
  for (const TheoremCheck& c : rep.checks) {
    ojson e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["applicable"] = c.applicable;
    e["ring_side"] = c.ring_side;
    e["plane_side"] = c.plane_side;
    e["agree"] = c.agree;
    e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  ojson out;
  out["checks"] = std::move(checks);
  out["all_agree"] = rep.all_agree();
  return out;
}

ojson epimorphism_to_json(const EpimorphismReport& rep, const RingPlane& qplane) {
  ojson out;
  out["quotient_ring"] = ring_label(qplane.ring());
  out["quotient_points"] = qplane.points().size();
  out["quotient_lines"] = qplane.lines().size();
  out["fiber_size"] = rep.fiber_size;
  out["fibers_uniform"] = rep.fibers_uniform;
  out["flag_biconditional"] = rep.flag_biconditional;
  out["point_biconditional"] = rep.point_biconditional;
  out["line_biconditional"] = rep.line_biconditional;
  out["pass"] = rep.pass();
  return out;
}

void write_plane_csv(const RingPlane& pl, std::ostream& os) {
  for (std::size_t p = 0; p < pl.points().size(); ++p) {
    for (std::size_t l = 0; l < pl.lines().size(); ++l) {
      if (l) os << ',';
      os << (pl.incident(p, l) ? '1' : '0');
    }
    os << '\n';
  }
}

std::string plane_certificate(const RingPlane& pl, const ClassificationReport& cls,
                              const TheoremReport& thm) {
  std::ostringstream os;
  const PlaneParams& p = pl.params();
  os << "plane verification certificate\n";
  os << "ring: " << ring_label(pl.ring()) << "\n";
  os << "order: " << pl.ring().order() << "\n";
  os << "case: " << to_string(cls.label) << "\n";
  os << "points: " << p.point_count << "\n";
  os << "lines: " << p.line_count << "\n";
  auto put = [&](const char* name, const auto& opt) {
    os << name << ": ";
    if (opt)
      os << *opt;
    else
      os << "-";
    os << "\n";
  };
  put("points_per_line", p.points_per_line);
  put("lines_per_point", p.lines_per_point);
  put("neighbor_class_size", p.neighbor_class_size);
  put("s", p.s);
  put("t", p.t);
  put("flag_neighbor_count", p.flag_neighbor_count);
  put("quotient_order", p.quotient_order);
  bool all = true;
  for (const TheoremCheck& c : thm.checks) {
    const char* mark = !c.applicable ? "skip" : (c.agree ? " ok " : "FAIL");
    os << "[" << mark << "] " << c.id << " " << c.statement;
    if (!c.witness.empty()) os << " | witness: " << c.witness;
    os << "\n";
    if (c.applicable && !c.agree) all = false;
  }
  os << "result: " << (all ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace ringplane
