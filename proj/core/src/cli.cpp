#include "ringplane/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ringplane/classify.hpp"
#include "ringplane/construct.hpp"
#include "ringplane/corpus.hpp"
#include "ringplane/errors.hpp"
#include "ringplane/json_io.hpp"
#include "ringplane/plane.hpp"

namespace ringplane {

namespace {

std::string plain(const ojson& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

// "key: value" lines for a flat object, underscores shown as spaces.
void print_flat(const ojson& j, std::ostream& out) {
  for (const auto& item : j.items()) {
    std::string key = item.key();
    std::replace(key.begin(), key.end(), '_', ' ');
    out << key << ": " << plain(item.value()) << "\n";
  }
}

void emit(const ojson& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + out_path + " for writing");
  f << j.dump(2) << "\n";
  out << "wrote " << out_path << "\n";
}

std::size_t env_budget(std::ostream& err, bool& bad) {
  std::size_t budget = std::size_t{1} << 24;
  const char* env = std::getenv("RINGPLANE_BUDGET");
  if (!env || !*env) return budget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    err << "error: RINGPLANE_BUDGET must be a positive integer, got \"" << env << "\"\n";
    bad = true;
    return budget;
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite rings and the projective planes over them"};
  app.name("ringplane");
  app.require_subcommand(1);

  bool bad_env = false;
  std::size_t budget = env_budget(err, bad_env);
  if (bad_env) return 2;

  bool json = false;
  std::string spec, spec_b, out_path;
  std::size_t max_order = kDefaultMaxOrder;
  unsigned workers = 1;
  bool csv = false;
  int rc = 0;

  CLI::App* ring = app.add_subcommand("ring", "construct and analyze finite rings");
  ring->require_subcommand(1);
  CLI::App* rbuild = ring->add_subcommand("build", "build a ring and print its invariants");
  CLI::App* rclassify =
      ring->add_subcommand("classify", "local/chain/principal classification with evidence");
  CLI::App* riso = ring->add_subcommand("iso", "search for an isomorphism between two rings");
  CLI::App* rexport = ring->add_subcommand("export", "write the full ring tables as JSON");

  CLI::App* plane = app.add_subcommand("plane", "projective planes over a ring");
  plane->require_subcommand(1);
  CLI::App* pbuild = plane->add_subcommand("build", "build the plane and print its size");
  CLI::App* pstats = plane->add_subcommand("stats", "all plane parameters");
  CLI::App* pverify =
      plane->add_subcommand("verify", "run every structural check and print a certificate");
  CLI::App* pexport = plane->add_subcommand("export", "write the plane as JSON or CSV");

  CLI::App* suite = app.add_subcommand("suite", "batteries over the built-in ring corpus");
  CLI::App* srun = suite->add_subcommand("run", "run the full invariant suite");

  for (CLI::App* c : {rbuild, rclassify, rexport, pbuild, pstats, pverify, pexport})
    c->add_option("spec", spec, "ring spec, e.g. zmod:4 or mat:2(gf:2)")->required();
  riso->add_option("spec_a", spec, "first ring spec")->required();
  riso->add_option("spec_b", spec_b, "second ring spec")->required();

  for (CLI::App* c : {rbuild, rclassify, riso, pbuild, pstats, pverify, srun})
    c->add_flag("--json", json, "machine-readable output");
  for (CLI::App* c : {rbuild, rclassify, riso, rexport, pbuild, pstats, pverify, pexport})
    c->add_option("--max-order", max_order, "largest admissible ring order");
  for (CLI::App* c : {rexport, pexport})
    c->add_option("--out", out_path, "write to this file instead of stdout");
  for (CLI::App* c : {pbuild, pstats, pverify, pexport, srun})
    c->add_option("--budget", budget, "largest admissible |R|^3 triple count");
  for (CLI::App* c : {pbuild, pstats, pverify, pexport, srun})
    c->add_option("--workers", workers, "parallel workers for orbit enumeration");
  pexport->add_flag("--csv", csv, "emit the incidence matrix as 0/1 CSV rows");

  std::size_t suite_max = 16;
  std::size_t corrupt_k = 0;
  srun->add_option("--max-order", suite_max, "corpus spans ring orders 2..N");
  CLI::Option* corrupt_opt = srun->add_option(
      "--corrupt", corrupt_k, "perturb one multiplication cell of corpus entry K");

  auto make_plane = [&]() {
    FiniteRing r = parse_ring_spec(spec, max_order);
    PlaneOptions popts;
    popts.triple_budget = budget;
    popts.workers = workers;
    return build_plane(r, popts);
  };

  rbuild->callback([&] {
    FiniteRing r = parse_ring_spec(spec, max_order);
    ojson j = ring_summary_json(r);
    if (json)
      out << j.dump(2) << "\n";
    else
      print_flat(j, out);
  });

  rclassify->callback([&] {
    FiniteRing r = parse_ring_spec(spec, max_order);
    ClassificationReport rep = classify_case(r);
    if (json) {
      out << classification_to_json(r, rep).dump(2) << "\n";
      return;
    }
    out << "ring: " << ring_label(r) << "\n";
    out << "case: " << to_string(rep.label) << "\n";
    out << "local: " << (rep.local.is_local ? "yes" : "no") << "\n";
    out << "chain: " << (rep.chain.is_chain() ? "yes" : "no") << "\n";
    out << "principal ideals: " << (rep.pir ? (*rep.pir ? "yes" : "no") : "-") << "\n";
    if (rep.params) {
      out << "p: " << rep.params->p << "\nn: " << rep.params->n << "\nr: " << rep.params->r
          << "\nk: " << rep.params->k << "\n";
      out << "nil index: " << rep.params->nil_index << "\n";
    }
    if (rep.ramification) out << "ramification: " << *rep.ramification << "\n";
  });

  riso->callback([&] {
    FiniteRing a = parse_ring_spec(spec, max_order);
    FiniteRing b = parse_ring_spec(spec_b, max_order);
    std::size_t bound = std::max(kDefaultIsoBound, max_order);
    std::optional<RingMorphism> f = find_isomorphism(a, b, bound);
    if (json) {
      ojson j;
      j["a"] = ring_label(a);
      j["b"] = ring_label(b);
      j["isomorphic"] = f.has_value();
      j["map"] = nullptr;
      if (f) j["map"] = f->map;
      out << j.dump(2) << "\n";
    } else {
      out << "isomorphic: " << (f ? "yes" : "no") << "\n";
      if (f) {
        out << "map:";
        for (elem_t v : f->map) out << " " << v;
        out << "\n";
      }
    }
    if (!f) rc = 1;
  });

  rexport->callback([&] {
    FiniteRing r = parse_ring_spec(spec, max_order);
    emit(ring_to_json(r), out_path, out);
  });

  pbuild->callback([&] {
    RingPlane pl = make_plane();
    if (json) {
      ojson j;
      j["ring"] = ring_label(pl.ring());
      j["order"] = pl.ring().order();
      j["local"] = pl.local();
      j["points"] = pl.points().size();
      j["lines"] = pl.lines().size();
      out << j.dump(2) << "\n";
      return;
    }
    out << "ring: " << ring_label(pl.ring()) << "\n";
    out << "local: " << (pl.local() ? "yes" : "no") << "\n";
    out << "points: " << pl.points().size() << "\n";
    out << "lines: " << pl.lines().size() << "\n";
  });

  pstats->callback([&] {
    RingPlane pl = make_plane();
    ojson j;
    j["ring"] = ring_label(pl.ring());
    j["local"] = pl.local();
    j.update(params_to_json(pl.params()));
    if (json)
      out << j.dump(2) << "\n";
    else
      print_flat(j, out);
  });

  pverify->callback([&] {
    RingPlane pl = make_plane();
    ClassificationReport cls = classify_case(pl.ring());
    TheoremReport thm = verify_theorems(pl);
    bool orbit_ok = check_orbit_independence(pl);
    std::optional<EpimorphismReport> epi;
    ojson epi_json = nullptr;
    if (pl.local()) {
      PlaneOptions popts;
      popts.triple_budget = budget;
      popts.workers = workers;
      auto [qpl, rep] = epimorphism_check(pl, popts);
      epi = rep;
      epi_json = epimorphism_to_json(rep, qpl);
    }
    bool pass = thm.all_agree() && orbit_ok && (!epi || epi->pass());
    if (json) {
      ojson j;
      j["ring"] = ring_label(pl.ring());
      j["case"] = to_string(cls.label);
      j["orbit_independent"] = orbit_ok;
      j["theorems"] = theorems_to_json(thm);
      j["quotient_map"] = epi_json;
      j["pass"] = pass;
      out << j.dump(2) << "\n";
    } else {
      out << plane_certificate(pl, cls, thm);
      out << "[" << (orbit_ok ? " ok " : "FAIL")
          << "] representatives all class members give the same incidence and neighbor "
             "verdicts\n";
      if (epi)
        out << "[" << (epi->pass() ? " ok " : "FAIL")
            << "] quotient-map point, line, and flag relations transfer through the radical "
               "quotient | fiber "
            << epi->fiber_size << "\n";
      else
        out << "[skip] quotient-map checks need a local base ring\n";
      out << "verify: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    if (!pass) rc = 1;
  });

  pexport->callback([&] {
    RingPlane pl = make_plane();
    if (csv) {
      if (out_path.empty()) {
        write_plane_csv(pl, out);
        return;
      }
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open " + out_path + " for writing");
      write_plane_csv(pl, f);
      out << "wrote " << out_path << "\n";
      return;
    }
    emit(plane_to_json(pl), out_path, out);
  });

  srun->callback([&] {
    SuiteOptions opts;
    opts.max_order = suite_max;
    opts.triple_budget = budget;
    opts.workers = workers;
    if (*corrupt_opt) opts.corrupt_index = corrupt_k;
    SuiteResult res = run_suite(opts);
    if (json) {
      ojson j;
      j["max_order"] = suite_max;
      j["corpus_size"] = suite_corpus(suite_max).size();
      ojson checks = ojson::array();
      for (const SuiteCheck& c : res.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      j["checks"] = checks;
      j["pass"] = res.all_pass();
      out << j.dump(2) << "\n";
    } else {
      out << "corpus: " << suite_corpus(suite_max).size() << " rings, orders 2.." << suite_max
          << "\n";
      for (const SuiteCheck& c : res.checks) {
        if (c.pass)
          out << "[ ok ] " << c.name << " (" << c.detail << ")\n";
        else
          out << "[FAIL] " << c.name << ": " << c.detail << "\n";
      }
      out << "result: " << (res.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    if (!res.all_pass()) rc = 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const spec_parse_error& e) {
    err << "spec error: " << e.what() << "\n";
    err << "  " << e.input << "\n";
    err << "  " << std::string(e.position, ' ') << "^\n";
    return 2;
  } catch (const capacity_error& e) {
    err << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const verification_error& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const invariant_error& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace ringplane
