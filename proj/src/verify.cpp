#include "qes/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "qes/catalog.hpp"
#include "qes/matrix_oracle.hpp"
#include "qes/potential.hpp"
#include "qes/report.hpp"
#include "qes/spectrum.hpp"

namespace qes {

namespace {

struct Outcome {
  std::string property;
  int status;  // 1 pass, 0 fail, -1 skipped
  std::string detail;
};

using Outcomes = std::vector<Outcome>;

void check(Outcomes& out, const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string why = body();
    out.push_back({name, why.empty() ? 1 : 0, why});
  } catch (const std::exception& e) {
    out.push_back({name, 0, e.what()});
  }
}

std::string params_text(const ParamMap& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ", ") + k + "=" + to_string(v);
  return s;
}

Outcomes run_trial(const CatalogEntry& e, size_t entry_index, int trial, const VerifyOptions& opt) {
  Outcomes out;
  const int n = trial % (opt.max_n + 1);
  std::seed_seq ss{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                   static_cast<std::uint32_t>(entry_index), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(ss);
  auto sampled = sample_params(e, n, rng, true);
  if (!sampled) {
    out.push_back({"sampling", -1, "no admissible parameters found"});
    return out;
  }
  QesProblem prob;
  try {
    prob = instantiate(e.id, *sampled, n, {true, true});
  } catch (const std::exception& ex) {
    out.push_back({"instantiate", 0, ex.what()});
    return out;
  }
  const std::string where = " [n=" + std::to_string(n) + "; " + params_text(*sampled) + "]";
  if (opt.inject_fault) prob.B = prob.B + RatPoly::monomial(1, 1);

  check(out, "truncation", [&] { return truncation_residuals(prob).ok() ? "" : "series does not terminate" + where; });
  check(out, "constraint_rows", [&] {
    TaylorData t = taylor_data(prob);
    for (const auto& row : invariance_conditions(prob.order(), n))
      if (row.residual(t) != 0)
        return "row (l=" + std::to_string(row.l) + ", i=" + std::to_string(row.i) + ") residual " +
               to_string(row.residual(t)) + where;
    return std::string();
  });
  check(out, "invariance", [&] {
    for (int l = 0; l <= n; ++l)
      if (apply_operator(prob, RatPoly::monomial(1, l)).degree() > n) return "L x^" + std::to_string(l) + " leaves the subspace" + where;
    return std::string();
  });
  if (e.k() == 4)
    check(out, "weight_constraint", [&] {
      Rational f3 = derivative_at_zero(prob.spec.F, 3);
      Rational want = -derivative_at_zero(prob.spec.A, 4) * (n - 1) / 2;
      return f3 == want ? std::string() : "F'''(0) = " + to_string(f3) + ", required " + to_string(want) + where;
    });

  EnergySequence seq;
  try {
    seq = generate(prob, n + 1 + opt.N_extra);
  } catch (const std::exception& ex) {
    out.push_back({"recursion", 0, ex.what() + where});
    return out;
  }
  check(out, "recursion", [&] {
    for (int m = 0; m <= seq.max_index(); ++m)
      if (seq[m].degree() != m) return "deg P_" + std::to_string(m) + " != " + std::to_string(m) + where;
    for (int m = 0; m + 2 <= seq.max_index(); ++m)
      if (!recursion_identity(seq, m).is_zero()) return "recursion identity fails at m=" + std::to_string(m) + where;
    return std::string();
  });
  check(out, "factorization", [&] {
    factorization_check(seq, n, opt.N_extra);
    return std::string();
  });
  OracleReport orc;
  check(out, "oracle", [&] {
    orc = oracle_compare(prob, seq, false);
    return orc.equal ? std::string() : "characteristic polynomial differs from monic P_{n+1}" + where;
  });
  check(out, "trace", [&] { return orc.trace_ok ? std::string() : "trace identity fails" + where; });
  if (prob.order() == 3)
    check(out, "closed_forms_order3", [&] {
      for (int m = 1; m <= std::min(5, seq.max_index()); ++m)
        if (!(closed_form_oracle(prob, m) == seq[m])) return "closed form P_" + std::to_string(m) + " differs" + where;
      return std::string();
    });

  ParityResult par = parity_check(seq);
  if (par.applicable) check(out, "parity", [&] { return par.holds ? std::string() : "parity of P_m broken" + where; });

  if (e.self_adjoint) {
    SpectrumResult sp;
    bool have = false;
    check(out, "spectrum_real_simple", [&] {
      sp = solve_spectrum(seq, n);
      have = true;
      return std::string();
    });
    if (have) {
      check(out, "oscillation", [&] {
        auto osc = oscillation_check(sp, prob.spec.interval);
        if (osc.ok) return std::string();
        std::string c;
        for (int v : osc.counts) c += std::to_string(v) + " ";
        return "root counts " + c + where;
      });
      check(out, "residual", [&] {
        for (size_t i = 0; i < sp.eigenvalues.size(); ++i)
          if (!(sp.residual_norms[i] < 1e-8 * (1 + std::fabs(sp.eigenvalues[i])) * sp.psi_scale[i]))
            return "eigen-residual too large for E_" + std::to_string(i) + where;
        return std::string();
      });
      if (par.applicable && par.holds)
        check(out, "spectrum_symmetry", [&] {
          const auto& ev = sp.eigenvalues;
          for (size_t i = 0; i < ev.size(); ++i)
            if (std::fabs(ev[i] + ev[ev.size() - 1 - i]) > 1e-10) return "spectrum not symmetric" + where;
          return std::string();
        });
    }
  } else {
    out.push_back({"oscillation", -1, "operator not self-adjoint"});
  }

  BoundaryReport br = boundary_decay(e, prob.spec.params, n);
  out.push_back({"boundary_decay_note", br.ok() ? 1 : -1, br.ok() ? "" : "A W not decaying at a finite endpoint" + where});
  return out;
}

Outcomes run_entry_once(const CatalogEntry& e, size_t entry_index, const VerifyOptions& opt) {
  Outcomes out;
  check(out, "selfcheck", [&] {
    if (e.L_drift.empty()) return std::string();
    SelfcheckReport rep = table_selfcheck(e.id, 10, opt.seed);
    if (rep.matches_documented()) return std::string();
    std::string s = "printed row differs beyond the documented errata:";
    for (const auto& m : rep.mismatches) s += " [" + m.key + ": " + m.printed + " vs " + m.derived + "]";
    return s;
  });
  if (e.k() == 4)
    check(out, "alpha_rule_identity", [&] {
      auto rep = alpha_rule_identity(e, e.alpha_rule, 10, opt.seed);
      return rep.ok() ? std::string() : rep.first_failure;
    });
  if (!e.coord_map.empty()) {
    std::mt19937_64 rng(opt.seed * 7919 + entry_index);
    const int n = 2;
    auto sampled = sample_params(e, n, rng, true);
    if (!sampled) {
      out.push_back({"coordinate_map", -1, "no admissible parameters found"});
      return out;
    }
    QesProblem prob = instantiate(e.id, *sampled, n);
    const CoordMap& map = coord_map(e.coord_map);
    std::vector<double> ts;
    const int pts = std::max(opt.potential_points, 1);
    for (int i = 0; i < pts; ++i)
      ts.push_back(map.sample_range.lo + (map.sample_range.hi - map.sample_range.lo) * (i + 0.5) / pts);
    check(out, "coordinate_map", [&] {
      double err = coord_identity_error(map, prob.spec.A, ts);
      return err <= map.dx_dt_identity_tol ? std::string() : "(dx/dt)^2 - A(x) = " + num(err);
    });
    if (e.has_closed_form())
      check(out, "closed_form_potential", [&] {
        auto V = potential_function(prob, map);
        for (double t : ts) {
          double vc = closed_form_V(e.id, prob.spec.params, n, t);
          double vr = V(t);
          if (std::fabs(vr - vc) > 1e-9 * (1 + std::fabs(vc)))
            return "chain rule " + num(vr) + " vs closed form " + num(vc) + " at t=" + num(t);
        }
        return std::string();
      });
  }
  return out;
}

void tally(ModelSummary& s, const Outcomes& outs) {
  for (const auto& o : outs) {
    if (o.property == "boundary_decay_note") {
      if (o.status != 1 && s.notes.size() < 3) s.notes.push_back(o.detail);
      continue;
    }
    auto it = std::find_if(s.properties.begin(), s.properties.end(), [&](auto& p) { return p.name == o.property; });
    if (it == s.properties.end()) {
      PropertyTally t;
      t.name = o.property;
      s.properties.push_back(t);
      it = s.properties.end() - 1;
    }
    if (o.status < 0) {
      ++it->skipped;
      continue;
    }
    ++it->checks;
    if (o.status == 0) {
      if (it->failures == 0) it->first_failure = o.detail;
      ++it->failures;
    }
  }
}

}  // namespace

bool ModelSummary::ok() const {
  for (const auto& p : properties)
    if (p.failures) return false;
  return true;
}

bool VerifyReport::ok() const {
  for (const auto& m : models)
    if (!m.ok()) return false;
  return !models.empty();
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QES_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

VerifyReport run_verify(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<size_t, const CatalogEntry*>> entries;
  const auto& cat = catalog();
  if (opt.models.empty()) {
    for (size_t i = 0; i < cat.size(); ++i) entries.push_back({i, &cat[i]});
  } else {
    for (const auto& id : opt.models) {
      const CatalogEntry& e = catalog_entry(id);
      entries.push_back({static_cast<size_t>(&e - cat.data()), &e});
    }
  }

  // job (entry, -1) runs the per-entry checks, (entry, t) trial t
  std::vector<std::pair<size_t, int>> jobs;
  for (size_t k = 0; k < entries.size(); ++k)
    for (int t = -1; t < opt.trials; ++t) jobs.push_back({k, t});
  std::vector<Outcomes> results(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      auto [k, t] = jobs[j];
      const auto& [idx, e] = entries[k];
      results[j] = t < 0 ? run_entry_once(*e, idx, opt) : run_trial(*e, idx, t, opt);
    }
  };
  int nt = std::min<int>(thread_count(opt.threads), static_cast<int>(jobs.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  VerifyReport rep;
  rep.trials = opt.trials;
  rep.seed = opt.seed;
  for (size_t k = 0; k < entries.size(); ++k) {
    ModelSummary s;
    s.id = entries[k].second->id;
    for (size_t j = 0; j < jobs.size(); ++j)
      if (jobs[j].first == k) tally(s, results[j]);
    rep.models.push_back(std::move(s));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

nlohmann::json verify_json(const VerifyReport& r, bool timings) {
  nlohmann::json j;
  j["schema"] = "qes/1";
  j["command"] = "verify";
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  nlohmann::json models = nlohmann::json::array();
  for (const auto& m : r.models) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : m.properties) {
      nlohmann::json pj = {{"name", p.name}, {"checks", p.checks}, {"failures", p.failures}, {"skipped", p.skipped}};
      if (p.failures) pj["first_failure"] = p.first_failure;
      props.push_back(pj);
    }
    models.push_back({{"id", m.id}, {"ok", m.ok()}, {"properties", props}, {"notes", m.notes}});
  }
  j["models"] = models;
  j["status"] = r.ok() ? "ok" : "failed";
  if (timings) j["timings_ms"] = {{"total", num(r.seconds * 1000)}};
  return j;
}

std::string verify_text(const VerifyReport& r) {
  std::string out;
  int failed = 0;
  for (const auto& m : r.models) {
    out += (m.ok() ? "PASS  " : "FAIL  ") + m.id + "\n";
    for (const auto& p : m.properties) {
      out += "      " + p.name + " " + std::to_string(p.checks - p.failures) + "/" + std::to_string(p.checks);
      if (p.skipped) out += " (" + std::to_string(p.skipped) + " skipped)";
      out += "\n";
      if (p.failures) out += "        first failure: " + p.first_failure + "\n";
    }
    for (const auto& note : m.notes) out += "      note: " + note + "\n";
    failed += !m.ok();
  }
  out += std::to_string(r.models.size() - failed) + "/" + std::to_string(r.models.size()) + " models pass\n";
  return out;
}

}  // namespace qes
