#include "hamcert/concrete_runs.hpp"

#include "hamcert/ham_search.hpp"

#include <algorithm>
#include <random>

namespace hamcert {

std::vector<std::size_t> spaced_sample(std::size_t total, std::size_t count) {
  std::vector<std::size_t> out;
  if (count == 0 || count >= total) {
    for (std::size_t i = 0; i < total; ++i) out.push_back(i);
    return out;
  }
  for (std::size_t k = 0; k < count; ++k) out.push_back(k * total / count);
  return out;
}

namespace {

bool has_secondary(const std::vector<GeneratorSpec>& gens) {
  return std::any_of(gens.begin(), gens.end(), [](const GeneratorSpec& s) { return s.q_secondary; });
}

}  // namespace

LiftSample lift_cell(const CaseCell& cell, const CellResult& result, int p, int q) {
  LiftSample s;
  s.p = p;
  s.q = q;
  if (result.outcome != Outcome::certified) {
    s.detail = "cell is not certified";
    return s;
  }
  try {
    const ExplicitGroup g = build_explicit(cell.table(), cell.character_p(), cell.character_q(), p, q);
    const bool secondary = has_secondary(cell.gens);
    s.exponents = secondary ? q : 1;
    for (int i = secondary ? 0 : 1; i < (secondary ? q : 2); ++i) {
      try {
        s.length = fgl_lift_cpq(g, lift_walk(g, result.cycle, cell.gens, i)).size();
      } catch (const FglError& e) {
        if (result.strategy != Strategy::pair) {
          s.detail = "i = " + std::to_string(i) + ": " + e.what();
          return s;
        }
        try {
          s.length = fgl_lift_cpq(g, lift_walk(g, result.cycle2, cell.gens, i)).size();
        } catch (const FglError& e2) {
          s.detail = "i = " + std::to_string(i) + ": neither cycle lifts: " + e2.what();
          return s;
        }
      }
    }
    s.ok = s.length == static_cast<std::size_t>(g.order());
    if (!s.ok) s.detail = "lift has the wrong length";
  } catch (const ConcreteError& e) {
    s.detail = e.what();
  }
  return s;
}

std::size_t E2EReport::count(int p, int q) const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [&](const LiftSample& s) { return s.p == p && s.q == q; }));
}

bool E2EReport::passed() const {
  if (requested == 0) return false;
  for (const auto& [p, q] : pairs)
    if (count(p, q) < requested) return false;
  return std::all_of(samples.begin(), samples.end(), [](const LiftSample& s) { return s.ok; });
}

E2EReport run_e2e(const CaseReport& report, const std::vector<std::pair<int, int>>& pairs, std::size_t sample,
                  int jobs) {
  E2EReport out;
  out.prop = report.prop;
  out.pairs = pairs;
  out.requested = sample;
  for (const auto& [p, q] : pairs) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
      const auto& c = report.cells[i];
      if (report.results[i].outcome == Outcome::certified &&
          admissible_pair(c.character_p(), c.character_q(), p, q))
        eligible.push_back(i);
    }
    const auto picks = spaced_sample(eligible.size(), sample);
    std::vector<LiftSample> part(picks.size());
    const auto n = static_cast<long long>(picks.size());
#pragma omp parallel for num_threads(std::max(1, jobs)) schedule(dynamic) if (jobs > 1)
    for (long long k = 0; k < n; ++k) {
      const std::size_t idx = eligible[picks[static_cast<std::size_t>(k)]];
      part[static_cast<std::size_t>(k)] = lift_cell(report.cells[idx], report.results[idx], p, q);
      part[static_cast<std::size_t>(k)].cell_index = idx;
    }
    out.samples.insert(out.samples.end(), part.begin(), part.end());
  }
  return out;
}

std::string bridge_mismatch(const CaseCell& cell, const CodedCycle& c, int p, int q, long long secondary_exponent) {
  const auto& base = cell.table();
  const ExplicitGroup g = build_explicit(base, cell.character_p(), cell.character_q(), p, q);
  const GElem v = walk_product(g, lift_walk(g, c, cell.gens, secondary_exponent));
  if (v.g != GroupTable::identity()) return "walk does not close in the quotient";
  const long long ep = reduce_cyc(twisted_voltage(base, c, cell.gens, cell.character_p(), Prime::p), p, g.root_p());
  const DualVoltage dv = dual_voltage(base, c, cell.gens, cell.character_q());
  const long long i = ((secondary_exponent % q) + q) % q;
  const long long eq =
      (reduce_cyc(dv.primary, q, g.root_q()) + i * reduce_cyc(dv.secondary, q, g.root_q())) % q;
  if (ep == v.a && eq == v.b) return "";
  return "(p, q) = (" + std::to_string(p) + ", " + std::to_string(q) + "): G gives x_p^" + std::to_string(v.a) +
         " x_q^" + std::to_string(v.b) + ", reduction gives x_p^" + std::to_string(ep) + " x_q^" +
         std::to_string(eq);
}

BridgeReport run_bridge(const std::vector<const CaseReport*>& reports, std::size_t samples, std::uint64_t seed) {
  BridgeReport out;
  std::vector<std::vector<std::size_t>> open(reports.size());
  for (std::size_t r = 0; r < reports.size(); ++r)
    for (std::size_t i = 0; i < reports[r]->cells.size(); ++i)
      if (reports[r]->results[i].outcome != Outcome::excluded) open[r].push_back(i);
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t r = k % reports.size();
    if (open[r].empty()) continue;
    const CaseCell& cell = reports[r]->cells[open[r][pick(open[r].size())]];
    const auto cycles = enumerate_ham_cycles(cell.table(), cell.gens);
    const CodedCycle& c = cycles[pick(cycles.size())];
    ++out.samples;
    for (const auto& [p, q] : default_prime_pairs(cell.character_p().conductor, cell.character_q().conductor)) {
      const auto i = static_cast<long long>(pick(static_cast<std::size_t>(q)));
      ++out.comparisons;
      if (auto m = bridge_mismatch(cell, c, p, q, i); !m.empty()) out.mismatches.push_back(m);
    }
  }
  return out;
}

int Order56Report::timeouts() const {
  int t = 0;
  for (const auto& s : sets) t += s.timeout;
  return t;
}

bool Order56Report::passed() const {
  if (sets.empty() || !no_index_two) return false;
  for (const auto& s : sets)
    if (s.found != s.targets) return false;
  return std::all_of(replays.begin(), replays.end(), [](const Order56Replay& r) { return r.ok; });
}

namespace {

Order56Replay replay_redundant_case(const GroupTable& h56, const std::vector<Elem>& s0, double budget, int p) {
  Order56Replay r;
  r.gens = s0;
  Elem h = 1;
  while (h < h56.order() && std::any_of(s0.begin(), s0.end(), [&](Elem s) { return s == h || h56.inv(s) == h; }))
    ++h;
  r.h = h;
  const auto path = ham_path(h56, s0, h56.inv(h), budget);
  if (path.status != PathStatus::found) {
    r.detail = path.status == PathStatus::timeout ? "path search timed out" : "no hamiltonian path";
    return r;
  }
  Elem prod = GroupTable::identity();
  for (Elem s : path.steps) prod = h56.mul(prod, s);
  r.closes_in_h = h56.mul(prod, h) == GroupTable::identity();

  // p = 11 is not 1 mod 7, so G56 acts trivially on C_p and G = G56 x C_p.
  const ExplicitGroup g = build_explicit_single(h56, Character{1, std::vector<int>(56, 0)}, p);
  std::vector<GElem> cycle;
  for (Elem s : path.steps) cycle.push_back(g.make(s, 0, 0));
  cycle.push_back(g.make(h, 1, 0));
  r.voltage_is_z = walk_product(g, cycle) == g.x_p();
  try {
    r.lifted_length = fgl_lift(g, g.x_p(), cycle).size();
  } catch (const FglError& e) {
    r.detail = e.what();
    return r;
  }
  r.ok = r.closes_in_h && r.voltage_is_z && r.lifted_length == static_cast<std::size_t>(g.order());
  return r;
}

}  // namespace

Order56Report run_order56(std::size_t sample, double budget_seconds, int jobs, int p) {
  const GroupTable& h56 = g56();
  Order56Report out;
  out.no_index_two = abelian_characters(h56, 2).size() == 1;
  const auto all = irredundant_generating_sets(h56);
  out.total_sets = all.size();
  for (std::size_t i : spaced_sample(all.size(), sample)) out.sets.push_back({all[i]});

  const int targets = h56.order() - 1;
  const auto n = static_cast<long long>(out.sets.size()) * targets;
  std::vector<PathStatus> status(static_cast<std::size_t>(n));
#pragma omp parallel for num_threads(std::max(1, jobs)) schedule(dynamic) if (jobs > 1)
  for (long long w = 0; w < n; ++w) {
    const auto& s = out.sets[static_cast<std::size_t>(w / targets)].gens;
    const Elem t = static_cast<Elem>(w % targets) + 1;
    auto res = ham_path(h56, s, t, budget_seconds);
    if (res.status == PathStatus::found && !verify_ham_path(h56, s, res.steps, t)) res.status = PathStatus::none;
    status[static_cast<std::size_t>(w)] = res.status;
  }
  for (long long w = 0; w < n; ++w) {
    auto& s = out.sets[static_cast<std::size_t>(w / targets)];
    ++s.targets;
    switch (status[static_cast<std::size_t>(w)]) {
      case PathStatus::found: ++s.found; break;
      case PathStatus::none: ++s.none; break;
      case PathStatus::timeout: ++s.timeout; break;
    }
  }
  for (const auto& s : out.sets) out.replays.push_back(replay_redundant_case(h56, s.gens, budget_seconds, p));
  return out;
}

}  // namespace hamcert
