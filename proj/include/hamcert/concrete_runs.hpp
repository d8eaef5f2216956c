#pragma once

#include "hamcert/casework.hpp"
#include "hamcert/explicit_group.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hamcert {

struct LiftSample {
  std::size_t cell_index = 0;
  int p = 0;
  int q = 0;
  /// Number of secondary exponents i tried (1 unless the cell has one).
  int exponents = 1;
  /// Length of the verified lifted cycle, i.e. the order of G.
  std::size_t length = 0;
  bool ok = false;
  std::string detail;
};

struct E2EReport {
  PropId prop = PropId::P7_4;
  std::vector<std::pair<int, int>> pairs;
  std::size_t requested = 0;
  std::vector<LiftSample> samples;

  std::size_t count(int p, int q) const;
  /// Every pair got the requested number of samples and every lift verified.
  bool passed() const;
};

/// For each (p, q), takes `sample` certified cells whose characters admit the
/// pair (evenly spaced in cell order), builds G and lifts the certifying
/// cycle through the Factor Group Lemma. A cell with a secondary exponent is
/// lifted for every i mod q; for a pair certificate one of the two cycles
/// must lift for each i.
E2EReport run_e2e(const CaseReport& report, const std::vector<std::pair<int, int>>& pairs, std::size_t sample,
                  int jobs = 1);

/// Lifts one certified cell at one prime pair.
LiftSample lift_cell(const CaseCell& cell, const CellResult& result, int p, int q);

/// The x_p- and x_q-exponents of the walk's voltage computed in G against
/// the reductions of the cyclotomic voltages. Returns an empty string when
/// they agree, else a description of the mismatch.
std::string bridge_mismatch(const CaseCell& cell, const CodedCycle& c, int p, int q, long long secondary_exponent);

struct BridgeReport {
  std::size_t samples = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> mismatches;
  bool passed() const { return samples > 0 && mismatches.empty(); }
};

/// Samples (cell, cycle) pairs among the non-excluded cells of the given
/// reports (round robin), and checks each against both default prime pairs
/// for its characters. Deterministic for a given seed.
BridgeReport run_bridge(const std::vector<const CaseReport*>& reports, std::size_t samples, std::uint64_t seed);

struct Order56SetResult {
  std::vector<Elem> gens;
  int targets = 0;
  int found = 0;
  int none = 0;
  int timeout = 0;
};

struct Order56Replay {
  std::vector<Elem> gens;
  Elem h = 0;
  bool closes_in_h = false;    // s_1 ... s_55 h = 1
  bool voltage_is_z = false;   // V(C) = x_p
  std::size_t lifted_length = 0;
  bool ok = false;
  std::string detail;
};

struct Order56Report {
  std::size_t total_sets = 0;
  std::vector<Order56SetResult> sets;
  bool no_index_two = false;
  std::vector<Order56Replay> replays;

  int timeouts() const;
  bool passed() const;
};

/// Hamiltonian connectivity from the identity for `sample` irredundant
/// generating sets of G56 (evenly spaced; all of them when `sample` is 0),
/// the absence of index-2 subgroups, and the replay of the redundant-case
/// construction in G56 x C_p at p = 11 for each sampled set.
Order56Report run_order56(std::size_t sample, double budget_seconds, int jobs = 1, int p = 11);

/// Indices of `count` items evenly spaced among `total`.
std::vector<std::size_t> spaced_sample(std::size_t total, std::size_t count);

}  // namespace hamcert
