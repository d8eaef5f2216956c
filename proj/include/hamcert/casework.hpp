#pragma once

#include "hamcert/cyclotomic.hpp"
#include "hamcert/group_table.hpp"
#include "hamcert/voltage.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamcert {

enum class PropId { P5_1, P7_4, P7_7, P7_9 };

std::string_view to_string(PropId prop);
/// Accepts "5.1", "7.4", "7.7", "7.9".
PropId prop_from_string(std::string_view text);

/// One (quotient, generating multiset, character pair) configuration.
/// Characters are indices into characters8(group).
struct CaseCell {
  PropId prop = PropId::P7_4;
  GroupId group = GroupId::C8;
  std::vector<GeneratorSpec> gens;
  int chi_p = 0;
  int chi_q = 0;

  const GroupTable& table() const { return group_by_id(group); }
  const Character& character_p() const;
  const Character& character_q() const;
};

enum class Outcome { certified, exception, excluded, unexplained };
enum class Strategy { none, fgl, single, pair };

std::string_view to_string(Outcome o);
std::string_view to_string(Strategy s);

/// A configuration that the coded search cannot certify and that is
/// handled by a separate argument.
struct ExceptionPattern {
  std::string id;
  GroupId group;
  std::vector<GeneratorSpec> gens;
  Character chi_p;
  Character chi_q;
  /// When false only the images in Gbar are compared, not which generators
  /// involve x_p and x_q.
  bool match_involvement = true;
};

/// Lemma5.2, Lemma7.6 and Prop6.1.
const std::vector<ExceptionPattern>& exception_patterns();
const ExceptionPattern& exception_pattern(std::string_view id);

struct ExceptionMatch {
  std::string pattern_id;
  /// Images of canonical_generators() under the automorphism carrying the
  /// pattern onto the cell.
  std::vector<Elem> images;
  bool swap_pq = false;
};

/// Searches Aut(Gbar) x {identity, swap p and q} for a relabeling that
/// carries the pattern onto the cell.
std::optional<ExceptionMatch> match_exception(const CaseCell& cell, const ExceptionPattern& pattern);

/// Checks one specific witness.
bool witness_matches(const CaseCell& cell, const ExceptionPattern& pattern, const std::vector<Elem>& images,
                     bool swap_pq);

struct CellResult {
  Outcome outcome = Outcome::unexplained;
  Strategy strategy = Strategy::none;
  CodedCycle cycle;
  CodedCycle cycle2;
  BigInt norm_p;
  BigInt norm_p2;
  BigInt norm_q;
  std::optional<ExceptionMatch> exception;
  std::string reason;
};

struct CaseReport {
  PropId prop = PropId::P7_4;
  std::vector<CaseCell> cells;
  std::vector<CellResult> results;

  std::size_t count(Outcome o) const;
  std::size_t count(Strategy s) const;
  std::map<std::string, std::size_t> exception_counts() const;
  /// certified + exceptions + unexplained; excluded cells are not scanned.
  std::size_t cells_scanned() const;
  bool passed() const { return count(Outcome::unexplained) == 0; }
};

struct RunOptions {
  /// 1 runs the serial reference loop; larger values use OpenMP workers.
  int jobs = 1;
};

/// Reason a cell lies outside the proposition's hypotheses, if any.
std::optional<std::string> exclusion_reason(const CaseCell& cell);

/// True when `gens` generate a subgroup of order |Gbar| for every admissible
/// p, q and every value of the secondary exponent: their images generate
/// Gbar and the generated subgroup meets C_pq trivially. Decided in
/// Gbar x| (Z[zeta_p] + Z[zeta_q] + Z[zeta_q] i).
bool generic_complement(const GroupTable& g, const std::vector<GeneratorSpec>& gens, const Character& chi_p,
                        const Character& chi_q);

/// All cells of a driver in canonical order, excluded ones included.
std::vector<CaseCell> enumerate_cells(PropId prop);

CaseReport run_prop(PropId prop, const RunOptions& opts = {});
inline CaseReport run_prop_7_4(const RunOptions& opts = {}) { return run_prop(PropId::P7_4, opts); }
inline CaseReport run_prop_7_7(const RunOptions& opts = {}) { return run_prop(PropId::P7_7, opts); }
inline CaseReport run_prop_7_9(const RunOptions& opts = {}) { return run_prop(PropId::P7_9, opts); }
inline CaseReport run_prop_5_1(const RunOptions& opts = {}) { return run_prop(PropId::P5_1, opts); }

/// Evaluates a single cell from scratch.
CellResult evaluate_cell(const CaseCell& cell);

/// Exception patterns a driver may fall back on.
std::vector<std::string> allowed_exceptions(PropId prop);

}  // namespace hamcert
