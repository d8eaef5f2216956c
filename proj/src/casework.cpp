#include "hamcert/casework.hpp"

#include "hamcert/ham_search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hamcert {

std::string_view to_string(PropId prop) {
  switch (prop) {
    case PropId::P5_1: return "5.1";
    case PropId::P7_4: return "7.4";
    case PropId::P7_7: return "7.7";
    case PropId::P7_9: return "7.9";
  }
  return "?";
}

PropId prop_from_string(std::string_view text) {
  for (PropId p : {PropId::P5_1, PropId::P7_4, PropId::P7_7, PropId::P7_9})
    if (to_string(p) == text) return p;
  throw std::invalid_argument("unknown proposition: " + std::string(text));
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::certified: return "certified";
    case Outcome::exception: return "exception";
    case Outcome::excluded: return "excluded";
    case Outcome::unexplained: return "unexplained";
  }
  return "?";
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::none: return "none";
    case Strategy::fgl: return "fgl";
    case Strategy::single: return "single";
    case Strategy::pair: return "pair";
  }
  return "?";
}

const Character& CaseCell::character_p() const { return characters8(group).at(static_cast<std::size_t>(chi_p)); }
const Character& CaseCell::character_q() const { return characters8(group).at(static_cast<std::size_t>(chi_q)); }

namespace {

Character sign_character(GroupId id, const std::map<std::string, int>& signs) {
  const auto& g = group_by_id(id);
  for (const auto& chi : characters8(id)) {
    if (chi.conductor > 2) continue;
    if (std::all_of(signs.begin(), signs.end(),
                    [&](const auto& kv) { return (chi(g.at(kv.first)) == 0) == (kv.second == 1); }))
      return chi;
  }
  throw std::logic_error("no character with the requested signs");
}

GeneratorSpec spec(GroupId id, std::string_view label, bool p = false, bool q = false, bool secondary = false) {
  return {group_by_id(id).at(label), p, q, secondary};
}

std::vector<GeneratorSpec> sorted(std::vector<GeneratorSpec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

const std::vector<ExceptionPattern>& exception_patterns() {
  static const std::vector<ExceptionPattern> patterns = [] {
    using G = GroupId;
    std::vector<ExceptionPattern> out;
    // S = {e1 x_q, e2, e3, e1 e2 x_p}; e1 inverts C_p and C_q, e2 and e3
    // centralize C_p and invert C_q.
    out.push_back({"Lemma5.2",
                   G::E8,
                   {spec(G::E8, "e1", false, true), spec(G::E8, "e2"), spec(G::E8, "e3"),
                    spec(G::E8, "e1e2", true, false)},
                   sign_character(G::E8, {{"e1", -1}, {"e2", 1}, {"e3", 1}}),
                   sign_character(G::E8, {{"e1", -1}, {"e2", -1}, {"e3", -1}})});
    // S = {a, b, c, a b x_p x_q}; a inverts C_p and centralizes C_q, b and c
    // centralize C_p and invert C_q.
    out.push_back({"Lemma7.6",
                   G::E8,
                   {spec(G::E8, "e1"), spec(G::E8, "e2"), spec(G::E8, "e3"), spec(G::E8, "e1e2", true, true)},
                   sign_character(G::E8, {{"e1", -1}, {"e2", 1}, {"e3", 1}}),
                   sign_character(G::E8, {{"e1", 1}, {"e2", -1}, {"e3", -1}})});
    // Sbar = {f, f x4^-1, f x4}, whichever generators involve x_p and x_q;
    // f centralizes C_p and inverts C_q, x4 inverts C_p and centralizes C_q.
    out.push_back({"Prop6.1",
                   G::D8,
                   {spec(G::D8, "f"), spec(G::D8, "fx3", false, true), spec(G::D8, "fx", true, true, true)},
                   sign_character(G::D8, {{"f", 1}, {"x", -1}}),
                   sign_character(G::D8, {{"f", -1}, {"x", 1}}),
                   false});
    return out;
  }();
  return patterns;
}

const ExceptionPattern& exception_pattern(std::string_view id) {
  for (const auto& p : exception_patterns())
    if (p.id == id) return p;
  throw std::invalid_argument("unknown exception pattern: " + std::string(id));
}

namespace {

bool relabeled_match(const CaseCell& cell, const ExceptionPattern& pattern, const Automorphism& phi, bool swap) {
  std::vector<GeneratorSpec> mapped;
  for (auto s : pattern.gens) {
    s.gbar = phi[static_cast<std::size_t>(s.gbar)];
    if (swap) std::swap(s.inv_p, s.inv_q);
    mapped.push_back(s);
  }
  std::vector<GeneratorSpec> target = cell.gens;
  if (!pattern.match_involvement)
    for (auto* v : {&mapped, &target})
      for (auto& s : *v) s = GeneratorSpec{s.gbar};
  if (sorted(mapped) != sorted(target)) return false;
  const Character& pp = swap ? pattern.chi_q : pattern.chi_p;
  const Character& pq = swap ? pattern.chi_p : pattern.chi_q;
  const Character& cp = cell.character_p();
  const Character& cq = cell.character_q();
  if (cp.conductor != pp.conductor || cq.conductor != pq.conductor) return false;
  for (Elem x = 0; x < cell.table().order(); ++x) {
    const Elem y = phi[static_cast<std::size_t>(x)];
    if (cp(y) != pp(x) || cq(y) != pq(x)) return false;
  }
  return true;
}

}  // namespace

std::optional<ExceptionMatch> match_exception(const CaseCell& cell, const ExceptionPattern& pattern) {
  if (cell.group != pattern.group || cell.gens.size() != pattern.gens.size()) return std::nullopt;
  const auto gens = canonical_generators(cell.table());
  for (bool swap : {false, true})
    for (const auto& phi : automorphisms(cell.group))
      if (relabeled_match(cell, pattern, phi, swap)) {
        ExceptionMatch m{pattern.id, {}, swap};
        for (Elem x : gens) m.images.push_back(phi[static_cast<std::size_t>(x)]);
        return m;
      }
  return std::nullopt;
}

bool witness_matches(const CaseCell& cell, const ExceptionPattern& pattern, const std::vector<Elem>& images,
                     bool swap_pq) {
  if (cell.group != pattern.group) return false;
  const auto gens = canonical_generators(cell.table());
  if (images.size() != gens.size()) return false;
  for (const auto& phi : automorphisms(cell.group)) {
    bool same = true;
    for (std::size_t k = 0; k < gens.size(); ++k) same = same && phi[static_cast<std::size_t>(gens[k])] == images[k];
    if (same) return relabeled_match(cell, pattern, phi, swap_pq);
  }
  return false;
}

std::vector<std::string> allowed_exceptions(PropId prop) {
  switch (prop) {
    case PropId::P5_1: return {"Lemma5.2"};
    case PropId::P7_7: return {"Lemma7.6"};
    case PropId::P7_9: return {"Prop6.1"};
    case PropId::P7_4: return {};
  }
  return {};
}

namespace {

/// Element of Gbar x| (Z[zeta] p-part, and q-part split into the primary
/// coefficient and the coefficient of the unknown exponent i).
struct GenericElem {
  Elem g;
  CycInt zp;
  CycInt zq1;
  CycInt zq2;
};

}  // namespace

bool generic_complement(const GroupTable& g, const std::vector<GeneratorSpec>& gens, const Character& chi_p,
                        const Character& chi_q) {
  const int mp = chi_p.conductor, mq = chi_q.conductor;
  auto mul = [&](const GenericElem& x, const GenericElem& y) {
    return GenericElem{g.mul(x.g, y.g), CycInt::zeta_power(mp, chi_p(y.g)) * x.zp + y.zp,
                       CycInt::zeta_power(mq, chi_q(y.g)) * x.zq1 + y.zq1,
                       CycInt::zeta_power(mq, chi_q(y.g)) * x.zq2 + y.zq2};
  };
  std::vector<GenericElem> step;
  for (const auto& s : gens)
    step.push_back({s.gbar, CycInt::integer(mp, s.inv_p ? 1 : 0),
                    CycInt::integer(mq, s.inv_q && !s.q_secondary ? 1 : 0),
                    CycInt::integer(mq, s.inv_q && s.q_secondary ? 1 : 0)});
  std::vector<std::optional<GenericElem>> seen(static_cast<std::size_t>(g.order()));
  seen[0] = GenericElem{0, CycInt(mp), CycInt(mq), CycInt(mq)};
  std::vector<Elem> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : step) {
      const GenericElem y = mul(*seen[static_cast<std::size_t>(queue[k])], s);
      auto& slot = seen[static_cast<std::size_t>(y.g)];
      if (!slot) {
        slot = y;
        queue.push_back(y.g);
      } else if (!(slot->zp == y.zp && slot->zq1 == y.zq1 && slot->zq2 == y.zq2)) {
        return false;
      }
    }
  return static_cast<int>(queue.size()) == g.order();
}

namespace {

std::string pair_label(const GroupTable& g, const CaseCell& cell, std::size_t i, std::size_t j) {
  return "{" + generator_label(g, cell.gens[i]) + ", " + generator_label(g, cell.gens[j]) + "}";
}

}  // namespace

std::optional<std::string> exclusion_reason(const CaseCell& cell) {
  const auto& g = cell.table();
  const Character& chi_p = cell.character_p();
  const Character& chi_q = cell.character_q();
  if (chi_p.is_trivial()) return "chi_p trivial: Gbar centralizes C_p, so C_pq is not in G'";
  if (chi_q.is_trivial()) return "chi_q trivial: Gbar centralizes C_q, so C_pq is not in G'";
  const ElemSet derived = derived_subgroup(g);
  switch (cell.prop) {
    case PropId::P7_4:
      for (const auto& s : cell.gens)
        if (s.involved() && s.gbar == GroupTable::identity())
          return "generator " + generator_label(g, s) + " lies in C_pq, so S meets G'";
      break;
    case PropId::P7_7:
      for (const auto& s : cell.gens)
        if (s.involved() && contains(derived, s.gbar))
          return "generator " + generator_label(g, s) + " lies in G' since its image lies in P2'";
      break;
    case PropId::P7_9: {
      const auto& a = cell.gens[0];
      const auto& c = cell.gens[2];
      if (chi_q(a.gbar) == 0) return "a centralizes C_q";
      if (contains(derived, c.gbar)) return "c lies in G' since its image lies in P2'";
      for (std::size_t i = 0; i < cell.gens.size(); ++i)
        for (std::size_t j = i + 1; j < cell.gens.size(); ++j)
          if (generic_complement(g, {cell.gens[i], cell.gens[j]}, chi_p, chi_q))
            return "subset " + pair_label(g, cell, i, j) + " generates a subgroup of order 8 for every i";
      break;
    }
    case PropId::P5_1: {
      const auto& x = cell.gens[3];
      if (!g.generates(singleton(cell.gens[1].gbar) | singleton(cell.gens[2].gbar) | singleton(x.gbar)))
        return "the images of e2, e3 and " + generator_label(g, x) + " do not generate Gbar";
      break;
    }
  }
  return std::nullopt;
}

std::vector<CaseCell> enumerate_cells(PropId prop) {
  std::vector<CaseCell> cells;
  auto add_all_pairs = [&](GroupId id, const std::vector<GeneratorSpec>& gens) {
    const int n = static_cast<int>(characters8(id).size());
    for (int cp = 0; cp < n; ++cp)
      for (int cq = 0; cq < n; ++cq) cells.push_back({prop, id, gens, cp, cq});
  };
  switch (prop) {
    case PropId::P7_4:
    case PropId::P7_7:
      for (const auto& g : order8_catalog())
        for (const auto& s0 : irredundant_generating_sets(g)) {
          std::vector<GeneratorSpec> base;
          for (Elem x : s0) base.push_back({x});
          if (prop == PropId::P7_4) {
            for (Elem a = 0; a < g.order(); ++a)
              for (Elem b = 0; b < g.order(); ++b) {
                auto gens = base;
                gens.push_back({a, true, false});
                gens.push_back({b, false, true});
                add_all_pairs(g.id(), gens);
              }
          } else {
            for (Elem x = 0; x < g.order(); ++x) {
              auto gens = base;
              gens.push_back({x, true, true});
              add_all_pairs(g.id(), gens);
            }
          }
        }
      break;
    case PropId::P5_1: {
      const auto& g = group_by_id(GroupId::E8);
      for (Elem e1 = 1; e1 < 8; ++e1)
        for (Elem e2 = 1; e2 < 8; ++e2)
          for (Elem e3 = e2 + 1; e3 < 8; ++e3) {
            if (!g.generates(singleton(e1) | singleton(e2) | singleton(e3))) continue;
            for (Elem x = 1; x < 8; ++x) add_all_pairs(GroupId::E8, {{e1, false, true}, {e2}, {e3}, {x, true, false}});
          }
      break;
    }
    case PropId::P7_9:
      for (GroupId id : {GroupId::C4xC2, GroupId::D8, GroupId::Q8}) {
        const auto& g = group_by_id(id);
        for (Elem a = 1; a < 8; ++a)
          for (Elem b = 1; b < 8; ++b) {
            if (!g.generates(singleton(a) | singleton(b))) continue;
            for (Elem c = 0; c < 8; ++c) add_all_pairs(id, {{a}, {b, false, true}, {c, true, true, true}});
          }
      }
      break;
  }
  return cells;
}

namespace {

/// Evaluates consecutive cells sharing a quotient and generator list; the
/// coded cycles are enumerated once for all of them.
class GroupEvaluator {
 public:
  explicit GroupEvaluator(std::span<const CaseCell> cells)
      : cells_(cells), g_(cells.front().table()), gens_(cells.front().gens), results_(cells.size()) {}

  std::vector<CellResult> run() {
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      if (auto reason = exclusion_reason(cells_[k])) {
        results_[k].outcome = Outcome::excluded;
        results_[k].reason = std::move(*reason);
      } else {
        pending_.push_back(k);
      }
    }
    if (pending_.empty()) return std::move(results_);
    if (cells_.front().prop == PropId::P7_9)
      run_dual();
    else
      run_fgl();
    for (std::size_t k : pending_) {
      for (const auto& id : allowed_exceptions(cells_[k].prop))
        if (auto m = match_exception(cells_[k], exception_pattern(id))) {
          results_[k].outcome = Outcome::exception;
          results_[k].exception = std::move(m);
          break;
        }
    }
    return std::move(results_);
  }

 private:
  const std::vector<Character>& chars() const { return characters8(g_.id()); }

  void run_fgl() {
    const auto ep = involvement_exponents(gens_, Prime::p);
    const auto eq = involvement_exponents(gens_, Prime::q);
    const std::size_t nchar = chars().size();
    std::vector<signed char> smooth_p(nchar), smooth_q(nchar);
    for_each_ham_cycle(g_, gens_, [&](const CodedCycle& c) {
      std::fill(smooth_p.begin(), smooth_p.end(), -1);
      std::fill(smooth_q.begin(), smooth_q.end(), -1);
      auto smooth = [&](std::vector<signed char>& cache, int idx, const std::vector<int>& e) {
        auto& slot = cache[static_cast<std::size_t>(idx)];
        if (slot < 0) slot = smooth5(norm(walk_voltage(g_, c, gens_, e, chars()[static_cast<std::size_t>(idx)])));
        return slot == 1;
      };
      std::vector<std::size_t> still;
      for (std::size_t k : pending_) {
        const auto& cell = cells_[k];
        if (smooth(smooth_p, cell.chi_p, ep) && smooth(smooth_q, cell.chi_q, eq)) {
          auto& r = results_[k];
          r.outcome = Outcome::certified;
          r.strategy = Strategy::fgl;
          r.cycle = c;
          r.norm_p = norm(walk_voltage(g_, c, gens_, ep, cell.character_p()));
          r.norm_q = norm(walk_voltage(g_, c, gens_, eq, cell.character_q()));
        } else {
          still.push_back(k);
        }
      }
      pending_ = std::move(still);
      return !pending_.empty();
    });
  }

  void run_dual() {
    const auto cycles = enumerate_ham_cycles(g_, gens_);
    const auto ep = involvement_exponents(gens_, Prime::p);
    std::map<int, std::vector<std::size_t>> p_certified;
    std::map<int, std::vector<DualVoltage>> duals;
    std::vector<std::size_t> still;
    for (std::size_t k : pending_) {
      const auto& cell = cells_[k];
      auto [pit, p_new] = p_certified.try_emplace(cell.chi_p);
      if (p_new)
        for (std::size_t i = 0; i < cycles.size(); ++i)
          if (smooth5(norm(walk_voltage(g_, cycles[i], gens_, ep, cell.character_p())))) pit->second.push_back(i);
      auto [dit, d_new] = duals.try_emplace(cell.chi_q);
      if (d_new)
        for (const auto& c : cycles) dit->second.push_back(dual_voltage(g_, c, gens_, cell.character_q()));
      const auto& pc = pit->second;
      const auto& dv = dit->second;
      auto& r = results_[k];
      auto norm_p = [&](std::size_t i) { return norm(walk_voltage(g_, cycles[i], gens_, ep, cell.character_p())); };
      for (std::size_t i : pc)
        if (auto n = strategy_single(dv[i])) {
          r.outcome = Outcome::certified;
          r.strategy = Strategy::single;
          r.cycle = cycles[i];
          r.norm_p = norm_p(i);
          r.norm_q = *n;
          break;
        }
      for (std::size_t x = 0; x < pc.size() && r.outcome != Outcome::certified; ++x)
        for (std::size_t y = x + 1; y < pc.size(); ++y)
          if (auto n = strategy_pair(dv[pc[x]], dv[pc[y]])) {
            r.outcome = Outcome::certified;
            r.strategy = Strategy::pair;
            r.cycle = cycles[pc[x]];
            r.cycle2 = cycles[pc[y]];
            r.norm_p = norm_p(pc[x]);
            r.norm_p2 = norm_p(pc[y]);
            r.norm_q = *n;
            break;
          }
      if (r.outcome != Outcome::certified) still.push_back(k);
    }
    pending_ = std::move(still);
  }

  std::span<const CaseCell> cells_;
  const GroupTable& g_;
  std::vector<GeneratorSpec> gens_;
  std::vector<CellResult> results_;
  std::vector<std::size_t> pending_;
};

/// [begin, end) ranges of consecutive cells with the same group and generators.
std::vector<std::pair<std::size_t, std::size_t>> work_ranges(const std::vector<CaseCell>& cells) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i + 1;
    while (j < cells.size() && cells[j].group == cells[i].group && cells[j].gens == cells[i].gens) ++j;
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

}  // namespace

CellResult evaluate_cell(const CaseCell& cell) {
  return GroupEvaluator(std::span<const CaseCell>(&cell, 1)).run().front();
}

CaseReport run_prop(PropId prop, const RunOptions& opts) {
  CaseReport report;
  report.prop = prop;
  report.cells = enumerate_cells(prop);
  report.results.resize(report.cells.size());
  const auto ranges = work_ranges(report.cells);
  const std::span<const CaseCell> all(report.cells);
  auto evaluate = [&](std::size_t w) {
    const auto [begin, end] = ranges[w];
    auto res = GroupEvaluator(all.subspan(begin, end - begin)).run();
    std::move(res.begin(), res.end(), report.results.begin() + static_cast<std::ptrdiff_t>(begin));
  };
  if (opts.jobs <= 1) {
    for (std::size_t w = 0; w < ranges.size(); ++w) evaluate(w);
  } else {
    const auto n = static_cast<long long>(ranges.size());
#pragma omp parallel for num_threads(opts.jobs) schedule(dynamic)
    for (long long w = 0; w < n; ++w) evaluate(static_cast<std::size_t>(w));
  }
  return report;
}

std::size_t CaseReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [o](const CellResult& r) { return r.outcome == o; }));
}

std::size_t CaseReport::count(Strategy s) const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [s](const CellResult& r) {
    return r.outcome == Outcome::certified && r.strategy == s;
  }));
}

std::map<std::string, std::size_t> CaseReport::exception_counts() const {
  std::map<std::string, std::size_t> out;
  for (const auto& r : results)
    if (r.outcome == Outcome::exception) ++out[r.exception->pattern_id];
  return out;
}

std::size_t CaseReport::cells_scanned() const {
  return count(Outcome::certified) + count(Outcome::exception) + count(Outcome::unexplained);
}

}  // namespace hamcert
