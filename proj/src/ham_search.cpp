#include "hamcert/ham_search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace hamcert {

namespace {

struct Move {
  int code;
  Elem step;
};

std::vector<Move> coded_moves(const GroupTable& g, std::span<const GeneratorSpec> gens) {
  std::vector<Move> moves;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const int code = static_cast<int>(k) + 1;
    const Elem x = gens[k].gbar;
    moves.push_back({code, x});
    if (g.inv(x) != x || gens[k].involved()) moves.push_back({-code, g.inv(x)});
  }
  return moves;
}

void require_generates(const GroupTable& g, std::span<const GeneratorSpec> gens) {
  ElemSet support = 0;
  for (const auto& s : gens) support |= singleton(s.gbar);
  if (!g.generates(support)) throw GroupError("generators do not generate " + std::string(to_string(g.id())));
}

class CycleDfs {
 public:
  CycleDfs(const GroupTable& g, std::vector<Move> moves, const CycleVisitor& visit)
      : g_(g), moves_(std::move(moves)), visit_(visit) {
    path_.steps.reserve(static_cast<std::size_t>(g.order()));
  }

  bool run() { return extend(GroupTable::identity(), singleton(GroupTable::identity())); }

 private:
  // Returns false once the visitor asks to stop.
  bool extend(Elem cur, ElemSet visited) {
    const bool last = popcount(visited) == g_.order();
    for (const Move& m : moves_) {
      const Elem next = g_.mul(cur, m.step);
      if (last ? next != GroupTable::identity() : contains(visited, next)) continue;
      path_.steps.push_back(m.code);
      const bool go_on = last ? visit_(path_) : extend(next, visited | singleton(next));
      path_.steps.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const GroupTable& g_;
  std::vector<Move> moves_;
  const CycleVisitor& visit_;
  CodedCycle path_;
};

}  // namespace

bool for_each_ham_cycle(const GroupTable& g, std::span<const GeneratorSpec> gens, const CycleVisitor& visit) {
  if (g.order() > 64) throw GroupError("coded-cycle enumeration needs a group of order at most 64");
  require_generates(g, gens);
  return CycleDfs(g, coded_moves(g, gens), visit).run();
}

std::vector<CodedCycle> enumerate_ham_cycles(const GroupTable& g, std::span<const GeneratorSpec> gens) {
  std::vector<CodedCycle> out;
  for_each_ham_cycle(g, gens, [&out](const CodedCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<CodedCycle> enumerate_ham_cycles(const GroupTable& g, const GenMultiset& s) {
  std::vector<GeneratorSpec> gens;
  for (Elem x : s) gens.push_back({x});
  return enumerate_ham_cycles(g, gens);
}

namespace {

class PathSearch {
 public:
  PathSearch(const GroupTable& g, const GenMultiset& s, Elem target, double budget_seconds)
      : g_(g), n_(g.order()), target_(target),
        deadline_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                          std::chrono::duration<double>(budget_seconds))) {
    ElemSet steps = 0;
    for (Elem x : s)
      if (x != GroupTable::identity()) steps |= singleton(x) | singleton(g.inv(x));
    nbr_.assign(static_cast<std::size_t>(n_), 0);
    for (Elem v = 0; v < n_; ++v)
      for (Elem x : elements_of(steps)) nbr_[static_cast<std::size_t>(v)] |= singleton(g.mul(v, x));
  }

  HamPathResult run() {
    HamPathResult r;
    order_.push_back(GroupTable::identity());
    const ElemSet unvisited = g_.all() & ~singleton(GroupTable::identity());
    try {
      r.status = dfs(GroupTable::identity(), unvisited) ? PathStatus::found : PathStatus::none;
    } catch (const Timeout&) {
      r.status = PathStatus::timeout;
    }
    r.nodes = nodes_;
    if (r.status == PathStatus::found)
      for (std::size_t i = 1; i < order_.size(); ++i) r.steps.push_back(g_.mul(g_.inv(order_[i - 1]), order_[i]));
    return r;
  }

 private:
  struct Timeout {};

  ElemSet nbr(Elem v) const { return nbr_[static_cast<std::size_t>(v)]; }

  bool feasible(Elem cur, ElemSet unvisited) const {
    const ElemSet live = unvisited | singleton(cur);
    for (ElemSet rest = unvisited; rest != 0; rest &= rest - 1) {
      const Elem u = std::countr_zero(rest);
      const int deg = std::popcount(nbr(u) & live);
      if (deg < (u == target_ ? 1 : 2)) return false;
    }
    // Everything unvisited must stay reachable from the current vertex.
    ElemSet reach = singleton(cur);
    ElemSet frontier = reach;
    while (frontier != 0) {
      ElemSet next = 0;
      for (ElemSet f = frontier; f != 0; f &= f - 1) next |= nbr(std::countr_zero(f));
      next &= unvisited & ~reach;
      reach |= next;
      frontier = next;
    }
    return (unvisited & ~reach) == 0;
  }

  bool dfs(Elem cur, ElemSet unvisited) {
    if (++nodes_ % 4096 == 0 && std::chrono::steady_clock::now() > deadline_) throw Timeout{};
    if (unvisited == singleton(target_)) {
      if (!contains(nbr(cur), target_)) return false;
      order_.push_back(target_);
      return true;
    }
    if (!feasible(cur, unvisited)) return false;
    // Fewest onward options first; the target is only entered last.
    std::vector<std::pair<int, Elem>> cand;
    for (ElemSet c = nbr(cur) & unvisited & ~singleton(target_); c != 0; c &= c - 1) {
      const Elem v = std::countr_zero(c);
      cand.emplace_back(std::popcount(nbr(v) & unvisited), v);
    }
    std::sort(cand.begin(), cand.end());
    for (const auto& [deg, v] : cand) {
      order_.push_back(v);
      if (dfs(v, unvisited & ~singleton(v))) return true;
      order_.pop_back();
    }
    return false;
  }

  const GroupTable& g_;
  int n_;
  Elem target_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<ElemSet> nbr_;
  std::vector<Elem> order_;
  long long nodes_ = 0;
};

}  // namespace

HamPathResult ham_path(const GroupTable& g, const GenMultiset& s, Elem target, double budget_seconds) {
  if (g.order() > 64) throw GroupError("ham_path supports groups of order at most 64");
  if (target == GroupTable::identity() || target < 0 || target >= g.order())
    throw GroupError("ham_path target must be a non-identity element");
  return PathSearch(g, s, target, budget_seconds).run();
}

bool verify_ham_path(const GroupTable& g, const GenMultiset& s, std::span<const Elem> steps, Elem target) {
  if (steps.size() + 1 != static_cast<std::size_t>(g.order())) return false;
  ElemSet allowed = 0;
  for (Elem x : s) allowed |= singleton(x) | singleton(g.inv(x));
  ElemSet seen = singleton(GroupTable::identity());
  Elem cur = GroupTable::identity();
  for (Elem x : steps) {
    if (!contains(allowed, x)) return false;
    cur = g.mul(cur, x);
    if (contains(seen, cur)) return false;
    seen |= singleton(cur);
  }
  return cur == target;
}

}  // namespace hamcert
