#pragma once

#include "hamcert/group_table.hpp"
#include "hamcert/voltage.hpp"

#include <functional>
#include <span>
#include <vector>

namespace hamcert {

/// Called once per coded cycle; return false to stop the enumeration.
using CycleVisitor = std::function<bool(const CodedCycle&)>;

/// Depth-first enumeration of coded hamiltonian cycles based at the identity.
/// Steps are tried in the order +1, -1, +2, -2, ...; the step -k is skipped
/// when gbar_k is an involution and generator k is uninvolved, since it then
/// coincides with +k. Returns false if the visitor stopped early.
bool for_each_ham_cycle(const GroupTable& g, std::span<const GeneratorSpec> gens, const CycleVisitor& visit);

std::vector<CodedCycle> enumerate_ham_cycles(const GroupTable& g, std::span<const GeneratorSpec> gens);
/// Plain multiset form: no generator is involved.
std::vector<CodedCycle> enumerate_ham_cycles(const GroupTable& g, const GenMultiset& s);

/// True when the walk is closed, has length equal to the group order, and
/// its partial products are pairwise distinct. `Group` needs order(),
/// identity(), mul() and index().
template <class Group, class E>
bool verify_ham_cycle(const Group& g, std::span<const E> steps) {
  const auto n = static_cast<std::size_t>(g.order());
  if (steps.size() != n) return false;
  std::vector<char> seen(n, 0);
  E cur = g.identity();
  for (const E& s : steps) {
    const auto idx = static_cast<std::size_t>(g.index(cur));
    if (seen[idx]) return false;
    seen[idx] = 1;
    cur = g.mul(cur, s);
  }
  return cur == g.identity();
}

enum class PathStatus { found, none, timeout };

struct HamPathResult {
  PathStatus status = PathStatus::none;
  /// Step elements s_1..s_{n-1}; the path visits 1, s_1, s_1 s_2, ...
  std::vector<Elem> steps;
  long long nodes = 0;
};

/// Backtracking search for a hamiltonian path from the identity to `target`
/// in Cay(g; s). Prunes when the unvisited vertices (together with the
/// current one) disconnect, or when an unvisited vertex other than the target
/// is left with fewer than two usable neighbours.
HamPathResult ham_path(const GroupTable& g, const GenMultiset& s, Elem target, double budget_seconds);

/// Checks a ham_path() answer independently: every step lies in s or its
/// inverses, the vertices are distinct, and the path ends at `target`.
bool verify_ham_path(const GroupTable& g, const GenMultiset& s, std::span<const Elem> steps, Elem target);

}  // namespace hamcert
