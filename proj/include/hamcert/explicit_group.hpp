#pragma once

#include "hamcert/cyclotomic.hpp"
#include "hamcert/group_table.hpp"
#include "hamcert/voltage.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamcert {

class ConcreteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(long long n);

/// Smallest positive r with multiplicative order exactly `order` modulo p.
/// Throws ConcreteError when `order` does not divide p - 1.
int root_of_unity_mod(int order, int p);

int multiplicative_order_mod(long long r, int p);

/// Evaluates the coefficient polynomial of z at r, modulo p. Requires r to
/// have order equal to the conductor of z.
long long reduce_cyc(const CycInt& z, int p, int r);

/// Element (gbar, a, b) standing for gbar * x_p^a * x_q^b.
struct GElem {
  Elem g = 0;
  int a = 0;
  int b = 0;
  bool operator==(const GElem&) const = default;
};

/// G = Gbar x| (C_p x C_q) with
/// (g1, a1, b1)(g2, a2, b2) = (g1 g2, act_p(g2) a1 + a2, act_q(g2) b1 + b2),
/// so that x_p^g = x_p^(act_p(g)). A prime of 1 stands for a missing factor.
class ExplicitGroup {
 public:
  ExplicitGroup(GroupTable base, Character chi_p, Character chi_q, int p, int q);

  const GroupTable& base() const { return base_; }
  const Character& chi_p() const { return chi_p_; }
  const Character& chi_q() const { return chi_q_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int root_p() const { return root_p_; }
  int root_q() const { return root_q_; }
  int order() const { return base_.order() * p_ * q_; }

  int act_p(Elem g) const { return act_p_[static_cast<std::size_t>(g)]; }
  int act_q(Elem g) const { return act_q_[static_cast<std::size_t>(g)]; }

  GElem identity() const { return {}; }
  GElem mul(const GElem& x, const GElem& y) const;
  GElem inv(const GElem& x) const;
  GElem pow(const GElem& x, long long k) const;
  int elem_order(const GElem& x) const;
  GElem conj(const GElem& x, const GElem& by) const { return mul(inv(by), mul(x, by)); }
  GElem commutator(const GElem& x, const GElem& y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  int index(const GElem& x) const { return (x.g * p_ + x.a) * q_ + x.b; }
  GElem element(int index) const;

  GElem make(Elem g, long long a, long long b) const;
  GElem x_p() const { return make(0, 1, 0); }
  GElem x_q() const { return make(0, 0, 1); }
  bool in_cpq(const GElem& x) const { return x.g == 0; }
  /// True when the C_pq element x generates all of C_pq.
  bool generates_cpq(const GElem& x) const;

  /// The generator gbar * x_p^(inv_p) * x_q^(inv_q or i if secondary).
  GElem lift(const GeneratorSpec& s, long long secondary_exponent = 1) const;

  /// Elements that generate G: the base elements and x_p, x_q.
  std::vector<GElem> generators() const;

  std::string to_string(const GElem& x) const;

 private:
  GroupTable base_;
  Character chi_p_;
  Character chi_q_;
  int p_;
  int q_;
  int root_p_ = 1;
  int root_q_ = 1;
  std::vector<int> act_p_;
  std::vector<int> act_q_;
};

/// Requires p, q distinct primes above 5 with p = 1 mod the conductor of
/// chi_p and q = 1 mod the conductor of chi_q.
ExplicitGroup build_explicit(const GroupTable& base, const Character& chi_p, const Character& chi_q, int p, int q);

/// Gbar x| C_p alone (the q-factor is trivial).
ExplicitGroup build_explicit_single(const GroupTable& base, const Character& chi_p, int p);

/// Primes above 5 and below `limit` that are 1 mod m.
std::vector<int> admissible_primes(int m, int limit);

/// The two default (p, q) pairs for given character conductors: smallest
/// admissible p with the smallest admissible q != p, then the next p with
/// the next q.
std::vector<std::pair<int, int>> default_prime_pairs(int conductor_p, int conductor_q);

bool admissible_pair(const Character& chi_p, const Character& chi_q, int p, int q);

/// Lifts each coded step to G; the q-secondary generator uses x_q^i.
std::vector<GElem> lift_walk(const ExplicitGroup& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                             long long secondary_exponent = 1);

GElem walk_product(const ExplicitGroup& g, std::span<const GElem> steps);

/// Sorted indices of the cyclic subgroup generated by n.
std::vector<int> cyclic_subgroup(const ExplicitGroup& g, const GElem& n);

struct QuotientWalk {
  bool closed = false;       // product lies in N
  bool hamiltonian = false;  // closed, right length, distinct cosets
  GElem voltage;
};

/// Evaluates a walk in G / <n>, where <n> must be normal.
QuotientWalk quotient_walk(const ExplicitGroup& g, const GElem& n, std::span<const GElem> steps);

bool is_normal_cyclic(const ExplicitGroup& g, const GElem& n);

class FglError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Factor Group Lemma lift: given a hamiltonian cycle of G / <n> whose
/// voltage generates <n>, returns |<n>| repetitions of the walk and checks
/// it is a hamiltonian cycle of G. Throws FglError otherwise.
std::vector<GElem> fgl_lift(const ExplicitGroup& g, const GElem& n, std::span<const GElem> steps);

/// Lift over N = C_pq, the usual case for coded cycles.
std::vector<GElem> fgl_lift_cpq(const ExplicitGroup& g, std::span<const GElem> steps);

struct Occur3Result {
  std::vector<std::size_t> positions;  // first three occurrences of s or s^-1
  std::vector<std::size_t> chosen;     // subset I, as indices into positions
  std::vector<GElem> adjusted;         // walk after substitution
  std::vector<bool> subset_generates;  // for all 8 subsets, bit k = position k
  std::size_t lifted_length = 0;
};

/// Substitutes t^(+-1) for s^(+-1) at a subset of the first three
/// occurrences of s^(+-1) so that the voltage generates C_pq, then lifts.
/// Requires <s^-1 t> = C_pq.
Occur3Result occur3_adjust(const ExplicitGroup& g, std::span<const GElem> steps, const GElem& s, const GElem& t);

/// Membership table of the derived subgroup, indexed by element index.
std::vector<char> derived_subgroup(const ExplicitGroup& g);

/// Subgroup generated by `gens`, as an index membership table.
std::vector<char> subgroup_closure(const ExplicitGroup& g, std::span<const GElem> gens);

/// True when some nontrivial element of C_pq is central.
bool cpq_meets_center(const ExplicitGroup& g);

}  // namespace hamcert
