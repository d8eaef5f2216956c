#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamcert {

/// Element of a finite group given by its multiplication table. Index 0 is
/// always the identity.
using Elem = int;

/// Subset of a group of order at most 64, one bit per element index.
using ElemSet = std::uint64_t;

enum class GroupId { C8, C4xC2, D8, Q8, E8, G56 };

std::string_view to_string(GroupId id);
GroupId group_id_from_string(std::string_view name);

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite group as an explicit multiplication table with labelled elements.
///
/// The constructor validates the group axioms (identity at index 0,
/// inverses, associativity over all triples) and label uniqueness, so every
/// live GroupTable is a group.
class GroupTable {
 public:
  GroupTable(GroupId id, std::vector<std::string> labels, std::vector<Elem> product);

  GroupId id() const { return id_; }
  int order() const { return order_; }
  static constexpr Elem identity() { return 0; }
  static int index(Elem g) { return g; }

  Elem mul(Elem g, Elem h) const;
  Elem inv(Elem g) const;
  Elem pow(Elem g, long long k) const;
  int elem_order(Elem g) const;

  const std::string& label(Elem g) const;
  std::optional<Elem> find(std::string_view label) const;
  /// Like find(), but throws GroupError for an unknown label.
  Elem at(std::string_view label) const;

  /// Subgroup generated by the elements in `gens`.
  ElemSet closure(ElemSet gens) const;
  bool generates(ElemSet gens) const { return closure(gens) == all(); }
  ElemSet all() const;

 private:
  void check(Elem g) const;

  GroupId id_;
  int order_;
  std::vector<std::string> labels_;
  std::vector<Elem> product_;
  std::vector<Elem> inverse_;
};

inline ElemSet singleton(Elem g) { return ElemSet{1} << g; }
inline bool contains(ElemSet s, Elem g) { return ((s >> g) & 1U) != 0; }
int popcount(ElemSet s);
std::vector<Elem> elements_of(ElemSet s);

/// The five groups of order 8, in the order C8, C4xC2, D8, Q8, E8.
const std::vector<GroupTable>& order8_catalog();

/// C7 acting on (C2)^3 through the companion matrix of x^3 + x + 1.
const GroupTable& g56();

const GroupTable& group_by_id(GroupId id);

/// Size of every irredundant generating set (Burnside basis rank). Throws
/// GroupError when the order is not a prime power, or if two irredundant
/// generating sets of different sizes exist.
int rank(const GroupTable& g);

/// Minimum size of a generating subset, computed independently of rank().
int min_generating_size(const GroupTable& g);

/// All irredundant generating subsets, each sorted ascending.
std::vector<std::vector<Elem>> irredundant_generating_sets(const GroupTable& g);

using GenMultiset = std::vector<Elem>;

/// Sorted multisets of non-identity elements of the given size whose support
/// generates `g`. Sizes outside [rank, rank + 2] are rejected.
std::vector<GenMultiset> generating_multisets(const GroupTable& g, int size);

ElemSet derived_subgroup(const GroupTable& g);
ElemSet center(const GroupTable& g);

/// Homomorphism into the roots of unity, g -> exp(2 pi i exponents[g] / conductor).
/// The conductor is the order of the character, so the representation is
/// canonical.
struct Character {
  int conductor = 1;
  std::vector<int> exponents;

  bool is_trivial() const { return conductor == 1; }
  int operator()(Elem g) const { return exponents.at(static_cast<std::size_t>(g)); }
  /// Exponent of the value at `g` expressed over conductor `m` (m a multiple
  /// of the conductor).
  int exponent_over(Elem g, int m) const;
  bool operator==(const Character&) const = default;
};

/// Every homomorphism from `g` into the m-th roots of unity, enumerated via
/// the abelianization. The trivial character comes first.
std::vector<Character> abelian_characters(const GroupTable& g, int m);

/// Characters with values in the 8th roots of unity; for a group of order 8
/// these are all of its abelian characters.
const std::vector<Character>& characters8(GroupId id);

bool is_homomorphism(const GroupTable& g, const Character& chi);

/// Automorphisms as image tables (aut[x] is the image of element x).
using Automorphism = std::vector<Elem>;
const std::vector<Automorphism>& automorphisms(GroupId id);

/// Smallest generating subset in lexicographic order, used to record
/// automorphisms compactly.
std::vector<Elem> canonical_generators(const GroupTable& g);

}  // namespace hamcert
