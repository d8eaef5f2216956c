#include "hamcert/group_table.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

namespace hamcert {

namespace {

constexpr std::array<std::string_view, 6> kGroupNames = {"C8", "C4xC2", "D8", "Q8", "E8", "G56"};

bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

GroupTable make_table(GroupId id, int n, const std::vector<std::string>& labels, auto&& mul) {
  std::vector<Elem> product(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) product[static_cast<std::size_t>(a * n + b)] = mul(a, b);
  return GroupTable(id, labels, std::move(product));
}

GroupTable make_c8() {
  std::vector<std::string> labels{"1"};
  for (int k = 1; k < 8; ++k) labels.push_back(k == 1 ? "s" : "s" + std::to_string(k));
  return make_table(GroupId::C8, 8, labels, [](int a, int b) { return (a + b) % 8; });
}

// Index a + 4b for a^a b^b.
GroupTable make_c4xc2() {
  std::vector<std::string> labels{"1", "a", "a2", "a3", "b", "ab", "a2b", "a3b"};
  return make_table(GroupId::C4xC2, 8, labels, [](int x, int y) {
    return (x % 4 + y % 4) % 4 + 4 * ((x / 4 + y / 4) % 2);
  });
}

// Index 4e + k for f^e x^k, with f^2 = x^4 = 1 and x f = f x^-1.
GroupTable make_d8() {
  std::vector<std::string> labels{"1", "x", "x2", "x3", "f", "fx", "fx2", "fx3"};
  return make_table(GroupId::D8, 8, labels, [](int g, int h) {
    const int e1 = g / 4, k1 = g % 4, e2 = h / 4, k2 = h % 4;
    const int k = ((e2 != 0 ? -k1 : k1) + k2 + 8) % 4;
    return 4 * ((e1 + e2) % 2) + k;
  });
}

// Index 2u + s for (-1)^s u, u in {1, i, j, k}.
GroupTable make_q8() {
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit_mul[u][v] = (sign, unit)
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  return make_table(GroupId::Q8, 8, labels, [](int g, int h) {
    const auto [s, u] = unit_mul[static_cast<std::size_t>(g / 2)][static_cast<std::size_t>(h / 2)];
    return 2 * u + (s + g % 2 + h % 2) % 2;
  });
}

GroupTable make_e8() {
  std::vector<std::string> labels{"1", "e1", "e2", "e1e2", "e3", "e1e3", "e2e3", "e1e2e3"};
  return make_table(GroupId::E8, 8, labels, [](int a, int b) { return a ^ b; });
}

// Index 8k + v for r^k v: v in F_2^3 (bit i = coordinate i), r acting by the
// companion matrix of x^3 + x + 1, which has order 7.
GroupTable make_g56() {
  auto act = [](int v) {
    const int b0 = v & 1, b1 = (v >> 1) & 1, b2 = (v >> 2) & 1;
    // b0 -> b1, b1 -> b2, b2 -> b0 + b1
    return (b2) | ((b0 ^ b2) << 1) | (b1 << 2);
  };
  auto act_pow = [act](int v, int k) {
    for (int i = 0; i < k; ++i) v = act(v);
    return v;
  };
  std::vector<std::string> labels;
  for (int k = 0; k < 7; ++k) {
    for (int v = 0; v < 8; ++v) {
      if (k == 0 && v == 0) labels.emplace_back("1");
      else if (k == 0) labels.push_back("v" + std::to_string(v));
      else if (v == 0) labels.push_back("r" + std::to_string(k));
      else labels.push_back("r" + std::to_string(k) + "v" + std::to_string(v));
    }
  }
  // (r^k1 v1)(r^k2 v2) = r^(k1+k2) (r^-k2 v1 r^k2) v2; store as (k, v) with
  // element = r^k v and conjugation v^(r^k) = A^k v.
  return make_table(GroupId::G56, 56, labels, [act_pow](int g, int h) {
    const int k1 = g / 8, v1 = g % 8, k2 = h / 8, v2 = h % 8;
    const int v = act_pow(v1, k2) ^ v2;
    return 8 * ((k1 + k2) % 7) + v;
  });
}

}  // namespace

std::string_view to_string(GroupId id) { return kGroupNames[static_cast<std::size_t>(id)]; }

GroupId group_id_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kGroupNames.size(); ++i)
    if (kGroupNames[i] == name) return static_cast<GroupId>(i);
  throw GroupError("unknown group id: " + std::string(name));
}

int popcount(ElemSet s) { return std::popcount(s); }

std::vector<Elem> elements_of(ElemSet s) {
  std::vector<Elem> out;
  for (Elem g = 0; s != 0; ++g, s >>= 1)
    if ((s & 1U) != 0) out.push_back(g);
  return out;
}

GroupTable::GroupTable(GroupId id, std::vector<std::string> labels, std::vector<Elem> product)
    : id_(id), order_(static_cast<int>(labels.size())), labels_(std::move(labels)), product_(std::move(product)) {
  const int n = order_;
  if (n < 1 || n > 64) throw GroupError("group order must lie in [1, 64]");
  if (product_.size() != static_cast<std::size_t>(n * n)) throw GroupError("product table has wrong size");
  for (Elem x : product_)
    if (x < 0 || x >= n) throw GroupError("product table entry out of range");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw GroupError("labels are not unique");
  for (Elem g = 0; g < n; ++g)
    if (mul(0, g) != g || mul(g, 0) != g) throw GroupError("index 0 is not a two-sided identity");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw GroupError("product is not associative");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      if (mul(g, h) == 0 && mul(h, g) == 0) {
        inverse_[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(g)] < 0) throw GroupError("element without inverse: " + labels_[static_cast<std::size_t>(g)]);
  }
}

void GroupTable::check(Elem g) const {
  if (g < 0 || g >= order_) throw GroupError("element index out of range: " + std::to_string(g));
}

Elem GroupTable::mul(Elem g, Elem h) const {
  check(g);
  check(h);
  return product_[static_cast<std::size_t>(g * order_ + h)];
}

Elem GroupTable::inv(Elem g) const {
  check(g);
  return inverse_[static_cast<std::size_t>(g)];
}

Elem GroupTable::pow(Elem g, long long k) const {
  check(g);
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  Elem result = 0;
  Elem base = g;
  while (k > 0) {
    if ((k & 1) != 0) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int GroupTable::elem_order(Elem g) const {
  check(g);
  int k = 1;
  for (Elem x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

const std::string& GroupTable::label(Elem g) const {
  check(g);
  return labels_[static_cast<std::size_t>(g)];
}

std::optional<Elem> GroupTable::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem GroupTable::at(std::string_view label) const {
  if (auto g = find(label)) return *g;
  throw GroupError("unknown element label '" + std::string(label) + "' in " + std::string(to_string(id_)));
}

ElemSet GroupTable::all() const { return order_ == 64 ? ~ElemSet{0} : (ElemSet{1} << order_) - 1; }

ElemSet GroupTable::closure(ElemSet gens) const {
  const auto gen_list = elements_of(gens);
  ElemSet seen = singleton(0);
  std::vector<Elem> stack{0};
  while (!stack.empty()) {
    const Elem x = stack.back();
    stack.pop_back();
    for (Elem s : gen_list) {
      const Elem y = mul(x, s);
      if (!contains(seen, y)) {
        seen |= singleton(y);
        stack.push_back(y);
      }
    }
  }
  return seen;
}

const std::vector<GroupTable>& order8_catalog() {
  static const std::vector<GroupTable> catalog{make_c8(), make_c4xc2(), make_d8(), make_q8(), make_e8()};
  return catalog;
}

const GroupTable& g56() {
  static const GroupTable table = make_g56();
  return table;
}

const GroupTable& group_by_id(GroupId id) {
  if (id == GroupId::G56) return g56();
  return order8_catalog()[static_cast<std::size_t>(id)];
}

std::vector<std::vector<Elem>> irredundant_generating_sets(const GroupTable& g) {
  std::vector<Elem> nonid;
  for (Elem x = 1; x < g.order(); ++x) nonid.push_back(x);
  std::vector<std::vector<Elem>> out;
  // Irredundant sets of a group of order n have at most log2(n) elements.
  const int max_size = std::bit_width(static_cast<unsigned>(g.order())) - 1;
  std::vector<Elem> current;
  auto rec = [&](auto&& self, std::size_t start, ElemSet set) -> void {
    if (!current.empty() && g.generates(set)) {
      bool irredundant = true;
      for (Elem x : current)
        if (g.generates(set & ~singleton(x))) irredundant = false;
      if (irredundant) out.push_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t i = start; i < nonid.size(); ++i) {
      current.push_back(nonid[i]);
      self(self, i + 1, set | singleton(nonid[i]));
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

int min_generating_size(const GroupTable& g) {
  if (g.order() == 1) return 0;
  std::vector<Elem> nonid;
  for (Elem x = 1; x < g.order(); ++x) nonid.push_back(x);
  for (int size = 1; size <= g.order(); ++size) {
    std::vector<bool> pick(nonid.size(), false);
    std::fill(pick.begin(), pick.begin() + std::min<std::size_t>(static_cast<std::size_t>(size), pick.size()), true);
    do {
      ElemSet set = 0;
      for (std::size_t i = 0; i < pick.size(); ++i)
        if (pick[i]) set |= singleton(nonid[i]);
      if (g.generates(set)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw GroupError("no generating subset");
}

int rank(const GroupTable& g) {
  if (!is_prime_power(g.order())) throw GroupError("rank requires a group of prime-power order");
  const auto sets = irredundant_generating_sets(g);
  const std::size_t size = sets.front().size();
  for (const auto& s : sets)
    if (s.size() != size) throw GroupError("irredundant generating sets of different sizes");
  return static_cast<int>(size);
}

std::vector<GenMultiset> generating_multisets(const GroupTable& g, int size) {
  const int d = rank(g);
  if (size < d || size > d + 2)
    throw GroupError("multiset size " + std::to_string(size) + " outside [" + std::to_string(d) + ", " +
                     std::to_string(d + 2) + "]");
  std::vector<GenMultiset> out;
  GenMultiset current;
  auto rec = [&](auto&& self, Elem start, ElemSet support) -> void {
    if (static_cast<int>(current.size()) == size) {
      if (g.generates(support)) out.push_back(current);
      return;
    }
    for (Elem x = start; x < g.order(); ++x) {
      current.push_back(x);
      self(self, x, support | singleton(x));
      current.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

ElemSet derived_subgroup(const GroupTable& g) {
  ElemSet commutators = 0;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      commutators |= singleton(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return g.closure(commutators);
}

ElemSet center(const GroupTable& g) {
  ElemSet z = 0;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z |= singleton(a);
  }
  return z;
}

int Character::exponent_over(Elem g, int m) const {
  if (m % conductor != 0) throw GroupError("conductor does not divide target order");
  return (*this)(g) * (m / conductor);
}

bool is_homomorphism(const GroupTable& g, const Character& chi) {
  if (chi.exponents.size() != static_cast<std::size_t>(g.order())) return false;
  if (chi(0) != 0) return false;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if ((chi(a) + chi(b)) % chi.conductor != chi(g.mul(a, b))) return false;
  return true;
}

std::vector<Character> abelian_characters(const GroupTable& g, int m) {
  if (m < 1) throw GroupError("character order must be positive");
  const ElemSet derived = derived_subgroup(g);
  const auto derived_elems = elements_of(derived);

  // Cosets of the derived subgroup, numbered by first appearance.
  std::vector<int> coset(static_cast<std::size_t>(g.order()), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem d : derived_elems) coset[static_cast<std::size_t>(g.mul(x, d))] = id;
  }
  const int n = static_cast<int>(reps.size());
  auto qmul = [&](int a, int b) {
    return coset[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];
  };
  auto qorder = [&](int a) {
    int k = 1;
    for (int x = a; x != 0; x = qmul(x, a)) ++k;
    return k;
  };

  // Greedy generating set of the abelianization.
  std::vector<int> gens;
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  reached[0] = true;
  auto grow = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x) {
        if (!reached[static_cast<std::size_t>(x)]) continue;
        for (int s : gens) {
          const int y = qmul(x, s);
          if (!reached[static_cast<std::size_t>(y)]) reached[static_cast<std::size_t>(y)] = changed = true;
        }
      }
    }
  };
  for (int x = 1; x < n; ++x) {
    if (reached[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    grow();
  }

  // Candidate values on generators respect generator orders.
  std::vector<std::vector<int>> options;
  for (int s : gens) {
    std::vector<int> opts;
    for (int e = 0; e < m; ++e)
      if ((static_cast<long long>(e) * qorder(s)) % m == 0) opts.push_back(e);
    options.push_back(std::move(opts));
  }

  std::vector<Character> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<int> value(static_cast<std::size_t>(n), -1);
    value[0] = 0;
    std::deque<int> queue{0};
    bool consistent = true;
    while (!queue.empty() && consistent) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int y = qmul(x, gens[i]);
        const int v = (value[static_cast<std::size_t>(x)] + options[i][choice[i]]) % m;
        if (value[static_cast<std::size_t>(y)] < 0) {
          value[static_cast<std::size_t>(y)] = v;
          queue.push_back(y);
        } else if (value[static_cast<std::size_t>(y)] != v) {
          consistent = false;
        }
      }
    }
    for (int a = 0; a < n && consistent; ++a)
      for (int b = 0; b < n && consistent; ++b)
        consistent = (value[static_cast<std::size_t>(a)] + value[static_cast<std::size_t>(b)]) % m ==
                     value[static_cast<std::size_t>(qmul(a, b))];
    if (consistent) {
      int common = m;
      for (int v : value) common = std::gcd(common, v);
      Character chi;
      chi.conductor = m / common;
      for (Elem x = 0; x < g.order(); ++x)
        chi.exponents.push_back(value[static_cast<std::size_t>(coset[static_cast<std::size_t>(x)])] / common);
      out.push_back(std::move(chi));
    }
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++choice[i] < options[i].size()) break;
      choice[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return out;
}

const std::vector<Character>& characters8(GroupId id) {
  static const auto table = [] {
    std::array<std::vector<Character>, 6> t;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto gid = static_cast<GroupId>(i);
      t[i] = abelian_characters(group_by_id(gid), gid == GroupId::G56 ? 7 : 8);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(id)];
}

std::vector<Elem> canonical_generators(const GroupTable& g) {
  const auto sets = irredundant_generating_sets(g);
  std::vector<Elem> best;
  for (const auto& s : sets)
    if (best.empty() || s.size() < best.size()) best = s;
  return best;
}

namespace {

std::vector<Automorphism> compute_automorphisms(const GroupTable& g) {
  const auto gens = canonical_generators(g);
  const int n = g.order();
  std::vector<Automorphism> out;
  std::vector<Elem> images(gens.size(), 0);
  auto try_images = [&] {
    Automorphism phi(static_cast<std::size_t>(n), -1);
    phi[0] = 0;
    std::deque<Elem> queue{0};
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = g.mul(x, gens[i]);
        const Elem v = g.mul(phi[static_cast<std::size_t>(x)], images[i]);
        if (phi[static_cast<std::size_t>(y)] < 0) {
          phi[static_cast<std::size_t>(y)] = v;
          queue.push_back(y);
        } else if (phi[static_cast<std::size_t>(y)] != v) {
          return;
        }
      }
    }
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (Elem v : phi) hit[static_cast<std::size_t>(v)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (phi[static_cast<std::size_t>(g.mul(a, b))] != g.mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]))
          return;
    out.push_back(std::move(phi));
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      try_images();
      return;
    }
    for (Elem h = 1; h < n; ++h) {
      if (g.elem_order(h) != g.elem_order(gens[i])) continue;
      images[i] = h;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

const std::vector<Automorphism>& automorphisms(GroupId id) {
  static const auto table = [] {
    std::array<std::vector<Automorphism>, 5> t;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = compute_automorphisms(order8_catalog()[i]);
    return t;
  }();
  if (id == GroupId::G56) throw GroupError("automorphisms are only tabulated for order-8 groups");
  return table[static_cast<std::size_t>(id)];
}

}  // namespace hamcert
