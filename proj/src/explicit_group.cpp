#include "hamcert/explicit_group.hpp"

#include "hamcert/ham_search.hpp"

#include <algorithm>
#include <array>

namespace hamcert {

namespace {

long long mod(long long x, long long m) { return ((x % m) + m) % m; }

long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

Character trivial_character(const GroupTable& g) {
  return Character{1, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
}

std::vector<int> action_table(const GroupTable& base, const Character& chi, int prime, int& root) {
  std::vector<int> act(static_cast<std::size_t>(base.order()), 1);
  if (prime == 1) {
    if (!chi.is_trivial()) throw ConcreteError("a missing prime factor needs the trivial character");
    root = 1;
    return act;
  }
  root = chi.conductor == 1 ? 1 : root_of_unity_mod(chi.conductor, prime);
  for (Elem g = 0; g < base.order(); ++g) act[static_cast<std::size_t>(g)] = static_cast<int>(pow_mod(root, chi(g), prime));
  return act;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int multiplicative_order_mod(long long r, int p) {
  r = mod(r, p);
  if (r == 0) throw ConcreteError("zero has no multiplicative order");
  int k = 1;
  for (long long x = r; x != 1; x = x * r % p) ++k;
  return k;
}

int root_of_unity_mod(int order, int p) {
  if (!is_prime(p)) throw ConcreteError(std::to_string(p) + " is not prime");
  if (order < 1 || (p - 1) % order != 0)
    throw ConcreteError("no element of order " + std::to_string(order) + " modulo " + std::to_string(p));
  for (int r = 1; r < p; ++r)
    if (multiplicative_order_mod(r, p) == order) return r;
  throw ConcreteError("unreachable: root of unity not found");
}

long long reduce_cyc(const CycInt& z, int p, int r) {
  if (multiplicative_order_mod(r, p) != z.conductor())
    throw ConcreteError("root " + std::to_string(r) + " does not have order " + std::to_string(z.conductor()) +
                        " modulo " + std::to_string(p));
  long long acc = 0;
  const auto& c = z.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    const BigInt coeff_mod = ((c[i] % p) + p) % p;
    acc = (acc * r + coeff_mod.convert_to<long long>()) % p;
  }
  return acc;
}

ExplicitGroup::ExplicitGroup(GroupTable base, Character chi_p, Character chi_q, int p, int q)
    : base_(std::move(base)), chi_p_(std::move(chi_p)), chi_q_(std::move(chi_q)), p_(p), q_(q) {
  if (p_ < 1 || q_ < 1 || p_ >= (1 << 15) || q_ >= (1 << 15)) throw ConcreteError("prime out of supported range");
  if (!is_homomorphism(base_, chi_p_) || !is_homomorphism(base_, chi_q_))
    throw ConcreteError("characters must be homomorphisms of the base group");
  act_p_ = action_table(base_, chi_p_, p_, root_p_);
  act_q_ = action_table(base_, chi_q_, q_, root_q_);
}

GElem ExplicitGroup::make(Elem g, long long a, long long b) const {
  return {g, static_cast<int>(mod(a, p_)), static_cast<int>(mod(b, q_))};
}

GElem ExplicitGroup::mul(const GElem& x, const GElem& y) const {
  return {base_.mul(x.g, y.g), static_cast<int>((static_cast<long long>(act_p(y.g)) * x.a + y.a) % p_),
          static_cast<int>((static_cast<long long>(act_q(y.g)) * x.b + y.b) % q_)};
}

GElem ExplicitGroup::inv(const GElem& x) const {
  const Elem gi = base_.inv(x.g);
  return make(gi, -static_cast<long long>(act_p(gi)) * x.a, -static_cast<long long>(act_q(gi)) * x.b);
}

GElem ExplicitGroup::pow(const GElem& x, long long k) const {
  GElem base = k < 0 ? inv(x) : x;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  GElem r = identity();
  while (e > 0) {
    if (e & 1U) r = mul(r, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return r;
}

int ExplicitGroup::elem_order(const GElem& x) const {
  int k = 1;
  for (GElem y = x; !(y == identity()); y = mul(y, x)) ++k;
  return k;
}

GElem ExplicitGroup::element(int index) const {
  if (index < 0 || index >= order()) throw ConcreteError("element index out of range");
  return {index / (p_ * q_), (index / q_) % p_, index % q_};
}

bool ExplicitGroup::generates_cpq(const GElem& x) const {
  return in_cpq(x) && (p_ == 1 || x.a != 0) && (q_ == 1 || x.b != 0);
}

GElem ExplicitGroup::lift(const GeneratorSpec& s, long long secondary_exponent) const {
  const long long b = s.inv_q ? (s.q_secondary ? secondary_exponent : 1) : 0;
  return make(s.gbar, s.inv_p ? 1 : 0, b);
}

std::vector<GElem> ExplicitGroup::generators() const {
  std::vector<GElem> out;
  for (Elem g = 1; g < base_.order(); ++g) out.push_back(make(g, 0, 0));
  if (p_ > 1) out.push_back(x_p());
  if (q_ > 1) out.push_back(x_q());
  return out;
}

std::string ExplicitGroup::to_string(const GElem& x) const {
  std::string out = x.g == 0 ? "" : base_.label(x.g);
  auto append = [&out](const std::string& factor) { out += (out.empty() ? "" : "*") + factor; };
  if (x.a != 0) append("xp^" + std::to_string(x.a));
  if (x.b != 0) append("xq^" + std::to_string(x.b));
  return out.empty() ? "1" : out;
}

ExplicitGroup build_explicit(const GroupTable& base, const Character& chi_p, const Character& chi_q, int p, int q) {
  if (p == q) throw ConcreteError("p and q must be distinct");
  for (int r : {p, q})
    if (r <= 5 || !is_prime(r)) throw ConcreteError(std::to_string(r) + " is not a prime above 5");
  if ((p - 1) % chi_p.conductor != 0 || (q - 1) % chi_q.conductor != 0)
    throw ConcreteError("inadmissible prime for the character order: (" + std::to_string(p) + "," + std::to_string(q) +
                        ") with conductors " + std::to_string(chi_p.conductor) + "," + std::to_string(chi_q.conductor));
  return ExplicitGroup(base, chi_p, chi_q, p, q);
}

ExplicitGroup build_explicit_single(const GroupTable& base, const Character& chi_p, int p) {
  if (p <= 5 || !is_prime(p)) throw ConcreteError(std::to_string(p) + " is not a prime above 5");
  if ((p - 1) % chi_p.conductor != 0) throw ConcreteError("inadmissible prime for the character order");
  return ExplicitGroup(base, chi_p, trivial_character(base), p, 1);
}

std::vector<int> admissible_primes(int m, int limit) {
  std::vector<int> out;
  for (int r = 7; r < limit; ++r)
    if (is_prime(r) && (r - 1) % m == 0) out.push_back(r);
  return out;
}

std::vector<std::pair<int, int>> default_prime_pairs(int conductor_p, int conductor_q) {
  const auto lp = admissible_primes(conductor_p, 1000);
  const auto lq = admissible_primes(conductor_q, 1000);
  std::vector<std::pair<int, int>> out;
  int last_q = 0;
  for (int k = 0; k < 2; ++k) {
    const int p = lp.at(static_cast<std::size_t>(k));
    auto it = std::find_if(lq.begin(), lq.end(), [&](int q) { return q != p && q > last_q; });
    out.emplace_back(p, *it);
    last_q = *it;
  }
  return out;
}

bool admissible_pair(const Character& chi_p, const Character& chi_q, int p, int q) {
  return p != q && (p - 1) % chi_p.conductor == 0 && (q - 1) % chi_q.conductor == 0;
}

std::vector<GElem> lift_walk(const ExplicitGroup& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                             long long secondary_exponent) {
  std::vector<GElem> out;
  out.reserve(c.steps.size());
  for (int s : c.steps) {
    const auto k = static_cast<std::size_t>(std::abs(s));
    if (s == 0 || k > gens.size()) throw ConcreteError("coded step out of range");
    const GElem x = g.lift(gens[k - 1], secondary_exponent);
    out.push_back(s > 0 ? x : g.inv(x));
  }
  return out;
}

GElem walk_product(const ExplicitGroup& g, std::span<const GElem> steps) {
  GElem acc = g.identity();
  for (const auto& s : steps) acc = g.mul(acc, s);
  return acc;
}

std::vector<int> cyclic_subgroup(const ExplicitGroup& g, const GElem& n) {
  std::vector<int> out{g.index(g.identity())};
  for (GElem y = n; !(y == g.identity()); y = g.mul(y, n)) out.push_back(g.index(y));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal_cyclic(const ExplicitGroup& g, const GElem& n) {
  const auto sub = cyclic_subgroup(g, n);
  for (const auto& x : g.generators())
    if (!std::binary_search(sub.begin(), sub.end(), g.index(g.conj(n, x)))) return false;
  return true;
}

QuotientWalk quotient_walk(const ExplicitGroup& g, const GElem& n, std::span<const GElem> steps) {
  QuotientWalk r;
  const auto sub = cyclic_subgroup(g, n);
  r.voltage = walk_product(g, steps);
  r.closed = std::binary_search(sub.begin(), sub.end(), g.index(r.voltage));
  const std::size_t cosets = static_cast<std::size_t>(g.order()) / sub.size();
  if (!r.closed || steps.size() != cosets) return r;
  std::vector<GElem> coset(sub.size());
  for (std::size_t k = 0; k < sub.size(); ++k) coset[k] = g.element(sub[k]);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  GElem cur = g.identity();
  for (const auto& s : steps) {
    if (seen[static_cast<std::size_t>(g.index(cur))]) return r;
    for (const auto& y : coset) seen[static_cast<std::size_t>(g.index(g.mul(cur, y)))] = 1;
    cur = g.mul(cur, s);
  }
  r.hamiltonian = true;
  return r;
}

std::vector<GElem> fgl_lift(const ExplicitGroup& g, const GElem& n, std::span<const GElem> steps) {
  if (g.order() > 20'000'000) throw FglError("group too large to traverse");
  if (!is_normal_cyclic(g, n)) throw FglError("<" + g.to_string(n) + "> is not normal");
  const auto w = quotient_walk(g, n, steps);
  if (!w.hamiltonian) throw FglError("walk is not a hamiltonian cycle of the quotient");
  const int size = g.elem_order(n);
  if (g.elem_order(w.voltage) != size || !w.closed)
    throw FglError("voltage " + g.to_string(w.voltage) + " does not generate <" + g.to_string(n) + "> (residues " +
                   std::to_string(w.voltage.a) + " mod " + std::to_string(g.p()) + ", " + std::to_string(w.voltage.b) +
                   " mod " + std::to_string(g.q()) + ")");
  std::vector<GElem> lifted;
  lifted.reserve(steps.size() * static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) lifted.insert(lifted.end(), steps.begin(), steps.end());
  if (!verify_ham_cycle(g, std::span<const GElem>(lifted))) throw FglError("lifted walk failed verification");
  return lifted;
}

std::vector<GElem> fgl_lift_cpq(const ExplicitGroup& g, std::span<const GElem> steps) {
  return fgl_lift(g, g.make(0, 1, 1), steps);
}

Occur3Result occur3_adjust(const ExplicitGroup& g, std::span<const GElem> steps, const GElem& s, const GElem& t) {
  if (!g.generates_cpq(g.mul(g.inv(s), t))) throw ConcreteError("s^-1 t must generate C_pq");
  Occur3Result r;
  const GElem s_inv = g.inv(s);
  for (std::size_t i = 0; i < steps.size() && r.positions.size() < 3; ++i)
    if (steps[i] == s || steps[i] == s_inv) r.positions.push_back(i);
  if (r.positions.size() < 3) throw ConcreteError("fewer than 3 occurrences of s or s^-1");
  auto substituted = [&](unsigned mask) {
    std::vector<GElem> w(steps.begin(), steps.end());
    for (std::size_t k = 0; k < 3; ++k)
      if (mask >> k & 1U) w[r.positions[k]] = steps[r.positions[k]] == s ? t : g.inv(t);
    return w;
  };
  r.subset_generates.assign(8, false);
  for (unsigned mask = 0; mask < 8; ++mask) r.subset_generates[mask] = g.generates_cpq(walk_product(g, substituted(mask)));
  // Smallest subsets first.
  constexpr std::array<unsigned, 8> order{0, 1, 2, 4, 3, 5, 6, 7};
  for (unsigned mask : order) {
    if (!r.subset_generates[mask]) continue;
    for (std::size_t k = 0; k < 3; ++k)
      if (mask >> k & 1U) r.chosen.push_back(k);
    r.adjusted = substituted(mask);
    r.lifted_length = fgl_lift_cpq(g, r.adjusted).size();
    return r;
  }
  throw ConcreteError("no subset of the first three occurrences gives a generating voltage");
}

std::vector<char> derived_subgroup(const ExplicitGroup& g) {
  // Normal closure of the commutators of a generating set.
  const auto gens = g.generators();
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> in_k(n, 0);
  std::vector<GElem> k_elems;
  auto add_k = [&](const GElem& x) {
    auto& flag = in_k[static_cast<std::size_t>(g.index(x))];
    if (!flag) {
      flag = 1;
      k_elems.push_back(x);
    }
  };
  for (const auto& x : gens)
    for (const auto& y : gens) add_k(g.commutator(x, y));
  for (std::size_t i = 0; i < k_elems.size(); ++i)
    for (const auto& x : gens) add_k(g.conj(k_elems[i], x));
  std::vector<char> in(n, 0);
  std::vector<GElem> members{g.identity()};
  in[static_cast<std::size_t>(g.index(g.identity()))] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (const auto& k : k_elems) {
      const GElem y = g.mul(members[i], k);
      auto& flag = in[static_cast<std::size_t>(g.index(y))];
      if (!flag) {
        flag = 1;
        members.push_back(y);
      }
    }
  return in;
}

std::vector<char> subgroup_closure(const ExplicitGroup& g, std::span<const GElem> gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<GElem> members{g.identity()};
  in[static_cast<std::size_t>(g.index(g.identity()))] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (const auto& x : gens) {
      const GElem y = g.mul(members[i], x);
      auto& flag = in[static_cast<std::size_t>(g.index(y))];
      if (!flag) {
        flag = 1;
        members.push_back(y);
      }
    }
  return in;
}

bool cpq_meets_center(const ExplicitGroup& g) {
  const auto gens = g.generators();
  for (int a = 0; a < g.p(); ++a)
    for (int b = 0; b < g.q(); ++b) {
      if (a == 0 && b == 0) continue;
      const GElem z = g.make(0, a, b);
      if (std::all_of(gens.begin(), gens.end(), [&](const GElem& x) { return g.mul(z, x) == g.mul(x, z); })) return true;
    }
  return false;
}

}  // namespace hamcert
