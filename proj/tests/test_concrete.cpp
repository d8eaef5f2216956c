#include "hamcert/concrete_runs.hpp"
#include "hamcert/explicit_group.hpp"
#include "hamcert/hand_cases.hpp"
#include "hamcert/ham_search.hpp"
#include "hamcert/number_lemmas.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace hamcert;

namespace {

const Character& char_of_order(GroupId id, int m) {
  for (const auto& c : characters8(id))
    if (c.conductor == m) return c;
  throw std::logic_error("no such character");
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

std::string check_value(const HandCaseReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) {
      CHECK_MESSAGE(c.passed, name);
      return c.computed;
    }
  FAIL_CHECK("missing check " << name);
  return "";
}

std::string xp(long long e) { return e == 0 ? "1" : "xp^" + std::to_string(e); }
std::string xq(long long e) { return e == 0 ? "1" : "xq^" + std::to_string(e); }
std::string x2xq(long long e) { return e == 0 ? "x2" : "x2*xq^" + std::to_string(e); }

}  // namespace

TEST_CASE("roots of unity and build_explicit preconditions") {
  const auto& e8 = group_by_id(GroupId::E8);
  const Character& sign = char_of_order(GroupId::E8, 2);
  const ExplicitGroup g = build_explicit(e8, sign, sign, 7, 11);
  for (Elem x = 0; x < 8; ++x) CHECK(g.act_p(x) == (sign(x) ? 6 : 1));
  CHECK(root_of_unity_mod(8, 17) == 2);
  CHECK(multiplicative_order_mod(2, 17) == 8);
  CHECK_THROWS_AS(root_of_unity_mod(4, 7), ConcreteError);
  const auto& c8 = group_by_id(GroupId::C8);
  CHECK_THROWS_AS(build_explicit(c8, char_of_order(GroupId::C8, 4), char_of_order(GroupId::C8, 2), 7, 13),
                  ConcreteError);
  CHECK_THROWS_AS(build_explicit(c8, char_of_order(GroupId::C8, 2), char_of_order(GroupId::C8, 2), 7, 7),
                  ConcreteError);
  CHECK_THROWS_AS(build_explicit(c8, char_of_order(GroupId::C8, 2), char_of_order(GroupId::C8, 2), 5, 7),
                  ConcreteError);
  const ExplicitGroup h = build_explicit(c8, char_of_order(GroupId::C8, 8), char_of_order(GroupId::C8, 4), 17, 13);
  CHECK(h.root_p() == 2);
  CHECK(h.root_q() == 5);
}

TEST_CASE("explicit groups satisfy the axioms on random triples") {
  std::mt19937 rng(11);
  for (const auto& base : order8_catalog())
    for (const auto& cp : characters8(base.id()))
      for (const auto& cq : characters8(base.id())) {
        const auto pairs = default_prime_pairs(cp.conductor, cq.conductor);
        const ExplicitGroup g = build_explicit(base, cp, cq, pairs[0].first, pairs[0].second);
        for (Elem x = 0; x < 8; ++x)
          for (Elem y = 0; y < 8; ++y)
            CHECK(mod(static_cast<long long>(g.act_p(base.mul(x, y))) - 1LL * g.act_p(x) * g.act_p(y), g.p()) == 0);
        for (int t = 0; t < 20; ++t) {
          const GElem a = g.element(static_cast<int>(rng() % static_cast<unsigned>(g.order())));
          const GElem b = g.element(static_cast<int>(rng() % static_cast<unsigned>(g.order())));
          const GElem c = g.element(static_cast<int>(rng() % static_cast<unsigned>(g.order())));
          CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
          CHECK(g.mul(a, g.inv(a)) == g.identity());
          CHECK(g.element(g.index(a)) == a);
        }
        if (!cp.is_trivial() && !cq.is_trivial()) CHECK_FALSE(cpq_meets_center(g));
      }
}

TEST_CASE("reduction of cyclotomic integers") {
  const CycInt z = CycInt::integer(8, 1) - CycInt::zeta_power(8, 1);
  CHECK(reduce_cyc(z, 17, 2) == 16);
  CHECK(reduce_cyc(CycInt::integer(8, 40), 17, 2) == 6);
  CHECK_THROWS_AS(reduce_cyc(z, 17, 4), ConcreteError);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const int m = t % 2 ? 8 : 4;
    const int p = 17;
    std::vector<BigInt> a, b;
    for (int i = 0; i < euler_phi(m); ++i) {
      a.push_back(d(rng));
      b.push_back(d(rng));
    }
    const CycInt x(m, a), y(m, b);
    for (int r = 2; r < p; ++r) {
      if (multiplicative_order_mod(r, p) != m) continue;
      CHECK(reduce_cyc(x * y, p, r) == reduce_cyc(x, p, r) * reduce_cyc(y, p, r) % p);
      CHECK(reduce_cyc(x + y, p, r) == (reduce_cyc(x, p, r) + reduce_cyc(y, p, r)) % p);
    }
  }
}

TEST_CASE("a norm prime to p forces a nonzero reduction") {
  // every element with coefficients in [-2, 2], all roots of the right order
  for (auto [m, p] : {std::pair{2, 7}, std::pair{8, 17}, std::pair{4, 17}}) {
    const int n = euler_phi(m);
    std::vector<int> c(static_cast<std::size_t>(n), -2);
    for (;;) {
      const CycInt z(m, std::vector<BigInt>(c.begin(), c.end()));
      const BigInt nz = norm(z);
      if (nz % p != 0)
        for (int r = 2; r < p; ++r)
          if (multiplicative_order_mod(r, p) == m) CHECK(reduce_cyc(z, p, r) != 0);
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == 3) c[i++] = -2;
      if (i == c.size()) break;
    }
  }
}

TEST_CASE("factor group lemma lifts") {
  // (s^-1, t^-1, s, t) in G / G' when G / G' has order 4: its voltage is [s, t]
  const auto& d8 = group_by_id(GroupId::D8);
  int lifted = 0;
  for (const auto& cp : characters8(GroupId::D8))
    for (const auto& cq : characters8(GroupId::D8)) {
      if (cp.is_trivial() || cq.is_trivial()) continue;
      const ExplicitGroup g = build_explicit(d8, cp, cq, 7, 11);
      for (int ea = 0; ea < 4; ++ea)
        for (int eb = 0; eb < 4; ++eb) {
          const GElem s = g.make(d8.at("x"), ea & 1, ea >> 1), t = g.make(d8.at("f"), eb & 1, eb >> 1);
          const std::vector<GElem> gens{s, t};
          const auto all = subgroup_closure(g, gens);
          if (std::count(all.begin(), all.end(), 1) != g.order()) continue;
          const auto derived = derived_subgroup(g);
          const GElem c = g.commutator(s, t);
          if (static_cast<std::size_t>(std::count(derived.begin(), derived.end(), 1)) != cyclic_subgroup(g, c).size() ||
              std::count(derived.begin(), derived.end(), 1) * 4 != g.order())
            continue;
          const std::vector<GElem> walk{g.inv(s), g.inv(t), s, t};
          const auto qw = quotient_walk(g, c, walk);
          CHECK(qw.hamiltonian);
          CHECK(qw.voltage == c);
          const auto lift = fgl_lift(g, c, walk);
          CHECK(lift.size() == 616);
          CHECK(verify_ham_cycle(g, std::span<const GElem>(lift)));
          // trivial N gives back the cycle itself
          CHECK(fgl_lift(g, g.identity(), lift) == lift);
          // a non-generating voltage is rejected
          CHECK_THROWS_AS(fgl_lift(g, c, std::vector<GElem>{s, g.inv(s), s, g.inv(s)}), FglError);
          ++lifted;
        }
    }
  CHECK(lifted > 0);

  const ExplicitGroup g = build_explicit(d8, characters8(GroupId::D8)[1], characters8(GroupId::D8)[2], 7, 11);
  const GElem s = g.make(d8.at("x"), 1, 0);
  const GElem t = g.make(d8.at("f"), 0, 1);
  const std::vector<GElem> walk{g.inv(s), g.inv(t), s, t};
  // [s, t] has order 2 here and does not generate G'
  CHECK(g.elem_order(g.commutator(s, t)) == 2);
  CHECK_THROWS_AS(fgl_lift(g, g.x_p(), walk), FglError);
}

TEST_CASE("hand cases match the closed forms") {
  for (auto [p, q] : {std::pair{7, 11}, std::pair{11, 13}, std::pair{13, 17}}) {
    for (const auto& id : hand_case_ids()) {
      const auto r = verify_hand_case(id, p, q);
      CHECK_MESSAGE(r.ok(), id << " at " << p << "," << q);
    }
    const auto two = verify_hand_case("elemabel-2invert", p, q);
    CHECK(check_value(two, "C1 voltage") == xp(mod(2 * (1 - 4 * q), p)));
    CHECK(check_value(two, "C2 voltage") == xq(mod(2 * (1 - 2 * p), q)));
    const auto one = verify_hand_case("elemabel-1invert", p, q);
    CHECK(check_value(one, "C1 voltage") == xp(2));
    const auto sd = verify_hand_case("special-dihedral", p, q);
    for (int i = 1; i < q; ++i) {
      const std::string pre = "i=" + std::to_string(i) + ": ";
      CHECK(check_value(sd, pre + "C1 voltage") == x2xq(mod(2 * (p * (1 - i) - 1), q)));
      CHECK(check_value(sd, pre + "C2 voltage") == x2xq(mod(2 * (p * (i - 1) - i), q)));
    }
    CHECK(check_value(sd, "i=" + std::to_string(q - 1) + ": C voltage") == xp(mod(1 - 4 * q, p)));
  }
  CHECK_THROWS_AS(verify_hand_case("no-such-case", 7, 11), ConcreteError);
}

TEST_CASE("occurrence adjustment") {
  const auto r = verify_hand_case("elemabel-centralize", 7, 11);
  CHECK(r.ok());
  CHECK(check_value(r, "C_abc has 4 occurrences of a or a^-1") == "4");
}

TEST_CASE("number lemmas") {
  const std::vector<std::pair<int, int>> expected{{3, 2}, {7, 2}, {5, 3}, {11, 3}, {19, 5}};
  CHECK(lemma_0modpandq(30) == expected);
  CHECK(lemma_0modpandq(1000) == expected);
  CHECK_THROWS(lemma_0modpandq(20));

  const auto r = lemma_add3(7, 11);
  CHECK(r.holds);
  CHECK(r.counterexamples == 0);
  CHECK(lemma_add3(7, 11, 3).cases == r.cases);

  // direct brute force at (5, 7)
  const int n = 35;
  std::vector<int> units;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) units.push_back(a);
  long long bad = 0;
  for (int x = 0; x < n; ++x)
    for (int a : units)
      for (int b : units)
        for (int c : units) {
          bool ok = false;
          for (int mask = 0; mask < 8 && !ok; ++mask) {
            const int s = x + (mask & 1 ? a : 0) + (mask & 2 ? b : 0) + (mask & 4 ? c : 0);
            ok = std::gcd(s % n, n) == 1;
          }
          bad += !ok;
        }
  CHECK(bad == 0);
  CHECK(lemma_add3(5, 7).holds);

  CHECK(congruence_sweep(5, 1000, 4, 4).empty());
  CHECK(congruence_sweep(5, 1000, 2, 4).empty());
  // an independent double loop, and a congruence pair that does occur
  for (auto [cp, cq] : {std::pair{4, 4}, std::pair{2, 4}, std::pair{6, 6}}) {
    std::vector<std::pair<int, int>> direct;
    for (int p = 7; p < 200; ++p)
      for (int q = 7; q < 200; ++q)
        if (p != q && is_prime(p) && is_prime(q) && cp * p % q == 1 && cq * q % p == 1) direct.emplace_back(p, q);
    auto swept = congruence_sweep(5, 200, cp, cq);
    std::sort(swept.begin(), swept.end());
    CHECK(swept == direct);
  }
  CHECK(congruence_sweep(5, 200, 6, 6).size() == 4);
}

TEST_CASE("default prime pairs") {
  CHECK(default_prime_pairs(2, 2) == std::vector<std::pair<int, int>>{{7, 11}, {11, 13}});
  CHECK(default_prime_pairs(8, 4) == std::vector<std::pair<int, int>>{{17, 13}, {41, 17}});
  CHECK(admissible_primes(8, 100) == std::vector<int>{17, 41, 73, 89, 97});
}

TEST_CASE("order 56 replay") {
  const auto r = run_order56(2, 10);
  CHECK(r.no_index_two);
  CHECK(r.passed());
  for (const auto& rep : r.replays) {
    CHECK(rep.closes_in_h);
    CHECK(rep.voltage_is_z);
    CHECK(rep.lifted_length == 616);
  }
}

TEST_CASE("spaced sample") {
  CHECK(spaced_sample(10, 0).size() == 10);
  CHECK(spaced_sample(10, 20).size() == 10);
  CHECK(spaced_sample(10, 5) == std::vector<std::size_t>{0, 2, 4, 6, 8});
}
