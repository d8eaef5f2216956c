#include "hamcert/hand_cases.hpp"

#include "hamcert/ham_search.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hamcert {

std::vector<GElem> alternate(const GElem& x, const GElem& y, int k) {
  std::vector<GElem> w;
  for (int i = 0; i < k; ++i) {
    w.push_back(x);
    w.push_back(y);
  }
  return w;
}

std::vector<GElem> drop_last(std::vector<GElem> w) {
  if (!w.empty()) w.pop_back();
  return w;
}

std::vector<GElem> repeat(const std::vector<GElem>& w, int k) {
  std::vector<GElem> out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::vector<GElem> concat(std::initializer_list<std::vector<GElem>> parts) {
  std::vector<GElem> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

bool HandCaseReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const HandCheck& c) { return c.passed; });
}

namespace {

long long mod(long long x, long long m) { return ((x % m) + m) % m; }

/// The +-1-valued character with the given signs on the listed elements.
Character sign_character(const GroupTable& base, const std::map<std::string, int>& signs) {
  for (const auto& chi : characters8(base.id())) {
    if (chi.conductor > 2) continue;
    const bool match = std::all_of(signs.begin(), signs.end(), [&](const auto& kv) {
      return (chi(base.at(kv.first)) == 0) == (kv.second == 1);
    });
    if (match) return chi;
  }
  throw ConcreteError("no character with the requested signs");
}

class CaseRun {
 public:
  CaseRun(HandCaseReport& r, const ExplicitGroup& g) : r_(r), g_(g) {}

  void check(std::string name, bool ok, std::string computed = {}, std::string expected = {}) {
    r_.checks.push_back({std::move(name), ok, std::move(computed), std::move(expected)});
  }

  /// Closed and hamiltonian in G/<n>, voltage equal to `expected`. Returns
  /// whether the voltage generates <n>.
  bool quotient_cycle(const std::string& name, const GElem& n, const std::vector<GElem>& w, const GElem& expected) {
    const auto res = quotient_walk(g_, n, w);
    const std::string quotient = "G/<" + g_.to_string(n) + ">";
    check(name + " closed in " + quotient, res.closed, g_.to_string(res.voltage));
    check(name + " hamiltonian in " + quotient, res.hamiltonian, "length " + std::to_string(w.size()));
    check(name + " voltage", res.voltage == expected, g_.to_string(res.voltage), g_.to_string(expected));
    return res.closed && g_.elem_order(res.voltage) == g_.elem_order(n);
  }

  void lift(const std::string& name, const GElem& n, const std::vector<GElem>& w) {
    try {
      const auto lifted = fgl_lift(g_, n, w);
      check(name + " lift verifies in G", true, std::to_string(lifted.size()) + " vertices");
    } catch (const FglError& e) {
      check(name + " lift verifies in G", false, e.what());
    }
  }

  const ExplicitGroup& g() const { return g_; }

 private:
  HandCaseReport& r_;
  const ExplicitGroup& g_;
};

std::vector<GElem> cabc(const ExplicitGroup& g, const GElem& a, const GElem& b, const GElem& c) {
  return {g.inv(a), g.inv(b), a, g.inv(c), g.inv(a), b, a, c};
}

// Actions: e1 inverts C_p and centralizes C_q; e2, e3 invert C_pq.
ExplicitGroup two_invert_group(int p, int q) {
  const auto& e8 = group_by_id(GroupId::E8);
  const auto chi_p = sign_character(e8, {{"e1", -1}, {"e2", -1}, {"e3", -1}});
  const auto chi_q = sign_character(e8, {{"e1", 1}, {"e2", -1}, {"e3", -1}});
  return build_explicit(e8, chi_p, chi_q, p, q);
}

void case_cabc(HandCaseReport& r) {
  const auto g = two_invert_group(r.p, r.q);
  CaseRun run(r, g);
  const Elem e1 = g.base().at("e1"), e2 = g.base().at("e2"), e3 = g.base().at("e3");
  const GElem cpq = g.make(0, 1, 1);
  long long total = 0, hamiltonian = 0, commutator = 0, conjugate = 0, criterion = 0;
  for (int i = 0; i < r.p; ++i)
    for (int j = 0; j < r.p; ++j) {
      const GElem a = g.make(e1, i, 0), b = g.make(e2, j, 1), c = g.make(e3, 0, 0);
      const auto w = cabc(g, a, b, c);
      const auto res = quotient_walk(g, cpq, w);
      const GElem ba = g.conj(b, a);
      ++total;
      hamiltonian += res.hamiltonian;
      commutator += res.voltage == g.commutator(ba, c);
      conjugate += ba == g.make(e2, 2LL * i - j, 1);
      criterion += g.generates_cpq(res.voltage) == (mod(2LL * i - j, r.p) != 0);
    }
  const auto count = [&](long long k) { return std::to_string(k) + "/" + std::to_string(total); };
  run.check("C_abc hamiltonian in G/C_pq for all (i,j)", hamiltonian == total, count(hamiltonian));
  run.check("V(C_abc) = [b^a, c] for all (i,j)", commutator == total, count(commutator));
  run.check("b^a = e2 xp^(2i-j) xq for all (i,j)", conjugate == total, count(conjugate));
  run.check("V(C_abc) generates C_pq iff 2i != j mod p", criterion == total, count(criterion));
  const auto w = cabc(g, g.make(e1, 0, 0), g.make(e2, 1, 1), g.make(e3, 0, 0));
  run.lift("C_abc at (i,j)=(0,1)", cpq, w);
}

void case_two_invert(HandCaseReport& r) {
  const auto g = two_invert_group(r.p, r.q);
  CaseRun run(r, g);
  const int p = r.p, q = r.q;
  const GElem a = g.make(g.base().at("e1"), 1, 0);
  const GElem b = g.make(g.base().at("e2"), 2, 1);
  const GElem c = g.make(g.base().at("e3"), 0, 0);
  const auto v = walk_product(g, cabc(g, a, b, c));
  run.check("V(C_abc) fails to generate C_pq when 2i = j", !g.generates_cpq(v), g.to_string(v));

  const auto c1 = repeat(concat({drop_last(alternate(b, c, 2 * q)), {a}}), 2);
  const bool c1_gen = run.quotient_cycle("C1", g.x_p(), c1, g.make(0, 2LL * (1 - 4LL * q), 0));
  const auto c2 = repeat(concat({drop_last(alternate(b, c, p)), {a}, drop_last(alternate(c, b, p)), {a}}), 2);
  const bool c2_gen = run.quotient_cycle("C2", g.x_q(), c2, g.make(0, 0, 2LL * (1 - 2LL * p)));
  if (c1_gen) run.lift("C1", g.x_p(), c1);
  if (c2_gen) run.lift("C2", g.x_q(), c2);
  run.check("C1 or C2 has a generating voltage", c1_gen || c2_gen,
            "2(1-4q) mod p = " + std::to_string(mod(2LL * (1 - 4LL * q), p)) +
                ", 2(1-2p) mod q = " + std::to_string(mod(2LL * (1 - 2LL * p), q)));
}

void case_one_invert(HandCaseReport& r) {
  const auto& e8 = group_by_id(GroupId::E8);
  const auto chi_p = sign_character(e8, {{"e1", -1}, {"e2", 1}, {"e3", -1}});
  const auto chi_q = sign_character(e8, {{"e1", 1}, {"e2", -1}, {"e3", -1}});
  const auto g = build_explicit(e8, chi_p, chi_q, r.p, r.q);
  CaseRun run(r, g);
  const GElem a = g.make(e8.at("e1"), 1, 0), b = g.make(e8.at("e2"), 0, 1), c = g.make(e8.at("e3"), 0, 0);
  const auto c1 = repeat(concat({drop_last(alternate(b, c, 2 * r.q)), {a}}), 2);
  if (run.quotient_cycle("C1", g.x_p(), c1, g.make(0, 2, 0))) run.lift("C1", g.x_p(), c1);
}

void case_centralize(HandCaseReport& r) {
  const auto& e8 = group_by_id(GroupId::E8);
  const auto chi_p = sign_character(e8, {{"e1", 1}, {"e2", -1}, {"e3", 1}});
  const auto chi_q = sign_character(e8, {{"e1", 1}, {"e2", 1}, {"e3", -1}});
  const auto g = build_explicit(e8, chi_p, chi_q, r.p, r.q);
  CaseRun run(r, g);
  const GElem a = g.make(e8.at("e1"), 1, 1), b = g.make(e8.at("e2"), 0, 0), c = g.make(e8.at("e3"), 0, 0);
  run.check("|a| = 2pq", g.elem_order(a) == 2 * r.p * r.q, std::to_string(g.elem_order(a)));
  const auto w = cabc(g, a, b, c);
  const auto res = quotient_walk(g, g.make(0, 1, 1), w);
  run.check("C_abc hamiltonian in G/C_pq", res.hamiltonian);
  const auto uses = std::count_if(w.begin(), w.end(), [&](const GElem& x) { return x == a || x == g.inv(a); });
  run.check("C_abc has 4 occurrences of a or a^-1", uses == 4, std::to_string(uses));
  try {
    const auto adj = occur3_adjust(g, w, a, g.inv(a));
    std::string chosen = "I = {";
    for (std::size_t k = 0; k < adj.chosen.size(); ++k) chosen += (k ? "," : "") + std::to_string(adj.chosen[k] + 1);
    chosen += "}";
    run.check("occurrence adjustment lifts", adj.lifted_length == static_cast<std::size_t>(g.order()),
              chosen + ", " + std::to_string(adj.lifted_length) + " vertices");
    const auto good = std::count(adj.subset_generates.begin(), adj.subset_generates.end(), true);
    run.check("some subset of 3 occurrences generates", good > 0, std::to_string(good) + "/8 subsets");
  } catch (const std::exception& e) {
    run.check("occurrence adjustment lifts", false, e.what());
  }
}

/// The analytic escape shared by both exceptional configurations: two
/// generators with the same action differ by a central involution.
void central_difference(CaseRun& run, const std::vector<GElem>& s, const GElem& x, const GElem& y,
                        const std::string& label) {
  const auto& g = run.g();
  const auto closure = subgroup_closure(g, s);
  const auto size = std::count(closure.begin(), closure.end(), 1);
  run.check("S generates G", size == g.order(), std::to_string(size), std::to_string(g.order()));
  const GElem z = g.mul(g.inv(x), y);
  const auto gens = g.generators();
  const bool central =
      std::all_of(gens.begin(), gens.end(), [&](const GElem& w) { return g.mul(z, w) == g.mul(w, z); });
  run.check(label + " is central", central, g.to_string(z));
  run.check(label + " has order 2", g.elem_order(z) == 2, std::to_string(g.elem_order(z)));
}

/// True when no coded cycle of the quotient has both voltages 5-smooth.
bool coded_search_fails(const GroupTable& base, const std::vector<GeneratorSpec>& gens, const Character& chi_p,
                        const Character& chi_q) {
  const auto cycles = enumerate_ham_cycles(base, gens);
  return !strategy_fgl(base, cycles, gens, chi_p, chi_q).has_value();
}

void case_elemabel_exception(HandCaseReport& r) {
  const auto& e8 = group_by_id(GroupId::E8);
  const auto chi_p = sign_character(e8, {{"e1", -1}, {"e2", 1}, {"e3", 1}});
  const auto chi_q = sign_character(e8, {{"e1", -1}, {"e2", -1}, {"e3", -1}});
  const auto g = build_explicit(e8, chi_p, chi_q, r.p, r.q);
  CaseRun run(r, g);
  const Elem e1 = e8.at("e1"), e2 = e8.at("e2"), e3 = e8.at("e3");
  const std::vector<GElem> s{g.make(e1, 0, 1), g.make(e2, 0, 0), g.make(e3, 0, 0), g.make(e8.mul(e1, e2), 1, 0)};
  central_difference(run, s, s[1], s[2], "e2 e3^-1");
  const std::vector<GeneratorSpec> gens{{e1, false, true}, {e2}, {e3}, {e8.mul(e1, e2), true, false}};
  run.check("coded search finds no certified cycle", coded_search_fails(e8, gens, chi_p, chi_q));
}

void case_order8_subset_exception(HandCaseReport& r) {
  const auto& e8 = group_by_id(GroupId::E8);
  const auto chi_p = sign_character(e8, {{"e1", -1}, {"e2", 1}, {"e3", 1}});
  const auto chi_q = sign_character(e8, {{"e1", 1}, {"e2", -1}, {"e3", -1}});
  const auto g = build_explicit(e8, chi_p, chi_q, r.p, r.q);
  CaseRun run(r, g);
  const Elem a = e8.at("e1"), b = e8.at("e2"), c = e8.at("e3");
  const std::vector<GElem> s{g.make(a, 0, 0), g.make(b, 0, 0), g.make(c, 0, 0), g.make(e8.mul(a, b), 1, 1)};
  central_difference(run, s, s[1], s[2], "b^-1 c");
  const std::vector<GeneratorSpec> gens{{a}, {b}, {c}, {e8.mul(a, b), true, true}};
  run.check("coded search finds no certified cycle", coded_search_fails(e8, gens, chi_p, chi_q));
}

void case_special_dihedral(HandCaseReport& r) {
  const auto& d8 = group_by_id(GroupId::D8);
  // f centralizes C_p and inverts C_q; x4 inverts C_p and centralizes C_q.
  const auto chi_p = sign_character(d8, {{"f", 1}, {"x", -1}});
  const auto chi_q = sign_character(d8, {{"f", -1}, {"x", 1}});
  const auto g = build_explicit(d8, chi_p, chi_q, r.p, r.q);
  CaseRun run(r, g);
  const int p = r.p, q = r.q;
  const Elem x2 = d8.at("x2");
  const GElem s = g.make(d8.at("f"), 0, 0);
  const GElem u = g.make(d8.at("fx3"), 0, 1);
  const GElem n1 = g.make(x2, 0, 1);
  run.check("<x4^2 xq> is normal of order 2q", is_normal_cyclic(g, n1) && g.elem_order(n1) == 2 * q,
            std::to_string(g.elem_order(n1)));
  for (int i = 1; i < q; ++i) {
    const std::string tag = "i=" + std::to_string(i) + ": ";
    const GElem t = g.make(d8.at("fx"), 1, i);
    const auto c1 = repeat(concat({drop_last(alternate(t, u, p)), {s}}), 2);
    const auto c2 = repeat(concat({drop_last(alternate(u, t, p)), {s}}), 2);
    const bool g1 = run.quotient_cycle(tag + "C1", n1, c1, g.make(x2, 0, 2LL * (p * (1LL - i) - 1)));
    const bool g2 = run.quotient_cycle(tag + "C2", n1, c2, g.make(x2, 0, 2LL * (p * (i - 1LL) - i)));
    // The doubled walk ((t,u)^(2p)#, s)^2 revisits vertices of G/<x4^2 xq>.
    const auto doubled = repeat(concat({drop_last(alternate(t, u, 2 * p)), {s}}), 2);
    run.check(tag + "((t,u)^(2p)#, s)^2 is not hamiltonian", !quotient_walk(g, n1, doubled).hamiltonian,
              "length " + std::to_string(doubled.size()));
    bool g3 = false;
    std::vector<GElem> c3;
    if (i == q - 1) {
      c3 = concat({drop_last(alternate(t, u, 2 * q)), {s}, drop_last(alternate(u, t, 2 * q)), {s}});
      g3 = run.quotient_cycle(tag + "C", g.x_p(), c3, g.make(0, 1 - 4LL * q, 0));
    }
    if (g1) run.lift(tag + "C1", n1, c1);
    if (g2) run.lift(tag + "C2", n1, c2);
    if (g3) run.lift(tag + "C", g.x_p(), c3);
    run.check(tag + "some cycle has a generating voltage", g1 || g2 || g3);
  }
}

void case_commutator_2gen(HandCaseReport& r) {
  for (GroupId id : {GroupId::C4xC2, GroupId::D8, GroupId::Q8}) {
    const auto& base = group_by_id(id);
    const std::string gname(to_string(id));
    long long groups = 0, identity_ok = 0, identity_total = 0, cycles_ok = 0, lifts_ok = 0, pairs = 0, centers_ok = 0;
    for (const auto& chi_p : characters8(id)) {
      for (const auto& chi_q : characters8(id)) {
        if (chi_p.is_trivial() || chi_q.is_trivial() || !admissible_pair(chi_p, chi_q, r.p, r.q)) continue;
        const auto g = build_explicit(base, chi_p, chi_q, r.p, r.q);
        ++groups;
        centers_ok += !cpq_meets_center(g);
        const auto derived = derived_subgroup(g);
        const auto dsize = std::count(derived.begin(), derived.end(), 1);
        GElem n = g.identity();
        for (int k = 0; k < g.order(); ++k)
          if (derived[static_cast<std::size_t>(k)] && g.elem_order(g.element(k)) == dsize) {
            n = g.element(k);
            break;
          }
        for (Elem sb = 1; sb < base.order(); ++sb)
          for (Elem tb = 1; tb < base.order(); ++tb) {
            if (!base.generates(singleton(sb) | singleton(tb))) continue;
            const int k_cycle = id == GroupId::C4xC2 ? 3 : 1;
            if (id == GroupId::C4xC2 && base.elem_order(sb) != 4) continue;
            const GElem s = g.make(sb, 1, 0), t = g.make(tb, 0, 1);
            const std::vector<GElem> st{s, t};
            const auto cl = subgroup_closure(g, st);
            if (std::count(cl.begin(), cl.end(), 1) != g.order()) continue;
            ++pairs;
            for (int k : {1, 3}) {
              ++identity_total;
              auto sub = cyclic_subgroup(g, g.commutator(g.pow(s, k), t));
              std::vector<int> expect;
              for (int x = 0; x < g.order(); ++x)
                if (derived[static_cast<std::size_t>(x)]) expect.push_back(x);
              identity_ok += sub == expect;
            }
            std::vector<GElem> w;
            for (int k = 0; k < k_cycle; ++k) w.push_back(g.inv(s));
            w.push_back(g.inv(t));
            for (int k = 0; k < k_cycle; ++k) w.push_back(s);
            w.push_back(t);
            const auto res = quotient_walk(g, n, w);
            cycles_ok += res.hamiltonian && res.voltage == g.commutator(g.pow(s, k_cycle), t);
            try {
              lifts_ok += fgl_lift(g, n, w).size() == static_cast<std::size_t>(g.order());
            } catch (const FglError&) {
            }
          }
      }
    }
    const auto check = [&r](std::string name, bool ok, std::string computed) {
      r.checks.push_back({std::move(name), ok, std::move(computed), {}});
    };
    const auto frac = [](long long a, long long b) { return std::to_string(a) + "/" + std::to_string(b); };
    check(gname + ": C_pq meets Z(G) trivially", centers_ok == groups, frac(centers_ok, groups));
    check(gname + ": <[s^k, t]> = G' for k in {1,3}", identity_total > 0 && identity_ok == identity_total,
              frac(identity_ok, identity_total));
    check(gname + ": commutator cycle hamiltonian in G/G' with voltage [s^k, t]", pairs > 0 && cycles_ok == pairs,
              frac(cycles_ok, pairs));
    check(gname + ": commutator cycle lifts", lifts_ok == pairs, frac(lifts_ok, pairs));
  }
}

using CaseFn = std::function<void(HandCaseReport&)>;

const std::vector<std::pair<std::string, CaseFn>>& case_table() {
  static const std::vector<std::pair<std::string, CaseFn>> table{
      {"elemabel-cabc", case_cabc},
      {"elemabel-centralize", case_centralize},
      {"elemabel-2invert", case_two_invert},
      {"elemabel-1invert", case_one_invert},
      {"elemabel-exception", case_elemabel_exception},
      {"order8-subset-exception", case_order8_subset_exception},
      {"special-dihedral", case_special_dihedral},
      {"commutator-2gen", case_commutator_2gen},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& hand_case_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : case_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

HandCaseReport verify_hand_case(std::string_view case_id, int p, int q) {
  for (const auto& [id, fn] : case_table()) {
    if (id != case_id) continue;
    HandCaseReport r{id, p, q, {}};
    fn(r);
    return r;
  }
  throw ConcreteError("unknown hand case: " + std::string(case_id));
}

}  // namespace hamcert
