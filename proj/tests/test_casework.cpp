#include "hamcert/casework.hpp"
#include "hamcert/certificate.hpp"
#include "hamcert/concrete_runs.hpp"
#include "hamcert/explicit_group.hpp"
#include "hamcert/ham_search.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

using namespace hamcert;

namespace {

const CaseReport& report(PropId p) {
  static std::map<PropId, CaseReport> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, run_prop(p)).first;
  return it->second;
}

std::string stream(const CaseReport& r) {
  std::ostringstream os;
  write_certificates(os, r);
  return os.str();
}

std::size_t index_of(const CaseReport& r, const CaseCell& cell) {
  for (std::size_t i = 0; i < r.cells.size(); ++i)
    if (r.cells[i].group == cell.group && r.cells[i].gens == cell.gens && r.cells[i].chi_p == cell.chi_p &&
        r.cells[i].chi_q == cell.chi_q)
      return i;
  return r.cells.size();
}

}  // namespace

TEST_CASE("drivers leave nothing unexplained") {
  struct Expect {
    PropId prop;
    std::size_t fgl, single, pair;
    std::map<std::string, std::size_t> exceptions;
  };
  const std::vector<Expect> expected{
      {PropId::P7_4, 116228, 0, 0, {}},
      {PropId::P7_7, 16052, 0, 0, {{"Lemma7.6", 336}}},
      {PropId::P5_1, 16128, 0, 0, {{"Lemma5.2", 336}}},
      {PropId::P7_9, 0, 4864, 3120, {{"Prop6.1", 16}}},
  };
  for (const auto& e : expected) {
    const auto& r = report(e.prop);
    CHECK(r.passed());
    CHECK(r.count(Outcome::unexplained) == 0);
    CHECK(r.count(Strategy::fgl) == e.fgl);
    CHECK(r.count(Strategy::single) == e.single);
    CHECK(r.count(Strategy::pair) == e.pair);
    CHECK(r.exception_counts() == e.exceptions);
    CHECK(r.cells_scanned() == r.count(Outcome::certified) + r.count(Outcome::exception));
    for (const auto& [id, n] : r.exception_counts()) {
      const auto allowed = allowed_exceptions(e.prop);
      CHECK(std::find(allowed.begin(), allowed.end(), id) != allowed.end());
    }
  }
  std::size_t e8 = 0;
  const auto& r74 = report(PropId::P7_4);
  for (std::size_t i = 0; i < r74.cells.size(); ++i)
    e8 += r74.cells[i].group == GroupId::E8 && r74.results[i].outcome == Outcome::certified;
  CHECK(e8 > 0);
}

TEST_CASE("cells with a trivial character are excluded") {
  for (PropId p : {PropId::P5_1, PropId::P7_4, PropId::P7_7, PropId::P7_9}) {
    const auto& r = report(p);
    for (std::size_t i = 0; i < r.cells.size(); ++i)
      if (r.cells[i].character_p().is_trivial() || r.cells[i].character_q().is_trivial())
        CHECK(r.results[i].outcome == Outcome::excluded);
  }
}

TEST_CASE("exception patterns match their own configurations") {
  for (const auto& pat : exception_patterns()) {
    const auto& chars = characters8(pat.group);
    CaseCell cell{PropId::P7_4, pat.group, pat.gens,
                  static_cast<int>(std::find(chars.begin(), chars.end(), pat.chi_p) - chars.begin()),
                  static_cast<int>(std::find(chars.begin(), chars.end(), pat.chi_q) - chars.begin())};
    const auto m = match_exception(cell, pat);
    REQUIRE(m.has_value());
    CHECK_FALSE(m->swap_pq);
    CHECK(witness_matches(cell, pat, m->images, m->swap_pq));
    // swapping the primes is also recognized
    CaseCell swapped = cell;
    std::swap(swapped.chi_p, swapped.chi_q);
    for (auto& s : swapped.gens) std::swap(s.inv_p, s.inv_q);
    if (pat.id != "Prop6.1") {
      const auto ms = match_exception(swapped, pat);
      REQUIRE(ms.has_value());
      CHECK(ms->swap_pq);
    }
    // a different character pair does not match
    CaseCell other = cell;
    other.chi_q = cell.chi_p;
    CHECK_FALSE(match_exception(other, pat));
  }
}

TEST_CASE("the exception configurations appear in their drivers") {
  auto cell_for = [](PropId prop, const ExceptionPattern& pat) {
    const auto& chars = characters8(pat.group);
    return CaseCell{prop, pat.group, pat.gens,
                    static_cast<int>(std::find(chars.begin(), chars.end(), pat.chi_p) - chars.begin()),
                    static_cast<int>(std::find(chars.begin(), chars.end(), pat.chi_q) - chars.begin())};
  };
  const CaseCell c51 = cell_for(PropId::P5_1, exception_pattern("Lemma5.2"));
  const auto r51 = evaluate_cell(c51);
  CHECK(r51.outcome == Outcome::exception);
  CHECK(r51.exception->pattern_id == "Lemma5.2");
  CHECK(index_of(report(PropId::P5_1), c51) < report(PropId::P5_1).cells.size());

  const CaseCell c61 = cell_for(PropId::P7_9, exception_pattern("Prop6.1"));
  const auto r61 = evaluate_cell(c61);
  CHECK(r61.outcome == Outcome::exception);
  CHECK(r61.exception->pattern_id == "Prop6.1");
  const auto& r79 = report(PropId::P7_9);
  const std::size_t k = index_of(r79, c61);
  REQUIRE(k < r79.cells.size());
  CHECK(r79.results[k].outcome == Outcome::exception);
}

TEST_CASE("serial and parallel runs give identical certificate streams") {
  for (PropId p : {PropId::P7_9, PropId::P7_7, PropId::P5_1}) {
    const std::string serial = stream(report(p));
    CHECK(serial == stream(run_prop(p, {4})));
    CHECK(serial == stream(run_prop(p, {1})));
  }
}

TEST_CASE("evaluate_cell agrees with the grouped driver") {
  std::mt19937 rng(5);
  for (PropId p : {PropId::P7_4, PropId::P7_9}) {
    const auto& r = report(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t i = rng() % r.cells.size();
      CHECK(certificate_line(r.cells[i], evaluate_cell(r.cells[i])) == certificate_line(r.cells[i], r.results[i]));
    }
  }
}

TEST_CASE("generic complements") {
  const auto& g = group_by_id(GroupId::C4xC2);
  const Elem a = g.at("a"), b = g.at("b");
  auto sign = [&](int ea, int eb) {
    for (const auto& chi : characters8(GroupId::C4xC2))
      if (chi.conductor <= 2 && chi(a) == ea && chi(b) == eb) return chi;
    throw std::logic_error("no character");
  };
  const Character triv = characters8(GroupId::C4xC2).front();
  // a centralizes C_p and b inverts it: <a, b x_p> is a complement
  CHECK(generic_complement(g, {{a}, {b, true}}, sign(0, 1), triv));
  // a inverts C_p: [a, b x_p] is a nontrivial power of x_p
  CHECK_FALSE(generic_complement(g, {{a}, {b, true}}, sign(1, 1), triv));
  // <a^2, b x_p> has order 4
  CHECK_FALSE(generic_complement(g, {{g.at("a2")}, {b, true}}, sign(0, 1), triv));
  // the secondary exponent is kept symbolic
  CHECK_FALSE(generic_complement(g, {{a, false, true}, {b, false, true, true}}, triv, sign(0, 1)));
}

TEST_CASE("the order-8 filter of the 7.9 scan agrees with explicit groups") {
  // No remaining cell has a 2-subset of order 8 for every i; check that
  // directly on a sample at the first default prime pair.
  const auto& r = report(PropId::P7_9);
  std::size_t tested = 0;
  for (std::size_t k = 0; k < r.cells.size(); k += 37) {
    if (r.results[k].outcome == Outcome::excluded) continue;
    const auto& cell = r.cells[k];
    const auto [p, q] = default_prime_pairs(cell.character_p().conductor, cell.character_q().conductor)[0];
    const ExplicitGroup g = build_explicit(cell.table(), cell.character_p(), cell.character_q(), p, q);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = x + 1; y < 3; ++y) {
        int order8 = 0;
        for (int i = 0; i < q; ++i) {
          const std::vector<GElem> two{g.lift(cell.gens[x], i), g.lift(cell.gens[y], i)};
          const auto sub = subgroup_closure(g, two);
          order8 += std::count(sub.begin(), sub.end(), 1) == 8;
        }
        CHECK(order8 < q);
        CHECK_FALSE(generic_complement(cell.table(), {cell.gens[x], cell.gens[y]}, cell.character_p(),
                                       cell.character_q()));
      }
    ++tested;
  }
  CHECK(tested > 100);
}

TEST_CASE("every certificate rechecks and round-trips") {
  for (PropId p : {PropId::P5_1, PropId::P7_4, PropId::P7_7, PropId::P7_9}) {
    const auto& r = report(p);
    std::istringstream in(stream(r));
    std::string line;
    std::size_t n = 0, bad = 0;
    while (std::getline(in, line)) {
      const Certificate c = parse_certificate(line);
      bad += !recheck(c).ok;
      bad += certificate_line(c.cell, c.result) != line;
      ++n;
    }
    CHECK(n == r.cells.size());
    CHECK(bad == 0);
  }
}

TEST_CASE("tampered certificates are rejected") {
  const auto& r = report(PropId::P7_9);
  auto first = [&](auto pred) {
    for (std::size_t i = 0; i < r.cells.size(); ++i)
      if (pred(r.results[i])) return i;
    FAIL("no such cell");
    return std::size_t{0};
  };
  const std::size_t pair = first([](const CellResult& x) { return x.strategy == Strategy::pair; });
  const std::size_t single = first([](const CellResult& x) { return x.strategy == Strategy::single; });
  const std::size_t exc = first([](const CellResult& x) { return x.outcome == Outcome::exception; });
  const std::size_t excl = first([](const CellResult& x) { return x.outcome == Outcome::excluded; });

  Certificate c{r.cells[pair], r.results[pair]};
  CHECK(recheck(c).ok);
  c.result.norm_q += 1;
  CHECK_FALSE(recheck(c).ok);
  c = {r.cells[pair], r.results[pair]};
  c.result.cycle2 = c.result.cycle;
  CHECK_FALSE(recheck(c).ok);
  c = {r.cells[single], r.results[single]};
  c.result.cycle.steps[1] = -c.result.cycle.steps[0];
  CHECK_FALSE(recheck(c).ok);
  c = {r.cells[single], r.results[single]};
  c.result.cycle.steps[0] = 9;
  CHECK_FALSE(recheck(c).ok);
  c = {r.cells[exc], r.results[exc]};
  std::swap(c.result.exception->images[0], c.result.exception->images[1]);
  CHECK_FALSE(recheck(c).ok);
  c = {r.cells[exc], r.results[exc]};
  c.result.exception->pattern_id = "Lemma7.6";
  CHECK_FALSE(recheck(c).ok);
  c = {r.cells[excl], r.results[excl]};
  c.result.reason = "because";
  CHECK_FALSE(recheck(c).ok);
  c = {r.cells[single], r.results[single]};
  c.result.outcome = Outcome::unexplained;
  CHECK_FALSE(recheck(c).ok);

  CHECK_THROWS_AS(parse_certificate("{"), CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"prop":"7.4"})"), CertificateError);
}

TEST_CASE("bridge between cyclotomic and explicit voltages") {
  const std::vector<const CaseReport*> all{&report(PropId::P7_4), &report(PropId::P7_7), &report(PropId::P5_1),
                                           &report(PropId::P7_9)};
  const auto b = run_bridge(all, 200, 42);
  CHECK(b.samples == 200);
  CHECK(b.comparisons == 400);
  CHECK(b.mismatches.empty());

  // every cycle of a handful of cells, at both default pairs
  std::mt19937 rng(1);
  for (const auto* r : all)
    for (int t = 0; t < 4; ++t) {
      std::size_t k;
      do k = rng() % r->cells.size();
      while (r->results[k].outcome == Outcome::excluded);
      const auto& cell = r->cells[k];
      for (const auto& c : enumerate_ham_cycles(cell.table(), cell.gens))
        for (const auto& [p, q] : default_prime_pairs(cell.character_p().conductor, cell.character_q().conductor))
          CHECK(bridge_mismatch(cell, c, p, q, 3).empty());
    }
}

TEST_CASE("certified cells lift to hamiltonian cycles") {
  for (PropId p : {PropId::P7_4, PropId::P7_9}) {
    const auto e = run_e2e(report(p), {{7, 11}, {11, 13}}, 20);
    CHECK(e.passed());
    for (const auto& s : e.samples) CHECK(s.length == static_cast<std::size_t>(8 * s.p * s.q));
  }
  // order-4 and order-8 characters need larger primes
  const auto e = run_e2e(report(PropId::P7_4), {{17, 13}}, 10);
  CHECK(e.passed());
}
