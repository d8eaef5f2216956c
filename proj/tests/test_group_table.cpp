#include "hamcert/group_table.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hamcert;

namespace {

// Every map G -> Z/m that respects products, found by brute force over all
// assignments on a generating pair or triple.
int count_homomorphisms(const GroupTable& g, int m) {
  const auto gens = canonical_generators(g);
  int count = 0;
  std::vector<int> img(gens.size(), 0);
  for (;;) {
    // extend along words: BFS from the identity
    std::vector<int> val(static_cast<std::size_t>(g.order()), -1);
    val[0] = 0;
    std::vector<Elem> queue{0};
    bool ok = true;
    for (std::size_t k = 0; k < queue.size() && ok; ++k)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = g.mul(queue[k], gens[i]);
        const int v = (val[static_cast<std::size_t>(queue[k])] + img[i]) % m;
        if (val[static_cast<std::size_t>(y)] < 0) {
          val[static_cast<std::size_t>(y)] = v;
          queue.push_back(y);
        }
      }
    for (Elem x = 0; x < g.order() && ok; ++x)
      for (Elem y = 0; y < g.order() && ok; ++y)
        ok = val[static_cast<std::size_t>(g.mul(x, y))] ==
             (val[static_cast<std::size_t>(x)] + val[static_cast<std::size_t>(y)]) % m;
    count += ok;
    std::size_t i = 0;
    while (i < img.size() && ++img[i] == m) img[i++] = 0;
    if (i == img.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("catalog has the five groups with ranks 1,2,2,2,3") {
  const auto& cat = order8_catalog();
  REQUIRE(cat.size() == 5);
  std::vector<int> ranks;
  for (const auto& g : cat) {
    CHECK(g.order() == 8);
    ranks.push_back(rank(g));
  }
  CHECK(ranks == std::vector<int>{1, 2, 2, 2, 3});
}

TEST_CASE("group axioms hold on every table") {
  std::vector<const GroupTable*> all;
  for (const auto& g : order8_catalog()) all.push_back(&g);
  all.push_back(&g56());
  for (const GroupTable* g : all) {
    const int n = g->order();
    std::set<std::string> labels;
    for (Elem x = 0; x < n; ++x) {
      labels.insert(g->label(x));
      CHECK(g->mul(0, x) == x);
      CHECK(g->mul(x, 0) == x);
      CHECK(g->mul(x, g->inv(x)) == 0);
      CHECK(n % g->elem_order(x) == 0);
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (g->mul(g->mul(x, y), z) != g->mul(x, g->mul(y, z))) FAIL("not associative");
    }
    CHECK(labels.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("presentation relations") {
  const auto& d8 = group_by_id(GroupId::D8);
  const Elem f = d8.at("f"), x = d8.at("x");
  CHECK(d8.mul(f, f) == 0);
  CHECK(d8.pow(d8.mul(f, x), 2) == 0);
  CHECK(d8.mul(d8.mul(f, x), f) == d8.inv(x));

  const auto& q8 = group_by_id(GroupId::Q8);
  CHECK(q8.mul(q8.at("i"), q8.at("j")) == q8.at("k"));
  int involutions = 0;
  for (Elem y = 1; y < 8; ++y) involutions += q8.mul(y, y) == 0;
  CHECK(involutions == 1);

  const auto& e8 = group_by_id(GroupId::E8);
  for (Elem y = 1; y < 8; ++y) CHECK(e8.elem_order(y) == 2);

  CHECK(group_by_id(GroupId::C8).elem_order(group_by_id(GroupId::C8).at("s")) == 8);
  CHECK_THROWS_AS(d8.label(8), GroupError);
}

TEST_CASE("rank agrees with minimum generating size and irredundant sets") {
  for (const auto& g : order8_catalog()) {
    CHECK(rank(g) == min_generating_size(g));
    for (const auto& s : irredundant_generating_sets(g)) CHECK(static_cast<int>(s.size()) == rank(g));
  }
  CHECK(rank(group_by_id(GroupId::C8)) == 1);
  CHECK(rank(group_by_id(GroupId::D8)) == 2);
  CHECK(rank(group_by_id(GroupId::E8)) == 3);
  CHECK_THROWS_AS(rank(g56()), GroupError);
}

TEST_CASE("generating multisets") {
  const auto& e8 = group_by_id(GroupId::E8);
  // bases of F_2^3 as unordered triples: 7*6*4 / 3! = 28
  int bases = 0;
  for (Elem a = 1; a < 8; ++a)
    for (Elem b = a + 1; b < 8; ++b)
      for (Elem c = b + 1; c < 8; ++c) bases += e8.generates(singleton(a) | singleton(b) | singleton(c));
  CHECK(bases == 28);
  const auto triples = generating_multisets(e8, 3);
  CHECK(std::count_if(triples.begin(), triples.end(), [](const GenMultiset& m) {
          return m[0] != m[1] && m[1] != m[2];
        }) == 28);
  CHECK(irredundant_generating_sets(e8).size() == 28);
  CHECK(generating_multisets(group_by_id(GroupId::C8), 1).size() == 4);
  CHECK_THROWS_AS(generating_multisets(e8, 2), GroupError);
  CHECK_THROWS_AS(generating_multisets(e8, 6), GroupError);
  for (const auto& g : order8_catalog())
    for (const auto& m : generating_multisets(g, rank(g) + 1)) {
      CHECK(std::is_sorted(m.begin(), m.end()));
      CHECK(std::find(m.begin(), m.end(), 0) == m.end());
    }
}

TEST_CASE("generating multiset counts are invariant under automorphisms") {
  for (const auto& g : order8_catalog()) {
    const auto sets = generating_multisets(g, rank(g) + 1);
    std::set<GenMultiset> all(sets.begin(), sets.end());
    for (const auto& phi : automorphisms(g.id())) {
      std::set<GenMultiset> image;
      for (const auto& m : sets) {
        GenMultiset t;
        for (Elem x : m) t.push_back(phi[static_cast<std::size_t>(x)]);
        std::sort(t.begin(), t.end());
        image.insert(t);
      }
      CHECK(image == all);
    }
  }
}

TEST_CASE("abelian characters") {
  CHECK(abelian_characters(group_by_id(GroupId::E8), 2).size() == 8);
  for (int m : {2, 4, 8}) CHECK(abelian_characters(group_by_id(GroupId::D8), m).size() == 4);
  for (const auto& g : order8_catalog()) {
    for (int m : {1, 2, 4, 8}) {
      const auto chars = abelian_characters(g, m);
      CHECK(static_cast<int>(chars.size()) == count_homomorphisms(g, m));
      REQUIRE(!chars.empty());
      CHECK(chars.front().is_trivial());
      for (const auto& chi : chars) {
        CHECK(is_homomorphism(g, chi));
        CHECK(chi(0) == 0);
        CHECK(m % chi.conductor == 0);
      }
    }
    CHECK(characters8(g.id()).size() == abelian_characters(g, 8).size());
  }
  CHECK(abelian_characters(g56(), 2).size() == 1);
}

TEST_CASE("derived subgroup and center") {
  const auto& d8 = group_by_id(GroupId::D8);
  CHECK(derived_subgroup(d8) == (singleton(0) | singleton(d8.at("x2"))));
  CHECK(derived_subgroup(group_by_id(GroupId::E8)) == singleton(0));
  const auto& q8 = group_by_id(GroupId::Q8);
  CHECK(center(q8) == (singleton(0) | singleton(q8.at("-1"))));
  CHECK(popcount(derived_subgroup(g56())) == 8);
}

TEST_CASE("automorphisms preserve products") {
  const std::vector<std::size_t> expected{4, 8, 8, 24, 168};
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& g = order8_catalog()[k];
    CHECK(automorphisms(g.id()).size() == expected[k]);
    for (const auto& phi : automorphisms(g.id()))
      for (Elem x = 0; x < 8; ++x)
        for (Elem y = 0; y < 8; ++y)
          CHECK(phi[static_cast<std::size_t>(g.mul(x, y))] ==
                g.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]));
  }
}
