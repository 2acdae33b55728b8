// Endomorphism enumeration against two independent oracles: exhaustive
// image-table search for tiny groups, and word-propagation search (validated
// against the first oracle) for order-8 groups.

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "fuchs/endos.hpp"
#include "fuchs/errors.hpp"
#include "fuchs/groups.hpp"

using namespace fuchs;
using groups::GroupPtr;

namespace {

bool is_hom_table(const groups::GroupTable& g, const groups::GroupTable& h,
                  const std::vector<int>& f) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (f[static_cast<std::size_t>(g.mul(x, y))] !=
          h.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

// Oracle 1: every image table in h^|g|, filtered by the homomorphism law.
std::set<std::vector<int>> all_homs_exhaustive(const GroupPtr& g,
                                               const GroupPtr& h) {
  const int n = g->order(), m = h->order();
  std::set<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    if (is_hom_table(*g, *h, f)) out.insert(f);
    int i = n - 1;
    while (i >= 0 && f[static_cast<std::size_t>(i)] == m - 1)
      f[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++f[static_cast<std::size_t>(i)];
  }
  return out;
}

// Oracle 2: pick generator images, propagate along locally computed words,
// then verify the full table. Independent of endos::extend_hom internals.
std::set<std::vector<int>> all_endos_by_words(const GroupPtr& g) {
  const int n = g->order();
  // Find a small generating set by brute force (single, then pairs).
  auto closure = [&](std::vector<int> gens) {
    std::vector<int> word_parent(static_cast<std::size_t>(n), -1);
    std::vector<int> word_gen(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[0] = true;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          int y = g->mul(x, gens[k]);
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            word_parent[static_cast<std::size_t>(y)] = x;
            word_gen[static_cast<std::size_t>(y)] = static_cast<int>(k);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    bool all = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    return std::tuple(all, word_parent, word_gen);
  };

  std::vector<int> gens;
  std::vector<int> parent, genix;
  for (int a = 1; a < n && gens.empty(); ++a) {
    auto [all, p, k] = closure({a});
    if (all) gens = {a}, parent = p, genix = k;
  }
  for (int a = 1; a < n && gens.empty(); ++a)
    for (int b = a + 1; b < n && gens.empty(); ++b) {
      auto [all, p, k] = closure({a, b});
      if (all) gens = {a, b}, parent = p, genix = k;
    }
  for (int a = 1; a < n && gens.empty(); ++a)
    for (int b = a + 1; b < n && gens.empty(); ++b)
      for (int c = b + 1; c < n && gens.empty(); ++c) {
        auto [all, p, k] = closure({a, b, c});
        if (all) gens = {a, b, c}, parent = p, genix = k;
      }
  REQUIRE(!gens.empty());

  // Propagation order: elements sorted so parents precede children.
  std::vector<int> order;
  {
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    done[0] = true;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int x = 1; x < n; ++x)
        if (!done[static_cast<std::size_t>(x)] &&
            done[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])]) {
          order.push_back(x);
          done[static_cast<std::size_t>(x)] = true;
          progress = true;
        }
    }
  }

  std::set<std::vector<int>> out;
  std::vector<int> img(gens.size(), 0);
  while (true) {
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (int x : order)
      f[static_cast<std::size_t>(x)] =
          g->mul(f[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])],
                 img[static_cast<std::size_t>(genix[static_cast<std::size_t>(x)])]);
    if (is_hom_table(*g, *g, f)) out.insert(f);
    std::size_t i = img.size();
    while (i > 0 && img[i - 1] == n - 1) img[--i] = 0;
    if (i == 0) break;
    ++img[i - 1];
  }
  return out;
}

std::set<std::vector<int>> image_set(const std::vector<groups::GroupHom>& homs) {
  std::set<std::vector<int>> out;
  for (const auto& h : homs) out.insert(h.image);
  return out;
}

}  // namespace

TEST_CASE("endomorphisms of tiny groups match the exhaustive oracle") {
  for (const GroupPtr& g :
       {groups::build_cyclic(2), groups::build_cyclic(3),
        groups::build_cyclic(4), groups::build_elementary_abelian(2),
        groups::build_cyclic(6), groups::build_dihedral(6)}) {
    auto oracle = all_homs_exhaustive(g, g);
    auto got = image_set(endos::enumerate_endos(g));
    CHECK(got == oracle);
    // The word oracle must itself agree with the exhaustive one here.
    CHECK(all_endos_by_words(g) == oracle);
  }
  // Known counts as an extra anchor.
  CHECK(endos::enumerate_endos(groups::build_cyclic(6)).size() == 6);
  CHECK(endos::enumerate_endos(groups::build_elementary_abelian(2)).size() == 16);
  CHECK(endos::enumerate_endos(groups::build_dihedral(6)).size() == 10);
}

TEST_CASE("endomorphisms of the order-8 groups match the word oracle") {
  for (const GroupPtr& g : {groups::build_quaternion(8),
                            groups::build_dihedral(8),
                            groups::build_elementary_abelian(3)}) {
    CHECK(image_set(endos::enumerate_endos(g)) == all_endos_by_words(g));
  }
}

TEST_CASE("trivial and identity endomorphisms are always present") {
  for (const GroupPtr& g : {groups::build_quaternion(8),
                            groups::build_dihedral(12),
                            groups::build_cyclic(9)}) {
    auto set = image_set(endos::enumerate_endos(g));
    CHECK(set.count(std::vector<int>(static_cast<std::size_t>(g->order()), 0)));
    CHECK(set.count(groups::GroupHom::identity_on(g).image));
  }
}

TEST_CASE("endomorphisms are closed under composition") {
  GroupPtr g = groups::build_dihedral(8);
  auto endos_list = endos::enumerate_endos(g);
  auto set = image_set(endos_list);
  for (const auto& f : endos_list)
    for (const auto& h : endos_list) {
      std::vector<int> comp(f.image.size());
      for (std::size_t x = 0; x < comp.size(); ++x)
        comp[x] = f.image[static_cast<std::size_t>(h.image[x])];
      CHECK(set.count(comp) == 1);
    }
}

TEST_CASE("automorphisms form a group") {
  for (const GroupPtr& g : {groups::build_elementary_abelian(2),
                            groups::build_quaternion(8),
                            groups::build_dihedral(8)}) {
    auto autos = endos::enumerate_autos(g);
    auto set = image_set(autos);
    for (const auto& a : autos) {
      CHECK(a.is_bijective());
      // Inverse table lies in the set.
      std::vector<int> inv(a.image.size());
      for (std::size_t x = 0; x < a.image.size(); ++x)
        inv[static_cast<std::size_t>(a.image[x])] = static_cast<int>(x);
      CHECK(set.count(inv) == 1);
      for (const auto& b : autos) {
        std::vector<int> comp(a.image.size());
        for (std::size_t x = 0; x < comp.size(); ++x)
          comp[x] = a.image[static_cast<std::size_t>(b.image[x])];
        CHECK(set.count(comp) == 1);
      }
    }
  }
  CHECK(endos::enumerate_autos(groups::build_elementary_abelian(2)).size() == 6);
  CHECK(endos::enumerate_autos(groups::build_quaternion(8)).size() == 24);
  CHECK(endos::enumerate_autos(groups::build_dihedral(8)).size() == 8);
}

TEST_CASE("cross-group homomorphism counts") {
  GroupPtr c2 = groups::build_cyclic(2);
  GroupPtr c4 = groups::build_cyclic(4);
  GroupPtr c3 = groups::build_cyclic(3);
  CHECK(endos::enumerate_homs(c4, c2).size() == 2);
  CHECK(endos::enumerate_homs(c2, c4).size() == 2);
  CHECK(endos::enumerate_homs(c3, c4).size() == 1);  // only trivial
  CHECK(image_set(endos::enumerate_homs(c4, c4)) == all_homs_exhaustive(c4, c4));
}

TEST_CASE("parallel enumeration matches the sequential result") {
  GroupPtr g = groups::semidirect_product(
      groups::module_action(groups::ModuleKind::Y_C3));
  endos::EnumOptions seq, par;
  par.jobs = 4;
  auto a = endos::enumerate_endos(g, seq);
  auto b = endos::enumerate_endos(g, par);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].image == b[i].image);
}

TEST_CASE("order cap raises resource_limit_error") {
  endos::EnumOptions opts;
  opts.order_cap = 8;
  CHECK_THROWS_AS(endos::enumerate_endos(groups::build_dihedral(12), opts),
                  fuchs::resource_limit_error);
}

TEST_CASE("generating sets cover the group with consistent closure steps") {
  for (const GroupPtr& g : {groups::build_quaternion(8),
                            groups::build_dihedral(12),
                            groups::build_elementary_abelian(3)}) {
    auto gs = endos::find_generating_set(g);
    std::vector<bool> seen(static_cast<std::size_t>(g->order()), false);
    seen[0] = true;
    for (int x : gs.gens) seen[static_cast<std::size_t>(x)] = true;
    for (const auto& step : gs.closure_order) {
      CHECK(seen[static_cast<std::size_t>(step.parent)]);
      CHECK(step.element ==
            g->mul(step.parent, gs.gens[static_cast<std::size_t>(step.gen_index)]));
      seen[static_cast<std::size_t>(step.element)] = true;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("extend_hom rejects non-homomorphic generator images") {
  GroupPtr q8 = groups::build_quaternion(8);
  auto gs = endos::find_generating_set(q8);
  REQUIRE(gs.gens.size() == 2);
  // Sending both generators to a single order-4 element cannot be a hom
  // (their images would commute, forcing relations Q8 does not satisfy)
  // unless the images generate an abelian quotient; Q8/[Q8,Q8] = V4, so
  // mapping both generators to the same order-4 element fails.
  std::vector<int> bad{gs.gens[0], gs.gens[0]};
  // The identity images always extend.
  std::vector<int> good{gs.gens[0], gs.gens[1]};
  auto ext = endos::extend_hom(gs, q8, good);
  REQUIRE(ext.has_value());
  CHECK(ext->image == groups::GroupHom::identity_on(q8).image);
  CHECK_FALSE(endos::extend_hom(gs, q8, bad).has_value());
}
