// The group algebra F2[G]: ring axioms, augmentation, ideal closure audits,
// quotient canonicality, and unit detection against exhaustive oracles.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "fuchs/endos.hpp"
#include "fuchs/errors.hpp"
#include "fuchs/groupring.hpp"
#include "fuchs/groups.hpp"

using namespace fuchs;
using groupring::Ideal;
using groupring::QuotientRing;
using groupring::RingElem;
using groups::GroupPtr;

namespace {

RingElem random_elem(std::mt19937& rng, const GroupPtr& g) {
  RingElem u = RingElem::zero(g);
  for (int i = 0; i < g->order(); ++i)
    if (rng() & 1) u.coeffs.set(static_cast<std::size_t>(i));
  return u;
}

RingElem elem_from_mask(const GroupPtr& g, unsigned mask) {
  RingElem u = RingElem::zero(g);
  for (int i = 0; i < g->order(); ++i)
    if (mask >> i & 1u) u.coeffs.set(static_cast<std::size_t>(i));
  return u;
}

// Convolution computed the slow, obviously-correct way.
RingElem naive_mul(const RingElem& u, const RingElem& v) {
  const GroupPtr& g = u.group;
  std::vector<int> coeff(static_cast<std::size_t>(g->order()), 0);
  for (int s = 0; s < g->order(); ++s)
    for (int t = 0; t < g->order(); ++t)
      if (u.coeffs.get(static_cast<std::size_t>(s)) &&
          v.coeffs.get(static_cast<std::size_t>(t)))
        coeff[static_cast<std::size_t>(g->mul(s, t))] ^= 1;
  RingElem w = RingElem::zero(g);
  for (int i = 0; i < g->order(); ++i)
    if (coeff[static_cast<std::size_t>(i)]) w.coeffs.set(static_cast<std::size_t>(i));
  return w;
}

}  // namespace

TEST_CASE("ring_mul matches the naive convolution") {
  std::mt19937 rng(7);
  for (const GroupPtr& g : {groups::build_dihedral(8),
                            groups::semidirect_product(
                                groups::module_action(groups::ModuleKind::Y_C3)),
                            groups::build_cyclic(7)}) {
    for (int t = 0; t < 60; ++t) {
      RingElem u = random_elem(rng, g), v = random_elem(rng, g);
      CHECK(groupring::ring_mul(u, v) == naive_mul(u, v));
    }
  }
}

TEST_CASE("ring axioms, exhaustively over F2[C2]") {
  GroupPtr c2 = groups::build_cyclic(2);
  std::vector<RingElem> all;
  for (unsigned m = 0; m < 4; ++m) all.push_back(elem_from_mask(c2, m));
  RingElem one = RingElem::one(c2);
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(groupring::ring_add(a, b) == groupring::ring_add(b, a));
      CHECK(groupring::ring_mul(one, a) == a);
      CHECK(groupring::ring_mul(a, one) == a);
      for (const auto& c : all) {
        CHECK(groupring::ring_mul(groupring::ring_mul(a, b), c) ==
              groupring::ring_mul(a, groupring::ring_mul(b, c)));
        CHECK(groupring::ring_mul(a, groupring::ring_add(b, c)) ==
              groupring::ring_add(groupring::ring_mul(a, b),
                                  groupring::ring_mul(a, c)));
        CHECK(groupring::ring_mul(groupring::ring_add(a, b), c) ==
              groupring::ring_add(groupring::ring_mul(a, c),
                                  groupring::ring_mul(b, c)));
      }
    }
}

TEST_CASE("ring axioms, sampled over nonabelian group algebras") {
  std::mt19937 rng(8);
  for (const GroupPtr& g : {groups::build_dihedral(8),
                            groups::build_quaternion(8),
                            groups::build_dihedral(12)}) {
    RingElem one = RingElem::one(g);
    for (int t = 0; t < 120; ++t) {
      RingElem a = random_elem(rng, g), b = random_elem(rng, g),
               c = random_elem(rng, g);
      CHECK(groupring::ring_mul(groupring::ring_mul(a, b), c) ==
            groupring::ring_mul(a, groupring::ring_mul(b, c)));
      CHECK(groupring::ring_mul(a, groupring::ring_add(b, c)) ==
            groupring::ring_add(groupring::ring_mul(a, b),
                                groupring::ring_mul(a, c)));
      CHECK(groupring::ring_mul(groupring::ring_add(a, b), c) ==
            groupring::ring_add(groupring::ring_mul(a, c),
                                groupring::ring_mul(b, c)));
      CHECK(groupring::ring_mul(one, a) == a);
      CHECK(groupring::ring_mul(a, one) == a);
      CHECK(groupring::ring_add(a, a).coeffs.is_zero());
    }
    // Group elements are units of the algebra: g * g^{-1} = 1.
    for (int x = 0; x < g->order(); ++x)
      CHECK(groupring::ring_mul(RingElem::of_element(g, x),
                                RingElem::of_element(g, g->inv(x))) == one);
  }
}

TEST_CASE("augmentation is a ring map onto F2") {
  std::mt19937 rng(9);
  GroupPtr g = groups::build_dihedral(8);
  for (int t = 0; t < 500; ++t) {
    RingElem u = random_elem(rng, g), v = random_elem(rng, g);
    CHECK(groupring::augmentation(groupring::ring_add(u, v)) ==
          (groupring::augmentation(u) != groupring::augmentation(v)));
    CHECK(groupring::augmentation(groupring::ring_mul(u, v)) ==
          (groupring::augmentation(u) && groupring::augmentation(v)));
  }
  CHECK(groupring::augmentation(RingElem::one(g)));
  CHECK_FALSE(groupring::augmentation(RingElem::zero(g)));
}

TEST_CASE("the rotation-subgroup sum is idempotent and central") {
  for (int k : {3, 5, 7, 9}) {
    // sigma = sum over C_k: sigma^2 = k * sigma = sigma for odd k.
    GroupPtr ck = groups::build_cyclic(k);
    std::vector<int> all;
    for (int i = 0; i < k; ++i) all.push_back(i);
    RingElem sigma = RingElem::of_support(ck, all);
    CHECK(groupring::ring_mul(sigma, sigma) == sigma);

    // Inside F2[D_2k] the rotation subgroup is normal, so its sum is central.
    GroupPtr d = groups::build_dihedral(2 * k);
    std::vector<int> rot;
    for (int i = 0; i < k; ++i) rot.push_back(i);  // r^i sit at indices 0..k-1
    REQUIRE(d->element_order(1) == k);
    RingElem sd = RingElem::of_support(d, rot);
    CHECK(groupring::ring_mul(sd, sd) == sd);
    for (int x = 0; x < d->order(); ++x) {
      RingElem e = RingElem::of_element(d, x);
      CHECK(groupring::ring_mul(sd, e) == groupring::ring_mul(e, sd));
    }
  }
}

TEST_CASE("apply_hom is a ring homomorphism on the algebra") {
  std::mt19937 rng(10);
  GroupPtr g = groups::build_dihedral(8);
  auto endos_list = endos::enumerate_endos(g);
  REQUIRE(endos_list.size() > 2);
  for (const auto& phi : endos_list) {
    for (int t = 0; t < 20; ++t) {
      RingElem u = random_elem(rng, g), v = random_elem(rng, g);
      CHECK(groupring::apply_hom(phi, groupring::ring_add(u, v)) ==
            groupring::ring_add(groupring::apply_hom(phi, u),
                                groupring::apply_hom(phi, v)));
      CHECK(groupring::apply_hom(phi, groupring::ring_mul(u, v)) ==
            groupring::ring_mul(groupring::apply_hom(phi, u),
                                groupring::apply_hom(phi, v)));
    }
    CHECK(groupring::apply_hom(phi, RingElem::one(g)) == RingElem::one(g));
  }
}

TEST_CASE("element text forms round-trip") {
  GroupPtr q8 = groups::build_quaternion(8);
  RingElem u = RingElem::of_support(q8, {0, 1, 4, 5});
  CHECK(groupring::to_string(u) == "1+a+b+a*b");
  CHECK(groupring::parse_elem(q8, groupring::to_string(u)) == u);
  CHECK(groupring::parse_elem(q8, "{0,1,4,5}") == u);
  CHECK(groupring::parse_elem(q8, "{ 5, 4, 1, 0 }") == u);
  CHECK(groupring::to_string(RingElem::zero(q8)) == "0");
  CHECK_THROWS(groupring::parse_elem(q8, "1+nosuch"));
  CHECK_THROWS(groupring::parse_elem(q8, "{99}"));
}

TEST_CASE("ideal closure is two-sided and matches the full audit") {
  std::mt19937 rng(11);
  for (const GroupPtr& g :
       {groups::build_dihedral(8), groups::build_quaternion(8),
        groups::build_cyclic(6), groups::build_dihedral(12),
        groups::semidirect_product(groups::module_action(groups::ModuleKind::Q_C4)),
        groups::semidirect_product(groups::module_action(groups::ModuleKind::Y_C3))}) {
    for (int t = 0; t < 8; ++t) {
      std::vector<RingElem> gens;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) gens.push_back(random_elem(rng, g));
      Ideal fast = groupring::ideal_closure(g, gens);
      Ideal audited = groupring::ideal_closure(g, gens, /*full_audit=*/true);
      CHECK(fast.basis.rank() == audited.basis.rank());
      for (const auto& row : fast.basis.rows())
        CHECK(audited.basis.contains(row));
      CHECK(groupring::is_two_sided(fast));
      for (const auto& gen : gens) CHECK(fast.basis.contains(gen.coeffs));
    }
  }
}

TEST_CASE("the V4 four-term ideal has rank 1 and dimension 3") {
  GroupPtr v4 = groups::build_elementary_abelian(2);
  RingElem gen = RingElem::of_support(v4, {0, 1, 2, 3});
  QuotientRing q = groupring::quotient(groupring::ideal_closure(v4, {gen}));
  CHECK(q.ideal.basis.rank() == 1);
  CHECK(q.dim == 3);
  // (1 + a)(1 + b) = 1 + a + b + ab, the generator itself.
  RingElem lhs = groupring::ring_mul(
      groupring::ring_add(RingElem::one(v4), RingElem::of_element(v4, 1)),
      groupring::ring_add(RingElem::one(v4), RingElem::of_element(v4, 2)));
  CHECK(lhs == gen);
  CHECK(q.reduce(lhs).coeffs.is_zero());
}

TEST_CASE("quotient reduction is canonical and multiplication associative") {
  std::mt19937 rng(12);
  GroupPtr g = groups::semidirect_product(
      groups::module_action(groups::ModuleKind::Y_C3));
  // A nontrivial proper ideal.
  RingElem gen = RingElem::of_support(g, {0, 6, 1, g->mul(6, 1)});
  QuotientRing q = groupring::quotient(groupring::ideal_closure(g, {gen}));
  REQUIRE(q.dim > 0);
  REQUIRE(q.dim < static_cast<std::size_t>(g->order()));
  for (int t = 0; t < 300; ++t) {
    RingElem a = random_elem(rng, g), b = random_elem(rng, g),
             c = random_elem(rng, g);
    CHECK(q.reduce(q.reduce(a)) == q.reduce(a));
    CHECK(q.reduce(groupring::ring_add(a, gen)) == q.reduce(a));
    CHECK(q.mul(q.mul(a, b), c) == q.mul(a, q.mul(b, c)));
    CHECK(q.mul(a, RingElem::one(g)) == q.reduce(a));
  }
  // Canonical representatives have support only on free columns.
  for (int t = 0; t < 50; ++t) {
    RingElem r = q.reduce(random_elem(rng, g));
    for (std::size_t s : r.coeffs.support())
      CHECK(std::find(q.free_cols.begin(), q.free_cols.end(), s) !=
            q.free_cols.end());
  }
}

TEST_CASE("is_unit agrees with the exhaustive inverse search") {
  // Quotients of dimension <= 6: scan every canonical representative and
  // compare against a brute-force search for a two-sided inverse.
  struct Case {
    GroupPtr g;
    std::vector<RingElem> gens;
  };
  GroupPtr c6 = groups::build_cyclic(6);
  GroupPtr v4 = groups::build_elementary_abelian(2);
  GroupPtr a4 = groups::semidirect_product(
      groups::module_action(groups::ModuleKind::Y_C3));
  std::vector<Case> cases;
  cases.push_back({c6, {}});  // the full algebra F2[C6]
  cases.push_back({v4, {RingElem::of_support(v4, {0, 1, 2, 3})}});
  cases.push_back({a4,
                   {RingElem::of_support(a4, {0, 6, 1, a4->mul(6, 1)}),
                    RingElem::of_support(a4, {0, 9, 1, a4->mul(9, 1)})}});
  for (auto& [g, gens] : cases) {
    QuotientRing q = groupring::quotient(groupring::ideal_closure(g, gens));
    REQUIRE(q.dim <= 6);
    std::vector<RingElem> reps;
    for (unsigned m = 0; m < (1u << q.dim); ++m) {
      RingElem u = RingElem::zero(g);
      for (std::size_t i = 0; i < q.dim; ++i)
        if (m >> i & 1u) u.coeffs.set(q.free_cols[i]);
      reps.push_back(std::move(u));
    }
    RingElem one = q.reduce(RingElem::one(g));
    int units_seen = 0;
    for (const auto& u : reps) {
      std::optional<RingElem> oracle_inv;
      for (const auto& v : reps)
        if (q.mul(u, v) == one && q.mul(v, u) == one) {
          oracle_inv = v;
          break;
        }
      auto got = groupring::is_unit(q, u);
      CHECK(got.has_value() == oracle_inv.has_value());
      if (got) {
        ++units_seen;
        CHECK(q.mul(u, *got) == one);
        CHECK(q.mul(*got, u) == one);
        CHECK(q.reduce(*got) == *got);  // the witness is canonical
      }
    }
    CHECK(units_seen > 0);
  }
}

TEST_CASE("full-algebra units of a 2-group are exactly augmentation 1") {
  GroupPtr d8 = groups::build_dihedral(8);
  for (unsigned m = 0; m < 256; ++m) {
    RingElem u = elem_from_mask(d8, m);
    CHECK(groupring::is_unit_full_algebra(u) == groupring::augmentation(u));
  }
}

TEST_CASE("full-algebra units of F2[C6] match the exhaustive inverse search") {
  GroupPtr c6 = groups::build_cyclic(6);
  QuotientRing q = groupring::quotient(groupring::ideal_closure(c6, {}));
  for (unsigned m = 0; m < 64; ++m) {
    RingElem u = elem_from_mask(c6, m);
    CHECK(groupring::is_unit_full_algebra(u) ==
          groupring::is_unit(q, u).has_value());
  }
}

TEST_CASE("unit detection through the index-3 quotient") {
  GroupPtr a4 = groups::semidirect_product(
      groups::module_action(groups::ModuleKind::Y_C3));
  std::vector<int> h{0, 3, 6, 9};  // the normal V4 inside A4
  for (unsigned m = 0; m < 4096; ++m) {
    RingElem u = elem_from_mask(a4, m);
    CHECK(groupring::is_unit_via_sylow3_quotient(a4, h, u) ==
          groupring::is_unit_full_algebra(u));
  }
  // Rejects subgroups that are not normal 2-subgroups of index 3.
  CHECK_THROWS(groupring::is_unit_via_sylow3_quotient(
      a4, {0, 1}, RingElem::one(a4)));
}

TEST_CASE("unit_group enumerates exactly the units") {
  GroupPtr c3 = groups::build_cyclic(3);
  QuotientRing q3 = groupring::quotient(groupring::ideal_closure(c3, {}));
  auto units3 = groupring::unit_group(q3);
  CHECK(units3.size() == 3);  // F2[C3] = F2 x F4: unit group of order 3
  for (const auto& u : units3) CHECK(groupring::is_unit(q3, u).has_value());

  GroupPtr v4 = groups::build_elementary_abelian(2);
  QuotientRing qv = groupring::quotient(
      groupring::ideal_closure(v4, {RingElem::of_support(v4, {0, 1, 2, 3})}));
  auto unitsv = groupring::unit_group(qv);
  CHECK(unitsv.size() == 4);
  for (int x = 0; x < 4; ++x) {
    RingElem img = qv.reduce(RingElem::of_element(v4, x));
    CHECK(std::find(unitsv.begin(), unitsv.end(), img) != unitsv.end());
  }

  // Parallel scan agrees with the sequential one.
  auto unitsv_par = groupring::unit_group(qv, 22, 3);
  CHECK(unitsv == unitsv_par);

  // Dimension cap.
  GroupPtr d8 = groups::build_dihedral(8);
  QuotientRing qd = groupring::quotient(groupring::ideal_closure(d8, {}));
  CHECK_THROWS_AS(groupring::unit_group(qd, 4), fuchs::resource_limit_error);
}

TEST_CASE("embedding collisions") {
  GroupPtr c2 = groups::build_cyclic(2);
  Ideal aug = groupring::ideal_closure(c2, {RingElem::of_support(c2, {0, 1})});
  auto col = groupring::embedding_collision(aug);
  REQUIRE(col.has_value());
  CHECK(col->first != col->second);
  CHECK_FALSE(groupring::embeds(aug));

  GroupPtr v4 = groups::build_elementary_abelian(2);
  Ideal good = groupring::ideal_closure(v4, {RingElem::of_support(v4, {0, 1, 2, 3})});
  CHECK(groupring::embeds(good));
}
