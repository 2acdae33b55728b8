#include "fuchs/engine.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "fuchs/errors.hpp"

namespace fuchs::engine {

using groupring::Ideal;
using groupring::QuotientRing;
using groupring::RingElem;
using groups::GroupPtr;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FULLY_REALIZES: return "FULLY_REALIZES";
    case Verdict::REALIZES_NOT_INVARIANT: return "REALIZES_NOT_INVARIANT";
    case Verdict::NOT_REALIZED: return "NOT_REALIZED";
    case Verdict::NOT_EMBEDDED: return "NOT_EMBEDDED";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::FULLY_REALIZES, Verdict::REALIZES_NOT_INVARIANT,
                    Verdict::NOT_REALIZED, Verdict::NOT_EMBEDDED})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::string to_string(LeafReason r) {
  switch (r) {
    case LeafReason::EMBED_FAIL: return "EMBED_FAIL";
    case LeafReason::UNITS_EXCEED: return "UNITS_EXCEED";
    case LeafReason::INVARIANCE_FAIL: return "INVARIANCE_FAIL";
    case LeafReason::DEPTH_EXHAUSTED: return "DEPTH_EXHAUSTED";
  }
  return "?";
}

bool check_invariance(const Ideal& ideal,
                      const std::vector<groups::GroupHom>& endos,
                      std::optional<InvarianceViolation>* witness) {
  for (const auto& phi : endos)
    for (const auto& gen : ideal.generators) {
      RingElem img = groupring::apply_hom(phi, gen);
      if (!ideal.basis.contains(img.coeffs)) {
        if (witness) *witness = InvarianceViolation{phi, gen, std::move(img)};
        return false;
      }
    }
  return true;
}

namespace {

bool vec_less(const gf2::Vec& a, const gf2::Vec& b) {
  const auto& la = a.limbs();
  const auto& lb = b.limbs();
  for (std::size_t i = la.size(); i-- > 0;)
    if (la[i] != lb[i]) return la[i] < lb[i];
  return false;
}

// Deduplicate and drop zero elements, preserving first-seen order.
std::vector<RingElem> dedup(std::vector<RingElem> gens) {
  std::vector<RingElem> out;
  std::set<std::vector<std::size_t>> seen;
  for (auto& g : gens) {
    if (g.coeffs.is_zero()) continue;
    if (seen.insert(g.coeffs.support()).second) out.push_back(std::move(g));
  }
  return out;
}

RingElem four_term(const GroupPtr& g, int s, int t) {
  // 1 + s + t + st, with coincidences cancelling over F2.
  RingElem e = RingElem::zero(g);
  e.coeffs.flip(0);
  e.coeffs.flip(static_cast<std::size_t>(s));
  e.coeffs.flip(static_cast<std::size_t>(t));
  e.coeffs.flip(static_cast<std::size_t>(g->mul(s, t)));
  return e;
}

}  // namespace

Certificate check_full(const GroupPtr& g, std::vector<RingElem> gens,
                       const CheckOptions& opts) {
  Certificate cert;
  cert.group_fingerprint = g->fingerprint();
  Ideal ideal = groupring::ideal_closure(g, std::move(gens));
  cert.ideal_generators = ideal.generators;
  cert.collision = groupring::embedding_collision(ideal);
  cert.embeds = !cert.collision;
  QuotientRing q = groupring::quotient(std::move(ideal));
  cert.quotient_dim = q.dim;

  auto units = groupring::unit_group(q, opts.cap_dim, opts.jobs);
  cert.unit_count = units.size();
  for (const auto& u : units) {
    auto inv = groupring::is_unit(q, u);
    cert.unit_inverses.emplace_back(u, std::move(*inv));
  }

  // Compare the unit set with the image of G element-by-element.
  std::vector<gf2::Vec> reps;
  for (int x = 0; x < g->order(); ++x)
    reps.push_back(q.reduce(RingElem::of_element(g, x)).coeffs);
  std::sort(reps.begin(), reps.end(), vec_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  cert.units_are_group = true;
  for (const auto& u : units)
    if (!std::binary_search(reps.begin(), reps.end(), u.coeffs, vec_less)) {
      cert.units_are_group = false;
      cert.interloper = u;
      break;
    }
  if (units.size() != reps.size()) cert.units_are_group = false;

  auto endos = endos::enumerate_endos(
      g, endos::EnumOptions{opts.endo_order_cap, opts.jobs});
  cert.invariant = check_invariance(q.ideal, endos, &cert.violation);

  if (!cert.embeds)
    cert.verdict = Verdict::NOT_EMBEDDED;
  else if (!cert.units_are_group ||
           cert.unit_count != static_cast<std::size_t>(g->order()))
    cert.verdict = Verdict::NOT_REALIZED;
  else if (!cert.invariant)
    cert.verdict = Verdict::REALIZES_NOT_INVARIANT;
  else
    cert.verdict = Verdict::FULLY_REALIZES;
  return cert;
}

std::vector<RingElem> centralizer_ideal(const GroupPtr& g,
                                        const std::vector<int>& v) {
  // <V> must be abelian.
  std::vector<int> closure{groups::GroupTable::identity};
  std::vector<bool> in(static_cast<std::size_t>(g->order()), false);
  in[0] = true;
  for (int x : v)
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = true;
      closure.push_back(x);
    }
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (int x : v) {
      int e = g->mul(closure[i], x);
      if (!in[static_cast<std::size_t>(e)]) {
        in[static_cast<std::size_t>(e)] = true;
        closure.push_back(e);
      }
    }
  for (int a : closure)
    for (int b : closure)
      if (g->mul(a, b) != g->mul(b, a))
        throw dimension_error("centralizer_ideal: <V> is not abelian");

  std::vector<RingElem> gens;
  for (int s : g->centralizer(v))
    for (int t = 0; t < g->order(); ++t) gens.push_back(four_term(g, s, t));
  return dedup(std::move(gens));
}

std::vector<RingElem> elementary_abelian_ideal(const GroupPtr& g) {
  if (g->exponent() > 2)
    throw dimension_error("elementary_abelian_ideal: exponent must divide 2");
  std::vector<RingElem> gens;
  for (int x = 1; x < g->order(); ++x)
    for (int y = x + 1; y < g->order(); ++y) gens.push_back(four_term(g, x, y));
  return dedup(std::move(gens));
}

std::vector<RingElem> sdp_c3_ideal(const GroupPtr& g,
                                   const groups::GroupAction& act,
                                   const std::vector<unsigned>& basis_masks) {
  const int nb = act.actor->order();
  if (g->order() != act.target->order() * nb)
    throw dimension_error("sdp_c3_ideal: group does not match the action");
  const int c = 1;  // (identity of A, generator of C3)
  std::vector<RingElem> gens;
  for (unsigned m : basis_masks)
    gens.push_back(four_term(g, static_cast<int>(m) * nb, c));
  return dedup(std::move(gens));
}

std::vector<RingElem> sdp_c4_ideal(const GroupPtr& g,
                                   const groups::GroupAction& act,
                                   const std::vector<unsigned>& basis_masks) {
  const int nb = act.actor->order();
  if (nb != 4 || g->order() != act.target->order() * nb)
    throw dimension_error("sdp_c4_ideal: group does not match a C4 action");
  const int x = 1;
  std::vector<RingElem> gens;
  for (unsigned m : basis_masks)
    gens.push_back(four_term(g, static_cast<int>(m) * nb, x));
  for (std::size_t i = 0; i < basis_masks.size(); ++i)
    for (std::size_t j = i + 1; j < basis_masks.size(); ++j)
      gens.push_back(four_term(g, static_cast<int>(basis_masks[i]) * nb,
                               static_cast<int>(basis_masks[j]) * nb));
  gens.push_back(RingElem::of_support(g, {0, 1, 2, 3}));  // 1 + x + x^2 + x^3
  return dedup(std::move(gens));
}

std::vector<RingElem> c6_ideal(const GroupPtr& g,
                               const groups::GroupAction& act) {
  const int nb = act.actor->order();
  const int na = act.target->order();
  if (nb != 6 || g->order() != na * nb)
    throw dimension_error("c6_ideal: group does not match a C6 action");
  // V = A x| <x^3>, W = A x| <x^2> under the encoding (a, e) -> a*6 + e.
  std::vector<int> vs, ws;
  for (int a = 0; a < na; ++a) {
    vs.push_back(a * 6);
    vs.push_back(a * 6 + 3);
    ws.push_back(a * 6);
    ws.push_back(a * 6 + 2);
    ws.push_back(a * 6 + 4);
  }
  std::vector<RingElem> gens;
  for (int eps : {0, 1}) {
    int z = 3 * eps;  // x^(3*eps)
    for (int v : vs) {
      int vz = g->mul(g->mul(z, v), g->inv(z));  // v conjugated by x^(3*eps)
      for (int w : ws) {
        int t = g->mul(w, z);  // w x^(3*eps)
        RingElem e = RingElem::zero(g);
        e.coeffs.flip(0);
        e.coeffs.flip(static_cast<std::size_t>(v));
        e.coeffs.flip(static_cast<std::size_t>(t));
        e.coeffs.flip(static_cast<std::size_t>(g->mul(vz, t)));
        gens.push_back(std::move(e));
      }
    }
  }
  return dedup(std::move(gens));
}

std::vector<RingElem> product_ideal(const GroupPtr& gh, const GroupPtr& g,
                                    const GroupPtr& h,
                                    const std::vector<RingElem>& j_gens) {
  const int nh = h->order();
  if (gh->order() != g->order() * nh)
    throw dimension_error("product_ideal: product group order mismatch");
  std::vector<RingElem> gens;
  for (const auto& j : j_gens) {
    RingElem lifted = RingElem::zero(gh);
    for (std::size_t s : j.coeffs.support())
      lifted.coeffs.flip(s * static_cast<std::size_t>(nh));
    gens.push_back(std::move(lifted));
  }
  for (int u = 0; u < nh; ++u)
    for (int v = u; v < nh; ++v) {
      if (h->element_order(u) == 4 && h->element_order(v) == 4) continue;
      RingElem e = RingElem::zero(gh);
      e.coeffs.flip(0);
      e.coeffs.flip(static_cast<std::size_t>(u));
      e.coeffs.flip(static_cast<std::size_t>(v));
      e.coeffs.flip(static_cast<std::size_t>(h->mul(u, v)));
      gens.push_back(std::move(e));
    }
  for (int x = 0; x < g->order(); ++x)
    for (int y = 0; y < nh; ++y)
      gens.push_back(four_term(gh, x * nh, y));
  return dedup(std::move(gens));
}

bool RefutationTree::is_proof() const {
  for (const auto& b : branches) {
    if (b.leaf && *b.leaf == LeafReason::DEPTH_EXHAUSTED) return false;
    if (b.child && !b.child->is_proof()) return false;
  }
  return true;
}

std::vector<RingElem> default_refutation_seeds(const GroupPtr& g) {
  std::vector<RingElem> seeds;
  for (int x = 1; x < g->order(); ++x)
    for (int y = x + 1; y < g->order(); ++y) {
      RingElem w = RingElem::of_support(g, {0, x, y});
      if (groupring::is_unit_full_algebra(w)) seeds.push_back(std::move(w));
    }
  return seeds;
}

namespace {

// Smallest End(G)-invariant two-sided ideal containing the generators:
// ideal closure interleaved with every endomorphism's linear extension.
gf2::Basis invariant_closure(const GroupPtr& g, const std::vector<int>& mults,
                             const std::vector<groups::GroupHom>& endos,
                             const std::vector<gf2::Vec>& gens) {
  const std::size_t n = static_cast<std::size_t>(g->order());
  gf2::Basis basis(n);
  std::vector<gf2::Vec> worklist;
  for (const auto& w : gens)
    if (basis.insert(w)) worklist.push_back(w);
  auto push = [&](gf2::Vec v) {
    if (basis.insert(v)) worklist.push_back(std::move(v));
  };
  while (!worklist.empty()) {
    gf2::Vec w = std::move(worklist.back());
    worklist.pop_back();
    for (int m : mults) {
      gf2::Vec l(n), r(n);
      for (std::size_t s : w.support()) {
        l.flip(static_cast<std::size_t>(g->mul(m, static_cast<int>(s))));
        r.flip(static_cast<std::size_t>(g->mul(static_cast<int>(s), m)));
      }
      push(std::move(l));
      push(std::move(r));
    }
    for (const auto& phi : endos) {
      gf2::Vec img(n);
      for (std::size_t s : w.support())
        img.flip(static_cast<std::size_t>(phi(static_cast<int>(s))));
      push(std::move(img));
    }
  }
  return basis;
}

std::optional<std::pair<int, int>> basis_collision(const GroupPtr& g,
                                                   const gf2::Basis& basis) {
  std::vector<std::pair<gf2::Vec, int>> reps;
  for (int x = 0; x < g->order(); ++x) {
    gf2::Vec e(static_cast<std::size_t>(g->order()));
    e.set(static_cast<std::size_t>(x));
    reps.emplace_back(basis.reduce(std::move(e)), x);
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return vec_less(a.first, b.first);
  });
  for (std::size_t i = 1; i < reps.size(); ++i)
    if (reps[i - 1].first == reps[i].first)
      return std::make_pair(reps[i - 1].second, reps[i].second);
  return std::nullopt;
}

struct RefutationContext {
  GroupPtr g;
  std::vector<RingElem> seeds;
  std::vector<int> mults;
  std::vector<groups::GroupHom> endos;
};

// Leaf status of every branch "w + x in I" of one seed w over the
// accumulated hypotheses. Returns the number of open (non-leaf) branches;
// aborts early (returning abort_above + 1) once that bound is exceeded.
int evaluate_seed(const RefutationContext& ctx, const std::vector<gf2::Vec>& acc,
                  const RingElem& w, int abort_above,
                  std::vector<std::optional<LeafReason>>* out) {
  const GroupPtr& g = ctx.g;
  if (out) out->assign(static_cast<std::size_t>(g->order()), std::nullopt);
  int open = 0;
  for (int x = 0; x < g->order(); ++x) {
    std::vector<gf2::Vec> gens = acc;
    gf2::Vec hyp = w.coeffs;
    hyp.flip(static_cast<std::size_t>(x));
    gens.push_back(std::move(hyp));
    std::optional<LeafReason> leaf;
    gf2::Basis plain = invariant_closure(g, ctx.mults, {}, gens);
    if (basis_collision(g, plain)) {
      leaf = LeafReason::EMBED_FAIL;
    } else {
      gf2::Basis inv = invariant_closure(g, ctx.mults, ctx.endos, gens);
      if (basis_collision(g, inv)) leaf = LeafReason::INVARIANCE_FAIL;
    }
    if (out) (*out)[static_cast<std::size_t>(x)] = leaf;
    if (!leaf && ++open > abort_above && !out) return open;
  }
  return open;
}

RefutationTree explore(const RefutationContext& ctx,
                       const std::vector<gf2::Vec>& acc,
                       const std::vector<std::size_t>& remaining,
                       int depth_left) {
  const GroupPtr& g = ctx.g;
  // Branch on the remaining seed with the fewest open hypotheses; a seed
  // whose every branch already fails closes this node outright.
  std::size_t best = remaining[0];
  int best_open = g->order() + 1;
  for (std::size_t idx : remaining) {
    int open = evaluate_seed(ctx, acc, ctx.seeds[idx], best_open - 1, nullptr);
    if (open < best_open) {
      best_open = open;
      best = idx;
      if (open == 0) break;
    }
  }

  std::vector<std::optional<LeafReason>> leaves;
  evaluate_seed(ctx, acc, ctx.seeds[best], g->order(), &leaves);

  std::vector<std::size_t> rest;
  for (std::size_t idx : remaining)
    if (idx != best) rest.push_back(idx);

  RefutationTree tree;
  tree.root_unit = ctx.seeds[best];
  for (int x = 0; x < g->order(); ++x) {
    RefutationTree::Branch branch;
    branch.g = x;
    branch.leaf = leaves[static_cast<std::size_t>(x)];
    if (!branch.leaf) {
      if (depth_left > 1 && !rest.empty()) {
        std::vector<gf2::Vec> gens = acc;
        gf2::Vec hyp = ctx.seeds[best].coeffs;
        hyp.flip(static_cast<std::size_t>(x));
        gens.push_back(std::move(hyp));
        branch.child = std::make_unique<RefutationTree>(
            explore(ctx, gens, rest, depth_left - 1));
      } else {
        branch.leaf = LeafReason::DEPTH_EXHAUSTED;
      }
    }
    tree.branches.push_back(std::move(branch));
  }
  return tree;
}

}  // namespace

std::optional<RefutationTree> refute_full(const GroupPtr& g,
                                          std::vector<RingElem> seeds,
                                          int max_depth,
                                          const CheckOptions& opts) {
  if (max_depth < 1) throw dimension_error("refute_full: max_depth >= 1");
  for (const auto& s : seeds)
    if (!groupring::is_unit_full_algebra(s))
      throw dimension_error("refute_full: seed " + groupring::to_string(s) +
                            " is not a unit of the full group algebra");
  if (seeds.empty()) return std::nullopt;

  RefutationContext ctx;
  ctx.g = g;
  ctx.seeds = std::move(seeds);
  ctx.mults = endos::find_generating_set(g).gens;
  if (ctx.mults.empty()) ctx.mults.push_back(groups::GroupTable::identity);
  ctx.endos = endos::enumerate_endos(
      g, endos::EnumOptions{opts.endo_order_cap, opts.jobs});

  std::vector<std::size_t> remaining(ctx.seeds.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  RefutationTree tree = explore(ctx, {}, remaining, max_depth);
  if (!tree.is_proof()) return std::nullopt;
  return tree;
}

std::optional<int> self_centralizing_witness(const GroupPtr& g,
                                             int min_order) {
  for (int x = 0; x < g->order(); ++x) {
    if (g->element_order(x) < min_order) continue;
    std::array<int, 1> s{x};
    if (g->centralizer(s) == g->cyclic_subgroup(x)) return x;
  }
  return std::nullopt;
}

namespace {

// Copy src into dst with its top-left corner at (r0, c0).
void place(gf2::Matrix& dst, const gf2::Matrix& src, std::size_t r0,
           std::size_t c0) {
  for (std::size_t i = 0; i < src.n_rows(); ++i)
    for (std::size_t j = 0; j < src.n_cols(); ++j)
      if (src.get(i, j)) dst.set(r0 + i, c0 + j);
}

}  // namespace

MatrixDecomposition verify_matrix_decomposition(int n) {
  if (n < 3) throw dimension_error("verify_matrix_decomposition: n >= 3");
  const std::size_t nn = static_cast<std::size_t>(n);
  gf2::Matrix a(nn, nn), b(nn, nn);
  if (n % 2 == 1) {
    const std::size_t r = static_cast<std::size_t>((n - 3) / 2);
    gf2::Matrix u = gf2::Matrix::from_rows({{0, 1, 1}, {0, 0, 1}, {1, 0, 0}});
    gf2::Matrix v = gf2::Matrix::from_rows({{1, 1, 1}, {0, 1, 1}, {1, 0, 1}});
    gf2::Matrix ir = gf2::Matrix::identity(r);
    place(a, ir, 0, 0);
    place(a, ir, 0, r);
    place(a, ir, r, 0);
    place(a, u, 2 * r, 2 * r);
    place(b, ir, 0, r);
    place(b, ir, r, 0);
    place(b, ir, r, r);
    place(b, v, 2 * r, 2 * r);
  } else {
    const std::size_t r = static_cast<std::size_t>((n - 4) / 2);
    gf2::Matrix t = gf2::Matrix::from_rows(
        {{0, 0, 1, 1}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 1, 0}});
    gf2::Matrix s = t + gf2::Matrix::identity(4);
    gf2::Matrix ir = gf2::Matrix::identity(r);
    place(a, ir, 0, 0);
    place(a, ir, 0, r);
    place(a, ir, r, 0);
    place(a, s, 2 * r, 2 * r);
    place(b, ir, 0, r);
    place(b, ir, r, 0);
    place(b, ir, r, r);
    place(b, t, 2 * r, 2 * r);
  }
  MatrixDecomposition d{a, b};
  d.sum_is_identity = (a + b) == gf2::Matrix::identity(nn);
  d.a_invertible = a.rank() == nn;
  d.b_invertible = b.rank() == nn;
  d.product_not_identity = !((a * b) == gf2::Matrix::identity(nn));
  return d;
}

// ---- catalog ---------------------------------------------------------------

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "V4",       "A4",           "Q8_ALL_U",       "SG_16_3",
      "SG_32_6_REFUTE",           "SG_64_32_WITNESS", "SG_96_70",
      "C2xC6",    "C2xA4",        "C4sdpC4",        "MATRIX_N3_N10",
      "D8_REFUTE"};
  return names;
}

namespace {

CaseResult expect_verdict(const std::string& name, Certificate cert,
                          Verdict expected) {
  CaseResult r;
  r.name = name;
  r.expected = to_string(expected);
  r.observed = to_string(cert.verdict);
  r.pass = cert.verdict == expected;
  r.certificate = std::move(cert);
  return r;
}

GroupPtr build_c4_sdp_c4() {
  GroupPtr c4 = groups::build_cyclic(4);
  // x acts on <y> = C4 by inversion.
  std::vector<int> id{0, 1, 2, 3}, invm{0, 3, 2, 1};
  return groups::semidirect_product(
      groups::GroupAction::make(c4, c4, {id, invm, id, invm}));
}

}  // namespace

CaseResult run_catalog_case(const std::string& name, const CheckOptions& opts) {
  if (name == "V4") {
    GroupPtr g = groups::build_elementary_abelian(2);
    return expect_verdict(name, check_full(g, elementary_abelian_ideal(g), opts),
                          Verdict::FULLY_REALIZES);
  }
  if (name == "A4") {
    groups::GroupAction act = groups::module_action(groups::ModuleKind::Y_C3);
    GroupPtr g = groups::semidirect_product(act);
    // basis {u, u^c}: u = a, u^c = ab
    return expect_verdict(name,
                          check_full(g, sdp_c3_ideal(g, act, {2u, 3u}), opts),
                          Verdict::FULLY_REALIZES);
  }
  if (name == "Q8_ALL_U") {
    GroupPtr g = groups::build_quaternion(8);
    const int x = 1, y = 4, xy = g->mul(1, 4);
    CaseResult r;
    r.name = name;
    r.expected = "all 8 choices of u non-FULLY; u=xy REALIZES_NOT_INVARIANT";
    r.pass = true;
    std::ostringstream obs;
    for (int u = 0; u < 8; ++u) {
      RingElem gen = RingElem::of_support(g, {0, x, y});
      gen.coeffs.flip(static_cast<std::size_t>(u));
      Certificate cert = check_full(g, {gen}, opts);
      if (cert.verdict == Verdict::FULLY_REALIZES) r.pass = false;
      Verdict want =
          u == xy ? Verdict::REALIZES_NOT_INVARIANT : cert.verdict;
      if (u == xy) {
        if (cert.verdict != want) r.pass = false;
        r.certificate = cert;
      }
      obs << g->label(u) << ":" << to_string(cert.verdict)
          << (u + 1 < 8 ? " " : "");
    }
    r.observed = obs.str();
    return r;
  }
  if (name == "SG_16_3") {
    groups::GroupAction act = groups::module_action(groups::ModuleKind::Q_C4);
    GroupPtr g = groups::semidirect_product(act);
    return expect_verdict(name, check_full(g, sdp_c4_ideal(g, act, {2u}), opts),
                          Verdict::FULLY_REALIZES);
  }
  if (name == "SG_32_6_REFUTE") {
    groups::GroupAction act = groups::module_action(groups::ModuleKind::U_C4);
    GroupPtr g = groups::semidirect_product(act);
    auto proof = refute_full(g, default_refutation_seeds(g), 2, opts);
    CaseResult r;
    r.name = name;
    r.expected = "non-full-realizability proof";
    r.observed = proof ? "proof" : "inconclusive";
    r.pass = proof.has_value();
    return r;
  }
  if (name == "SG_64_32_WITNESS") {
    groups::GroupAction act = groups::module_action(groups::ModuleKind::S_C4);
    GroupPtr g = groups::semidirect_product(act);
    auto w = self_centralizing_witness(g, 8);
    CaseResult r;
    r.name = name;
    r.expected = "self-centralizing element of order >= 8";
    // The witness only triggers the external non-realizability criterion;
    // the cited implication itself is not re-proved here.
    r.observed = w ? ("witness " + g->label(*w) + " of order " +
                      std::to_string(g->element_order(*w)))
                   : "absent";
    r.pass = w.has_value();
    return r;
  }
  if (name == "SG_96_70") {
    groups::GroupAction act = groups::module_action(groups::ModuleKind::YQ_C6);
    GroupPtr g = groups::semidirect_product(act);
    return expect_verdict(name, check_full(g, c6_ideal(g, act), opts),
                          Verdict::FULLY_REALIZES);
  }
  if (name == "C2xC6") {
    const unsigned img[] = {1u};  // trivial action on C2
    groups::GroupAction act =
        groups::linear_action(groups::build_cyclic(6), 1, img);
    GroupPtr g = groups::semidirect_product(act);
    return expect_verdict(name, check_full(g, c6_ideal(g, act), opts),
                          Verdict::FULLY_REALIZES);
  }
  if (name == "C2xA4") {
    const unsigned img[] = {3u, 2u};  // x acts with order 3: a -> ab, b -> a
    groups::GroupAction act =
        groups::linear_action(groups::build_cyclic(6), 2, img);
    GroupPtr g = groups::semidirect_product(act);
    return expect_verdict(name, check_full(g, c6_ideal(g, act), opts),
                          Verdict::FULLY_REALIZES);
  }
  if (name == "C4sdpC4") {
    GroupPtr g = build_c4_sdp_c4();
    auto proof = refute_full(g, default_refutation_seeds(g), 2, opts);
    CaseResult r;
    r.name = name;
    r.expected = "non-full-realizability proof";
    r.observed = proof ? "proof" : "inconclusive";
    r.pass = proof.has_value();
    return r;
  }
  if (name == "MATRIX_N3_N10") {
    CaseResult r;
    r.name = name;
    r.expected = "decomposition valid for n = 3..10";
    r.pass = true;
    std::ostringstream obs;
    for (int n = 3; n <= 10; ++n) {
      bool ok = verify_matrix_decomposition(n).ok();
      if (!ok) r.pass = false;
      obs << n << ":" << (ok ? "ok" : "FAIL") << (n < 10 ? " " : "");
    }
    r.observed = obs.str();
    return r;
  }
  if (name == "D8_REFUTE") {
    GroupPtr g = groups::build_dihedral(8);
    auto proof = refute_full(g, default_refutation_seeds(g), 2, opts);
    CaseResult r;
    r.name = name;
    r.expected = "non-full-realizability proof";
    r.observed = proof ? "proof" : "inconclusive";
    r.pass = proof.has_value();
    return r;
  }
  std::ostringstream os;
  os << "unknown case '" << name << "'; valid cases:";
  for (const auto& n : catalog_names()) os << " " << n;
  throw dimension_error(os.str());
}

// ---- serialization ---------------------------------------------------------

namespace {

nlohmann::json support_json(const RingElem& e) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t s : e.coeffs.support()) a.push_back(s);
  return a;
}

RingElem elem_from_support(const GroupPtr& g, const nlohmann::json& a) {
  RingElem e = RingElem::zero(g);
  for (const auto& s : a) e.coeffs.flip(s.get<std::size_t>());
  return e;
}

nlohmann::json fingerprint_json(const groups::Fingerprint& fp) {
  nlohmann::json hist = nlohmann::json::array();
  for (auto [o, c] : fp.order_histogram) hist.push_back({o, c});
  return {{"order", fp.order},
          {"abelian", fp.abelian},
          {"center_size", fp.center_size},
          {"exponent", fp.exponent},
          {"order_histogram", hist}};
}

}  // namespace

nlohmann::json to_json(const Certificate& cert, const GroupPtr& g) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["type"] = "certificate";
  doc["group"] = fingerprint_json(cert.group_fingerprint);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& e : cert.ideal_generators) gens.push_back(support_json(e));
  doc["ideal_generators"] = gens;
  doc["quotient_dim"] = cert.quotient_dim;
  doc["embeds"] = cert.embeds;
  if (cert.collision)
    doc["collision"] = {cert.collision->first, cert.collision->second};
  doc["unit_count"] = cert.unit_count;
  doc["units_are_group"] = cert.units_are_group;
  if (cert.interloper) doc["interloper"] = support_json(*cert.interloper);
  doc["invariant"] = cert.invariant;
  if (cert.violation)
    doc["violation"] = {{"endo_image", cert.violation->endo.image},
                        {"generator", support_json(cert.violation->generator)},
                        {"image", support_json(cert.violation->image)}};
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [u, v] : cert.unit_inverses)
    pairs.push_back({support_json(u), support_json(v)});
  doc["unit_inverses"] = pairs;
  doc["verdict"] = to_string(cert.verdict);
  (void)g;
  return doc;
}

nlohmann::json to_json(const RefutationTree& tree, const GroupPtr& g) {
  nlohmann::json t;
  t["root_unit"] = support_json(tree.root_unit);
  nlohmann::json branches = nlohmann::json::array();
  for (const auto& b : tree.branches) {
    nlohmann::json bj;
    bj["g"] = b.g;
    if (b.leaf) bj["leaf"] = to_string(*b.leaf);
    if (b.child) bj["child"] = to_json(*b.child, g);
    branches.push_back(std::move(bj));
  }
  t["branches"] = branches;
  return t;
}

bool verify_certificate_json(const nlohmann::json& doc, const GroupPtr& g,
                             std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  try {
    if (doc.value("schema", 0) != 1) return fail("unsupported schema");
    if (doc.value("type", "") != "certificate") return fail("not a certificate");
    if (doc["group"]["order"].get<int>() != g->order())
      return fail("group order mismatch");

    std::vector<RingElem> gens;
    for (const auto& a : doc["ideal_generators"])
      gens.push_back(elem_from_support(g, a));
    Ideal ideal = groupring::ideal_closure(g, gens);
    QuotientRing q = groupring::quotient(std::move(ideal));
    if (q.dim != doc["quotient_dim"].get<std::size_t>())
      return fail("quotient_dim mismatch");

    bool embeds_doc = doc["embeds"].get<bool>();
    auto coll = groupring::embedding_collision(q.ideal);
    if (embeds_doc == coll.has_value()) return fail("embeds flag mismatch");
    if (doc.contains("collision")) {
      int a = doc["collision"][0].get<int>();
      int b = doc["collision"][1].get<int>();
      if (a == b) return fail("degenerate collision pair");
      gf2::Vec ea(static_cast<std::size_t>(g->order())),
          eb(static_cast<std::size_t>(g->order()));
      ea.set(static_cast<std::size_t>(a));
      eb.set(static_cast<std::size_t>(b));
      if (!(q.ideal.basis.reduce(ea) == q.ideal.basis.reduce(eb)))
        return fail("collision pair does not reduce equal");
    }

    RingElem one = q.reduce(RingElem::one(g));
    for (const auto& p : doc["unit_inverses"]) {
      RingElem u = elem_from_support(g, p[0]);
      RingElem v = elem_from_support(g, p[1]);
      if (!(q.reduce(u) == u)) return fail("unit not canonical");
      if (!(q.mul(u, v) == one) || !(q.mul(v, u) == one))
        return fail("inverse witness fails: " + groupring::to_string(u));
    }
    if (doc["unit_count"].get<std::size_t>() !=
        doc["unit_inverses"].size())
      return fail("unit_count does not match witness list");

    if (doc.contains("interloper")) {
      RingElem u = elem_from_support(g, doc["interloper"]);
      if (!groupring::is_unit(q, u)) return fail("interloper is not a unit");
      for (int x = 0; x < g->order(); ++x)
        if (q.reduce(RingElem::of_element(g, x)) == q.reduce(u))
          return fail("interloper is congruent to a group element");
    }

    if (doc.contains("violation")) {
      auto img = doc["violation"]["endo_image"].get<std::vector<int>>();
      auto hom = groups::GroupHom::make(g, g, img);
      if (!hom) return fail("violating endo is not a homomorphism");
      RingElem gen = elem_from_support(g, doc["violation"]["generator"]);
      if (!q.ideal.basis.contains(gen.coeffs))
        return fail("violated generator is not in the ideal");
      RingElem image = groupring::apply_hom(*hom, gen);
      if (!(image == elem_from_support(g, doc["violation"]["image"])))
        return fail("violation image mismatch");
      if (q.ideal.basis.contains(image.coeffs))
        return fail("violation image does not escape the ideal");
    }

    auto verdict = parse_verdict(doc["verdict"].get<std::string>());
    if (!verdict) return fail("unknown verdict");
    bool fully = doc["embeds"].get<bool>() &&
                 doc["units_are_group"].get<bool>() &&
                 doc["unit_count"].get<int>() == g->order() &&
                 doc["invariant"].get<bool>();
    if ((*verdict == Verdict::FULLY_REALIZES) != fully)
      return fail("verdict inconsistent with its defining formula");
  } catch (const nlohmann::json::exception& e) {
    return fail(std::string("malformed document: ") + e.what());
  }
  if (why) why->clear();
  return true;
}

}  // namespace fuchs::engine
