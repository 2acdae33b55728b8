#include "fuchs/groupring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <thread>

#include "fuchs/endos.hpp"
#include "fuchs/errors.hpp"

namespace fuchs::groupring {

namespace {

void require_same_group(const RingElem& u, const RingElem& v) {
  if (u.group.get() != v.group.get() &&
      u.group->order() != v.group->order())
    throw dimension_error("ring op: group mismatch");
}

// u * g and g * u as coordinate permutations of u.
gf2::Vec mul_elem_right(const groups::GroupTable& g, const gf2::Vec& u, int x) {
  gf2::Vec out(u.size());
  for (std::size_t s : u.support())
    out.flip(static_cast<std::size_t>(g.mul(static_cast<int>(s), x)));
  return out;
}

gf2::Vec mul_elem_left(const groups::GroupTable& g, int x, const gf2::Vec& u) {
  gf2::Vec out(u.size());
  for (std::size_t s : u.support())
    out.flip(static_cast<std::size_t>(g.mul(x, static_cast<int>(s))));
  return out;
}

bool vec_less(const gf2::Vec& a, const gf2::Vec& b) {
  const auto& la = a.limbs();
  const auto& lb = b.limbs();
  for (std::size_t i = la.size(); i-- > 0;)
    if (la[i] != lb[i]) return la[i] < lb[i];
  return false;
}

}  // namespace

RingElem RingElem::zero(groups::GroupPtr g) {
  gf2::Vec v(static_cast<std::size_t>(g->order()));
  return RingElem{std::move(g), std::move(v)};
}

RingElem RingElem::of_element(groups::GroupPtr g, int elem) {
  RingElem u = zero(std::move(g));
  u.coeffs.set(static_cast<std::size_t>(elem));
  return u;
}

RingElem RingElem::of_support(groups::GroupPtr g, std::vector<int> elems) {
  RingElem u = zero(std::move(g));
  for (int e : elems) u.coeffs.flip(static_cast<std::size_t>(e));
  return u;
}

RingElem ring_add(const RingElem& u, const RingElem& v) {
  require_same_group(u, v);
  return RingElem{u.group, u.coeffs ^ v.coeffs};
}

RingElem ring_mul(const RingElem& u, const RingElem& v) {
  require_same_group(u, v);
  RingElem out = RingElem::zero(u.group);
  const auto& g = *u.group;
  for (std::size_t s : u.coeffs.support())
    for (std::size_t t : v.coeffs.support())
      out.coeffs.flip(
          static_cast<std::size_t>(g.mul(static_cast<int>(s), static_cast<int>(t))));
  return out;
}

bool augmentation(const RingElem& u) { return u.coeffs.popcount() & 1; }

RingElem apply_hom(const groups::GroupHom& phi, const RingElem& u) {
  RingElem out = RingElem::zero(u.group);
  for (std::size_t s : u.coeffs.support())
    out.coeffs.flip(static_cast<std::size_t>(phi(static_cast<int>(s))));
  return out;
}

std::string to_string(const RingElem& u) {
  auto supp = u.support();
  if (supp.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t s : supp) {
    if (!first) os << "+";
    os << u.group->label(static_cast<int>(s));
    first = false;
  }
  return os.str();
}

RingElem parse_elem(const groups::GroupPtr& g, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  RingElem out = RingElem::zero(g);
  if (s.empty() || s == "0") return out;
  if (s.front() == '{') {
    if (s.back() != '}') throw dimension_error("parse_elem: missing '}'");
    std::istringstream in(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty()) continue;
      int idx = std::stoi(tok);
      if (idx < 0 || idx >= g->order())
        throw dimension_error("parse_elem: index out of range: " + tok);
      out.coeffs.flip(static_cast<std::size_t>(idx));
    }
    return out;
  }
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, '+')) {
    if (tok.empty()) throw dimension_error("parse_elem: empty term");
    auto idx = g->find_label(tok);
    if (!idx) throw dimension_error("parse_elem: unknown element label: " + tok);
    out.coeffs.flip(static_cast<std::size_t>(*idx));
  }
  return out;
}

Ideal ideal_closure(const groups::GroupPtr& g, std::vector<RingElem> gens,
                    bool full_audit) {
  const std::size_t n = static_cast<std::size_t>(g->order());
  std::vector<int> mults;
  if (full_audit) {
    mults.resize(n);
    for (std::size_t i = 0; i < n; ++i) mults[i] = static_cast<int>(i);
  } else {
    mults = endos::find_generating_set(g).gens;
    if (mults.empty()) mults.push_back(groups::GroupTable::identity);
  }

  gf2::Basis basis(n);
  std::vector<gf2::Vec> worklist;
  for (const auto& w : gens) {
    if (w.coeffs.size() != n) throw dimension_error("ideal_closure: wrong group");
    if (basis.insert(w.coeffs)) worklist.push_back(w.coeffs);
  }
  // Every vector ever pushed gets multiplied by every side multiplier;
  // linearity makes the resulting span two-sided.
  while (!worklist.empty()) {
    gf2::Vec w = std::move(worklist.back());
    worklist.pop_back();
    for (int m : mults) {
      gf2::Vec l = mul_elem_left(*g, m, w);
      if (basis.insert(l)) worklist.push_back(std::move(l));
      gf2::Vec r = mul_elem_right(*g, w, m);
      if (basis.insert(r)) worklist.push_back(std::move(r));
    }
  }
  return Ideal{g, std::move(gens), std::move(basis)};
}

bool is_two_sided(const Ideal& ideal) {
  const auto& g = *ideal.group;
  for (const auto& row : ideal.basis.rows())
    for (int x = 0; x < g.order(); ++x) {
      if (!ideal.basis.contains(mul_elem_left(g, x, row))) return false;
      if (!ideal.basis.contains(mul_elem_right(g, row, x))) return false;
    }
  for (const auto& gen : ideal.generators)
    if (!ideal.basis.contains(gen.coeffs)) return false;
  return true;
}

RingElem QuotientRing::reduce(const RingElem& u) const {
  return RingElem{u.group, ideal.basis.reduce(u.coeffs)};
}

RingElem QuotientRing::mul(const RingElem& u, const RingElem& v) const {
  return reduce(ring_mul(u, v));
}

QuotientRing quotient(Ideal ideal) {
  std::size_t dim = static_cast<std::size_t>(ideal.group->order()) -
                    ideal.basis.rank();
  auto free_cols = ideal.basis.free_columns();
  return QuotientRing{std::move(ideal), dim, std::move(free_cols)};
}

std::optional<RingElem> is_unit(const QuotientRing& q, const RingElem& u) {
  const std::size_t d = q.dim;
  if (d == 0) return RingElem::zero(q.ideal.group);  // the zero ring

  // Coordinates of a canonical representative are its free-column bits.
  auto coords = [&](const gf2::Vec& v) {
    gf2::Vec c(d);
    for (std::size_t j = 0; j < d; ++j)
      if (v.get(q.free_cols[j])) c.set(j);
    return c;
  };

  gf2::Matrix m(d, d);
  RingElem uc = q.reduce(u);
  for (std::size_t j = 0; j < d; ++j) {
    RingElem ej = RingElem::of_element(q.ideal.group,
                                       static_cast<int>(q.free_cols[j]));
    gf2::Vec col = coords(q.mul(uc, ej).coeffs);
    for (std::size_t i = 0; i < d; ++i)
      if (col.get(i)) m.set(i, j);
  }
  RingElem one = q.reduce(RingElem::one(q.ideal.group));
  auto x = m.solve(coords(one.coeffs));
  if (!x) return std::nullopt;
  RingElem v = RingElem::zero(q.ideal.group);
  for (std::size_t j = 0; j < d; ++j)
    if (x->get(j)) v.coeffs.set(q.free_cols[j]);
  // Verify both sides before trusting the left solve.
  if (!(q.mul(uc, v) == one) || !(q.mul(v, uc) == one)) return std::nullopt;
  return v;
}

bool is_unit_full_algebra(const RingElem& u) {
  const std::size_t n = static_cast<std::size_t>(u.group->order());
  gf2::Basis b(n);
  std::size_t r = 0;
  for (std::size_t g = 0; g < n; ++g)
    if (b.insert(mul_elem_right(*u.group, u.coeffs, static_cast<int>(g)))) ++r;
  return r == n;
}

bool is_unit_via_sylow3_quotient(const groups::GroupPtr& g,
                                 const std::vector<int>& h,
                                 const RingElem& u) {
  const int n = g->order();
  if (static_cast<int>(h.size()) * 3 != n)
    throw dimension_error("sylow3 quotient: subgroup index must be 3");
  std::vector<bool> in_h(static_cast<std::size_t>(n), false);
  for (int x : h) in_h[static_cast<std::size_t>(x)] = true;
  if (!in_h[groups::GroupTable::identity])
    throw dimension_error("sylow3 quotient: subgroup must contain identity");
  for (int a : h) {
    if ((g->element_order(a) & (g->element_order(a) - 1)) != 0)
      throw dimension_error("sylow3 quotient: subgroup must be a 2-group");
    for (int b : h)
      if (!in_h[static_cast<std::size_t>(g->mul(a, b))])
        throw dimension_error("sylow3 quotient: not closed under product");
  }
  for (int a : h)
    for (int x = 0; x < n; ++x)
      if (!in_h[static_cast<std::size_t>(g->mul(g->mul(x, a), g->inv(x)))])
        throw dimension_error("sylow3 quotient: subgroup not normal");

  int c = -1;
  for (int x = 0; x < n && c < 0; ++x)
    if (!in_h[static_cast<std::size_t>(x)]) c = x;
  int c2 = g->mul(c, c);
  auto coset_of = [&](int x) {
    if (in_h[static_cast<std::size_t>(x)]) return 0;
    if (in_h[static_cast<std::size_t>(g->mul(g->inv(c), x))]) return 1;
    if (in_h[static_cast<std::size_t>(g->mul(g->inv(c2), x))]) return 2;
    throw dimension_error("sylow3 quotient: coset decomposition failed");
  };

  groups::GroupPtr c3 = groups::build_cyclic(3);
  RingElem image = RingElem::zero(c3);
  for (std::size_t s : u.coeffs.support())
    image.coeffs.flip(static_cast<std::size_t>(coset_of(static_cast<int>(s))));
  return is_unit_full_algebra(image);
}

std::vector<RingElem> unit_group(const QuotientRing& q, std::size_t cap_dim,
                                 int jobs) {
  if (q.dim > cap_dim || q.dim >= 64)
    throw resource_limit_error("unit_group: quotient dimension " +
                               std::to_string(q.dim) + " exceeds cap " +
                               std::to_string(std::min<std::size_t>(cap_dim, 63)));
  const std::uint64_t total = std::uint64_t{1} << q.dim;
  auto candidate = [&](std::uint64_t mask) {
    RingElem u = RingElem::zero(q.ideal.group);
    for (std::size_t j = 0; j < q.dim; ++j)
      if ((mask >> j) & 1) u.coeffs.set(q.free_cols[j]);
    return u;
  };

  int nw = std::clamp<int>(jobs, 1, 64);
  std::vector<std::vector<RingElem>> parts(static_cast<std::size_t>(nw));
  auto scan = [&](int w) {
    for (std::uint64_t mask = static_cast<std::uint64_t>(w); mask < total;
         mask += static_cast<std::uint64_t>(nw)) {
      RingElem u = candidate(mask);
      if (is_unit(q, u)) parts[static_cast<std::size_t>(w)].push_back(std::move(u));
    }
  };
  if (nw == 1) {
    scan(0);
  } else {
    std::vector<std::thread> ts;
    for (int w = 0; w < nw; ++w) ts.emplace_back(scan, w);
    for (auto& t : ts) t.join();
  }
  std::vector<RingElem> out;
  for (auto& p : parts)
    for (auto& u : p) out.push_back(std::move(u));
  std::sort(out.begin(), out.end(), [](const RingElem& a, const RingElem& b) {
    return vec_less(a.coeffs, b.coeffs);
  });
  return out;
}

std::optional<std::pair<int, int>> embedding_collision(const Ideal& ideal) {
  const int n = ideal.group->order();
  std::vector<std::pair<gf2::Vec, int>> reps;
  reps.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    gf2::Vec e(static_cast<std::size_t>(n));
    e.set(static_cast<std::size_t>(g));
    reps.emplace_back(ideal.basis.reduce(std::move(e)), g);
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

}  // namespace fuchs::groupring
