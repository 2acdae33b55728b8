#include "fuchs/groups.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "fuchs/errors.hpp"

namespace fuchs::groups {

namespace {

// Label for a product element, omitting identity factors.
std::string combine_labels(const std::string& la, const std::string& lb) {
  if (la == "1") return lb;
  if (lb == "1") return la;
  return la + "*" + lb;
}

std::string power_label(const std::string& base, int e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + std::to_string(e);
}

}  // namespace

std::string to_string(const Fingerprint& fp) {
  std::ostringstream os;
  os << "order=" << fp.order << " abelian=" << (fp.abelian ? "yes" : "no")
     << " center=" << fp.center_size << " exponent=" << fp.exponent
     << " orders={";
  bool first = true;
  for (auto [k, v] : fp.order_histogram) {
    if (!first) os << ", ";
    os << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

GroupPtr GroupTable::make(std::vector<std::vector<int>> mul,
                          std::vector<std::string> labels) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw dimension_error("GroupTable: empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      throw dimension_error("GroupTable: table is not square");
    for (int v : row) {
      if (v < 0 || v >= n)
        throw dimension_error("GroupTable: entry out of range");
      flat.push_back(v);
    }
  }
  auto at = [&](int g, int h) { return flat[static_cast<std::size_t>(g) * n + h]; };

  for (int g = 0; g < n; ++g)
    if (at(0, g) != g || at(g, 0) != g)
      throw dimension_error("GroupTable: identity law fails at element " +
                            std::to_string(g));

  // Latin square rows/columns.
  for (int g = 0; g < n; ++g) {
    std::vector<bool> seen_row(static_cast<std::size_t>(n)),
        seen_col(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h) {
      if (seen_row[static_cast<std::size_t>(at(g, h))] ||
          seen_col[static_cast<std::size_t>(at(h, g))])
        throw dimension_error("GroupTable: row/column is not a permutation");
      seen_row[static_cast<std::size_t>(at(g, h))] = true;
      seen_col[static_cast<std::size_t>(at(h, g))] = true;
    }
  }

  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (at(g, h) == 0 && at(h, g) == 0) {
        inv[static_cast<std::size_t>(g)] = h;
        break;
      }
    if (inv[static_cast<std::size_t>(g)] < 0)
      throw dimension_error("GroupTable: element without inverse");
  }

  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw dimension_error("GroupTable: associativity fails");
  }

  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw dimension_error("GroupTable: label count mismatch");

  return GroupPtr(new GroupTable(n, std::move(flat), std::move(inv),
                                 std::move(labels)));
}

int GroupTable::power(int g, int k) const {
  int acc = identity;
  for (int i = 0; i < k; ++i) acc = mul(acc, g);
  return acc;
}

int GroupTable::element_order(int g) const {
  int acc = g, k = 1;
  while (acc != identity) {
    acc = mul(acc, g);
    ++k;
  }
  return k;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int g = 0; g < n_; ++g) e = std::lcm(e, element_order(g));
  return e;
}

bool GroupTable::abelian() const {
  for (int g = 0; g < n_; ++g)
    for (int h = g + 1; h < n_; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

std::vector<int> GroupTable::centralizer(std::span<const int> S) const {
  std::vector<int> out;
  for (int g = 0; g < n_; ++g) {
    bool ok = true;
    for (int s : S)
      if (mul(g, s) != mul(s, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<int> GroupTable::center() const {
  std::vector<int> all(static_cast<std::size_t>(n_));
  std::iota(all.begin(), all.end(), 0);
  return centralizer(all);
}

std::vector<int> GroupTable::cyclic_subgroup(int g) const {
  std::vector<int> out{identity};
  int acc = g;
  while (acc != identity) {
    out.push_back(acc);
    acc = mul(acc, g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fingerprint GroupTable::fingerprint() const {
  Fingerprint fp;
  fp.order = n_;
  fp.abelian = abelian();
  fp.center_size = static_cast<int>(center().size());
  int e = 1;
  for (int g = 0; g < n_; ++g) {
    int o = element_order(g);
    ++fp.order_histogram[o];
    e = std::lcm(e, o);
  }
  fp.exponent = e;
  return fp;
}

std::string GroupTable::label(int g) const {
  if (has_labels()) return labels_[static_cast<std::size_t>(g)];
  return "g" + std::to_string(g);
}

std::optional<int> GroupTable::find_label(const std::string& s) const {
  for (int g = 0; g < n_; ++g)
    if (label(g) == s) return g;
  return std::nullopt;
}

std::optional<GroupHom> GroupHom::make(GroupPtr dom, GroupPtr cod,
                                       std::vector<int> image) {
  const int n = dom->order();
  if (static_cast<int>(image.size()) != n)
    throw dimension_error("GroupHom: image table size mismatch");
  if (image[0] != GroupTable::identity) return std::nullopt;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (image[static_cast<std::size_t>(dom->mul(g, h))] !=
          cod->mul(image[static_cast<std::size_t>(g)],
                   image[static_cast<std::size_t>(h)]))
        return std::nullopt;
  return GroupHom{std::move(dom), std::move(cod), std::move(image)};
}

GroupHom GroupHom::identity_on(GroupPtr g) {
  std::vector<int> img(static_cast<std::size_t>(g->order()));
  std::iota(img.begin(), img.end(), 0);
  return GroupHom{g, g, std::move(img)};
}

bool GroupHom::is_bijective() const {
  std::vector<bool> seen(image.size());
  for (int v : image) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return domain->order() == codomain->order();
}

int GroupHom::map_order() const {
  const int n = domain->order();
  std::vector<int> cur = image;
  int k = 1;
  auto is_id = [&] {
    for (int g = 0; g < n; ++g)
      if (cur[static_cast<std::size_t>(g)] != g) return false;
    return true;
  };
  while (!is_id()) {
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g)
      next[static_cast<std::size_t>(g)] =
          image[static_cast<std::size_t>(cur[static_cast<std::size_t>(g)])];
    cur = std::move(next);
    ++k;
  }
  return k;
}

GroupAction GroupAction::make(GroupPtr actor, GroupPtr target,
                              std::vector<std::vector<int>> auto_of) {
  const int nb = actor->order();
  const int na = target->order();
  if (static_cast<int>(auto_of.size()) != nb)
    throw dimension_error("GroupAction: one automorphism per actor element required");
  for (const auto& m : auto_of) {
    auto hom = GroupHom::make(target, target, m);
    if (!hom || !hom->is_bijective())
      throw dimension_error("GroupAction: image table is not an automorphism");
  }
  for (int a = 0; a < na; ++a)
    if (auto_of[GroupTable::identity][static_cast<std::size_t>(a)] != a)
      throw dimension_error("GroupAction: identity must act trivially");
  for (int b1 = 0; b1 < nb; ++b1)
    for (int b2 = 0; b2 < nb; ++b2) {
      int b12 = actor->mul(b1, b2);
      for (int a = 0; a < na; ++a) {
        int lhs = auto_of[static_cast<std::size_t>(b12)][static_cast<std::size_t>(a)];
        int rhs = auto_of[static_cast<std::size_t>(b1)][static_cast<std::size_t>(
            auto_of[static_cast<std::size_t>(b2)][static_cast<std::size_t>(a)])];
        if (lhs != rhs)
          throw dimension_error("GroupAction: composition law fails");
      }
    }
  return GroupAction{std::move(actor), std::move(target), std::move(auto_of)};
}

GroupAction GroupAction::trivial(GroupPtr actor, GroupPtr target) {
  std::vector<int> id(static_cast<std::size_t>(target->order()));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> autos(static_cast<std::size_t>(actor->order()), id);
  return GroupAction{std::move(actor), std::move(target), std::move(autos)};
}

GroupPtr build_cyclic(int n) {
  if (n < 1) throw dimension_error("build_cyclic: n >= 1 required");
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(power_label("x", i));
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  }
  return GroupTable::make(std::move(mul), std::move(labels));
}

GroupPtr build_dihedral(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw dimension_error("build_dihedral: even order >= 2 required");
  const int n = two_n / 2;
  // element s^j r^i at index j*n + i
  auto idx = [n](int j, int i) { return j * n + ((i % n) + n) % n; };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(two_n),
                                    std::vector<int>(static_cast<std::size_t>(two_n)));
  std::vector<std::string> labels(static_cast<std::size_t>(two_n));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) {
      std::string l = power_label("r", i);
      labels[static_cast<std::size_t>(idx(j, i))] = j ? combine_labels("s", l) : l;
      for (int l2 = 0; l2 < 2; ++l2)
        for (int k = 0; k < n; ++k)
          // s^j r^i * s^l r^k = s^{j+l} r^{(-1)^l i + k}
          mul[static_cast<std::size_t>(idx(j, i))][static_cast<std::size_t>(idx(l2, k))] =
              idx((j + l2) % 2, (l2 ? -i : i) + k);
    }
  return GroupTable::make(std::move(mul), std::move(labels));
}

GroupPtr build_quaternion(int four_n) {
  if (four_n < 8 || four_n % 4 != 0)
    throw dimension_error("build_quaternion: order divisible by 4 and >= 8 required");
  const int two_n = four_n / 2;
  const int n = four_n / 4;
  // element a^i b^j at index j*2n + i, with a^{2n}=1, b^2=a^n, b a b^{-1}=a^{-1}
  auto idx = [two_n](int i, int j) { return j * two_n + ((i % two_n) + two_n) % two_n; };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(four_n),
                                    std::vector<int>(static_cast<std::size_t>(four_n)));
  std::vector<std::string> labels(static_cast<std::size_t>(four_n));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < two_n; ++i) {
      std::string l = power_label("a", i);
      labels[static_cast<std::size_t>(idx(i, j))] = j ? combine_labels(l, "b") : l;
      for (int l2 = 0; l2 < 2; ++l2)
        for (int k = 0; k < two_n; ++k) {
          // a^i b^j * a^k b^l = a^{i + (-1)^j k} b^{j+l}, with b^2 = a^n
          int e = i + (j ? -k : k);
          int jl = j + l2;
          if (jl == 2) {
            e += n;
            jl = 0;
          }
          mul[static_cast<std::size_t>(idx(i, j))][static_cast<std::size_t>(idx(k, l2))] =
              idx(e, jl);
        }
    }
  return GroupTable::make(std::move(mul), std::move(labels));
}

GroupPtr build_elementary_abelian(int k) {
  if (k < 0 || k > 20) throw dimension_error("build_elementary_abelian: bad rank");
  const int n = 1 << k;
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::string l;
    for (int b = 0; b < k; ++b)
      if (i & (1 << (k - 1 - b))) l += static_cast<char>('a' + b);
    labels[static_cast<std::size_t>(i)] = l.empty() ? "1" : l;
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
  }
  return GroupTable::make(std::move(mul), std::move(labels));
}

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
  return semidirect_product(GroupAction::trivial(B, A));
}

GroupPtr semidirect_product(const GroupAction& act) {
  const GroupTable& A = *act.target;
  const GroupTable& B = *act.actor;
  const int na = A.order(), nb = B.order();
  const int n = na * nb;
  auto idx = [nb](int a, int b) { return a * nb + b; };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1) {
      labels[static_cast<std::size_t>(idx(a1, b1))] =
          combine_labels(A.label(a1), B.label(b1));
      const auto& phi = act.auto_of[static_cast<std::size_t>(b1)];
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          // (a1,b1)(a2,b2) = (a1 * phi_{b1}(a2), b1 b2)
          mul[static_cast<std::size_t>(idx(a1, b1))]
             [static_cast<std::size_t>(idx(a2, b2))] =
                 idx(A.mul(a1, phi[static_cast<std::size_t>(a2)]), B.mul(b1, b2));
    }
  return GroupTable::make(std::move(mul), std::move(labels));
}

std::optional<ModuleKind> parse_module_kind(const std::string& name) {
  if (name == "Q_C2") return ModuleKind::Q_C2;
  if (name == "Y_C3") return ModuleKind::Y_C3;
  if (name == "YQ_C6") return ModuleKind::YQ_C6;
  if (name == "Q_C4") return ModuleKind::Q_C4;
  if (name == "U_C4") return ModuleKind::U_C4;
  if (name == "S_C4") return ModuleKind::S_C4;
  return std::nullopt;
}

std::string to_string(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::Q_C2: return "Q_C2";
    case ModuleKind::Y_C3: return "Y_C3";
    case ModuleKind::YQ_C6: return "YQ_C6";
    case ModuleKind::Q_C4: return "Q_C4";
    case ModuleKind::U_C4: return "U_C4";
    case ModuleKind::S_C4: return "S_C4";
  }
  return "?";
}

GroupAction linear_action(const GroupPtr& cyclic_actor, int k,
                          std::span<const unsigned> gen_images) {
  if (static_cast<int>(gen_images.size()) != k)
    throw dimension_error("linear_action: one image per basis element required");
  GroupPtr target = build_elementary_abelian(k);
  const int na = target->order();
  // Image of element mask m under the generator: XOR of basis images.
  auto apply_gen = [&](int m) {
    int out = 0;
    for (int b = 0; b < k; ++b)
      if (m & (1 << (k - 1 - b))) out ^= static_cast<int>(gen_images[static_cast<std::size_t>(b)]);
    return out;
  };
  std::vector<std::vector<int>> autos;
  std::vector<int> cur(static_cast<std::size_t>(na));
  std::iota(cur.begin(), cur.end(), 0);
  for (int j = 0; j < cyclic_actor->order(); ++j) {
    autos.push_back(cur);
    for (auto& v : cur) v = apply_gen(v);
  }
  return GroupAction::make(cyclic_actor, target, std::move(autos));
}

GroupAction module_action(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::Q_C2: {
      const unsigned img[] = {3u, 1u};  // a -> ab, b -> b
      return linear_action(build_cyclic(2), 2, img);
    }
    case ModuleKind::Y_C3: {
      const unsigned img[] = {3u, 2u};  // a -> ab, b -> a
      return linear_action(build_cyclic(3), 2, img);
    }
    case ModuleKind::YQ_C6: {
      const unsigned img[] = {15u, 5u, 12u, 4u};  // a->abcd, b->bd, c->ab, d->b
      return linear_action(build_cyclic(6), 4, img);
    }
    case ModuleKind::Q_C4: {
      const unsigned img[] = {3u, 1u};  // x acts through C2
      return linear_action(build_cyclic(4), 2, img);
    }
    case ModuleKind::U_C4: {
      const unsigned img[] = {6u, 3u, 1u};  // a -> ab, b -> bc, c -> c
      return linear_action(build_cyclic(4), 3, img);
    }
    case ModuleKind::S_C4: {
      const unsigned img[] = {12u, 6u, 3u, 1u};  // a->ab, b->bc, c->cd, d->d
      return linear_action(build_cyclic(4), 4, img);
    }
  }
  throw dimension_error("module_action: unknown kind");
}

GroupPtr iterated_family(ModuleKind kind, int depth) {
  if (depth < 1) throw dimension_error("iterated_family: depth >= 1 required");
  GroupAction base = module_action(kind);
  const int m = base.actor->order();
  GroupPtr g = semidirect_product(base);
  for (int i = 2; i <= depth; ++i) {
    // The existing group acts on a fresh copy of the module through its
    // top cyclic factor (element index mod |C| under our encoding).
    std::vector<std::vector<int>> autos;
    autos.reserve(static_cast<std::size_t>(g->order()));
    for (int e = 0; e < g->order(); ++e)
      autos.push_back(base.auto_of[static_cast<std::size_t>(e % m)]);
    g = semidirect_product(GroupAction::make(g, base.target, std::move(autos)));
  }
  return g;
}

std::vector<int> fixed_subgroup(const GroupAction& act) {
  std::vector<int> out;
  for (int a = 0; a < act.target->order(); ++a) {
    bool fixed = true;
    for (const auto& m : act.auto_of)
      if (m[static_cast<std::size_t>(a)] != a) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(a);
  }
  return out;
}

void save_cayley(const GroupTable& g, std::ostream& out) {
  const int n = g.order();
  out << "group " << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
  if (g.has_labels()) {
    out << "labels\n";
    for (int i = 0; i < n; ++i) out << g.label(i) << "\n";
  }
}

GroupPtr load_cayley(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "group" || n < 1)
    throw dimension_error("load_cayley: expected 'group <n>' header");
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
        throw dimension_error("load_cayley: truncated table");
  std::vector<std::string> labels;
  if (in >> tag) {
    if (tag != "labels") throw dimension_error("load_cayley: unexpected trailer");
    labels.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      if (!(in >> labels[static_cast<std::size_t>(i)]))
        throw dimension_error("load_cayley: truncated labels");
  }
  return GroupTable::make(std::move(mul), std::move(labels));
}

}  // namespace fuchs::groups
