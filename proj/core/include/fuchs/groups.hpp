#pragma once

// Finite groups as fully validated Cayley tables, plus the constructors
// (cyclic, dihedral, quaternion, products, semidirect products from
// explicit module actions) and structural queries used downstream.

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuchs::groups {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

/// Structural invariants of a group used in place of isomorphism testing:
/// order, abelian flag, center size, element-order histogram, exponent.
struct Fingerprint {
  int order = 0;
  bool abelian = false;
  int center_size = 0;
  std::map<int, int> order_histogram;  // element order -> count
  int exponent = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

std::string to_string(const Fingerprint& fp);

/// A finite group given by its full multiplication table. The identity is
/// always element 0. Construction validates identity, inverses,
/// associativity (exhaustively, n <= 256) and the Latin-square property.
class GroupTable {
 public:
  /// Validates and takes ownership of an n x n table (row g lists g*h).
  static GroupPtr make(std::vector<std::vector<int>> mul,
                       std::vector<std::string> labels = {});

  int order() const { return n_; }
  int mul(int g, int h) const { return mul_[static_cast<std::size_t>(g) * n_ + h]; }
  int inv(int g) const { return inv_[static_cast<std::size_t>(g)]; }
  static constexpr int identity = 0;

  /// g^k for k >= 0.
  int power(int g, int k) const;
  /// Least k >= 1 with g^k = identity.
  int element_order(int g) const;
  int exponent() const;
  bool abelian() const;

  /// {g : gs = sg for all s in S}; ascending indices.
  std::vector<int> centralizer(std::span<const int> S) const;
  std::vector<int> center() const;
  /// The cyclic subgroup <g>, ascending indices.
  std::vector<int> cyclic_subgroup(int g) const;

  Fingerprint fingerprint() const;

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(int g) const;
  /// Index of the element with the given label, if labels are set.
  std::optional<int> find_label(const std::string& s) const;

 private:
  GroupTable(int n, std::vector<int> mul, std::vector<int> inv,
             std::vector<std::string> labels)
      : n_(n), mul_(std::move(mul)), inv_(std::move(inv)),
        labels_(std::move(labels)) {}

  int n_;
  std::vector<int> mul_;  // flattened n x n
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

/// A homomorphism as a total image table, validated against both Cayley
/// tables on construction.
struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int> image;

  /// Validates image[gh] = image[g]image[h] over all pairs; nullopt if the
  /// map is not a homomorphism.
  static std::optional<GroupHom> make(GroupPtr dom, GroupPtr cod,
                                      std::vector<int> image);
  /// Identity endomorphism.
  static GroupHom identity_on(GroupPtr g);

  int operator()(int g) const { return image[static_cast<std::size_t>(g)]; }
  bool is_bijective() const;
  /// Order of the map under composition (automorphisms only).
  int map_order() const;
};

/// An action of B on A by automorphisms: one automorphism image table per
/// element of B, validated to respect identity and composition.
struct GroupAction {
  GroupPtr actor;   // B
  GroupPtr target;  // A
  std::vector<std::vector<int>> auto_of;  // actor-indexed image tables

  static GroupAction make(GroupPtr actor, GroupPtr target,
                          std::vector<std::vector<int>> auto_of);
  static GroupAction trivial(GroupPtr actor, GroupPtr target);
};

GroupPtr build_cyclic(int n);
GroupPtr build_dihedral(int two_n);
GroupPtr build_quaternion(int four_n);
/// C2^k with element index = bitmask; basis element i has index 2^(k-1-i),
/// matching the direct-product encoding (a,b) -> a*|B| + b.
GroupPtr build_elementary_abelian(int k);

/// Index encoding (a,b) -> a*|B| + b in both products.
GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B);
GroupPtr semidirect_product(const GroupAction& act);

/// The explicit module actions used by the semidirect-product families:
/// a cyclic actor on an elementary abelian 2-group, given by generator
/// images on a basis.
enum class ModuleKind { Q_C2, Y_C3, YQ_C6, Q_C4, U_C4, S_C4 };

std::optional<ModuleKind> parse_module_kind(const std::string& name);
std::string to_string(ModuleKind kind);

/// Action of a cyclic actor on C2^k where the actor generator (index 1)
/// maps basis element i to the target element with bitmask gen_images[i].
GroupAction linear_action(const GroupPtr& cyclic_actor, int k,
                          std::span<const unsigned> gen_images);

GroupAction module_action(ModuleKind kind);

/// A ⋊ (A ⋊ ... (A ⋊ C)): at each stage the existing group acts on a fresh
/// copy of A through its top cyclic factor via the base action.
GroupPtr iterated_family(ModuleKind kind, int depth);

/// Elements of the target fixed by every actor element; the action is
/// fixed-point free iff this is {identity}.
std::vector<int> fixed_subgroup(const GroupAction& act);

/// Cayley-table text format: "group <n>", n rows of indices, optional
/// "labels" block with n lines.
void save_cayley(const GroupTable& g, std::ostream& out);
GroupPtr load_cayley(std::istream& in);

}  // namespace fuchs::groups
