#pragma once

// Realizability logic: certificates for "the ideal I fully realizes G",
// the canonical ideal builders, the bounded refutation search, the
// self-centralizing-element witness, and the matrix-decomposition verifier.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fuchs/endos.hpp"
#include "fuchs/gf2.hpp"
#include "fuchs/groupring.hpp"
#include "fuchs/groups.hpp"

namespace fuchs::engine {

enum class Verdict {
  FULLY_REALIZES,
  REALIZES_NOT_INVARIANT,
  NOT_REALIZED,
  NOT_EMBEDDED,
};

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& s);

/// An invariance violation: the linear extension of endo applied to
/// generator escapes the ideal.
struct InvarianceViolation {
  groups::GroupHom endo;
  groupring::RingElem generator;
  groupring::RingElem image;
};

/// A machine-checkable record of the three full-realizability conditions
/// (embedding, exact unit census, endomorphism invariance) plus witnesses.
struct Certificate {
  groups::Fingerprint group_fingerprint;
  std::vector<groupring::RingElem> ideal_generators;
  std::size_t quotient_dim = 0;
  bool embeds = false;
  std::optional<std::pair<int, int>> collision;  // distinct g = h mod I
  std::size_t unit_count = 0;
  bool units_are_group = false;
  std::optional<groupring::RingElem> interloper;  // unit outside the image of G
  bool invariant = false;
  std::optional<InvarianceViolation> violation;
  /// Unit/inverse witness pairs (canonical representatives).
  std::vector<std::pair<groupring::RingElem, groupring::RingElem>> unit_inverses;
  Verdict verdict = Verdict::NOT_EMBEDDED;
};

struct CheckOptions {
  std::size_t cap_dim = 22;  // unit enumeration cap
  int endo_order_cap = 128;  // endomorphism enumeration cap
  int jobs = 1;
};

/// True iff the linear extension of every endo maps every ideal generator
/// back into the ideal; on failure yields the first violation.
bool check_invariance(const groupring::Ideal& ideal,
                      const std::vector<groups::GroupHom>& endos,
                      std::optional<InvarianceViolation>* witness = nullptr);

/// Assembles ideal closure, embedding check, unit census and invariance
/// into a certificate. Verdict: FULLY_REALIZES iff embeds, the units are
/// exactly the image of G, and the ideal is End(G)-invariant.
Certificate check_full(const groups::GroupPtr& g,
                       std::vector<groupring::RingElem> gens,
                       const CheckOptions& opts = {});

/// Generators {1 + s + t + st : s in C_G(V), t in G}, deduplicated.
/// Rejects V when the subgroup it generates is not abelian.
std::vector<groupring::RingElem> centralizer_ideal(const groups::GroupPtr& g,
                                                   const std::vector<int>& v);

// ---- canonical ideal builders -------------------------------------------
// All semidirect products use the pair encoding (a, b) -> a*|B| + b of
// groups::semidirect_product applied to the given action.

/// All 1 + x + y + xy over an elementary abelian 2-group, deduplicated.
std::vector<groupring::RingElem> elementary_abelian_ideal(
    const groups::GroupPtr& g);

/// A x| C3 with fixed-point-free action: generators 1 + a_i + c + a_i c,
/// a_i ranging over the given basis bitmasks of A.
std::vector<groupring::RingElem> sdp_c3_ideal(
    const groups::GroupPtr& g, const groups::GroupAction& act,
    const std::vector<unsigned>& basis_masks);

/// A x| C4 with x^2 acting trivially: generators 1 + a_i + x + a_i x,
/// 1 + a_i + a_j + a_i a_j (i < j), and 1 + x + x^2 + x^3.
std::vector<groupring::RingElem> sdp_c4_ideal(
    const groups::GroupPtr& g, const groups::GroupAction& act,
    const std::vector<unsigned>& basis_masks);

/// A x| C6: generators 1 + v + w x^(3e) + v^(x^(3e)) w x^(3e) for
/// v in V = A x| <x^3>, w in W = A x| <x^2>, e in {0, 1}.
std::vector<groupring::RingElem> c6_ideal(const groups::GroupPtr& g,
                                          const groups::GroupAction& act);

/// The product ideal on G x H for H = C2^L x C4^eps: the lifted J
/// generators, the K generators 1 + u + v + uv (u, v in H, at most one of
/// order 4), and the cross terms 1 + g + h + gh.
std::vector<groupring::RingElem> product_ideal(
    const groups::GroupPtr& gh, const groups::GroupPtr& g,
    const groups::GroupPtr& h, const std::vector<groupring::RingElem>& j_gens);

// ---- refutation search ---------------------------------------------------

enum class LeafReason { EMBED_FAIL, UNITS_EXCEED, INVARIANCE_FAIL, DEPTH_EXHAUSTED };
std::string to_string(LeafReason r);

/// Case analysis over "the unit w is congruent to g mod I" for every g in G.
/// A tree with no DEPTH_EXHAUSTED leaf proves no ideal fully realizes G.
struct RefutationTree {
  groupring::RingElem root_unit;
  struct Branch {
    int g;
    std::optional<LeafReason> leaf;          // set iff no child
    std::unique_ptr<RefutationTree> child;
  };
  std::vector<Branch> branches;

  bool is_proof() const;
};

/// All units of the form 1 + g + h (identity in the support), lex ordered.
std::vector<groupring::RingElem> default_refutation_seeds(
    const groups::GroupPtr& g);

/// Bounded refutation: branches on the first seed unit, accumulating the
/// hypothesis w + g in I along each branch. A branch closes with EMBED_FAIL
/// when the plain ideal closure collapses the embedding, INVARIANCE_FAIL
/// when the endomorphism-invariant closure does, and otherwise recurses on
/// the next seed until max_depth. Returns the tree only when it is a proof.
std::optional<RefutationTree> refute_full(const groups::GroupPtr& g,
                                          std::vector<groupring::RingElem> seeds,
                                          int max_depth,
                                          const CheckOptions& opts = {});

/// Some g with element_order(g) >= min_order and C_G(g) = <g>.
std::optional<int> self_centralizing_witness(const groups::GroupPtr& g,
                                             int min_order);

/// I_n = A + B with A, B invertible and AB != I_n, by the parity-dependent
/// block construction.
struct MatrixDecomposition {
  gf2::Matrix a;
  gf2::Matrix b;
  bool sum_is_identity = false;
  bool a_invertible = false;
  bool b_invertible = false;
  bool product_not_identity = false;
  bool ok() const {
    return sum_is_identity && a_invertible && b_invertible &&
           product_not_identity;
  }
};

MatrixDecomposition verify_matrix_decomposition(int n);

// ---- built-in case catalog -----------------------------------------------

struct CaseResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  std::optional<Certificate> certificate;
};

const std::vector<std::string>& catalog_names();
CaseResult run_catalog_case(const std::string& name,
                          const CheckOptions& opts = {});

// ---- serialization (schema: 1) -------------------------------------------

nlohmann::json to_json(const Certificate& cert, const groups::GroupPtr& g);
nlohmann::json to_json(const RefutationTree& tree, const groups::GroupPtr& g);

/// Re-checks every witness embedded in a serialized certificate against a
/// freshly closed ideal: inverse pairs multiply to 1, the collision pair
/// reduces equal, the violating endo image escapes the basis. No searches.
bool verify_certificate_json(const nlohmann::json& doc,
                             const groups::GroupPtr& g, std::string* why);

}  // namespace fuchs::engine
