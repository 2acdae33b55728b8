#pragma once

// The group algebra F2[G]: elements as support bit-vectors over the Cayley
// table, two-sided ideal closure, quotient rings with canonical
// representatives, and unit detection/enumeration.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuchs/gf2.hpp"
#include "fuchs/groups.hpp"

namespace fuchs::groupring {

/// An element of F2[G]; bit g of coeffs is the coefficient of group element g.
struct RingElem {
  groups::GroupPtr group;
  gf2::Vec coeffs;

  static RingElem zero(groups::GroupPtr g);
  /// The basis element of a single group element.
  static RingElem of_element(groups::GroupPtr g, int elem);
  /// XOR of several group elements.
  static RingElem of_support(groups::GroupPtr g, std::vector<int> elems);
  static RingElem one(groups::GroupPtr g) { return of_element(std::move(g), 0); }

  std::vector<std::size_t> support() const { return coeffs.support(); }
  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.coeffs == b.coeffs;
  }
};

RingElem ring_add(const RingElem& u, const RingElem& v);
/// Convolution product: coefficient of g is the parity of
/// #{(s,t) : st = g, s in supp u, t in supp v}.
RingElem ring_mul(const RingElem& u, const RingElem& v);
/// Parity of the support size; a ring map onto F2.
bool augmentation(const RingElem& u);

/// Apply the linear extension of a group endomorphism: each support element
/// maps through the hom, accumulating by XOR.
RingElem apply_hom(const groups::GroupHom& phi, const RingElem& u);

/// Text forms: `1+x+y` (labels joined by '+') or `{0,1,2}` (indices).
std::string to_string(const RingElem& u);
RingElem parse_elem(const groups::GroupPtr& g, const std::string& text);

/// A two-sided ideal of F2[G], stored as the F2-span of its closure.
struct Ideal {
  groups::GroupPtr group;
  std::vector<RingElem> generators;
  gf2::Basis basis;
};

/// Smallest subspace containing gens and closed under left/right
/// multiplication by every group element. The worklist multiplies by a
/// generating set of G only; use full_audit to multiply by all of G.
Ideal ideal_closure(const groups::GroupPtr& g, std::vector<RingElem> gens,
                    bool full_audit = false);

/// True iff the basis is closed under left/right multiplication by every
/// group element (the two-sidedness invariant, checked over all of G).
bool is_two_sided(const Ideal& ideal);

/// The quotient F2[G]/I with reduce-canonical representatives.
struct QuotientRing {
  Ideal ideal;
  std::size_t dim;                       // |G| - rank
  std::vector<std::size_t> free_cols;    // quotient coordinates

  RingElem reduce(const RingElem& u) const;
  RingElem mul(const RingElem& u, const RingElem& v) const;
};

QuotientRing quotient(Ideal ideal);

/// Inverse witness of u in the quotient, if u is a unit: v canonical with
/// uv = vu = 1 mod I (the left solve is re-verified two-sidedly).
std::optional<RingElem> is_unit(const QuotientRing& q, const RingElem& u);

/// True iff left multiplication by u on F2[G] itself is full-rank.
bool is_unit_full_algebra(const RingElem& u);

/// Unit test through the index-3 quotient: for H a normal 2-subgroup of G
/// with |G|/|H| = 3, u is a unit in F2[G] iff its image in F2[C3] is.
bool is_unit_via_sylow3_quotient(const groups::GroupPtr& g,
                                 const std::vector<int>& h,
                                 const RingElem& u);

/// All units among the 2^dim canonical representatives, sorted by support.
/// Throws resource_limit_error when dim exceeds cap_dim.
std::vector<RingElem> unit_group(const QuotientRing& q,
                                 std::size_t cap_dim = 22, int jobs = 1);

/// True iff the canonical representatives of all group elements are pairwise
/// distinct; on failure yields a collision pair (g, h), g != h, g = h mod I.
std::optional<std::pair<int, int>> embedding_collision(const Ideal& ideal);
inline bool embeds(const Ideal& ideal) { return !embedding_collision(ideal); }

}  // namespace fuchs::groupring
