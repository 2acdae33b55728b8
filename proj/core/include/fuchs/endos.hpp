#pragma once

// Exhaustive enumeration of homomorphisms, endomorphisms and automorphisms
// between small Cayley-table groups via generator-image backtracking.

#include <optional>
#include <span>
#include <vector>

#include "fuchs/groups.hpp"

namespace fuchs::endos {

/// One derivation step of the generating-set closure: element = parent * gens[gen_index].
struct ClosureStep {
  int element;
  int parent;
  int gen_index;
};

/// A generating set together with a derivation order for every non-seed
/// element, so generator images propagate to full image tables
/// deterministically.
struct GeneratingSet {
  groups::GroupPtr group;
  std::vector<int> gens;
  std::vector<ClosureStep> closure_order;
};

/// Greedy small generating set: repeatedly add the element of largest order
/// outside the current closure (ties broken by smallest index).
GeneratingSet find_generating_set(const groups::GroupPtr& g);

/// Propagate generator images along the closure order and verify the
/// resulting table against every product pair. Absent iff not a homomorphism.
std::optional<groups::GroupHom> extend_hom(const GeneratingSet& gs,
                                           const groups::GroupPtr& codomain,
                                           std::span<const int> images);

struct EnumOptions {
  int order_cap = 128;  // largest admissible |G|
  int jobs = 1;         // worker threads, partitioned by first-generator image
};

/// All homomorphisms G -> H, duplicate-free, in lexicographic order of
/// generator-image tuples. Candidates are pruned by order divisibility
/// before closure. Throws resource_limit_error above the cap.
std::vector<groups::GroupHom> enumerate_homs(const groups::GroupPtr& g,
                                             const groups::GroupPtr& h,
                                             const EnumOptions& opts = {});

std::vector<groups::GroupHom> enumerate_endos(const groups::GroupPtr& g,
                                              const EnumOptions& opts = {});

/// The bijective members of enumerate_endos, same order.
std::vector<groups::GroupHom> enumerate_autos(const groups::GroupPtr& g,
                                              const EnumOptions& opts = {});

}  // namespace fuchs::endos
