#include "fuchs/endos.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "fuchs/errors.hpp"

namespace fuchs::endos {

namespace {

// BFS closure of {identity} ∪ gens under right multiplication by gens,
// recording how each new element is derived.
std::vector<ClosureStep> close(const groups::GroupTable& g,
                               const std::vector<int>& gens,
                               std::vector<bool>& known) {
  std::vector<ClosureStep> steps;
  std::vector<int> frontier;
  known.assign(static_cast<std::size_t>(g.order()), false);
  known[groups::GroupTable::identity] = true;
  frontier.push_back(groups::GroupTable::identity);
  for (int x : gens)
    if (!known[static_cast<std::size_t>(x)]) {
      known[static_cast<std::size_t>(x)] = true;
      frontier.push_back(x);
    }
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    int p = frontier[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int e = g.mul(p, gens[k]);
      if (!known[static_cast<std::size_t>(e)]) {
        known[static_cast<std::size_t>(e)] = true;
        steps.push_back({e, p, static_cast<int>(k)});
        frontier.push_back(e);
      }
    }
  }
  return steps;
}

}  // namespace

GeneratingSet find_generating_set(const groups::GroupPtr& g) {
  const int n = g->order();
  std::vector<int> orders(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) orders[static_cast<std::size_t>(x)] = g->element_order(x);

  std::vector<int> gens;
  std::vector<bool> known;
  std::vector<ClosureStep> steps = close(*g, gens, known);
  while (std::find(known.begin(), known.end(), false) != known.end()) {
    int best = -1;
    for (int x = 0; x < n; ++x)
      if (!known[static_cast<std::size_t>(x)] &&
          (best < 0 || orders[static_cast<std::size_t>(x)] >
                           orders[static_cast<std::size_t>(best)]))
        best = x;
    gens.push_back(best);
    steps = close(*g, gens, known);
  }
  return GeneratingSet{g, std::move(gens), std::move(steps)};
}

std::optional<groups::GroupHom> extend_hom(const GeneratingSet& gs,
                                           const groups::GroupPtr& codomain,
                                           std::span<const int> images) {
  if (images.size() != gs.gens.size())
    throw dimension_error("extend_hom: one image per generator required");
  std::vector<int> table(static_cast<std::size_t>(gs.group->order()), -1);
  table[groups::GroupTable::identity] = groups::GroupTable::identity;
  for (std::size_t i = 0; i < gs.gens.size(); ++i)
    table[static_cast<std::size_t>(gs.gens[i])] = images[i];
  for (const auto& s : gs.closure_order)
    table[static_cast<std::size_t>(s.element)] =
        codomain->mul(table[static_cast<std::size_t>(s.parent)],
                      table[static_cast<std::size_t>(gs.gens[static_cast<std::size_t>(s.gen_index)])]);
  return groups::GroupHom::make(gs.group, codomain, std::move(table));
}

std::vector<groups::GroupHom> enumerate_homs(const groups::GroupPtr& g,
                                             const groups::GroupPtr& h,
                                             const EnumOptions& opts) {
  if (g->order() > opts.order_cap || h->order() > opts.order_cap)
    throw resource_limit_error("enumerate_homs: group order exceeds cap " +
                               std::to_string(opts.order_cap));
  GeneratingSet gs = find_generating_set(g);
  const std::size_t ng = gs.gens.size();

  // Candidate images per generator, pruned by order divisibility.
  std::vector<std::vector<int>> candidates(ng);
  for (std::size_t i = 0; i < ng; ++i) {
    int go = g->element_order(gs.gens[i]);
    for (int y = 0; y < h->order(); ++y)
      if (go % h->element_order(y) == 0) candidates[i].push_back(y);
  }
  if (ng == 0)
    return {groups::GroupHom::make(g, h,
                                   std::vector<int>{groups::GroupTable::identity})
                .value()};

  // Depth-first over generators level..ng-1; images[0] is fixed by the caller.
  auto search = [&](auto&& self, std::size_t level, std::vector<int>& images,
                    std::vector<groups::GroupHom>& out) -> void {
    if (level == ng) {
      if (auto hom = extend_hom(gs, h, images)) out.push_back(std::move(*hom));
      return;
    }
    for (int c : candidates[level]) {
      images[level] = c;
      self(self, level + 1, images, out);
    }
  };
  auto search_tail = [&](std::vector<int>& images,
                         std::vector<groups::GroupHom>& out) {
    search(search, 1, images, out);
  };

  const std::size_t parts = candidates[0].size();
  std::vector<std::vector<groups::GroupHom>> results(parts);
  int jobs = std::clamp(opts.jobs, 1, static_cast<int>(parts));
  if (jobs <= 1) {
    std::vector<int> images(ng);
    for (std::size_t p = 0; p < parts; ++p) {
      images[0] = candidates[0][p];
      search_tail(images, results[p]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        std::vector<int> images(ng);
        for (std::size_t p = next.fetch_add(1); p < parts; p = next.fetch_add(1)) {
          images[0] = candidates[0][p];
          search_tail(images, results[p]);
        }
      });
    for (auto& t : workers) t.join();
  }

  std::vector<groups::GroupHom> out;
  for (auto& part : results)
    for (auto& hom : part) out.push_back(std::move(hom));
  return out;
}

std::vector<groups::GroupHom> enumerate_endos(const groups::GroupPtr& g,
                                              const EnumOptions& opts) {
  return enumerate_homs(g, g, opts);
}

std::vector<groups::GroupHom> enumerate_autos(const groups::GroupPtr& g,
                                              const EnumOptions& opts) {
  std::vector<groups::GroupHom> out;
  for (auto& e : enumerate_endos(g, opts))
    if (e.is_bijective()) out.push_back(std::move(e));
  return out;
}

}  // namespace fuchs::endos
