#include "clusterseed/explore.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "clusterseed/errors.hpp"

namespace clusterseed {

std::size_t LabelledGraph::label_degree(std::size_t v, std::size_t label) const {
  std::size_t d = 0;
  for (const auto& e : edges) {
    if (e.label != label) continue;
    if (e.u == v) ++d;
    if (e.v == v && e.u != v) ++d;
  }
  return d;
}

bool LabelledGraph::is_label_regular() const {
  // degree[v * L + slot]
  std::vector<std::size_t> slot_of;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    if (labels[t] >= slot_of.size()) slot_of.resize(labels[t] + 1, labels.size());
    slot_of[labels[t]] = t;
  }
  const std::size_t L = labels.size();
  std::vector<std::size_t> degree(vertices.size() * L, 0);
  for (const auto& e : edges) {
    if (e.label >= slot_of.size() || slot_of[e.label] == L) return false;
    const std::size_t t = slot_of[e.label];
    ++degree[e.u * L + t];
    if (e.v != e.u) ++degree[e.v * L + t];
  }
  return std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 1; });
}

void ExplorationReport::require_closed(const char* what) const {
  if (!closed()) {
    throw NotClosed(std::string(what) + ": the mutation class did not close within the budget (" +
                    std::to_string(size()) + " vertices explored)");
  }
}

std::optional<std::size_t> ExplorationReport::find_seed(const LabelledSeed& s) const {
  if (level != Level::Seed) throw InvalidArgument("find_seed on a quiver-level report");
  auto it = index.find(s.digest());
  if (it == index.end()) return std::nullopt;
  for (std::size_t v : it->second)
    if (seeds[v] == s) return v;
  return std::nullopt;
}

std::optional<std::size_t> ExplorationReport::find_quiver(const IceQuiver& q) const {
  if (level == Level::Quiver) {
    auto it = index.find(q.digest());
    if (it == index.end()) return std::nullopt;
    for (std::size_t v : it->second)
      if (quivers[v] == q) return v;
    return std::nullopt;
  }
  for (std::size_t v = 0; v < quivers.size(); ++v)
    if (quivers[v] == q) return v;
  return std::nullopt;
}

std::size_t ExplorationReport::act(std::size_t v, const GroupElement& g) const {
  require_closed("act");
  std::size_t cur = v;
  for (std::size_t letter : g.word()) {
    auto it = std::find(mutable_vertices.begin(), mutable_vertices.end(), letter);
    if (it == mutable_vertices.end()) throw FrozenVertex("mutation at a frozen vertex");
    cur = static_cast<std::size_t>(action[cur][static_cast<std::size_t>(it - mutable_vertices.begin())]);
  }
  if (g.perm().is_identity()) return cur;
  std::optional<std::size_t> found;
  switch (level) {
    case Level::Seed:
      found = find_seed(seeds[cur].permute(g.perm()));
      break;
    case Level::Fingerprint: {
      const SeedFingerprint f = fingerprints[cur].permute(g.perm());
      if (auto it = index.find(f.digest()); it != index.end())
        for (std::size_t v : it->second)
          if (fingerprints[v] == f) found = v;
      break;
    }
    case Level::Quiver:
      found = find_quiver(quivers[cur].permute(g.perm()));
      break;
  }
  if (!found) throw Error("act: permuted payload missing from a closed class");
  return *found;
}

namespace {

std::vector<Generator> generators_for(const IceQuiver& q) {
  std::vector<Generator> gens;
  const auto mut = q.mutable_vertices();
  for (std::size_t v : mut) gens.emplace_back(Mutation{v});
  for (std::size_t t = 0; t + 1 < mut.size(); ++t) {
    gens.emplace_back(Permutation::transposition(q.size(), static_cast<int>(mut[t]), static_cast<int>(mut[t + 1])));
  }
  return gens;
}

IceQuiver step(const IceQuiver& q, const Generator& g) {
  if (const auto* m = std::get_if<Mutation>(&g)) return q.mutate(m->vertex);
  return q.permute(std::get<Permutation>(g));
}

const IceQuiver& quiver_of(const IceQuiver& q) { return q; }
const IceQuiver& quiver_of(const LabelledSeed& s) { return s.quiver(); }
const IceQuiver& quiver_of(const SeedFingerprint& s) { return s.quiver(); }

template <class Payload>
ExplorationReport run_bfs(const Payload& start, std::size_t budget, Level level) {
  if (budget == 0) throw InvalidArgument("exploration budget must be at least 1");
  ExplorationReport r;
  r.level = level;
  const IceQuiver& q0 = quiver_of(start);
  r.mutable_vertices = q0.mutable_vertices();
  r.generators = generators_for(q0);
  r.graph.labels = r.mutable_vertices;

  std::vector<Payload> payloads;
  auto add = [&](Payload p, std::size_t depth) {
    const std::size_t id = payloads.size();
    r.index[p.digest()].push_back(id);
    r.quivers.push_back(quiver_of(p));
    r.max_multiplicity = std::max(r.max_multiplicity, quiver_of(p).quiver().max_multiplicity());
    r.depth.push_back(depth);
    r.max_depth = std::max(r.max_depth, depth);
    r.action.emplace_back(r.generators.size(), -1);
    payloads.push_back(std::move(p));
    return id;
  };
  auto lookup = [&](const Payload& p) -> std::ptrdiff_t {
    auto it = r.index.find(p.digest());
    if (it == r.index.end()) return -1;
    for (std::size_t v : it->second)
      if (payloads[v] == p) return static_cast<std::ptrdiff_t>(v);
    return -1;
  };

  add(start, 0);
  bool exhausted = false;
  for (std::size_t v = 0; v < payloads.size() && !exhausted; ++v) {
    for (std::size_t g = 0; g < r.generators.size(); ++g) {
      Payload next = [&] {
        if constexpr (std::is_same_v<Payload, IceQuiver>) {
          return step(payloads[v], r.generators[g]);
        } else {
          return payloads[v].apply(r.generators[g]);
        }
      }();
      std::ptrdiff_t w = lookup(next);
      if (w < 0) {
        if (payloads.size() >= budget) {
          exhausted = true;
          break;
        }
        w = static_cast<std::ptrdiff_t>(add(std::move(next), r.depth[v] + 1));
      }
      r.action[v][g] = w;
    }
  }
  r.status = exhausted ? Status::BudgetExhausted : Status::Closed;

  for (std::size_t v = 0; v < payloads.size(); ++v) r.graph.vertices.push_back(payloads[v].digest());
  for (std::size_t v = 0; v < payloads.size(); ++v) {
    for (std::size_t t = 0; t < r.mutable_vertices.size(); ++t) {
      const std::ptrdiff_t w = r.action[v][t];
      if (w >= static_cast<std::ptrdiff_t>(v)) {
        r.graph.edges.push_back({v, static_cast<std::size_t>(w), r.mutable_vertices[t]});
      }
    }
  }
  if constexpr (std::is_same_v<Payload, LabelledSeed>) r.seeds = std::move(payloads);
  if constexpr (std::is_same_v<Payload, SeedFingerprint>) r.fingerprints = std::move(payloads);
  return r;
}

}  // namespace

ExplorationReport explore_seeds(const LabelledSeed& start, std::size_t budget) {
  return run_bfs(start, budget, Level::Seed);
}

ExplorationReport explore_fingerprints(const SeedFingerprint& start, std::size_t budget) {
  return run_bfs(start, budget, Level::Fingerprint);
}

ExplorationReport explore_quivers(const IceQuiver& start, std::size_t budget) {
  return run_bfs(start, budget, Level::Quiver);
}

Smallness is_small(const IceQuiver& start, std::size_t budget) {
  const IceQuiver core(trivial_coefficients(start));
  if (core.size() <= 2) return Smallness::Small;
  if (core.quiver().max_multiplicity() > 2) return Smallness::NotSmall;
  const ExplorationReport r = explore_quivers(core, budget);
  if (r.max_multiplicity > 2) return Smallness::NotSmall;
  return r.closed() ? Smallness::Small : Smallness::Unknown;
}

Neighborhood explore_neighborhood(const LabelledSeed& centre, std::size_t radius) {
  Neighborhood out;
  const auto mut = centre.quiver().mutable_vertices();
  out.graph.labels = mut;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  std::vector<std::size_t> depth;
  auto lookup_or_add = [&](LabelledSeed s, std::size_t d) {
    auto& bucket = index[s.digest()];
    for (std::size_t v : bucket)
      if (out.seeds[v] == s) return v;
    const std::size_t id = out.seeds.size();
    bucket.push_back(id);
    out.graph.vertices.push_back(s.digest());
    out.seeds.push_back(std::move(s));
    depth.push_back(d);
    return id;
  };
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  lookup_or_add(centre, 0);
  for (std::size_t v = 0; v < out.seeds.size(); ++v) {
    if (depth[v] >= radius) continue;
    for (std::size_t k : mut) {
      const std::size_t w = lookup_or_add(out.seeds[v].mutate(k), depth[v] + 1);
      // mu_k is an involution, so the k-edge at w leads back to v.
      if (seen.insert({std::min(v, w), std::max(v, w), k}).second) out.graph.edges.push_back({v, w, k});
    }
  }
  return out;
}

}  // namespace clusterseed
