#include "clusterseed/quotient.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "clusterseed/errors.hpp"
#include "clusterseed/seed.hpp"

namespace clusterseed {

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::SameQuiver:
      return "same-quiver";
    case RelationKind::SimilarQuiver:
      return "similar";
    case RelationKind::SameStabilizer:
      return "same-stabilizer";
  }
  return "?";
}

RelationKind parse_relation(std::string_view name) {
  if (name == "same-quiver" || name == "quiver") return RelationKind::SameQuiver;
  if (name == "similar" || name == "similar-quiver") return RelationKind::SimilarQuiver;
  if (name == "same-stabilizer" || name == "stabilizer") return RelationKind::SameStabilizer;
  throw InvalidArgument("unknown relation '" + std::string(name) +
                        "' (expected same-quiver, similar or same-stabilizer)");
}

namespace {

std::size_t step(const ExplorationReport& r, std::size_t v, std::size_t g) {
  const std::ptrdiff_t w = r.action[v][g];
  if (w < 0) throw NotClosed("step into the unexplored part of the class");
  return static_cast<std::size_t>(w);
}

bool similar_ice(const IceQuiver& a, const IceQuiver& b) {
  return a.frozen_mask() == b.frozen_mask() && similar(a.quiver(), b.quiver());
}

// Groups vertices into classes of an equivalence given as a predicate on
// (class representative, vertex); `bucket` narrows the candidates.
template <class Key, class Equiv>
Partition group_by(std::size_t n, Key bucket, Equiv equiv) {
  Partition p;
  p.class_of.assign(n, 0);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> reps;  // bucket -> class ids
  for (std::size_t v = 0; v < n; ++v) {
    auto& cands = reps[bucket(v)];
    bool placed = false;
    for (std::size_t c : cands) {
      if (equiv(p.members[c].front(), v)) {
        p.class_of[v] = c;
        p.members[c].push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      p.class_of[v] = p.members.size();
      cands.push_back(p.members.size());
      p.members.push_back({v});
    }
  }
  return p;
}

}  // namespace

Partition partition(const ExplorationReport& report, RelationKind rel) {
  const std::size_t n = report.size();
  switch (rel) {
    case RelationKind::SameQuiver:
      return group_by(
          n, [&](std::size_t v) { return report.quivers[v].digest(); },
          [&](std::size_t a, std::size_t b) { return report.quivers[a] == report.quivers[b]; });
    case RelationKind::SimilarQuiver:
      return group_by(
          n, [](std::size_t) { return std::uint64_t{0}; },
          [&](std::size_t a, std::size_t b) { return similar_ice(report.quivers[a], report.quivers[b]); });
    case RelationKind::SameStabilizer:
      if (report.level == Level::Quiver)
        throw InvalidArgument("same-stabilizer needs a seed- or fingerprint-level exploration");
      report.require_closed("same-stabilizer");
      return group_by(
          n, [](std::size_t) { return std::uint64_t{0}; },
          [&](std::size_t a, std::size_t b) { return same_stabilizer(report, a, b); });
  }
  throw InvalidArgument("unknown relation");
}

LabelledGraph quotient_graph(const ExplorationReport& report, const Partition& classes) {
  report.require_closed("quotient graph");
  const std::size_t mut = report.mutable_vertices.size();
  for (std::size_t v = 0; v < report.size(); ++v) {
    const std::size_t rep = classes.members[classes.class_of[v]].front();
    for (std::size_t t = 0; t < report.generators.size(); ++t) {
      if (classes.class_of[step(report, v, t)] != classes.class_of[step(report, rep, t)])
        throw Error("relation is not compatible with the group action; the quotient is not a labelled graph");
    }
  }
  LabelledGraph g;
  g.labels = report.mutable_vertices;
  for (std::size_t c = 0; c < classes.count(); ++c) g.vertices.push_back(report.graph.vertices[classes.members[c].front()]);
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const std::size_t rep = classes.members[c].front();
    for (std::size_t t = 0; t < mut; ++t) {
      const std::size_t d = classes.class_of[step(report, rep, t)];
      if (d >= c) g.edges.push_back({c, d, report.mutable_vertices[t]});
    }
  }
  return g;
}

LabelledGraph quotient_graph(const ExplorationReport& report, RelationKind rel) {
  report.require_closed("quotient graph");
  return quotient_graph(report, partition(report, rel));
}

bool same_stabilizer(const ExplorationReport& report, std::size_t s1, std::size_t s2) {
  report.require_closed("same-stabilizer");
  const std::size_t n = report.size();
  if (s1 >= n || s2 >= n) throw InvalidArgument("same-stabilizer: vertex out of range");
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::pair<std::size_t, std::size_t>> queue{{s1, s2}};
  seen.insert(static_cast<std::uint64_t>(s1) * n + s2);
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    if ((a == s1) != (b == s2)) return false;
    for (std::size_t t = 0; t < report.generators.size(); ++t) {
      const std::size_t a2 = step(report, a, t), b2 = step(report, b, t);
      if (seen.insert(static_cast<std::uint64_t>(a2) * n + b2).second) queue.emplace_back(a2, b2);
    }
  }
  return true;
}

bool AutomorphismGroup::contains(const SeedAutomorphism& phi) const {
  return std::find(elements.begin(), elements.end(), phi) != elements.end();
}

namespace {

// The automorphism sending base to y, or a conflict.
SeedAutomorphism propagate(const ExplorationReport& r, std::size_t base, std::size_t y) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  SeedAutomorphism phi(r.size(), unset);
  std::vector<bool> hit(r.size(), false);
  phi[base] = y;
  hit[y] = true;
  std::deque<std::size_t> queue{base};
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t t = 0; t < r.generators.size(); ++t) {
      const std::size_t s2 = step(r, s, t), y2 = step(r, phi[s], t);
      if (phi[s2] == unset) {
        if (hit[y2]) throw PropagationConflict("automorphism is not injective");
        phi[s2] = y2;
        hit[y2] = true;
        queue.push_back(s2);
      } else if (phi[s2] != y2) {
        throw PropagationConflict("conflicting images while propagating an automorphism");
      }
    }
  }
  if (std::find(phi.begin(), phi.end(), unset) != phi.end())
    throw PropagationConflict("exploration is not connected under the group action");
  return phi;
}

SeedAutomorphism compose_maps(const SeedAutomorphism& a, const SeedAutomorphism& b) {
  SeedAutomorphism out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

}  // namespace

AutomorphismGroup compute_group(const ExplorationReport& report, RelationKind rel, std::size_t base) {
  report.require_closed("group computation");
  if (base >= report.size()) throw InvalidArgument("group computation: base vertex out of range");
  const Partition classes = partition(report, rel);
  AutomorphismGroup grp;
  grp.base = base;
  const auto& orbit = classes.members[classes.class_of[base]];  // ascending
  std::vector<std::size_t> index_of(report.size(), static_cast<std::size_t>(-1));
  for (std::size_t y : orbit) {
    SeedAutomorphism phi = propagate(report, base, y);
    for (std::size_t x = 0; x < phi.size(); ++x) {
      if (classes.class_of[phi[x]] != classes.class_of[x])
        throw PropagationConflict("automorphism leaves an equivalence class");
    }
    index_of[y] = grp.elements.size();
    if (y == base) grp.identity = grp.elements.size();
    grp.elements.push_back(std::move(phi));
  }
  const std::size_t n = grp.order();
  grp.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      SeedAutomorphism ab = compose_maps(grp.elements[a], grp.elements[b]);
      const std::size_t idx = index_of[ab[base]];
      if (idx == static_cast<std::size_t>(-1) || grp.elements[idx] != ab)
        throw PropagationConflict("automorphisms are not closed under composition");
      grp.table[a][b] = idx;
    }
  }
  for (std::size_t a = 0; a < n && grp.abelian; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (grp.table[a][b] != grp.table[b][a]) {
        grp.abelian = false;
        break;
      }
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1, cur = a;
    while (cur != grp.identity) {
      cur = grp.table[cur][a];
      ++k;
    }
    ++grp.element_orders[k];
  }
  // Greedy generating set: add an element whenever it escapes the subgroup
  // generated so far.
  std::vector<bool> in(n, false);
  in[grp.identity] = true;
  std::vector<std::size_t> span{grp.identity};
  for (std::size_t a = 0; a < n; ++a) {
    if (in[a]) continue;
    grp.generators.push_back(a);
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (std::size_t g : grp.generators) {
        const std::size_t c = grp.table[span[i]][g];
        if (!in[c]) {
          in[c] = true;
          span.push_back(c);
        }
      }
    }
  }
  return grp;
}

Partition orbits(const ExplorationReport& report, const AutomorphismGroup& group) {
  return group_by(
      report.size(), [](std::size_t) { return std::uint64_t{0}; },
      [&](std::size_t a, std::size_t b) {
        return std::any_of(group.elements.begin(), group.elements.end(),
                           [&](const SeedAutomorphism& phi) { return phi[a] == b; });
      });
}

bool is_subgroup(const AutomorphismGroup& sub, const AutomorphismGroup& group) {
  return std::all_of(sub.elements.begin(), sub.elements.end(),
                     [&](const SeedAutomorphism& phi) { return group.contains(phi); });
}

bool is_normal_subgroup(const AutomorphismGroup& sub, const AutomorphismGroup& group) {
  if (!is_subgroup(sub, group)) return false;
  for (const auto& g : group.elements) {
    SeedAutomorphism ginv(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) ginv[g[x]] = x;
    for (const auto& h : sub.elements) {
      if (!sub.contains(compose_maps(g, compose_maps(h, ginv)))) return false;
    }
  }
  return true;
}

AutomorphismGroup point_group(const ExplorationReport& report, const IceQuiver& q) {
  const auto v = report.find_quiver(q);
  if (!v) throw InvalidArgument("point group: quiver does not occur in the exploration");
  return compute_group(report, RelationKind::SameQuiver, *v);
}

bool cmg_morphism_equal(const IceQuiver& q, const GroupElement& g, const GroupElement& h) {
  const LabelledSeed start = LabelledSeed::initial(q);
  const LabelledSeed a = start.apply(g), b = start.apply(h);
  if (!(a.quiver() == b.quiver()))
    throw InvalidArgument("morphisms have different targets: " + g.to_string() + " and " + h.to_string());
  return a.cluster() == b.cluster();
}

}  // namespace clusterseed
