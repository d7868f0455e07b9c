#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's mutation, Laurent or exploration code.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<long>>;

// Fomin-Zelevinsky matrix mutation written out directly from the definition.
inline Matrix mutate(const Matrix& b, std::size_t k) {
  const std::size_t n = b.size();
  Matrix out = b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        const long bik = b[i][k], bkj = b[k][j];
        // b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
        out[i][j] = b[i][j] + (std::labs(bik) * bkj + bik * std::labs(bkj)) / 2;
      }
    }
  }
  return out;
}

// A seed evaluated at a rational point: x_i' = (prod x^[b_ki]+ + prod x^[b_ik]+) / x_i.
struct RationalSeed {
  Matrix b;
  std::vector<mpq_class> x;

  RationalSeed mutate(std::size_t k) const {
    mpq_class in = 1, out = 1;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (long e = 0; e < b[i][k]; ++e) in *= x[i];
      for (long e = 0; e < b[k][i]; ++e) out *= x[i];
    }
    RationalSeed s{oracle::mutate(b, k), x};
    s.x[k] = (in + out) / x[k];
    return s;
  }

  RationalSeed permute(const std::vector<int>& p) const {
    RationalSeed s = *this;
    for (std::size_t i = 0; i < b.size(); ++i) {
      s.x[i] = x[static_cast<std::size_t>(p[i])];
      for (std::size_t j = 0; j < b.size(); ++j)
        s.b[i][j] = b[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])];
    }
    return s;
  }

  std::string key() const {
    std::ostringstream o;
    for (const auto& row : b)
      for (long v : row) o << v << ',';
    for (const auto& v : x) o << v.get_str() << ';';
    return o.str();
  }
};

// Points chosen so that distinct cluster variables of the small classes in
// the tests take distinct values.
inline std::vector<mpq_class> test_point(std::size_t n) {
  static const long num[] = {3, 5, 7, 11, 13, 17};
  static const long den[] = {2, 3, 4, 5, 6, 7};
  std::vector<mpq_class> x;
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class v(num[i % 6] + 6 * static_cast<long>(i / 6), den[i % 6]);
    v.canonicalize();
    x.push_back(v);
  }
  return x;
}

struct ClassCount {
  std::size_t seeds = 0;
  std::size_t quivers = 0;
  std::set<std::string> values;  // distinct cluster values, as rationals
  bool closed = true;
};

// Labelled seeds reachable from (b, point) by mutations and adjacent
// transpositions, counted by breadth-first search.
inline ClassCount count_class(const Matrix& b, std::size_t limit = 100000) {
  const std::size_t n = b.size();
  ClassCount c;
  std::set<std::string> seen;
  std::set<Matrix> quivers;
  std::deque<RationalSeed> queue{{b, test_point(n)}};
  seen.insert(queue.front().key());
  while (!queue.empty()) {
    RationalSeed s = queue.front();
    queue.pop_front();
    quivers.insert(s.b);
    for (const auto& v : s.x) c.values.insert(v.get_str());
    std::vector<RationalSeed> next;
    for (std::size_t k = 0; k < n; ++k) next.push_back(s.mutate(k));
    for (std::size_t t = 0; t + 1 < n; ++t) {
      std::vector<int> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
      std::swap(p[t], p[t + 1]);
      next.push_back(s.permute(p));
    }
    for (auto& x : next) {
      if (seen.insert(x.key()).second) {
        if (seen.size() > limit) {
          c.closed = false;
          c.seeds = seen.size();
          c.quivers = quivers.size();
          return c;
        }
        queue.push_back(std::move(x));
      }
    }
  }
  c.seeds = seen.size();
  c.quivers = quivers.size();
  return c;
}

// Edge (u, v, label); vertices and labels as the caller chooses.
using Edge = std::tuple<std::size_t, std::size_t, std::size_t>;

inline std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>> normalised(const std::vector<Edge>& edges) {
  std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (auto [u, v, l] : edges) out.insert({std::min(u, v), std::max(u, v), l});
  return out;
}

// Neighbour along each label, or nullopt if the graph is not label-regular.
inline std::optional<std::vector<std::map<std::size_t, std::size_t>>> ports(std::size_t n,
                                                                            const std::vector<Edge>& edges) {
  std::vector<std::map<std::size_t, std::size_t>> nb(n);
  for (auto [u, v, l] : edges) {
    if (u >= n || v >= n) return std::nullopt;
    if (nb[u].count(l)) return std::nullopt;
    nb[u][l] = v;
    if (u != v) {
      if (nb[v].count(l)) return std::nullopt;
      nb[v][l] = u;
    }
  }
  return nb;
}

// Label-preserving isomorphism a -> b between connected label-regular
// graphs, optionally with vertex `pin.first` of a sent to `pin.second` of b.
// Returns the vertex map.
inline std::optional<std::vector<std::size_t>> isomorphism(std::size_t na, const std::vector<Edge>& a,
                                                           std::size_t nb_count, const std::vector<Edge>& b,
                                                           std::optional<std::pair<std::size_t, std::size_t>> pin = {}) {
  if (na != nb_count || a.size() != b.size()) return std::nullopt;
  if (na == 0) return std::vector<std::size_t>{};
  const auto pa = ports(na, a), pb = ports(nb_count, b);
  if (!pa || !pb) return std::nullopt;
  const std::size_t start = pin ? pin->first : 0;
  for (std::size_t target = 0; target < nb_count; ++target) {
    if (pin && target != pin->second) continue;
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> phi(na, unset);
    std::vector<bool> used(nb_count, false);
    phi[start] = target;
    used[target] = true;
    std::deque<std::size_t> q{start};
    bool ok = true;
    while (!q.empty() && ok) {
      const std::size_t u = q.front();
      q.pop_front();
      if ((*pa)[u].size() != (*pb)[phi[u]].size()) {
        ok = false;
        break;
      }
      for (auto [label, v] : (*pa)[u]) {
        auto it = (*pb)[phi[u]].find(label);
        if (it == (*pb)[phi[u]].end()) {
          ok = false;
          break;
        }
        if (phi[v] == unset) {
          if (used[it->second]) {
            ok = false;
            break;
          }
          phi[v] = it->second;
          used[it->second] = true;
          q.push_back(v);
        } else if (phi[v] != it->second) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || std::find(phi.begin(), phi.end(), unset) != phi.end()) continue;
    std::vector<Edge> mapped;
    for (auto [u, v, l] : a) mapped.push_back({phi[u], phi[v], l});
    if (normalised(mapped) == normalised(b)) return phi;
  }
  return std::nullopt;
}

// Shifts one-based figure vertex numbers to zero-based.
inline std::vector<Edge> from_figure(const std::vector<Edge>& one_based) {
  std::vector<Edge> out;
  for (auto [u, v, l] : one_based) out.push_back({u - 1, v - 1, l});
  return out;
}

}  // namespace oracle
