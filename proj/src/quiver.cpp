#include "clusterseed/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "clusterseed/errors.hpp"
#include "clusterseed/laurent.hpp"

namespace clusterseed {

namespace {

Multiplicity checked(Multiplicity a, Multiplicity b, bool multiply) {
  Multiplicity r = 0;
  bool overflow = multiply ? __builtin_mul_overflow(a, b, &r) : __builtin_add_overflow(a, b, &r);
  if (overflow) throw BudgetViolation("arrow multiplicity overflows 64 bits");
  return r;
}

}  // namespace

Quiver Quiver::from_matrix(const std::vector<std::vector<Multiplicity>>& b) {
  const std::size_t n = b.size();
  Quiver q(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i].size() != n) throw InvalidArgument("exchange matrix is not square");
    for (std::size_t j = 0; j < n; ++j) q.b_[i * n + j] = b[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (q.b(i, i) != 0) throw InvalidArgument("exchange matrix has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q.b(i, j) != -q.b(j, i)) {
        throw InvalidArgument("exchange matrix is not skew-symmetric at (" + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return q;
}

Multiplicity Quiver::arrows(std::size_t i, std::size_t j) const { return std::max<Multiplicity>(b(i, j), 0); }

void Quiver::set_arrows(std::size_t i, std::size_t j, Multiplicity k) {
  if (i >= n_ || j >= n_) throw InvalidArgument("vertex out of range");
  if (i == j && k != 0) throw InvalidArgument("loops are not allowed");
  b_[i * n_ + j] = k;
  b_[j * n_ + i] = -k;
}

std::vector<std::vector<Multiplicity>> Quiver::matrix() const {
  std::vector<std::vector<Multiplicity>> m(n_, std::vector<Multiplicity>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = b(i, j);
  return m;
}

Quiver Quiver::mutate(std::size_t k) const {
  if (k >= n_) throw InvalidArgument("mutation vertex " + std::to_string(k + 1) + " out of range");
  Quiver out(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == k || j == k) {
        out.b_[i * n_ + j] = -b(i, j);
        continue;
      }
      const Multiplicity bik = b(i, k);
      const Multiplicity prod = checked(bik, b(k, j), true);
      if (prod > 0) {
        out.b_[i * n_ + j] = checked(b(i, j), bik > 0 ? prod : -prod, false);
      }
    }
  }
  return out;
}

Quiver Quiver::permute(const Permutation& s) const {
  if (s.size() != n_) throw InvalidArgument("permutation size differs from quiver size");
  Quiver out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      out.b_[i * n_ + j] = b(static_cast<std::size_t>(s(static_cast<int>(i))),
                             static_cast<std::size_t>(s(static_cast<int>(j))));
  return out;
}

Quiver Quiver::opposite() const {
  Quiver out(*this);
  for (auto& x : out.b_) x = -x;
  return out;
}

std::vector<std::vector<std::size_t>> Quiver::components() const {
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (b(i, j) != 0) {
        std::size_t a = find(i), c = find(j);
        if (a != c) parent[std::max(a, c)] = std::min(a, c);
      }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t r = find(i);
    if (slot[r] == n_) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

Quiver Quiver::restricted(const std::vector<std::size_t>& vertices) const {
  Quiver out(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] >= n_) throw InvalidArgument("vertex out of range");
    for (std::size_t c = 0; c < vertices.size(); ++c)
      out.b_[a * vertices.size() + c] = b(vertices[a], vertices[c]);
  }
  return out;
}

Multiplicity Quiver::max_multiplicity() const {
  Multiplicity m = 0;
  for (Multiplicity x : b_) m = std::max(m, x);
  return m;
}

std::uint64_t Quiver::digest() const {
  Fnv1a h;
  h.u64(n_);
  for (Multiplicity x : b_) h.i64(x);
  return h.value();
}

std::string Quiver::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ',';
      out += std::to_string(b(i, j));
    }
    out += ']';
  }
  return out + "]";
}

bool similar(const Quiver& q1, const Quiver& q2) {
  if (q1.size() != q2.size()) return false;
  const auto comps = q1.components();
  if (comps != q2.components()) return false;
  for (const auto& c : comps) {
    bool same = true;
    bool opposite = true;
    for (std::size_t a : c) {
      for (std::size_t d : c) {
        same = same && q1.b(a, d) == q2.b(a, d);
        opposite = opposite && q1.b(a, d) == -q2.b(a, d);
      }
    }
    if (!same && !opposite) return false;
  }
  return true;
}

IceQuiver::IceQuiver(Quiver q) : q_(std::move(q)), frozen_(q_.size(), false) {}

IceQuiver::IceQuiver(Quiver q, std::vector<bool> frozen) : q_(std::move(q)), frozen_(std::move(frozen)) {
  if (frozen_.size() != q_.size()) throw InvalidArgument("frozen mask size differs from quiver size");
  for (std::size_t i = 0; i < q_.size(); ++i)
    for (std::size_t j = 0; j < q_.size(); ++j)
      if (frozen_[i] && frozen_[j] && q_.b(i, j) != 0) {
        throw InvalidArgument("arrow between frozen vertices " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1));
      }
}

std::vector<std::size_t> IceQuiver::mutable_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < frozen_.size(); ++i)
    if (!frozen_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> IceQuiver::frozen_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < frozen_.size(); ++i)
    if (frozen_[i]) out.push_back(i);
  return out;
}

bool IceQuiver::has_frozen() const { return std::find(frozen_.begin(), frozen_.end(), true) != frozen_.end(); }

void IceQuiver::check_mutable(std::size_t k) const {
  if (k >= size()) throw InvalidArgument("vertex " + std::to_string(k + 1) + " out of range");
  if (frozen_[k]) throw FrozenVertex("vertex " + std::to_string(k + 1) + " is frozen");
}

void IceQuiver::check_permutation(const Permutation& s) const {
  if (s.size() != size()) throw InvalidArgument("permutation size differs from quiver size");
  for (std::size_t i = 0; i < size(); ++i)
    if (frozen_[i] && s(static_cast<int>(i)) != static_cast<int>(i)) {
      throw FrozenVertex("permutation moves frozen vertex " + std::to_string(i + 1));
    }
}

IceQuiver IceQuiver::mutate(std::size_t k) const {
  check_mutable(k);
  IceQuiver out(*this);
  out.q_ = q_.mutate(k);
  // Frozen-frozen arrows carry no information and are dropped.
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (frozen_[i] && frozen_[j]) out.q_.set_arrows(i, j, 0);
  return out;
}

IceQuiver IceQuiver::permute(const Permutation& s) const {
  check_permutation(s);
  IceQuiver out(*this);
  out.q_ = q_.permute(s);
  return out;
}

std::uint64_t IceQuiver::digest() const {
  Fnv1a h;
  h.u64(q_.digest());
  for (bool f : frozen_) h.u64(f ? 1 : 0);
  return h.value();
}

IceQuiver principal_coefficients(const Quiver& q) {
  const std::size_t n = q.size();
  Quiver big(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) big.set_arrows(i, j, q.b(i, j));
  for (std::size_t j = 0; j < n; ++j) big.set_arrows(n + j, j, 1);
  std::vector<bool> frozen(2 * n, false);
  for (std::size_t j = n; j < 2 * n; ++j) frozen[j] = true;
  return IceQuiver(std::move(big), std::move(frozen));
}

Quiver trivial_coefficients(const IceQuiver& q) { return q.quiver().restricted(q.mutable_vertices()); }

}  // namespace clusterseed
