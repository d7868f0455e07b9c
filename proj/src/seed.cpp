#include "clusterseed/seed.hpp"

#include "clusterseed/errors.hpp"

namespace clusterseed {

LabelledSeed::LabelledSeed(IceQuiver quiver, std::vector<LaurentPoly> cluster)
    : quiver_(std::move(quiver)), cluster_(std::move(cluster)) {
  if (cluster_.size() != quiver_.size()) {
    throw InvalidArgument("cluster has " + std::to_string(cluster_.size()) + " entries for a quiver on " +
                          std::to_string(quiver_.size()) + " vertices");
  }
  for (std::size_t i = 0; i < cluster_.size(); ++i) {
    if (cluster_[i].is_zero()) throw InvalidArgument("cluster entry " + std::to_string(i + 1) + " is zero");
    if (cluster_[i].ambient() != cluster_[0].ambient()) {
      throw AmbientMismatch("cluster entries live in different Laurent rings");
    }
  }
}

LabelledSeed LabelledSeed::initial(const IceQuiver& q) {
  const std::size_t n = q.size();
  std::vector<LaurentPoly> cluster;
  cluster.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cluster.push_back(LaurentPoly::variable(n, i));
  return LabelledSeed(q, std::move(cluster));
}

std::size_t LabelledSeed::ambient() const { return cluster_.empty() ? 0 : cluster_.front().ambient(); }

LaurentPoly LabelledSeed::exchange_binomial(std::size_t i) const {
  quiver_.check_mutable(i);
  const std::size_t m = ambient();
  const Quiver& q = quiver_.quiver();
  LaurentPoly in = LaurentPoly::constant(m, 1);
  LaurentPoly out = LaurentPoly::constant(m, 1);
  for (std::size_t k = 0; k < size(); ++k) {
    if (const Multiplicity a = q.arrows(k, i); a > 0) in = in * cluster_[k].pow(a);
    if (const Multiplicity a = q.arrows(i, k); a > 0) out = out * cluster_[k].pow(a);
  }
  return in + out;
}

LabelledSeed LabelledSeed::mutate(std::size_t i) const {
  LaurentPoly numerator = exchange_binomial(i);
  LabelledSeed out(*this);
  out.cluster_[i] = exact_div(numerator, cluster_[i]);
  out.quiver_ = quiver_.mutate(i);
  return out;
}

LabelledSeed LabelledSeed::permute(const Permutation& s) const {
  quiver_.check_permutation(s);
  LabelledSeed out;
  out.quiver_ = quiver_.permute(s);
  out.cluster_.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.cluster_.push_back(cluster_[static_cast<std::size_t>(s(static_cast<int>(i)))]);
  return out;
}

LabelledSeed LabelledSeed::apply(const Generator& g) const {
  if (const auto* m = std::get_if<Mutation>(&g)) return mutate(m->vertex);
  return permute(std::get<Permutation>(g));
}

LabelledSeed LabelledSeed::apply(const GroupElement& g) const {
  if (g.rank() != size()) throw InvalidArgument("group element rank differs from seed size");
  quiver_.check_permutation(g.perm());
  LabelledSeed s = *this;
  for (std::size_t v : g.word()) s = s.mutate(v);
  if (!g.perm().is_identity()) s = s.permute(g.perm());
  return s;
}

std::uint64_t LabelledSeed::digest() const {
  Fnv1a h;
  h.u64(quiver_.digest());
  for (const auto& x : cluster_) h.u64(x.digest());
  return h.value();
}

std::vector<LaurentPoly> alpha_tuple(const IceQuiver& q, const GroupElement& g) {
  return LabelledSeed::initial(q).apply(g).cluster();
}

std::vector<LaurentPoly> compose_images(const std::vector<LaurentPoly>& outer,
                                        const std::vector<LaurentPoly>& inner) {
  std::vector<LaurentPoly> out;
  out.reserve(inner.size());
  for (const auto& p : inner) out.push_back(substitute(p, outer));
  return out;
}

}  // namespace clusterseed
