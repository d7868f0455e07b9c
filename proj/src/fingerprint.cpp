#include "clusterseed/fingerprint.hpp"

#include <random>

#include "clusterseed/errors.hpp"

namespace clusterseed {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;  // both < 2^62, no wrap
  return s >= p ? s - p : s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Error("fingerprint: cluster variable vanishes at the evaluation point");
  return pow_mod(a, p - 2, p);
}

}  // namespace

ModValue SeedFingerprint::point(std::size_t i) {
  ModValue v{};
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL ^ (i * 0x632be59bd9b4e019ULL));
  for (std::size_t t = 0; t < kPrimes.size(); ++t) {
    std::uniform_int_distribution<std::uint64_t> dist(2, kPrimes[t] - 1);
    v[t] = dist(gen);
  }
  return v;
}

ModValue SeedFingerprint::evaluate(const LaurentPoly& poly) {
  ModValue out{};
  const std::size_t m = poly.ambient();
  for (std::size_t t = 0; t < kPrimes.size(); ++t) {
    const std::uint64_t p = kPrimes[t];
    std::vector<std::uint64_t> x(m), xinv(m);
    for (std::size_t i = 0; i < m; ++i) {
      x[i] = point(i)[t];
      xinv[i] = inv_mod(x[i], p);
    }
    std::uint64_t acc = 0;
    for (const auto& [e, c] : poly.terms()) {
      std::uint64_t term = mpz_fdiv_ui(c.get_mpz_t(), p);
      for (std::size_t i = 0; i < m; ++i) {
        if (e[i] > 0) term = mul_mod(term, pow_mod(x[i], static_cast<std::uint64_t>(e[i]), p), p);
        if (e[i] < 0) term = mul_mod(term, pow_mod(xinv[i], static_cast<std::uint64_t>(-e[i]), p), p);
      }
      acc = add_mod(acc, term, p);
    }
    out[t] = acc;
  }
  return out;
}

SeedFingerprint SeedFingerprint::initial(const IceQuiver& q) {
  SeedFingerprint f;
  f.quiver_ = q;
  for (std::size_t i = 0; i < q.size(); ++i) f.values_.push_back(point(i));
  return f;
}

SeedFingerprint SeedFingerprint::of(const LabelledSeed& s) {
  SeedFingerprint f;
  f.quiver_ = s.quiver();
  for (const auto& x : s.cluster()) f.values_.push_back(evaluate(x));
  return f;
}

SeedFingerprint SeedFingerprint::mutate(std::size_t i) const {
  quiver_.check_mutable(i);
  const Quiver& q = quiver_.quiver();
  SeedFingerprint out(*this);
  for (std::size_t t = 0; t < kPrimes.size(); ++t) {
    const std::uint64_t p = kPrimes[t];
    std::uint64_t in = 1, outp = 1;
    for (std::size_t k = 0; k < size(); ++k) {
      if (const Multiplicity a = q.arrows(k, i); a > 0)
        in = mul_mod(in, pow_mod(values_[k][t], static_cast<std::uint64_t>(a), p), p);
      if (const Multiplicity a = q.arrows(i, k); a > 0)
        outp = mul_mod(outp, pow_mod(values_[k][t], static_cast<std::uint64_t>(a), p), p);
    }
    out.values_[i][t] = mul_mod(add_mod(in, outp, p), inv_mod(values_[i][t], p), p);
  }
  out.quiver_ = quiver_.mutate(i);
  return out;
}

SeedFingerprint SeedFingerprint::permute(const Permutation& s) const {
  quiver_.check_permutation(s);
  SeedFingerprint out;
  out.quiver_ = quiver_.permute(s);
  for (std::size_t i = 0; i < size(); ++i) out.values_.push_back(values_[static_cast<std::size_t>(s(static_cast<int>(i)))]);
  return out;
}

SeedFingerprint SeedFingerprint::apply(const Generator& g) const {
  if (const auto* m = std::get_if<Mutation>(&g)) return mutate(m->vertex);
  return permute(std::get<Permutation>(g));
}

SeedFingerprint SeedFingerprint::apply(const GroupElement& g) const {
  quiver_.check_permutation(g.perm());
  SeedFingerprint s = *this;
  for (std::size_t v : g.word()) s = s.mutate(v);
  if (!g.perm().is_identity()) s = s.permute(g.perm());
  return s;
}

std::uint64_t SeedFingerprint::digest() const {
  Fnv1a h;
  h.u64(quiver_.digest());
  for (const auto& v : values_) {
    h.u64(v[0]);
    h.u64(v[1]);
  }
  return h.value();
}

}  // namespace clusterseed
