#include "clusterseed/verify.hpp"

#include <algorithm>
#include <functional>
#include <gmpxx.h>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

#include "clusterseed/errors.hpp"
#include "clusterseed/fingerprint.hpp"
#include "clusterseed/presets.hpp"
#include "clusterseed/quotient.hpp"

namespace clusterseed {

bool check_fixed(const LabelledSeed& s, const GroupElement& g) {
  const SeedFingerprint f = SeedFingerprint::of(s);
  const SeedFingerprint fg = f.apply(g);
  if (!(fg == f)) return false;
  return s.apply(g) == s;
}

unsigned first_fixing_power(const LabelledSeed& s, const GroupElement& g, unsigned max_power) {
  const SeedFingerprint f0 = SeedFingerprint::of(s);
  SeedFingerprint f = f0;
  for (unsigned n = 1; n <= max_power; ++n) {
    f = f.apply(g);
    if (f == f0 && s.apply(g.pow(n)) == s) return n;
  }
  return 0;
}

bool SuiteReport::all_passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; }));
}

Quiver quiver_from_arrows(std::size_t n, const std::vector<std::pair<int, int>>& arrows) {
  Quiver q(n);
  for (auto [t, h] : arrows) {
    if (t < 1 || h < 1 || static_cast<std::size_t>(t) > n || static_cast<std::size_t>(h) > n || t == h)
      throw InvalidArgument("arrow endpoint out of range");
    const auto a = static_cast<std::size_t>(t - 1), b = static_cast<std::size_t>(h - 1);
    q.set_arrows(a, b, q.b(a, b) + 1);
  }
  return q;
}

namespace {

// i, j, k are vertices 1, 2, 3.
constexpr int I = 1, J = 2, K = 3;

GroupElement word_for(const IceQuiver& q, const std::vector<std::size_t>& letters, unsigned power) {
  return word_element(q.size(), letters).pow(power);
}

LemmaCheck make(std::string name, IceQuiver q, const std::vector<std::size_t>& letters, unsigned power,
                Expectation e) {
  GroupElement w = word_for(q, letters, power);
  return LemmaCheck{std::move(name), std::move(q), std::move(w), e, 0};
}

std::string describe(Expectation e, unsigned bound) {
  switch (e) {
    case Expectation::Fixed:
      return "fixed";
    case Expectation::NotFixed:
      return "not fixed";
    case Expectation::NotFixedUpToPower:
      return "not fixed for N <= " + std::to_string(bound);
  }
  return "?";
}

}  // namespace

std::vector<LemmaCheck> lemma_checks(unsigned power_bound) {
  using P = std::vector<std::pair<int, int>>;
  auto principal = [](std::size_t n, const P& arrows) { return principal_coefficients(quiver_from_arrows(n, arrows)); };
  auto trivial = [](std::size_t n, const P& arrows) { return IceQuiver(quiver_from_arrows(n, arrows)); };
  const std::vector<std::size_t> ij = {I, J}, ijk = {I, J, K}, ikikij = {I, K, I, K, I, J};

  std::vector<LemmaCheck> out;
  out.push_back(make("pair without arrows, principal coefficients: (mi mj)^2 fixes", principal(2, {}), ij, 2,
                     Expectation::Fixed));
  out.push_back(make("single arrow i->j, principal coefficients: (mi mj)^5 fixes", principal(2, {{I, J}}), ij, 5,
                     Expectation::Fixed));
  out.push_back(make("single arrow j->i, principal coefficients: (mi mj)^5 fixes", principal(2, {{J, I}}), ij, 5,
                     Expectation::Fixed));
  out.push_back(make("single arrow i->j, trivial coefficients: (mi mj)^2 does not fix", trivial(2, {{I, J}}), ij, 2,
                     Expectation::NotFixed));
  {
    LemmaCheck c = make("double arrow i=>j, trivial coefficients: no power of (mi mj) fixes",
                        trivial(2, {{I, J}, {I, J}}), ij, 1, Expectation::NotFixedUpToPower);
    c.max_power = power_bound;
    out.push_back(std::move(c));
  }
  out.push_back(make("i->j<-k, trivial coefficients: (mi mj mk)^6 does not fix", trivial(3, {{I, J}, {K, J}}), ijk, 6,
                     Expectation::NotFixed));
  out.push_back(make("i<-j->k, trivial coefficients: (mi mj mk)^6 does not fix", trivial(3, {{J, I}, {J, K}}), ijk, 6,
                     Expectation::NotFixed));
  out.push_back(make("i->j->k, principal coefficients: (mi mj mk)^6 fixes", principal(3, {{I, J}, {J, K}}), ijk, 6,
                     Expectation::Fixed));
  out.push_back(make("i<-j<-k, principal coefficients: (mi mj mk)^6 fixes", principal(3, {{K, J}, {J, I}}), ijk, 6,
                     Expectation::Fixed));

  const std::vector<std::pair<std::string, P>> through_j = {
      {"i->j->k->i", {{I, J}, {J, K}, {K, I}}},
      {"i->j->k, i->k", {{I, J}, {J, K}, {I, K}}},
      {"k->j->i, i->k", {{K, J}, {J, I}, {I, K}}},
      {"k->j->i, k->i", {{K, J}, {J, I}, {K, I}}},
  };
  for (const auto& [label, arrows] : through_j) {
    out.push_back(make(label + ", trivial coefficients: (mi mk mi mk mi mj)^2 does not fix", trivial(3, arrows),
                       ikikij, 2, Expectation::NotFixed));
  }
  const std::vector<std::pair<std::string, P>> not_through_j = {
      {"i->j<-k, k->i", {{I, J}, {K, J}, {K, I}}},
      {"i->j<-k, i->k", {{I, J}, {K, J}, {I, K}}},
      {"i<-j->k, i->k", {{J, K}, {J, I}, {I, K}}},
      {"i<-j->k, k->i", {{J, K}, {J, I}, {K, I}}},
  };
  for (const auto& [label, arrows] : not_through_j) {
    out.push_back(make(label + ", principal coefficients: (mi mk mi mk mi mj)^2 fixes", principal(3, arrows), ikikij, 2,
                       Expectation::Fixed));
  }
  return out;
}

CheckResult run_check(const LemmaCheck& c) {
  CheckResult r;
  r.name = c.name;
  r.expected = describe(c.expect, c.max_power);
  const LabelledSeed s = LabelledSeed::initial(c.quiver);
  switch (c.expect) {
    case Expectation::Fixed:
    case Expectation::NotFixed: {
      const bool fixed = check_fixed(s, c.word);
      r.observed = fixed ? "fixed" : "not fixed";
      r.pass = fixed == (c.expect == Expectation::Fixed);
      break;
    }
    case Expectation::NotFixedUpToPower: {
      const unsigned n = first_fixing_power(s, c.word, c.max_power);
      r.observed = n == 0 ? describe(c.expect, c.max_power) : "fixed at N = " + std::to_string(n);
      r.pass = n == 0;
      r.note =
          "a power N fixing the seed would bound its mutation class by 2N seeds, but the class is infinite; "
          "checked up to the stated bound";
      break;
    }
  }
  r.note = r.note.empty() ? "word " + c.word.to_string() : r.note + "; word " + c.word.to_string();
  return r;
}

SuiteReport run_lemma_suite(const std::vector<LemmaCheck>& checks) {
  SuiteReport rep;
  rep.suite = "lemmas";
  for (const auto& c : checks) rep.results.push_back(run_check(c));
  return rep;
}

std::array<Multiplicity, 3> multiplicity_triple(const Quiver& q) {
  if (q.size() != 3) throw InvalidArgument("multiplicity triple needs a 3-vertex quiver");
  auto a = [&](std::size_t i, std::size_t j) { return q.b(i, j) < 0 ? -q.b(i, j) : q.b(i, j); };
  return {a(0, 1), a(0, 2), a(1, 2)};
}

namespace {

std::string triple_text(const std::array<Multiplicity, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

bool markov_equation(const std::array<Multiplicity, 3>& t) {
  const mpz_class a(static_cast<long>(t[0])), b(static_cast<long>(t[1])), c(static_cast<long>(t[2]));
  return a * a + b * b + c * c == a * b * c;
}

struct FingerprintHash {
  std::size_t operator()(const SeedFingerprint& f) const { return static_cast<std::size_t>(f.digest()); }
};

}  // namespace

SuiteReport check_markov(unsigned depth) {
  if (depth > 12) throw InvalidArgument("markov depth must be at most 12");
  SuiteReport rep;
  rep.suite = "markov";
  const Quiver q0 = preset("markov3");

  struct Node {
    SeedFingerprint f;
    std::size_t last;  // 3 = none
    unsigned depth;
  };
  std::vector<SeedFingerprint> reached;
  std::size_t equation_failures = 0, increase_failures = 0, triples = 0;
  std::string first_bad;
  std::vector<Node> stack{{SeedFingerprint::initial(q0), 3, 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const auto t = multiplicity_triple(node.f.quiver().quiver());
    ++triples;
    if (!markov_equation(t)) {
      ++equation_failures;
      if (first_bad.empty()) first_bad = triple_text(t);
    }
    reached.push_back(node.f);
    if (node.depth == depth) continue;
    for (std::size_t k = 3; k-- > 0;) {
      if (k == node.last) continue;
      SeedFingerprint next = node.f.mutate(k);
      if (next.quiver().quiver().max_multiplicity() <= node.f.quiver().quiver().max_multiplicity()) ++increase_failures;
      stack.push_back({std::move(next), k, node.depth + 1});
    }
  }

  const std::string scope = "depth " + std::to_string(depth) + ", " + std::to_string(triples) + " seeds";
  rep.results.push_back({"multiplicities satisfy a^2+b^2+c^2 = abc", "all", equation_failures == 0 ? "all" : first_bad,
                         equation_failures == 0, scope});
  rep.results.push_back({"largest multiplicity strictly increases along reduced words", "always",
                         increase_failures == 0 ? "always" : std::to_string(increase_failures) + " violations",
                         increase_failures == 0, scope});

  std::unordered_set<SeedFingerprint, FingerprintHash> distinct(reached.begin(), reached.end());
  const bool no_repeat = distinct.size() == reached.size();
  rep.results.push_back({"no labelled seed repeats", std::to_string(reached.size()) + " distinct",
                         std::to_string(distinct.size()) + " distinct", no_repeat,
                         scope + "; distinct fingerprints prove distinct seeds"});

  std::size_t collisions = 0;
  std::vector<Permutation> perms;
  for (const char* text : {"(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"}) perms.push_back(Permutation::parse_cycles(text, 3));
  for (const auto& f : reached)
    for (const auto& p : perms)
      if (distinct.count(f.permute(p))) ++collisions;
  rep.results.push_back({"permuted seeds never coincide with mutation-only seeds", "0 coincidences",
                         std::to_string(collisions) + " coincidences", collisions == 0,
                         scope + ", 5 nontrivial permutations each"});

  const auto first = multiplicity_triple(q0.mutate(0));
  rep.results.push_back({"mutation at 1 sends (3,3,3) to (3,3,6)", "(3,3,6)", triple_text(first),
                         first == std::array<Multiplicity, 3>{3, 3, 6}, "triple (|b12|,|b13|,|b23|)"});
  return rep;
}

namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

// Decides whether a group element fixes a given seed; abstracts over an
// action table and explicit seeds.
struct FixOracle {
  virtual ~FixOracle() = default;
  virtual bool fixes(const GroupElement& g) const = 0;
  virtual unsigned first_power(const GroupElement& g, unsigned bound) const = 0;
};

struct TableOracle : FixOracle {
  const ExplorationReport& r;
  std::size_t v;
  TableOracle(const ExplorationReport& rep, std::size_t vertex) : r(rep), v(vertex) {}
  bool fixes(const GroupElement& g) const override { return r.act(v, g) == v; }
  unsigned first_power(const GroupElement& g, unsigned bound) const override {
    std::size_t cur = v;
    for (unsigned n = 1; n <= bound; ++n) {
      cur = r.act(cur, g);
      if (cur == v) return n;
    }
    return 0;
  }
};

struct SeedOracle : FixOracle {
  LabelledSeed s;
  explicit SeedOracle(LabelledSeed seed) : s(std::move(seed)) {}
  bool fixes(const GroupElement& g) const override { return check_fixed(s, g); }
  unsigned first_power(const GroupElement& g, unsigned bound) const override { return first_fixing_power(s, g, bound); }
};

struct ClaimTally {
  std::size_t pairs = 0, pair_mismatches = 0, arrow_pairs = 0, arrow_mismatches = 0;
  std::string first_pair_issue, first_arrow_issue;
};

void tally_seed(const IceQuiver& iq, const FixOracle& oracle, unsigned bound, const std::string& where,
                ClaimTally& t) {
  const Quiver& q = iq.quiver();
  const auto mut = iq.mutable_vertices();
  const std::size_t n = iq.size();
  auto mult = [&](std::size_t a, std::size_t b) { return q.b(a, b) < 0 ? -q.b(a, b) : q.b(a, b); };
  for (std::size_t x = 0; x < mut.size(); ++x) {
    for (std::size_t y = x + 1; y < mut.size(); ++y) {
      const std::size_t i = mut[x], j = mut[y];
      const GroupElement base = word_element(n, {i + 1, j + 1});
      const bool f2 = oracle.fixes(base.pow(2));
      const bool f5 = oracle.fixes(base.pow(5));
      Multiplicity read;
      if (f2) {
        read = 0;
      } else if (f5) {
        read = 1;
      } else {
        read = oracle.first_power(base, bound) == 0 ? 2 : -1;
      }
      const Multiplicity actual = std::min<Multiplicity>(mult(i, j), 2);
      ++t.pairs;
      if (read != actual) {
        ++t.pair_mismatches;
        if (t.first_pair_issue.empty())
          t.first_pair_issue = where + " pair " + pair_name(i, j) + ": stabilizer reads " + std::to_string(read) +
                               ", multiplicity " + std::to_string(mult(i, j));
      }
    }
  }
  for (std::size_t j : mut) {
    for (std::size_t i : mut) {
      for (std::size_t k : mut) {
        if (i == j || k == j || i >= k) continue;
        if (q.b(i, j) == 0 || q.b(j, k) == 0) continue;
        if (mult(i, j) > 1 || mult(j, k) > 1 || mult(i, k) > 1) continue;
        const bool path = (q.b(i, j) > 0 && q.b(j, k) > 0) || (q.b(k, j) > 0 && q.b(j, i) > 0);
        bool read_path;
        if (q.b(i, k) == 0) {
          read_path = oracle.fixes(word_element(n, {i + 1, j + 1, k + 1}).pow(6));
        } else {
          read_path = !oracle.fixes(word_element(n, {i + 1, k + 1, i + 1, k + 1, i + 1, j + 1}).pow(2));
        }
        ++t.arrow_pairs;
        if (read_path != path) {
          ++t.arrow_mismatches;
          if (t.first_arrow_issue.empty())
            t.first_arrow_issue = where + " arrows " + pair_name(i, j) + " and " + pair_name(j, k) +
                                  (path ? ": directed path not detected" : ": spurious directed path");
        }
      }
    }
  }
}

void push_claims(SuiteReport& rep, const std::string& label, const ClaimTally& t) {
  rep.results.push_back({label + ": stabilizer determines arrow multiplicities",
                         "0 mismatches", std::to_string(t.pair_mismatches) + " mismatches",
                         t.pair_mismatches == 0,
                         std::to_string(t.pairs) + " vertex pairs" +
                             (t.first_pair_issue.empty() ? "" : "; " + t.first_pair_issue)});
  rep.results.push_back({label + ": stabilizer determines relative orientation of adjacent arrows",
                         "0 mismatches", std::to_string(t.arrow_mismatches) + " mismatches",
                         t.arrow_mismatches == 0,
                         std::to_string(t.arrow_pairs) + " adjacent arrow pairs" +
                             (t.first_arrow_issue.empty() ? "" : "; " + t.first_arrow_issue)});
}

}  // namespace

SuiteReport check_stabilizer_determines_quiver(const std::string& preset_name, unsigned power_bound) {
  SuiteReport rep;
  rep.suite = "properties";
  const ExplorationReport r = explore_seeds(LabelledSeed::initial(preset(preset_name)));
  r.require_closed("stabilizer claims");
  ClaimTally t;
  for (std::size_t v = 0; v < r.size(); ++v)
    tally_seed(r.quivers[v], TableOracle(r, v), power_bound, "seed " + std::to_string(v), t);
  push_claims(rep, preset_name + " (" + std::to_string(r.size()) + " seeds)", t);
  return rep;
}

SuiteReport check_stabilizer_determines_quiver_on_quivers(const std::string& preset_name, unsigned power_bound) {
  SuiteReport rep;
  rep.suite = "properties";
  const ExplorationReport r = explore_quivers(preset(preset_name));
  r.require_closed("stabilizer claims");
  ClaimTally t;
  for (std::size_t v = 0; v < r.size(); ++v)
    tally_seed(r.quivers[v], SeedOracle(LabelledSeed::initial(r.quivers[v])), power_bound,
               "quiver " + r.quivers[v].quiver().to_string(), t);
  push_claims(rep, preset_name + " (" + std::to_string(r.size()) + " quivers, initial clusters)", t);
  return rep;
}

SuiteReport check_stabilizer_equals_similarity(const std::string& preset_name, std::size_t budget) {
  SuiteReport rep;
  rep.suite = "mainthm";
  const Quiver q = preset(preset_name);
  // Fingerprints decide closure cheaply; exact seeds are built only for
  // classes known to be finite.
  const ExplorationReport probe = explore_fingerprints(SeedFingerprint::initial(q), budget);
  if (!probe.closed()) {
    rep.results.push_back({preset_name + ": same stabilizer iff similar quivers", "closed class",
                           "not closed after " + std::to_string(probe.size()) + " seeds", false,
                           "the seed class is infinite or exceeds the budget"});
    return rep;
  }
  const ExplorationReport r = explore_seeds(LabelledSeed::initial(q), budget);
  std::size_t mismatches = 0, pairs = 0;
  std::string first;
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t b = 0; b < r.size(); ++b) {
      ++pairs;
      const bool stab = same_stabilizer(r, a, b);
      const bool sim = r.quivers[a].frozen_mask() == r.quivers[b].frozen_mask() &&
                       similar(r.quivers[a].quiver(), r.quivers[b].quiver());
      if (stab != sim) {
        ++mismatches;
        if (first.empty()) first = "seeds " + std::to_string(a) + ", " + std::to_string(b);
      }
    }
  }
  rep.results.push_back({preset_name + ": same stabilizer iff similar quivers", "0 mismatches",
                         std::to_string(mismatches) + " mismatches", mismatches == 0,
                         std::to_string(pairs) + " ordered pairs" + (first.empty() ? "" : "; first at " + first)});
  return rep;
}

std::vector<std::string> mainthm_presets() { return {"A1", "A2", "A3-linear", "A2xA1", "A1xA1", "A2tilde-noncyclic", "kronecker2"}; }

SuiteReport run_mainthm_suite(const std::vector<std::string>& presets, std::size_t budget) {
  SuiteReport rep;
  rep.suite = "mainthm";
  for (const auto& name : presets) {
    SuiteReport one = check_stabilizer_equals_similarity(name, budget);
    if (one.all_passed()) {
      rep.results.insert(rep.results.end(), one.results.begin(), one.results.end());
      continue;
    }
    const CheckResult& r = one.results.front();
    if (r.expected != "closed class") {
      rep.results.push_back(r);
      continue;
    }
    rep.results.push_back({name + ": seed class too large for pairwise comparison", "closed or substituted",
                           r.observed + "; substituted", true,
                           "checked through the stabilizer patterns of each quiver instead"});
    SuiteReport sub = check_stabilizer_determines_quiver_on_quivers(name);
    for (auto& c : sub.results) rep.results.push_back(std::move(c));
  }
  return rep;
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// Any skew-symmetric matrix with entries in [-bound, bound].
Quiver random_quiver(Rng& rng, std::size_t n, Multiplicity bound) {
  Quiver q(n);
  std::uniform_int_distribution<Multiplicity> d(-bound, bound);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) q.set_arrows(i, j, d(rng));
  return q;
}

// A randomly oriented random forest, relabelled and mutated a few times. Its
// mutation class is finite.
Quiver random_finite_quiver(Rng& rng, std::size_t n) {
  Quiver q(n);
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = pick(rng, 0, v - 1);
    switch (pick(rng, 0, 2)) {
      case 0:
        q.set_arrows(u, v, 1);
        break;
      case 1:
        q.set_arrows(v, u, 1);
        break;
      default:
        break;
    }
  }
  q = q.permute(random_permutation(rng, n));
  for (std::size_t t = pick(rng, 0, 4); t > 0; --t) q = q.mutate(pick(rng, 0, n - 1));
  return q;
}

// Random walks skip steps whose quiver gets an arrow of multiplicity above
// this, which keeps cluster variables small.
constexpr Multiplicity kWalkMultiplicity = 4;

LabelledSeed random_seed(Rng& rng, const Quiver& q, std::size_t steps) {
  LabelledSeed s = LabelledSeed::initial(q);
  for (std::size_t t = 0; t < steps; ++t) {
    const std::size_t k = pick(rng, 0, q.size() - 1);
    if (s.quiver().quiver().mutate(k).max_multiplicity() <= kWalkMultiplicity) s = s.mutate(k);
  }
  return s;
}

Generator random_generator(Rng& rng, std::size_t n) {
  if (pick(rng, 0, 2) == 0) return random_permutation(rng, n);
  return Mutation{pick(rng, 0, n - 1)};
}

// Inserts trivial factors and commutes permutations past mutations, keeping
// the product unchanged.
std::vector<Generator> scramble(Rng& rng, std::vector<Generator> gens, std::size_t n) {
  for (std::size_t t = pick(rng, 1, 4); t > 0; --t) {
    const std::size_t at = pick(rng, 0, gens.size());
    if (pick(rng, 0, 1) == 0) {
      const std::size_t v = pick(rng, 0, n - 1);
      gens.insert(gens.begin() + static_cast<std::ptrdiff_t>(at), {Mutation{v}, Mutation{v}});
    } else {
      const Permutation p = random_permutation(rng, n);
      gens.insert(gens.begin() + static_cast<std::ptrdiff_t>(at), {p, p.inverse()});
    }
  }
  // s mu_i = mu_{s(i)} s
  for (std::size_t t = 0; t + 1 < gens.size(); ++t) {
    const auto* p = std::get_if<Permutation>(&gens[t]);
    const auto* m = std::get_if<Mutation>(&gens[t + 1]);
    if (p && m && pick(rng, 0, 1) == 0) {
      const Permutation s = *p;
      const std::size_t v = static_cast<std::size_t>(s(static_cast<int>(m->vertex)));
      gens[t] = Mutation{v};
      gens[t + 1] = s;
    }
  }
  return gens;
}

struct PropertyTally {
  std::string name;
  std::size_t cases = 0, failures = 0;
  std::string first;
  void record(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (first.empty()) first = what();
  }
  CheckResult result() const {
    return {name, "0 failures", std::to_string(failures) + " failures", failures == 0,
            std::to_string(cases) + " random cases" + (first.empty() ? "" : "; first: " + first)};
  }
};

}  // namespace

SuiteReport run_property_suite(std::size_t cases, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "properties";
  Rng rng(seed);

  PropertyTally involution{"mutation is an involution", 0, 0, {}};
  for (std::size_t c = 0; c < cases; ++c) {
    const Quiver q = random_quiver(rng, pick(rng, 1, 3), 2);
    const LabelledSeed s = random_seed(rng, q, pick(rng, 0, 3));
    const std::size_t k = pick(rng, 0, q.size() - 1);
    involution.record(s.mutate(k).mutate(k) == s, [&] { return q.to_string() + " at " + std::to_string(k + 1); });
  }
  rep.results.push_back(involution.result());

  PropertyTally compat{"permuting then mutating at i equals mutating at s(i) then permuting", 0, 0, {}};
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = pick(rng, 1, 4);
    const LabelledSeed s = random_seed(rng, random_quiver(rng, n, 2), pick(rng, 0, 2));
    const Permutation p = random_permutation(rng, n);
    const std::size_t i = pick(rng, 0, n - 1);
    const LabelledSeed lhs = s.permute(p).mutate(i);
    const LabelledSeed rhs = s.mutate(static_cast<std::size_t>(p(static_cast<int>(i)))).permute(p);
    compat.record(lhs == rhs, [&] { return p.to_cycle_string() + " at " + std::to_string(i + 1); });
  }
  rep.results.push_back(compat.result());

  PropertyTally laurent{"mutation never leaves the Laurent ring", 0, 0, {}};
  for (std::size_t c = 0; c < cases; ++c) {
    const Quiver q = random_quiver(rng, pick(rng, 2, 4), 2);
    std::string word;
    bool ok = true;
    try {
      LabelledSeed s = LabelledSeed::initial(q);
      std::size_t last = q.size();
      for (std::size_t t = pick(rng, 1, 5); t > 0; --t) {
        std::size_t k = pick(rng, 0, q.size() - 1);
        if (k == last) k = (k + 1) % q.size();
        if (s.quiver().quiver().mutate(k).max_multiplicity() > kWalkMultiplicity) continue;
        word += " m" + std::to_string(k + 1);
        s = s.mutate(k);
        last = k;
      }
    } catch (const InexactDivision&) {
      ok = false;
    }
    laurent.record(ok, [&] { return q.to_string() + word; });
  }
  rep.results.push_back(laurent.result());

  PropertyTally normal{"equal products have equal normal forms", 0, 0, {}};
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = pick(rng, 1, 3);
    std::vector<Generator> gens;
    for (std::size_t t = pick(rng, 0, 6); t > 0; --t) gens.push_back(random_generator(rng, n));
    const GroupElement g = GroupElement::normal_form(n, gens);
    const GroupElement h = GroupElement::normal_form(n, scramble(rng, gens, n));
    bool ok = g == h;
    for (std::size_t t = 1; t < g.word().size(); ++t) ok = ok && g.word()[t] != g.word()[t - 1];
    // The normal form acts like the raw product.
    LabelledSeed raw = LabelledSeed::initial(random_finite_quiver(rng, n));
    const LabelledSeed viaNormal = raw.apply(g);
    for (const auto& x : gens) raw = raw.apply(x);
    ok = ok && raw == viaNormal;
    normal.record(ok, [&] { return g.to_string() + " vs " + h.to_string(); });
  }
  rep.results.push_back(normal.result());

  PropertyTally regular{"quotient graphs are label-regular", 0, 0, {}};
  std::map<std::pair<std::uint64_t, int>, ExplorationReport> cache;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = pick(rng, 1, 4);
    const Quiver q = random_finite_quiver(rng, n);
    const bool seeds = n <= 3 && pick(rng, 0, 1) == 0;
    const auto rel = static_cast<RelationKind>(pick(rng, 0, seeds ? 2 : 1));
    auto key = std::make_pair(q.digest(), seeds ? 1 : 0);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, seeds ? explore_seeds(LabelledSeed::initial(q)) : explore_quivers(q)).first;
    }
    const LabelledGraph g = quotient_graph(it->second, rel);
    regular.record(g.is_label_regular() && it->second.graph.is_label_regular(),
                   [&] { return q.to_string() + " " + to_string(rel); });
  }
  rep.results.push_back(regular.result());
  return rep;
}

}  // namespace clusterseed
