#include "clusterseed/presets.hpp"

#include "clusterseed/errors.hpp"

namespace clusterseed {

namespace {

struct Arrow {
  std::size_t from;
  std::size_t to;
  Multiplicity count;
};

Quiver build(std::size_t n, std::initializer_list<Arrow> arrows) {
  Quiver q(n);
  for (const auto& a : arrows) q.set_arrows(a.from - 1, a.to - 1, a.count);
  return q;
}

}  // namespace

Quiver preset(std::string_view name) {
  if (name == "A1") return build(1, {});
  if (name == "A2") return build(2, {{1, 2, 1}});
  if (name == "A3-linear") return build(3, {{1, 2, 1}, {2, 3, 1}});
  if (name == "A2tilde-noncyclic") return build(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  if (name == "markov3") return build(3, {{1, 2, 3}, {2, 3, 3}, {3, 1, 3}});
  if (name == "kronecker2") return build(2, {{1, 2, 2}});
  if (name == "A1xA1") return build(2, {});
  if (name == "A2xA1") return build(3, {{1, 2, 1}});
  throw InvalidArgument("unknown preset \"" + std::string(name) + "\"");
}

std::vector<std::string> preset_names() {
  return {"A1", "A2", "A3-linear", "A2tilde-noncyclic", "markov3", "kronecker2", "A1xA1", "A2xA1"};
}

}  // namespace clusterseed
