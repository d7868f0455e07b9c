#include "clusterseed/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "clusterseed/errors.hpp"

namespace clusterseed {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.image_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.image_[i] = static_cast<int>(i);
  return p;
}

Permutation Permutation::transposition(std::size_t n, int a, int b) {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
    throw InvalidArgument("transposition point out of range");
  }
  Permutation p = identity(n);
  std::swap(p.image_[static_cast<std::size_t>(a)], p.image_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t n) {
  Permutation result = identity(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("permutation: expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("permutation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 6) {
        throw ParseError("permutation: expected a point in \"" + std::string(text) + "\"");
      }
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw InvalidArgument("permutation: point " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n));
      }
      cycle.push_back(v - 1);
    }
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("permutation: repeated point in a cycle");
    }
    // Cycles compose right to left, as products of permutations do.
    if (cycle.size() > 1) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(i);
      for (std::size_t t = 0; t < cycle.size(); ++t) {
        c[static_cast<std::size_t>(cycle[t])] = cycle[(t + 1) % cycle.size()];
      }
      result = result * Permutation(std::move(c));
    }
    skip_ws();
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    p.image_[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (done[i] || image_[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(image_[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p(q(static_cast<int>(i)));
  return Permutation(std::move(r));
}

}  // namespace clusterseed
