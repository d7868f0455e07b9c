#include "clusterseed/group.hpp"

#include <cctype>

#include "clusterseed/errors.hpp"

namespace clusterseed {

GroupElement GroupElement::identity(std::size_t n) {
  GroupElement g;
  g.n_ = n;
  g.perm_ = Permutation::identity(n);
  return g;
}

GroupElement GroupElement::mutation(std::size_t n, std::size_t vertex) {
  GroupElement g = identity(n);
  g.append_mutation(vertex);
  return g;
}

GroupElement GroupElement::permutation(Permutation s) {
  GroupElement g = identity(s.size());
  g.perm_ = std::move(s);
  return g;
}

GroupElement GroupElement::normal_form(std::size_t n, const std::vector<Generator>& gens) {
  GroupElement g = identity(n);
  for (const auto& x : gens) g.append(x);
  return g;
}

void GroupElement::append(const Generator& g) {
  if (const auto* m = std::get_if<Mutation>(&g)) {
    append_mutation(m->vertex);
  } else {
    append_permutation(std::get<Permutation>(g));
  }
}

void GroupElement::append_mutation(std::size_t vertex) {
  if (vertex >= n_) throw InvalidArgument("mutation index " + std::to_string(vertex + 1) + " out of range");
  // w.s.mu_i = w.mu_{s(i)}.s
  const auto letter = static_cast<std::size_t>(perm_(static_cast<int>(vertex)));
  if (!word_.empty() && word_.back() == letter) {
    word_.pop_back();
  } else {
    word_.push_back(letter);
  }
}

void GroupElement::append_permutation(const Permutation& s) {
  if (s.size() != n_) throw InvalidArgument("permutation size differs from group rank");
  perm_ = perm_ * s;
}

std::vector<Generator> GroupElement::generators() const {
  std::vector<Generator> out;
  out.reserve(word_.size() + 1);
  for (std::size_t v : word_) out.emplace_back(Mutation{v});
  if (!perm_.is_identity()) out.emplace_back(perm_);
  return out;
}

std::string GroupElement::to_string() const {
  std::string out;
  for (std::size_t v : word_) {
    if (!out.empty()) out += ' ';
    out += 'm' + std::to_string(v + 1);
  }
  if (out.empty()) out = "id";
  return out + " | " + perm_.to_cycle_string();
}

GroupElement GroupElement::pow(unsigned k) const {
  GroupElement out = identity(n_);
  for (unsigned i = 0; i < k; ++i) out = compose(out, *this);
  return out;
}

GroupElement GroupElement::parse(std::string_view text, std::size_t n) {
  GroupElement g = identity(n);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '|' || c == '*' || c == '.') {
      ++pos;
    } else if (c == 'm' || c == 'M') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 6) throw ParseError("group element: expected index after 'm'");
      const int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw InvalidArgument("group element: mutation index " + std::to_string(v) + " out of range");
      }
      g.append_mutation(static_cast<std::size_t>(v - 1));
    } else if (c == '(') {
      // A run of adjacent cycles such as "(1 2)(3 4)" or "(1 2) (3 4)".
      std::size_t start = pos;
      for (;;) {
        const std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos) throw ParseError("group element: unterminated cycle");
        pos = close + 1;
        std::size_t look = pos;
        while (look < text.size() && text[look] == ' ') ++look;
        if (look < text.size() && text[look] == '(') {
          pos = look;
          continue;
        }
        break;
      }
      g.append_permutation(Permutation::parse_cycles(text.substr(start, pos - start), n));
    } else if (text.substr(pos, 2) == "id") {
      pos += 2;
    } else {
      throw ParseError("group element: unexpected character '" + std::string(1, c) + "' in \"" +
                       std::string(text) + "\"");
    }
  }
  return g;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.rank() != h.rank()) throw InvalidArgument("composing elements of different rank");
  GroupElement out = g;
  for (std::size_t v : h.word()) out.append_mutation(v);
  out.append_permutation(h.perm());
  return out;
}

GroupElement invert(const GroupElement& g) {
  // (w s)^{-1} = s^{-1} reverse(w)
  GroupElement out = GroupElement::permutation(g.perm().inverse());
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) out.append_mutation(*it);
  return out;
}

GroupElement word_element(std::size_t n, const std::vector<std::size_t>& one_based_letters) {
  GroupElement g = GroupElement::identity(n);
  for (std::size_t v : one_based_letters) {
    if (v == 0) throw InvalidArgument("letters are one-based");
    g.append_mutation(v - 1);
  }
  return g;
}

}  // namespace clusterseed
