#include "clusterseed/session.hpp"

namespace clusterseed {

Session::Session(const IceQuiver& q)
    : initial_(LabelledSeed::initial(q)), current_(initial_), word_(GroupElement::identity(q.size())) {}

void Session::push(const Generator& g, LabelledSeed next) {
  previous_.push_back(std::move(current_));
  current_ = std::move(next);
  history_.push_back(g);
  word_.append(g);
}

void Session::mutate(std::size_t vertex) {
  current_.quiver().check_mutable(vertex);
  push(Mutation{vertex}, current_.mutate(vertex));
}

void Session::permute(const Permutation& s) {
  current_.quiver().check_permutation(s);
  push(s, current_.permute(s));
}

bool Session::undo() {
  if (history_.empty()) return false;
  current_ = std::move(previous_.back());
  previous_.pop_back();
  history_.pop_back();
  word_ = GroupElement::normal_form(initial_.size(), history_);
  return true;
}

bool Session::consistent() const {
  LabelledSeed replay = initial_;
  for (const auto& g : history_) replay = replay.apply(g);
  return replay == current_ && initial_.apply(word_) == current_ &&
         word_ == GroupElement::normal_form(initial_.size(), history_);
}

}  // namespace clusterseed
