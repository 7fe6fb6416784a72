// Induction over a finite partial order with a meet-closed, good predicate.
//
// Goodness sends each element x either to evidence that the predicate holds
// at x, or to a reduction x = y /\ z with x < y and x < z.  Evidence is then
// computed by memoized recursion on strictly larger elements and merged
// across the meet by `combine`.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace nilcert {

template <class T>
struct FinitePoset {
  std::vector<T> elements;
  std::function<bool(const T&, const T&)> leq;
  /// Greatest lower bound when it exists.
  std::function<std::optional<T>(const T&, const T&)> meet;

  bool less(const T& x, const T& y) const { return leq(x, y) && !leq(y, x); }
};

template <class E>
struct Holds {
  E evidence;
};

template <class T>
struct Reduce {
  T y;
  T z;
};

template <class T, class E>
using GoodnessOutcome = std::variant<Holds<E>, Reduce<T>>;

class NotReducible : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class T, class E>
struct InductionResult {
  std::map<T, E> evidence;
  std::map<T, std::pair<T, T>> reductions;  // only for reduced elements
};

template <class T, class E>
class Induction {
 public:
  using Goodness = std::function<GoodnessOutcome<T, E>(const T&)>;
  /// combine(x, y, z, evidence at y, evidence at z) -> evidence at x
  using Combine = std::function<E(const T&, const T&, const T&, const E&, const E&)>;

  Induction(FinitePoset<T> poset, Goodness goodness, Combine combine)
      : poset_(std::move(poset)), goodness_(std::move(goodness)), combine_(std::move(combine)) {}

  const E& evidence_for(const T& x) {
    if (auto it = result_.evidence.find(x); it != result_.evidence.end()) return it->second;
    if (!active_.insert(x).second) throw NotReducible("reduction cycle in a finite poset");
    auto outcome = goodness_(x);
    E ev;
    if (auto* holds = std::get_if<Holds<E>>(&outcome)) {
      ev = std::move(holds->evidence);
    } else {
      auto& red = std::get<Reduce<T>>(outcome);
      check_reduction(x, red);
      result_.reductions.emplace(x, std::make_pair(red.y, red.z));
      const E& ey = evidence_for(red.y);
      const E& ez = evidence_for(red.z);
      ev = combine_(x, red.y, red.z, ey, ez);
    }
    active_.erase(x);
    return result_.evidence.emplace(x, std::move(ev)).first->second;
  }

  /// Evidence at every element of the poset.
  const InductionResult<T, E>& run_all() {
    for (const auto& x : poset_.elements) evidence_for(x);
    return result_;
  }

  const InductionResult<T, E>& result() const { return result_; }

 private:
  void check_reduction(const T& x, const Reduce<T>& red) const {
    if (!poset_.less(x, red.y) || !poset_.less(x, red.z))
      throw NotReducible("reduction components do not strictly dominate the element");
    const auto m = poset_.meet(red.y, red.z);
    if (!m || !poset_.leq(*m, x) || !poset_.leq(x, *m))
      throw NotReducible("reduction components do not meet back to the element");
  }

  FinitePoset<T> poset_;
  Goodness goodness_;
  Combine combine_;
  InductionResult<T, E> result_;
  std::set<T> active_;
};

template <class T, class E>
InductionResult<T, E> run_induction(FinitePoset<T> poset,
                                    typename Induction<T, E>::Goodness goodness,
                                    typename Induction<T, E>::Combine combine) {
  Induction<T, E> induction(std::move(poset), std::move(goodness), std::move(combine));
  return induction.run_all();
}

}  // namespace nilcert
