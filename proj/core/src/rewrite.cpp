#include "csl/rewrite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "csl/interpretation.hpp"

namespace csl {

namespace {

std::optional<Term> rewrite_root(const Term& t) {
  if (!t.is_mix()) return std::nullopt;
  const Rational& p = t.probability();
  const Term& l = t.left();
  const Term& r = t.right();
  if (l.is_or()) {
    return Term::choice(Term::mix(p, l.left(), r), Term::mix(p, l.right(), r));
  }
  if (r.is_or()) {
    return Term::choice(Term::mix(p, l, r.left()), Term::mix(p, l, r.right()));
  }
  return std::nullopt;
}

void collect_summands(const Term& t, std::vector<PTerm>& out) {
  if (t.is_or()) {
    collect_summands(t.left(), out);
    collect_summands(t.right(), out);
    return;
  }
  out.emplace_back(t);
}

}  // namespace

Term NPForm::to_term() const {
  if (summands.empty()) throw std::logic_error("NPForm: no summands");
  Term acc = summands.front().term();
  for (std::size_t i = 1; i < summands.size(); ++i) {
    acc = Term::choice(std::move(acc), summands[i].term());
  }
  return acc;
}

std::optional<Term> rewrite_step(const Term& t) {
  if (t.is_leaf()) return std::nullopt;
  if (auto l = rewrite_step(t.left())) {
    return t.is_or() ? Term::choice(std::move(*l), t.right())
                     : Term::mix(t.probability(), std::move(*l), t.right());
  }
  if (auto r = rewrite_step(t.right())) {
    return t.is_or() ? Term::choice(t.left(), std::move(*r))
                     : Term::mix(t.probability(), t.left(), std::move(*r));
  }
  return rewrite_root(t);
}

std::optional<Normalization> normalize(const Term& t, std::size_t step_budget) {
  Normalization n{t, 0};
  while (auto next = rewrite_step(n.result)) {
    if (n.steps == step_budget) return std::nullopt;
    n.result = std::move(*next);
    ++n.steps;
  }
  return n;
}

NPForm flatten_np(const Term& t) {
  if (!is_np_form(t)) throw std::invalid_argument("flatten_np: '" + print_term(t) + "' is not in n-p form");
  NPForm form;
  collect_summands(t, form.summands);

  struct Keyed {
    Dist value;
    std::string text;
    PTerm term;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(form.summands.size());
  for (auto& s : form.summands) keyed.push_back({iota_p(s), print_term(s.term()), s});
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.text < b.text;
  });
  form.summands.clear();
  for (auto& k : keyed) form.summands.push_back(std::move(k.term));
  return form;
}

NPForm rewrite_np(const Term& t) { return flatten_np(normalize(t)->result); }

}  // namespace csl
