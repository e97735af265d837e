// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "csl/convex_set.hpp"
#include "csl/interpretation.hpp"
#include "csl/json_codec.hpp"
#include "csl/rewrite.hpp"
#include "support/fourier_motzkin.hpp"
#include "support/generators.hpp"

namespace {

using namespace csl;
using testing::Rng;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_seconds;  // <= 0 means no limit
  std::function<Verdict()> check;
};

std::string text_of(const ConvexSet& s) { return convex_set_to_json(s); }

Verdict golden_demo() {
  Verdict v;
  std::ostringstream out, err;
  std::istringstream in;
  const int code = cli::run({"demo", "non-natural"}, in, out, err);
  if (code != 0) v.fail("exit code " + std::to_string(code));
  const std::string report = out.str();
  const char* raw =
      R"({"generators":[[{"atom":"a","weight":"1/2"},{"atom":"b","weight":"1/2"}],[{"atom":"a","weight":"1/1"}],[{"atom":"b","weight":"1/1"}]]})";
  const char* base = R"({"base":[[{"atom":"a","weight":"1/1"}],[{"atom":"b","weight":"1/1"}]]})";
  if (report.find(std::string("raw image D f[base]:     ") + raw + "\n") == std::string::npos) {
    v.fail("raw image line differs");
  }
  if (report.find(std::string("base of C f(conv S):     ") + base + "\n") == std::string::npos) {
    v.fail("base line differs");
  }
  if (report.find("raw image == base:       no\n") == std::string::npos) v.fail("sides not reported different");
  if (report.find("base included in image:  yes\n") == std::string::npos) v.fail("inclusion not reported");
  v.detail = v.ok ? "raw image {1/2a+1/2b, a, b}, base {a, b}" : v.detail;
  return v;
}

Verdict golden_normalization() {
  Verdict v;
  const NPForm form = rewrite_np(parse_term("(mix 1/2 (or x y) (mix 1/3 y z))"));
  std::vector<std::string> summands;
  for (const auto& s : form.summands) summands.push_back(print_term(s.term()));
  if (summands != std::vector<std::string>{"(mix 1/2 x (mix 1/3 y z))", "(mix 1/2 y (mix 1/3 y z))"}) {
    v.fail("n-p form differs: " + print_term(form.to_term()));
  }
  const ConvexSet s = iota(parse_term("(or (mix 1/2 x y) (mix 2/3 x (or x y)))"));
  const ConvexSet expected = from_generators(
      {dist_make({{Atom("x"), Rational(1, 2)}, {Atom("y"), Rational(1, 2)}}), d_unit(Atom("x"))});
  if (s != expected) v.fail("base differs: " + text_of(s));
  if (v.ok) v.detail = print_term(form.to_term()) + "; base " + text_of(s);
  return v;
}

Verdict order_invariance() {
  Verdict v;
  Rng rng(1001);
  for (int i = 0; i < 200 && v.ok; ++i) {
    auto gens = testing::random_generators(rng, 4, 5, 12);
    const ConvexSet expected = unique_base(gens);
    for (int k = 0; k < 4; ++k) {
      std::shuffle(gens.begin(), gens.end(), rng);
      if (unique_base(gens) != expected) v.fail("instance " + std::to_string(i) + " permutation " + std::to_string(k));
    }
  }
  if (v.ok) v.detail = "200 lists x 4 permutations identical";
  return v;
}

Verdict membership_oracle() {
  Verdict v;
  Rng rng(1002);
  int inside = 0;
  for (int i = 0; i < 500 && v.ok; ++i) {
    const auto gens = testing::random_generators(rng, 4, 4, 12);
    const Dist d = testing::coin(rng) ? testing::random_dist(rng, 4)
                                      : convex_combine(testing::random_weights(rng, gens.size()), gens);
    const bool simplex = member_of_hull(d, std::span<const Dist>(gens));
    const bool fm = testing::fm_member_of_hull(d, gens);
    inside += simplex ? 1 : 0;
    if (simplex != fm) v.fail("disagreement on instance " + std::to_string(i) + ": " + dist_to_json(d));
  }
  if (v.ok) v.detail = "500 agree (" + std::to_string(inside) + " members)";
  return v;
}

Verdict algebra_laws() {
  Verdict v;
  Rng rng(1003);
  const char* names[] = {"A", "C", "I", "A_p", "C_p", "I_p", "D"};
  for (int i = 0; i < 300 && v.ok; ++i) {
    const auto s1 = testing::random_set(rng);
    const auto s2 = testing::random_set(rng);
    const auto s3 = testing::random_set(rng);
    const auto p = testing::random_probability(rng);
    const auto q = testing::random_probability(rng);
    const Rational pq = p * q;
    const bool holds[] = {
        convex_union(convex_union(s1, s2), s3) == convex_union(s1, convex_union(s2, s3)),
        convex_union(s1, s2) == convex_union(s2, s1),
        convex_union(s1, s1) == s1,
        minkowski(p, minkowski(q, s1, s2), s3) ==
            minkowski(pq, s1, minkowski(p * (Rational(1) - q) / (Rational(1) - pq), s2, s3)),
        minkowski(p, s1, s2) == minkowski(Rational(1) - p, s2, s1),
        minkowski(p, s1, s1) == s1,
        minkowski(p, convex_union(s1, s2), s3) ==
            convex_union(minkowski(p, s1, s3), minkowski(p, s2, s3)),
    };
    for (int k = 0; k < 7; ++k) {
      if (!holds[k]) v.fail(std::string("law (") + names[k] + ") fails on instance " + std::to_string(i));
    }
  }
  if (v.ok) v.detail = "7 laws x 300 instances";
  return v;
}

Verdict monad_laws() {
  Verdict v;
  Rng rng(1004);
  for (int i = 0; i < 200 && v.ok; ++i) {
    const auto n1 = testing::random_nested(rng);
    const auto n2 = testing::random_nested(rng);
    const auto p = testing::random_probability(rng);
    if (c_mult(convex_union(n1, n2)) != convex_union(c_mult(n1), c_mult(n2))) v.fail("union clause, instance " + std::to_string(i));
    if (c_mult(minkowski(p, n1, n2)) != minkowski(p, c_mult(n1), c_mult(n2))) v.fail("mix clause, instance " + std::to_string(i));

    const auto s = testing::random_set(rng);
    if (c_mult(c_unit(s)) != s) v.fail("left unit, instance " + std::to_string(i));
    if (c_mult(c_map([](const Atom& a) { return c_unit(a); }, s)) != s) v.fail("right unit, instance " + std::to_string(i));

    const auto level2 = testing::distinct_pool<ConvexSetOf<ConvexSet>>(
        testing::uniform(rng, 1, 3), [&] { return testing::random_nested(rng); });
    const auto triple = testing::random_set_over(rng, level2, 3);
    const auto flattened_inside =
        c_map([](const ConvexSetOf<ConvexSet>& n) { return c_mult(n); }, triple);
    if (c_mult(c_mult(triple)) != c_mult(flattened_inside)) v.fail("associativity, instance " + std::to_string(i));
  }
  if (v.ok) v.detail = "2 homomorphism clauses + 3 monad laws x 200";
  return v;
}

Verdict rewriting() {
  Verdict v;
  Rng rng(1005);
  std::size_t max_steps = 0;
  std::size_t total_steps = 0;
  for (int i = 0; i < 300 && v.ok; ++i) {
    Term t = testing::random_term(rng, 8);
    IotaCache meaning_of;
    const ConvexSet meaning = meaning_of(t);
    std::size_t steps = 0;
    while (auto next = rewrite_step(t)) {
      if (++steps > 10000) {
        v.fail("step budget exceeded on term " + std::to_string(i));
        break;
      }
      if (meaning_of(*next) != meaning) {
        v.fail("step changes meaning: " + print_term(t));
        break;
      }
      t = std::move(*next);
    }
    if (v.ok && !is_np_form(t)) v.fail("normal form is not n-p: " + print_term(t));
    max_steps = std::max(max_steps, steps);
    total_steps += steps;
  }
  if (v.ok) {
    v.detail = "300 terms, " + std::to_string(total_steps) + " sound steps, max " + std::to_string(max_steps);
  }
  return v;
}

Verdict round_trips() {
  Verdict v;
  Rng rng(1006);
  for (int i = 0; i < 300 && v.ok; ++i) {
    const ConvexSet s = testing::random_set(rng, 4, 4);
    if (iota(kappa(s)) != s) v.fail("iota(kappa(S)) != S: " + text_of(s));
  }
  for (int i = 0; i < 300 && v.ok; ++i) {
    const Term t = testing::random_term(rng, 8);
    const ConvexSet meaning = iota(t);
    const Term c = canon(t);
    if (iota(c) != meaning) v.fail("canon changes meaning: " + print_term(t));
    if (canon(c) != c) v.fail("canon not idempotent: " + print_term(t));

    std::vector<Dist> values;
    for (const auto& s : flatten_np(c).summands) values.push_back(iota_p(s));
    if (values != meaning.base()) v.fail("summands are not the base: " + print_term(t));
    for (std::size_t k = 0; k < values.size() && v.ok; ++k) {
      std::vector<Dist> others = values;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
      if (member_of_hull(values[k], std::span<const Dist>(others))) v.fail("redundant summand: " + print_term(t));
    }
  }
  if (v.ok) v.detail = "300 sets, 300 terms";
  return v;
}

Verdict convexity_and_chain() {
  Verdict v;
  Rng rng(1007);
  for (int i = 0; i < 200 && v.ok; ++i) {
    const Term t1 = testing::random_term(rng, 5);
    const Term t2 = testing::random_term(rng, 5);
    const Rational p = testing::random_probability(rng);
    const Term lhs = Term::choice(t1, t2);
    if (!decide_eq(lhs, Term::choice(lhs, Term::mix(p, t1, t2)))) {
      v.fail("convexity law fails: " + print_term(lhs));
    }
  }
  const auto names = testing::atoms(6);
  for (int i = 0; i < 200 && v.ok; ++i) {
    const std::size_t n = testing::uniform(rng, 1, names.size());
    const auto weights = testing::random_weights(rng, n, 24);
    const auto chain = binary_chain(weights);
    if (chain.size() + 1 != n) v.fail("chain length");
    for (const auto& q : chain) {
      if (!q.is_open_probability()) v.fail("chain entry outside (0,1): " + q.str());
    }
    std::vector<std::pair<Atom, Rational>> entries;
    for (std::size_t k = 0; k < n; ++k) entries.emplace_back(names[k], weights[k]);
    const Dist d = dist_make(entries);
    if (iota_p(kappa_p(d)) != d) v.fail("kappa_p round trip: " + dist_to_json(d));
  }
  if (v.ok) v.detail = "200 convexity instances, 200 weight vectors";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden non-naturality demo", 1.0, golden_demo},
      {2, "golden normalization and evaluation", 0, golden_normalization},
      {3, "unique-base order invariance", 30.0, order_invariance},
      {4, "membership agrees with Fourier-Motzkin oracle", 0, membership_oracle},
      {5, "convex semilattice laws on CX", 60.0, algebra_laws},
      {6, "multiplication homomorphism and monad laws", 0, monad_laws},
      {7, "rewriting soundness and termination", 0, rewriting},
      {8, "isomorphism round trips and base-of-term", 0, round_trips},
      {9, "convexity law and binary chain", 0, convexity_and_chain},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
      v.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_seconds) + " s");
    }
    failures += v.ok ? 0 : 1;
    std::printf("[%s] %d. %s (%.2f s): %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures == 0 ? 0 : 1;
}
