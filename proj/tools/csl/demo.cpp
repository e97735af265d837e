#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "commands.hpp"
#include "csl/convex_set.hpp"
#include "csl/json_codec.hpp"

namespace csl::cli {

namespace {

Dist half(const char* a, const char* b) {
  return dist_make({{Atom(a), Rational(1, 2)}, {Atom(b), Rational(1, 2)}});
}

void require(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("non-natural demo: ") + what);
}

}  // namespace

int demo_non_natural(std::ostream& out) {
  // X = {x, y, z}, Y = {a, b}; f collapses x and y.
  const auto f = [](const Atom& v) { return Atom(v.name() == "z" ? "b" : "a"); };
  const GeneratorSet s({half("x", "y"), half("x", "z"), d_unit(Atom("z"))});

  const ConvexSet conv_s = unique_base(s);
  const auto image = pne_d_map_then_base(f, GeneratorSet(conv_s.base()));
  const ConvexSet mapped = c_map(f, conv_s);

  const auto& raw = image.raw.generators();
  const auto& base = mapped.base();
  const bool raw_is_base = unique_base(image.raw).base() == raw;
  const bool equal = raw == base;
  const bool included = std::all_of(base.begin(), base.end(), [&](const Dist& d) {
    return std::find(raw.begin(), raw.end(), d) != raw.end();
  });

  require(conv_s.base() == s.generators(), "S should already be a base");
  require(image.base == mapped, "base of the raw image should equal the base of C f(conv S)");
  require(!equal, "the two sides should differ");
  require(included, "the base should be included in the raw image");

  out << "X = {x, y, z}, Y = {a, b}, f(x) = f(y) = a, f(z) = b\n";
  out << "base of conv S:          " << convex_set_to_json(conv_s) << '\n';
  out << "raw image D f[base]:     " << generator_set_to_json(image.raw) << '\n';
  out << "base of C f(conv S):     " << convex_set_to_json(mapped) << '\n';
  out << "raw image is a base:     " << (raw_is_base ? "yes" : "no") << '\n';
  out << "raw image == base:       " << (equal ? "yes" : "no") << '\n';
  out << "base included in image:  " << (included ? "yes" : "no") << '\n';
  out << "conclusion: taking unique bases is not natural in X\n";
  return kExitOk;
}

}  // namespace csl::cli
