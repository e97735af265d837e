#include "csl/convex_set.hpp"

namespace csl {

template class GeneratorSetOf<Atom>;
template class ConvexSetOf<Atom>;
template ConvexSet unique_base<Atom>(const GeneratorSet&);
template ConvexSet convex_union<Atom>(const ConvexSet&, const ConvexSet&);
template ConvexSet minkowski<Atom>(const Rational&, const ConvexSet&, const ConvexSet&);
template ConvexSet c_mult<Atom>(const ConvexSetOf<ConvexSet>&);

}  // namespace csl
