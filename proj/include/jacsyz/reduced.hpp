#pragma once

#include <cstdint>

#include "jacsyz/poly.hpp"

namespace jacsyz {

/// Probabilistic reducedness test over Q. Restricts f to random lines
/// z = a x + b y and checks that the restricted binary form is squarefree.
/// A non-reduced f has a repeated factor on every line, so it is always
/// rejected; a reduced f is accepted as soon as one trial line meets the curve
/// transversally, which fails only if every trial line is special.
bool is_reduced_probabilistic(const HomogPoly<RationalField>& f, int trials = 5, std::uint64_t seed = 0x5eed);

}  // namespace jacsyz
