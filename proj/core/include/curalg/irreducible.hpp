#pragma once

#include "curalg/truncated_module.hpp"

namespace curalg {

// V(lambda, r): the irreducible g-module at grade r with g (x) t^k acting by
// zero for k >= 1. The lambda weight space is the line of the highest weight vector.
TruncatedModule irreducible_module(std::shared_ptr<const LieAlgebra> g, const Weight& lambda, int r = 0);

}  // namespace curalg
