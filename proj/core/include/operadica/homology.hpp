#pragma once

#include <vector>

#include "operadica/linalg.hpp"

namespace operadica {

/// Reduced Betti numbers of a chain complex given by its boundary maps,
/// augmentation included: boundaries[0] is the 1 x dim(C_0) augmentation to
/// degree -1, boundaries[k] maps C_k to C_{k-1}. The result is indexed from
/// degree -1, i.e. result[0] = h~_{-1} and result[d+1] = h~_d.
///
/// Conventions: the empty complex (no 0-chains) has h~_{-1} = 1.
/// Throws if consecutive boundaries do not compose to zero.
std::vector<long> homology_ranks(const std::vector<QMat>& boundaries);

}  // namespace operadica
