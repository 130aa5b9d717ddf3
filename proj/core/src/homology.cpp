#include "operadica/homology.hpp"

#include <stdexcept>

namespace operadica {

std::vector<long> homology_ranks(const std::vector<QMat>& boundaries) {
  if (boundaries.empty() || boundaries[0].rows != 1)
    throw std::invalid_argument("first boundary must be the 1-row augmentation");
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    if (boundaries[i].cols != boundaries[i + 1].rows)
      throw std::invalid_argument("boundary matrices not composable");
    if (!(boundaries[i] * boundaries[i + 1]).is_zero())
      throw std::invalid_argument("boundary squared is nonzero");
  }
  std::vector<std::size_t> ranks(boundaries.size() + 1, 0);
  for (std::size_t i = 0; i < boundaries.size(); ++i) ranks[i] = rank(boundaries[i]);
  std::vector<long> h(boundaries.size() + 1, 0);
  // degree -1: the coefficient field minus the image of the augmentation.
  h[0] = 1 - static_cast<long>(ranks[0]);
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    long dim_ci = static_cast<long>(boundaries[i].cols);
    h[i + 1] = dim_ci - static_cast<long>(ranks[i]) - static_cast<long>(ranks[i + 1]);
  }
  return h;
}

}  // namespace operadica
