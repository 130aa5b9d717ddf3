#pragma once

#include <functional>

#include "operadica/posets.hpp"

namespace operadica {

/// Orders the atoms of [lo, hi] for the recursive atom ordering check.
using AtomOrdering =
    std::function<std::vector<std::size_t>(const FinitePoset&, std::size_t, std::size_t)>;

/// Atoms grouped by their weight-stripped group label, weights ascending
/// within each group (weight 0 immediately before weight 1, and so on).
std::vector<std::size_t> paper_atom_ordering(const FinitePoset& p, std::size_t lo,
                                             std::size_t hi);

/// Checks the two recursive-atom-ordering criteria on the graded interval
/// [lo, hi], re-invoking the strategy in every subinterval. Subintervals are
/// memoized on (bottom, set of atoms required to come first).
bool verify_recursive_atom_ordering(const FinitePoset& p, std::size_t lo, std::size_t hi,
                                    const AtomOrdering& strategy = paper_atom_ordering);
bool verify_recursive_atom_ordering(const FinitePoset& bounded,
                                    const AtomOrdering& strategy = paper_atom_ordering);

}  // namespace operadica
