#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "operadica/set_operads.hpp"

namespace operadica {

/// One poset element. `label` is the display name; `group` is the label with
/// all weight data stripped; `minor` is the total weight; `partition_key` is
/// the projection to the plain partition lattice (used by fiber products).
struct PosetElem {
  std::string label;
  std::string group;
  int minor = 0;
  std::string partition_key;

  auto operator<=>(const PosetElem&) const = default;
};

/// A finite poset stored as the full relation matrix. Construction validates
/// reflexivity, antisymmetry and transitivity.
class FinitePoset {
 public:
  FinitePoset(std::vector<PosetElem> elems, std::vector<std::vector<bool>> leq);

  std::size_t size() const { return elems_.size(); }
  const PosetElem& elem(std::size_t i) const { return elems_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
  bool covers(std::size_t j, std::size_t i) const;  // j covers i

  /// Elements covering i, ascending.
  std::vector<std::size_t> covers_of(std::size_t i) const;
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  std::size_t hasse_edge_count() const;

  /// The induced subposet on the given (ascending, distinct) indices.
  FinitePoset induced(const std::vector<std::size_t>& idx) const;
  /// The closed interval [lo, hi] as an induced subposet.
  FinitePoset interval(std::size_t lo, std::size_t hi) const;
  /// Indices of [lo, hi], ascending.
  std::vector<std::size_t> interval_indices(std::size_t lo, std::size_t hi) const;

 private:
  std::vector<PosetElem> elems_;
  std::vector<std::vector<bool>> leq_;
};

/// [0^, g] for each maximal g. Requires a bottom element.
std::vector<FinitePoset> maximal_intervals(const FinitePoset& p);

/// True iff the bounded poset is graded; fills ranks (longest-chain ranks
/// from the bottom) when it is.
bool is_graded(const FinitePoset& p, std::vector<int>* ranks = nullptr);

struct SemimodularityWitness {
  std::string base;    // the element covered by both
  std::string first;   // the two covers lacking a common cover in the interval
  std::string second;
  std::vector<std::string> excluded_covers;  // their ambient common covers above hi
};

/// Semimodularity of [lo, hi] inside the ambient poset p; on failure the
/// witness also records common covers that exist in p but escape the interval.
bool is_semimodular(const FinitePoset& p, std::size_t lo, std::size_t hi,
                    SemimodularityWitness* witness = nullptr);
bool is_semimodular(const FinitePoset& bounded, SemimodularityWitness* witness = nullptr);

bool is_totally_semimodular(const FinitePoset& p, std::size_t lo, std::size_t hi);
bool is_totally_semimodular(const FinitePoset& bounded);

/// Backtracking isomorphism test with invariant-refinement pruning; the
/// witness maps indices of a to indices of b.
bool is_isomorphic(const FinitePoset& a, const FinitePoset& b,
                   std::vector<std::size_t>* witness = nullptr);

/// Mobius function mu(lo, hi).
long mobius(const FinitePoset& p, std::size_t lo, std::size_t hi);
long mobius(const FinitePoset& bounded);

/// Reduced Betti numbers of the order complex of the open interval (lo, hi),
/// indexed from degree -1 (so result[0] is the degree -1 rank).
std::vector<long> interval_homology(const FinitePoset& p, std::size_t lo, std::size_t hi);
std::vector<long> interval_homology(const FinitePoset& bounded);

struct CMResult {
  bool cm = false;
  bool euler_consistent = false;
  std::string detail;  // first failing subinterval, if any
};

/// Cohen-Macaulayness of the graded interval [lo, hi] over the rationals:
/// every subinterval's open-part homology is concentrated in top degree.
/// Every subinterval is also cross-checked against the Mobius recursion.
CMResult check_cohen_macaulay(const FinitePoset& p, std::size_t lo, std::size_t hi);
CMResult check_cohen_macaulay(const FinitePoset& bounded);

std::string to_dot(const FinitePoset& p, const std::string& name = "poset");

// --- builders ---

/// The partition lattice Pi_n (ordered by refinement).
FinitePoset build_partition_poset(int n);

/// The operadic partition poset Pi_P(n) of enriched partitions.
FinitePoset build_operadic_poset(const SetOperad& op, int n);

/// The weighted-partition poset 2W_n.
FinitePoset build_weighted_poset(int n);

/// Pairs with equal partition_key, ordered componentwise.
FinitePoset fiber_product(const FinitePoset& a, const FinitePoset& b);

}  // namespace operadica
