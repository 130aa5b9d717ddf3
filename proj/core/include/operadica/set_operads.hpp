#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "operadica/presentations.hpp"

namespace operadica {

/// An element of P_n for a finite set operad. The payload layout is owned by
/// the operad named by operad_id; elements never cross operads.
struct OpElem {
  std::string operad_id;
  int arity = 0;
  std::vector<int> payload;

  auto operator<=>(const OpElem&) const = default;
};

class SetOperad {
 public:
  explicit SetOperad(std::string id) : id_(std::move(id)) {}
  virtual ~SetOperad() = default;

  const std::string& id() const { return id_; }

  /// All elements of arity n, duplicate-free, in a fixed order.
  virtual std::vector<OpElem> elements(int n) const = 0;
  /// The arity-1 unit.
  OpElem unit() const;

  OpElem compose(const OpElem& p, const std::vector<OpElem>& qs) const;
  OpElem act(const OpElem& x, const Permutation& sigma) const;

  /// Decoration suffix for poset labels (empty for Com, the weight for 2Com).
  virtual std::string label(const OpElem& x) const = 0;
  /// The label with all weight data stripped; atoms sharing a group are
  /// ordered consecutively by weight in the atom-ordering strategy.
  virtual std::string group_label(const OpElem& x) const { return label(x); }
  /// Number of black products carried by the element (0 outside 2Com parts).
  virtual int weight(const OpElem& x) const { (void)x; return 0; }

 protected:
  virtual OpElem compose_impl(const OpElem& p, const std::vector<OpElem>& qs) const = 0;
  virtual OpElem act_impl(const OpElem& x, const Permutation& sigma) const = 0;

  OpElem make(int arity, std::vector<int> payload) const {
    return OpElem{id_, arity, std::move(payload)};
  }

 private:
  std::string id_;
};

using SetOperadPtr = std::shared_ptr<const SetOperad>;

/// One of "com", "com2", "perm", "as".
SetOperadPtr builtin_operad(const std::string& name);

SetOperadPtr hadamard_product(SetOperadPtr p, SetOperadPtr q);

std::size_t linearized_dim(const SetOperad& p, int n);

struct OperadCheckReport {
  std::string operad;
  int max_n = 0;
  bool passed = false;
  std::string counterexample;  // empty when passed

  nlohmann::json to_json() const;
};

/// Exhaustively verifies unit laws, the right-action property, inner and
/// outer equivariance, and two-level associativity on all composable shapes
/// of total arity at most max_n.
OperadCheckReport check_operad_axioms(const SetOperad& p, int max_n);

/// Verifies that q -> compose(q; q_1, ..., q_k) is injective for every
/// argument tuple of total arity at most max_n.
OperadCheckReport check_basic_set(const SetOperad& p, int max_n);

}  // namespace operadica
