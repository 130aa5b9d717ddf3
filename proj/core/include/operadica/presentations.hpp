#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "operadica/linalg.hpp"

namespace operadica {

/// A bijection of [n], stored as 1-indexed images.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int n() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<std::size_t>(i) - 1]; }
  /// (this then other): i -> other(this(i)).
  Permutation then(const Permutation& o) const;
  Permutation inverse() const;
  int sign() const;
  bool is_valid() const;
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }

  static std::vector<Permutation> all(int n);
  /// Block permutation induced by sigma on consecutive blocks of the given
  /// sizes: block number sigma^{-1}(j) of the original splitting is carried
  /// order-preservingly onto the j-th block of the permuted splitting.
  static Permutation block(const Permutation& sigma, const std::vector<int>& sizes);
  static Permutation direct_sum(const std::vector<Permutation>& parts);
};

/// The space of binary generators together with the right action of (12).
/// swap_action row i holds the coordinates of e_i . (12).
struct GeneratorSpace {
  std::size_t count = 0;
  QMat swap_action;

  bool swap_is_involution() const;
  std::size_t tree_dim() const { return 3 * count * count; }
};

/// The three canonical leaf labelings of a two-vertex binary tree.
enum class TreeShape : std::uint8_t { s123 = 0, s231 = 1, s312 = 2 };

/// leaf labels (a, b, c) of a shape; the top vertex takes (a, b), the bottom
/// vertex takes the top's output and c. Shape s312 lists its top pair as
/// (3, 1), descending, exactly as the canonical basis is written.
std::array<int, 3> shape_labels(TreeShape s);

struct TreeMonomial {
  TreeShape shape;
  int top = 1;     // generator index, 1-based
  int bottom = 1;  // generator index, 1-based
  auto operator<=>(const TreeMonomial&) const = default;
};

/// An element of the 3 s^2-dimensional weight-two tree space, stored densely
/// in the basis ordered (shape, top, bottom).
struct TreeVector {
  std::size_t gen_count = 0;
  std::vector<Rational> coords;  // size 3 * gen_count^2

  static TreeVector zero(std::size_t s);
  static TreeVector monomial(const TreeMonomial& m, std::size_t s);
  static std::size_t index(TreeShape shape, int top, int bottom, std::size_t s);

  Rational coeff(const TreeMonomial& m) const;
  /// Nonzero terms only, in basis order.
  std::map<TreeMonomial, Rational> terms() const;
  TreeVector& operator+=(const TreeVector& o);
  TreeVector operator*(const Rational& c) const;
  bool operator==(const TreeVector&) const = default;
};

/// Reduces an arbitrary leaf labeling {a,b,c} = {1,2,3} to canonical
/// coordinates: the bottom leaf c picks the shape, and a reversed top pair
/// replaces the top generator by its image under swap_action.
TreeVector canonicalize_tree(int a, int b, int c, int top, int bottom,
                             const GeneratorSpace& gens);

/// Right S3-action on the tree space: leaves are relabeled through
/// sigma^{-1} and the result canonicalized.
TreeVector act_s3(const TreeVector& v, const Permutation& sigma,
                  const GeneratorSpace& gens);

struct QuadraticPresentation {
  std::string name;
  GeneratorSpace generators;
  Subspace relations;  // inside the 3 s^2 tree space
};

struct ValidationReport {
  bool swap_involutive = false;
  bool s3_stable = false;
  std::size_t generator_count = 0;
  std::size_t relation_dim = 0;
  std::size_t ambient_dim = 0;
  std::string detail;

  bool ok() const { return swap_involutive && s3_stable; }
  nlohmann::json to_json() const;
};

ValidationReport validate_presentation(const QuadraticPresentation& p);

/// Closes the given relation representatives under the S3-action, then
/// validates. Throws on a malformed generator space.
QuadraticPresentation make_presentation(std::string name, GeneratorSpace gens,
                                        const std::vector<TreeVector>& relation_reps);

/// The identity matrix of the tree space: the natural pairing of dual trees
/// is the plain delta pairing in the canonical bases.
QMat tree_pairing(std::size_t gen_count);

/// Koszul dual: dual generators carry -swap^T and the relations are the
/// orthogonal complement under the delta pairing.
QuadraticPresentation koszul_dual(const QuadraticPresentation& p);

/// Two color copies of the generators with the original relations in each
/// color plus the mixed-color sums. Relations of the result span 3t.
QuadraticPresentation build_linear_compatible(const QuadraticPresentation& p);

/// Two color copies with color-exchange relations and the original relations
/// in the white-over-black mixture; the black-over-white mixture is checked
/// to be a consequence.
QuadraticPresentation build_totally_compatible(const QuadraticPresentation& p);

QuadraticPresentation black_product(const QuadraticPresentation& p,
                                    const QuadraticPresentation& q);

QuadraticPresentation white_product(const QuadraticPresentation& p,
                                    const QuadraticPresentation& q);

/// The arity-3 component of the quotient operad, with a fixed section given
/// by zeroing the pivot coordinates of the relation RREF.
struct ArityThreeAlgebra {
  std::size_t ambient_dim = 0;
  Subspace relations;
  std::vector<std::size_t> pivot_cols;
  std::size_t quotient_dim = 0;

  /// Coordinates of the class of v in the chosen complement basis
  /// (returned in ambient coordinates with pivot entries zero).
  std::vector<Rational> class_coords(const TreeVector& v) const;
};

ArityThreeAlgebra arity3_quotient(const QuadraticPresentation& p);

/// True iff every class of a canonical monomial lies in the span of the
/// classes of the monomials of the cyclically-next shape.
bool check_weak_associativity(const QuadraticPresentation& p);

/// identification maps p-generators to q-generator combinations (row i is
/// the image of e_i); it must be invertible and intertwine the swap actions.
bool relation_spaces_equal(const QuadraticPresentation& p,
                           const QuadraticPresentation& q,
                           const QMat& identification);

nlohmann::json presentation_to_json(const QuadraticPresentation& p);
QuadraticPresentation presentation_from_json(const nlohmann::json& j);

namespace catalogue {
QuadraticPresentation lie();
QuadraticPresentation com();
/// Two linearly compatible Lie brackets, as listed relations.
QuadraticPresentation lie1();
/// Two totally compatible commutative products (dual of lie1), as listed.
QuadraticPresentation com2();
/// Permutative algebras; used in tests and theorem batteries.
QuadraticPresentation perm();
/// Looks up one of "lie", "com", "lie1", "com2" (also "perm").
QuadraticPresentation by_name(const std::string& name);
}  // namespace catalogue

}  // namespace operadica
