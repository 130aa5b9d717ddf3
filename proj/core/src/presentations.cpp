#include "operadica/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace operadica {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::then(const Permutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  r.images.reserve(images.size());
  for (int img : images) r.images.push_back(o(img));
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images.resize(images.size());
  for (int i = 1; i <= n(); ++i) r.images[static_cast<std::size_t>((*this)(i)) - 1] = i;
  return r;
}

int Permutation::sign() const {
  int s = 1;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if ((*this)(i) > (*this)(j)) s = -s;
  return s;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int img : images) {
    if (img < 1 || img > n() || seen[static_cast<std::size_t>(img) - 1]) return false;
    seen[static_cast<std::size_t>(img) - 1] = true;
  }
  return true;
}

std::vector<Permutation> Permutation::all(int n) {
  Permutation p = identity(n);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

Permutation Permutation::block(const Permutation& sigma, const std::vector<int>& sizes) {
  int k = sigma.n();
  if (static_cast<int>(sizes.size()) != k)
    throw std::invalid_argument("block size count mismatch");
  std::vector<int> offsets(static_cast<std::size_t>(k) + 1, 0);
  for (int j = 0; j < k; ++j) offsets[static_cast<std::size_t>(j) + 1] = offsets[static_cast<std::size_t>(j)] + sizes[static_cast<std::size_t>(j)];
  int total = offsets[static_cast<std::size_t>(k)];
  Permutation out;
  out.images.resize(static_cast<std::size_t>(total));
  Permutation inv = sigma.inverse();
  int dst = 0;
  for (int j = 1; j <= k; ++j) {
    int src_block = inv(j);  // original block carried onto position j
    int start = offsets[static_cast<std::size_t>(src_block) - 1];
    int len = sizes[static_cast<std::size_t>(src_block) - 1];
    for (int t = 0; t < len; ++t) out.images[static_cast<std::size_t>(start + t)] = dst + t + 1;
    dst += len;
  }
  return out;
}

Permutation Permutation::direct_sum(const std::vector<Permutation>& parts) {
  Permutation out;
  int offset = 0;
  for (const auto& p : parts) {
    for (int img : p.images) out.images.push_back(img + offset);
    offset += p.n();
  }
  return out;
}

bool GeneratorSpace::swap_is_involution() const {
  if (swap_action.rows != count || swap_action.cols != count) return false;
  return swap_action * swap_action == QMat::identity(count);
}

std::array<int, 3> shape_labels(TreeShape s) {
  switch (s) {
    case TreeShape::s123: return {1, 2, 3};
    case TreeShape::s231: return {2, 3, 1};
    case TreeShape::s312: return {3, 1, 2};
  }
  throw std::logic_error("bad shape");
}

TreeVector TreeVector::zero(std::size_t s) {
  return TreeVector{s, std::vector<Rational>(3 * s * s)};
}

std::size_t TreeVector::index(TreeShape shape, int top, int bottom, std::size_t s) {
  return static_cast<std::size_t>(shape) * s * s +
         (static_cast<std::size_t>(top) - 1) * s + (static_cast<std::size_t>(bottom) - 1);
}

TreeVector TreeVector::monomial(const TreeMonomial& m, std::size_t s) {
  if (m.top < 1 || m.top > static_cast<int>(s) || m.bottom < 1 || m.bottom > static_cast<int>(s))
    throw std::invalid_argument("generator index out of range");
  TreeVector v = zero(s);
  v.coords[index(m.shape, m.top, m.bottom, s)] = 1;
  return v;
}

Rational TreeVector::coeff(const TreeMonomial& m) const {
  return coords[index(m.shape, m.top, m.bottom, gen_count)];
}

std::map<TreeMonomial, Rational> TreeVector::terms() const {
  std::map<TreeMonomial, Rational> out;
  int s = static_cast<int>(gen_count);
  for (int sh = 0; sh < 3; ++sh)
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j) {
        TreeMonomial m{static_cast<TreeShape>(sh), i, j};
        Rational c = coeff(m);
        if (c != 0) out.emplace(m, c);
      }
  return out;
}

TreeVector& TreeVector::operator+=(const TreeVector& o) {
  if (gen_count != o.gen_count) throw std::invalid_argument("tree space mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

TreeVector TreeVector::operator*(const Rational& c) const {
  TreeVector v = *this;
  for (auto& x : v.coords) x *= c;
  return v;
}

TreeVector canonicalize_tree(int a, int b, int c, int top, int bottom,
                             const GeneratorSpace& gens) {
  std::array<bool, 3> seen{};
  for (int x : {a, b, c}) {
    if (x < 1 || x > 3 || seen[static_cast<std::size_t>(x) - 1])
      throw std::invalid_argument("leaf labels must be a permutation of {1,2,3}");
    seen[static_cast<std::size_t>(x) - 1] = true;
  }
  int s = static_cast<int>(gens.count);
  if (top < 1 || top > s || bottom < 1 || bottom > s)
    throw std::invalid_argument("generator index out of range");
  TreeShape shape = c == 3 ? TreeShape::s123 : (c == 1 ? TreeShape::s231 : TreeShape::s312);
  auto canon = shape_labels(shape);
  TreeVector v = TreeVector::zero(gens.count);
  if (a == canon[0] && b == canon[1]) {
    v.coords[TreeVector::index(shape, top, bottom, gens.count)] = 1;
  } else {
    // reversed top pair: replace the top generator by its (12)-image
    for (int k = 1; k <= s; ++k) {
      const Rational& coef = gens.swap_action.at(static_cast<std::size_t>(top) - 1,
                                                 static_cast<std::size_t>(k) - 1);
      if (coef != 0)
        v.coords[TreeVector::index(shape, k, bottom, gens.count)] += coef;
    }
  }
  return v;
}

TreeVector act_s3(const TreeVector& v, const Permutation& sigma,
                  const GeneratorSpace& gens) {
  if (sigma.n() != 3 || !sigma.is_valid())
    throw std::invalid_argument("expected a permutation of [3]");
  Permutation inv = sigma.inverse();
  TreeVector out = TreeVector::zero(gens.count);
  for (const auto& [mono, coef] : v.terms()) {
    auto labels = shape_labels(mono.shape);
    TreeVector moved = canonicalize_tree(inv(labels[0]), inv(labels[1]), inv(labels[2]),
                                         mono.top, mono.bottom, gens);
    out += moved * coef;
  }
  return out;
}

ValidationReport validate_presentation(const QuadraticPresentation& p) {
  ValidationReport r;
  r.generator_count = p.generators.count;
  r.ambient_dim = p.generators.tree_dim();
  r.relation_dim = p.relations.dim();
  r.swap_involutive = p.generators.swap_is_involution();
  if (!r.swap_involutive) {
    r.detail = "swap_action is not an involution";
    return r;
  }
  if (p.relations.ambient_dim != r.ambient_dim) {
    r.detail = "relation subspace has wrong ambient dimension";
    return r;
  }
  r.s3_stable = true;
  for (const auto& sigma : Permutation::all(3)) {
    for (std::size_t row = 0; row < p.relations.basis.rows && r.s3_stable; ++row) {
      TreeVector v{p.generators.count,
                   std::vector<Rational>(p.relations.basis.a.begin() + static_cast<long>(row * r.ambient_dim),
                                         p.relations.basis.a.begin() + static_cast<long>((row + 1) * r.ambient_dim))};
      TreeVector moved = act_s3(v, sigma, p.generators);
      if (!membership(moved.coords, p.relations)) {
        r.s3_stable = false;
        r.detail = "relations are not stable under the S3-action";
      }
    }
    if (!r.s3_stable) break;
  }
  return r;
}

QuadraticPresentation make_presentation(std::string name, GeneratorSpace gens,
                                        const std::vector<TreeVector>& relation_reps) {
  if (gens.count == 0) throw std::invalid_argument("need at least one generator");
  if (!gens.swap_is_involution())
    throw std::invalid_argument("swap_action is not an involution");
  std::vector<std::vector<Rational>> rows;
  for (const auto& rep : relation_reps) {
    if (rep.gen_count != gens.count)
      throw std::invalid_argument("relation lives in the wrong tree space");
    for (const auto& sigma : Permutation::all(3))
      rows.push_back(act_s3(rep, sigma, gens).coords);
  }
  QuadraticPresentation p{std::move(name), std::move(gens), Subspace{}};
  p.relations = canonical_basis(rows, p.generators.tree_dim());
  ValidationReport r = validate_presentation(p);
  if (!r.ok()) throw std::logic_error("presentation failed validation: " + r.detail);
  return p;
}

QMat tree_pairing(std::size_t gen_count) {
  return QMat::identity(3 * gen_count * gen_count);
}

QuadraticPresentation koszul_dual(const QuadraticPresentation& p) {
  GeneratorSpace dual{p.generators.count, p.generators.swap_action.transpose()};
  for (auto& x : dual.swap_action.a) x = -x;
  QuadraticPresentation d{p.name + "!", dual,
                          orthogonal_complement(p.relations, tree_pairing(p.generators.count))};
  ValidationReport r = validate_presentation(d);
  if (!r.ok()) throw std::logic_error("Koszul dual failed validation: " + r.detail);
  return d;
}

namespace {

std::vector<TreeVector> relation_basis(const QuadraticPresentation& p) {
  std::vector<TreeVector> out;
  std::size_t dim = p.generators.tree_dim();
  for (std::size_t row = 0; row < p.relations.basis.rows; ++row)
    out.push_back(TreeVector{p.generators.count,
                             std::vector<Rational>(p.relations.basis.a.begin() + static_cast<long>(row * dim),
                                                   p.relations.basis.a.begin() + static_cast<long>((row + 1) * dim))});
  return out;
}

// Two color copies of the generators: white i -> i, black i -> s + i.
GeneratorSpace doubled_generators(const GeneratorSpace& g) {
  std::size_t s = g.count;
  GeneratorSpace d{2 * s, QMat(2 * s, 2 * s)};
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      d.swap_action.at(i, j) = g.swap_action.at(i, j);
      d.swap_action.at(s + i, s + j) = g.swap_action.at(i, j);
    }
  return d;
}

// Recolors a one-color relation: top generators land in color `top_color`,
// bottom generators in `bottom_color` (0 = white, 1 = black).
TreeVector recolor(const TreeVector& r, int top_color, int bottom_color) {
  std::size_t s = r.gen_count;
  TreeVector out = TreeVector::zero(2 * s);
  for (const auto& [mono, coef] : r.terms()) {
    int i = mono.top + top_color * static_cast<int>(s);
    int j = mono.bottom + bottom_color * static_cast<int>(s);
    out.coords[TreeVector::index(mono.shape, i, j, 2 * s)] += coef;
  }
  return out;
}

}  // namespace

QuadraticPresentation build_linear_compatible(const QuadraticPresentation& p) {
  ValidationReport v = validate_presentation(p);
  if (!v.ok()) throw std::invalid_argument("invalid presentation: " + v.detail);
  std::vector<TreeVector> reps;
  for (const auto& r : relation_basis(p)) {
    reps.push_back(recolor(r, 0, 0));
    reps.push_back(recolor(r, 1, 1));
    TreeVector mixed = recolor(r, 0, 1);
    mixed += recolor(r, 1, 0);
    reps.push_back(mixed);
  }
  return make_presentation("1(" + p.name + ")", doubled_generators(p.generators), reps);
}

QuadraticPresentation build_totally_compatible(const QuadraticPresentation& p) {
  ValidationReport v = validate_presentation(p);
  if (!v.ok()) throw std::invalid_argument("invalid presentation: " + v.detail);
  std::size_t s = p.generators.count;
  std::vector<TreeVector> reps;
  for (const auto& r : relation_basis(p)) {
    reps.push_back(recolor(r, 0, 0));
    reps.push_back(recolor(r, 1, 1));
    reps.push_back(recolor(r, 0, 1));  // the white-over-black mixture
  }
  // color-exchange relations, one per shape and generator pair
  for (int sh = 0; sh < 3; ++sh)
    for (int i = 1; i <= static_cast<int>(s); ++i)
      for (int j = 1; j <= static_cast<int>(s); ++j) {
        TreeVector r = TreeVector::zero(2 * s);
        r.coords[TreeVector::index(static_cast<TreeShape>(sh), i, static_cast<int>(s) + j, 2 * s)] = 1;
        r.coords[TreeVector::index(static_cast<TreeShape>(sh), static_cast<int>(s) + i, j, 2 * s)] = -1;
        reps.push_back(r);
      }
  QuadraticPresentation out =
      make_presentation("2(" + p.name + ")", doubled_generators(p.generators), reps);
  // the black-over-white mixture must be a consequence
  for (const auto& r : relation_basis(p))
    if (!membership(recolor(r, 1, 0).coords, out.relations))
      throw std::logic_error("reversed-color relations escape the span");
  return out;
}

QuadraticPresentation black_product(const QuadraticPresentation& p,
                                    const QuadraticPresentation& q) {
  ValidationReport vp = validate_presentation(p), vq = validate_presentation(q);
  if (!vp.ok() || !vq.ok()) throw std::invalid_argument("invalid presentation");
  std::size_t sp = p.generators.count, sq = q.generators.count;
  GeneratorSpace gens{sp * sq, QMat::kronecker(p.generators.swap_action, q.generators.swap_action)};
  for (auto& x : gens.swap_action.a) x = -x;  // the sign twist of the generators
  auto pair_index = [sq](int i, int k) { return (i - 1) * static_cast<int>(sq) + k; };
  std::vector<TreeVector> reps;
  for (const auto& r : relation_basis(p))
    for (const auto& u : relation_basis(q)) {
      TreeVector w = TreeVector::zero(gens.count);
      for (const auto& [mr, cr] : r.terms())
        for (const auto& [mu, cu] : u.terms()) {
          if (mr.shape != mu.shape) continue;  // the delta of matching labelings
          w.coords[TreeVector::index(mr.shape, pair_index(mr.top, mu.top),
                                     pair_index(mr.bottom, mu.bottom), gens.count)] += cr * cu;
        }
      reps.push_back(w);
    }
  return make_presentation(p.name + " black " + q.name, gens, reps);
}

QuadraticPresentation white_product(const QuadraticPresentation& p,
                                    const QuadraticPresentation& q) {
  ValidationReport vp = validate_presentation(p), vq = validate_presentation(q);
  if (!vp.ok() || !vq.ok()) throw std::invalid_argument("invalid presentation");
  std::size_t sp = p.generators.count, sq = q.generators.count;
  GeneratorSpace gens{sp * sq, QMat::kronecker(p.generators.swap_action, q.generators.swap_action)};
  std::size_t dim_p = 3 * sp * sp, dim_q = 3 * sq * sq;
  std::size_t source_dim = gens.tree_dim(), target_dim = dim_p * dim_q;
  // phi splits a tensor-decorated tree into a pair of trees of the same shape
  QMat phi(target_dim, source_dim);
  for (int sh = 0; sh < 3; ++sh)
    for (int i = 1; i <= static_cast<int>(sp); ++i)
      for (int j = 1; j <= static_cast<int>(sp); ++j)
        for (int k = 1; k <= static_cast<int>(sq); ++k)
          for (int l = 1; l <= static_cast<int>(sq); ++l) {
            auto shape = static_cast<TreeShape>(sh);
            std::size_t col = TreeVector::index(
                shape, (i - 1) * static_cast<int>(sq) + k,
                (j - 1) * static_cast<int>(sq) + l, gens.count);
            std::size_t row = TreeVector::index(shape, i, j, sp) * dim_q +
                              TreeVector::index(shape, k, l, sq);
            phi.at(row, col) = 1;
          }
  // R (x) F(W)(3) + F(V)(3) (x) S inside the tensor of the two tree spaces
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : relation_basis(p))
    for (std::size_t b = 0; b < dim_q; ++b) {
      std::vector<Rational> row(target_dim);
      for (std::size_t a = 0; a < dim_p; ++a) row[a * dim_q + b] = r.coords[a];
      rows.push_back(std::move(row));
    }
  for (const auto& u : relation_basis(q))
    for (std::size_t a = 0; a < dim_p; ++a) {
      std::vector<Rational> row(target_dim);
      for (std::size_t b = 0; b < dim_q; ++b) row[a * dim_q + b] = u.coords[b];
      rows.push_back(std::move(row));
    }
  Subspace target = canonical_basis(rows, target_dim);
  Subspace rel = preimage(phi, target);
  QuadraticPresentation out{p.name + " white " + q.name, gens, rel};
  ValidationReport r = validate_presentation(out);
  if (!r.ok()) throw std::logic_error("white product failed validation: " + r.detail);
  return out;
}

ArityThreeAlgebra arity3_quotient(const QuadraticPresentation& p) {
  ValidationReport v = validate_presentation(p);
  if (!v.ok()) throw std::invalid_argument("invalid presentation: " + v.detail);
  ArityThreeAlgebra alg;
  alg.ambient_dim = p.generators.tree_dim();
  alg.relations = p.relations;
  rref(p.relations.basis, &alg.pivot_cols);
  alg.quotient_dim = alg.ambient_dim - p.relations.dim();
  return alg;
}

std::vector<Rational> ArityThreeAlgebra::class_coords(const TreeVector& v) const {
  if (v.coords.size() != ambient_dim)
    throw std::invalid_argument("vector lives in the wrong tree space");
  std::vector<Rational> w = v.coords;
  for (std::size_t r = 0; r < relations.basis.rows; ++r) {
    Rational f = w[pivot_cols[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < ambient_dim; ++c) w[c] -= f * relations.basis.at(r, c);
  }
  return w;
}

bool check_weak_associativity(const QuadraticPresentation& p) {
  ArityThreeAlgebra alg = arity3_quotient(p);
  int s = static_cast<int>(p.generators.count);
  for (int sh = 0; sh < 3; ++sh) {
    auto shape = static_cast<TreeShape>(sh);
    auto next = static_cast<TreeShape>((sh + 1) % 3);
    std::vector<std::vector<Rational>> next_classes;
    for (int k = 1; k <= s; ++k)
      for (int l = 1; l <= s; ++l)
        next_classes.push_back(alg.class_coords(
            TreeVector::monomial({next, k, l}, p.generators.count)));
    Subspace span = canonical_basis(next_classes, alg.ambient_dim);
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j) {
        auto cls = alg.class_coords(TreeVector::monomial({shape, i, j}, p.generators.count));
        if (!membership(cls, span)) return false;
      }
  }
  return true;
}

bool relation_spaces_equal(const QuadraticPresentation& p,
                           const QuadraticPresentation& q,
                           const QMat& identification) {
  std::size_t s = p.generators.count;
  if (q.generators.count != s || identification.rows != s || identification.cols != s)
    throw std::invalid_argument("identification shape mismatch");
  if (p.relations.dim() != q.relations.dim()) return false;
  if (determinant(identification) == 0)
    throw std::invalid_argument("identification is not invertible");
  if (!(p.generators.swap_action * identification ==
        identification * q.generators.swap_action))
    throw std::invalid_argument("identification does not intertwine the swap actions");
  std::vector<std::vector<Rational>> image_rows;
  for (const auto& r : relation_basis(p)) {
    TreeVector img = TreeVector::zero(s);
    for (const auto& [mono, coef] : r.terms())
      for (int k = 1; k <= static_cast<int>(s); ++k)
        for (int l = 1; l <= static_cast<int>(s); ++l) {
          Rational f = identification.at(static_cast<std::size_t>(mono.top) - 1,
                                         static_cast<std::size_t>(k) - 1) *
                       identification.at(static_cast<std::size_t>(mono.bottom) - 1,
                                         static_cast<std::size_t>(l) - 1);
          if (f != 0)
            img.coords[TreeVector::index(mono.shape, k, l, s)] += coef * f;
        }
    image_rows.push_back(img.coords);
  }
  return canonical_basis(image_rows, p.generators.tree_dim()) == q.relations;
}

nlohmann::json ValidationReport::to_json() const {
  return nlohmann::json{{"swap_involutive", swap_involutive},
                        {"s3_stable", s3_stable},
                        {"generators", generator_count},
                        {"relation_dim", relation_dim},
                        {"ambient_dim", ambient_dim},
                        {"ok", ok()},
                        {"detail", detail}};
}

namespace {
std::string shape_name(TreeShape s) {
  switch (s) {
    case TreeShape::s123: return "123";
    case TreeShape::s231: return "231";
    case TreeShape::s312: return "312";
  }
  throw std::logic_error("bad shape");
}
TreeShape shape_from_name(const std::string& n) {
  if (n == "123") return TreeShape::s123;
  if (n == "231") return TreeShape::s231;
  if (n == "312") return TreeShape::s312;
  throw std::invalid_argument("unknown tree shape: " + n);
}
}  // namespace

nlohmann::json presentation_to_json(const QuadraticPresentation& p) {
  nlohmann::json swap = nlohmann::json::array();
  for (std::size_t r = 0; r < p.generators.count; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < p.generators.count; ++c)
      row.push_back(rational_to_string(p.generators.swap_action.at(r, c)));
    swap.push_back(row);
  }
  nlohmann::json relations = nlohmann::json::array();
  std::size_t dim = p.generators.tree_dim();
  for (std::size_t row = 0; row < p.relations.basis.rows; ++row) {
    TreeVector v{p.generators.count,
                 std::vector<Rational>(p.relations.basis.a.begin() + static_cast<long>(row * dim),
                                       p.relations.basis.a.begin() + static_cast<long>((row + 1) * dim))};
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coef] : v.terms())
      terms.push_back(nlohmann::json{{"shape", shape_name(mono.shape)},
                                     {"top", mono.top},
                                     {"bottom", mono.bottom},
                                     {"coeff", rational_to_string(coef)}});
    relations.push_back(terms);
  }
  return nlohmann::json{{"name", p.name},
                        {"generators", {{"count", p.generators.count}, {"swap_action", swap}}},
                        {"relations", relations}};
}

QuadraticPresentation presentation_from_json(const nlohmann::json& j) {
  GeneratorSpace gens;
  gens.count = j.at("generators").at("count").get<std::size_t>();
  const auto& swap = j.at("generators").at("swap_action");
  gens.swap_action = QMat(gens.count, gens.count);
  if (swap.size() != gens.count) throw std::invalid_argument("swap_action row count mismatch");
  for (std::size_t r = 0; r < gens.count; ++r) {
    if (swap[r].size() != gens.count)
      throw std::invalid_argument("swap_action column count mismatch");
    for (std::size_t c = 0; c < gens.count; ++c)
      gens.swap_action.at(r, c) = rational_from_string(swap[r][c].get<std::string>());
  }
  std::vector<TreeVector> reps;
  for (const auto& rel : j.at("relations")) {
    TreeVector v = TreeVector::zero(gens.count);
    for (const auto& term : rel) {
      TreeMonomial m{shape_from_name(term.at("shape").get<std::string>()),
                     term.at("top").get<int>(), term.at("bottom").get<int>()};
      if (m.top < 1 || m.top > static_cast<int>(gens.count) || m.bottom < 1 ||
          m.bottom > static_cast<int>(gens.count))
        throw std::invalid_argument("generator index out of range");
      v.coords[TreeVector::index(m.shape, m.top, m.bottom, gens.count)] +=
          rational_from_string(term.at("coeff").get<std::string>());
    }
    reps.push_back(v);
  }
  return make_presentation(j.at("name").get<std::string>(), gens, reps);
}

}  // namespace operadica
