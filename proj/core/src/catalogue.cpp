#include "operadica/presentations.hpp"

#include <stdexcept>

namespace operadica::catalogue {

namespace {

TreeVector mono(TreeShape sh, int i, int j, std::size_t s) {
  return TreeVector::monomial({sh, i, j}, s);
}

TreeVector sum_of_shapes(int i, int j, std::size_t s) {
  TreeVector v = mono(TreeShape::s123, i, j, s);
  v += mono(TreeShape::s231, i, j, s);
  v += mono(TreeShape::s312, i, j, s);
  return v;
}

QMat scaled_identity(std::size_t n, const Rational& c) {
  QMat m = QMat::identity(n);
  for (auto& x : m.a) x *= c;
  return m;
}

}  // namespace

QuadraticPresentation lie() {
  GeneratorSpace gens{1, scaled_identity(1, -1)};
  return make_presentation("lie", gens, {sum_of_shapes(1, 1, 1)});
}

QuadraticPresentation com() {
  GeneratorSpace gens{1, QMat::identity(1)};
  TreeVector r1 = mono(TreeShape::s123, 1, 1, 1);
  r1 += mono(TreeShape::s231, 1, 1, 1) * Rational(-1);
  TreeVector r2 = mono(TreeShape::s231, 1, 1, 1);
  r2 += mono(TreeShape::s312, 1, 1, 1) * Rational(-1);
  return make_presentation("com", gens, {r1, r2});
}

QuadraticPresentation lie1() {
  GeneratorSpace gens{2, scaled_identity(2, -1)};
  TreeVector mixed = sum_of_shapes(1, 2, 2);
  mixed += sum_of_shapes(2, 1, 2);
  return make_presentation("lie1", gens,
                           {sum_of_shapes(1, 1, 2), sum_of_shapes(2, 2, 2), mixed});
}

QuadraticPresentation com2() {
  GeneratorSpace gens{2, QMat::identity(2)};
  auto diff = [](TreeShape sa, int ia, int ja, TreeShape sb, int ib, int jb) {
    TreeVector v = mono(sa, ia, ja, 2);
    v += mono(sb, ib, jb, 2) * Rational(-1);
    return v;
  };
  std::vector<TreeVector> reps = {
      diff(TreeShape::s123, 1, 1, TreeShape::s231, 1, 1),
      diff(TreeShape::s123, 1, 1, TreeShape::s312, 1, 1),
      diff(TreeShape::s123, 2, 2, TreeShape::s231, 2, 2),
      diff(TreeShape::s123, 2, 2, TreeShape::s312, 2, 2),
      diff(TreeShape::s123, 1, 2, TreeShape::s123, 2, 1),
      diff(TreeShape::s231, 1, 2, TreeShape::s231, 2, 1),
      diff(TreeShape::s312, 1, 2, TreeShape::s312, 2, 1),
      diff(TreeShape::s123, 1, 2, TreeShape::s231, 1, 2),
      diff(TreeShape::s123, 1, 2, TreeShape::s312, 1, 2),
      diff(TreeShape::s123, 2, 1, TreeShape::s231, 2, 1),
      diff(TreeShape::s123, 2, 1, TreeShape::s312, 2, 1),
  };
  return make_presentation("com2", gens, reps);
}

QuadraticPresentation perm() {
  QMat swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  GeneratorSpace gens{2, swap};
  TreeVector r1 = mono(TreeShape::s123, 1, 1, 2);
  r1 += mono(TreeShape::s231, 1, 2, 2) * Rational(-1);
  TreeVector r2 = mono(TreeShape::s231, 1, 2, 2);
  r2 += mono(TreeShape::s231, 2, 2, 2) * Rational(-1);
  return make_presentation("perm", gens, {r1, r2});
}

QuadraticPresentation by_name(const std::string& name) {
  if (name == "lie") return lie();
  if (name == "com") return com();
  if (name == "lie1") return lie1();
  if (name == "com2") return com2();
  if (name == "perm") return perm();
  throw std::invalid_argument("unknown operad: " + name);
}

}  // namespace operadica::catalogue
