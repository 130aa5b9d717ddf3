// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "operadica/posets.hpp"
#include "operadica/presentations.hpp"
#include "operadica/set_operads.hpp"
#include "operadica/shellability.hpp"

using namespace operadica;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass) {
  std::printf("%-4s %2d  %s\n", pass ? "PASS" : "FAIL", number, name.c_str());
  if (!pass) ++failures;
}

QMat color_identity(std::size_t s) {
  QMat m(2 * s, 2 * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t color = 0; color < 2; ++color) m.at(color * s + i, i * 2 + color) = 1;
  return m;
}

FinitePoset disconnected_middle() {
  std::vector<PosetElem> elems;
  for (const char* l : {"bot", "a", "b", "x", "y", "top"}) elems.push_back({l, "", 0, ""});
  std::vector<std::vector<bool>> leq(6, std::vector<bool>(6));
  for (std::size_t i = 0; i < 6; ++i) leq[i][i] = true;
  auto lt = [&](std::size_t i, std::size_t j) { leq[i][j] = true; };
  lt(0, 1), lt(0, 2), lt(0, 3), lt(0, 4), lt(0, 5);
  lt(1, 3), lt(2, 4), lt(1, 5), lt(2, 5), lt(3, 5), lt(4, 5);
  return FinitePoset(std::move(elems), std::move(leq));
}

std::size_t by_label(const FinitePoset& p, const std::string& label) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.elem(i).label == label) return i;
  throw std::runtime_error("no element labelled " + label);
}

void criterion_1() {
  auto dual = koszul_dual(catalogue::lie1());
  auto com2 = catalogue::com2();
  bool pass = dual.relations == com2.relations && dual.relations.dim() == 9 &&
              catalogue::lie1().relations.dim() == 3 && dual.relations.ambient_dim == 12;
  report(1, "dual of the linearly compatible presentation is the totally compatible one", pass);
}

void criterion_2() {
  bool pass = true;
  for (const std::string name : {"lie", "com", "lie1", "com2"}) {
    auto p = catalogue::by_name(name);
    pass = pass && koszul_dual(koszul_dual(p)).relations == p.relations;
  }
  report(2, "Koszul duality is an involution on the catalogue", pass);
}

void criterion_3() {
  bool pass = true;
  for (const std::string name : {"lie", "com"}) {
    auto p = catalogue::by_name(name);
    auto ident = color_identity(p.generators.count);
    pass = pass && relation_spaces_equal(build_linear_compatible(p),
                                         black_product(p, catalogue::lie1()), ident);
    pass = pass && relation_spaces_equal(build_totally_compatible(p),
                                         white_product(p, catalogue::com2()), ident);
  }
  report(3, "compatible structures agree with black/white products", pass);
}

void criterion_4() {
  auto com2 = builtin_operad("com2");
  bool pass = true;
  for (int n = 1; n <= 8; ++n) pass = pass && linearized_dim(*com2, n) == n;
  pass = pass && arity3_quotient(catalogue::com2()).quotient_dim == 3;
  report(4, "totally compatible operad has n operations in arity n", pass);
}

void criterion_5() {
  bool pass = true;
  for (const std::string name : {"com", "com2", "perm", "as", "permxcom2"}) {
    auto op = name == "permxcom2"
                  ? hadamard_product(builtin_operad("perm"), builtin_operad("com2"))
                  : builtin_operad(name);
    int n = (name == "as" || name == "permxcom2") ? 4 : 5;
    pass = pass && check_operad_axioms(*op, n).passed && check_basic_set(*op, n).passed;
  }
  report(5, "set-operad axioms and basic-set injectivity hold exhaustively", pass);
}

void criterion_6() {
  auto w3 = build_weighted_poset(3);
  auto com2 = builtin_operad("com2");
  bool pass = w3.size() == 10 && w3.maximal_elements().size() == 3 &&
              w3.covers_of(*w3.bottom()).size() == 6 && w3.hasse_edge_count() == 18 &&
              is_isomorphic(w3, build_operadic_poset(*com2, 3));
  report(6, "the weighted partition poset on three points matches the figure", pass);
}

void criterion_7() {
  auto com2 = builtin_operad("com2");
  auto perm = builtin_operad("perm");
  auto prod = hadamard_product(perm, com2);
  bool pass = true;
  for (int n = 2; n <= 5; ++n)
    pass = pass && is_isomorphic(build_operadic_poset(*com2, n), build_weighted_poset(n));
  for (int n = 2; n <= 4; ++n)
    pass = pass && is_isomorphic(build_operadic_poset(*prod, n),
                                 fiber_product(build_operadic_poset(*perm, n),
                                               build_operadic_poset(*com2, n)));
  report(7, "operadic partition posets match weighted and fiber-product models", pass);
}

void criterion_8() {
  auto w4 = build_weighted_poset(4);
  SemimodularityWitness w;
  bool sm = is_semimodular(w4, by_label(w4, "1^0|2^0|3^0|4^0"), by_label(w4, "1234^2"), &w);
  std::vector<std::string> pair{w.first, w.second};
  std::sort(pair.begin(), pair.end());
  bool pass = !sm && pair == std::vector<std::string>{"12^0|3^0|4^0", "1^0|2^0|34^0"} &&
              w.excluded_covers == std::vector<std::string>{"12^0|34^0"};
  report(8, "the weight-two interval on four points is non-semimodular with witness", pass);
}

void criterion_9() {
  bool pass = true;
  for (int n = 2; n <= 5; ++n)
    for (const auto& interval : maximal_intervals(build_weighted_poset(n)))
      pass = pass && verify_recursive_atom_ordering(interval);
  auto prod = hadamard_product(builtin_operad("perm"), builtin_operad("com2"));
  for (int n = 2; n <= 4; ++n)
    for (const auto& interval : maximal_intervals(build_operadic_poset(*prod, n)))
      pass = pass && verify_recursive_atom_ordering(interval);
  report(9, "recursive atom orderings certify every maximal interval", pass);
}

void criterion_10() {
  bool pass = true;
  auto prod = hadamard_product(builtin_operad("perm"), builtin_operad("com2"));
  for (int n = 2; n <= 4; ++n) {
    for (const auto& interval : maximal_intervals(build_weighted_poset(n))) {
      auto r = check_cohen_macaulay(interval);
      pass = pass && r.cm && r.euler_consistent;
    }
    for (const auto& interval : maximal_intervals(build_operadic_poset(*prod, n))) {
      auto r = check_cohen_macaulay(interval);
      pass = pass && r.cm && r.euler_consistent;
    }
  }
  report(10, "Cohen-Macaulayness holds with Mobius/Euler agreement throughout", pass);
}

void criterion_11() {
  auto p = disconnected_middle();
  auto cm = check_cohen_macaulay(p);
  bool pass = !verify_recursive_atom_ordering(p) && !cm.cm;
  report(11, "negative controls fail their checks", pass);
}

}  // namespace

int main() {
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
  } catch (const std::exception& e) {
    std::printf("FAIL --  unexpected exception: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
