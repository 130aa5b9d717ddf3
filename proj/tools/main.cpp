#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "operadica/posets.hpp"
#include "operadica/presentations.hpp"
#include "operadica/set_operads.hpp"
#include "operadica/shellability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

using operadica::FinitePoset;
using operadica::QuadraticPresentation;

const std::vector<std::string> kCatalogue = {"lie", "com", "lie1", "com2", "perm"};

QuadraticPresentation resolve_presentation(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    nlohmann::json j;
    in >> j;
    return operadica::presentation_from_json(j);
  }
  if (std::find(kCatalogue.begin(), kCatalogue.end(), arg) == kCatalogue.end())
    throw std::invalid_argument("no such file or catalogue presentation: " + arg);
  if (const char* dir = std::getenv("OPERAD_DATA_DIR")) {
    auto path = std::filesystem::path(dir) / (arg + ".json");
    if (!std::filesystem::exists(path))
      throw std::invalid_argument("OPERAD_DATA_DIR has no " + arg + ".json");
    std::ifstream in(path);
    nlohmann::json j;
    in >> j;
    return operadica::presentation_from_json(j);
  }
  return operadica::catalogue::by_name(arg);
}

void emit(const nlohmann::json& j, const std::string& output) {
  nlohmann::json out = j;
  out["schema"] = 1;
  if (output.empty() || output == "-") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream f(output);
    f << out.dump(2) << "\n";
  }
}

operadica::SetOperadPtr resolve_operad(const std::string& name) {
  if (name == "permxcom2")
    return operadica::hadamard_product(operadica::builtin_operad("perm"),
                                       operadica::builtin_operad("com2"));
  return operadica::builtin_operad(name);
}

int run_dual(const std::string& input, const std::string& output) {
  auto p = operadica::koszul_dual(resolve_presentation(input));
  emit(operadica::presentation_to_json(p), output);
  return kExitOk;
}

int run_compat(const std::string& input, const std::string& kind, const std::string& output) {
  auto base = resolve_presentation(input);
  auto p = kind == "linear" ? operadica::build_linear_compatible(base)
                            : operadica::build_totally_compatible(base);
  emit(operadica::presentation_to_json(p), output);
  return kExitOk;
}

int run_product(const std::string& kind, const std::string& left, const std::string& right,
                const std::string& output) {
  auto p = resolve_presentation(left);
  auto q = resolve_presentation(right);
  auto r = kind == "black" ? operadica::black_product(p, q) : operadica::white_product(p, q);
  emit(operadica::presentation_to_json(r), output);
  return kExitOk;
}

int run_operad_check(const std::string& name, int max_n, bool basic_set,
                     const std::string& output) {
  auto op = resolve_operad(name);
  auto axioms = operadica::check_operad_axioms(*op, max_n);
  nlohmann::json j{{"operad", op->id()}, {"max_n", max_n}, {"axioms", axioms.to_json()}};
  bool ok = axioms.passed;
  if (basic_set) {
    auto basic = operadica::check_basic_set(*op, max_n);
    j["basic_set"] = basic.to_json();
    ok = ok && basic.passed;
  }
  j["passed"] = ok;
  emit(j, output);
  return ok ? kExitOk : kExitVerification;
}

FinitePoset resolve_poset(const std::string& name, int n) {
  if (name == "weighted") return operadica::build_weighted_poset(n);
  if (name == "partition") return operadica::build_partition_poset(n);
  return operadica::build_operadic_poset(*resolve_operad(name), n);
}

int run_poset(const std::string& name, int n, bool semimodular, bool rao, bool cm,
              bool iso_weighted, const std::string& dot, const std::string& output) {
  FinitePoset poset = resolve_poset(name, n);
  nlohmann::json j{{"operad", name}, {"n", n}, {"elements", poset.size()},
                   {"hasse_edges", poset.hasse_edge_count()}};
  bool ok = true;
  auto intervals = operadica::maximal_intervals(poset);
  nlohmann::json per_interval = nlohmann::json::array();
  for (auto& interval : intervals) {
    nlohmann::json ji{{"top", interval.elem(*interval.top()).label},
                      {"size", interval.size()}};
    std::vector<int> ranks;
    ji["graded"] = operadica::is_graded(interval, &ranks);
    if (semimodular) {
      operadica::SemimodularityWitness w;
      // locate the top of this interval inside the ambient poset
      std::size_t top_idx = 0;
      for (std::size_t i = 0; i < poset.size(); ++i)
        if (poset.elem(i).label == interval.elem(*interval.top()).label) top_idx = i;
      bool sm = operadica::is_semimodular(poset, *poset.bottom(), top_idx, &w);
      ji["semimodular"] = sm;
      if (!sm) {
        ji["witness"] = nlohmann::json{{"base", w.base}, {"first", w.first},
                                       {"second", w.second},
                                       {"excluded_covers", w.excluded_covers}};
      }
    }
    if (rao) {
      bool pass = operadica::verify_recursive_atom_ordering(interval);
      ji["rao"] = pass;
      ok = ok && pass;
    }
    if (cm) {
      auto result = operadica::check_cohen_macaulay(interval);
      ji["cm"] = result.cm;
      ji["euler_consistent"] = result.euler_consistent;
      if (!result.detail.empty()) ji["detail"] = result.detail;
      ok = ok && result.cm;
    }
    per_interval.push_back(std::move(ji));
  }
  j["maximal_intervals"] = std::move(per_interval);
  if (iso_weighted) {
    bool iso = operadica::is_isomorphic(poset, operadica::build_weighted_poset(n));
    j["isomorphic_to_weighted"] = iso;
    ok = ok && iso;
  }
  if (!dot.empty()) {
    std::ofstream f(dot);
    f << operadica::to_dot(poset, name + "_" + std::to_string(n));
  }
  j["passed"] = ok;
  emit(j, output);
  return ok ? kExitOk : kExitVerification;
}

int run_report(const std::string& task, int max_n, const std::string& operad,
               const std::string& output) {
  nlohmann::json items = nlohmann::json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass) {
    items.push_back(nlohmann::json{{"item", name}, {"passed", pass}});
    ok = ok && pass;
  };
  if (task == "theorem-black") {
    for (const std::string& name : {"lie", "com"}) {
      auto p = operadica::catalogue::by_name(name);
      auto built = operadica::build_linear_compatible(p);
      auto prod = operadica::black_product(p, operadica::catalogue::lie1());
      std::size_t s = p.generators.count;
      operadica::QMat ident(2 * s, 2 * s);
      for (std::size_t i = 0; i < s; ++i)
        for (int color = 0; color < 2; ++color)
          ident.at(color * s + i, i * 2 + static_cast<std::size_t>(color)) = 1;
      record("linear_compatible(" + name + ") = " + name + " black lie1",
             operadica::relation_spaces_equal(built, prod, ident));
    }
  } else if (task == "corollary-white") {
    for (const std::string& name : {"lie", "com"}) {
      auto p = operadica::catalogue::by_name(name);
      auto built = operadica::build_totally_compatible(p);
      auto prod = operadica::white_product(p, operadica::catalogue::com2());
      std::size_t s = p.generators.count;
      operadica::QMat ident(2 * s, 2 * s);
      for (std::size_t i = 0; i < s; ++i)
        for (int color = 0; color < 2; ++color)
          ident.at(color * s + i, i * 2 + static_cast<std::size_t>(color)) = 1;
      record("totally_compatible(" + name + ") = " + name + " white com2",
             operadica::relation_spaces_equal(built, prod, ident));
    }
  } else if (task == "duality-square") {
    for (const std::string& name : kCatalogue) {
      auto p = operadica::catalogue::by_name(name);
      auto dd = operadica::koszul_dual(operadica::koszul_dual(p));
      record("dual(dual(" + name + ")) = " + name, dd.relations == p.relations);
    }
    record("dual(lie1) = com2", operadica::koszul_dual(operadica::catalogue::lie1()).relations ==
                                    operadica::catalogue::com2().relations);
  } else if (task == "axioms" || task == "basic-set") {
    std::vector<std::string> names =
        operad.empty() ? std::vector<std::string>{"com", "com2", "perm", "as", "permxcom2"}
                       : std::vector<std::string>{operad};
    for (const auto& name : names) {
      auto op = resolve_operad(name);
      int n = max_n > 0 ? max_n : ((name == "as" || name == "permxcom2") ? 4 : 5);
      auto report = task == "axioms" ? operadica::check_operad_axioms(*op, n)
                                     : operadica::check_basic_set(*op, n);
      record(task + "(" + op->id() + ", " + std::to_string(n) + ")", report.passed);
    }
  } else {
    throw CLI::ValidationError("unknown task: " + task);
  }
  emit(nlohmann::json{{"task", task}, {"items", items}, {"passed", ok}}, output);
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary quadratic operads, operadic partition posets, and the\n"
               "Koszulness verification pipeline (duals, products, semimodularity,\n"
               "recursive atom orderings, Cohen-Macaulayness)."};
  app.require_subcommand(1);

  std::string input, output, kind, left, right, name, task, dot, operad;
  int n = 3, max_n = 0;
  bool basic_set = false, semimodular = false, rao = false, cm = false, iso_weighted = false;

  auto* dual = app.add_subcommand("dual", "Koszul dual of a presentation");
  dual->add_option("input", input, "presentation file or catalogue name")->required();
  dual->add_option("-o,--output", output, "output path (default stdout)");

  auto* compat = app.add_subcommand("compat", "linear/totally compatible construction");
  compat->add_option("input", input)->required();
  compat->add_option("-k,--kind", kind, "linear or total")
      ->required()
      ->check(CLI::IsMember({"linear", "total"}));
  compat->add_option("-o,--output", output);

  auto* product = app.add_subcommand("product", "black or white product");
  product->add_option("-k,--kind", kind)->required()->check(CLI::IsMember({"black", "white"}));
  product->add_option("left", left)->required();
  product->add_option("right", right)->required();
  product->add_option("-o,--output", output);

  auto* check = app.add_subcommand("operad-check", "set-operad axiom verification");
  check->add_option("--operad", name, "com, com2, perm, as, permxcom2")->required();
  check->add_option("--max-n", n, "largest total arity")->default_val(4);
  check->add_flag("--basic-set", basic_set, "also check basic-set injectivity");
  check->add_option("-o,--output", output);

  auto* poset = app.add_subcommand("poset", "build a poset and run analytics");
  poset->add_option("operad", name, "com, com2, perm, as, permxcom2, weighted, partition")
      ->required();
  poset->add_option("n", n)->required();
  poset->add_flag("--semimodular", semimodular);
  poset->add_flag("--rao", rao);
  poset->add_flag("--cm", cm);
  poset->add_flag("--iso-weighted", iso_weighted);
  poset->add_option("--dot", dot, "write the Hasse diagram to this DOT file");
  poset->add_option("-o,--output", output);

  auto* report = app.add_subcommand("report", "invariant batteries");
  report->add_option("task", task,
                     "theorem-black, corollary-white, duality-square, axioms, basic-set")
      ->required();
  report->add_option("--max-n", max_n);
  report->add_option("--operad", operad);
  report->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (dual->parsed()) return run_dual(input, output);
    if (compat->parsed()) return run_compat(input, kind, output);
    if (product->parsed()) return run_product(kind, left, right, output);
    if (check->parsed()) return run_operad_check(name, n, basic_set, output);
    if (poset->parsed())
      return run_poset(name, n, semimodular, rao, cm, iso_weighted, dot, output);
    if (report->parsed()) return run_report(task, max_n, operad, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
