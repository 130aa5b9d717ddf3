#include "operadica/shellability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace operadica {

std::vector<std::size_t> paper_atom_ordering(const FinitePoset& p, std::size_t lo,
                                             std::size_t hi) {
  std::vector<std::size_t> atoms;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p.leq(j, hi) && p.covers(j, lo)) atoms.push_back(j);
  std::stable_sort(atoms.begin(), atoms.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = p.elem(a);
    const auto& y = p.elem(b);
    if (x.group != y.group) return x.group < y.group;
    if (x.minor != y.minor) return x.minor < y.minor;
    return x.label < y.label;
  });
  return atoms;
}

namespace {

struct RaoContext {
  const FinitePoset& p;
  std::size_t hi;
  const AtomOrdering& strategy;
  // covers_in[x] = covers of x lying below hi
  std::map<std::size_t, std::vector<std::size_t>> covers_in;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, bool> memo;

  const std::vector<std::size_t>& covers_below_top(std::size_t x) {
    auto it = covers_in.find(x);
    if (it != covers_in.end()) return it->second;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(j, hi) && p.covers(j, x)) out.push_back(j);
    return covers_in.emplace(x, std::move(out)).first->second;
  }

  bool verify(std::size_t cur, std::vector<std::size_t> first_atoms) {
    if (cur == hi || p.covers(hi, cur)) return true;
    std::sort(first_atoms.begin(), first_atoms.end());
    auto key = std::make_pair(cur, first_atoms);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    memo[key] = false;  // cycles in the recursion would be a logic error

    std::vector<std::size_t> ordering = strategy(p, cur, hi);
    {
      auto expected = covers_below_top(cur);
      auto got = ordering;
      std::sort(got.begin(), got.end());
      if (got != expected)
        throw std::logic_error("atom ordering strategy did not return the atoms");
    }
    std::stable_partition(ordering.begin(), ordering.end(), [&](std::size_t a) {
      return std::binary_search(first_atoms.begin(), first_atoms.end(), a);
    });

    bool ok = true;
    // criterion (2): later atoms joined to earlier ones under some lambda are
    // joined already at the cover level
    for (std::size_t j = 1; j < ordering.size() && ok; ++j) {
      std::size_t aj = ordering[j];
      for (std::size_t lambda = 0; lambda < p.size() && ok; ++lambda) {
        if (!p.leq(lambda, hi) || !p.lt(aj, lambda)) continue;
        bool earlier_below = false;
        for (std::size_t i = 0; i < j; ++i)
          if (p.lt(ordering[i], lambda)) { earlier_below = true; break; }
        if (!earlier_below) continue;
        bool witnessed = false;
        for (std::size_t kappa : covers_below_top(aj)) {
          if (!p.leq(kappa, lambda)) continue;
          for (std::size_t i = 0; i < j && !witnessed; ++i)
            if (p.covers(kappa, ordering[i])) witnessed = true;
          if (witnessed) break;
        }
        if (!witnessed) ok = false;
      }
    }
    // criterion (1): recurse with the covers of earlier atoms forced first
    for (std::size_t j = 0; j < ordering.size() && ok; ++j) {
      std::size_t aj = ordering[j];
      std::vector<std::size_t> forced;
      for (std::size_t kappa : covers_below_top(aj))
        for (std::size_t i = 0; i < j; ++i)
          if (p.covers(kappa, ordering[i])) {
            forced.push_back(kappa);
            break;
          }
      if (!verify(aj, std::move(forced))) ok = false;
    }
    memo[key] = ok;
    return ok;
  }
};

}  // namespace

bool verify_recursive_atom_ordering(const FinitePoset& p, std::size_t lo, std::size_t hi,
                                    const AtomOrdering& strategy) {
  if (!p.leq(lo, hi)) throw std::invalid_argument("empty interval");
  FinitePoset interval = p.interval(lo, hi);
  if (!is_graded(interval)) throw std::invalid_argument("interval is not graded");
  RaoContext ctx{p, hi, strategy, {}, {}};
  return ctx.verify(lo, {});
}

bool verify_recursive_atom_ordering(const FinitePoset& bounded, const AtomOrdering& strategy) {
  auto bot = bounded.bottom();
  auto tp = bounded.top();
  if (!bot || !tp) throw std::invalid_argument("RAO check requires a bounded poset");
  return verify_recursive_atom_ordering(bounded, *bot, *tp, strategy);
}

}  // namespace operadica
