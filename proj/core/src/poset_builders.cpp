#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "operadica/posets.hpp"

namespace operadica {

namespace {

using Blocks = std::vector<std::vector<int>>;  // ascending blocks, sorted by min

std::vector<Blocks> set_partitions(int n) {
  std::vector<Blocks> out;
  Blocks cur;
  auto recurse = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(cur);
      return;
    }
    // index-based: the recursive call appends to cur and may reallocate it
    std::size_t block_count = cur.size();
    for (std::size_t bi = 0; bi < block_count; ++bi) {
      cur[bi].push_back(next);
      self(self, next + 1);
      cur[bi].pop_back();
    }
    cur.push_back({next});
    self(self, next + 1);
    cur.pop_back();
  };
  recurse(recurse, 1);
  for (auto& blocks : out)
    std::sort(blocks.begin(), blocks.end());  // blocks are ascending already
  return out;
}

std::string blocks_key(const Blocks& blocks) {
  std::string s;
  for (const auto& block : blocks) {
    if (!s.empty()) s += "|";
    for (int x : block) s += std::to_string(x);
  }
  return s;
}

bool refines(const Blocks& fine, const Blocks& coarse) {
  for (const auto& a : fine) {
    bool inside = false;
    for (const auto& b : coarse)
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        inside = true;
        break;
      }
    if (inside) continue;
    return false;
  }
  return true;
}

FinitePoset from_order(std::vector<PosetElem> elems,
                       const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<std::vector<bool>> rel(elems.size(), std::vector<bool>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) rel[i][j] = leq(i, j);
  return FinitePoset(std::move(elems), std::move(rel));
}

}  // namespace

FinitePoset build_partition_poset(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("supported range is 1 <= n <= 8");
  auto partitions = set_partitions(n);
  std::sort(partitions.begin(), partitions.end(),
            [](const Blocks& a, const Blocks& b) { return blocks_key(a) < blocks_key(b); });
  std::vector<PosetElem> elems;
  for (const auto& blocks : partitions) {
    std::string key = blocks_key(blocks);
    elems.push_back(PosetElem{key, key, 0, key});
  }
  return from_order(std::move(elems), [&](std::size_t i, std::size_t j) {
    return refines(partitions[i], partitions[j]);
  });
}

namespace {

struct Enriched {
  Blocks blocks;
  std::vector<OpElem> decors;  // parallel to blocks
};

/// Does the merged block (q on B) arise from the given decorated sub-blocks?
bool block_composable(const SetOperad& op, const std::vector<std::vector<int>>& subs,
                      const std::vector<OpElem>& decors, const std::vector<int>& merged,
                      const OpElem& q) {
  std::vector<int> concat;
  for (const auto& sub : subs) concat.insert(concat.end(), sub.begin(), sub.end());
  Permutation rho;
  for (int label : concat) {
    auto it = std::lower_bound(merged.begin(), merged.end(), label);
    rho.images.push_back(static_cast<int>(it - merged.begin()) + 1);
  }
  Permutation pi = rho.inverse();
  for (const auto& p : op.elements(static_cast<int>(subs.size())))
    if (op.act(op.compose(p, decors), pi) == q) return true;
  return false;
}

bool enriched_leq(const SetOperad& op, const Enriched& alpha, const Enriched& beta) {
  if (!refines(alpha.blocks, beta.blocks)) return false;
  for (std::size_t j = 0; j < beta.blocks.size(); ++j) {
    const auto& merged = beta.blocks[j];
    std::vector<std::vector<int>> subs;
    std::vector<OpElem> decors;
    for (std::size_t i = 0; i < alpha.blocks.size(); ++i)
      if (std::includes(merged.begin(), merged.end(), alpha.blocks[i].begin(),
                        alpha.blocks[i].end())) {
        subs.push_back(alpha.blocks[i]);
        decors.push_back(alpha.decors[i]);
      }
    if (!block_composable(op, subs, decors, merged, beta.decors[j])) return false;
  }
  return true;
}

}  // namespace

FinitePoset build_operadic_poset(const SetOperad& op, int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("supported range is 1 <= n <= 6");
  std::vector<Enriched> elements;
  for (const auto& blocks : set_partitions(n)) {
    std::vector<std::vector<OpElem>> choices;
    for (const auto& block : blocks)
      choices.push_back(op.elements(static_cast<int>(block.size())));
    std::vector<std::size_t> pick(blocks.size(), 0);
    while (true) {
      Enriched e{blocks, {}};
      for (std::size_t i = 0; i < blocks.size(); ++i) e.decors.push_back(choices[i][pick[i]]);
      elements.push_back(std::move(e));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  auto describe = [&](const Enriched& e, bool grouped) {
    std::string s;
    for (std::size_t i = 0; i < e.blocks.size(); ++i) {
      if (!s.empty()) s += "|";
      for (int x : e.blocks[i]) s += std::to_string(x);
      std::string suffix = grouped ? op.group_label(e.decors[i]) : op.label(e.decors[i]);
      if (!suffix.empty()) s += "^" + suffix;
    }
    return s;
  };
  std::vector<PosetElem> labels;
  for (const auto& e : elements) {
    int minor = 0;
    for (const auto& d : e.decors) minor += op.weight(d);
    labels.push_back(PosetElem{describe(e, false), describe(e, true), minor,
                               blocks_key(e.blocks)});
  }
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return labels[a].label < labels[b].label;
  });
  std::vector<Enriched> sorted_elements;
  std::vector<PosetElem> sorted_labels;
  for (std::size_t i : order) {
    sorted_elements.push_back(std::move(elements[i]));
    sorted_labels.push_back(std::move(labels[i]));
  }
  return from_order(std::move(sorted_labels), [&](std::size_t i, std::size_t j) {
    return enriched_leq(op, sorted_elements[i], sorted_elements[j]);
  });
}

FinitePoset build_weighted_poset(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("supported range is 1 <= n <= 7");
  struct Weighted {
    Blocks blocks;
    std::vector<int> weights;
  };
  std::vector<Weighted> elements;
  for (const auto& blocks : set_partitions(n)) {
    std::vector<int> weights(blocks.size(), 0);
    while (true) {
      elements.push_back({blocks, weights});
      std::size_t i = 0;
      while (i < weights.size() &&
             ++weights[i] == static_cast<int>(blocks[i].size())) weights[i++] = 0;
      if (i == weights.size()) break;
    }
  }
  auto leq = [&](const Weighted& alpha, const Weighted& beta) {
    if (!refines(alpha.blocks, beta.blocks)) return false;
    for (std::size_t j = 0; j < beta.blocks.size(); ++j) {
      const auto& merged = beta.blocks[j];
      int sum = 0, parts = 0;
      for (std::size_t i = 0; i < alpha.blocks.size(); ++i)
        if (std::includes(merged.begin(), merged.end(), alpha.blocks[i].begin(),
                          alpha.blocks[i].end())) {
          sum += alpha.weights[i];
          ++parts;
        }
      if (beta.weights[j] < sum || beta.weights[j] > sum + parts - 1) return false;
    }
    return true;
  };
  std::vector<PosetElem> labels;
  for (const auto& e : elements) {
    std::string s;
    int total = 0;
    for (std::size_t i = 0; i < e.blocks.size(); ++i) {
      if (!s.empty()) s += "|";
      for (int x : e.blocks[i]) s += std::to_string(x);
      s += "^" + std::to_string(e.weights[i]);
      total += e.weights[i];
    }
    labels.push_back(PosetElem{s, blocks_key(e.blocks), total, blocks_key(e.blocks)});
  }
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return labels[a].label < labels[b].label;
  });
  std::vector<Weighted> sorted_elements;
  std::vector<PosetElem> sorted_labels;
  for (std::size_t i : order) {
    sorted_elements.push_back(std::move(elements[i]));
    sorted_labels.push_back(std::move(labels[i]));
  }
  return from_order(std::move(sorted_labels), [&](std::size_t i, std::size_t j) {
    return leq(sorted_elements[i], sorted_elements[j]);
  });
}

FinitePoset fiber_product(const FinitePoset& a, const FinitePoset& b) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a.elem(i).partition_key == b.elem(j).partition_key) pairs.emplace_back(i, j);
  std::vector<PosetElem> elems;
  for (auto [i, j] : pairs) {
    const auto& x = a.elem(i);
    const auto& y = b.elem(j);
    elems.push_back(PosetElem{"(" + x.label + ";" + y.label + ")",
                              "(" + x.group + ";" + y.group + ")", x.minor + y.minor,
                              x.partition_key});
  }
  return from_order(std::move(elems), [&](std::size_t s, std::size_t t) {
    return a.leq(pairs[s].first, pairs[t].first) && b.leq(pairs[s].second, pairs[t].second);
  });
}

}  // namespace operadica
