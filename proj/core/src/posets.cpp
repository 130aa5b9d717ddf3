#include "operadica/posets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "operadica/homology.hpp"

namespace operadica {

FinitePoset::FinitePoset(std::vector<PosetElem> elems, std::vector<std::vector<bool>> leq)
    : elems_(std::move(elems)), leq_(std::move(leq)) {
  std::size_t n = elems_.size();
  if (leq_.size() != n) throw std::invalid_argument("relation matrix size mismatch");
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("relation matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw std::invalid_argument("relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i])
        throw std::invalid_argument("relation is not antisymmetric");
      if (!leq_[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq_[j][k] && !leq_[i][k])
          throw std::invalid_argument("relation is not transitive");
    }
  }
}

bool FinitePoset::covers(std::size_t j, std::size_t i) const {
  if (!lt(i, j)) return false;
  for (std::size_t z = 0; z < size(); ++z)
    if (lt(i, z) && lt(z, j)) return false;
  return true;
}

std::vector<std::size_t> FinitePoset::covers_of(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (covers(j, i)) out.push_back(j);
  return out;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < size(); ++j)
      if (lt(j, i)) { minimal = false; break; }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < size(); ++j)
      if (lt(i, j)) { maximal = false; break; }
    if (maximal) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  auto mins = minimal_elements();
  if (mins.size() == 1) return mins.front();
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs.front();
  return std::nullopt;
}

std::size_t FinitePoset::hasse_edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) count += covers_of(i).size();
  return count;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& idx) const {
  std::vector<PosetElem> elems;
  for (std::size_t i : idx) elems.push_back(elems_[i]);
  std::vector<std::vector<bool>> rel(idx.size(), std::vector<bool>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) rel[a][b] = leq_[idx[a]][idx[b]];
  return FinitePoset(std::move(elems), std::move(rel));
}

std::vector<std::size_t> FinitePoset::interval_indices(std::size_t lo, std::size_t hi) const {
  if (!leq(lo, hi)) throw std::invalid_argument("empty interval");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < size(); ++i)
    if (leq_[lo][i] && leq_[i][hi]) idx.push_back(i);
  return idx;
}

FinitePoset FinitePoset::interval(std::size_t lo, std::size_t hi) const {
  return induced(interval_indices(lo, hi));
}

std::vector<FinitePoset> maximal_intervals(const FinitePoset& p) {
  auto bot = p.bottom();
  if (!bot) throw std::invalid_argument("poset has no bottom element");
  std::vector<FinitePoset> out;
  for (std::size_t g : p.maximal_elements()) out.push_back(p.interval(*bot, g));
  return out;
}

bool is_graded(const FinitePoset& p, std::vector<int>* ranks) {
  auto bot = p.bottom();
  auto tp = p.top();
  if (!bot || !tp) throw std::invalid_argument("gradedness requires a bounded poset");
  // longest-chain rank from the bottom, by DP over a linear extension
  // (a < b implies strictly fewer elements below a, so this sort is one)
  auto below_count = [&](std::size_t x) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.lt(j, x)) ++c;
    return c;
  };
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ca = below_count(a), cb = below_count(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<int> rank(p.size(), 0);
  for (std::size_t i : order)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.lt(j, i)) rank[i] = std::max(rank[i], rank[j] + 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j : p.covers_of(i))
      if (rank[j] != rank[i] + 1) return false;
  if (ranks) *ranks = rank;
  return true;
}

bool is_semimodular(const FinitePoset& p, std::size_t lo, std::size_t hi,
                    SemimodularityWitness* witness) {
  auto idx = p.interval_indices(lo, hi);
  for (std::size_t z : idx) {
    std::vector<std::size_t> ups;
    for (std::size_t a : idx)
      if (p.covers(a, z)) ups.push_back(a);
    for (std::size_t ai = 0; ai < ups.size(); ++ai)
      for (std::size_t bi = ai + 1; bi < ups.size(); ++bi) {
        std::size_t a = ups[ai], b = ups[bi];
        bool found = false;
        for (std::size_t w : idx)
          if (p.covers(w, a) && p.covers(w, b)) { found = true; break; }
        if (found) continue;
        if (witness) {
          witness->base = p.elem(z).label;
          witness->first = p.elem(a).label;
          witness->second = p.elem(b).label;
          witness->excluded_covers.clear();
          for (std::size_t w = 0; w < p.size(); ++w)
            if (p.covers(w, a) && p.covers(w, b) && !p.leq(w, hi))
              witness->excluded_covers.push_back(p.elem(w).label);
        }
        return false;
      }
  }
  return true;
}

bool is_semimodular(const FinitePoset& bounded, SemimodularityWitness* witness) {
  auto bot = bounded.bottom();
  auto tp = bounded.top();
  if (!bot || !tp) throw std::invalid_argument("semimodularity requires a bounded poset");
  return is_semimodular(bounded, *bot, *tp, witness);
}

bool is_totally_semimodular(const FinitePoset& p, std::size_t lo, std::size_t hi) {
  auto idx = p.interval_indices(lo, hi);
  for (std::size_t a : idx)
    for (std::size_t b : idx)
      if (p.leq(a, b) && !is_semimodular(p, a, b)) return false;
  return true;
}

bool is_totally_semimodular(const FinitePoset& bounded) {
  auto bot = bounded.bottom();
  auto tp = bounded.top();
  if (!bot || !tp) throw std::invalid_argument("semimodularity requires a bounded poset");
  return is_totally_semimodular(bounded, *bot, *tp);
}

namespace {

struct IsoInvariants {
  std::vector<std::size_t> colors;
  std::map<std::vector<long>, std::size_t> palette;
};

std::vector<std::size_t> refine_colors(const FinitePoset& p) {
  // start from coarse per-element statistics, then refine by neighbor colors
  std::vector<std::size_t> colors(p.size());
  {
    std::map<std::vector<long>, std::size_t> palette;
    for (std::size_t i = 0; i < p.size(); ++i) {
      long below = 0, above = 0;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p.lt(j, i)) ++below;
        if (p.lt(i, j)) ++above;
      }
      std::vector<long> key{below, above, static_cast<long>(p.covers_of(i).size())};
      auto [it, _] = palette.emplace(key, palette.size());
      colors[i] = it->second;
    }
  }
  for (std::size_t round = 0; round < p.size(); ++round) {
    std::map<std::vector<long>, std::size_t> palette;
    std::vector<std::size_t> next(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<long> key{static_cast<long>(colors[i])};
      std::vector<long> down, up;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p.lt(j, i)) down.push_back(static_cast<long>(colors[j]));
        if (p.lt(i, j)) up.push_back(static_cast<long>(colors[j]));
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      key.push_back(-1);
      key.insert(key.end(), down.begin(), down.end());
      key.push_back(-2);
      key.insert(key.end(), up.begin(), up.end());
      auto [it, _] = palette.emplace(key, palette.size());
      next[i] = it->second;
    }
    if (next == colors) break;
    colors = std::move(next);
  }
  return colors;
}

bool iso_backtrack(const FinitePoset& a, const FinitePoset& b,
                   const std::vector<std::size_t>& ca, const std::vector<std::size_t>& cb,
                   std::vector<std::size_t>& map_ab, std::vector<bool>& used,
                   std::size_t next) {
  if (next == a.size()) return true;
  for (std::size_t cand = 0; cand < b.size(); ++cand) {
    if (used[cand] || cb[cand] != ca[next]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      if (a.leq(prev, next) != b.leq(map_ab[prev], cand)) ok = false;
      if (a.leq(next, prev) != b.leq(cand, map_ab[prev])) ok = false;
    }
    if (!ok) continue;
    map_ab[next] = cand;
    used[cand] = true;
    if (iso_backtrack(a, b, ca, cb, map_ab, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FinitePoset& a, const FinitePoset& b,
                   std::vector<std::size_t>* witness) {
  if (a.size() != b.size()) return false;
  auto ca = refine_colors(a);
  auto cb = refine_colors(b);
  // the color class profile has to match; palettes are built per-poset, so
  // compare multisets of class sizes keyed by canonical invariants instead
  auto histogram = [](const std::vector<std::size_t>& c) {
    std::map<std::size_t, long> h;
    for (std::size_t x : c) ++h[x];
    std::vector<long> sizes;
    for (auto& [_, v] : h) sizes.push_back(v);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (histogram(ca) != histogram(cb)) return false;
  std::vector<std::size_t> map_ab(a.size());
  std::vector<bool> used(b.size(), false);
  if (!iso_backtrack(a, b, ca, cb, map_ab, used, 0)) return false;
  if (witness) *witness = map_ab;
  return true;
}

long mobius(const FinitePoset& p, std::size_t lo, std::size_t hi) {
  if (!p.leq(lo, hi)) throw std::invalid_argument("empty interval");
  auto idx = p.interval_indices(lo, hi);
  std::map<std::size_t, long> mu;
  // process in a linear extension from lo upward
  auto below_count = [&](std::size_t x) {
    std::size_t c = 0;
    for (std::size_t j : idx)
      if (p.lt(j, x)) ++c;
    return c;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto ca = below_count(a), cb = below_count(b);
    return ca != cb ? ca < cb : a < b;
  });
  for (std::size_t x : idx) {
    if (x == lo) {
      mu[x] = 1;
      continue;
    }
    long sum = 0;
    for (std::size_t z : idx)
      if (p.leq(z, x) && z != x && p.leq(lo, z)) sum += mu[z];
    mu[x] = -sum;
  }
  return mu[hi];
}

long mobius(const FinitePoset& bounded) {
  auto bot = bounded.bottom();
  auto tp = bounded.top();
  if (!bot || !tp) throw std::invalid_argument("mobius requires a bounded poset");
  return mobius(bounded, *bot, *tp);
}

std::vector<long> interval_homology(const FinitePoset& p, std::size_t lo, std::size_t hi) {
  if (!p.lt(lo, hi)) throw std::invalid_argument("interval must have at least two elements");
  std::vector<std::size_t> open;
  for (std::size_t i : p.interval_indices(lo, hi))
    if (i != lo && i != hi) open.push_back(i);
  // order the open interval by a linear extension for deterministic output
  auto below_count = [&](std::size_t x) {
    std::size_t c = 0;
    for (std::size_t j : open)
      if (p.lt(j, x)) ++c;
    return c;
  };
  std::sort(open.begin(), open.end(), [&](std::size_t a, std::size_t b) {
    auto ca = below_count(a), cb = below_count(b);
    return ca != cb ? ca < cb : a < b;
  });
  // chains_by_dim[d] = all (d+1)-element strict chains
  std::vector<std::vector<std::vector<std::size_t>>> chains_by_dim;
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t x : open) frontier.push_back({x});
  while (!frontier.empty()) {
    chains_by_dim.push_back(frontier);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& chain : frontier)
      for (std::size_t x : open)
        if (p.lt(chain.back(), x)) {
          auto longer = chain;
          longer.push_back(x);
          next.push_back(std::move(longer));
        }
    frontier = std::move(next);
  }
  std::vector<QMat> boundaries;
  if (chains_by_dim.empty()) {
    boundaries.emplace_back(1, 0);
    return homology_ranks(boundaries);
  }
  {
    QMat aug(1, chains_by_dim[0].size());
    for (std::size_t c = 0; c < aug.cols; ++c) aug.at(0, c) = 1;
    boundaries.push_back(std::move(aug));
  }
  for (std::size_t d = 1; d < chains_by_dim.size(); ++d) {
    std::map<std::vector<std::size_t>, std::size_t> lower_index;
    for (std::size_t c = 0; c < chains_by_dim[d - 1].size(); ++c)
      lower_index[chains_by_dim[d - 1][c]] = c;
    QMat bd(chains_by_dim[d - 1].size(), chains_by_dim[d].size());
    for (std::size_t c = 0; c < chains_by_dim[d].size(); ++c) {
      const auto& chain = chains_by_dim[d][c];
      for (std::size_t t = 0; t < chain.size(); ++t) {
        std::vector<std::size_t> face;
        for (std::size_t u = 0; u < chain.size(); ++u)
          if (u != t) face.push_back(chain[u]);
        bd.at(lower_index.at(face), c) += (t % 2 == 0) ? Rational(1) : Rational(-1);
      }
    }
    boundaries.push_back(std::move(bd));
  }
  return homology_ranks(boundaries);
}

std::vector<long> interval_homology(const FinitePoset& bounded) {
  auto bot = bounded.bottom();
  auto tp = bounded.top();
  if (!bot || !tp) throw std::invalid_argument("homology requires a bounded poset");
  return interval_homology(bounded, *bot, *tp);
}

CMResult check_cohen_macaulay(const FinitePoset& p, std::size_t lo, std::size_t hi) {
  CMResult result;
  result.euler_consistent = true;
  FinitePoset interval = p.interval(lo, hi);
  std::vector<int> ranks;
  if (!is_graded(interval, &ranks)) {
    result.detail = "interval is not graded";
    return result;
  }
  result.cm = true;
  for (std::size_t x = 0; x < interval.size(); ++x)
    for (std::size_t y = 0; y < interval.size(); ++y) {
      if (!interval.lt(x, y)) continue;
      int length = ranks[y] - ranks[x];
      auto h = interval_homology(interval, x, y);
      long euler = 0;
      for (std::size_t d = 0; d < h.size(); ++d)
        euler += (d % 2 == 0 ? 1 : -1) * h[d];  // degree d - 1 has sign (-1)^(d-1)
      if (-euler != mobius(interval, x, y)) {
        result.euler_consistent = false;
        result.cm = false;
        result.detail = "Euler/Mobius mismatch on [" + interval.elem(x).label + ", " +
                        interval.elem(y).label + "]";
        return result;
      }
      // homology may live only in degree length - 2
      for (std::size_t d = 0; d < h.size(); ++d) {
        int degree = static_cast<int>(d) - 1;
        if (h[d] != 0 && degree != length - 2) {
          result.cm = false;
          if (result.detail.empty())
            result.detail = "homology in degree " + std::to_string(degree) +
                            " on [" + interval.elem(x).label + ", " +
                            interval.elem(y).label + "]";
        }
      }
      if (!result.cm) return result;
    }
  return result;
}

CMResult check_cohen_macaulay(const FinitePoset& bounded) {
  auto bot = bounded.bottom();
  auto tp = bounded.top();
  if (!bot || !tp) throw std::invalid_argument("CM check requires a bounded poset");
  return check_cohen_macaulay(bounded, *bot, *tp);
}

std::string to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.elem(i).label << "\"];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j : p.covers_of(i)) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace operadica
