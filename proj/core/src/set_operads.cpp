#include "operadica/set_operads.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace operadica {

namespace {

std::string elem_str(const SetOperad& op, const OpElem& x) {
  std::ostringstream os;
  os << x.operad_id << "(n=" << x.arity;
  std::string lbl = op.label(x);
  if (!lbl.empty()) os << ", " << lbl;
  os << ")";
  return os.str();
}

void require_same_operad(const SetOperad& op, const OpElem& x) {
  if (x.operad_id != op.id())
    throw std::invalid_argument("element of operad '" + x.operad_id +
                                "' passed to operad '" + op.id() + "'");
}

}  // namespace

OpElem SetOperad::unit() const {
  auto ones = elements(1);
  if (ones.size() != 1) throw std::logic_error("operad '" + id_ + "' has no unique unit");
  return ones.front();
}

OpElem SetOperad::compose(const OpElem& p, const std::vector<OpElem>& qs) const {
  require_same_operad(*this, p);
  if (static_cast<int>(qs.size()) != p.arity)
    throw std::invalid_argument("compose: expected " + std::to_string(p.arity) +
                                " arguments, got " + std::to_string(qs.size()));
  for (const auto& q : qs) {
    require_same_operad(*this, q);
    if (q.arity < 1) throw std::invalid_argument("compose: argument of arity < 1");
  }
  return compose_impl(p, qs);
}

OpElem SetOperad::act(const OpElem& x, const Permutation& sigma) const {
  require_same_operad(*this, x);
  if (sigma.n() != x.arity || !sigma.is_valid())
    throw std::invalid_argument("act: expected a permutation of [" +
                                std::to_string(x.arity) + "]");
  return act_impl(x, sigma);
}

namespace {

class ComOperad final : public SetOperad {
 public:
  ComOperad() : SetOperad("com") {}

  std::vector<OpElem> elements(int n) const override {
    if (n < 1) return {};
    return {make(n, {})};
  }
  std::string label(const OpElem&) const override { return ""; }

 protected:
  OpElem compose_impl(const OpElem&, const std::vector<OpElem>& qs) const override {
    int n = 0;
    for (const auto& q : qs) n += q.arity;
    return make(n, {});
  }
  OpElem act_impl(const OpElem& x, const Permutation&) const override { return x; }
};

// Elements D^n_i with 0 <= i <= n-1 white products; payload = {i}.
class Com2Operad final : public SetOperad {
 public:
  Com2Operad() : SetOperad("com2") {}

  std::vector<OpElem> elements(int n) const override {
    std::vector<OpElem> out;
    for (int i = 0; i < n; ++i) out.push_back(make(n, {i}));
    return out;
  }
  std::string label(const OpElem& x) const override {
    return std::to_string(weight(x));
  }
  std::string group_label(const OpElem&) const override { return ""; }
  int weight(const OpElem& x) const override { return x.arity - 1 - x.payload[0]; }

 protected:
  OpElem compose_impl(const OpElem& p, const std::vector<OpElem>& qs) const override {
    int n = 0;
    int i = p.payload[0];
    for (const auto& q : qs) {
      n += q.arity;
      i += q.payload[0];
    }
    return make(n, {i});
  }
  OpElem act_impl(const OpElem& x, const Permutation&) const override { return x; }
};

// Pointed sets; payload = {pointed position in [n]}.
class PermOperad final : public SetOperad {
 public:
  PermOperad() : SetOperad("perm") {}

  std::vector<OpElem> elements(int n) const override {
    std::vector<OpElem> out;
    for (int r = 1; r <= n; ++r) out.push_back(make(n, {r}));
    return out;
  }
  std::string label(const OpElem& x) const override {
    return "p" + std::to_string(x.payload[0]);
  }

 protected:
  OpElem compose_impl(const OpElem& p, const std::vector<OpElem>& qs) const override {
    int r = p.payload[0];
    int offset = 0;
    for (int j = 0; j < r - 1; ++j) offset += qs[static_cast<std::size_t>(j)].arity;
    int n = 0;
    for (const auto& q : qs) n += q.arity;
    return make(n, {offset + qs[static_cast<std::size_t>(r) - 1].payload[0]});
  }
  OpElem act_impl(const OpElem& x, const Permutation& sigma) const override {
    return make(x.arity, {sigma.inverse()(x.payload[0])});
  }
};

// Associative operad: payload = a permutation of [n] written as a word.
class AsOperad final : public SetOperad {
 public:
  AsOperad() : SetOperad("as") {}

  std::vector<OpElem> elements(int n) const override {
    std::vector<OpElem> out;
    for (const auto& sigma : Permutation::all(n)) out.push_back(make(n, sigma.images));
    return out;
  }
  std::string label(const OpElem& x) const override {
    std::string s;
    for (int t : x.payload) s += std::to_string(t);
    return s;
  }

 protected:
  OpElem compose_impl(const OpElem& p, const std::vector<OpElem>& qs) const override {
    std::vector<int> offsets(qs.size() + 1, 0);
    for (std::size_t j = 0; j < qs.size(); ++j) offsets[j + 1] = offsets[j] + qs[j].arity;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(offsets.back()));
    for (int letter : p.payload)
      for (int t : qs[static_cast<std::size_t>(letter) - 1].payload)
        word.push_back(offsets[static_cast<std::size_t>(letter) - 1] + t);
    return make(offsets.back(), std::move(word));
  }
  OpElem act_impl(const OpElem& x, const Permutation& sigma) const override {
    Permutation inv = sigma.inverse();
    std::vector<int> word;
    word.reserve(x.payload.size());
    for (int t : x.payload) word.push_back(inv(t));
    return make(x.arity, std::move(word));
  }
};

// Componentwise pairs; payload = {|left payload|, left..., right...}.
class HadamardOperad final : public SetOperad {
 public:
  HadamardOperad(SetOperadPtr p, SetOperadPtr q)
      : SetOperad(p->id() + "x" + q->id()), p_(std::move(p)), q_(std::move(q)) {}

  std::vector<OpElem> elements(int n) const override {
    std::vector<OpElem> out;
    for (const auto& a : p_->elements(n))
      for (const auto& b : q_->elements(n)) out.push_back(pack(a, b));
    return out;
  }
  std::string label(const OpElem& x) const override {
    auto [a, b] = unpack(x);
    std::string la = p_->label(a), lb = q_->label(b);
    if (la.empty()) return lb;
    if (lb.empty()) return la;
    return la + "," + lb;
  }
  std::string group_label(const OpElem& x) const override {
    auto [a, b] = unpack(x);
    std::string la = p_->group_label(a), lb = q_->group_label(b);
    if (la.empty()) return lb;
    if (lb.empty()) return la;
    return la + "," + lb;
  }
  int weight(const OpElem& x) const override {
    auto [a, b] = unpack(x);
    return p_->weight(a) + q_->weight(b);
  }

 protected:
  OpElem compose_impl(const OpElem& p, const std::vector<OpElem>& qs) const override {
    auto [pa, pb] = unpack(p);
    std::vector<OpElem> as, bs;
    for (const auto& q : qs) {
      auto [qa, qb] = unpack(q);
      as.push_back(std::move(qa));
      bs.push_back(std::move(qb));
    }
    return pack(p_->compose(pa, as), q_->compose(pb, bs));
  }
  OpElem act_impl(const OpElem& x, const Permutation& sigma) const override {
    auto [a, b] = unpack(x);
    return pack(p_->act(a, sigma), q_->act(b, sigma));
  }

 private:
  OpElem pack(const OpElem& a, const OpElem& b) const {
    std::vector<int> payload;
    payload.push_back(static_cast<int>(a.payload.size()));
    payload.insert(payload.end(), a.payload.begin(), a.payload.end());
    payload.insert(payload.end(), b.payload.begin(), b.payload.end());
    return make(a.arity, std::move(payload));
  }
  std::pair<OpElem, OpElem> unpack(const OpElem& x) const {
    auto la = static_cast<std::size_t>(x.payload[0]);
    return {OpElem{p_->id(), x.arity,
                   std::vector<int>(x.payload.begin() + 1, x.payload.begin() + 1 + static_cast<long>(la))},
            OpElem{q_->id(), x.arity,
                   std::vector<int>(x.payload.begin() + 1 + static_cast<long>(la), x.payload.end())}};
  }

  SetOperadPtr p_, q_;
};

}  // namespace

SetOperadPtr builtin_operad(const std::string& name) {
  if (name == "com") return std::make_shared<ComOperad>();
  if (name == "com2") return std::make_shared<Com2Operad>();
  if (name == "perm") return std::make_shared<PermOperad>();
  if (name == "as") return std::make_shared<AsOperad>();
  throw std::invalid_argument("unknown set operad: " + name);
}

SetOperadPtr hadamard_product(SetOperadPtr p, SetOperadPtr q) {
  return std::make_shared<HadamardOperad>(std::move(p), std::move(q));
}

std::size_t linearized_dim(const SetOperad& p, int n) {
  return p.elements(n).size();
}

nlohmann::json OperadCheckReport::to_json() const {
  nlohmann::json j{{"operad", operad}, {"max_n", max_n}, {"passed", passed}};
  if (!counterexample.empty()) j["counterexample"] = counterexample;
  return j;
}

namespace {

/// All compositions of n into k positive parts.
std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  for (int first = 1; first + (k - 1) <= n; ++first)
    for (auto rest : compositions(n - first, k - 1)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

/// All tuples (q_1, ..., q_k) with the given arities.
void argument_tuples(const SetOperad& op, const std::vector<int>& arities,
                     std::size_t pos, std::vector<OpElem>& cur,
                     const std::function<bool(const std::vector<OpElem>&)>& fn,
                     bool& keep_going) {
  if (!keep_going) return;
  if (pos == arities.size()) {
    keep_going = fn(cur);
    return;
  }
  for (const auto& q : op.elements(arities[pos])) {
    cur.push_back(q);
    argument_tuples(op, arities, pos + 1, cur, fn, keep_going);
    cur.pop_back();
    if (!keep_going) return;
  }
}

bool for_each_composite(const SetOperad& op, int max_n,
                        const std::function<bool(const OpElem&, const std::vector<OpElem>&)>& fn) {
  for (int k = 1; k <= max_n; ++k)
    for (int n = k; n <= max_n; ++n)
      for (const auto& arities : compositions(n, k))
        for (const auto& p : op.elements(k)) {
          bool keep_going = true;
          std::vector<OpElem> cur;
          argument_tuples(op, arities, 0, cur,
                          [&](const std::vector<OpElem>& qs) { return fn(p, qs); },
                          keep_going);
          if (!keep_going) return false;
        }
  return true;
}

}  // namespace

OperadCheckReport check_operad_axioms(const SetOperad& op, int max_n) {
  OperadCheckReport report{op.id(), max_n, true, ""};
  auto fail = [&](const std::string& what) {
    report.passed = false;
    report.counterexample = what;
    return false;
  };
  OpElem e = op.unit();

  // unit laws and the right-action property
  for (int n = 1; n <= max_n && report.passed; ++n) {
    auto perms = Permutation::all(n);
    for (const auto& x : op.elements(n)) {
      if (op.compose(x, std::vector<OpElem>(static_cast<std::size_t>(n), e)) != x) {
        fail("right unit law fails at " + elem_str(op, x));
        break;
      }
      if (op.compose(e, {x}) != x) {
        fail("left unit law fails at " + elem_str(op, x));
        break;
      }
      if (op.act(x, Permutation::identity(n)) != x) {
        fail("identity permutation moves " + elem_str(op, x));
        break;
      }
      bool ok = true;
      for (const auto& sigma : perms) {
        for (const auto& tau : perms)
          if (op.act(op.act(x, sigma), tau) != op.act(x, tau.then(sigma))) {
            fail("action composition fails at " + elem_str(op, x));
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) break;
    }
  }
  if (!report.passed) return report;

  // outer and inner equivariance
  bool ok = for_each_composite(op, max_n, [&](const OpElem& p, const std::vector<OpElem>& qs) {
    int k = p.arity;
    std::vector<int> sizes;
    for (const auto& q : qs) sizes.push_back(q.arity);
    OpElem composed = op.compose(p, qs);
    for (const auto& sigma : Permutation::all(k)) {
      Permutation inv = sigma.inverse();
      std::vector<OpElem> permuted;
      for (int j = 1; j <= k; ++j) permuted.push_back(qs[static_cast<std::size_t>(inv(j)) - 1]);
      OpElem lhs = op.compose(op.act(p, sigma), qs);
      OpElem rhs = op.act(op.compose(p, permuted), Permutation::block(sigma, sizes));
      if (lhs != rhs)
        return fail("outer equivariance fails at " + elem_str(op, p));
    }
    for (std::size_t j = 0; j < qs.size(); ++j)
      for (const auto& tau : Permutation::all(qs[j].arity)) {
        std::vector<OpElem> twisted = qs;
        twisted[j] = op.act(qs[j], tau);
        std::vector<Permutation> parts;
        for (std::size_t t = 0; t < qs.size(); ++t)
          parts.push_back(t == j ? tau : Permutation::identity(qs[t].arity));
        if (op.compose(p, twisted) != op.act(composed, Permutation::direct_sum(parts)))
          return fail("inner equivariance fails at " + elem_str(op, p));
      }
    return true;
  });
  if (!ok) return report;

  // two-level associativity
  for_each_composite(op, max_n, [&](const OpElem& p, const std::vector<OpElem>& qs) {
    OpElem composed = op.compose(p, qs);
    int n = composed.arity;
    bool keep_going = true;
    std::vector<std::vector<int>> inners;
    for (int total = n; total <= max_n; ++total)
      for (auto& c : compositions(total, n)) inners.push_back(std::move(c));
    for (const auto& inner : inners) {
      std::vector<OpElem> cur;
      argument_tuples(op, inner, 0, cur,
                      [&](const std::vector<OpElem>& rs) {
                        OpElem flat = op.compose(composed, rs);
                        std::vector<OpElem> nested;
                        std::size_t at = 0;
                        for (const auto& q : qs) {
                          std::vector<OpElem> slice(rs.begin() + static_cast<long>(at),
                                                    rs.begin() + static_cast<long>(at + static_cast<std::size_t>(q.arity)));
                          at += static_cast<std::size_t>(q.arity);
                          nested.push_back(op.compose(q, slice));
                        }
                        if (op.compose(p, nested) != flat)
                          return fail("associativity fails at " + elem_str(op, p));
                        return true;
                      },
                      keep_going);
      if (!keep_going) break;
    }
    return keep_going;
  });
  return report;
}

OperadCheckReport check_basic_set(const SetOperad& op, int max_n) {
  OperadCheckReport report{op.id(), max_n, true, ""};
  for (int k = 1; k <= max_n && report.passed; ++k) {
    auto outers = op.elements(k);
    for (int n = k; n <= max_n && report.passed; ++n)
      for (const auto& arities : compositions(n, k)) {
        bool keep_going = true;
        std::vector<OpElem> cur;
        argument_tuples(op, arities, 0, cur,
                        [&](const std::vector<OpElem>& qs) {
                          std::vector<OpElem> images;
                          for (const auto& p : outers) images.push_back(op.compose(p, qs));
                          std::sort(images.begin(), images.end());
                          if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
                            report.passed = false;
                            report.counterexample =
                                "composition with fixed arguments is not injective on " +
                                op.id() + "_" + std::to_string(k);
                            return false;
                          }
                          return true;
                        },
                        keep_going);
        if (!keep_going) break;
      }
  }
  return report;
}

}  // namespace operadica
