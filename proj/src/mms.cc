// Copyright 2026 The Maximin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maximin/mms.h"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "maximin/multilinear.h"

namespace maximin {

std::uint64_t CanonicalPartitionCount(std::size_t m, std::size_t n) {
  constexpr unsigned __int128 kCap = std::numeric_limits<std::uint64_t>::max();
  if (m == 0) return 1;
  const std::size_t blocks = std::min(n, m);
  // s[k] = S(i, k) for the current i, saturated at kCap.
  std::vector<unsigned __int128> s(blocks + 1, 0);
  s[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t k = std::min(i, blocks); k >= 1; --k) {
      unsigned __int128 v = s[k] * k + s[k - 1];
      s[k] = v > kCap ? kCap : v;
    }
    s[0] = 0;
  }
  unsigned __int128 total = 0;
  for (std::size_t k = 1; k <= blocks; ++k) {
    total += s[k];
    if (total > kCap) total = kCap;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

void CheckBudget(std::size_t m, std::size_t n, std::uint64_t budget,
                 const char* what) {
  const std::uint64_t count = CanonicalPartitionCount(m, n);
  if (count > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + ": " + std::to_string(count) +
                    " canonical partitions of " + std::to_string(m) +
                    " goods into at most " + std::to_string(n) +
                    " bundles exceed the oracle budget of " +
                    std::to_string(budget));
  }
}

Allocation FromLabels(const std::vector<std::size_t>& labels, std::size_t n) {
  std::vector<Bundle> bundles(n);
  for (std::size_t g = 0; g < labels.size(); ++g) bundles[labels[g]].push_back(g);
  return Allocation(std::move(bundles), labels.size());
}

// Depth-first search over canonical labellings of an additive row. T is
// either int64_t (rows rescaled to integers) or Value.
template <typename T>
class RowSearch {
 public:
  RowSearch(std::vector<T> values, std::size_t n)
      : values_(std::move(values)),
        n_(n),
        loads_(n, T(0)),
        labels_(values_.size(), 0),
        suffix_positive_(values_.size() + 1, T(0)),
        total_(0) {
    for (std::size_t g = values_.size(); g-- > 0;) {
      suffix_positive_[g] =
          suffix_positive_[g + 1] + (values_[g] > 0 ? values_[g] : T(0));
      total_ += values_[g];
    }
  }

  void Run() { Recurse(0, 0); }
  const T& best() const { return best_; }
  const std::vector<std::size_t>& best_labels() const { return best_labels_; }

 private:
  const T& MinLoad() const {
    return *std::min_element(loads_.begin(), loads_.end());
  }

  void Recurse(std::size_t g, std::size_t used) {
    if (g == values_.size()) {
      const T& low = MinLoad();
      if (!has_best_ || low > best_) {
        best_ = low;
        best_labels_ = labels_;
        has_best_ = true;
        // The smallest of n bundles never exceeds the average.
        if (best_ * static_cast<long>(n_) >= total_) stop_ = true;
      }
      return;
    }
    if (has_best_ && !(MinLoad() + suffix_positive_[g] > best_)) return;
    const std::size_t limit = std::min(used + 1, n_);
    for (std::size_t k = 0; k < limit && !stop_; ++k) {
      loads_[k] += values_[g];
      labels_[g] = k;
      Recurse(g + 1, std::max(used, k + 1));
      loads_[k] -= values_[g];
    }
  }

  std::vector<T> values_;
  std::size_t n_;
  std::vector<T> loads_;
  std::vector<std::size_t> labels_;
  std::vector<T> suffix_positive_;
  T total_;
  T best_{};
  std::vector<std::size_t> best_labels_;
  bool has_best_ = false;
  bool stop_ = false;
};

// Rescales a rational row to int64 by the lcm of its denominators when the
// search cannot overflow.
std::optional<std::pair<std::vector<std::int64_t>, mpz_class>> ScaleToIntegers(
    const std::vector<Value>& row, std::size_t n) {
  mpz_class lcm = 1;
  for (const Value& v : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  mpz_class abs_total = 0;
  std::vector<std::int64_t> out;
  out.reserve(row.size());
  for (const Value& v : row) {
    mpz_class scaled = v.get_num() * (lcm / v.get_den());
    abs_total += abs(scaled);
    if (!scaled.fits_slong_p()) return std::nullopt;
    out.push_back(scaled.get_si());
  }
  const mpz_class limit = mpz_class(1) << 60;
  if (abs_total * static_cast<unsigned long>(n + 1) >= limit) {
    return std::nullopt;
  }
  return std::make_pair(std::move(out), lcm);
}

}  // namespace

MmsCertificate MmsExactRow(const std::vector<Value>& row, std::size_t n,
                           std::uint64_t budget) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one bundle");
  }
  CheckBudget(row.size(), n, budget, "exact maximin share");
  if (auto scaled = ScaleToIntegers(row, n)) {
    RowSearch<std::int64_t> search(std::move(scaled->first), n);
    search.Run();
    Value value(mpz_class(static_cast<long>(search.best())), scaled->second);
    value.canonicalize();
    return {0, std::move(value), FromLabels(search.best_labels(), n)};
  }
  RowSearch<Value> search(row, n);
  search.Run();
  return {0, search.best(), FromLabels(search.best_labels(), n)};
}

MmsCertificate MmsExactAdditive(const AdditiveInstance& instance,
                                std::size_t agent, std::uint64_t budget) {
  CheckAgent(agent, instance.agents());
  const auto row = instance.row(agent);
  MmsCertificate cert = MmsExactRow(std::vector<Value>(row.begin(), row.end()),
                                    instance.agents(), budget);
  cert.agent = agent;
  return cert;
}

namespace {

class OracleSearch {
 public:
  OracleSearch(const SubmodularValuation& f, std::size_t n)
      : f_(f),
        n_(n),
        m_(f.ground_size()),
        masks_(n, 0),
        labels_(m_, 0),
        prune_(f.monotone()) {}

  void Run() {
    if (prune_) Seed();
    Recurse(0, 0);
  }
  const Value& best() const { return best_; }
  const std::vector<std::size_t>& best_labels() const { return best_labels_; }

 private:
  void Recurse(std::size_t g, std::size_t used) {
    if (g == m_) {
      Value low = f_.Evaluate(masks_[0]);
      for (std::size_t k = 1; k < n_; ++k) low = Min(low, f_.Evaluate(masks_[k]));
      if (!has_best_ || low > best_ || (seeded_ && low == best_)) {
        best_ = std::move(low);
        best_labels_ = labels_;
        has_best_ = true;
        seeded_ = false;
      }
      return;
    }
    if (prune_ && has_best_) {
      // A seeded bound only prunes strictly, so the search still reaches
      // the first maximizer in canonical order.
      const GoodMask rest = FullMask(m_) & ~(Bit(g) - 1);
      bool hopeless = false;
      for (std::size_t k = 0; k < n_ && !hopeless; ++k) {
        const Value bound = f_.Evaluate(masks_[k] | rest);
        hopeless = seeded_ ? bound < best_ : !(bound > best_);
      }
      if (hopeless) return;
    }
    const std::size_t limit = std::min(used + 1, n_);
    for (std::size_t k = 0; k < limit; ++k) {
      masks_[k] |= Bit(g);
      labels_[g] = k;
      Recurse(g + 1, std::max(used, k + 1));
      masks_[k] &= ~Bit(g);
    }
  }

  // Heaviest singleton first, each to the currently poorest bundle.
  void Seed() {
    std::vector<std::size_t> order(m_);
    std::vector<Value> single(m_);
    for (std::size_t g = 0; g < m_; ++g) {
      order[g] = g;
      single[g] = f_.Singleton(g);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return single[a] > single[b];
    });
    std::vector<GoodMask> masks(n_, 0);
    std::vector<Value> worth(n_, f_.Evaluate(GoodMask{0}));
    std::vector<std::size_t> labels(m_, 0);
    for (std::size_t g : order) {
      const std::size_t k = static_cast<std::size_t>(
          std::min_element(worth.begin(), worth.end()) - worth.begin());
      masks[k] |= Bit(g);
      labels[g] = k;
      worth[k] = f_.Evaluate(masks[k]);
    }
    best_ = *std::min_element(worth.begin(), worth.end());
    best_labels_ = std::move(labels);
    has_best_ = true;
    seeded_ = true;
  }

  const SubmodularValuation& f_;
  std::size_t n_;
  std::size_t m_;
  std::vector<GoodMask> masks_;
  std::vector<std::size_t> labels_;
  bool prune_;
  bool seeded_ = false;
  Value best_;
  std::vector<std::size_t> best_labels_;
  bool has_best_ = false;
};

}  // namespace

MmsCertificate MmsExactSubmodular(const SubmodularValuation& f, std::size_t n,
                                  std::uint64_t budget) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one bundle");
  }
  CheckBudget(f.ground_size(), n, budget, "exact maximin share");
  OracleSearch search(f, n);
  search.Run();
  return {0, search.best(), FromLabels(search.best_labels(), n)};
}

PartitionMatroid::PartitionMatroid(std::vector<std::size_t> goods,
                                   std::size_t slots)
    : goods_(std::move(goods)), slots_(slots) {
  std::vector<std::size_t> sorted = goods_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "matroid goods must be distinct");
  }
}

SlotPair PartitionMatroid::element(std::size_t e) const {
  if (e >= universe_size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "matroid element out of range");
  }
  return {goods_[e / slots_], e % slots_};
}

bool PartitionMatroid::Contains(const SlotPair& p) const {
  return p.slot < slots_ &&
         std::find(goods_.begin(), goods_.end(), p.good) != goods_.end();
}

bool PartitionMatroid::IsIndependent(const IndependentSet& set) const {
  std::vector<std::size_t> seen;
  for (const SlotPair& p : set) {
    if (!Contains(p)) return false;
    if (std::find(seen.begin(), seen.end(), p.good) != seen.end()) return false;
    seen.push_back(p.good);
  }
  return true;
}

SlotObjective::SlotObjective(const SubmodularValuation& valuation, Value cap,
                             std::size_t slots)
    : valuation_(&valuation), cap_(std::move(cap)), slots_(slots) {}

Value SlotObjective::SlotValue(GoodMask goods) const {
  return Min(cap_, valuation_->Evaluate(goods));
}

std::vector<GoodMask> SlotObjective::SlotMasks(const IndependentSet& set) const {
  std::vector<GoodMask> masks(slots_, 0);
  for (const SlotPair& p : set) {
    if (p.slot >= slots_) {
      throw Error(ErrorCode::kIndexOutOfRange, "slot out of range");
    }
    masks[p.slot] |= Bit(p.good);
  }
  return masks;
}

Value SlotObjective::operator()(const IndependentSet& set) const {
  Value total = 0;
  for (GoodMask mask : SlotMasks(set)) total += SlotValue(mask);
  return total;
}

IndependentSet GreedyMatroidMax(const MatroidObjective& objective,
                                const PartitionMatroid& matroid) {
  struct Entry {
    Value gain;
    std::size_t element;
  };
  // Largest gain first, then lowest element index.
  auto lower = [](const Entry& a, const Entry& b) {
    return a.gain < b.gain || (a.gain == b.gain && a.element > b.element);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);

  IndependentSet current;
  Value current_value = objective(current);
  for (std::size_t e = 0; e < matroid.universe_size(); ++e) {
    heap.push({objective({matroid.element(e)}) - current_value, e});
  }
  std::vector<bool> placed(matroid.goods().size(), false);
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    const std::size_t position = top.element / matroid.slots();
    if (placed[position]) continue;
    IndependentSet candidate = current;
    candidate.push_back(matroid.element(top.element));
    Value value = objective(candidate);
    Entry fresh{value - current_value, top.element};
    // Stale gains over-estimate (submodularity), so a fresh gain that still
    // beats every stale one is the true maximum.
    if (heap.empty() || !lower(fresh, heap.top())) {
      current = std::move(candidate);
      current_value = std::move(value);
      placed[position] = true;
    } else {
      heap.push(std::move(fresh));
    }
  }
  return current;
}

IndependentSet ExhaustiveMatroidMax(const MatroidObjective& objective,
                                    const PartitionMatroid& matroid,
                                    std::uint64_t budget) {
  const std::size_t goods = matroid.goods().size();
  const std::size_t choices = matroid.slots() + 1;
  long double count = 1;
  for (std::size_t i = 0; i < goods; ++i) count *= static_cast<long double>(choices);
  if (count > static_cast<long double>(budget)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exhaustive matroid search over " + std::to_string(goods) +
                    " goods and " + std::to_string(matroid.slots()) +
                    " slots exceeds the budget of " + std::to_string(budget));
  }
  // choice[i] = 0 leaves good i out, otherwise slot choice[i] - 1.
  std::vector<std::size_t> choice(goods, 0);
  IndependentSet best_set;
  Value best = objective(best_set);
  while (true) {
    std::size_t i = 0;
    while (i < goods && ++choice[i] == choices) choice[i++] = 0;
    if (i == goods) break;
    IndependentSet set;
    for (std::size_t k = 0; k < goods; ++k) {
      if (choice[k] != 0) set.push_back({matroid.goods()[k], choice[k] - 1});
    }
    Value value = objective(set);
    if (value > best) {
      best = std::move(value);
      best_set = std::move(set);
    }
  }
  return best_set;
}

namespace {

class SlotSearch {
 public:
  SlotSearch(const SlotObjective& objective, const PartitionMatroid& matroid)
      : objective_(objective),
        goods_(matroid.goods()),
        slots_(matroid.slots()),
        masks_(slots_, 0),
        labels_(goods_.size(), 0),
        suffix_(goods_.size() + 1, 0),
        ceiling_(objective.Ceiling()) {
    for (std::size_t i = goods_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] | Bit(goods_[i]);
    }
  }

  void Run() {
    if (slots_ == 0) {
      has_best_ = true;
      best_ = 0;
      return;
    }
    Recurse(0, 0);
  }
  const std::vector<std::size_t>& best_labels() const { return best_labels_; }

 private:
  void Recurse(std::size_t i, std::size_t used) {
    if (done_) return;
    if (i == goods_.size()) {
      Value value = 0;
      for (GoodMask mask : masks_) value += objective_.SlotValue(mask);
      if (!has_best_ || value > best_) {
        best_ = std::move(value);
        best_labels_ = labels_;
        has_best_ = true;
        done_ = best_ >= ceiling_;
      }
      return;
    }
    if (has_best_) {
      // Unused slots all share one bound, min(cap, v(unplaced goods)).
      Value bound = 0;
      for (std::size_t k = 0; k < slots_; ++k) {
        bound += objective_.SlotValue(masks_[k] | suffix_[i]);
      }
      if (!(bound > best_)) return;
    }
    const std::size_t limit = std::min(used + 1, slots_);
    for (std::size_t k = 0; k < limit && !done_; ++k) {
      masks_[k] |= Bit(goods_[i]);
      labels_[i] = k;
      Recurse(i + 1, std::max(used, k + 1));
      masks_[k] &= ~Bit(goods_[i]);
    }
  }

  const SlotObjective& objective_;
  const std::vector<std::size_t>& goods_;
  std::size_t slots_;
  std::vector<GoodMask> masks_;
  std::vector<std::size_t> labels_;
  std::vector<GoodMask> suffix_;
  Value ceiling_;
  Value best_;
  std::vector<std::size_t> best_labels_;
  bool has_best_ = false;
  bool done_ = false;
};

}  // namespace

IndependentSet ExhaustiveSlotMax(const SlotObjective& objective,
                                 const PartitionMatroid& matroid,
                                 std::uint64_t budget) {
  if (objective.slots() != matroid.slots()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "objective and matroid disagree on the slot count");
  }
  if (!objective.valuation().monotone()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "slot search needs a monotone valuation");
  }
  CheckBudget(matroid.goods().size(), matroid.slots(), budget,
              "exhaustive slot assignment");
  SlotSearch search(objective, matroid);
  search.Run();
  IndependentSet out;
  if (matroid.slots() == 0) return out;
  const auto& labels = search.best_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out.push_back({matroid.goods()[i], labels[i]});
  }
  return out;
}

IndependentSet GreedyMatroidSolver::Maximize(
    const SlotObjective& objective, const PartitionMatroid& matroid) const {
  return GreedyMatroidMax(
      [&](const IndependentSet& set) { return objective(set); }, matroid);
}

std::pair<GoodMask, GoodMask> SplitBundle(const SubmodularValuation& f,
                                          GoodMask bundle, const Value& tau) {
  const Value target = Value(4, 9) * tau;
  GoodMask a = 0, b = bundle;
  while (f.Evaluate(a) < target && b != 0) {
    const GoodMask lowest = b & (~b + 1);
    a |= lowest;
    b &= ~lowest;
  }
  return {a, b};
}

ThresholdTest TestThreshold(const SubmodularValuation& f, std::size_t n,
                            const Value& tau, const MatroidSolver& solver) {
  const std::size_t m = f.ground_size();
  ThresholdTest test;
  test.tau = tau;
  const Value ninth = tau / 9;
  std::vector<std::size_t> high, rest;
  for (std::size_t g = 0; g < m; ++g) {
    (f.Singleton(g) >= ninth ? high : rest).push_back(g);
  }
  test.high_goods = high.size();

  std::vector<Bundle> bundles;
  if (high.size() >= n) {
    test.rule_passed = true;
    bundles.resize(n);
    for (std::size_t k = 0; k < n; ++k) bundles[k].push_back(high[k]);
    for (std::size_t k = n; k < high.size(); ++k) bundles[n - 1].push_back(high[k]);
    for (std::size_t g : rest) bundles[n - 1].push_back(g);
  } else {
    const std::size_t open = n - high.size();
    const PartitionMatroid matroid(rest, 2 * open);
    const SlotObjective objective(f, Value(4, 9) * tau, 2 * open);
    const IndependentSet chosen = solver.Maximize(objective, matroid);
    if (!matroid.IsIndependent(chosen)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "matroid solver returned a dependent set");
    }
    test.slot_value = objective(chosen);
    test.required = Value(8, 9) * solver.factor() *
                    static_cast<unsigned long>(open) * tau;
    test.rule_passed = test.slot_value >= test.required;
    if (!test.rule_passed) return test;

    std::vector<GoodMask> slots = objective.SlotMasks(chosen);
    GoodMask leftover = MaskOf(rest);
    for (GoodMask s : slots) leftover &= ~s;
    std::vector<std::size_t> order(slots.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<Value> slot_values;
    for (GoodMask s : slots) slot_values.push_back(f.Evaluate(s));
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return slot_values[a] > slot_values[b];
                     });
    for (std::size_t g : high) bundles.push_back({g});
    for (std::size_t k = 0; k + 1 < open; ++k) {
      bundles.push_back(GoodsOf(slots[order[k]]));
    }
    GoodMask pooled = leftover;
    for (std::size_t k = open - 1; k < order.size(); ++k) pooled |= slots[order[k]];
    bundles.push_back(GoodsOf(pooled));
  }

  Allocation partition(std::move(bundles), m);
  test.accepted = true;
  for (const Bundle& b : partition.bundles()) {
    if (f.Evaluate(b) < ninth) test.accepted = false;
  }
  test.partition = std::move(partition);
  return test;
}

ApproxMmsResult MmsApproxSubmodular(const SubmodularValuation& f,
                                    std::size_t n, const MatroidSolver& solver,
                                    const Value& epsilon) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one bundle");
  }
  if (epsilon <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  if (!f.monotone()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "approximate maximin share needs a monotone valuation");
  }
  const std::size_t m = f.ground_size();
  ApproxMmsResult result{Allocation(n, m), Value(0),
                         solver.factor() >= OneMinusInvEUpper(), {}};
  auto probe = [&](const Value& tau) -> const ThresholdTest& {
    result.trail.push_back(TestThreshold(f, n, tau, solver));
    return result.trail.back();
  };
  auto adopt = [&](const ThresholdTest& t) {
    result.threshold = t.tau;
    result.partition = *t.partition;
  };

  Value hi = f.Evaluate(FullMask(m));
  if (const auto& top = probe(hi); top.accepted) {
    adopt(top);
    return result;
  }
  std::vector<Value> singles;
  for (std::size_t g = 0; g < m; ++g) singles.push_back(f.Singleton(g));
  std::sort(singles.begin(), singles.end(), std::greater<>());
  // n goods of positive value as n seeds: tau = 9 * (n-th best singleton)
  // always passes, and the maximin share is zero when there is no such seed.
  Value lo = singles.size() >= n ? 9 * singles[n - 1] : Value(0);
  {
    const auto& base = probe(lo);
    if (!base.accepted) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "lower end of the threshold search was rejected");
    }
    adopt(base);
  }
  if (lo == 0) return result;
  const Value widen = 1 + epsilon;
  while (hi > lo * widen) {
    Value mid = (lo + hi) / 2;
    const auto& t = probe(mid);
    if (t.accepted) {
      lo = mid;
      adopt(t);
    } else {
      hi = std::move(mid);
    }
  }
  return result;
}

}  // namespace maximin
