#include "gaoforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <limits>
#include <set>
#include <thread>
#include <type_traits>

namespace gaoforge {

ClassSpace::ClassSpace(const WeightSet& a) : n_(a.modulus().value()) {
  if (a.realizes_all_units()) {
    kind_ = Kind::DivisorClasses;
    for (Int d : a.modulus().divisors()) {
      if (d == n_) continue;
      reps_.push_back(d);
      shifts_.push_back(divisor_class_members(d, n_));
    }
    pairs_cancel_ = true;
    return;
  }
  if (a.is_unit_subgroup()) {
    kind_ = Kind::SubgroupOrbits;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (Int x = 1; x < n_; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      auto orbit = orbit_of(x, a);
      for (Int y : orbit) seen[static_cast<std::size_t>(y)] = true;
      reps_.push_back(x);  // x is the least element of its orbit
      shifts_.push_back(std::move(orbit));
    }
    pairs_cancel_ = a.contains_minus_one();
    return;
  }
  kind_ = Kind::RawResidues;
  for (Int x = 1; x < n_; ++x) {
    reps_.push_back(x);
    shifts_.push_back(orbit_of(x, a));
  }
}

namespace {

using Clock = std::chrono::steady_clock;

class BudgetGuard {
 public:
  explicit BudgetGuard(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {}

  void tick() {
    const auto count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > budget_.max_nodes) throw BudgetExhausted("node budget exhausted", stats());
    if ((count & 4095U) == 0 && elapsed() > budget_.max_seconds)
      throw BudgetExhausted("time budget exhausted", stats());
  }

  SearchStats stats() const { return {nodes_.load(std::memory_order_relaxed), elapsed()}; }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  const SearchBudget& budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
};

// Runs task(b) for b in [0, count) on up to `threads` workers. Failures are
// rethrown after all workers stop, the lowest branch first.
template <class Task>
void run_branches(std::size_t count, unsigned threads, Task&& task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const auto b = next.fetch_add(1);
      if (b >= count) return;
      try {
        task(b);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };
  if (threads <= 1 || count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

enum class Mode { Longest, Collect };

struct Outcome {
  Int best = -1;
  bool has_witness = false;
  ProfileEntries witness;
  std::vector<ProfileEntries> collected;
  Int longest_seen = 0;
};

class Recorder {
 public:
  Recorder(Mode mode, Int target, Int floor) : mode_(mode), target_(target) { out_.best = floor; }

  Mode mode() const { return mode_; }
  Int target() const { return target_; }
  Int best() const { return out_.best; }
  bool has_witness() const { return out_.has_witness; }

  // Smallest length a subtree must reach to matter. In Longest mode each
  // branch keeps the first witness met in DFS order, so ties are pruned.
  Int needed() const {
    if (mode_ == Mode::Collect) return target_;
    return out_.has_witness ? out_.best + 1 : out_.best;
  }

  // `make` builds the entries of the candidate padded to `padded` terms.
  template <class Make>
  void offer(Int length, Make&& make) {
    out_.longest_seen = std::max(out_.longest_seen, length);
    if (mode_ == Mode::Longest) {
      if (length < out_.best || (out_.has_witness && length == out_.best)) return;
      auto entries = make(length);
      {
        out_.best = length;
        out_.has_witness = true;
        out_.witness = std::move(entries);
      }
    } else if (length >= target_) {
      out_.collected.push_back(make(target_));
    }
  }

  Outcome take() { return std::move(out_); }

 private:
  Mode mode_;
  Int target_;
  Outcome out_;
};

ProfileEntries entries_of(const ClassSpace& space, const std::vector<std::size_t>& path, Int padded) {
  ProfileEntries e;
  e.reserve(static_cast<std::size_t>(padded));
  for (auto j : path) e.push_back(space.representatives()[j]);
  while (static_cast<Int>(e.size()) < padded) e.push_back(space.n());
  return e;
}

// DFS over multisets with no nonempty zero-sum. Pairs and larger repeats are
// pruned by the predicate itself, so the tree stays small for unit weights.
class ZeroSumFreeWalker {
 public:
  ZeroSumFreeWalker(const ClassSpace& space, BudgetGuard& guard, Recorder& rec)
      : space_(space), guard_(guard), rec_(rec) {}

  void run(std::size_t first) {
    ResidueSet root(space_.n());
    sums_.assign(1, root);
    if (!extend(0, first)) return;
    path_.push_back(first);
    visit(1, first);
  }

 private:
  bool extend(std::size_t depth, std::size_t cls) {
    if (sums_.size() <= depth + 1) sums_.resize(depth + 2);
    const auto& shifts = space_.shifts(cls);
    ResidueSet next = sums_[depth];
    next.or_translates(sums_[depth], shifts);
    for (Int k : shifts) next.set(k);
    if (next.test(0)) return false;
    sums_[depth + 1] = std::move(next);
    return true;
  }

  void visit(std::size_t depth, std::size_t start) {
    guard_.tick();
    const auto size = static_cast<Int>(depth);
    rec_.offer(size, [&](Int) { return entries_of(space_, path_, size); });
    if (rec_.mode() == Mode::Collect && size > rec_.target()) return;
    for (std::size_t j = start; j < space_.size(); ++j) {
      if (!extend(depth, j)) continue;
      path_.push_back(j);
      visit(depth + 1, j);
      path_.pop_back();
    }
  }

  const ClassSpace& space_;
  BudgetGuard& guard_;
  Recorder& rec_;
  std::vector<ResidueSet> sums_;
  std::vector<std::size_t> path_;
};

// For every set S of classes (one term each): the largest subset with no
// nonempty zero-sum, and the largest with no zero-sum of even size.
struct SubsetBounds {
  static constexpr std::size_t kMaxClasses = 16;
  std::vector<std::uint8_t> free_all;
  std::vector<std::uint8_t> free_even;

  SubsetBounds(const ClassSpace& space, bool wanted) {
    const std::size_t k = space.size();
    if (!wanted || k > kMaxClasses) return;
    const Int n = space.n();
    const std::size_t full = std::size_t{1} << k;
    std::vector<std::uint8_t> ok_all(full, 0), ok_even(full, 0);
    for (std::size_t s = 0; s < full; ++s) {
      std::vector<ResidueSet> rows(k + 1, ResidueSet(n));
      rows[0].set(0);
      std::size_t used = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (!(s >> j & 1U)) continue;
        for (std::size_t c = used + 1; c-- > 0;) rows[c + 1].or_translates(rows[c], space.shifts(j));
        ++used;
      }
      bool any = false, even = false;
      for (std::size_t c = 1; c <= used; ++c)
        if (rows[c].test(0)) {
          any = true;
          if (c % 2 == 0) even = true;
        }
      ok_all[s] = !any;
      ok_even[s] = !even;
    }
    free_all = best_within(ok_all, k);
    free_even = best_within(ok_even, k);
  }

  bool available() const { return !free_all.empty(); }

 private:
  static std::vector<std::uint8_t> best_within(const std::vector<std::uint8_t>& ok, std::size_t k) {
    std::vector<std::uint8_t> best(ok.size(), 0);
    for (std::size_t s = 0; s < ok.size(); ++s) {
      if (ok[s]) {
        best[s] = static_cast<std::uint8_t>(std::popcount(s));
        continue;
      }
      for (std::size_t j = 0; j < k; ++j)
        if (s >> j & 1U) best[s] = std::max(best[s], best[s & ~(std::size_t{1} << j)]);
    }
    return best;
  }
};

// DFS over the nonzero part P of a sequence; zeros are added analytically.
// With rows[c] the sums of c-term selections of P, the largest q <= n with
// 0 in rows[q] is the biggest zero-sum inside P, and P can carry exactly
// n-1-q zeros before some n-term selection sums to zero.
//
// Branch bound (valid when two terms of a class always cancel): adding X from
// the remaining classes either leaves the best zero-sum below n-1, in which
// case the reachable length grows by at most one per class with an odd count
// in X, or pushes it to n-1, in which case the pairs in X are limited by the
// largest zero-sum size of P with the parity of n.
//
// Write the extension as X_odd (one term per class of odd count) plus pairs,
// W = P + X_odd. For an n-term part W' of W (or W itself if shorter) the
// leftover of a largest zero-sum is zero-sum free, and the leftover of a
// largest zero-sum with the parity of n has no even zero-sum. Both hold at
// most one term per class, so the subset tables bound them by the classes of
// P and the remaining classes; terms of W beyond W' add at most one each.
class WithoutNZeroSumWalker {
 public:
  WithoutNZeroSumWalker(const ClassSpace& space, const SubsetBounds& subsets, BudgetGuard& guard,
                        Recorder& rec)
      : space_(space), subsets_(subsets), guard_(guard), rec_(rec), n_(space.n()) {}

  void run(std::size_t first) {
    std::vector<ResidueSet> root(static_cast<std::size_t>(n_) + 1, ResidueSet(n_));
    root[0].set(0);
    rows_.assign(1, std::move(root));
    if (!extend(0, first)) return;
    path_.push_back(first);
    visit(1, first, std::size_t{1} << first);
  }

 private:
  bool extend(std::size_t depth, std::size_t cls) {
    if (rows_.size() <= depth + 1) rows_.resize(depth + 2);
    const auto& cur = rows_[depth];
    auto& next = rows_[depth + 1];
    next = cur;
    const auto& shifts = space_.shifts(cls);
    const auto top = std::min<std::size_t>(depth, static_cast<std::size_t>(n_ - 1));
    for (std::size_t c = top + 1; c-- > 0;) next[c + 1].or_translates(cur[c], shifts);
    return !next[static_cast<std::size_t>(n_)].test(0);
  }

  void visit(std::size_t depth, std::size_t start, std::size_t used) {
    guard_.tick();
    const auto& rows = rows_[depth];
    const auto size = static_cast<Int>(depth);
    Int qmax = -1;
    Int q_same = -1;
    for (Int c = std::min(size, n_); c >= 0 && (qmax < 0 || q_same < 0); --c) {
      if (!rows[static_cast<std::size_t>(c)].test(0)) continue;
      if (qmax < 0) qmax = c;
      if (q_same < 0 && (n_ - c) % 2 == 0) q_same = c;
    }
    const Int length = size + n_ - 1 - qmax;
    rec_.offer(length, [&](Int padded) { return entries_of(space_, path_, padded); });

    if (space_.pairs_cancel()) {
      constexpr Int kUnbounded = std::numeric_limits<Int>::max();
      const auto remaining = static_cast<Int>(space_.size() - start);
      Int uncapped = length + remaining;
      Int capped = q_same >= 0 ? size + n_ - 2 - q_same + remaining : kUnbounded;
      if (subsets_.available()) {
        const std::size_t mask = used | (((std::size_t{1} << space_.size()) - 1) &
                                         ~((std::size_t{1} << start) - 1));
        const Int excess = std::max<Int>(0, size + remaining - n_);
        uncapped = std::min(uncapped, n_ - 1 + subsets_.free_all[mask] + excess);
        if (n_ % 2 == 0) capped = std::min(capped, n_ - 2 + subsets_.free_even[mask] + excess);
      }
      if (std::max(uncapped, capped) < rec_.needed()) return;
    }
    if (rec_.mode() == Mode::Collect && size > rec_.target()) return;

    for (std::size_t j = start; j < space_.size(); ++j) {
      if (!extend(depth, j)) continue;
      path_.push_back(j);
      visit(depth + 1, j, used | (std::size_t{1} << j));
      path_.pop_back();
    }
  }

  const ClassSpace& space_;
  const SubsetBounds& subsets_;
  BudgetGuard& guard_;
  Recorder& rec_;
  Int n_;
  std::vector<std::vector<ResidueSet>> rows_;
  std::vector<std::size_t> path_;
};

template <class Walker>
Outcome run_search(const ClassSpace& space, const SearchBudget& budget, Mode mode, Int target,
                   Int root_length, SearchStats& stats) {
  BudgetGuard guard(budget);
  std::optional<SubsetBounds> subsets;
  if constexpr (std::is_same_v<Walker, WithoutNZeroSumWalker>)
    subsets.emplace(space, space.pairs_cancel());
  std::vector<Outcome> outcomes(space.size() + 1);
  {
    Recorder root(mode, target, -1);
    guard.tick();
    root.offer(root_length, [&](Int padded) { return entries_of(space, {}, padded); });
    outcomes.back() = root.take();
  }
  try {
    run_branches(space.size(), budget.threads, [&](std::size_t b) {
      Recorder rec(mode, target, root_length);
      auto walker = [&] {
        if constexpr (std::is_same_v<Walker, WithoutNZeroSumWalker>)
          return Walker(space, *subsets, guard, rec);
        else
          return Walker(space, guard, rec);
      }();
      walker.run(b);
      outcomes[b] = rec.take();
    });
  } catch (const BudgetExhausted& e) {
    throw BudgetExhausted(e.what(), guard.stats());
  }
  stats = guard.stats();

  Outcome merged;
  std::set<ProfileEntries> pool;
  for (auto& o : outcomes) {
    merged.longest_seen = std::max(merged.longest_seen, o.longest_seen);
    if (o.has_witness && (!merged.has_witness || o.best > merged.best ||
                          (o.best == merged.best && o.witness < merged.witness))) {
      merged.best = o.best;
      merged.has_witness = true;
      merged.witness = o.witness;
    }
    pool.insert(o.collected.begin(), o.collected.end());
  }
  merged.collected.assign(pool.begin(), pool.end());
  return merged;
}

}  // namespace

LongestResult longest_zero_sum_free(const ClassSpace& space, const SearchBudget& budget) {
  LongestResult r;
  auto o = run_search<ZeroSumFreeWalker>(space, budget, Mode::Longest, 0, 0, r.stats);
  r.length = o.best;
  r.witness = std::move(o.witness);
  return r;
}

CollectResult collect_zero_sum_free(const ClassSpace& space, Int target,
                                    const SearchBudget& budget) {
  CollectResult r;
  auto o = run_search<ZeroSumFreeWalker>(space, budget, Mode::Collect, target, 0, r.stats);
  for (auto& s : o.collected)
    if (static_cast<Int>(s.size()) == target) r.sequences.push_back(std::move(s));
  r.longest_seen = o.longest_seen;
  return r;
}

LongestResult longest_without_n_zero_sum(const ClassSpace& space, const SearchBudget& budget) {
  LongestResult r;
  auto o = run_search<WithoutNZeroSumWalker>(space, budget, Mode::Longest, 0, space.n() - 1,
                                             r.stats);
  r.length = o.best;
  r.witness = std::move(o.witness);
  return r;
}

CollectResult collect_without_n_zero_sum(const ClassSpace& space, Int target,
                                         const SearchBudget& budget) {
  CollectResult r;
  auto o = run_search<WithoutNZeroSumWalker>(space, budget, Mode::Collect, target,
                                             space.n() - 1, r.stats);
  for (auto& s : o.collected)
    if (static_cast<Int>(s.size()) == target) r.sequences.push_back(std::move(s));
  r.longest_seen = o.longest_seen;
  return r;
}

}  // namespace gaoforge
