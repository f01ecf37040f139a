#include "hmat/search.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>

#include "hmat/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hmat {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kNoRoot = std::numeric_limits<std::size_t>::max();

// Balanced length-n words (bit i%64 of word i/64 is entry i, set = +1),
// emitted in lexicographic sign order: plus-position tuples in
// lexicographic order. Requires n <= 64 here; public guards cap at 28.
template <typename Fn>
void for_each_balanced_word(int n, bool leading_plus, Fn&& fn) {
  const int k = n / 2 - (leading_plus ? 1 : 0);
  const int lo = leading_plus ? 1 : 0;
  const std::uint64_t base = leading_plus ? 1u : 0u;
  if (k == 0) {
    fn(base);
    return;
  }
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = lo + i;
  for (;;) {
    std::uint64_t w = base;
    for (int p : pos) w |= std::uint64_t{1} << p;
    fn(w);
    int i = k - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<std::uint64_t> balanced_words(int n, bool leading_plus) {
  std::vector<std::uint64_t> words;
  for_each_balanced_word(n, leading_plus,
                         [&](std::uint64_t w) { words.push_back(w); });
  return words;
}

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> best_full_root{kNoRoot};
  std::optional<std::uint64_t> max_nodes;
  bool has_deadline = false;
  Clock::time_point deadline;

  // Accounts for one row placement; false means the budget is spent and
  // the placement must not happen. The deadline is polled once every
  // 1024 placements, so runs smaller than that finish regardless of
  // max_seconds.
  bool try_consume() {
    if (stop.load(std::memory_order_relaxed)) return false;
    const std::uint64_t prior = nodes.fetch_add(1, std::memory_order_relaxed);
    if (max_nodes && prior >= *max_nodes) {
      nodes.fetch_sub(1, std::memory_order_relaxed);
      stop.store(true, std::memory_order_relaxed);
      return false;
    }
    if (has_deadline && ((prior + 1) & 1023u) == 0 &&
        Clock::now() >= deadline) {
      nodes.fetch_sub(1, std::memory_order_relaxed);
      stop.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void note_full(std::size_t root) {
    std::size_t cur = best_full_root.load(std::memory_order_relaxed);
    while (root < cur && !best_full_root.compare_exchange_weak(
                             cur, root, std::memory_order_relaxed)) {
    }
  }
};

struct BranchOutcome {
  bool truncated = false;
  bool found_full = false;
  std::vector<std::uint32_t> full_stack;
  int max_depth = 0;  // deepest placement count (row 0 not included)
  std::vector<std::uint32_t> witness;
};

enum class Step { Exhausted, FoundFull, Truncated, Abandoned };

// Depth-first extension over candidate indices. Indices grow strictly
// along a stack, which keeps exactly one representative per row set and
// still reaches the lexicographically first completion. count_prune
// skips subtrees whose viable pool is already too small to finish the
// square; it must stay off when the goal is maximum depth rather than a
// full square.
class Walker {
 public:
  Walker(const std::vector<std::uint64_t>& cands, int n, bool count_prune,
         std::size_t my_root, SharedState& shared)
      : cands_(cands),
        n_(n),
        half_(n / 2),
        count_prune_(count_prune),
        my_root_(my_root),
        shared_(shared) {}

  BranchOutcome out;

  Step walk(const std::vector<std::uint32_t>& pool, bool single) {
    for (std::size_t t = 0; t < pool.size(); ++t) {
      if (shared_.best_full_root.load(std::memory_order_relaxed) < my_root_)
        return Step::Abandoned;
      if (!shared_.try_consume()) {
        out.truncated = true;
        return Step::Truncated;
      }
      const std::uint32_t idx = pool[t];
      stack_.push_back(idx);
      const int depth = static_cast<int>(stack_.size());
      if (depth > out.max_depth) {
        out.max_depth = depth;
        out.witness = stack_;
      }
      Step sub = Step::Exhausted;
      if (depth == n_ - 1) {
        out.found_full = true;
        out.full_stack = stack_;
        shared_.note_full(my_root_);
        sub = Step::FoundFull;
      } else {
        std::vector<std::uint32_t> next;
        next.reserve(pool.size() - t);
        const std::uint64_t w = cands_[idx];
        for (std::size_t s = t + 1; s < pool.size(); ++s) {
          if (std::popcount(w ^ cands_[pool[s]]) == half_)
            next.push_back(pool[s]);
        }
        bool descend = !next.empty();
        if (count_prune_ && static_cast<int>(next.size()) < n_ - 1 - depth)
          descend = false;
        if (descend) sub = walk(next, false);
      }
      stack_.pop_back();
      if (sub != Step::Exhausted) return sub;
      if (single) break;
    }
    return Step::Exhausted;
  }

 private:
  const std::vector<std::uint64_t>& cands_;
  int n_;
  int half_;
  bool count_prune_;
  std::size_t my_root_;
  SharedState& shared_;
  std::vector<std::uint32_t> stack_;
};

BranchOutcome run_tree(const std::vector<std::uint64_t>& cands, int n,
                       bool count_prune, bool parallel, SharedState& shared) {
  const std::size_t m = cands.size();
  if (m == 0) return {};
  if (!parallel) {
    Walker w(cands, n, count_prune, 0, shared);
    std::vector<std::uint32_t> pool(m);
    std::iota(pool.begin(), pool.end(), 0u);
    w.walk(pool, false);
    return std::move(w.out);
  }
  // One branch per root candidate; branches whose root can only yield a
  // lexicographically later completion than one already found abandon
  // early. The merge below reproduces the sequential answer.
  std::vector<BranchOutcome> branches(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long r = 0; r < static_cast<long long>(m); ++r) {
    const auto root = static_cast<std::size_t>(r);
    Walker w(cands, n, count_prune, root, shared);
    std::vector<std::uint32_t> pool;
    pool.reserve(m - root);
    for (std::size_t t = root; t < m; ++t)
      pool.push_back(static_cast<std::uint32_t>(t));
    w.walk(pool, true);
    branches[root] = std::move(w.out);
  }
  BranchOutcome merged;
  std::size_t deepest_root = kNoRoot;
  for (std::size_t r = 0; r < m; ++r) {
    const BranchOutcome& b = branches[r];
    if (b.truncated) merged.truncated = true;
    if (b.found_full && !merged.found_full) {
      merged.found_full = true;
      merged.full_stack = b.full_stack;
    }
    if (b.max_depth > merged.max_depth) {
      merged.max_depth = b.max_depth;
      deepest_root = r;
    }
  }
  if (deepest_root != kNoRoot) merged.witness = branches[deepest_root].witness;
  return merged;
}

SignMatrix matrix_from_stack(int n, const std::vector<std::uint64_t>& cands,
                             const std::vector<std::uint32_t>& stack) {
  std::vector<SignVector> rows;
  rows.reserve(stack.size() + 1);
  rows.push_back(SignVector::all_plus(static_cast<std::size_t>(n)));
  for (std::uint32_t idx : stack) {
    const std::uint64_t w = cands[idx];
    rows.push_back(
        SignVector::from_words(static_cast<std::size_t>(n), std::span{&w, 1}));
  }
  return SignMatrix(std::move(rows));
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SearchOutcome trivial_order_one(SearchMode mode) {
  SearchOutcome out;
  out.matrix = SignMatrix({SignVector::all_plus(1)});
  out.best_depth = 1;
  if (mode == SearchMode::PartialRank) {
    out.status = SearchStatus::PartialRank;
    out.partial_rank = 1;
    out.rank_exact = true;
  } else {
    out.status = SearchStatus::Found;
  }
  return out;
}

SearchOutcome trivial_odd(int n, SearchMode mode) {
  SearchOutcome out;
  out.best_depth = 1;
  if (mode == SearchMode::PartialRank) {
    // Inner products of odd-length sign rows are odd, so no two rows
    // are ever orthogonal.
    out.status = SearchStatus::PartialRank;
    out.partial_rank = 1;
    out.rank_exact = true;
    out.matrix = SignMatrix({SignVector::all_plus(static_cast<std::size_t>(n))});
  } else {
    out.status = SearchStatus::ProvenNone;
  }
  return out;
}

SearchOutcome engine_run(int n, SearchMode mode,
                         std::optional<std::uint64_t> max_nodes,
                         std::optional<double> max_seconds, bool parallel) {
  if (n < 1)
    throw DomainError("search order must be positive, got " +
                      std::to_string(n));
  const Clock::time_point t0 = Clock::now();
  if (n == 1) {
    SearchOutcome out = trivial_order_one(mode);
    out.elapsed_seconds = seconds_since(t0);
    return out;
  }
  if (n % 2 != 0) {
    SearchOutcome out = trivial_odd(n, mode);
    out.elapsed_seconds = seconds_since(t0);
    return out;
  }
  if (n > kMaxEnumerationOrder)
    throw CapacityError("order " + std::to_string(n) +
                        " exceeds the search capacity of " +
                        std::to_string(kMaxEnumerationOrder));

  const std::vector<std::uint64_t> cands = balanced_words(n, true);
  SharedState shared;
  shared.max_nodes = max_nodes;
  if (max_seconds) {
    shared.has_deadline = true;
    shared.deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double>(*max_seconds));
  }
  const bool count_prune = mode != SearchMode::PartialRank;
  const BranchOutcome eng = run_tree(cands, n, count_prune, parallel, shared);

  SearchOutcome out;
  out.nodes_visited = shared.nodes.load(std::memory_order_relaxed);
  if (mode == SearchMode::PartialRank) {
    out.status = SearchStatus::PartialRank;
    if (eng.found_full) {
      out.partial_rank = n;
      out.rank_exact = true;
      out.matrix = matrix_from_stack(n, cands, eng.full_stack);
    } else {
      out.partial_rank = 1 + eng.max_depth;
      out.rank_exact = !eng.truncated;
      out.matrix = matrix_from_stack(n, cands, eng.witness);
    }
    out.best_depth = out.partial_rank;
  } else if (eng.found_full) {
    out.status = SearchStatus::Found;
    out.matrix = matrix_from_stack(n, cands, eng.full_stack);
    out.best_depth = n;
  } else if (eng.truncated) {
    out.status = SearchStatus::BudgetExhausted;
    out.best_depth = 1 + eng.max_depth;
  } else {
    out.status = SearchStatus::ProvenNone;
    out.best_depth = 1 + eng.max_depth;
  }
  out.elapsed_seconds = seconds_since(t0);
  return out;
}

}  // namespace

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found:
      return "Found";
    case SearchStatus::ProvenNone:
      return "ProvenNone";
    case SearchStatus::BudgetExhausted:
      return "BudgetExhausted";
    case SearchStatus::PartialRank:
      return "PartialRank";
  }
  return "?";
}

std::vector<SignVector> enumerate_balanced_rows(int n, bool leading_plus) {
  if (n < 2 || n % 2 != 0)
    throw DomainError("balanced rows need a positive even length, got " +
                      std::to_string(n));
  if (n > kMaxEnumerationOrder)
    throw CapacityError("length " + std::to_string(n) +
                        " exceeds the enumeration capacity of " +
                        std::to_string(kMaxEnumerationOrder));
  std::vector<SignVector> rows;
  for_each_balanced_word(n, leading_plus, [&](std::uint64_t w) {
    rows.push_back(
        SignVector::from_words(static_cast<std::size_t>(n), std::span{&w, 1}));
  });
  return rows;
}

SearchOutcome find_hadamard(const SearchConfig& config) {
  if (config.mode != SearchMode::FirstSolution)
    throw DomainError("find_hadamard requires FirstSolution mode");
  return engine_run(config.order, SearchMode::FirstSolution, config.max_nodes,
                    config.max_seconds, config.parallel);
}

SearchOutcome exhaustive_nonexistence(int n) {
  if (n > kMaxExhaustiveOrder)
    throw CapacityError(
        "exhaustive nonexistence is capped at order " +
        std::to_string(kMaxExhaustiveOrder) +
        "; use FirstSolution mode with a node or time budget instead");
  return engine_run(n, SearchMode::ExhaustiveNonexistence, std::nullopt,
                    std::nullopt, false);
}

SearchOutcome max_partial_rows(int n, const SearchConfig& budget) {
  return engine_run(n, SearchMode::PartialRank, budget.max_nodes,
                    budget.max_seconds, budget.parallel);
}

SearchOutcome run_search(const SearchConfig& config) {
  switch (config.mode) {
    case SearchMode::FirstSolution:
      return find_hadamard(config);
    case SearchMode::ExhaustiveNonexistence: {
      if (config.max_nodes || config.max_seconds)
        throw DomainError(
            "exhaustive nonexistence is unbudgeted; use FirstSolution mode "
            "for budgeted runs");
      if (config.order > kMaxExhaustiveOrder)
        throw CapacityError(
            "exhaustive nonexistence is capped at order " +
            std::to_string(kMaxExhaustiveOrder) +
            "; use FirstSolution mode with a node or time budget instead");
      return engine_run(config.order, SearchMode::ExhaustiveNonexistence,
                        std::nullopt, std::nullopt, config.parallel);
    }
    case SearchMode::PartialRank:
      return max_partial_rows(config.order, config);
  }
  throw DomainError("unknown search mode");
}

}  // namespace hmat
