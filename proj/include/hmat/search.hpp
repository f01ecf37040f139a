#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hmat/sign_matrix.hpp"
#include "hmat/sign_vector.hpp"

namespace hmat {

// Capacity guard for balanced-row enumeration.
inline constexpr int kMaxEnumerationOrder = 28;
// Capacity guard for the exhaustive-nonexistence entry point.
inline constexpr int kMaxExhaustiveOrder = 14;

enum class SearchMode { FirstSolution, ExhaustiveNonexistence, PartialRank };

enum class SearchStatus { Found, ProvenNone, BudgetExhausted, PartialRank };

const char* to_string(SearchStatus status);

struct SearchConfig {
  int order = 0;
  SearchMode mode = SearchMode::FirstSolution;
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
  bool parallel = false;
};

// Search result. Which fields are meaningful depends on status:
//   Found            - matrix holds the completed square
//   ProvenNone       - the whole tree was exhausted without a solution
//   BudgetExhausted  - best_depth holds the most rows stacked before the
//                      budget ran out
//   PartialRank      - partial_rank holds r, matrix the r-row witness,
//                      rank_exact whether the tree was fully exhausted
//                      (otherwise r is a certified lower bound)
// nodes_visited counts row placements. With parallel off and no
// max_seconds truncation, identical configs give identical outcomes
// including nodes_visited. With parallel on, runs that complete within
// budget report the same status/matrix/rank as the sequential run;
// node counts and timing may differ, and budget truncation points are
// scheduling-dependent.
struct SearchOutcome {
  SearchStatus status;
  std::optional<SignMatrix> matrix;
  int partial_rank = 0;
  bool rank_exact = false;
  int best_depth = 0;
  std::uint64_t nodes_visited = 0;
  double elapsed_seconds = 0.0;
};

// All length-n sign vectors with exactly n/2 entries of +1, in
// lexicographic order with '+' sorting before '-'. With leading_plus,
// only those whose first entry is +1 (C(n-1, n/2-1) vectors).
std::vector<SignVector> enumerate_balanced_rows(int n, bool leading_plus);

// Fix row 0 = all +1 and extend depth-first with leading-plus balanced
// candidates in lexicographic order, keeping only candidates orthogonal
// to every chosen row. Returns the lexicographically first completion,
// ProvenNone when the tree is exhausted, or BudgetExhausted.
// config.mode must be FirstSolution.
SearchOutcome find_hadamard(const SearchConfig& config);

// Unbudgeted exhaustive run for small orders (n <= 14): Found or a
// genuine nonexistence proof. Larger orders are refused - use
// find_hadamard with a budget instead.
SearchOutcome exhaustive_nonexistence(int n);

// Largest r such that an r x n sign matrix with pairwise-orthogonal
// rows exists, with a witness. Exact when the tree is exhausted within
// budget, otherwise a flagged lower bound. Order/mode fields of the
// budget config are ignored.
SearchOutcome max_partial_rows(int n, const SearchConfig& budget = {});

// Dispatch on config.mode.
SearchOutcome run_search(const SearchConfig& config);

}  // namespace hmat
