#include <string>
#include <vector>

#include "doctest.h"
#include "hmat/errors.hpp"
#include "hmat/matrix_ops.hpp"
#include "hmat/search.hpp"
#include "hmat/sign_vector.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using hmat::SearchConfig;
using hmat::SearchMode;
using hmat::SearchOutcome;
using hmat::SearchStatus;
using hmat::SignVector;

namespace {

std::vector<std::string> row_strings(const hmat::SignMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(m.row(i).to_string());
  return out;
}

SearchConfig first_solution(int order) {
  SearchConfig config;
  config.order = order;
  return config;
}

}  // namespace

TEST_CASE("balanced row enumeration is lexicographic") {
  const auto rows = hmat::enumerate_balanced_rows(4, true);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].to_string() == "++--");
  CHECK(rows[1].to_string() == "+-+-");
  CHECK(rows[2].to_string() == "+--+");

  const auto all = hmat::enumerate_balanced_rows(4, false);
  REQUIRE(all.size() == 6);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
  for (const auto& r : all) CHECK(hmat::is_balanced(r));

  CHECK(hmat::enumerate_balanced_rows(2, true).size() == 1);
  CHECK(hmat::enumerate_balanced_rows(2, true)[0].to_string() == "+-");
  CHECK(hmat::enumerate_balanced_rows(12, true).size() == 462);
}

TEST_CASE("balanced row enumeration guards") {
  CHECK_THROWS_AS(hmat::enumerate_balanced_rows(5, true), hmat::DomainError);
  CHECK_THROWS_AS(hmat::enumerate_balanced_rows(0, false), hmat::DomainError);
  CHECK_THROWS_AS(hmat::enumerate_balanced_rows(-2, true), hmat::DomainError);
  CHECK_THROWS_AS(hmat::enumerate_balanced_rows(30, true),
                  hmat::CapacityError);
}

TEST_CASE("order 1 and order 2 are found immediately") {
  const SearchOutcome one = hmat::find_hadamard(first_solution(1));
  CHECK(one.status == SearchStatus::Found);
  CHECK(row_strings(*one.matrix) == std::vector<std::string>{"+"});

  const SearchOutcome two = hmat::find_hadamard(first_solution(2));
  CHECK(two.status == SearchStatus::Found);
  CHECK(two.nodes_visited == 1);
  CHECK(row_strings(*two.matrix) == std::vector<std::string>{"++", "+-"});
}

TEST_CASE("order 4 finds the lexicographically first completion") {
  const SearchOutcome out = hmat::find_hadamard(first_solution(4));
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.nodes_visited == 3);
  CHECK(row_strings(*out.matrix) ==
        std::vector<std::string>{"++++", "++--", "+-+-", "+--+"});
  CHECK(hmat::verify_hadamard(*out.matrix).is_hadamard);
}

TEST_CASE("odd orders are refuted without any placements") {
  for (int n : {3, 5, 7, 9, 11}) {
    const SearchOutcome out = hmat::find_hadamard(first_solution(n));
    CHECK(out.status == SearchStatus::ProvenNone);
    CHECK(out.nodes_visited == 0);
  }
}

TEST_CASE("twice-odd orders are exhausted, not shortcut") {
  const SearchOutcome six = hmat::exhaustive_nonexistence(6);
  CHECK(six.status == SearchStatus::ProvenNone);
  CHECK(six.nodes_visited == 10);  // one placement per leading-plus row

  const SearchOutcome ten = hmat::exhaustive_nonexistence(10);
  CHECK(ten.status == SearchStatus::ProvenNone);
  CHECK(ten.nodes_visited == 126);
}

TEST_CASE("orders 8 and 12 are found with frozen node counts") {
  const SearchOutcome eight = hmat::find_hadamard(first_solution(8));
  REQUIRE(eight.status == SearchStatus::Found);
  CHECK(eight.nodes_visited == 7);
  CHECK(hmat::verify_hadamard(*eight.matrix).is_hadamard);
  CHECK(row_strings(*eight.matrix)[1] == "++++----");

  const SearchOutcome twelve = hmat::find_hadamard(first_solution(12));
  REQUIRE(twelve.status == SearchStatus::Found);
  CHECK(twelve.nodes_visited == 12);
  CHECK(hmat::verify_hadamard(*twelve.matrix).is_hadamard);
}

TEST_CASE("identical sequential runs are identical") {
  const SearchOutcome a = hmat::find_hadamard(first_solution(12));
  const SearchOutcome b = hmat::find_hadamard(first_solution(12));
  CHECK(a.nodes_visited == b.nodes_visited);
  CHECK(*a.matrix == *b.matrix);
}

TEST_CASE("parallel search returns the sequential result") {
#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  for (int n : {4, 6, 8, 10, 12}) {
    const SearchOutcome seq = hmat::find_hadamard(first_solution(n));
    SearchConfig config = first_solution(n);
    config.parallel = true;
    const SearchOutcome par = hmat::find_hadamard(config);
    CHECK(par.status == seq.status);
    CHECK(par.matrix.has_value() == seq.matrix.has_value());
    if (seq.matrix) CHECK(*par.matrix == *seq.matrix);
  }
}

TEST_CASE("node budget stops the search exactly") {
  SearchConfig config = first_solution(12);
  config.max_nodes = 5;
  const SearchOutcome out = hmat::find_hadamard(config);
  CHECK(out.status == SearchStatus::BudgetExhausted);
  CHECK(out.nodes_visited == 5);
  CHECK(out.best_depth >= 2);
  CHECK(out.best_depth <= 6);

  config.max_nodes = 0;
  const SearchOutcome none = hmat::find_hadamard(config);
  CHECK(none.status == SearchStatus::BudgetExhausted);
  CHECK(none.nodes_visited == 0);
  CHECK(none.best_depth == 1);
}

TEST_CASE("a large enough node budget does not distort the result") {
  SearchConfig config = first_solution(12);
  config.max_nodes = 100000;
  const SearchOutcome out = hmat::find_hadamard(config);
  CHECK(out.status == SearchStatus::Found);
  CHECK(out.nodes_visited == 12);
}

TEST_CASE("search mode and capacity guards") {
  SearchConfig wrong = first_solution(4);
  wrong.mode = SearchMode::PartialRank;
  CHECK_THROWS_AS(hmat::find_hadamard(wrong), hmat::DomainError);
  CHECK_THROWS_AS(hmat::find_hadamard(first_solution(0)), hmat::DomainError);
  CHECK_THROWS_AS(hmat::find_hadamard(first_solution(30)),
                  hmat::CapacityError);
  CHECK_THROWS_AS(hmat::exhaustive_nonexistence(16), hmat::CapacityError);
  try {
    hmat::exhaustive_nonexistence(16);
  } catch (const hmat::CapacityError& e) {
    CHECK(std::string(e.what()).find("capped at order 14") !=
          std::string::npos);
  }
  SearchConfig budgeted = first_solution(6);
  budgeted.mode = SearchMode::ExhaustiveNonexistence;
  budgeted.max_nodes = 10;
  CHECK_THROWS_AS(hmat::run_search(budgeted), hmat::DomainError);
}

TEST_CASE("run_search dispatches on mode") {
  SearchConfig config = first_solution(6);
  config.mode = SearchMode::ExhaustiveNonexistence;
  CHECK(hmat::run_search(config).status == SearchStatus::ProvenNone);
  config.mode = SearchMode::PartialRank;
  CHECK(hmat::run_search(config).status == SearchStatus::PartialRank);
  config.mode = SearchMode::FirstSolution;
  CHECK(hmat::run_search(config).status == SearchStatus::ProvenNone);
}

TEST_CASE("partial rank reaches n exactly when a square exists") {
  for (int n : {1, 2, 4, 8, 12}) {
    const SearchOutcome out = hmat::max_partial_rows(n);
    CHECK(out.status == SearchStatus::PartialRank);
    CHECK(out.partial_rank == n);
    CHECK(out.rank_exact);
    REQUIRE(out.matrix.has_value());
    CHECK(hmat::verify_hadamard(*out.matrix).is_hadamard);
  }
}

TEST_CASE("partial rank is 2 at twice-odd orders, 1 at odd orders") {
  for (int n : {6, 10}) {
    const SearchOutcome out = hmat::max_partial_rows(n);
    CHECK(out.partial_rank == 2);
    CHECK(out.rank_exact);
    REQUIRE(out.matrix.has_value());
    CHECK(out.matrix->rows() == 2);
    CHECK(hmat::inner_product(out.matrix->row(0), out.matrix->row(1)) == 0);
  }
  for (int n : {3, 5, 7, 9}) {
    const SearchOutcome out = hmat::max_partial_rows(n);
    CHECK(out.partial_rank == 1);
    CHECK(out.rank_exact);
    CHECK(out.matrix->rows() == 1);
  }
}

TEST_CASE("partial witness rows are pairwise orthogonal") {
  const SearchOutcome out = hmat::max_partial_rows(10);
  const auto& m = *out.matrix;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j)
      CHECK(hmat::inner_product(m.row(i), m.row(j)) == 0);
}

TEST_CASE("budgeted partial rank is flagged as a lower bound") {
  SearchConfig budget;
  budget.max_nodes = 3;
  const SearchOutcome out = hmat::max_partial_rows(12, budget);
  CHECK(out.status == SearchStatus::PartialRank);
  CHECK_FALSE(out.rank_exact);
  CHECK(out.nodes_visited == 3);
  CHECK(out.partial_rank >= 2);
  CHECK(out.partial_rank <= 4);
}

TEST_CASE("parallel partial rank equals sequential") {
#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  for (int n : {6, 10, 12}) {
    const SearchOutcome seq = hmat::max_partial_rows(n);
    SearchConfig parallel;
    parallel.parallel = true;
    const SearchOutcome par = hmat::max_partial_rows(n, parallel);
    CHECK(par.partial_rank == seq.partial_rank);
    CHECK(par.rank_exact == seq.rank_exact);
    CHECK(*par.matrix == *seq.matrix);
  }
}

TEST_CASE("elapsed time is reported") {
  const SearchOutcome out = hmat::find_hadamard(first_solution(8));
  CHECK(out.elapsed_seconds >= 0.0);
  CHECK(out.elapsed_seconds < 10.0);
}
