#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hmat/census.hpp"
#include "hmat/constructions.hpp"
#include "hmat/errors.hpp"
#include "hmat/hmat_format.hpp"
#include "hmat/matrix_ops.hpp"
#include "hmat/orthogonality.hpp"
#include "hmat/search.hpp"
#include "hmat/sign_matrix.hpp"

namespace {

// Exit codes: 0 success/found/verified, 1 negative result,
// 2 usage or I/O error, 3 budget exhausted.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit_matrix(const hmat::SignMatrix& m,
                 const std::optional<std::string>& path) {
  if (path)
    hmat::write_hmat_file(*path, m);
  else
    std::cout << hmat::to_hmat(m);
}

int run_construct(const std::string& method, std::optional<int> order,
                  std::optional<int> prime,
                  const std::optional<std::string>& left,
                  const std::optional<std::string>& right,
                  const std::optional<std::string>& out) {
  std::optional<hmat::SignMatrix> m;
  if (method == "sylvester") {
    if (!order) {
      std::cerr << "construct: --method sylvester needs --order\n";
      return kExitUsage;
    }
    m = hmat::sylvester(*order);
  } else if (method == "paley") {
    if (!prime) {
      std::cerr << "construct: --method paley needs --prime\n";
      return kExitUsage;
    }
    m = hmat::paley_one(*prime);
  } else {
    if (!left || !right) {
      std::cerr << "construct: --method kron needs --left and --right\n";
      return kExitUsage;
    }
    const hmat::SignMatrix a = hmat::read_hmat_file(*left);
    const hmat::SignMatrix b = hmat::read_hmat_file(*right);
    if (!hmat::verify_hadamard(a).is_hadamard) {
      std::cerr << "construct: " << *left << " is not Hadamard\n";
      return kExitNegative;
    }
    if (!hmat::verify_hadamard(b).is_hadamard) {
      std::cerr << "construct: " << *right << " is not Hadamard\n";
      return kExitNegative;
    }
    m = hmat::kronecker(a, b);
  }
  const hmat::VerificationReport report = hmat::verify_hadamard(*m);
  if (!report.is_hadamard) {
    std::cerr << "construct: result of order " << m->rows()
              << " failed self-verification; refusing to emit it\n";
    return kExitNegative;
  }
  emit_matrix(*m, out);
  return kExitOk;
}

int run_verify(const std::string& path, bool gram) {
  const hmat::SignMatrix m = hmat::read_hmat_file(path);
  const hmat::VerificationReport report = hmat::verify_hadamard(m);
  std::cout << "order: " << m.rows() << " x " << m.cols() << "\n";
  std::cout << "square: " << (report.square ? "yes" : "no") << "\n";
  if (report.first_violation) {
    const hmat::Violation& v = *report.first_violation;
    std::cout << "first-violation: rows " << v.row_a << " and " << v.row_b
              << ", inner product " << v.observed << "\n";
  }
  std::cout << "hadamard: " << (report.is_hadamard ? "yes" : "no") << "\n";
  if (gram) {
    const hmat::GramMatrix g = hmat::gram(m);
    for (const auto& row : g) {
      for (std::size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? " " : "") << row[j];
      std::cout << "\n";
    }
  }
  return report.is_hadamard ? kExitOk : kExitNegative;
}

int run_orthnum(const std::string& path, int row_a, int row_b) {
  const hmat::SignMatrix m = hmat::read_hmat_file(path);
  const auto rows = static_cast<int>(m.rows());
  if (row_a < 0 || row_a >= rows || row_b < 0 || row_b >= rows) {
    std::cerr << "orthnum: row indices must lie in [0, " << rows - 1
              << "] (0-based)\n";
    return kExitUsage;
  }
  const hmat::SignVector& a = m.row(static_cast<std::size_t>(row_a));
  const hmat::SignVector& b = m.row(static_cast<std::size_t>(row_b));
  std::cout << "length: " << a.size() << "\n";
  std::cout << "g: " << hmat::inner_product(a, b) << "\n";
  if (hmat::is_balanced(a) && hmat::is_balanced(b)) {
    const hmat::OverlapLawCheck check = hmat::check_overlap_law(a, b);
    std::cout << "k: " << check.overlap_count << "\n";
    std::cout << "predicted: " << check.g_predicted << "\n";
    std::cout << "verdict: " << (check.agrees ? "AGREE" : "DISAGREE") << "\n";
  } else {
    std::cout << "predicted: N-A (row "
              << (hmat::is_balanced(a) ? row_b : row_a) << " is unbalanced)\n";
    std::cout << "verdict: N-A\n";
  }
  return kExitOk;
}

int run_classify(int order) {
  const hmat::OrderClass oc = hmat::classify_order(order);
  std::cout << "order " << oc.order << ": " << hmat::to_string(oc.kind)
            << " / " << hmat::to_string(oc.verdict) << " [" << oc.reason
            << "]\n";
  return kExitOk;
}

int run_search_cmd(int order, const std::string& mode,
                   std::optional<std::uint64_t> max_nodes,
                   std::optional<double> max_seconds, bool parallel,
                   const std::optional<std::string>& out) {
  hmat::SearchConfig config;
  config.order = order;
  config.mode = mode == "exhaustive" ? hmat::SearchMode::ExhaustiveNonexistence
                                     : hmat::SearchMode::FirstSolution;
  config.max_nodes = max_nodes;
  config.max_seconds = max_seconds;
  config.parallel = parallel;
  const hmat::SearchOutcome outcome = hmat::run_search(config);
  std::cout << "status: " << hmat::to_string(outcome.status) << "\n";
  std::cout << "nodes: " << outcome.nodes_visited << "\n";
  std::cerr << "elapsed: " << outcome.elapsed_seconds << "s\n";
  switch (outcome.status) {
    case hmat::SearchStatus::Found:
      emit_matrix(*outcome.matrix, out);
      return kExitOk;
    case hmat::SearchStatus::ProvenNone:
      return kExitNegative;
    case hmat::SearchStatus::BudgetExhausted:
      std::cout << "best-depth: " << outcome.best_depth << "\n";
      return kExitBudget;
    case hmat::SearchStatus::PartialRank:
      break;
  }
  return kExitUsage;
}

int run_partial(int order, std::optional<double> max_seconds,
                const std::optional<std::string>& out) {
  hmat::SearchConfig budget;
  budget.max_seconds = max_seconds;
  const hmat::SearchOutcome outcome = hmat::max_partial_rows(order, budget);
  std::cout << "order: " << order << "\n";
  std::cout << "partial-rows: " << outcome.partial_rank << "\n";
  std::cout << "certainty: " << (outcome.rank_exact ? "exact" : "lower-bound")
            << "\n";
  std::cout << "nodes: " << outcome.nodes_visited << "\n";
  std::cerr << "elapsed: " << outcome.elapsed_seconds << "s\n";
  if (out && outcome.matrix) hmat::write_hmat_file(*out, *outcome.matrix);
  return kExitOk;
}

int run_census(int k) {
  const hmat::CensusReport report = hmat::census_report(k);
  std::cout << "k: " << report.k << "\n";
  std::cout << "formula-p: " << report.formula_p << "\n";
  std::cout << "enumerated-rows: " << report.oracle_row_count << "\n";
  std::cout << "selection-count: " << report.selection_count << "\n";
  for (const std::string& note : report.notes)
    std::cout << "note: " << note << "\n";
  return kExitOk;
}

int run_scan(int limit) {
  const std::set<int> covered = hmat::reachable_orders(limit);
  std::cout << std::left << std::setw(7) << "order" << std::setw(17) << "class"
            << std::setw(19) << "verdict" << "covered\n";
  std::vector<int> gaps;
  for (int n = 1; n <= limit; ++n) {
    const hmat::OrderClass oc = hmat::classify_order(n);
    const bool built = covered.count(n) > 0;
    std::cout << std::left << std::setw(7) << n << std::setw(17)
              << hmat::to_string(oc.kind) << std::setw(19)
              << hmat::to_string(oc.verdict) << (built ? "yes" : "no")
              << "\n";
    if (n % 4 == 0 && !built) gaps.push_back(n);
  }
  std::cout << "gaps (divisible by 4, no construction):";
  if (gaps.empty()) {
    std::cout << " none";
  } else {
    for (int g : gaps) std::cout << " " << g;
  }
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sign-matrix toolkit: construct, verify, classify and search "
               "Hadamard matrices"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand(
      "construct", "Build a Hadamard matrix and emit it as HMAT");
  std::string method;
  construct->add_option("--method", method, "sylvester | paley | kron")
      ->required()
      ->check(CLI::IsMember({"sylvester", "paley", "kron"}));
  std::optional<int> c_order;
  construct->add_option("--order", c_order, "target order (sylvester)");
  std::optional<int> c_prime;
  construct->add_option("--prime", c_prime,
                        "prime p = 3 mod 4; order is p+1 (paley)");
  std::optional<std::string> c_left, c_right;
  construct->add_option("--left", c_left, "left factor file (kron)");
  construct->add_option("--right", c_right, "right factor file (kron)");
  std::optional<std::string> c_out;
  construct->add_option("-o,--output", c_out, "output file (default stdout)");

  auto* verify =
      app.add_subcommand("verify", "Check a HMAT file against the Gram identity");
  std::string v_file;
  verify->add_option("file", v_file, "HMAT file")->required();
  bool v_gram = false;
  verify->add_flag("--gram", v_gram, "dump the full Gram matrix");

  auto* orthnum = app.add_subcommand(
      "orthnum", "Inner product of two rows and the 4k-n prediction");
  std::string o_file;
  orthnum->add_option("file", o_file, "HMAT file")->required();
  int o_row_a = 0, o_row_b = 0;
  orthnum->add_option("--row-a", o_row_a, "first row index (0-based)")
      ->required();
  orthnum->add_option("--row-b", o_row_b, "second row index (0-based)")
      ->required();

  auto* classify =
      app.add_subcommand("classify", "Order class and existence verdict");
  int cl_order = 0;
  classify->add_option("--order", cl_order, "order to classify")->required();

  auto* search = app.add_subcommand(
      "search", "Backtracking search for a Hadamard matrix");
  int s_order = 0;
  search->add_option("--order", s_order, "order to search")->required();
  std::string s_mode = "first";
  search->add_option("--mode", s_mode, "first | exhaustive")
      ->check(CLI::IsMember({"first", "exhaustive"}));
  std::optional<std::uint64_t> s_max_nodes;
  search->add_option("--max-nodes", s_max_nodes, "placement budget");
  std::optional<double> s_max_seconds;
  search->add_option("--max-seconds", s_max_seconds, "wall-clock budget");
  bool s_parallel = false;
  search->add_flag("--parallel", s_parallel, "split root branches over threads");
  std::optional<std::string> s_out;
  search->add_option("-o,--output", s_out, "write the found matrix here");

  auto* partial = app.add_subcommand(
      "partial", "Largest achievable set of pairwise-orthogonal rows");
  int p_order = 0;
  partial->add_option("--order", p_order, "row length")->required();
  std::optional<double> p_max_seconds;
  partial->add_option("--max-seconds", p_max_seconds, "wall-clock budget");
  std::optional<std::string> p_out;
  partial->add_option("-o,--output", p_out, "write the witness here");

  auto* census = app.add_subcommand(
      "census", "Audit the closed-form row counts against enumeration");
  int k = 0;
  census->add_option("--k", k, "block parameter, order 4k (1..4)")->required();

  auto* scan = app.add_subcommand(
      "scan", "Order-by-order class, verdict and construction coverage");
  int limit = 0;
  scan->add_option("--limit", limit, "scan orders 1..limit")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct)
      return run_construct(method, c_order, c_prime, c_left, c_right, c_out);
    if (*verify) return run_verify(v_file, v_gram);
    if (*orthnum) return run_orthnum(o_file, o_row_a, o_row_b);
    if (*classify) return run_classify(cl_order);
    if (*search)
      return run_search_cmd(s_order, s_mode, s_max_nodes, s_max_seconds,
                            s_parallel, s_out);
    if (*partial) return run_partial(p_order, p_max_seconds, p_out);
    if (*census) return run_census(k);
    if (*scan) return run_scan(limit);
  } catch (const hmat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hmat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
