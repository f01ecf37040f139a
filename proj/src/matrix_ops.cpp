#include "hmat/matrix_ops.hpp"

#include <bit>
#include <string>

namespace hmat {

std::int64_t inner_product(const SignVector& u, const SignVector& v) {
  if (u.size() != v.size())
    throw DimensionError("inner product needs vectors of equal length (" +
                         std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()) + ")");
  std::int64_t disagreements = 0;
  for (std::size_t w = 0; w < u.word_count(); ++w)
    disagreements += std::popcount(u.word(w) ^ v.word(w));
  return static_cast<std::int64_t>(u.size()) - 2 * disagreements;
}

std::size_t overlap(const SignVector& u, const SignVector& v) {
  if (u.size() != v.size())
    throw DimensionError("overlap needs vectors of equal length (" +
                         std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()) + ")");
  std::size_t both_plus = 0;
  for (std::size_t w = 0; w < u.word_count(); ++w)
    both_plus += static_cast<std::size_t>(std::popcount(u.word(w) & v.word(w)));
  return both_plus;
}

bool is_balanced(const SignVector& u) {
  return u.size() % 2 == 0 && u.plus_count() == u.size() / 2;
}

SignMatrix normalize(const SignMatrix& m) {
  if (!m.square()) throw ShapeError("normalize requires a square matrix");

  // Column pass: flip every column whose first-row entry is -1. The
  // flip set is exactly the complement of row 0's plus positions.
  const SignVector column_mask = m.row(0).negated();
  std::vector<SignVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(m.row(i).negated_where(column_mask));

  // Row pass: flip every row whose (new) first-column entry is -1.
  for (auto& r : rows)
    if (!r.is_plus(0)) r = r.negated();

  return SignMatrix(std::move(rows));
}

namespace {

void check_verify_capacity(const SignMatrix& m) {
  if (m.rows() > kMaxVerifyOrder || m.cols() > kMaxVerifyOrder)
    throw CapacityError("matrices beyond " + std::to_string(kMaxVerifyOrder) +
                        " rows/columns are not supported for verification");
}

}  // namespace

GramMatrix gram(const SignMatrix& m) {
  check_verify_capacity(m);
  const std::size_t r = m.rows();
  GramMatrix g(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j)
      g[i][j] = g[j][i] = inner_product(m.row(i), m.row(j));
  return g;
}

VerificationReport verify_hadamard(const SignMatrix& m) {
  check_verify_capacity(m);
  VerificationReport report{
      .is_hadamard = false,
      .order = m.cols(),
      .square = m.square(),
      .diagonal_ok = true,
      .first_violation = std::nullopt,
  };

  const auto n = static_cast<std::int64_t>(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (inner_product(m.row(i), m.row(i)) != n) report.diagonal_ok = false;
  }

  for (std::size_t i = 0; i < m.rows() && !report.first_violation; ++i) {
    for (std::size_t j = i; j < m.rows(); ++j) {
      std::int64_t g = inner_product(m.row(i), m.row(j));
      bool offending = (i == j) ? (g != n) : (g != 0);
      if (offending) {
        report.first_violation = Violation{i, j, g};
        break;
      }
    }
  }

  report.is_hadamard =
      report.square && report.diagonal_ok && !report.first_violation;
  return report;
}

}  // namespace hmat
