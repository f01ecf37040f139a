#include "hmat/hmat_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "hmat/errors.hpp"

namespace hmat {

namespace {

// Splits on '\n'; a single trailing newline does not create an empty
// final line. Keeps enough structure to report 1-based line numbers.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::size_t parse_count(std::string_view token, std::size_t line_no,
                        const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
    throw ParseError(line_no, std::string("invalid ") + what + " '" +
                                  std::string(token) + "' in HMAT header");
  return value;
}

}  // namespace

std::string to_hmat(const SignMatrix& m) {
  std::ostringstream out;
  out << "HMAT " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) out << m.row(i).to_string() << '\n';
  return out.str();
}

SignMatrix parse_hmat(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t pos = 0;

  // Comments (and blank lines) may precede the header.
  while (pos < lines.size() &&
         (blank(lines[pos]) || lines[pos].front() == '#'))
    ++pos;
  if (pos == lines.size())
    throw ParseError(lines.size() + 1, "missing HMAT header");

  const std::size_t header_no = pos + 1;
  std::string_view header = lines[pos];
  std::istringstream hs{std::string(header)};
  std::string magic, rows_tok, cols_tok, extra;
  hs >> magic >> rows_tok >> cols_tok;
  if (magic != "HMAT" || rows_tok.empty() || cols_tok.empty() || (hs >> extra))
    throw ParseError(header_no, "expected header 'HMAT <rows> <cols>', got '" +
                                    std::string(header) + "'");
  std::size_t rows = parse_count(rows_tok, header_no, "row count");
  std::size_t cols = parse_count(cols_tok, header_no, "column count");
  ++pos;

  std::vector<SignVector> data;
  data.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r, ++pos) {
    const std::size_t line_no = pos + 1;
    if (pos >= lines.size())
      throw ParseError(line_no, "expected " + std::to_string(rows) +
                                    " matrix rows, file ends after " +
                                    std::to_string(r));
    std::string_view line = lines[pos];
    if (line.size() != cols)
      throw ParseError(line_no, "row has " + std::to_string(line.size()) +
                                    " characters, expected " +
                                    std::to_string(cols));
    for (std::size_t j = 0; j < line.size(); ++j)
      if (line[j] != '+' && line[j] != '-')
        throw ParseError(line_no, std::string("invalid character '") + line[j] +
                                      "' at column " + std::to_string(j + 1));
    data.push_back(SignVector::from_string(line));
  }

  for (; pos < lines.size(); ++pos)
    if (!blank(lines[pos]))
      throw ParseError(pos + 1, "unexpected content after the last matrix row");

  return SignMatrix(std::move(data));
}

SignMatrix read_hmat_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hmat(buffer.str());
}

void write_hmat_file(const std::string& path, const SignMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << to_hmat(m);
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace hmat
