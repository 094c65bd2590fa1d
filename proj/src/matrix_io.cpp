#include "wfm/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace wfm {

namespace {

std::vector<std::vector<std::string>> read_token_rows(std::istream& in,
                                                      const std::string& source) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> row;
    for (std::string tok; tokens >> tok;) row.push_back(tok);
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": row has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(source + ": no matrix rows");
  return rows;
}

double parse_weight(const std::string& tok, const std::string& source) {
  double value = 0.0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  if (!tok.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value) || value < 0.0) {
    throw ParseError(source + ": invalid weight token '" + tok + "'");
  }
  return value;
}

}  // namespace

BinaryMatrix read_binary_matrix(std::istream& in, const std::string& source) {
  const auto tokens = read_token_rows(in, source);
  BinaryMatrix a(tokens.size(), tokens.front().size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t j = 0; j < tokens[i].size(); ++j) {
      const std::string& tok = tokens[i][j];
      if (tok == "1") {
        a.set(i, j, true);
      } else if (tok != "0") {
        throw ParseError(source + ": binary matrix token '" + tok +
                         "' is not 0 or 1");
      }
    }
  }
  return a;
}

WeightMatrix read_weight_matrix(std::istream& in, const std::string& source) {
  const auto tokens = read_token_rows(in, source);
  WeightMatrix w(tokens.size(), tokens.front().size(), 1.0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t j = 0; j < tokens[i].size(); ++j) {
      w.set(i, j, parse_weight(tokens[i][j], source));
    }
  }
  return w;
}

BinaryMatrix load_binary_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_binary_matrix(in, path.string());
}

WeightMatrix load_weight_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_weight_matrix(in, path.string());
}

void write_binary_matrix(std::ostream& out, const BinaryMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << (a.at(i, j) ? '1' : '0');
    }
    out << '\n';
  }
}

void write_weight_matrix(std::ostream& out, const WeightMatrix& w) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(w.at(i, j));
    }
    out << '\n';
  }
}

void save_binary_matrix(const std::filesystem::path& path, const BinaryMatrix& a) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_binary_matrix(out, a);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace wfm
