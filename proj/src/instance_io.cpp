#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aqc/errors.hpp"
#include "aqc/ising.hpp"

namespace aqc {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r'))
      ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r')
      ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

double parse_real(std::string_view tok, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
  return v;
}

int parse_index(std::string_view tok, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

void expect_arity(const std::vector<std::string_view>& toks, std::size_t n,
                  int line) {
  if (toks.size() != n)
    throw ParseError(line, "directive '" + std::string(toks[0]) + "' takes " +
                               std::to_string(n - 1) + " argument(s)");
}

}  // namespace

IsingProblem parse_instance(std::string_view text) {
  std::optional<int> n;
  std::optional<double> delta;
  std::vector<double> h;
  std::vector<bool> h_set;
  std::vector<Coupling> couplings;
  std::set<std::pair<int, int>> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto toks = split_tokens(line);
    if (toks.empty()) continue;

    const std::string_view key = toks[0];
    if (!n && key != "n")
      throw ParseError(line_no, "first directive must be 'n <qubits>'");
    if (key == "n") {
      if (n) throw ParseError(line_no, "qubit count given twice");
      expect_arity(toks, 2, line_no);
      int v = parse_index(toks[1], line_no);
      if (v < 1 || v > kMaxQubits)
        throw ParseError(line_no, "qubit count must be in 1.." +
                                      std::to_string(kMaxQubits));
      n = v;
      h.assign(v, 0.0);
      h_set.assign(v, false);
    } else if (key == "delta") {
      if (delta) throw ParseError(line_no, "delta given twice");
      expect_arity(toks, 2, line_no);
      double v = parse_real(toks[1], line_no);
      if (!(v > 0.0)) throw ParseError(line_no, "delta must be positive");
      delta = v;
    } else if (key == "h") {
      expect_arity(toks, 3, line_no);
      int i = parse_index(toks[1], line_no);
      if (i < 0 || i >= *n) throw ParseError(line_no, "qubit index out of range");
      if (h_set[i]) throw ParseError(line_no, "duplicate field for qubit " + std::to_string(i));
      h[i] = parse_real(toks[2], line_no);
      h_set[i] = true;
    } else if (key == "J") {
      expect_arity(toks, 4, line_no);
      int i = parse_index(toks[1], line_no);
      int j = parse_index(toks[2], line_no);
      if (i < 0 || i >= *n || j < 0 || j >= *n)
        throw ParseError(line_no, "qubit index out of range");
      if (i == j) throw ParseError(line_no, "self-coupling on qubit " + std::to_string(i));
      if (!seen.emplace(std::min(i, j), std::max(i, j)).second)
        throw ParseError(line_no, "duplicate coupling (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
      couplings.push_back({i, j, parse_real(toks[3], line_no)});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 'n' directive");
  return IsingProblem(*n, std::move(h), std::move(couplings), delta.value_or(1.0));
}

IsingProblem load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_instance(const IsingProblem& problem) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "n %d\ndelta %.17g\n", problem.n_qubits(),
                problem.delta());
  out += line;
  for (int i = 0; i < problem.n_qubits(); ++i) {
    if (problem.h()[i] == 0.0) continue;
    std::snprintf(line, sizeof line, "h %d %.17g\n", i, problem.h()[i]);
    out += line;
  }
  for (const auto& c : problem.couplings()) {
    std::snprintf(line, sizeof line, "J %d %d %.17g\n", c.i, c.j, c.value);
    out += line;
  }
  return out;
}

}  // namespace aqc
