#include "tourney/trn_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "tourney/error.hpp"

namespace tourney {

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::size_t parse_count(std::string_view s, const char* what) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(Errc::ParseError, std::string("expected a nonnegative integer for ") + what + ", got '" +
                                      std::string(s) + "'");
  return value;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

Tournament read_trn(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, "empty .trn input");
  strip_cr(line);
  const std::size_t n = parse_count(line, "vertex count");
  if (n == 0) throw Error(Errc::ParseError, "vertex count must be at least 1");

  TournamentBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!std::getline(in, line))
      throw Error(Errc::ParseError, "expected " + std::to_string(n) + " rows, got " + std::to_string(u));
    strip_cr(line);
    if (line.size() != n)
      throw Error(Errc::ParseError, "row " + std::to_string(u) + " has " + std::to_string(line.size()) +
                                        " characters, expected " + std::to_string(n));
    for (std::size_t v = 0; v < n; ++v) {
      if (line[v] == '1') b.set_bit(static_cast<Vertex>(u), static_cast<Vertex>(v));
      else if (line[v] != '0')
        throw Error(Errc::ParseError, "row " + std::to_string(u) + " contains '" + std::string(1, line[v]) + "'");
    }
  }
  while (std::getline(in, line)) {
    strip_cr(line);
    if (!blank(line)) throw Error(Errc::ParseError, "trailing content after row " + std::to_string(n - 1));
  }
  return std::move(b).finish();
}

void write_trn(std::ostream& out, const Tournament& t) {
  const std::size_t n = t.order();
  std::string row(n + 1, '0');
  row[n] = '\n';
  out << n << '\n';
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) row[v] = t.beats(u, v) ? '1' : '0';
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

std::string to_trn_string(const Tournament& t) {
  std::ostringstream s;
  write_trn(s, t);
  return s.str();
}

Tournament read_arc_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::size_t declared = 0;
  bool have_declared = false;
  std::size_t max_vertex = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string first;
    fields >> first;
    if (first.starts_with('#')) {
      std::string key, value;
      if (first == "#") fields >> key >> value;
      else key = first.substr(1), fields >> value;
      if (key == "n" && !value.empty()) {
        declared = parse_count(value, "declared order");
        have_declared = true;
      }
      continue;
    }
    std::string second, extra;
    fields >> second;
    if (second.empty() || (fields >> extra))
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'u v'");
    const std::size_t u = parse_count(first, "arc tail");
    const std::size_t v = parse_count(second, "arc head");
    max_vertex = std::max({max_vertex, u, v});
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  const std::size_t n = have_declared ? declared : (arcs.empty() ? 1 : max_vertex + 1);
  if (n == 0) throw Error(Errc::ParseError, "declared order must be at least 1");
  return from_arc_list(n, arcs);
}

void write_arc_list(std::ostream& out, const Tournament& t) {
  out << "# n " << t.order() << '\n';
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = 0; v < t.order(); ++v)
      if (t.beats(u, v)) out << u << ' ' << v << '\n';
}

Tournament load_trn(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  return read_trn(in);
}

void save_trn(const std::filesystem::path& path, const Tournament& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  write_trn(out, t);
  if (!out) throw Error(Errc::ParseError, "write failed for " + path.string());
}

Tournament load_arc_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  return read_arc_list(in);
}

void save_arc_list(const std::filesystem::path& path, const Tournament& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  write_arc_list(out, t);
  if (!out) throw Error(Errc::ParseError, "write failed for " + path.string());
}

}  // namespace tourney
