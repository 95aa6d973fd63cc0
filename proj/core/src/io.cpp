#include "funtopo/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "funtopo/errors.hpp"

namespace funtopo {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep = ' ') {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (sep == ' ') {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      if (i == s.size()) break;
      auto j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      out.push_back(s.substr(i, j - i));
      i = j;
    } else {
      auto j = s.find(sep, i);
      if (j == std::string_view::npos) j = s.size();
      out.push_back(trim(s.substr(i, j - i)));
      i = j + 1;
      if (j + 1 == s.size()) out.push_back({});
    }
  }
  return out;
}

/// Calls `handle(line_number, content)` for every non-blank, non-comment line.
template <class Handler>
void for_each_line(std::istream& in, Handler&& handle) {
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    handle(number, line);
  }
}

long long parse_integer(std::string_view text, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ParseError(line, "expected an integer, got '" + std::string(text) + "'");
  return v;
}

int parse_int(std::string_view text, std::size_t line) {
  const auto v = parse_integer(text, line);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(line, "integer out of range: '" + std::string(text) + "'");
  return static_cast<int>(v);
}

ExtendedReal parse_value(std::string_view text, std::size_t line) {
  try {
    return parse_extended_real(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

double parse_finite(std::string_view text, std::size_t line) {
  const auto v = parse_value(text, line);
  if (!v.is_finite()) throw ParseError(line, "expected a finite value");
  return v.value();
}

}  // namespace

Barcode read_barcode(std::istream& in) {
  Barcode out;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) throw ParseError(n, "expected '<degree> <interval>'");
    const int degree = parse_int(line.substr(0, gap), n);
    const auto body = trim(line.substr(gap));
    if (body.size() < 5) throw ParseError(n, "malformed interval");
    const char open = body.front();
    const char close = body.back();
    if ((open != '[' && open != '(') || (close != ']' && close != ')'))
      throw ParseError(n, "interval must start with [ or ( and end with ] or )");
    const auto inner = body.substr(1, body.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
      throw ParseError(n, "interval needs exactly one comma");
    const auto lo = parse_value(trim(inner.substr(0, comma)), n);
    const auto hi = parse_value(trim(inner.substr(comma + 1)), n);
    try {
      out.add(degree, Interval(lo, hi, open == '[', close == ']'));
    } catch (const std::invalid_argument& e) {
      throw ParseError(n, e.what());
    }
  });
  return out;
}

void write_barcode(std::ostream& out, const Barcode& barcode) {
  for (const auto& [degree, iv] : barcode.bars()) out << degree << ' ' << iv.to_string() << '\n';
}

PersistenceDiagram read_diagram(std::istream& in) {
  PersistenceDiagram out;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    const auto tok = split(line);
    if (tok.size() != 4) throw ParseError(n, "expected '<degree> <p> <q> <multiplicity>'");
    const int degree = parse_int(tok[0], n);
    const auto p = parse_value(tok[1], n);
    const auto q = parse_value(tok[2], n);
    const auto m = parse_integer(tok[3], n);
    if (m < 1) throw ParseError(n, "multiplicity must be positive");
    try {
      out.add(degree, DiagramPoint(p, q), static_cast<std::size_t>(m));
    } catch (const std::invalid_argument& e) {
      throw ParseError(n, e.what());
    }
  });
  return out;
}

void write_diagram(std::ostream& out, const PersistenceDiagram& diagram) {
  for (const auto& [degree, pts] : diagram.by_degree())
    for (const auto& [pt, m] : pts)
      out << degree << ' ' << to_string(pt.birth()) << ' ' << to_string(pt.death()) << ' ' << m
          << '\n';
}

FilteredComplex read_filtration(std::istream& in) {
  FilteredComplex out;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    const auto tok = split(line);
    if (tok.size() < 3 || tok[0] != "simplex")
      throw ParseError(n, "expected 'simplex <value> <v0> [v1 ...]'");
    const double value = parse_finite(tok[1], n);
    Vertices vertices;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      const int v = parse_int(tok[i], n);
      if (v < 0) throw ParseError(n, "vertex ids must be nonnegative");
      vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw ParseError(n, "repeated vertex in simplex");
    out.add(std::move(vertices), value);
  });
  return out;
}

void write_filtration(std::ostream& out, const FilteredComplex& complex) {
  for (const auto& s : complex.simplices()) {
    out << "simplex " << format_double(s.value);
    for (const int v : s.vertices) out << ' ' << v;
    out << '\n';
  }
}

Cover read_cover(std::istream& in) {
  std::vector<int> ground;
  bool has_ground = false;
  bool seen_set = false;
  std::vector<CoverSet> sets;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    const auto tok = split(line);
    if (tok[0] == "ground") {
      if (has_ground || seen_set) throw ParseError(n, "'ground' must be the first line");
      has_ground = true;
      for (std::size_t i = 1; i < tok.size(); ++i) ground.push_back(parse_int(tok[i], n));
    } else if (tok[0] == "set") {
      if (tok.size() < 3) throw ParseError(n, "expected 'set <id> <elem> [elem ...]'");
      seen_set = true;
      CoverSet s{parse_int(tok[1], n), {}};
      for (std::size_t i = 2; i < tok.size(); ++i) s.elements.push_back(parse_int(tok[i], n));
      sets.push_back(std::move(s));
    } else {
      throw ParseError(n, "unknown record '" + std::string(tok[0]) + "'");
    }
  });
  return has_ground ? Cover(std::move(ground), std::move(sets)) : Cover(std::move(sets));
}

std::vector<std::vector<double>> read_distance_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    std::vector<double> row;
    for (const auto t : split(line)) row.push_back(parse_finite(t, n));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(n, "rows differ in length");
    rows.push_back(std::move(row));
  });
  return rows;
}

std::vector<std::vector<double>> read_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    std::vector<double> row;
    for (const auto t : split(line, ',')) row.push_back(parse_finite(t, n));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(n, "rows differ in length");
    rows.push_back(std::move(row));
  });
  return rows;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace funtopo
