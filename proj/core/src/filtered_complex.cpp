#include "funtopo/filtered_complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace funtopo {

namespace {

const char* describe(ComplexError::Kind kind) {
  switch (kind) {
    case ComplexError::Kind::malformed_simplex: return "malformed simplex";
    case ComplexError::Kind::duplicate_simplex: return "duplicate simplex";
    case ComplexError::Kind::missing_face: return "missing face";
    case ComplexError::Kind::non_monotone: return "non-monotone filtration";
  }
  return "invalid complex";
}

std::string message(ComplexError::Kind kind, const Vertices& simplex, const Vertices& face) {
  std::string s = std::string(describe(kind)) + ": " + to_string(simplex);
  if (!face.empty()) s += " (face " + to_string(face) + ")";
  return s;
}

bool well_formed(const Vertices& v) {
  if (v.empty() || v.front() < 0) return false;
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>{}) == v.end();
}

// Dimension first, then lexicographic.
struct ByDimension {
  bool operator()(const Vertices& a, const Vertices& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace

ComplexError::ComplexError(Kind kind, Vertices simplex, Vertices face)
    : ValidationError(message(kind, simplex, face)),
      kind_(kind),
      simplex_(std::move(simplex)),
      face_(std::move(face)) {}

MissingVertexValueError::MissingVertexValueError(int vertex)
    : ValidationError("missing value for vertex " + std::to_string(vertex)), vertex_(vertex) {}

std::string to_string(const Vertices& simplex) {
  std::string s = "{";
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(simplex[i]);
  }
  return s + "}";
}

int FilteredComplex::dimension() const noexcept {
  int dim = -1;
  for (const auto& s : simplices_) dim = std::max(dim, s.dimension());
  return dim;
}

void FilteredComplex::validate() const {
  std::map<Vertices, double> value_of;
  for (const auto& s : simplices_) {
    if (!well_formed(s.vertices))
      throw ComplexError(ComplexError::Kind::malformed_simplex, s.vertices);
    if (std::isnan(s.value)) throw ComplexError(ComplexError::Kind::malformed_simplex, s.vertices);
    if (!value_of.emplace(s.vertices, s.value).second)
      throw ComplexError(ComplexError::Kind::duplicate_simplex, s.vertices);
  }
  for (const auto& s : simplices_) {
    if (s.vertices.size() < 2) continue;
    for (auto& face : facets(s.vertices)) {
      const auto it = value_of.find(face);
      if (it == value_of.end())
        throw ComplexError(ComplexError::Kind::missing_face, s.vertices, std::move(face));
      if (it->second > s.value)
        throw ComplexError(ComplexError::Kind::non_monotone, s.vertices, std::move(face));
    }
  }
}

std::vector<Vertices> facets(const Vertices& simplex) {
  std::vector<Vertices> out;
  if (simplex.size() < 2) return out;
  out.reserve(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    Vertices face;
    face.reserve(simplex.size() - 1);
    for (std::size_t j = 0; j < simplex.size(); ++j)
      if (j != i) face.push_back(simplex[j]);
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<Vertices> face_closure(std::span<const Vertices> simplices) {
  std::set<Vertices, ByDimension> closed;
  std::vector<Vertices> stack(simplices.begin(), simplices.end());
  while (!stack.empty()) {
    auto s = std::move(stack.back());
    stack.pop_back();
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (closed.count(s)) continue;
    for (auto& f : facets(s)) stack.push_back(std::move(f));
    closed.insert(std::move(s));
  }
  return {closed.begin(), closed.end()};
}

FilteredComplex lower_star(const std::map<int, double>& vertex_values,
                           std::span<const Vertices> complex) {
  FilteredComplex out;
  for (auto& s : face_closure(complex)) {
    double value = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto it = vertex_values.find(s[i]);
      if (it == vertex_values.end()) throw MissingVertexValueError(s[i]);
      value = i == 0 ? it->second : std::max(value, it->second);
    }
    out.add(std::move(s), value);
  }
  out.validate();
  return out;
}

FilteredComplex with_values(const FilteredComplex& complex, std::span<const double> values) {
  if (values.size() != complex.size())
    throw std::invalid_argument("with_values: one value per simplex required");
  FilteredComplex out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out.add(complex.simplices()[i].vertices, values[i]);
  return out;
}

double sup_distance(const FilteredComplex& f, const FilteredComplex& g) {
  std::map<Vertices, double> gv;
  for (const auto& s : g.simplices()) gv.emplace(s.vertices, s.value);
  if (gv.size() != f.size()) throw std::invalid_argument("sup_distance: different simplex sets");
  double sup = 0.0;
  for (const auto& s : f.simplices()) {
    const auto it = gv.find(s.vertices);
    if (it == gv.end()) throw std::invalid_argument("sup_distance: different simplex sets");
    sup = std::max(sup, std::abs(s.value - it->second));
  }
  return sup;
}

}  // namespace funtopo
