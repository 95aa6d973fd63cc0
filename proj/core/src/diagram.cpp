#include "funtopo/diagram.hpp"

#include <stdexcept>

namespace funtopo {

DiagramPoint::DiagramPoint(ExtendedReal birth, ExtendedReal death) : birth_(birth), death_(death) {
  if (!(birth_ < death_)) throw std::invalid_argument("DiagramPoint: requires p < q");
}

double DiagramPoint::persistence() const noexcept {
  return death_.to_double() - birth_.to_double();
}

void PersistenceDiagram::add(int degree, const DiagramPoint& point, std::size_t multiplicity) {
  if (multiplicity == 0) throw std::invalid_argument("PersistenceDiagram: zero multiplicity");
  by_degree_[degree][point] += multiplicity;
}

std::size_t PersistenceDiagram::multiplicity(int degree, const DiagramPoint& point) const {
  const auto& pts = points(degree);
  const auto it = pts.find(point);
  return it == pts.end() ? 0 : it->second;
}

const PersistenceDiagram::PointMap& PersistenceDiagram::points(int degree) const {
  static const PointMap empty;
  const auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? empty : it->second;
}

std::vector<DiagramPoint> PersistenceDiagram::expanded(int degree) const {
  std::vector<DiagramPoint> out;
  for (const auto& [pt, m] : points(degree)) out.insert(out.end(), m, pt);
  return out;
}

std::vector<int> PersistenceDiagram::degrees() const {
  std::vector<int> out;
  for (const auto& [d, pts] : by_degree_) out.push_back(d);
  return out;
}

std::size_t PersistenceDiagram::count(int degree) const {
  std::size_t n = 0;
  for (const auto& [pt, m] : points(degree)) n += m;
  return n;
}

PersistenceDiagram diagram_of(const Barcode& barcode) {
  PersistenceDiagram out;
  for (const auto& [degree, iv] : barcode.bars()) {
    if (iv.is_singleton()) continue;
    out.add(degree, DiagramPoint(iv.lo(), iv.hi()));
  }
  return out;
}

std::size_t quadrant_count(const PersistenceDiagram& diagram, int degree, ExtendedReal x,
                           ExtendedReal y) {
  std::size_t n = 0;
  for (const auto& [pt, m] : diagram.points(degree))
    if (pt.birth() < x && y < pt.death()) n += m;
  return n;
}

}  // namespace funtopo
