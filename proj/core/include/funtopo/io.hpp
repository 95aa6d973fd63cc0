#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "funtopo/barcode.hpp"
#include "funtopo/cover.hpp"
#include "funtopo/diagram.hpp"
#include "funtopo/filtered_complex.hpp"

namespace funtopo {

// Line-oriented text formats. `#` starts a comment line; blank lines are
// ignored. Readers throw ParseError with the offending line number.
//
//   .bar   <degree> <L><lo>,<hi><R>        L in {[,(}, R in {],)}
//   .dgm   <degree> <p> <q> <multiplicity>
//   .flt   simplex <value> <v0> [v1 ...]
//   .cov   [ground <e> ...]  then  set <id> <e> [e ...]
//   distance matrix: whitespace-separated square matrix
//   csv    one sample per line, comma-separated coordinates

Barcode read_barcode(std::istream& in);
void write_barcode(std::ostream& out, const Barcode& barcode);

PersistenceDiagram read_diagram(std::istream& in);
void write_diagram(std::ostream& out, const PersistenceDiagram& diagram);

/// Does not validate; see FilteredComplex::validate().
FilteredComplex read_filtration(std::istream& in);
void write_filtration(std::ostream& out, const FilteredComplex& complex);

Cover read_cover(std::istream& in);

std::vector<std::vector<double>> read_distance_matrix(std::istream& in);

/// Rows of numbers; every row must have the same length.
std::vector<std::vector<double>> read_csv(std::istream& in);

/// Opens a file for reading; throws ValidationError when it cannot.
std::ifstream open_input(const std::filesystem::path& path);

}  // namespace funtopo
