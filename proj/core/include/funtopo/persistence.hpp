#pragma once

#include "funtopo/barcode.hpp"
#include "funtopo/filtered_complex.hpp"
#include "funtopo/prime_field.hpp"

namespace funtopo {

struct PersistenceOptions {
  /// Emit pairs born and killed at the same value as singleton bars [b, b].
  /// Off by default; such bars carry no diagram information.
  bool keep_zero_persistence = false;
};

/// Persistent homology of the sublevel filtration by boundary-matrix column
/// reduction over F_p.
///
/// Simplices are ordered by (value, dimension, vertices), so the result does
/// not depend on input order. A pairing (birth, death) yields [b, e) in the
/// degree of the birth simplex and an unpaired cycle yields [b, inf).
/// Throws ComplexError when the complex does not validate.
Barcode compute_persistence(const FilteredComplex& complex, const PrimeField& field = PrimeField{},
                            const PersistenceOptions& options = {});

}  // namespace funtopo
