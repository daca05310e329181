// Plain-text matrix interchange format: a header line "dims d1 d2 ...",
// then one line per matrix row of whitespace-separated re+imj entries,
// e.g. "0.5+0j -0.25-0.1j". Writing uses enough digits to round-trip
// doubles exactly.

#pragma once

#include <iosfwd>
#include <utility>

#include "entmom/density.hpp"
#include "entmom/matrix.hpp"

namespace entmom {

void write_matrix(std::ostream& os, const ComplexMatrix& m, const Dims& dims);

// throws MatrixFormatError on malformed input
std::pair<ComplexMatrix, Dims> read_matrix(std::istream& is);

}  // namespace entmom
