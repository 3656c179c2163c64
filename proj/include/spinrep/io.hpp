#pragma once

#include <string>

#include <json.hpp>

#include "spinrep/branching.hpp"
#include "spinrep/center.hpp"
#include "spinrep/rep.hpp"

namespace spinrep {

using json = nlohmann::ordered_json;

/// Row-major array of [re, im] pairs.
json matrix_json(const CMatrix& m);

/// Rows of entries, one array per row.
json tableau_json(const ShiftedTableau& t);

json content_vector_json(const ContentVector& v);

/// Full document: shape, blocks, parity, operators. With compact=true only
/// the block data and the q(c)/2 spectra are emitted.
json superrep_json(const SuperRep& rep, bool compact = false);

/// Exact rational as a [numerator, denominator] pair of decimal strings.
json fraction_json(const Fraction& f);

/// Indented diagram rendering, row i shifted i-1 cells to the right.
std::string tableau_text(const ShiftedTableau& t);

}  // namespace spinrep
