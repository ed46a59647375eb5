// Copyright 2026 The Granule Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRANULE_TABLES_HPP_
#define GRANULE_TABLES_HPP_

#include <string>
#include <vector>

#include "granule/algebra.hpp"
#include "granule/semantics.hpp"

namespace granule::tables {

// Ray forms sharing the granule x, in the paper's column order:
// [x,-  (x,-  ]x,-  -,x]  -,x)  -,x[
const std::vector<RayEnd>& extended_forms();
// The classical subset: [x,-  ]x,-  -,x]  -,x[
const std::vector<RayEnd>& classical_forms();

std::string form_name(const RayEnd& e);

// Outcomes written relative to x ("x", "]x" for a left end at x+1, "x[" for
// a right end at x-1, "-" for a ray). Alternatives as "{ a ; b }".
std::string x_notation(const PossibilitySet& p, Granule x);

using Table = std::vector<std::vector<std::string>>;  // [row][col]

// From the sub-granule oracle at resolution k.
Table oracle_table(semantics::SetOp op, const std::vector<RayEnd>& forms, semantics::Resolution k);
// From the cut-order algebra.
Table algebra_table(semantics::SetOp op, const std::vector<RayEnd>& forms);
// As printed, transcribed into the same notation.
Table printed_table(semantics::SetOp op, bool extended);

struct Erratum {
  semantics::SetOp op;
  RayEnd row;
  RayEnd col;
  std::string printed;
  std::string derived;
};

std::vector<Erratum> errata(semantics::SetOp op, const Table& derived);

// Table "From one chronology to another one": for each input kind
// "[" "(" "]" ")" the set of kinds it may become.
struct ConversionColumn {
  Side side;
  EndpointKind kind;
  std::vector<EndpointKind> refine;   // row alpha -> beta
  std::vector<EndpointKind> coarsen;  // row alpha <- beta
};
const std::vector<ConversionColumn>& conversion_table();

std::string bracket(Side side, EndpointKind k);

}  // namespace granule::tables

#endif  // GRANULE_TABLES_HPP_
