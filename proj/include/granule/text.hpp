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

#ifndef GRANULE_TEXT_HPP_
#define GRANULE_TEXT_HPP_

#include <string>
#include <string_view>

#include "granule/algebra.hpp"
#include "granule/chronology.hpp"
#include "granule/conversion.hpp"
#include "granule/interval.hpp"

namespace granule {

// Interval notation: <lk><a>,<b><rk> with lk in "[ ( ]" and rk in "] ) [".
// A "-" side without bracket is a ray: "-,1918)" or "(1918,-". A single
// granule may be written "[g]", "[g)", "(g]" or "(g)". EMPTY is the empty
// interval. Labels are resolved by the chronology.
//
// Throws ParseError (with position) on malformed text and std::domain_error
// on granules outside the chronology.
GranuleInterval parse_interval(std::string_view text, const Chronology& chronology);

// Expressions: '|' (union, lowest), '&' (intersection), prefix '~',
// between(A,B), parentheses. A bracket that opens a well-formed interval is
// read as the interval, otherwise as a group.
Expr parse_expression(std::string_view text, const Chronology& chronology);

std::string render(const Endpoint& e, Side side, const Chronology& chronology);
std::string render(const GranuleInterval& i, const Chronology& chronology);
// Pieces joined by " (+) " for gaps and juxtaposed when they meet.
std::string render(const Outcome& o, const Chronology& chronology);
// One alternative as is, several as "{ a ; b }". Alternatives that differ
// only in which input periods were merged print once.
std::string render(const PossibilitySet& p, const Chronology& chronology);
// e.g. "{ (0..2 ; [1..2 }" for a refined partial left end.
std::string render(const QualitativeEndpoint& q, Side side, const Chronology& chronology);

const char* kind_name(EndpointKind k);

}  // namespace granule

#endif  // GRANULE_TEXT_HPP_
