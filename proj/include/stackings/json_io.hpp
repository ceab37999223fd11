#ifndef STACKINGS_JSON_IO_HPP
#define STACKINGS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "stackings/complex.hpp"
#include "stackings/convert.hpp"
#include "stackings/cover.hpp"
#include "stackings/diagram.hpp"
#include "stackings/orders.hpp"
#include "stackings/stacking.hpp"
#include "stackings/structures.hpp"

namespace stackings {

using Json = nlohmann::json;

// JSON forms of every certificate type. Field sets are exact: an unknown or
// missing field, a type mismatch, a bad direction, or a duplicate id throws
// malformed_error. Rationals travel as [numerator, denominator] with a
// nonzero denominator. Dumps are byte-deterministic: keys sorted, two-space
// indent, trailing newline. Parsing checks shape only; run validate() or the
// matching checker for semantics.

std::string dump_json(const Json& j);
Json parse_json(const std::string& text);  // malformed_error on bad syntax

Json to_json(const TwoComplex& c);
Json to_json(const Stacking& s);
Json to_json(const Relation& r);
Json to_json(const BislimStructure& b);
Json to_json(const TISStructure& t);
Json to_json(const ISStructure& s);
Json to_json(const StaggeredStructure& s);
Json to_json(const CoverData& cv);
Json to_json(const DiskDiagram& d);
Json to_json(const Embedding& e);
Json to_json(const Presentation& p);

TwoComplex complex_from_json(const Json& j);
Stacking stacking_from_json(const Json& j);
Relation relation_from_json(const Json& j);
BislimStructure bislim_from_json(const Json& j);
TISStructure tis_from_json(const Json& j);
ISStructure is_from_json(const Json& j);
StaggeredStructure staggered_from_json(const Json& j);
CoverData cover_from_json(const Json& j);
DiskDiagram diagram_from_json(const Json& j);
Embedding embedding_from_json(const Json& j);
Presentation presentation_from_json(const Json& j);

}  // namespace stackings

#endif
