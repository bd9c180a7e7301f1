#pragma once

#include "scatterlab/derive.hpp"
#include "scatterlab/families.hpp"

#include <json.hpp>

namespace scatterlab {

using Json = nlohmann::json;

Json to_json(const Rat& r);
/// Accepts "p/q", "p" or a JSON integer. Throws Error(parse).
Rat rat_from_json(const Json& j);

Json to_json(const Term& t);
/// Throws Error(parse) on schema violations and Error(validation) on invalid terms.
Term term_from_json(const Json& j);

Json to_json(const Box& b);
Json to_json(const BoxUnion& u);
Json to_json(const FrameRegion& f);
Json to_json(const Frames& f);
Json to_json(const CubeFamily& f);
Json to_json(const Built& b);
BoxUnion box_union_from_json(const Json& j);
FrameRegion frame_from_json(const Json& j);
Frames frames_from_json(const Json& j);
CubeFamily cube_family_from_json(const Json& j);
/// Dispatches on "kind"; anything that is not a box union, frame family or
/// cube family is read as a term.
Built built_from_json(const Json& j);

Json to_json(const CBProfile& p);
Json to_json(const ComponentList& c);
Json to_json(const Approximation& a);

/// Two-space indented dump with a trailing newline; keys are sorted.
std::string dump(const Json& j);

}  // namespace scatterlab
