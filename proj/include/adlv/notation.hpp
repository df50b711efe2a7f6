#pragma once

#include <json.hpp>
#include <string>

#include "adlv/components.hpp"

namespace adlv {

using Json = nlohmann::json;

// Element notation "t[c1,...,cn].s3.s1": translation coordinates in the
// coweight basis, then a reduced word in finite simple reflections (1-based).
// print/parse round-trip bit-exactly on canonical strings.
std::string print_elem(const ExtAffElem& x);
ExtAffElem parse_elem(const RootDatum& datum, const std::string& text);

std::string print_ivec(const IVec& v);
IVec parse_ivec(const std::string& text, int expect_size);
std::string print_qvec(const QVec& v);

// {"components":[{"type":"A","rank":2,"copies":2}]}
DatumSpec datum_spec_from_json(const Json& j);
Json datum_spec_to_json(const DatumSpec& spec);
std::string datum_name(const DatumSpec& spec);  // e.g. "A2", "A1x2", "D4"
DatumSpec parse_datum_name(const std::string& name);

// {"perm":[2,1,3]} (1-based global) or {"perm":[...],"components_shift":k}
// or {"name":"flip"} / {"name":"shift+flip"}.
Frobenius frobenius_from_json(const RootDatum& datum, const Json& j);
Json frobenius_to_json(const Frobenius& sigma);

Json elem_to_json(const ExtAffElem& x);

}  // namespace adlv
