#pragma once

#include <string>

#include <json.hpp>

#include "zetacode/code.hpp"
#include "zetacode/duality.hpp"
#include "zetacode/errors.hpp"
#include "zetacode/field.hpp"
#include "zetacode/funcfield.hpp"
#include "zetacode/rha.hpp"
#include "zetacode/zeta.hpp"

namespace zetacode {

using Json = nlohmann::json;

// Integers serialize as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; rationals always as canonical "num/den"
// strings ("num" when integral). Readers accept both forms.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& v);
Rat rat_from_json(const Json& j);

// {"p":…, "m":…, "modulus":[…]}
Json field_to_json(const FieldSpec& f);
FieldRef field_from_json(const Json& j);

// {"field":…, "rows":[[…],…]}; extension-field entries are GF(p)
// coefficient arrays, prime-field entries bare residues. Readers accept
// raw indices for extension fields as well.
Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

// {"n":…, "k":…, "q":…, "counts":[…]}
Json wdist_to_json(const WeightDistribution& w);
WeightDistribution wdist_from_json(const Json& j);

// {"coeffs":["num/den",…]} ascending; bare numbers accepted on input.
Json poly_to_json(const RationalPoly& p);
RationalPoly poly_from_json(const Json& j);

Json code_profile_to_json(const CodeProfile& p);
Json zeta_profile_to_json(const ZetaProfile& z);
Json fsd_report_to_json(const FsdReport& r);
Json rha_verdict_to_json(const RhaVerdict& v);

// {"q":…, "g":…, "L":[…], "A":[…], "h":…, "D_F":[…], "h_seq":[…]}
Json ff_profile_to_json(const FunctionFieldProfile& p);
FunctionFieldProfile ff_profile_from_json(const Json& j);

// {"error": {"code":…, "message":…}}
Json error_to_json(const Error& e);

// Strict parse of a JSON document; malformed text is a validation error.
Json parse_json_text(const std::string& text);

}  // namespace zetacode
