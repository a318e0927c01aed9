/*
   Copyright 2026 brauer-fusion contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_JSON_IO_HPP
#define BRAUER_JSON_IO_HPP

#include <json.hpp>

#include "brauer/element.hpp"
#include "brauer/fusion.hpp"
#include "brauer/report.hpp"
#include "brauer/tableau.hpp"

namespace brauer {

using nlohmann::json;

// Rationals as "p" / "p/q" strings, polynomials as coefficient arrays,
// rational functions as {num, den}; bit-exact round trips.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json poly_to_json(const OmegaPoly& p);
OmegaPoly poly_from_json(const json& j);

json ratfunc_to_json(const OmegaRatFunc& f);
OmegaRatFunc ratfunc_from_json(const json& j);

/// {"n": n, "edges": [["T1","T2"], ...]}
json diagram_to_json(const BrauerDiagram& d);
BrauerDiagram diagram_from_json(const json& j);

/// {"n": n, "terms": [{"diagram": ..., "coeff": {num, den}}, ...]}
json element_to_json(const BrauerElement& e);
BrauerElement element_from_json(const json& j);

/// {"tableau", "method", "element", "h"?}
json idempotent_record_to_json(const IdempotentRecord& rec);

json report_to_json(const Report& rep, const std::string& suite, std::uint64_t seed);

} // namespace brauer

#endif
