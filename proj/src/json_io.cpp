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

#include "brauer/json_io.hpp"

namespace brauer {

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) { return parse_rat(j.get<std::string>()); }

json poly_to_json(const OmegaPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_to_json(c));
    return arr;
}

OmegaPoly poly_from_json(const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
    return OmegaPoly(std::move(coeffs));
}

json ratfunc_to_json(const OmegaRatFunc& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

OmegaRatFunc ratfunc_from_json(const json& j) {
    return ratfunc_reduce(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json diagram_to_json(const BrauerDiagram& d) {
    const int n = d.size();
    auto label = [n](int p) {
        return p < n ? "T" + std::to_string(p + 1) : "B" + std::to_string(p - n + 1);
    };
    json edges = json::array();
    for (const auto& [a, b] : d.edges()) edges.push_back(json::array({label(a), label(b)}));
    return json{{"n", n}, {"edges", edges}};
}

BrauerDiagram diagram_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    auto point = [n](const std::string& s) {
        if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B'))
            throw usage_error("diagram_from_json: bad point label '" + s + "'");
        int idx = std::stoi(s.substr(1)) - 1;
        if (idx < 0 || idx >= n) throw usage_error("diagram_from_json: label out of range");
        return s[0] == 'T' ? idx : n + idx;
    };
    std::vector<BrauerDiagram::Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(point(e.at(0).get<std::string>()), point(e.at(1).get<std::string>()));
    return BrauerDiagram::from_edges(n, std::move(edges));
}

json element_to_json(const BrauerElement& e) {
    json terms = json::array();
    for (const auto& [d, c] : e.terms())
        terms.push_back(json{{"diagram", diagram_to_json(d)}, {"coeff", ratfunc_to_json(c)}});
    return json{{"n", e.size()}, {"terms", terms}};
}

BrauerElement element_from_json(const json& j) {
    BrauerElement e(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        e.add_term(diagram_from_json(t.at("diagram")), ratfunc_from_json(t.at("coeff")));
    return e;
}

namespace {

std::string method_name(IdempotentMethod m) {
    switch (m) {
        case IdempotentMethod::Murphy: return "murphy";
        case IdempotentMethod::Fusion: return "fusion";
        case IdempotentMethod::FusionExponents: return "fusion_exponents";
    }
    return "?";
}

} // namespace

json idempotent_record_to_json(const IdempotentRecord& rec) {
    json j{{"tableau", rec.tableau.to_string()},
           {"method", method_name(rec.method)},
           {"element", element_to_json(rec.element)}};
    if (rec.h) {
        j["h"] = ratfunc_to_json(*rec.h);
        j["h_string"] = rec.h->to_string();
    }
    return j;
}

json report_to_json(const Report& rep, const std::string& suite, std::uint64_t seed) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc{{"name", c.name}, {"params", c.params}, {"pass", c.pass}};
        if (!c.residual.empty()) jc["max_abs_residual_numerator"] = c.residual;
        checks.push_back(jc);
    }
    return json{{"suite", suite},
                {"seed", seed},
                {"pass", rep.all_pass()},
                {"checks", checks}};
}

} // namespace brauer
