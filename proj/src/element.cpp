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

#include "brauer/element.hpp"

#include <sstream>

namespace brauer {

void BrauerElement::add_term(const BrauerDiagram& d, const OmegaRatFunc& c) {
    if (d.size() != n_) throw usage_error("BrauerElement::add_term: size mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BrauerElement BrauerElement::operator-() const {
    BrauerElement r(n_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

BrauerElement operator+(const BrauerElement& a, const BrauerElement& b) {
    if (a.n_ != b.n_) throw usage_error("BrauerElement: size mismatch");
    BrauerElement r(a);
    for (const auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
}

BrauerElement operator-(const BrauerElement& a, const BrauerElement& b) {
    if (a.n_ != b.n_) throw usage_error("BrauerElement: size mismatch");
    BrauerElement r(a);
    for (const auto& [d, c] : b.terms_) r.add_term(d, -c);
    return r;
}

BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
    if (a.n_ != b.n_) throw usage_error("BrauerElement: size mismatch");
    BrauerElement r(a.n_);
    const OmegaRatFunc w = OmegaRatFunc::omega();
    for (const auto& [d1, c1] : a.terms_) {
        for (const auto& [d2, c2] : b.terms_) {
            auto [loops, prod] = diagram_mul(d1, d2);
            OmegaRatFunc c = c1 * c2;
            for (int k = 0; k < loops; ++k) c *= w;
            r.add_term(prod, c);
        }
    }
    return r;
}

BrauerElement BrauerElement::scaled(const OmegaRatFunc& s) const {
    BrauerElement r(n_);
    if (s.is_zero()) return r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, c * s);
    return r;
}

BrauerElement BrauerElement::embedded(int new_n) const {
    BrauerElement r(new_n);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d.embedded(new_n), c);
    return r;
}

BrauerElement BrauerElement::transposed() const {
    BrauerElement r(n_);
    for (const auto& [d, c] : terms_) r.add_term(d.transposed(), c);
    return r;
}

bool BrauerElement::is_symmetric_group_element() const {
    for (const auto& [d, c] : terms_) {
        (void)c;
        if (!d.is_permutation()) return false;
    }
    return true;
}

std::string BrauerElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << d.to_string();
    }
    return os.str();
}

BrauerElement jucys_murphy(int r, int n) {
    if (r < 1 || r > n) throw usage_error("jucys_murphy: index out of range");
    // (omega-1)/2 times the identity plus the sum of s_ir - eps_ir for i < r.
    BrauerElement x = BrauerElement::one(n).scaled(content_value(0, false));
    for (int i = 1; i < r; ++i) {
        x += BrauerElement(s_ij(i, r, n));
        x -= BrauerElement(eps_ij(i, r, n));
    }
    return x;
}

SymGroupElement::SymGroupElement(BrauerElement e) : elem_(std::move(e)) {
    if (!elem_.is_symmetric_group_element())
        throw usage_error("SymGroupElement: diagram with a horizontal edge");
}

SymGroupElement project_symmetric_group(const BrauerElement& a) {
    BrauerElement r(a.size());
    for (const auto& [d, c] : a.terms())
        if (d.is_permutation()) r.add_term(d, c);
    return SymGroupElement(std::move(r));
}

} // namespace brauer
