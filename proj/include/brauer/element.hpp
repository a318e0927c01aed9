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

#ifndef BRAUER_ELEMENT_HPP
#define BRAUER_ELEMENT_HPP

#include <map>
#include <string>

#include "brauer/diagram.hpp"
#include "brauer/omega_poly.hpp"

namespace brauer {

/// Sparse linear combination of n-diagrams with coefficients in Q(omega).
/// No stored coefficient is zero; all diagrams share the same n.  Over the
/// field Q(omega) these span the Brauer algebra B_n(omega); omega stays
/// symbolic here, specialization happens only in the tensor models.
class BrauerElement {
  public:
    explicit BrauerElement(int n) : n_(n) {
        if (n < 1) throw usage_error("BrauerElement: n must be positive");
    }
    BrauerElement(const BrauerDiagram& d, OmegaRatFunc coeff = OmegaRatFunc(Rat(1)))
        : n_(d.size()) {
        if (!coeff.is_zero()) terms_[d] = std::move(coeff);
    }

    static BrauerElement zero(int n) { return BrauerElement(n); }
    static BrauerElement one(int n) { return BrauerElement(BrauerDiagram::identity(n)); }

    int size() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BrauerDiagram, OmegaRatFunc>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    OmegaRatFunc coeff(const BrauerDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? OmegaRatFunc() : it->second;
    }

    void add_term(const BrauerDiagram& d, const OmegaRatFunc& c);

    BrauerElement operator-() const;
    friend BrauerElement operator+(const BrauerElement& a, const BrauerElement& b);
    friend BrauerElement operator-(const BrauerElement& a, const BrauerElement& b);
    friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b);
    BrauerElement& operator+=(const BrauerElement& o) { return *this = *this + o; }
    BrauerElement& operator-=(const BrauerElement& o) { return *this = *this - o; }
    BrauerElement& operator*=(const BrauerElement& o) { return *this = *this * o; }

    BrauerElement scaled(const OmegaRatFunc& s) const;

    bool operator==(const BrauerElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    /// Same element inside B_{new_n} (vertical strands appended).
    BrauerElement embedded(int new_n) const;

    /// Top/bottom flip extended linearly (an anti-automorphism).
    BrauerElement transposed() const;

    bool is_symmetric_group_element() const;

    std::string to_string() const;

  private:
    int n_;
    std::map<BrauerDiagram, OmegaRatFunc> terms_;
};

inline BrauerElement scale_by(const BrauerElement& x, const OmegaRatFunc& s) {
    return x.scaled(s);
}
inline bool is_zero(const BrauerElement& x) { return x.is_zero(); }

/// Jucys-Murphy element x_r = (omega-1)/2 + sum_{i<r} (s_ir - eps_ir) in B_n.
BrauerElement jucys_murphy(int r, int n);

/// Element of the symmetric group algebra: every diagram is a permutation.
class SymGroupElement {
  public:
    explicit SymGroupElement(BrauerElement e);
    static SymGroupElement one(int n) { return SymGroupElement(BrauerElement::one(n)); }

    const BrauerElement& elem() const { return elem_; }
    int size() const { return elem_.size(); }
    bool is_zero() const { return elem_.is_zero(); }
    bool operator==(const SymGroupElement& o) const { return elem_ == o.elem_; }

    friend SymGroupElement operator+(const SymGroupElement& a, const SymGroupElement& b) {
        return SymGroupElement(a.elem_ + b.elem_);
    }
    friend SymGroupElement operator*(const SymGroupElement& a, const SymGroupElement& b) {
        return SymGroupElement(a.elem_ * b.elem_);
    }
    SymGroupElement scaled(const OmegaRatFunc& s) const { return SymGroupElement(elem_.scaled(s)); }

  private:
    BrauerElement elem_;
};

/// Quotient by the ideal generated by the eps generators: drops every diagram
/// with a horizontal edge, keeps permutation diagrams with coefficients intact.
SymGroupElement project_symmetric_group(const BrauerElement& a);

} // namespace brauer

#endif
