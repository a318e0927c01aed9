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

#ifndef BRAUER_UNIPOLY_HPP
#define BRAUER_UNIPOLY_HPP

#include <vector>

#include "brauer/omega_poly.hpp"

namespace brauer {

// One-variable polynomial over a caller-supplied commutative coefficient
// ring C.  The same code path serves scalar coefficients (OmegaRatFunc) and
// algebra-valued ones (BrauerElement): C needs +, -, *, ==, a free is_zero,
// and scale_by(C, OmegaRatFunc).
template <class C>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static UniPoly constant(C c) {
        UniPoly p;
        p.coeffs_.push_back(std::move(c));
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& coeff_ref(int i) const { return coeffs_[i]; }

    UniPoly& operator+=(const UniPoly& o) {
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            if (i < coeffs_.size())
                coeffs_[i] = coeffs_[i] + o.coeffs_[i];
            else
                coeffs_.push_back(o.coeffs_[i]);
        }
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Product with another polynomial over the same ring.
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.coeffs_[0] - a.coeffs_[0]);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        out.trim();
        return out;
    }

    /// Product with a scalar polynomial (coefficients in the ground field).
    UniPoly mul_scalar_poly(const UniPoly<OmegaRatFunc>& s) const {
        UniPoly out;
        if (is_zero() || s.is_zero()) return out;
        out.coeffs_.assign(coeffs_.size() + s.coeffs().size() - 1, coeffs_[0] - coeffs_[0]);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < s.coeffs().size(); ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + scale_by(coeffs_[i], s.coeffs()[j]);
        out.trim();
        return out;
    }

    UniPoly scaled(const OmegaRatFunc& s) const {
        UniPoly out;
        out.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.coeffs_.push_back(scale_by(c, s));
        out.trim();
        return out;
    }

    /// q with q(v) = p(v + c); degree preserved.
    UniPoly taylor_shift(const OmegaRatFunc& c) const {
        UniPoly out(*this);
        const int n = out.degree();
        for (int j = 0; j < n; ++j)
            for (int i = n - 1; i >= j; --i)
                out.coeffs_[i] = out.coeffs_[i] + scale_by(out.coeffs_[i + 1], c);
        out.trim();
        return out;
    }

    /// Value at a scalar point (Horner).
    C evaluate(const OmegaRatFunc& x) const {
        if (is_zero()) throw usage_error("UniPoly::evaluate: zero polynomial has no terms");
        C acc = coeffs_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = scale_by(acc, x) + coeffs_[i];
        return acc;
    }

    /// Least index with a nonzero coefficient; -1 for the zero polynomial.
    int trailing_index() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<C> coeffs_;
};

/// Multiplicity of c as a root of p (p nonzero).
inline int root_order(const UniPoly<OmegaRatFunc>& p, const OmegaRatFunc& c) {
    if (p.is_zero()) throw usage_error("root_order: zero polynomial");
    return p.taylor_shift(c).trailing_index();
}

/// u - c as a scalar polynomial.
inline UniPoly<OmegaRatFunc> linear_in_u(const OmegaRatFunc& c) {
    return UniPoly<OmegaRatFunc>({-c, OmegaRatFunc(Rat(1))});
}

} // namespace brauer

#endif
