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

#ifndef BRAUER_ALG_RATFUNC_HPP
#define BRAUER_ALG_RATFUNC_HPP

#include "brauer/element.hpp"
#include "brauer/unipoly.hpp"

namespace brauer {

using ScalarPoly = UniPoly<OmegaRatFunc>;
using ElementPoly = UniPoly<BrauerElement>;

/// Exact division of scalar polynomials in u over Q(omega).
std::pair<ScalarPoly, ScalarPoly> scalar_divrem(const ScalarPoly& a, const ScalarPoly& b);
/// Monic gcd of scalar polynomials in u (not both zero).
ScalarPoly scalar_gcd(const ScalarPoly& a, const ScalarPoly& b);

ElementPoly scalar_poly_times_element(const ScalarPoly& s, const BrauerElement& e);

/// One-variable rational function with algebra-valued numerator and scalar
/// denominator.  Denominators are kept scalar throughout so no algebra
/// element is ever inverted.  reduce() cancels the common scalar-polynomial
/// content of num and den and makes den monic.
class AlgValuedRatFunc {
  public:
    AlgValuedRatFunc(int n, ElementPoly num, ScalarPoly den);
    static AlgValuedRatFunc constant(const BrauerElement& e);

    int size() const { return n_; }
    const ElementPoly& num() const { return num_; }
    const ScalarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend AlgValuedRatFunc operator*(const AlgValuedRatFunc& a, const AlgValuedRatFunc& b);

    /// Multiply by a scalar rational function num_s/den_s of u.
    AlgValuedRatFunc mul_scalar(const ScalarPoly& num_s, const ScalarPoly& den_s) const;

    /// Canonical form: common (u-polynomial) content of num and den cancelled,
    /// den monic.
    AlgValuedRatFunc reduced() const;

    bool operator==(const AlgValuedRatFunc& o) const {
        return n_ == o.n_ && num_ == o.num_ && den_ == o.den_;
    }

  private:
    int n_;
    ElementPoly num_;
    ScalarPoly den_;
};

/// Regular value of f * (u-c)^p at u = c.  Expands num and den about u = c;
/// with m the root order of den at c and z the least nonzero numerator index,
/// requires z + p >= m (else pole_error); the value is numcoeff_{m-p} / dencoeff_m,
/// and the zero element when z + p > m.
BrauerElement evaluate_with_cancellation(const AlgValuedRatFunc& f, const OmegaRatFunc& c, int p);

/// rho_ij(x) = 1 - s_ij/x + eps_ij/(x-kappa) with kappa = omega/2 - 1,
/// at the affine argument x = (neg_u ? -u : u) + shift; as a rational
/// function the numerator is x(x-kappa) - (x-kappa) s_ij + x eps_ij over the
/// scalar denominator x(x-kappa).  Indices are symmetric: rho_ji = rho_ij.
AlgValuedRatFunc rho_shifted(int i, int j, int n, bool neg_u, const OmegaRatFunc& shift);

/// Pointwise rho_ij at a fixed argument (x and x-kappa both nonzero).
BrauerElement rho_at(int i, int j, int n, const OmegaRatFunc& x);

/// Yang factor 1 - s_ij/x at x = (neg_u ? -u : u) + shift; numerator
/// x - s_ij over the scalar denominator x.  Stays inside the symmetric group
/// algebra when multiplied into permutation-only elements.
AlgValuedRatFunc yang_shifted(int i, int j, int n, bool neg_u, const OmegaRatFunc& shift);

/// Pointwise Yang factor at a fixed nonzero argument.
BrauerElement yang_at(int i, int j, int n, const OmegaRatFunc& x);

} // namespace brauer

#endif
