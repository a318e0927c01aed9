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

#include "brauer/alg_ratfunc.hpp"

#include <map>

namespace brauer {

std::pair<ScalarPoly, ScalarPoly> scalar_divrem(const ScalarPoly& a, const ScalarPoly& b) {
    if (b.is_zero()) throw pole_error("scalar_divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {ScalarPoly(), a};
    std::vector<OmegaRatFunc> rem = a.coeffs();
    std::vector<OmegaRatFunc> quot(a.degree() - b.degree() + 1, OmegaRatFunc());
    const OmegaRatFunc lead_inv = b.coeffs().back().reciprocal();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        OmegaRatFunc q = rem[k + b.degree()] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    return {ScalarPoly(std::move(quot)), ScalarPoly(std::move(rem))};
}

ScalarPoly scalar_gcd(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero() && b.is_zero()) throw usage_error("scalar_gcd: gcd(0, 0) undefined");
    ScalarPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = scalar_divrem(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return x.scaled(x.coeffs().back().reciprocal());
}

ElementPoly scalar_poly_times_element(const ScalarPoly& s, const BrauerElement& e) {
    std::vector<BrauerElement> coeffs;
    coeffs.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) coeffs.push_back(e.scaled(c));
    return ElementPoly(std::move(coeffs));
}

AlgValuedRatFunc::AlgValuedRatFunc(int n, ElementPoly num, ScalarPoly den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw pole_error("AlgValuedRatFunc: zero denominator");
}

AlgValuedRatFunc AlgValuedRatFunc::constant(const BrauerElement& e) {
    return AlgValuedRatFunc(e.size(), ElementPoly::constant(e),
                            ScalarPoly::constant(OmegaRatFunc(Rat(1))));
}

AlgValuedRatFunc operator*(const AlgValuedRatFunc& a, const AlgValuedRatFunc& b) {
    if (a.n_ != b.n_) throw usage_error("AlgValuedRatFunc: size mismatch");
    return AlgValuedRatFunc(a.n_, a.num_ * b.num_, a.den_ * b.den_);
}

AlgValuedRatFunc AlgValuedRatFunc::mul_scalar(const ScalarPoly& num_s,
                                              const ScalarPoly& den_s) const {
    return AlgValuedRatFunc(n_, num_.mul_scalar_poly(num_s), den_ * den_s);
}

AlgValuedRatFunc AlgValuedRatFunc::reduced() const {
    if (num_.is_zero()) {
        return AlgValuedRatFunc(n_, ElementPoly(),
                                ScalarPoly::constant(OmegaRatFunc(Rat(1))));
    }
    // Per-diagram scalar polynomials of the numerator.
    std::map<BrauerDiagram, std::vector<OmegaRatFunc>> per_diagram;
    const int nd = num_.degree();
    for (int k = 0; k <= nd; ++k)
        for (const auto& [d, c] : num_.coeffs()[k].terms()) {
            auto& v = per_diagram[d];
            if (v.empty()) v.assign(nd + 1, OmegaRatFunc());
            v[k] = c;
        }
    ScalarPoly content;
    bool first = true;
    for (auto& [d, v] : per_diagram) {
        (void)d;
        ScalarPoly pd{std::vector<OmegaRatFunc>(v.begin(), v.end())};
        content = first ? pd : scalar_gcd(content, pd);
        first = false;
        if (content.degree() == 0) break;
    }
    ScalarPoly g = scalar_gcd(content, den_);
    ScalarPoly new_den = scalar_divrem(den_, g).first;
    const OmegaRatFunc lead_inv = new_den.coeffs().back().reciprocal();
    new_den = new_den.scaled(lead_inv);

    // Divide the numerator by g, diagram by diagram, then rescale.
    std::vector<BrauerElement> out_coeffs(nd - g.degree() + 1, BrauerElement::zero(n_));
    for (auto& [d, v] : per_diagram) {
        ScalarPoly pd{std::vector<OmegaRatFunc>(v.begin(), v.end())};
        auto [q, r] = scalar_divrem(pd, g);
        if (!r.is_zero()) throw inconsistency_error("AlgValuedRatFunc::reduced: content mismatch");
        for (int k = 0; k <= q.degree(); ++k)
            out_coeffs[k].add_term(d, q.coeffs()[k] * lead_inv);
    }
    return AlgValuedRatFunc(n_, ElementPoly(std::move(out_coeffs)), std::move(new_den));
}

BrauerElement evaluate_with_cancellation(const AlgValuedRatFunc& f, const OmegaRatFunc& c,
                                         int p) {
    if (f.is_zero()) return BrauerElement::zero(f.size());
    ElementPoly num = f.num().taylor_shift(c);
    ScalarPoly den = f.den().taylor_shift(c);
    const int m = den.trailing_index();
    const int z = num.trailing_index();
    if (z + p > m) return BrauerElement::zero(f.size());
    if (z + p < m)
        throw pole_error("evaluate_with_cancellation: pole of order " + std::to_string(m - z - p));
    return num.coeff_ref(m - p).scaled(den.coeff_ref(m).reciprocal());
}

namespace {

ScalarPoly affine_arg(bool neg_u, const OmegaRatFunc& shift) {
    return ScalarPoly({shift, OmegaRatFunc(Rat(neg_u ? -1 : 1))});
}

} // namespace

AlgValuedRatFunc rho_shifted(int i, int j, int n, bool neg_u, const OmegaRatFunc& shift) {
    const BrauerElement one = BrauerElement::one(n);
    const BrauerElement s(s_ij(std::min(i, j), std::max(i, j), n));
    const BrauerElement eps(eps_ij(std::min(i, j), std::max(i, j), n));
    const ScalarPoly x = affine_arg(neg_u, shift);
    const ScalarPoly x_minus_kappa = affine_arg(neg_u, shift - kappa_omega());
    ElementPoly num = scalar_poly_times_element(x * x_minus_kappa, one);
    num += scalar_poly_times_element(x_minus_kappa, -s);
    num += scalar_poly_times_element(x, eps);
    return AlgValuedRatFunc(n, std::move(num), x * x_minus_kappa);
}

BrauerElement rho_at(int i, int j, int n, const OmegaRatFunc& x) {
    if (x.is_zero()) throw pole_error("rho_at: pole at 0");
    const OmegaRatFunc xk = x - kappa_omega();
    if (xk.is_zero()) throw pole_error("rho_at: pole at kappa");
    BrauerElement r = BrauerElement::one(n);
    r -= BrauerElement(s_ij(std::min(i, j), std::max(i, j), n)).scaled(x.reciprocal());
    r += BrauerElement(eps_ij(std::min(i, j), std::max(i, j), n)).scaled(xk.reciprocal());
    return r;
}

AlgValuedRatFunc yang_shifted(int i, int j, int n, bool neg_u, const OmegaRatFunc& shift) {
    const ScalarPoly x = affine_arg(neg_u, shift);
    ElementPoly num = scalar_poly_times_element(x, BrauerElement::one(n));
    num += ElementPoly::constant(-BrauerElement(s_ij(std::min(i, j), std::max(i, j), n)));
    return AlgValuedRatFunc(n, std::move(num), x);
}

BrauerElement yang_at(int i, int j, int n, const OmegaRatFunc& x) {
    if (x.is_zero()) throw pole_error("yang_at: pole at 0");
    BrauerElement r = BrauerElement::one(n);
    r -= BrauerElement(s_ij(std::min(i, j), std::max(i, j), n)).scaled(x.reciprocal());
    return r;
}

} // namespace brauer
