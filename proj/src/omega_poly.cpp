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

#include "brauer/omega_poly.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

void OmegaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& OmegaPoly::leading() const {
    if (is_zero()) throw usage_error("OmegaPoly::leading: zero polynomial");
    return coeffs_.back();
}

OmegaPoly OmegaPoly::operator-() const {
    OmegaPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

OmegaPoly& OmegaPoly::operator+=(const OmegaPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

OmegaPoly& OmegaPoly::operator-=(const OmegaPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b) {
    if (a.is_zero() || b.is_zero()) return OmegaPoly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return OmegaPoly(std::move(out));
}

OmegaPoly operator*(const Rat& s, const OmegaPoly& p) {
    if (s == 0) return OmegaPoly();
    OmegaPoly r(p);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Rat OmegaPoly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

OmegaPoly OmegaPoly::monic() const {
    if (is_zero()) return *this;
    return rat_inv(leading()) * *this;
}

OmegaPoly OmegaPoly::pow(unsigned e) const {
    OmegaPoly r(Rat(1)), base(*this);
    for (unsigned k = e; k > 0; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    return r;
}

std::pair<OmegaPoly, OmegaPoly> OmegaPoly::divrem(const OmegaPoly& a, const OmegaPoly& b) {
    if (b.is_zero()) throw pole_error("OmegaPoly::divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {OmegaPoly(), a};
    std::vector<Rat> rem = a.coeffs_;
    std::vector<Rat> quot(a.degree() - b.degree() + 1, Rat(0));
    const Rat lead_inv = rat_inv(b.leading());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat q = rem[k + b.degree()] * lead_inv;
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeffs_[j];
    }
    return {OmegaPoly(std::move(quot)), OmegaPoly(std::move(rem))};
}

OmegaPoly poly_gcd(const OmegaPoly& p, const OmegaPoly& q) {
    if (p.is_zero() && q.is_zero()) throw usage_error("poly_gcd: gcd(0, 0) undefined");
    OmegaPoly a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = OmegaPoly::divrem(a, b);
        (void)quot;
        a = b;
        b = rem;
    }
    return a.monic();
}

namespace {

std::string format_monomial(const Rat& c, int deg, bool leading_term) {
    std::ostringstream os;
    Rat ac = c < 0 ? Rat(-c) : c;
    if (leading_term) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? "-" : "+");
    }
    if (deg == 0) {
        os << rat_to_string(ac);
    } else {
        if (ac != 1) os << rat_to_string(ac);
        os << "ω";
        if (deg > 1) os << "^" << deg;
    }
    return os.str();
}

} // namespace

std::string OmegaPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        if (coeffs_[d] == 0) continue;
        out += format_monomial(coeffs_[d], d, out.empty());
    }
    return out;
}

OmegaRatFunc::OmegaRatFunc(const OmegaPoly& num, const OmegaPoly& den) {
    *this = ratfunc_reduce(num, den);
}

OmegaRatFunc ratfunc_reduce(const OmegaPoly& num, const OmegaPoly& den) {
    if (den.is_zero()) throw pole_error("ratfunc_reduce: zero denominator");
    OmegaRatFunc r;
    if (num.is_zero()) return r;
    OmegaPoly g = poly_gcd(num, den);
    auto n = OmegaPoly::divrem(num, g).first;
    auto d = OmegaPoly::divrem(den, g).first;
    const Rat lead_inv = rat_inv(d.leading());
    r.num_ = lead_inv * n;
    r.den_ = d.monic();
    return r;
}

OmegaRatFunc OmegaRatFunc::operator-() const {
    OmegaRatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

OmegaRatFunc operator+(const OmegaRatFunc& a, const OmegaRatFunc& b) {
    return ratfunc_reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

OmegaRatFunc operator-(const OmegaRatFunc& a, const OmegaRatFunc& b) {
    return ratfunc_reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

OmegaRatFunc operator*(const OmegaRatFunc& a, const OmegaRatFunc& b) {
    return ratfunc_reduce(a.num_ * b.num_, a.den_ * b.den_);
}

OmegaRatFunc operator/(const OmegaRatFunc& a, const OmegaRatFunc& b) {
    if (b.is_zero()) throw pole_error("OmegaRatFunc: division by zero");
    return ratfunc_reduce(a.num_ * b.den_, a.den_ * b.num_);
}

OmegaRatFunc OmegaRatFunc::reciprocal() const {
    if (is_zero()) throw pole_error("OmegaRatFunc::reciprocal: zero");
    return ratfunc_reduce(den_, num_);
}

OmegaRatFunc OmegaRatFunc::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    OmegaRatFunc r(Rat(1)), base(*this);
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    return r;
}

Rat OmegaRatFunc::evaluate(const Rat& x) const {
    Rat d = den_.evaluate(x);
    if (d == 0) throw pole_error("OmegaRatFunc::evaluate: pole at omega = " + rat_to_string(x));
    return num_.evaluate(x) / d;
}

std::optional<Rat> OmegaRatFunc::limit_at_infinity() const {
    if (is_zero()) return Rat(0);
    if (num_.degree() < den_.degree()) return Rat(0);
    if (num_.degree() == den_.degree()) return num_.leading() / den_.leading();
    return std::nullopt;
}

std::string OmegaRatFunc::to_string() const {
    if (den_.is_one()) {
        if (num_.degree() <= 0) return num_.to_string();
        return num_.to_string();
    }
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    auto needs_parens = [](const OmegaPoly& p, const std::string& s) {
        return p.degree() > 0 && (s.find('+') != std::string::npos ||
                                  s.rfind('-') != std::string::npos || p.degree() >= 1);
    };
    std::string out = needs_parens(num_, n) ? "(" + n + ")" : n;
    out += "/";
    out += needs_parens(den_, d) ? "(" + d + ")" : d;
    return out;
}

OmegaRatFunc content_value(int diagonal, bool removed) {
    // (omega-1)/2 + diagonal, negated when the box is removed.
    OmegaPoly base = OmegaPoly::linear(make_rat(1, 2), make_rat(2 * diagonal - 1, 2));
    return removed ? OmegaRatFunc(-base) : OmegaRatFunc(base);
}

OmegaRatFunc kappa_omega() {
    return OmegaRatFunc(OmegaPoly::linear(make_rat(1, 2), Rat(-1)));
}

} // namespace brauer
