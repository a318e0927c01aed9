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

#ifndef BRAUER_OMEGA_POLY_HPP
#define BRAUER_OMEGA_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "brauer/rational.hpp"

namespace brauer {

/// Polynomial in the parameter omega over Q.  Coefficient i is the
/// coefficient of omega^i; trailing zeros are trimmed, zero = empty list.
class OmegaPoly {
  public:
    OmegaPoly() = default;
    OmegaPoly(const Rat& c) { coeffs_.push_back(c); trim(); }           // NOLINT: implicit
    OmegaPoly(long c) : OmegaPoly(Rat(c)) {}                            // NOLINT: implicit
    explicit OmegaPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    OmegaPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

    /// The indeterminate omega itself.
    static OmegaPoly omega() { return OmegaPoly({Rat(0), Rat(1)}); }
    /// a*omega + b
    static OmegaPoly linear(const Rat& a, const Rat& b) { return OmegaPoly({b, a}); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rat(0);
    }
    const Rat& leading() const;

    OmegaPoly operator-() const;
    OmegaPoly& operator+=(const OmegaPoly& o);
    OmegaPoly& operator-=(const OmegaPoly& o);
    friend OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b) { return a += b; }
    friend OmegaPoly operator-(OmegaPoly a, const OmegaPoly& b) { return a -= b; }
    friend OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b);
    OmegaPoly& operator*=(const OmegaPoly& o) { return *this = *this * o; }
    friend OmegaPoly operator*(const Rat& s, const OmegaPoly& p);

    bool operator==(const OmegaPoly& o) const { return coeffs_ == o.coeffs_; }

    Rat evaluate(const Rat& x) const;
    OmegaPoly monic() const;
    OmegaPoly pow(unsigned e) const;

    /// Quotient and remainder of exact division over Q; divisor nonzero.
    static std::pair<OmegaPoly, OmegaPoly> divrem(const OmegaPoly& a, const OmegaPoly& b);

    std::string to_string() const;   // canonical, variable printed as UTF-8 omega

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Monic gcd over Q; not both arguments zero.
OmegaPoly poly_gcd(const OmegaPoly& p, const OmegaPoly& q);

/// Reduced rational function in omega: den monic and nonzero,
/// gcd(num, den) = 1, zero stored as 0/1.  The coefficient field of the
/// Brauer algebra and all content derived from tableaux live here.
class OmegaRatFunc {
  public:
    OmegaRatFunc() : num_(), den_(Rat(1)) {}
    OmegaRatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}       // NOLINT: implicit
    OmegaRatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}        // NOLINT: implicit
    OmegaRatFunc(const OmegaPoly& p) : num_(p), den_(Rat(1)) {} // NOLINT: implicit
    OmegaRatFunc(const OmegaPoly& num, const OmegaPoly& den);   // reduces

    static OmegaRatFunc omega() { return OmegaRatFunc(OmegaPoly::omega()); }

    const OmegaPoly& num() const { return num_; }
    const OmegaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }

    OmegaRatFunc operator-() const;
    friend OmegaRatFunc operator+(const OmegaRatFunc& a, const OmegaRatFunc& b);
    friend OmegaRatFunc operator-(const OmegaRatFunc& a, const OmegaRatFunc& b);
    friend OmegaRatFunc operator*(const OmegaRatFunc& a, const OmegaRatFunc& b);
    friend OmegaRatFunc operator/(const OmegaRatFunc& a, const OmegaRatFunc& b);
    OmegaRatFunc& operator+=(const OmegaRatFunc& o) { return *this = *this + o; }
    OmegaRatFunc& operator-=(const OmegaRatFunc& o) { return *this = *this - o; }
    OmegaRatFunc& operator*=(const OmegaRatFunc& o) { return *this = *this * o; }
    OmegaRatFunc& operator/=(const OmegaRatFunc& o) { return *this = *this / o; }

    bool operator==(const OmegaRatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    OmegaRatFunc reciprocal() const;
    OmegaRatFunc pow(long e) const;

    /// Exact value at omega = x; pole there raises pole_error.
    Rat evaluate(const Rat& x) const;
    /// Value as omega -> infinity, when finite: 0 if deg num < deg den,
    /// ratio of leading coefficients if equal, nullopt otherwise.
    std::optional<Rat> limit_at_infinity() const;

    std::string to_string() const;

    friend OmegaRatFunc ratfunc_reduce(const OmegaPoly& num, const OmegaPoly& den);

  private:
    OmegaPoly num_, den_;
};

/// Canonical reduced form of num/den (den nonzero).
OmegaRatFunc ratfunc_reduce(const OmegaPoly& num, const OmegaPoly& den);

inline OmegaRatFunc scale_by(const OmegaRatFunc& x, const OmegaRatFunc& s) { return x * s; }
inline bool is_zero(const OmegaRatFunc& x) { return x.is_zero(); }

/// Contents are degree-<=1 rational functions (omega-1)/2 + (j-i), negated on
/// removal; kept as OmegaRatFunc for uniformity.
OmegaRatFunc content_value(int diagonal, bool removed);

/// kappa = omega/2 - 1.
OmegaRatFunc kappa_omega();

} // namespace brauer

#endif
