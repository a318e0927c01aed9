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

#ifndef BRAUER_RATIONAL_HPP
#define BRAUER_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "brauer/errors.hpp"

namespace brauer {

// Exact arbitrary-precision rational scalar.  mpq_class keeps the canonical
// form we require: denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
using Rat = mpq_class;

/// Canonicalizing constructor from a (possibly unreduced / negative-den) pair.
inline Rat make_rat(long num, long den) {
    if (den == 0) throw pole_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_inv(const Rat& a) {
    if (a == 0) throw pole_error("rat_inv: inverse of zero");
    return Rat(1) / a;
}

inline Rat rat_pow(const Rat& a, long e) {
    if (e < 0) return rat_pow(rat_inv(a), -e);
    Rat r(1), base(a);
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    return r;
}

/// "p" or "p/q" with canonical reduced form; inverse of parse_rat.
inline std::string rat_to_string(const Rat& a) { return a.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw usage_error("parse_rat: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw pole_error("parse_rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

/// Seeded source of small exact rationals (|num| <= 50, 1 <= den <= 50) for
/// reproducible sampled-point identity checks.
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rat next() {
        std::uniform_int_distribution<long> num(-50, 50);
        std::uniform_int_distribution<long> den(1, 50);
        return make_rat(num(rng_), den(rng_));
    }

    Rat next_nonzero() {
        for (;;) {
            Rat q = next();
            if (q != 0) return q;
        }
    }

  private:
    std::mt19937_64 rng_;
};

} // namespace brauer

#endif
