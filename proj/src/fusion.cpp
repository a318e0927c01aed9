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

#include "brauer/fusion.hpp"

#include <sstream>

namespace brauer {

namespace {

OmegaRatFunc half_omega() {
    return OmegaRatFunc(OmegaPoly::linear(make_rat(1, 2), Rat(0)));
}

/// The step-r chain rho_{r-1,r}(-c_{r-1}-u+kappa)...rho_{1,r}(-c_1-u+kappa)
/// rho_{1,r}(c_1-u)...rho_{r-1,r}(c_{r-1}-u), multiplied onto acc (size r).
AlgValuedRatFunc apply_step_chain(AlgValuedRatFunc acc, int r,
                                  const std::vector<OmegaRatFunc>& cs) {
    const OmegaRatFunc kappa = kappa_omega();
    for (int i = r - 1; i >= 1; --i)
        acc = acc * rho_shifted(i, r, r, /*neg_u=*/true, kappa - cs[i - 1]);
    for (int i = 1; i <= r - 1; ++i)
        acc = acc * rho_shifted(i, r, r, /*neg_u=*/true, cs[i - 1]);
    return acc;
}

} // namespace

BrauerElement murphy_idempotent(const UpdownTableau& t) {
    BrauerElement e = BrauerElement::one(1);
    const std::vector<OmegaRatFunc> cs = contents(t);
    for (int r = 2; r <= t.length(); ++r) {
        e = e.embedded(r);
        const BrauerElement x = jucys_murphy(r, r);
        const Partition& mu = t.shapes()[r - 2];
        const auto st = t.step(r);
        OmegaRatFunc denom(Rat(1));
        for (const OmegaRatFunc& a : branching_contents(mu, st.box, st.removed)) {
            e *= x - BrauerElement::one(r).scaled(a);
            denom *= cs[r - 1] - a;
        }
        e = e.scaled(denom.reciprocal());
    }
    return e;
}

BrauerElement fusion_step(const BrauerElement& e_prev, int r,
                          const std::vector<OmegaRatFunc>& cs) {
    const OmegaRatFunc kappa = kappa_omega();
    AlgValuedRatFunc f = apply_step_chain(AlgValuedRatFunc::constant(e_prev.embedded(r)), r, cs);

    // (u-c_r)(u+c_1-kappa) / ((u-c_1)(u+c_r-kappa)) * prod_{i<r} (u-c_i)^2/((u-c_i)^2-1)
    ScalarPoly num_s = linear_in_u(cs[r - 1]) * linear_in_u(kappa - cs[0]);
    ScalarPoly den_s = linear_in_u(cs[0]) * linear_in_u(kappa - cs[r - 1]);
    const ScalarPoly one_s = ScalarPoly::constant(OmegaRatFunc(Rat(1)));
    for (int i = 1; i <= r - 1; ++i) {
        ScalarPoly sq = linear_in_u(cs[i - 1]) * linear_in_u(cs[i - 1]);
        num_s = num_s * sq;
        std::vector<OmegaRatFunc> shifted = sq.coeffs();
        shifted[0] -= OmegaRatFunc(Rat(1));
        den_s = den_s * ScalarPoly(std::move(shifted));
    }
    f = f.mul_scalar(num_s, den_s).reduced();

    try {
        return evaluate_with_cancellation(f, cs[r - 1], 0);
    } catch (const pole_error& e) {
        throw fusion_regularity_error(std::string("fusion_step: ") + e.what());
    }
}

BrauerElement fusion_idempotent(const UpdownTableau& t) {
    BrauerElement e = BrauerElement::one(1);
    const std::vector<OmegaRatFunc> cs = contents(t);
    for (int r = 2; r <= t.length(); ++r) e = fusion_step(e, r, cs);
    return e;
}

ExponentFusionResult fusion_with_exponents(const UpdownTableau& t) {
    const std::vector<OmegaRatFunc> cs = contents(t);
    const std::vector<int> ps = exponents(t);
    BrauerElement value = BrauerElement::one(1);
    for (int r = 2; r <= t.length(); ++r) {
        AlgValuedRatFunc f =
            apply_step_chain(AlgValuedRatFunc::constant(value.embedded(r)), r, cs).reduced();
        try {
            value = evaluate_with_cancellation(f, cs[r - 1], ps[r - 1]);
        } catch (const pole_error& e) {
            throw fusion_regularity_error(std::string("fusion_with_exponents: ") + e.what());
        }
    }

    const BrauerElement et = murphy_idempotent(t);
    const auto& [d0, c0] = *et.terms().begin();
    const OmegaRatFunc h = value.coeff(d0) / c0;
    if (!(value == et.scaled(h)))
        throw inconsistency_error("fusion_with_exponents: value is not a scalar multiple of E_T");
    return {value, h};
}

IdempotentRecord compute_idempotent(const UpdownTableau& t, IdempotentMethod method) {
    switch (method) {
        case IdempotentMethod::Murphy:
            return IdempotentRecord(t, method, murphy_idempotent(t));
        case IdempotentMethod::Fusion:
            return IdempotentRecord(t, method, fusion_idempotent(t));
        case IdempotentMethod::FusionExponents: {
            auto r = fusion_with_exponents(t);
            return IdempotentRecord(t, method, r.value, r.h);
        }
    }
    throw usage_error("compute_idempotent: unknown method");
}

namespace {

UpdownTableau row_tableau(int n) {
    std::vector<Partition> shapes;
    for (int r = 1; r <= n; ++r) shapes.emplace_back(std::vector<int>{r});
    return UpdownTableau(std::move(shapes));
}

UpdownTableau column_tableau(int n) {
    std::vector<Partition> shapes;
    for (int r = 1; r <= n; ++r) shapes.emplace_back(std::vector<int>(r, 1));
    return UpdownTableau(std::move(shapes));
}

Rat factorial(int n) {
    Rat f(1);
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

BrauerElement symmetrizer_fusion(int n) { return fusion_idempotent(row_tableau(n)); }

BrauerElement antisymmetrizer_fusion(int n) { return fusion_idempotent(column_tableau(n)); }

BrauerElement symmetrizer_closed(int n) {
    BrauerElement e = BrauerElement::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e *= rho_at(i, j, n, OmegaRatFunc(Rat(i - j)));
    return e.scaled(OmegaRatFunc(rat_inv(factorial(n))));
}

BrauerElement symmetrizer_closed_long(int n) {
    OmegaRatFunc pref(rat_inv(factorial(n)));
    const OmegaRatFunc w = OmegaRatFunc::omega();
    for (int r = 2; r <= n; ++r)
        pref *= (w + OmegaRatFunc(Rat(2 * r - 2))) / (w + OmegaRatFunc(Rat(4 * r - 4)));
    BrauerElement e = BrauerElement::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e *= rho_at(i, j, n, OmegaRatFunc(Rat(2 - i - j)) - half_omega());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e *= rho_at(i, j, n, OmegaRatFunc(Rat(i - j)));
    return e.scaled(pref);
}

BrauerElement antisymmetrizer_closed_perm(int n) {
    BrauerElement e = BrauerElement::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e *= yang_at(i, j, n, OmegaRatFunc(Rat(j - i)));
    return e.scaled(OmegaRatFunc(rat_inv(factorial(n))));
}

BrauerElement antisymmetrizer_closed_rho(int n) {
    OmegaRatFunc pref(rat_inv(factorial(n)));
    const OmegaRatFunc w = OmegaRatFunc::omega();
    for (int r = 2; r <= n; ++r)
        pref *= (w - OmegaRatFunc(Rat(2 * r - 2))) / (w - OmegaRatFunc(Rat(4 * r - 4)));
    BrauerElement e = BrauerElement::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e *= rho_at(i, j, n, OmegaRatFunc(Rat(i + j - 2)) - half_omega());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e *= rho_at(i, j, n, OmegaRatFunc(Rat(j - i)));
    return e.scaled(pref);
}

std::vector<int> standard_contents(const UpdownTableau& t) {
    if (!t.is_standard()) throw usage_error("standard_contents: tableau has removal steps");
    std::vector<int> sigma;
    sigma.reserve(t.length());
    for (int r = 1; r <= t.length(); ++r) sigma.push_back(t.step(r).box.diagonal());
    return sigma;
}

OmegaRatFunc standard_fusion_constant(const Partition& lambda) {
    const int n = lambda.weight();
    const OmegaRatFunc w4(OmegaPoly::linear(make_rat(1, 4), Rat(0)));
    const OmegaRatFunc w2(OmegaPoly::linear(make_rat(1, 2), Rat(0)));
    OmegaRatFunc out(rat_pow(Rat(2), n) * lambda.hook_product());
    return out * lambda.content_polynomial(w4) / lambda.content_polynomial(w2);
}

SymGroupFusionResult symmetric_group_fusion(const UpdownTableau& t) {
    const std::vector<int> sigma = standard_contents(t);
    const int n = t.length();
    BrauerElement value = BrauerElement::one(1);
    for (int r = 2; r <= n; ++r) {
        AlgValuedRatFunc f = AlgValuedRatFunc::constant(value.embedded(r));
        for (int i = r - 1; i >= 1; --i)
            f = f * yang_shifted(i, r, r, /*neg_u=*/true,
                                 OmegaRatFunc(Rat(-sigma[i - 1])) - half_omega());
        for (int i = 1; i <= r - 1; ++i)
            f = f * yang_shifted(i, r, r, /*neg_u=*/true, OmegaRatFunc(Rat(sigma[i - 1])));
        f = f.reduced();
        value = evaluate_with_cancellation(f, OmegaRatFunc(Rat(sigma[r - 1])), 0);
    }

    const SymGroupElement et = project_symmetric_group(murphy_idempotent(t));
    const auto& [d0, c0] = *et.elem().terms().begin();
    const OmegaRatFunc constant = value.coeff(d0) / c0;
    if (!(value == et.elem().scaled(constant)))
        throw inconsistency_error("symmetric_group_fusion: value is not a multiple of E_T");
    return {SymGroupElement(value), constant, et};
}

Report check_presentation(int n) {
    if (n < 2) throw usage_error("check_presentation: n must be at least 2");
    Report rep;
    const BrauerElement one = BrauerElement::one(n);
    const OmegaRatFunc w = OmegaRatFunc::omega();
    auto S = [&](int i) { return BrauerElement(gen_s(i, n)); };
    auto E = [&](int i) { return BrauerElement(gen_eps(i, n)); };
    auto param = [&](int i, int j = -1) {
        std::ostringstream os;
        os << "n=" << n << " i=" << i;
        if (j >= 0) os << " j=" << j;
        return os.str();
    };

    for (int i = 1; i <= n - 1; ++i) {
        rep.add("s_i^2 = 1", param(i), S(i) * S(i) == one);
        rep.add("eps_i^2 = omega eps_i", param(i), E(i) * E(i) == E(i).scaled(w));
        rep.add("s_i eps_i = eps_i", param(i), S(i) * E(i) == E(i));
        rep.add("eps_i s_i = eps_i", param(i), E(i) * S(i) == E(i));
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            rep.add("s_i s_j = s_j s_i", param(i, j), S(i) * S(j) == S(j) * S(i));
            rep.add("eps_i eps_j = eps_j eps_i", param(i, j), E(i) * E(j) == E(j) * E(i));
            rep.add("s_i eps_j = eps_j s_i", param(i, j), S(i) * E(j) == E(j) * S(i));
        }
    for (int i = 1; i <= n - 2; ++i) {
        rep.add("braid", param(i), S(i) * S(i + 1) * S(i) == S(i + 1) * S(i) * S(i + 1));
        rep.add("eps_i eps_{i+1} eps_i = eps_i", param(i), E(i) * E(i + 1) * E(i) == E(i));
        rep.add("eps_{i+1} eps_i eps_{i+1} = eps_{i+1}", param(i),
                E(i + 1) * E(i) * E(i + 1) == E(i + 1));
        rep.add("s_i eps_{i+1} eps_i = s_{i+1} eps_i", param(i),
                S(i) * E(i + 1) * E(i) == S(i + 1) * E(i));
        rep.add("eps_{i+1} eps_i s_{i+1} = eps_{i+1} s_i", param(i),
                E(i + 1) * E(i) * S(i + 1) == E(i + 1) * S(i));
    }
    return rep;
}

Report verify_idempotent_system(int n) {
    Report rep;
    const auto tableaux = enumerate_updown(n);
    std::vector<BrauerElement> es;
    es.reserve(tableaux.size());
    for (const auto& t : tableaux) es.push_back(murphy_idempotent(t));

    BrauerElement sum = BrauerElement::zero(n);
    for (std::size_t a = 0; a < es.size(); ++a) {
        sum += es[a];
        rep.add("E_T^2 = E_T", tableaux[a].to_string(), es[a] * es[a] == es[a]);
        const auto cs = contents(tableaux[a]);
        for (int r = 1; r <= n; ++r) {
            const BrauerElement x = jucys_murphy(r, n);
            const BrauerElement want = es[a].scaled(cs[r - 1]);
            rep.add("x_r E_T = c_r E_T", tableaux[a].to_string() + " r=" + std::to_string(r),
                    x * es[a] == want && es[a] * x == want);
        }
    }
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            bool ok = (es[a] * es[b]).is_zero() && (es[b] * es[a]).is_zero();
            rep.add("E_T E_T' = 0", tableaux[a].to_string() + " | " + tableaux[b].to_string(), ok);
        }
    rep.add("sum_T E_T = 1", "n=" + std::to_string(n), sum == BrauerElement::one(n));

    if (n >= 2) {
        for (const auto& u : enumerate_updown(n - 1)) {
            BrauerElement refined = BrauerElement::zero(n);
            for (std::size_t a = 0; a < es.size(); ++a)
                if (tableaux[a].prefix(n - 1) == u) refined += es[a];
            rep.add("E_U = sum E_T over extensions", u.to_string(),
                    refined == murphy_idempotent(u).embedded(n));
        }
    }
    return rep;
}

Report check_rho_ybe(int n, std::uint64_t seed, int samples) {
    if (n < 3) throw usage_error("check_rho_ybe: need n >= 3");
    Report rep;
    RationalSampler sampler(seed);
    const int triples[][3] = {{1, 2, 3}, {2, 1, 3}, {3, 1, 2}};
    for (int s = 0; s < samples; ++s) {
        Rat u, v;
        do {
            u = sampler.next();
            v = sampler.next();
        } while (u == 0 || v == 0 || u + v == 0);
        const auto& tr = triples[s % 3];
        const int i = tr[0], j = tr[1], k = tr[2];
        BrauerElement lhs = rho_at(i, j, n, OmegaRatFunc(u)) *
                            rho_at(i, k, n, OmegaRatFunc(u + v)) *
                            rho_at(j, k, n, OmegaRatFunc(v));
        BrauerElement rhs = rho_at(j, k, n, OmegaRatFunc(v)) *
                            rho_at(i, k, n, OmegaRatFunc(u + v)) *
                            rho_at(i, j, n, OmegaRatFunc(u));
        std::ostringstream os;
        os << "(i,j,k)=(" << i << "," << j << "," << k << ") u=" << rat_to_string(u)
           << " v=" << rat_to_string(v);
        rep.add("yang-baxter", os.str(), lhs == rhs);
    }
    return rep;
}

Report check_rho_unitarity(int n) {
    Report rep;
    for (int i = 1; i <= std::min(n - 1, 2); ++i) {
        for (int j = i + 1; j <= std::min(n, i + 2); ++j) {
            AlgValuedRatFunc prod =
                (rho_shifted(i, j, n, false, OmegaRatFunc()) *
                 rho_shifted(i, j, n, true, OmegaRatFunc()))
                    .reduced();
            // (u^2 - 1)/u^2 times the identity.
            ScalarPoly u2ped{{OmegaRatFunc(Rat(-1)), OmegaRatFunc(), OmegaRatFunc(Rat(1))}};
            ScalarPoly u2{{OmegaRatFunc(), OmegaRatFunc(), OmegaRatFunc(Rat(1))}};
            AlgValuedRatFunc expected(
                n, scalar_poly_times_element(u2ped, BrauerElement::one(n)), u2);
            rep.add("rho unitarity (symbolic)",
                    "i=" + std::to_string(i) + " j=" + std::to_string(j),
                    prod == expected.reduced());
        }
    }
    return rep;
}

namespace {

BrauerElement lex_product_at(int n, const std::vector<OmegaRatFunc>& us) {
    const OmegaRatFunc kappa = kappa_omega();
    BrauerElement e = BrauerElement::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e *= rho_at(i, j, n, kappa - us[i - 1] - us[j - 1]);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e *= rho_at(i, j, n, us[i - 1] - us[j - 1]);
    return e;
}

BrauerElement chain_product_at(int n, const std::vector<OmegaRatFunc>& us) {
    const OmegaRatFunc kappa = kappa_omega();
    BrauerElement e = BrauerElement::one(n);
    for (int r = 2; r <= n; ++r) {
        for (int i = r - 1; i >= 1; --i)
            e *= rho_at(i, r, n, kappa - us[i - 1] - us[r - 1]);
        for (int i = 1; i <= r - 1; ++i) e *= rho_at(i, r, n, us[i - 1] - us[r - 1]);
    }
    return e;
}

} // namespace

Report check_product_orderings(int n, std::uint64_t seed, int samples) {
    Report rep;
    RationalSampler sampler(seed);
    auto sample_point = [&]() {
        std::vector<OmegaRatFunc> us;
        for (;;) {
            us.clear();
            std::vector<Rat> vals;
            for (int k = 0; k < n; ++k) vals.push_back(sampler.next());
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b)
                    if (vals[a] == vals[b] || vals[a] + vals[b] == 0) ok = false;
            if (!ok) continue;
            for (const Rat& v : vals) us.emplace_back(v);
            return us;
        }
    };

    for (int s = 0; s < samples; ++s) {
        auto us = sample_point();
        rep.add("lex order = chain order (point)", "sample " + std::to_string(s),
                lex_product_at(n, us) == chain_product_at(n, us));
    }

    // One-variable form: u_1..u_{n-1} at sampled rationals, u_n symbolic.
    for (int s = 0; s < 3; ++s) {
        auto us = sample_point();
        const OmegaRatFunc kappa = kappa_omega();
        AlgValuedRatFunc lex = AlgValuedRatFunc::constant(BrauerElement::one(n));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (j < n)
                    lex = lex * AlgValuedRatFunc::constant(
                                    rho_at(i, j, n, kappa - us[i - 1] - us[j - 1]));
                else
                    lex = lex * rho_shifted(i, n, n, true, kappa - us[i - 1]);
            }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (j < n)
                    lex = lex * AlgValuedRatFunc::constant(
                                    rho_at(i, j, n, us[i - 1] - us[j - 1]));
                else
                    lex = lex * rho_shifted(i, n, n, true, us[i - 1]);
            }
        AlgValuedRatFunc chain = AlgValuedRatFunc::constant(BrauerElement::one(n));
        for (int r = 2; r < n; ++r) {
            for (int i = r - 1; i >= 1; --i)
                chain = chain * AlgValuedRatFunc::constant(
                                    rho_at(i, r, n, kappa - us[i - 1] - us[r - 1]));
            for (int i = 1; i <= r - 1; ++i)
                chain = chain *
                        AlgValuedRatFunc::constant(rho_at(i, r, n, us[i - 1] - us[r - 1]));
        }
        for (int i = n - 1; i >= 1; --i)
            chain = chain * rho_shifted(i, n, n, true, kappa - us[i - 1]);
        for (int i = 1; i <= n - 1; ++i) chain = chain * rho_shifted(i, n, n, true, us[i - 1]);
        rep.add("lex order = chain order (symbolic last variable)",
                "sample " + std::to_string(s), lex.reduced() == chain.reduced());
    }
    return rep;
}

Report check_fusion_equals_murphy(int n) {
    Report rep;
    for (int len = 2; len <= n; ++len)
        for (const auto& t : enumerate_updown(len))
            rep.add("fusion = murphy", t.to_string(),
                    fusion_idempotent(t) == murphy_idempotent(t));
    return rep;
}

} // namespace brauer
