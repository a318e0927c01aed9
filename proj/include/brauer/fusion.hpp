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

#ifndef BRAUER_FUSION_HPP
#define BRAUER_FUSION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "brauer/alg_ratfunc.hpp"
#include "brauer/report.hpp"
#include "brauer/tableau.hpp"

namespace brauer {

/// Primitive idempotent E_T by the Jucys-Murphy recurrence:
/// E_T = E_U (x_n - a_1)...(x_n - a_k) / ((c_n - a_1)...(c_n - a_k)),
/// the a_i running over branching_contents of the next-to-last shape.
BrauerElement murphy_idempotent(const UpdownTableau& t);

/// One fusion step: from the idempotent of the length-(r-1) prefix to the
/// length-r one, as the regular value at u = c_r of the scalar prefactor
/// (u-c_r)(u+c_1-kappa)/((u-c_1)(u+c_r-kappa)) * prod_{i<r} (u-c_i)^2/((u-c_i)^2-1)
/// times E_prev times the chain
/// rho_{r-1,r}(-c_{r-1}-u+kappa)...rho_{1,r}(-c_1-u+kappa) rho_{1,r}(c_1-u)...rho_{r-1,r}(c_{r-1}-u).
/// A genuine pole raises fusion_regularity_error (always a bug upstream).
BrauerElement fusion_step(const BrauerElement& e_prev, int r,
                          const std::vector<OmegaRatFunc>& contents);

/// Primitive idempotent by consecutive regularized evaluations (folds
/// fusion_step over r = 2..n starting from the identity of B_1).
BrauerElement fusion_idempotent(const UpdownTableau& t);

/// Consecutive evaluation of the raw factor product (no per-step scalar
/// prefactor), multiplying by (u_r - c_r)^{p_r} before each evaluation.
/// Returns the value together with the scalar ratio h = value / E_T; a
/// non-scalar ratio raises inconsistency_error.
struct ExponentFusionResult {
    BrauerElement value;
    OmegaRatFunc h;
};
ExponentFusionResult fusion_with_exponents(const UpdownTableau& t);

/// How an idempotent was produced; record for the CLI.
enum class IdempotentMethod { Murphy, Fusion, FusionExponents };
struct IdempotentRecord {
    UpdownTableau tableau;
    IdempotentMethod method;
    BrauerElement element;
    std::optional<OmegaRatFunc> h;
    IdempotentRecord(UpdownTableau t, IdempotentMethod m, BrauerElement e,
                     std::optional<OmegaRatFunc> hv = std::nullopt)
        : tableau(std::move(t)), method(m), element(std::move(e)), h(std::move(hv)) {}
};
IdempotentRecord compute_idempotent(const UpdownTableau& t, IdempotentMethod method);

// Closed forms for the full symmetrizer / anti-symmetrizer.
BrauerElement symmetrizer_fusion(int n);       // fusion of the one-row tableau
BrauerElement antisymmetrizer_fusion(int n);   // fusion of the one-column tableau
/// (1/n!) prod_{i<j} rho_ij(i-j), lexicographic order.
BrauerElement symmetrizer_closed(int n);
/// (1/n!) prod_r (omega+2r-2)/(omega+4r-4) prod rho_ij(2-i-j-omega/2) prod rho_ij(i-j).
BrauerElement symmetrizer_closed_long(int n);
/// (1/n!) prod_{i<j} (1 - s_ij/(j-i)), lexicographic order.
BrauerElement antisymmetrizer_closed_perm(int n);
/// (1/n!) prod_r (omega-2r+2)/(omega-4r+4) prod rho_ij(i+j-2-omega/2) prod rho_ij(j-i).
BrauerElement antisymmetrizer_closed_rho(int n);

/// Fusion in the symmetric group algebra with the omega parameter: the
/// consecutive evaluations of
///   prod_{i<j} (1 + s_ij/(v_i+v_j+omega/2)) prod_{i<j} (1 - s_ij/(v_i-v_j))
/// at v_k = sigma_k (the content of the box of k in the standard tableau t).
/// value = constant * E_T where constant = 2^n C(omega/4) H / C(omega/2) and
/// E_T is the classical primitive idempotent of C[S_n].
struct SymGroupFusionResult {
    SymGroupElement value;
    OmegaRatFunc constant;
    SymGroupElement idempotent;  // value / constant
};
SymGroupFusionResult symmetric_group_fusion(const UpdownTableau& t);

/// Classical contents sigma_1..sigma_n of a standard tableau.
std::vector<int> standard_contents(const UpdownTableau& t);

/// 2^n C_lambda(omega/4) H(lambda) / C_lambda(omega/2).
OmegaRatFunc standard_fusion_constant(const Partition& lambda);

// Verification suites (pure; failures are reported, never thrown).

/// All defining relations of the presentation by s_i, eps_i.
Report check_presentation(int n);

/// Idempotency, mutual orthogonality, completeness (sum = 1), the
/// Jucys-Murphy eigenvalue property, and one-step refinement, for all updown
/// tableaux of length n.
Report verify_idempotent_system(int n);

/// Yang-Baxter identity rho_ij(u) rho_ik(u+v) rho_jk(v) =
/// rho_jk(v) rho_ik(u+v) rho_ij(u) at `samples` seeded rational points.
Report check_rho_ybe(int n, std::uint64_t seed, int samples);

/// rho_ij(u) rho_ij(-u) = (u^2-1)/u^2, symbolically in u.
Report check_rho_unitarity(int n);

/// The two factor orderings of the product (full lexicographic vs the
/// chain grouping) agree: at seeded rational points, and as one-variable
/// rational functions in the last variable.
Report check_product_orderings(int n, std::uint64_t seed, int samples);

/// Oracle equivalence fusion = murphy for every tableau of length 2..n.
Report check_fusion_equals_murphy(int n);

} // namespace brauer

#endif
