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

#ifndef BRAUER_TENSOR_HPP
#define BRAUER_TENSOR_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "brauer/element.hpp"
#include "brauer/exact_matrix.hpp"
#include "brauer/report.hpp"
#include "brauer/tableau.hpp"

namespace brauer {

enum class MetricKind { OrthogonalIdentity, OrthogonalAntidiagonal, Symplectic };

std::string metric_kind_name(MetricKind k);

/// Nonsingular symmetric (orthogonal kinds) or skew-symmetric (symplectic,
/// N even) metric G on C^N, with its inverse.
struct Metric {
    int N = 0;
    MetricKind kind = MetricKind::OrthogonalIdentity;
    ExactMatrix g;
    ExactMatrix ginv;

    static Metric make(int N, MetricKind kind);

    bool symplectic() const { return kind == MetricKind::Symplectic; }
    int sign() const { return symplectic() ? -1 : 1; }       // G^t = sign * G
    Rat omega_value() const { return Rat(symplectic() ? -N : N); }
    Rat kappa() const { return Rat(N) / 2 - sign(); }        // N/2 -+ 1
};

// Two-site operators on C^N (tensor) C^N, dense N^2 x N^2 with multi-index
// (a,b) -> a*N+b, first factor most significant.
ExactMatrix build_P(int N);
ExactMatrix build_Q(const Metric& m);
/// R(u) = 1 - P/u + Q/(u-kappa); u outside {0, kappa}.
ExactMatrix build_R(const Metric& m, const Rat& u);
/// Yang R-matrix R(u) = 1 - P/u; u nonzero.
ExactMatrix build_R_yang(int N, const Rat& u);

/// Vector-representation images f_ij = e_ij - sum_kl g_ik gbar_lj e_lk,
/// indexed by i*N+j.
std::vector<ExactMatrix> build_F(const Metric& m);

// Multi-site embeddings; `sites` tensor factors, slots 0-based, slot 0 most
// significant.
ExactMatrix single_site_embed(const ExactMatrix& op, int sites, int slot, int N);
ExactMatrix two_site_embed(const ExactMatrix& op2, int sites, int a, int b, int N);
SparseMat two_site_embed_sparse(const ExactMatrix& op2, int sites, int a, int b, int N);
/// Partial transpose in one slot.
ExactMatrix partial_transpose(const ExactMatrix& m, int sites, int slot, int N);

/// sum over ij of (e_ij at slot_a) tensor (family[i*N+j] at slot_b); the
/// building block for operator-valued N x N matrices such as F.
ExactMatrix pair_op_from_family(const std::vector<ExactMatrix>& family, int sites, int slot_a,
                                int slot_b, int N);

/// Matrix of one diagram under the Brauer action (s_ij -> +-P_ij,
/// eps_ij -> +-Q_ij; lower signs in the symplectic case).
ExactMatrix diagram_action(const BrauerDiagram& d, const Metric& m);

/// Image of a Brauer element at omega = +-N; a coefficient pole at the
/// specialization raises pole_error.
ExactMatrix brauer_action(const BrauerElement& e, const Metric& m);

/// Image of a symmetric-group element with constant coefficients under
/// s_ij -> P_ij on (C^N)^{tensor n}.
ExactMatrix gl_action(const SymGroupElement& e, int N);

/// P^2 = 1, PQ = QP = +-Q, Q^2 = N Q.
Report check_pq_relations(const Metric& m);

/// F + F' = 0, Q(F1+F2) = (F1+F2)Q = 0, and the matrix commutation relation
/// F1 F2 - F2 F1 = F1 (P-Q) - (P-Q) F1 in the vector representation.
Report check_f_relations(const Metric& m);

/// R-unitarity R(u)R(-u) = ((u^2-1)/u^2) 1 and the Yang-Baxter equation at
/// seeded sample points.
Report check_r_identities(const Metric& m, std::uint64_t seed, int samples);

/// R(u-v) FF1(u) FF2(v) - FF2(v) FF1(u) R(u-v) = U/(u-v-kappa) with
/// FF(x) = x + F and U = Q(F1+kappa)F2 - F2(F1+kappa)Q, plus the U-relations
/// PU = UP = +-U, QU + UQ = N U, (F1+F2)U = UQ.
Report check_lemma_identities(const Metric& m, std::uint64_t seed, int samples);

/// Evaluation image (u + X - N/4)(u - X + N/4)^{-1} on 1 auxiliary + m
/// vector-representation sites, X = sum_i (Q_{0i} - P_{0i}); exact linear
/// solve, singular solve raises pole_error.
ExactMatrix evaluation_image_S(const Metric& m, int rep_sites, const Rat& u);

/// Unitarity S(u)S(-u) = 1, the reflection equation
/// R(u-v) S1(u) R(u+v) S2(v) = S2(v) R(u+v) S1(u) R(u-v) at seeded points,
/// and the first-coefficient embedding round trip (S - S')/4 = X.
Report check_evaluation_homomorphism(const Metric& m, int rep_sites, std::uint64_t seed,
                                     int samples);

/// RTT check for T(u) -> R_01(u-z_1)...R_0n(u-z_n) and the reflection
/// equation for S(u) -> R_0n(-u-z_n)^{-1}...R_01(-u-z_1)^{-1}
/// R_01(u-z_1)...R_0n(u-z_n), at seeded points.
Report yangian_rep_check(const Metric& m, int n, const std::vector<Rat>& z, std::uint64_t seed,
                         int samples);

/// Intertwining identity transporting the updown tableau idempotent: with
/// E the image of E_T at omega = +-N, X0 = sum_i (Q_{0i} - P_{0i}) and
/// contents c_i specialized,
///   R_{0n}(-u-+c_n+kappa/2)^{-1}...R_{01}(-u-+c_1+kappa/2)^{-1}
///   R_{01}(u-+c_1+kappa/2)...R_{0n}(u-+c_n+kappa/2) E
///   = (u+N/4)/(u-N/4) E (u+X0-N/4)(u-X0+N/4)^{-1}
/// (upper signs orthogonal, lower symplectic), verified in the
/// denominator-multiplied form at seeded u with u+N/4 chosen non-integer so
/// the resolvent factor is provably invertible.  Also reports rank(E).
Report check_prop_invco(const UpdownTableau& t, const Metric& m, std::uint64_t seed,
                        int samples);

/// gl counterpart with Yang R-matrices, classical contents sigma_i, a free
/// rational omega, X0 = sum_i P_{0i}:
///   R_{0n}(-u-sigma_n-omega/4)^{-1}...R_{01}(-u-sigma_1-omega/4)^{-1}
///   R_{01}(u-sigma_1-omega/4)...R_{0n}(u-sigma_n-omega/4) E
///   = (u+omega/4)/(u-omega/4) E (u-X0-omega/4)(u+X0+omega/4)^{-1}.
Report check_prop_invcogl(const UpdownTableau& t, int N, const Rat& omega, std::uint64_t seed,
                          int samples);

} // namespace brauer

#endif
