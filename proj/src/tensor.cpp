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

#include "brauer/tensor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "brauer/fusion.hpp"

namespace brauer {

namespace {

long ipow(int base, int exp) {
    long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

int digit_at(long idx, int sites, int slot, int N) {
    return static_cast<int>((idx / ipow(N, sites - 1 - slot)) % N);
}

long with_digit(long idx, int sites, int slot, int N, int value) {
    long stride = ipow(N, sites - 1 - slot);
    int old = digit_at(idx, sites, slot, N);
    return idx + (value - old) * stride;
}

std::string rat_str(const Rat& r) { return rat_to_string(r); }

} // namespace

std::string metric_kind_name(MetricKind k) {
    switch (k) {
        case MetricKind::OrthogonalIdentity: return "orthogonal";
        case MetricKind::OrthogonalAntidiagonal: return "orthogonal-antidiagonal";
        case MetricKind::Symplectic: return "symplectic";
    }
    return "?";
}

Metric Metric::make(int N, MetricKind kind) {
    if (N < 1) throw usage_error("Metric: N must be positive");
    Metric m;
    m.N = N;
    m.kind = kind;
    m.g = ExactMatrix(N, N);
    switch (kind) {
        case MetricKind::OrthogonalIdentity:
            m.g = ExactMatrix::identity(N);
            break;
        case MetricKind::OrthogonalAntidiagonal:
            for (int i = 0; i < N; ++i) m.g.at(i, N - 1 - i) = 1;
            break;
        case MetricKind::Symplectic:
            if (N % 2 != 0) throw usage_error("Metric: symplectic needs even N");
            for (int i = 0; i < N / 2; ++i) m.g.at(i, N - 1 - i) = 1;
            for (int i = N / 2; i < N; ++i) m.g.at(i, N - 1 - i) = -1;
            break;
    }
    m.ginv = m.g.inverse();
    return m;
}

ExactMatrix build_P(int N) {
    ExactMatrix p(N * N, N * N);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) p.at(l * N + k, k * N + l) = 1;
    return p;
}

ExactMatrix build_Q(const Metric& m) {
    const int N = m.N;
    // Q = G_1 P^{t_1} G_1^{-1}; P^{t_1} = sum e_ij tensor e_ij.
    ExactMatrix t(N * N, N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) t.at(i * N + i, j * N + j) = 1;
    ExactMatrix g1 = kron(m.g, ExactMatrix::identity(N));
    ExactMatrix g1inv = kron(m.ginv, ExactMatrix::identity(N));
    return g1 * t * g1inv;
}

ExactMatrix build_R(const Metric& m, const Rat& u) {
    if (u == 0 || u == m.kappa()) throw pole_error("build_R: pole at u = " + rat_str(u));
    ExactMatrix r = ExactMatrix::identity(m.N * m.N);
    r -= build_P(m.N).scaled(rat_inv(u));
    r += build_Q(m).scaled(rat_inv(u - m.kappa()));
    return r;
}

ExactMatrix build_R_yang(int N, const Rat& u) {
    if (u == 0) throw pole_error("build_R_yang: pole at u = 0");
    ExactMatrix r = ExactMatrix::identity(N * N);
    r -= build_P(N).scaled(rat_inv(u));
    return r;
}

std::vector<ExactMatrix> build_F(const Metric& m) {
    const int N = m.N;
    std::vector<ExactMatrix> f(N * N, ExactMatrix(N, N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            ExactMatrix& fij = f[i * N + j];
            fij.at(i, j) += 1;
            for (int k = 0; k < N; ++k) {
                if (m.g.at(i, k) == 0) continue;
                for (int l = 0; l < N; ++l)
                    if (m.ginv.at(l, j) != 0) fij.at(l, k) -= m.g.at(i, k) * m.ginv.at(l, j);
            }
        }
    return f;
}

ExactMatrix single_site_embed(const ExactMatrix& op, int sites, int slot, int N) {
    const long dim = ipow(N, sites);
    ExactMatrix out(dim, dim);
    for (long c = 0; c < dim; ++c) {
        int d = digit_at(c, sites, slot, N);
        for (int rdig = 0; rdig < N; ++rdig) {
            if (op.at(rdig, d) == 0) continue;
            out.at(with_digit(c, sites, slot, N, rdig), c) = op.at(rdig, d);
        }
    }
    return out;
}

namespace {

// op2 column lists: for column (k,l) the nonzero ((i,j), value) entries.
std::vector<std::vector<std::pair<std::pair<int, int>, Rat>>> op2_columns(const ExactMatrix& op2,
                                                                          int N) {
    std::vector<std::vector<std::pair<std::pair<int, int>, Rat>>> cols(N * N);
    for (int r = 0; r < N * N; ++r)
        for (int c = 0; c < N * N; ++c)
            if (op2.at(r, c) != 0) cols[c].emplace_back(std::make_pair(r / N, r % N), op2.at(r, c));
    return cols;
}

} // namespace

ExactMatrix two_site_embed(const ExactMatrix& op2, int sites, int a, int b, int N) {
    const long dim = ipow(N, sites);
    auto cols = op2_columns(op2, N);
    ExactMatrix out(dim, dim);
    for (long c = 0; c < dim; ++c) {
        int k = digit_at(c, sites, a, N), l = digit_at(c, sites, b, N);
        for (const auto& [rc, v] : cols[k * N + l]) {
            long r = with_digit(with_digit(c, sites, a, N, rc.first), sites, b, N, rc.second);
            out.at(r, c) = v;
        }
    }
    return out;
}

SparseMat two_site_embed_sparse(const ExactMatrix& op2, int sites, int a, int b, int N) {
    const long dim = ipow(N, sites);
    auto cols = op2_columns(op2, N);
    // Build row-major directly: transpose of the column walk.
    SparseMat out(static_cast<int>(dim), static_cast<int>(dim));
    for (long c = 0; c < dim; ++c) {
        int k = digit_at(c, sites, a, N), l = digit_at(c, sites, b, N);
        for (const auto& [rc, v] : cols[k * N + l]) {
            long r = with_digit(with_digit(c, sites, a, N, rc.first), sites, b, N, rc.second);
            out.add_entry(static_cast<int>(r), static_cast<int>(c), v);
        }
    }
    return out;
}

ExactMatrix partial_transpose(const ExactMatrix& m, int sites, int slot, int N) {
    const long dim = ipow(N, sites);
    ExactMatrix out(dim, dim);
    for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c) {
            if (m.at(r, c) == 0) continue;
            long r2 = with_digit(r, sites, slot, N, digit_at(c, sites, slot, N));
            long c2 = with_digit(c, sites, slot, N, digit_at(r, sites, slot, N));
            out.at(r2, c2) = m.at(r, c);
        }
    return out;
}

ExactMatrix pair_op_from_family(const std::vector<ExactMatrix>& family, int sites, int slot_a,
                                int slot_b, int N) {
    const long dim = ipow(N, sites);
    ExactMatrix out(dim, dim);
    for (long c = 0; c < dim; ++c) {
        const int j = digit_at(c, sites, slot_a, N);
        const int bcol = digit_at(c, sites, slot_b, N);
        for (int i = 0; i < N; ++i) {
            const ExactMatrix& fij = family[i * N + j];
            long r1 = with_digit(c, sites, slot_a, N, i);
            for (int brow = 0; brow < N; ++brow) {
                if (fij.at(brow, bcol) == 0) continue;
                out.at(with_digit(r1, sites, slot_b, N, brow), c) += fij.at(brow, bcol);
            }
        }
    }
    return out;
}

namespace {

SparseMat perm_action_sparse(const std::vector<int>& pi, int N) {
    const int n = static_cast<int>(pi.size());
    const long dim = ipow(N, n);
    SparseMat out(static_cast<int>(dim), static_cast<int>(dim));
    for (long c = 0; c < dim; ++c) {
        long r = 0;
        for (int i = 0; i < n; ++i) {
            // row digit at i is the column digit at pi[i]
            r += static_cast<long>(digit_at(c, n, pi[i], N)) * ipow(N, n - 1 - i);
        }
        out.add_entry(static_cast<int>(r), static_cast<int>(c), Rat(1));
    }
    return out;
}

} // namespace

ExactMatrix diagram_action(const BrauerDiagram& d, const Metric& m) {
    const int n = d.size();
    const DiagramNormalForm nf = normal_form(d);
    SparseMat acc = perm_action_sparse(nf.pi1, m.N);
    if (nf.f > 0) {
        const ExactMatrix q = build_Q(m);
        for (int k = 0; k < nf.f; ++k)
            acc = acc * two_site_embed_sparse(q, n, 2 * k, 2 * k + 1, m.N);
    }
    acc = acc * perm_action_sparse(nf.pi2, m.N);
    ExactMatrix out = acc.to_dense();
    if (m.symplectic()) {
        int parity = permutation_parity(nf.pi1) ^ permutation_parity(nf.pi2) ^ (nf.f & 1);
        if (parity) out = -out;
    }
    return out;
}

ExactMatrix brauer_action(const BrauerElement& e, const Metric& m) {
    const long dim = ipow(m.N, e.size());
    ExactMatrix out(dim, dim);
    const Rat w0 = m.omega_value();
    for (const auto& [d, c] : e.terms()) out += diagram_action(d, m).scaled(c.evaluate(w0));
    return out;
}

ExactMatrix gl_action(const SymGroupElement& e, int N) {
    const long dim = ipow(N, e.size());
    ExactMatrix out(dim, dim);
    for (const auto& [d, c] : e.elem().terms()) {
        if (!c.is_constant())
            throw usage_error("gl_action: coefficient depends on omega: " + c.to_string());
        out += perm_action_sparse(d.to_permutation(), N).to_dense().scaled(c.num().coeff(0));
    }
    return out;
}

Report check_pq_relations(const Metric& m) {
    Report rep;
    const std::string par = "N=" + std::to_string(m.N) + " kind=" + metric_kind_name(m.kind);
    const ExactMatrix p = build_P(m.N), q = build_Q(m);
    const ExactMatrix id = ExactMatrix::identity(m.N * m.N);
    auto resid = [](const ExactMatrix& a, const ExactMatrix& b) {
        return (a - b).max_abs_numerator().get_str();
    };
    rep.add("P^2 = 1", par, p * p == id, resid(p * p, id));
    ExactMatrix sq = q.scaled(m.sign());
    rep.add("PQ = +-Q", par, p * q == sq, resid(p * q, sq));
    rep.add("QP = +-Q", par, q * p == sq, resid(q * p, sq));
    rep.add("Q^2 = N Q", par, q * q == q.scaled(m.N), resid(q * q, q.scaled(m.N)));
    return rep;
}

Report check_f_relations(const Metric& m) {
    Report rep;
    const int N = m.N;
    const std::string par = "N=" + std::to_string(N) + " kind=" + metric_kind_name(m.kind);
    const auto f = build_F(m);

    bool antisym = true;
    for (int i = 0; i < N && antisym; ++i)
        for (int j = 0; j < N && antisym; ++j) {
            // f'_ij = sum_ab g_ia f_ba gbar_bj
            ExactMatrix fp(N, N);
            for (int a = 0; a < N; ++a) {
                if (m.g.at(i, a) == 0) continue;
                for (int b = 0; b < N; ++b)
                    if (m.ginv.at(b, j) != 0)
                        fp += f[b * N + a].scaled(m.g.at(i, a) * m.ginv.at(b, j));
            }
            if (!(f[i * N + j] + fp).is_zero()) antisym = false;
        }
    rep.add("F + F' = 0", par, antisym);

    const ExactMatrix f1 = pair_op_from_family(f, 3, 0, 2, N);
    const ExactMatrix f2 = pair_op_from_family(f, 3, 1, 2, N);
    const ExactMatrix p = two_site_embed(build_P(N), 3, 0, 1, N);
    const ExactMatrix q = two_site_embed(build_Q(m), 3, 0, 1, N);
    rep.add("Q (F1+F2) = 0", par, (q * (f1 + f2)).is_zero(),
            (q * (f1 + f2)).max_abs_numerator().get_str());
    rep.add("(F1+F2) Q = 0", par, ((f1 + f2) * q).is_zero(),
            ((f1 + f2) * q).max_abs_numerator().get_str());
    const ExactMatrix lhs = f1 * f2 - f2 * f1;
    const ExactMatrix rhs = f1 * (p - q) - (p - q) * f1;
    rep.add("F1 F2 - F2 F1 = F1 (P-Q) - (P-Q) F1", par, lhs == rhs,
            (lhs - rhs).max_abs_numerator().get_str());
    return rep;
}

Report check_r_identities(const Metric& m, std::uint64_t seed, int samples) {
    Report rep;
    RationalSampler sampler(seed);
    const Rat kappa = m.kappa();
    const int N = m.N;
    auto bad = [&](const Rat& x) { return x == 0 || x == kappa; };

    for (int s = 0; s < samples; ++s) {
        Rat u, v;
        do {
            u = sampler.next();
            v = sampler.next();
        } while (bad(u) || bad(-u) || bad(v) || bad(u + v));

        ExactMatrix uni = build_R(m, u) * build_R(m, -u);
        ExactMatrix expect = ExactMatrix::identity(N * N).scaled((u * u - 1) / (u * u));
        std::string par = "N=" + std::to_string(N) + " kind=" + metric_kind_name(m.kind) +
                          " u=" + rat_str(u) + " v=" + rat_str(v);
        rep.add("R(u) R(-u) = (u^2-1)/u^2", par, uni == expect,
                (uni - expect).max_abs_numerator().get_str());

        ExactMatrix r12 = two_site_embed(build_R(m, u), 3, 0, 1, N);
        ExactMatrix r13 = two_site_embed(build_R(m, u + v), 3, 0, 2, N);
        ExactMatrix r23 = two_site_embed(build_R(m, v), 3, 1, 2, N);
        ExactMatrix lhs = r12 * r13 * r23, rhs = r23 * r13 * r12;
        rep.add("R12 R13 R23 = R23 R13 R12", par, lhs == rhs,
                (lhs - rhs).max_abs_numerator().get_str());
    }
    return rep;
}

Report check_lemma_identities(const Metric& m, std::uint64_t seed, int samples) {
    Report rep;
    const int N = m.N;
    const Rat kappa = m.kappa();
    const std::string par = "N=" + std::to_string(N) + " kind=" + metric_kind_name(m.kind);
    const auto f = build_F(m);
    const long dim = ipow(N, 3);
    const ExactMatrix id = ExactMatrix::identity(dim);
    const ExactMatrix f1 = pair_op_from_family(f, 3, 0, 2, N);
    const ExactMatrix f2 = pair_op_from_family(f, 3, 1, 2, N);
    const ExactMatrix p = two_site_embed(build_P(N), 3, 0, 1, N);
    const ExactMatrix q = two_site_embed(build_Q(m), 3, 0, 1, N);

    const ExactMatrix u_el = q * (f1 + id.scaled(kappa)) * f2 - f2 * (f1 + id.scaled(kappa)) * q;

    rep.add("P U = +-U", par, p * u_el == u_el.scaled(m.sign()));
    rep.add("U P = +-U", par, u_el * p == u_el.scaled(m.sign()));
    rep.add("Q U + U Q = N U", par, q * u_el + u_el * q == u_el.scaled(N));
    rep.add("(F1+F2) U = U Q", par, (f1 + f2) * u_el == u_el * q);

    RationalSampler sampler(seed);
    for (int s = 0; s < samples; ++s) {
        Rat u, v;
        do {
            u = sampler.next();
            v = sampler.next();
        } while (u - v == 0 || u - v == kappa);
        const ExactMatrix r = two_site_embed(build_R(m, u - v), 3, 0, 1, N);
        const ExactMatrix ff1 = f1 + id.scaled(u), ff2 = f2 + id.scaled(v);
        const ExactMatrix lhs = r * ff1 * ff2 - ff2 * ff1 * r;
        const ExactMatrix rhs = u_el.scaled(rat_inv(u - v - kappa));
        rep.add("R(u-v) FF1(u) FF2(v) - FF2(v) FF1(u) R(u-v) = U/(u-v-kappa)",
                par + " u=" + rat_str(u) + " v=" + rat_str(v), lhs == rhs,
                (lhs - rhs).max_abs_numerator().get_str());
    }
    return rep;
}

namespace {

ExactMatrix eval_x_operator(const Metric& m, int rep_sites) {
    const int sites = rep_sites + 1;
    const long dim = ipow(m.N, sites);
    ExactMatrix x(dim, dim);
    const ExactMatrix p = build_P(m.N), q = build_Q(m);
    for (int i = 1; i <= rep_sites; ++i)
        x += two_site_embed(q, sites, 0, i, m.N) - two_site_embed(p, sites, 0, i, m.N);
    return x;
}

} // namespace

ExactMatrix evaluation_image_S(const Metric& m, int rep_sites, const Rat& u) {
    const int sites = rep_sites + 1;
    const long dim = ipow(m.N, sites);
    const ExactMatrix x = eval_x_operator(m, rep_sites);
    const Rat a = Rat(m.N) / 4;
    const ExactMatrix id = ExactMatrix::identity(dim);
    return (x + id.scaled(u - a)) * (id.scaled(u + a) - x).inverse();
}

Report check_evaluation_homomorphism(const Metric& m, int rep_sites, std::uint64_t seed,
                                     int samples) {
    Report rep;
    const int N = m.N;
    const Rat a = Rat(N) / 4;
    const Rat kappa = m.kappa();
    const std::string par = "N=" + std::to_string(N) + " kind=" + metric_kind_name(m.kind) +
                            " m=" + std::to_string(rep_sites);
    RationalSampler sampler(seed);
    auto eval_ok = [&](const Rat& u) { return !is_integer(u + a) && !is_integer(-u + a); };

    for (int s = 0; s < samples; ++s) {
        Rat u, v;
        do {
            u = sampler.next();
            v = sampler.next();
        } while (!eval_ok(u) || !eval_ok(v) || u - v == 0 || u - v == kappa || u + v == 0 ||
                 u + v == kappa);

        {
            const ExactMatrix su = evaluation_image_S(m, rep_sites, u);
            const ExactMatrix smu = evaluation_image_S(m, rep_sites, -u);
            const ExactMatrix prod = su * smu;
            const ExactMatrix id = ExactMatrix::identity(prod.rows());
            rep.add("S(u) S(-u) = 1", par + " u=" + rat_str(u), prod == id,
                    (prod - id).max_abs_numerator().get_str());
        }

        // Reflection equation on two auxiliary slots + rep sites.
        const int sites = rep_sites + 2;
        const long dim = ipow(N, sites);
        const ExactMatrix id = ExactMatrix::identity(dim);
        const ExactMatrix p = build_P(N), q = build_Q(m);
        ExactMatrix x1(dim, dim), x2(dim, dim);
        for (int i = 2; i < sites; ++i) {
            x1 += two_site_embed(q, sites, 0, i, N) - two_site_embed(p, sites, 0, i, N);
            x2 += two_site_embed(q, sites, 1, i, N) - two_site_embed(p, sites, 1, i, N);
        }
        const ExactMatrix s1 = (x1 + id.scaled(u - a)) * (id.scaled(u + a) - x1).inverse();
        const ExactMatrix s2 = (x2 + id.scaled(v - a)) * (id.scaled(v + a) - x2).inverse();
        const ExactMatrix rmv = two_site_embed(build_R(m, u - v), sites, 0, 1, N);
        const ExactMatrix rpv = two_site_embed(build_R(m, u + v), sites, 0, 1, N);
        const ExactMatrix lhs = rmv * s1 * rpv * s2;
        const ExactMatrix rhs = s2 * rpv * s1 * rmv;
        rep.add("reflection equation for the evaluation image",
                par + " u=" + rat_str(u) + " v=" + rat_str(v), lhs == rhs,
                (lhs - rhs).max_abs_numerator().get_str());
    }

    // Embedding round trip: S = 2X - N/2 and (S - S')/4 = X, where S' is the
    // G-transpose in the auxiliary slot.
    {
        const int sites = rep_sites + 1;
        const ExactMatrix x = eval_x_operator(m, rep_sites);
        const long dim = ipow(N, sites);
        const ExactMatrix s_mat = x.scaled(2) - ExactMatrix::identity(dim).scaled(Rat(N) / 2);
        const ExactMatrix g0 = single_site_embed(m.g, sites, 0, N);
        const ExactMatrix g0inv = single_site_embed(m.ginv, sites, 0, N);
        const ExactMatrix sp = g0 * partial_transpose(s_mat, sites, 0, N) * g0inv;
        rep.add("(S - S')/4 = F-image", par, (s_mat - sp).scaled(make_rat(1, 4)) == x);
    }
    return rep;
}

Report yangian_rep_check(const Metric& m, int n, const std::vector<Rat>& z, std::uint64_t seed,
                         int samples) {
    if (static_cast<int>(z.size()) != n) throw usage_error("yangian_rep_check: need n points z");
    Report rep;
    const int N = m.N;
    const Rat kappa = m.kappa();
    RationalSampler sampler(seed);
    const int sites = n + 2;  // two auxiliary slots 0, 1
    const long dim = ipow(N, sites);

    auto r_ok = [&](const Rat& w) { return w != 0 && w != kappa; };
    auto rinv_ok = [&](const Rat& w) {
        return w != 0 && w != 1 && w != -1 && -w != kappa;
    };

    std::ostringstream zs;
    for (const auto& zi : z) zs << rat_str(zi) << " ";
    const std::string par0 =
        "N=" + std::to_string(N) + " kind=" + metric_kind_name(m.kind) + " z=[" + zs.str() + "]";

    for (int s = 0; s < samples; ++s) {
        Rat u, v;
        bool ok = false;
        while (!ok) {
            u = sampler.next();
            v = sampler.next();
            ok = r_ok(u - v) && r_ok(u + v);
            for (int i = 0; i < n && ok; ++i)
                ok = r_ok(u - z[i]) && r_ok(v - z[i]) && rinv_ok(-u - z[i]) && rinv_ok(-v - z[i]);
        }
        const std::string par = par0 + " u=" + rat_str(u) + " v=" + rat_str(v);

        auto t_chain = [&](int aux, const Rat& w) {
            ExactMatrix t = ExactMatrix::identity(dim);
            for (int i = 0; i < n; ++i)
                t = t * two_site_embed(build_R(m, w - z[i]), sites, aux, 2 + i, N);
            return t;
        };
        const ExactMatrix t1 = t_chain(0, u), t2 = t_chain(1, v);
        const ExactMatrix r = two_site_embed(build_R(m, u - v), sites, 0, 1, N);
        rep.add("RTT", par, r * t1 * t2 == t2 * t1 * r,
                (r * t1 * t2 - t2 * t1 * r).max_abs_numerator().get_str());

        // S(u) = R_0n(-u-z_n)^{-1} ... R_01(-u-z_1)^{-1} R_01(u-z_1) ... R_0n(u-z_n);
        // inverses via R(w)^{-1} = w^2/(w^2-1) R(-w).
        auto s_chain = [&](int aux, const Rat& w) {
            ExactMatrix sm = ExactMatrix::identity(dim);
            for (int i = n - 1; i >= 0; --i) {
                const Rat arg = -w - z[i];
                sm = sm * two_site_embed(build_R(m, -arg), sites, aux, 2 + i, N)
                              .scaled(arg * arg / (arg * arg - 1));
            }
            for (int i = 0; i < n; ++i)
                sm = sm * two_site_embed(build_R(m, w - z[i]), sites, aux, 2 + i, N);
            return sm;
        };
        const ExactMatrix s1 = s_chain(0, u), s2 = s_chain(1, v);
        const ExactMatrix rpv = two_site_embed(build_R(m, u + v), sites, 0, 1, N);
        const ExactMatrix lhs = r * s1 * rpv * s2, rhs = s2 * rpv * s1 * r;
        rep.add("reflection equation for the R-chain image", par, lhs == rhs,
                (lhs - rhs).max_abs_numerator().get_str());
    }
    return rep;
}

namespace {

SparseMat lift_block_left(const ExactMatrix& a, int N) {
    // 1_N tensor a, rows (b, x) -> b*rows+x, cols (b, k) -> b*cols+k.
    SparseMat out(N * a.rows(), N * a.cols());
    for (int b = 0; b < N; ++b)
        for (int x = 0; x < a.rows(); ++x)
            for (int k = 0; k < a.cols(); ++k)
                if (a.at(x, k) != 0) out.add_entry(b * a.rows() + x, b * a.cols() + k, a.at(x, k));
    return out;
}

/// Verify chain * E * ((u+a)I - Y) == (u+a)/(u-a) * E * ((u-a)I + Y) with
/// E = 1_N tensor e_image (rank-factored), chain the given sparse factors
/// (leftmost first).
bool verify_intertwiner(const std::vector<SparseMat>& chain, const RankFactorization& rf,
                        const SparseMat& y, int N, const Rat& a, const Rat& u) {
    const SparseMat a_aux = lift_block_left(rf.a, N);
    const SparseMat b_aux = lift_block_left(rf.b, N);
    const long dim = y.rows();

    SparseMat c1 = a_aux;
    for (int k = static_cast<int>(chain.size()) - 1; k >= 0; --k) c1 = chain[k] * c1;

    const SparseMat b_y = b_aux * y;
    const SparseMat b_tilde = b_aux.scaled(u + a) - b_y;            // B ((u+a)I - Y)
    const SparseMat b_hat = b_aux.scaled(u - a) + b_y;              // B ((u-a)I + Y)
    const Rat s = (u + a) / (u - a);

    std::vector<Rat> lhs(dim), rhs(dim);
    for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) {
            lhs[j] = 0;
            rhs[j] = 0;
        }
        for (const auto& [k, c] : c1.row(static_cast<int>(i)))
            for (const auto& [j, v] : b_tilde.row(k)) lhs[j] += c * v;
        for (const auto& [k, c] : a_aux.row(static_cast<int>(i))) {
            const Rat sc = s * c;
            for (const auto& [j, v] : b_hat.row(k)) rhs[j] += sc * v;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace

Report check_prop_invco(const UpdownTableau& t, const Metric& m, std::uint64_t seed,
                        int samples) {
    Report rep;
    const int n = t.length();
    const int N = m.N;
    const int sites = n + 1;
    const Rat kappa = m.kappa();
    const Rat half_kappa = kappa / 2;
    const Rat a = Rat(N) / 4;
    const int csign = m.symplectic() ? 1 : -1;  // u -+ c_i + kappa/2

    std::vector<Rat> cs;
    for (const auto& c : contents(t)) cs.push_back(c.evaluate(m.omega_value()));

    const ExactMatrix e_img = brauer_action(murphy_idempotent(t), m);
    const RankFactorization rf = rank_factorization(e_img);
    rep.add("rank(E) = " + std::to_string(rf.rank),
            "N=" + std::to_string(N) + " kind=" + metric_kind_name(m.kind) + " T=" + t.to_string(),
            true);

    const ExactMatrix p = build_P(N), q = build_Q(m);
    SparseMat y(static_cast<int>(ipow(N, sites)), static_cast<int>(ipow(N, sites)));
    for (int i = 1; i <= n; ++i)
        y = y + (two_site_embed_sparse(q, sites, 0, i, N) -
                 two_site_embed_sparse(p, sites, 0, i, N));

    RationalSampler sampler(seed);
    auto r_ok = [&](const Rat& w) { return w != 0 && w != kappa; };
    auto rinv_ok = [&](const Rat& w) { return w != 0 && w != 1 && w != -1 && -w != kappa; };

    for (int s = 0; s < samples; ++s) {
        Rat u;
        bool ok = false;
        while (!ok) {
            u = sampler.next();
            ok = !is_integer(u + a) && u != a && u != -a;
            for (int i = 0; i < n && ok; ++i)
                ok = r_ok(u + csign * cs[i] + half_kappa) &&
                     rinv_ok(-u + csign * cs[i] + half_kappa);
        }
        std::vector<SparseMat> chain;
        for (int i = n; i >= 1; --i) {
            const Rat w = -u + csign * cs[i - 1] + half_kappa;
            chain.push_back(two_site_embed_sparse(build_R(m, -w), sites, 0, i, N)
                                .scaled(w * w / (w * w - 1)));
        }
        for (int i = 1; i <= n; ++i)
            chain.push_back(
                two_site_embed_sparse(build_R(m, u + csign * cs[i - 1] + half_kappa), sites, 0, i, N));

        bool pass = verify_intertwiner(chain, rf, y, N, a, u);
        rep.add("reflection-action intertwiner",
                "N=" + std::to_string(N) + " kind=" + metric_kind_name(m.kind) +
                    " T=" + t.to_string() + " u=" + rat_str(u),
                pass);
    }
    return rep;
}

Report check_prop_invcogl(const UpdownTableau& t, int N, const Rat& omega, std::uint64_t seed,
                          int samples) {
    Report rep;
    const int n = t.length();
    const int sites = n + 1;
    const Rat a = omega / 4;

    const std::vector<int> sigma = standard_contents(t);
    const ExactMatrix e_img = gl_action(project_symmetric_group(murphy_idempotent(t)), N);
    const RankFactorization rf = rank_factorization(e_img);
    rep.add("rank(E) = " + std::to_string(rf.rank),
            "N=" + std::to_string(N) + " omega=" + rat_str(omega) + " T=" + t.to_string(), true);

    const ExactMatrix p = build_P(N);
    SparseMat y(static_cast<int>(ipow(N, sites)), static_cast<int>(ipow(N, sites)));
    for (int i = 1; i <= n; ++i)
        y = y - two_site_embed_sparse(p, sites, 0, i, N);  // Y = -X0 = -sum P_0i

    RationalSampler sampler(seed);
    auto rinv_ok = [&](const Rat& w) { return w != 0 && w != 1 && w != -1; };

    for (int s = 0; s < samples; ++s) {
        Rat u;
        bool ok = false;
        while (!ok) {
            u = sampler.next();
            ok = !is_integer(u + a) && u != a && u != -a;
            for (int i = 0; i < n && ok; ++i)
                ok = (u - sigma[i] - a) != 0 && rinv_ok(-u - sigma[i] - a);
        }
        std::vector<SparseMat> chain;
        for (int i = n; i >= 1; --i) {
            const Rat w = -u - sigma[i - 1] - a;
            chain.push_back(two_site_embed_sparse(build_R_yang(N, -w), sites, 0, i, N)
                                .scaled(w * w / (w * w - 1)));
        }
        for (int i = 1; i <= n; ++i)
            chain.push_back(two_site_embed_sparse(build_R_yang(N, u - sigma[i - 1] - a), sites, 0, i, N));

        bool pass = verify_intertwiner(chain, rf, y, N, a, u);
        rep.add("gl reflection-action intertwiner",
                "N=" + std::to_string(N) + " omega=" + rat_str(omega) + " T=" + t.to_string() +
                    " u=" + rat_str(u),
                pass);
    }
    return rep;
}

} // namespace brauer
