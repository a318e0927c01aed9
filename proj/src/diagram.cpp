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

#include "brauer/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brauer {

namespace {

std::vector<BrauerDiagram::Edge> canonicalize(std::vector<BrauerDiagram::Edge> edges) {
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace

BrauerDiagram BrauerDiagram::identity(int n) {
    if (n < 1) throw usage_error("BrauerDiagram: n must be positive");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    return BrauerDiagram(n, std::move(edges));
}

BrauerDiagram BrauerDiagram::from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw usage_error("BrauerDiagram: n must be positive");
    if (static_cast<int>(edges.size()) != n)
        throw usage_error("BrauerDiagram: expected exactly n edges");
    std::vector<int> seen(2 * n, 0);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= 2 * n || b < 0 || b >= 2 * n || a == b)
            throw usage_error("BrauerDiagram: edge endpoint out of range");
        ++seen[a];
        ++seen[b];
    }
    for (int c : seen)
        if (c != 1) throw usage_error("BrauerDiagram: edges must form a perfect matching");
    return BrauerDiagram(n, canonicalize(std::move(edges)));
}

int BrauerDiagram::partner(int point) const {
    for (const auto& [a, b] : edges_) {
        if (a == point) return b;
        if (b == point) return a;
    }
    throw usage_error("BrauerDiagram::partner: point out of range");
}

bool BrauerDiagram::is_permutation() const {
    for (const auto& [a, b] : edges_)
        if (is_top(a) == is_top(b)) return false;
    return true;
}

std::vector<int> BrauerDiagram::to_permutation() const {
    std::vector<int> perm(n_, -1);
    for (const auto& [a, b] : edges_) {
        if (is_top(a) == is_top(b))
            throw usage_error("BrauerDiagram::to_permutation: diagram has a horizontal edge");
        perm[a] = b - n_;
    }
    return perm;
}

BrauerDiagram BrauerDiagram::transposed() const {
    std::vector<Edge> edges;
    edges.reserve(n_);
    auto flip = [this](int p) { return p < n_ ? p + n_ : p - n_; };
    for (const auto& [a, b] : edges_) edges.emplace_back(flip(a), flip(b));
    return BrauerDiagram(n_, canonicalize(std::move(edges)));
}

BrauerDiagram BrauerDiagram::embedded(int new_n) const {
    if (new_n < n_) throw usage_error("BrauerDiagram::embedded: cannot shrink");
    std::vector<Edge> edges;
    edges.reserve(new_n);
    auto remap = [&](int p) { return p < n_ ? p : p - n_ + new_n; };
    for (const auto& [a, b] : edges_) edges.emplace_back(remap(a), remap(b));
    for (int i = n_; i < new_n; ++i) edges.emplace_back(i, new_n + i);
    return BrauerDiagram(new_n, canonicalize(std::move(edges)));
}

std::string BrauerDiagram::to_string() const {
    auto label = [this](int p) {
        return (p < n_ ? "T" + std::to_string(p + 1) : "B" + std::to_string(p - n_ + 1));
    };
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (k) os << ",";
        os << "(" << label(edges_[k].first) << "," << label(edges_[k].second) << ")";
    }
    os << "}";
    return os.str();
}

std::pair<int, BrauerDiagram> diagram_mul(const BrauerDiagram& d1, const BrauerDiagram& d2) {
    const int n = d1.size();
    if (d2.size() != n) throw usage_error("diagram_mul: size mismatch");

    // Glued graph on 4n points: 0..n-1 top of d1, n..2n-1 middle (bottom of
    // d1 = top of d2), 2n..3n-1 bottom of d2.  Each middle point carries one
    // edge from d1 and one from d2; external points carry one edge.
    // adj[p] = {via-d1 partner, via-d2 partner} as applicable.
    std::vector<int> adj1(2 * n, -1), adj2(2 * n, -1);
    // adj1 indexed by d1's points (top 0..n-1 -> external top, bottom n..2n-1 -> middle).
    for (const auto& [a, b] : d1.edges()) {
        adj1[a] = b;
        adj1[b] = a;
    }
    // adj2 indexed by d2's points (top 0..n-1 -> middle, bottom n..2n-1 -> external bottom).
    for (const auto& [a, b] : d2.edges()) {
        adj2[a] = b;
        adj2[b] = a;
    }

    std::vector<bool> mid_visited(n, false);
    std::vector<BrauerDiagram::Edge> out_edges;
    out_edges.reserve(n);

    // External encoding of the product: top i -> i, bottom i -> n+i.
    auto trace_from_external = [&](int start_ext) -> int {
        // Returns the other external endpoint reached from start_ext.
        bool in_d1 = start_ext < n;     // external top i is d1's top i,
        int point = start_ext;          // external bottom n+i is d2's bottom n+i
        for (;;) {
            if (in_d1) {
                int q = adj1[point];
                if (q < n) return q;   // reached top of d1 -> external top q
                int mid = q - n;       // bottom of d1 -> middle strand mid
                mid_visited[mid] = true;
                in_d1 = false;
                point = mid;           // continue as top point of d2
            } else {
                int q = adj2[point];
                if (q >= n) return n + (q - n);  // bottom of d2 -> external bottom
                mid_visited[q] = true;
                in_d1 = true;
                point = n + q;         // continue as bottom point of d1
            }
        }
    };

    std::vector<bool> ext_done(2 * n, false);
    for (int ext = 0; ext < 2 * n; ++ext) {
        if (ext_done[ext]) continue;
        int other = trace_from_external(ext);
        ext_done[ext] = true;
        ext_done[other] = true;
        out_edges.emplace_back(ext, other);
    }

    // Closed loops: cycles confined to the middle row.  Any middle point not
    // touched by a through-path has both of its edges middle-to-middle, so
    // the alternating d2/d1 walk below stays in the middle row and closes.
    int loops = 0;
    for (int m = 0; m < n; ++m) {
        if (mid_visited[m]) continue;
        ++loops;
        int cur = m;
        bool use_d2 = true;
        do {
            mid_visited[cur] = true;
            cur = use_d2 ? adj2[cur] : adj1[n + cur] - n;
            use_d2 = !use_d2;
        } while (!(cur == m && use_d2));
    }

    return {loops, BrauerDiagram::from_edges(n, std::move(out_edges))};
}

BrauerDiagram gen_s(int i, int n) {
    if (i < 1 || i > n - 1) throw usage_error("gen_s: index out of range");
    return s_ij(i, i + 1, n);
}

BrauerDiagram gen_eps(int i, int n) {
    if (i < 1 || i > n - 1) throw usage_error("gen_eps: index out of range");
    return eps_ij(i, i + 1, n);
}

BrauerDiagram s_ij(int i, int j, int n) {
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw usage_error("s_ij: bad indices");
    std::vector<BrauerDiagram::Edge> edges;
    int a = i - 1, b = j - 1;
    for (int k = 0; k < n; ++k) {
        if (k == a)
            edges.emplace_back(a, n + b);
        else if (k == b)
            edges.emplace_back(b, n + a);
        else
            edges.emplace_back(k, n + k);
    }
    return BrauerDiagram::from_edges(n, std::move(edges));
}

BrauerDiagram eps_ij(int i, int j, int n) {
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw usage_error("eps_ij: bad indices");
    std::vector<BrauerDiagram::Edge> edges;
    int a = i - 1, b = j - 1;
    edges.emplace_back(a, b);
    edges.emplace_back(n + a, n + b);
    for (int k = 0; k < n; ++k)
        if (k != a && k != b) edges.emplace_back(k, n + k);
    return BrauerDiagram::from_edges(n, std::move(edges));
}

BrauerDiagram permutation_diagram(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<BrauerDiagram::Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + perm[i]);
    return BrauerDiagram::from_edges(n, std::move(edges));
}

int permutation_parity(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int parity = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity;
}

DiagramNormalForm normal_form(const BrauerDiagram& d) {
    const int n = d.size();
    DiagramNormalForm nf;
    nf.pi1.assign(n, -1);
    nf.pi2.assign(n, -1);

    std::vector<std::pair<int, int>> top_pairs, bottom_pairs, through;
    for (const auto& [a, b] : d.edges()) {
        bool ta = d.is_top(a), tb = d.is_top(b);
        if (ta && tb)
            top_pairs.emplace_back(a, b);
        else if (!ta && !tb)
            bottom_pairs.emplace_back(a - n, b - n);
        else
            through.emplace_back(a, b - n);  // canonical order puts the top point first
    }
    nf.f = static_cast<int>(top_pairs.size());

    // pi1 sends the k-th top pair to positions (2k, 2k+1) and the j-th
    // through strand's top end to 2f+j; pi2 routes them back out.
    for (int k = 0; k < nf.f; ++k) {
        nf.pi1[top_pairs[k].first] = 2 * k;
        nf.pi1[top_pairs[k].second] = 2 * k + 1;
        nf.pi2[2 * k] = bottom_pairs[k].first;
        nf.pi2[2 * k + 1] = bottom_pairs[k].second;
    }
    for (std::size_t j = 0; j < through.size(); ++j) {
        nf.pi1[through[j].first] = 2 * nf.f + static_cast<int>(j);
        nf.pi2[2 * nf.f + static_cast<int>(j)] = through[j].second;
    }
    return nf;
}

namespace {

void enumerate_matchings(int n, std::vector<int>& partner,
                         std::vector<BrauerDiagram>& out) {
    int first = -1;
    for (int p = 0; p < 2 * n; ++p)
        if (partner[p] < 0) {
            first = p;
            break;
        }
    if (first < 0) {
        std::vector<BrauerDiagram::Edge> edges;
        for (int p = 0; p < 2 * n; ++p)
            if (partner[p] > p) edges.emplace_back(p, partner[p]);
        out.push_back(BrauerDiagram::from_edges(n, std::move(edges)));
        return;
    }
    for (int q = first + 1; q < 2 * n; ++q) {
        if (partner[q] >= 0) continue;
        partner[first] = q;
        partner[q] = first;
        enumerate_matchings(n, partner, out);
        partner[first] = -1;
        partner[q] = -1;
    }
}

} // namespace

std::vector<BrauerDiagram> all_diagrams(int n) {
    std::vector<BrauerDiagram> out;
    std::vector<int> partner(2 * n, -1);
    enumerate_matchings(n, partner, out);
    return out;
}

} // namespace brauer
