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

#ifndef BRAUER_DIAGRAM_HPP
#define BRAUER_DIAGRAM_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

/// Perfect matching on 2n points arranged in two rows of n.
///
/// Points are encoded 0..2n-1: top row i -> i, bottom row i -> n+i
/// (0-based internally; external labels are T1..Tn / B1..Bn).  Canonical
/// storage: each pair (min, max) — which puts top before bottom and smaller
/// index first within a row — and the pair list sorted lexicographically.
/// Structural equality is diagram equality.
class BrauerDiagram {
  public:
    using Edge = std::pair<int, int>;

    static BrauerDiagram identity(int n);
    /// Validates the matching and canonicalizes.
    static BrauerDiagram from_edges(int n, std::vector<Edge> edges);

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_top(int point) const { return point < n_; }
    /// Partner of a point under the matching.
    int partner(int point) const;

    /// True when every edge runs top-to-bottom.
    bool is_permutation() const;
    /// For a permutation diagram: perm[i] = j when Ti is joined to Bj (0-based).
    std::vector<int> to_permutation() const;
    bool has_horizontal_edge() const { return !is_permutation(); }

    /// Top/bottom flip (the anti-automorphism fixing the generators).
    BrauerDiagram transposed() const;

    /// Same diagram on n+1 strands with a vertical strand appended.
    BrauerDiagram embedded(int new_n) const;

    auto operator<=>(const BrauerDiagram&) const = default;

    std::string to_string() const;

  private:
    BrauerDiagram(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Stacks d1 above d2, traces paths through the glued middle row and returns
/// the number of closed middle loops together with the loop-free product
/// diagram.  The algebra product is omega^loops times that diagram.
std::pair<int, BrauerDiagram> diagram_mul(const BrauerDiagram& d1, const BrauerDiagram& d2);

/// Generator diagrams: s_i crosses strands i, i+1; eps_i joins (Ti, Ti+1) and
/// (Bi, Bi+1).  1-based i with 1 <= i <= n-1.
BrauerDiagram gen_s(int i, int n);
BrauerDiagram gen_eps(int i, int n);

/// Distinguished two-index elements (1-based, i != j, symmetric in i and j):
/// s_ij is the (i j) transposition diagram; eps_ij joins (Ti, Tj) and (Bi, Bj).
BrauerDiagram s_ij(int i, int j, int n);
BrauerDiagram eps_ij(int i, int j, int n);

/// Permutation diagram for perm (0-based, Ti joined to B_{perm[i]}).
BrauerDiagram permutation_diagram(const std::vector<int>& perm);

/// d factored as pi1 . (eps_1 eps_3 ... eps_{2f-1}) . pi2 with no loops; the
/// permutations are 0-based one-line arrays.  f is the number of horizontal
/// edge pairs.
struct DiagramNormalForm {
    std::vector<int> pi1;
    std::vector<int> pi2;
    int f = 0;
};
DiagramNormalForm normal_form(const BrauerDiagram& d);

int permutation_parity(const std::vector<int>& perm);

/// All n-diagrams (used by tests; count is (2n-1)!!).
std::vector<BrauerDiagram> all_diagrams(int n);

} // namespace brauer

#endif
