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

#ifndef BRAUER_TABLEAU_HPP
#define BRAUER_TABLEAU_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer/omega_poly.hpp"

namespace brauer {

/// Box of a Young diagram, 1-based row and column; diagonal = col - row.
struct Box {
    int row = 0;
    int col = 0;
    int diagonal() const { return col - row; }
    auto operator<=>(const Box&) const = default;
};

/// Integer partition as a weakly decreasing list of positive parts
/// (empty = the empty diagram).
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool contains(const Box& b) const;

    std::vector<Box> addable_boxes() const;
    std::vector<Box> removable_boxes() const;
    Partition with_box_added(const Box& b) const;
    Partition with_box_removed(const Box& b) const;

    /// Box by which *this and other (differing by one box) differ; nullopt if
    /// they do not differ by exactly one box.
    std::optional<std::pair<Box, bool>> one_box_step_to(const Partition& to) const;

    int hook_length(const Box& b) const;
    /// Product of all hooks.
    Rat hook_product() const;
    /// C(z) = prod over boxes of (z + col - row).
    OmegaRatFunc content_polynomial(const OmegaRatFunc& z) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // "[2,1]", "[]"
    static Partition parse(const std::string& s);

  private:
    std::vector<int> parts_;
};

/// Sequence (L_1, ..., L_n) of partitions with L_1 = (1) and each L_r
/// differing from L_{r-1} by one box added or removed (L_0 = empty).
class UpdownTableau {
  public:
    explicit UpdownTableau(std::vector<Partition> shapes);

    int length() const { return static_cast<int>(shapes_.size()); }
    const std::vector<Partition>& shapes() const { return shapes_; }
    const Partition& shape() const { return shapes_.back(); }
    UpdownTableau prefix(int len) const;

    /// Step r (1-based): the box added or removed going L_{r-1} -> L_r.
    struct Step {
        Box box;
        bool removed = false;
    };
    Step step(int r) const;

    /// True when every step adds a box (then shape() is a partition of n).
    bool is_standard() const;

    auto operator<=>(const UpdownTableau&) const = default;

    std::string to_string() const;  // "[1];[1,1];[1]"
    static UpdownTableau parse(const std::string& s);

  private:
    std::vector<Partition> shapes_;
};

/// All updown tableaux of length n (optionally with final shape), in a fixed
/// deterministic order: depth-first, one-step successors ordered additions
/// before removals, each by increasing row.  An infeasible shape yields an
/// empty list.
std::vector<UpdownTableau> enumerate_updown(int n,
                                            const std::optional<Partition>& shape = std::nullopt);

/// Exact symbolic contents c_r = +-((omega-1)/2 + col - row).
std::vector<OmegaRatFunc> contents(const UpdownTableau& t);

/// Contents (with the +- sign rule) of every box != exclude that can be added
/// to or removed from mu; exclude itself must be addable or removable.
std::vector<OmegaRatFunc> branching_contents(const Partition& mu, const Box& exclude,
                                             bool exclude_removed);

/// Diagonal statistics of a tableau prefix: m_ij counts additions of box
/// (i,j) across the sequence, m'_ij removals; d_k / d'_k are the diagonal
/// sums, and g_k = delta_{k0} + d_{k-1} + d_{k+1} - 2 d_k,
/// g'_k = d'_{k-1} + d'_{k+1} - 2 d'_k.
struct DiagonalStats {
    std::map<int, int> d;
    std::map<int, int> dprime;
    int d_at(int k) const;
    int dprime_at(int k) const;
    int g(int k) const;
    int gprime(int k) const;
    /// Diagonals where some g or g' can be nonzero.
    std::vector<int> support() const;
};
DiagonalStats diagonal_stats(const UpdownTableau& prefix);

/// Regularization exponents p_1..p_n (p_1 = 0; p_r = 1 - g_{k}(prefix) on
/// addition at diagonal k, 1 - g'_{k}(prefix) on removal).
std::vector<int> exponents(const UpdownTableau& t);

/// Normalization constant h(T) = prod_r psi(prefix_r, step_r) with the
/// addition-step prefactor (4k+omega)/(2k+omega) and the removal-step
/// prefactor (4k+6omega-4)/(2k+omega-2).
OmegaRatFunc h_constant(const UpdownTableau& t);

/// Variant whose removal-step prefactor is (4k+3omega-4)/(2k+omega-2); this
/// is the one that matches the regularized product evaluations exactly (see
/// the fusion tests, which adjudicate between the two).  The two variants
/// agree on tableaux with no removal step.
OmegaRatFunc h_constant_empirical(const UpdownTableau& t);

/// Per-tableau derived data in one bundle.
struct TableauStats {
    std::vector<OmegaRatFunc> contents;
    std::vector<int> exponents;
    OmegaRatFunc h;            // printed-formula constant
    OmegaRatFunc h_empirical;  // evaluation-consistent variant
};
TableauStats tableau_stats(const UpdownTableau& t);

} // namespace brauer

#endif
