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

#include "brauer/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brauer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw usage_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw usage_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Box& b) const {
    return b.row >= 1 && b.row <= rows() && b.col >= 1 && b.col <= parts_[b.row - 1];
}

std::vector<Box> Partition::addable_boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= rows(); ++r) {
        int len = parts_[r - 1];
        if (r == 1 || parts_[r - 2] > len) out.push_back({r, len + 1});
    }
    out.push_back({rows() + 1, 1});
    return out;
}

std::vector<Box> Partition::removable_boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= rows(); ++r) {
        int len = parts_[r - 1];
        if (r == rows() || parts_[r] < len) out.push_back({r, len});
    }
    return out;
}

Partition Partition::with_box_added(const Box& b) const {
    std::vector<int> p = parts_;
    if (b.row == rows() + 1) {
        if (b.col != 1) throw usage_error("Partition: box not addable");
        p.push_back(1);
    } else {
        if (b.row < 1 || b.row > rows() || b.col != parts_[b.row - 1] + 1)
            throw usage_error("Partition: box not addable");
        ++p[b.row - 1];
    }
    return Partition(p);
}

Partition Partition::with_box_removed(const Box& b) const {
    if (b.row < 1 || b.row > rows() || b.col != parts_[b.row - 1])
        throw usage_error("Partition: box not removable");
    std::vector<int> p = parts_;
    --p[b.row - 1];
    if (p[b.row - 1] == 0) p.erase(p.begin() + (b.row - 1));
    return Partition(p);
}

std::optional<std::pair<Box, bool>> Partition::one_box_step_to(const Partition& to) const {
    for (const Box& b : addable_boxes())
        if (with_box_added(b) == to) return std::make_pair(b, false);
    for (const Box& b : removable_boxes())
        if (with_box_removed(b) == to) return std::make_pair(b, true);
    return std::nullopt;
}

int Partition::hook_length(const Box& b) const {
    if (!contains(b)) throw usage_error("Partition: box outside diagram");
    int arm = parts_[b.row - 1] - b.col;
    int leg = 0;
    for (int r = b.row + 1; r <= rows(); ++r)
        if (parts_[r - 1] >= b.col) ++leg;
    return arm + leg + 1;
}

Rat Partition::hook_product() const {
    Rat h(1);
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c) h *= hook_length({r, c});
    return h;
}

OmegaRatFunc Partition::content_polynomial(const OmegaRatFunc& z) const {
    OmegaRatFunc out(Rat(1));
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c) out *= z + OmegaRatFunc(Rat(c - r));
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw usage_error("Partition::parse: expected bracketed list, got '" + s + "'");
    std::vector<int> parts;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw usage_error("Partition::parse: bad part '" + tok + "'");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

UpdownTableau::UpdownTableau(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
    if (shapes_.empty()) throw usage_error("UpdownTableau: empty sequence");
    if (shapes_[0] != Partition({1}))
        throw usage_error("UpdownTableau: first shape must be [1]");
    Partition prev;
    for (const auto& s : shapes_) {
        if (!prev.one_box_step_to(s))
            throw usage_error("UpdownTableau: consecutive shapes must differ by one box");
        prev = s;
    }
}

UpdownTableau UpdownTableau::prefix(int len) const {
    if (len < 1 || len > length()) throw usage_error("UpdownTableau::prefix: bad length");
    return UpdownTableau(std::vector<Partition>(shapes_.begin(), shapes_.begin() + len));
}

UpdownTableau::Step UpdownTableau::step(int r) const {
    if (r < 1 || r > length()) throw usage_error("UpdownTableau::step: index out of range");
    const Partition prev = (r == 1) ? Partition() : shapes_[r - 2];
    auto st = prev.one_box_step_to(shapes_[r - 1]);
    return Step{st->first, st->second};
}

bool UpdownTableau::is_standard() const {
    for (int r = 1; r <= length(); ++r)
        if (step(r).removed) return false;
    return true;
}

std::string UpdownTableau::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < shapes_.size(); ++i) {
        if (i) out += ";";
        out += shapes_[i].to_string();
    }
    return out;
}

UpdownTableau UpdownTableau::parse(const std::string& s) {
    std::vector<Partition> shapes;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ';')) shapes.push_back(Partition::parse(tok));
    return UpdownTableau(std::move(shapes));
}

namespace {

void enumerate_rec(int n, std::vector<Partition>& prefix,
                   const std::optional<Partition>& shape,
                   std::vector<UpdownTableau>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        if (!shape || prefix.back() == *shape) out.emplace_back(prefix);
        return;
    }
    const Partition& cur = prefix.back();
    // Feasibility: remaining steps must be able to reach the target weight.
    if (shape) {
        int remaining = n - static_cast<int>(prefix.size());
        int diff = std::abs(shape->weight() - cur.weight());
        if (diff > remaining || (remaining - diff) % 2 != 0) return;
    }
    for (const Box& b : cur.addable_boxes()) {
        prefix.push_back(cur.with_box_added(b));
        enumerate_rec(n, prefix, shape, out);
        prefix.pop_back();
    }
    for (const Box& b : cur.removable_boxes()) {
        prefix.push_back(cur.with_box_removed(b));
        enumerate_rec(n, prefix, shape, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<UpdownTableau> enumerate_updown(int n, const std::optional<Partition>& shape) {
    if (n < 1) throw usage_error("enumerate_updown: n must be positive");
    std::vector<UpdownTableau> out;
    if (shape) {
        int diff = std::abs(shape->weight() - n);
        if (diff % 2 != 0 || shape->weight() > n) return out;
    }
    std::vector<Partition> prefix{Partition({1})};
    enumerate_rec(n, prefix, shape, out);
    return out;
}

std::vector<OmegaRatFunc> contents(const UpdownTableau& t) {
    std::vector<OmegaRatFunc> cs;
    cs.reserve(t.length());
    for (int r = 1; r <= t.length(); ++r) {
        auto st = t.step(r);
        cs.push_back(content_value(st.box.diagonal(), st.removed));
    }
    return cs;
}

std::vector<OmegaRatFunc> branching_contents(const Partition& mu, const Box& exclude,
                                             bool exclude_removed) {
    bool valid = false;
    if (exclude_removed) {
        auto rem = mu.removable_boxes();
        valid = std::find(rem.begin(), rem.end(), exclude) != rem.end();
    } else {
        auto add = mu.addable_boxes();
        valid = std::find(add.begin(), add.end(), exclude) != add.end();
    }
    if (!valid) throw usage_error("branching_contents: excluded box not addable/removable");

    std::vector<OmegaRatFunc> out;
    for (const Box& b : mu.addable_boxes())
        if (exclude_removed || b != exclude) out.push_back(content_value(b.diagonal(), false));
    for (const Box& b : mu.removable_boxes())
        if (!exclude_removed || b != exclude) out.push_back(content_value(b.diagonal(), true));
    return out;
}

int DiagonalStats::d_at(int k) const {
    auto it = d.find(k);
    return it == d.end() ? 0 : it->second;
}

int DiagonalStats::dprime_at(int k) const {
    auto it = dprime.find(k);
    return it == dprime.end() ? 0 : it->second;
}

int DiagonalStats::g(int k) const {
    return (k == 0 ? 1 : 0) + d_at(k - 1) + d_at(k + 1) - 2 * d_at(k);
}

int DiagonalStats::gprime(int k) const {
    return dprime_at(k - 1) + dprime_at(k + 1) - 2 * dprime_at(k);
}

std::vector<int> DiagonalStats::support() const {
    int lo = 0, hi = 0;
    for (const auto& [k, v] : d) {
        (void)v;
        lo = std::min(lo, k - 1);
        hi = std::max(hi, k + 1);
    }
    for (const auto& [k, v] : dprime) {
        (void)v;
        lo = std::min(lo, k - 1);
        hi = std::max(hi, k + 1);
    }
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

DiagonalStats diagonal_stats(const UpdownTableau& prefix) {
    DiagonalStats st;
    for (int r = 1; r <= prefix.length(); ++r) {
        auto s = prefix.step(r);
        (s.removed ? st.dprime : st.d)[s.box.diagonal()] += 1;
    }
    return st;
}

std::vector<int> exponents(const UpdownTableau& t) {
    std::vector<int> ps;
    ps.reserve(t.length());
    ps.push_back(0);
    for (int r = 2; r <= t.length(); ++r) {
        DiagonalStats st = diagonal_stats(t.prefix(r - 1));
        auto s = t.step(r);
        int k = s.box.diagonal();
        ps.push_back(1 - (s.removed ? st.gprime(k) : st.g(k)));
    }
    return ps;
}

namespace {

// psi(U, T) for one step; removal_numerator_omega_coeff selects between the
// removal prefactors (4k + 6*omega - 4) and (4k + 3*omega - 4), both over
// (2k + omega - 2).
OmegaRatFunc psi_step(const DiagonalStats& st, const UpdownTableau::Step& s,
                      long removal_numerator_omega_coeff) {
    const int kn = s.box.diagonal();
    const OmegaRatFunc w = OmegaRatFunc::omega();
    OmegaRatFunc out;
    if (!s.removed) {
        out = (OmegaRatFunc(Rat(4 * kn)) + w) / (OmegaRatFunc(Rat(2 * kn)) + w);
        for (int k : st.support()) {
            if (k != kn) {
                int e = st.g(k);
                if (e != 0) out *= OmegaRatFunc(Rat(kn - k)).pow(e);
            }
            int ep = st.gprime(k);
            if (ep != 0) out *= (OmegaRatFunc(Rat(kn + k - 1)) + w).pow(ep);
        }
    } else {
        out = (OmegaRatFunc(Rat(4 * kn - 4)) +
               OmegaRatFunc(Rat(removal_numerator_omega_coeff)) * w) /
              (OmegaRatFunc(Rat(2 * kn - 2)) + w);
        for (int k : st.support()) {
            if (k != kn) {
                int ep = st.gprime(k);
                if (ep != 0) out *= OmegaRatFunc(Rat(k - kn)).pow(ep);
            }
            int e = st.g(k);
            if (e != 0) out *= (OmegaRatFunc(Rat(1 - kn - k)) - w).pow(e);
        }
    }
    return out;
}

OmegaRatFunc h_constant_impl(const UpdownTableau& t, long removal_coeff) {
    OmegaRatFunc h(Rat(1));
    for (int r = 2; r <= t.length(); ++r)
        h *= psi_step(diagonal_stats(t.prefix(r - 1)), t.step(r), removal_coeff);
    return h;
}

} // namespace

OmegaRatFunc h_constant(const UpdownTableau& t) { return h_constant_impl(t, 6); }

OmegaRatFunc h_constant_empirical(const UpdownTableau& t) { return h_constant_impl(t, 3); }

TableauStats tableau_stats(const UpdownTableau& t) {
    return TableauStats{contents(t), exponents(t), h_constant(t), h_constant_empirical(t)};
}

} // namespace brauer
