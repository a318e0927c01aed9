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

#include "brauer/exact_matrix.hpp"

#include <algorithm>
#include <map>

namespace brauer {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(*this);
    for (auto& v : r.data_) v = -v;
    return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw usage_error("ExactMatrix: shape mismatch in +");
    ExactMatrix r(a);
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw usage_error("ExactMatrix: shape mismatch in -");
    ExactMatrix r(a);
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw usage_error("ExactMatrix: shape mismatch in *");
    ExactMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rat& bkj = b.at(k, j);
                if (bkj != 0) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const Rat& s) const {
    ExactMatrix r(*this);
    for (auto& v : r.data_) v *= s;
    return r;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l)
                    r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

Rat ExactMatrix::trace() const {
    Rat t(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

mpz_class ExactMatrix::max_abs_numerator() const {
    mpz_class m(0);
    for (const auto& v : data_) {
        mpz_class a = abs(v.get_num());
        if (a > m) m = a;
    }
    return m;
}

int ExactMatrix::rank() const {
    ExactMatrix m(*this);
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const Rat inv = rat_inv(m.at(rank, col));
        for (int i = rank + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw usage_error("ExactMatrix::inverse: not square");
    ExactMatrix m(*this), inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw pole_error("ExactMatrix::inverse: singular matrix");
        for (int j = 0; j < cols_; ++j) {
            std::swap(m.at(pivot, j), m.at(col, j));
            std::swap(inv.at(pivot, j), inv.at(col, j));
        }
        const Rat piv_inv = rat_inv(m.at(col, col));
        for (int j = 0; j < cols_; ++j) {
            m.at(col, j) *= piv_inv;
            inv.at(col, j) *= piv_inv;
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col);
            for (int j = 0; j < cols_; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RankFactorization rank_factorization(const ExactMatrix& e) {
    // Row-reduce a copy, remembering pivot columns; then B is the reduced
    // row-echelon form restricted to its nonzero rows and A the pivot columns
    // of E, so that E = A B exactly.
    ExactMatrix m(e);
    const int rows = e.rows(), cols = e.cols();
    std::vector<int> pivot_cols;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Rat inv = rat_inv(m.at(r, col));
        for (int j = 0; j < cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col);
            for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    RankFactorization out;
    out.rank = r;
    out.a = ExactMatrix(rows, r);
    out.b = ExactMatrix(r, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < r; ++k) out.a.at(i, k) = e.at(i, pivot_cols[k]);
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < cols; ++j) out.b.at(k, j) = m.at(k, j);
    return out;
}

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.row_data_[i].emplace_back(i, Rat(1));
    return m;
}

SparseMat SparseMat::from_dense(const ExactMatrix& m) {
    SparseMat s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) s.row_data_[i].emplace_back(j, m.at(i, j));
    return s;
}

void SparseMat::add_entry(int i, int j, const Rat& v) {
    if (v == 0) return;
    for (auto& [col, val] : row_data_[i]) {
        if (col == j) {
            val += v;
            if (val == 0) {
                auto& rd = row_data_[i];
                rd.erase(std::find_if(rd.begin(), rd.end(),
                                      [j](const auto& p) { return p.first == j; }));
            }
            return;
        }
    }
    row_data_[i].emplace_back(j, v);
    sort_row(i);
}

void SparseMat::sort_row(int i) {
    std::sort(row_data_[i].begin(), row_data_[i].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

std::size_t SparseMat::nnz() const {
    std::size_t n = 0;
    for (const auto& r : row_data_) n += r.size();
    return n;
}

SparseMat SparseMat::scaled(const Rat& s) const {
    if (s == 0) return SparseMat(rows_, cols_);
    SparseMat r(*this);
    for (auto& row : r.row_data_)
        for (auto& [c, v] : row) v *= s;
    return r;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw usage_error("SparseMat: shape mismatch in +");
    SparseMat r(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        std::map<int, Rat> acc;
        for (const auto& [c, v] : a.row_data_[i]) acc[c] += v;
        for (const auto& [c, v] : b.row_data_[i]) acc[c] += v;
        for (const auto& [c, v] : acc)
            if (v != 0) r.row_data_[i].emplace_back(c, v);
    }
    return r;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + b.scaled(Rat(-1)); }

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    if (a.cols_ != b.rows_) throw usage_error("SparseMat: shape mismatch in *");
    SparseMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        std::map<int, Rat> acc;
        for (const auto& [k, av] : a.row_data_[i])
            for (const auto& [j, bv] : b.row_data_[k]) acc[j] += av * bv;
        for (const auto& [j, v] : acc)
            if (v != 0) r.row_data_[i].emplace_back(j, v);
    }
    return r;
}

std::vector<Rat> SparseMat::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw usage_error("SparseMat::apply: size mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, a] : row_data_[i]) out[i] += a * v[j];
    return out;
}

std::vector<Rat> SparseMat::apply_left(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != rows_)
        throw usage_error("SparseMat::apply_left: size mismatch");
    std::vector<Rat> out(cols_, Rat(0));
    for (int i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (const auto& [j, a] : row_data_[i]) out[j] += v[i] * a;
    }
    return out;
}

ExactMatrix SparseMat::to_dense() const {
    ExactMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_data_[i]) m.at(i, j) = v;
    return m;
}

} // namespace brauer
