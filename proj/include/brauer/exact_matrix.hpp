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

#ifndef BRAUER_EXACT_MATRIX_HPP
#define BRAUER_EXACT_MATRIX_HPP

#include <utility>
#include <vector>

#include "brauer/rational.hpp"

namespace brauer {

/// Dense matrix of exact rationals.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    ExactMatrix operator-() const;
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix& operator+=(const ExactMatrix& o) { return *this = *this + o; }
    ExactMatrix& operator-=(const ExactMatrix& o) { return *this = *this - o; }
    ExactMatrix scaled(const Rat& s) const;
    ExactMatrix transposed() const;
    friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool is_zero() const;
    Rat trace() const;
    /// Largest |numerator| over all entries (exact-residual reporting).
    mpz_class max_abs_numerator() const;

    int rank() const;
    /// Inverse via Gauss-Jordan; singular matrix raises pole_error.
    ExactMatrix inverse() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// E = A * B with A the pivot columns of E and rank(A) = rank(E) = A.cols().
struct RankFactorization {
    ExactMatrix a;
    ExactMatrix b;
    int rank = 0;
};
RankFactorization rank_factorization(const ExactMatrix& e);

/// Row-sparse matrix of exact rationals, for the large tensor-space checks.
class SparseMat {
  public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_data_(rows) {}
    static SparseMat identity(int n);
    static SparseMat from_dense(const ExactMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<std::pair<int, Rat>>& row(int i) const { return row_data_[i]; }
    void add_entry(int i, int j, const Rat& v);
    std::size_t nnz() const;

    SparseMat scaled(const Rat& s) const;
    friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator*(const SparseMat& a, const SparseMat& b);

    std::vector<Rat> apply(const std::vector<Rat>& v) const;      // this * v
    std::vector<Rat> apply_left(const std::vector<Rat>& v) const; // v^T * this, returned as vector

    ExactMatrix to_dense() const;

  private:
    void sort_row(int i);
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<int, Rat>>> row_data_;
};

} // namespace brauer

#endif
