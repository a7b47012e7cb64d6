// Copyright 2026 The mubgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace mubgame {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Sizes here never exceed a few hundred, so
/// everything is plain O(n^3) loops.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }
  /// |a><b|
  static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  ComplexVector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Complex> values);

  ComplexMatrix adjoint() const;
  /// Keeps only the diagonal.
  ComplexMatrix diagonal_part() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);
ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x);

/// <a|b>, conjugating the left argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> a);

/// Tensor product; (A kron B)(i*p + k, j*q + l) = A(i,j) B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |A - B| entrywise.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(A B) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// (A + A^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& a);

struct EigenResult {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are orthonormal eigenvectors
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Throws ContractViolation
/// for non-square input or when |M - M^dagger| exceeds 1e-9 (relative to max|M|).
EigenResult hermitian_eigen(const ComplexMatrix& m);

/// f applied to the spectrum: V diag(f(lambda)) V^dagger.
ComplexMatrix spectral_map(const EigenResult& eig, const std::function<double(double)>& f);

double max_eigenvalue(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);
/// All eigenvalues >= -tol (and Hermitian within tol).
bool is_psd(const ComplexMatrix& m, double tol = 1e-9);
bool is_density_operator(const ComplexMatrix& m, double tol = 1e-9);

/// PSD elements summing to the identity within tol. Throws on size mismatch.
bool is_povm(std::span<const ComplexMatrix> elements, double tol);
/// A POVM whose elements are also idempotent.
bool is_projective_povm(std::span<const ComplexMatrix> elements, double tol);

}  // namespace mubgame
