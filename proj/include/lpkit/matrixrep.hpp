#pragma once

#include <vector>

#include "lpkit/parray.hpp"

namespace lpkit {

/// Dense exact matrix over a field; just enough linear algebra for the
/// trace oracle (d <= 12).
struct Matrix {
  FieldPtr field;
  int n = 0;
  std::vector<Scalar> entries;  // row-major, n*n

  static Matrix zero(const FieldPtr& field, int n);
  static Matrix identity(const FieldPtr& field, int n);

  Scalar& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
  const Scalar& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * n + j];
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Scalar trace() const;
  bool operator==(const Matrix& o) const;
};

/// The split-basis realization of a parameter array: A lower bidiagonal with
/// diagonal theta_0..theta_d and subdiagonal 1, A* upper bidiagonal with
/// diagonal theta*_0..theta*_d and superdiagonal varphi_1..varphi_d.
struct MatrixModel {
  FieldPtr field;
  int n = 0;  // d+1
  Matrix a;
  Matrix a_star;
  ParameterArray source;
};

/// Primitive idempotents E_0..E_d of A and E*_0..E*_d of A*, built by
/// Lagrange interpolation at the eigenvalues.
struct IdempotentSet {
  std::vector<Matrix> e;
  std::vector<Matrix> e_star;
};

/// Requires a valid array with d <= 12.
MatrixModel build_split_model(const ParameterArray& pa);

IdempotentSet primitive_idempotents(const MatrixModel& m);

/// a_i = tr(A E*_i) and a*_i = tr(A* E_i).
std::pair<std::vector<Scalar>, std::vector<Scalar>> principal_sequences(
    const MatrixModel& m, const IdempotentSet& idem);

/// Recomputes varphi_i and phi_i from their defining trace ratios
///   varphi_i = (theta*_0-theta*_i) tr(E*_0 prod_{h<i}(A-theta_h))
///                                / tr(E*_0 prod_{h<i-1}(A-theta_h))
/// (phi_i with theta_{d-h} in the products) and returns the resulting array.
/// Throws ZeroDenominator if a trace denominator vanishes; the result is
/// checked to equal m.source exactly.
ParameterArray parray_from_traces(const MatrixModel& m);

}  // namespace lpkit
