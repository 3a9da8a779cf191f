#include "lpkit/matrixrep.hpp"

namespace lpkit {

Matrix Matrix::zero(const FieldPtr& field, int n) {
  Matrix m{field, n, {}};
  m.entries.assign(static_cast<size_t>(n) * n, field->zero());
  return m;
}

Matrix Matrix::identity(const FieldPtr& field, int n) {
  Matrix m = zero(field, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  for (size_t i = 0; i < entries.size(); ++i) r.entries[i] = entries[i] + o.entries[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  for (size_t i = 0; i < entries.size(); ++i) r.entries[i] = entries[i] - o.entries[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix r = zero(field, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& e : r.entries) e = e * c;
  return r;
}

Scalar Matrix::trace() const {
  Scalar t = field->zero();
  for (int i = 0; i < n; ++i) t = t + at(i, i);
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  return n == o.n && entries == o.entries;
}

MatrixModel build_split_model(const ParameterArray& pa) {
  if (!validate(pa).valid) fail(ErrorKind::InvalidArray, "array fails validation");
  if (pa.d > 12)
    fail(ErrorKind::InvalidArray, "trace oracle supports d <= 12");
  const int n = pa.d + 1;
  MatrixModel m{pa.field, n, Matrix::zero(pa.field, n), Matrix::zero(pa.field, n), pa};
  for (int i = 0; i < n; ++i) {
    m.a.at(i, i) = pa.theta[i];
    m.a_star.at(i, i) = pa.theta_star[i];
  }
  for (int i = 1; i < n; ++i) {
    m.a.at(i, i - 1) = pa.field->one();
    m.a_star.at(i - 1, i) = pa.varphi[i - 1];
  }
  return m;
}

namespace {

std::vector<Matrix> lagrange_idempotents(const Matrix& op,
                                         const std::vector<Scalar>& eigenvalues) {
  const FieldPtr& field = op.field;
  const int n = op.n;
  const Matrix id = Matrix::identity(field, n);
  std::vector<Matrix> out;
  for (int i = 0; i < n; ++i) {
    Matrix prod = id;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      prod = prod * (op - id.scaled(eigenvalues[j]))
                        .scaled((eigenvalues[i] - eigenvalues[j]).inverse());
    }
    out.push_back(std::move(prod));
  }
  return out;
}

}  // namespace

IdempotentSet primitive_idempotents(const MatrixModel& m) {
  return {lagrange_idempotents(m.a, m.source.theta),
          lagrange_idempotents(m.a_star, m.source.theta_star)};
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> principal_sequences(
    const MatrixModel& m, const IdempotentSet& idem) {
  std::vector<Scalar> a, a_star;
  for (int i = 0; i < m.n; ++i) {
    a.push_back((m.a * idem.e_star[i]).trace());
    a_star.push_back((m.a_star * idem.e[i]).trace());
  }
  return {std::move(a), std::move(a_star)};
}

ParameterArray parray_from_traces(const MatrixModel& m) {
  const FieldPtr& field = m.field;
  const int d = m.n - 1;
  const Matrix id = Matrix::identity(field, m.n);
  const IdempotentSet idem = primitive_idempotents(m);
  const Matrix& e_star_0 = idem.e_star[0];

  // running products E*_0 prod_h (A - theta_h I); the i = 1 denominator is
  // the empty product, tr(E*_0) itself
  auto trace_sequence = [&](bool reversed) {
    std::vector<Scalar> traces{e_star_0.trace()};
    Matrix prod = e_star_0;
    for (int i = 1; i <= d; ++i) {
      const Scalar& eigenvalue = m.source.theta[reversed ? d - (i - 1) : i - 1];
      prod = prod * (m.a - id.scaled(eigenvalue));
      traces.push_back(prod.trace());
    }
    return traces;
  };

  const std::vector<Scalar> fwd = trace_sequence(false);
  const std::vector<Scalar> rev = trace_sequence(true);

  ParameterArray out;
  out.field = field;
  out.d = d;
  out.theta = m.source.theta;
  out.theta_star = m.source.theta_star;
  for (int i = 1; i <= d; ++i) {
    if (fwd[i - 1].is_zero() || rev[i - 1].is_zero())
      fail(ErrorKind::ZeroDenominator, "vanishing trace denominator");
    const Scalar off = out.theta_star[0] - out.theta_star[i];
    out.varphi.push_back(off * fwd[i] / fwd[i - 1]);
    out.phi.push_back(off * rev[i] / rev[i - 1]);
  }
  internal_check(out == m.source,
                 "trace oracle disagrees with the source array");
  return out;
}

}  // namespace lpkit
