#include "support/corpus.hpp"

namespace lpkit::testkit {

Scalar random_element(const FieldPtr& field, Rng& rng) {
  switch (field->kind()) {
    case FieldKind::Rationals:
      return field->from_int(static_cast<long long>(rng() % 41) - 20);
    case FieldKind::QuadraticExt: {
      const long long a = static_cast<long long>(rng() % 21) - 10;
      const long long b = static_cast<long long>(rng() % 21) - 10;
      return field->quadratic_element(BigRat(a), BigRat(b));
    }
    case FieldKind::FiniteField: {
      const BigInt idx = BigInt(rng()) % field->order();
      return field->element_at(idx);
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

Scalar random_nonzero(const FieldPtr& field, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Scalar s = random_element(field, rng);
    if (!s.is_zero()) return s;
  }
  fail(ErrorKind::Internal, "could not draw a nonzero element");
}

namespace {

std::optional<std::vector<Scalar>> draw_eigenvalues(const FieldPtr& field, int d,
                                                    const Scalar& beta, Rng& rng) {
  std::vector<Scalar> diffs{random_nonzero(field, rng), random_nonzero(field, rng)};
  for (int i = 2; i < d; ++i)
    diffs.push_back(beta * diffs[i - 1] - diffs[i - 2]);
  std::vector<Scalar> theta{random_element(field, rng)};
  for (int i = 0; i < d; ++i) theta.push_back(theta.back() - diffs[i]);
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (theta[i] == theta[j]) return std::nullopt;
  return theta;
}

}  // namespace

std::optional<ParameterArray> try_make_array(const FieldPtr& field, int d,
                                             const Scalar& beta, Rng& rng) {
  auto theta = draw_eigenvalues(field, d, beta, rng);
  if (!theta) return std::nullopt;
  auto theta_star = draw_eigenvalues(field, d, beta, rng);
  if (!theta_star) return std::nullopt;
  for (int attempt = 0; attempt < 40; ++attempt) {
    const Scalar seed = random_nonzero(field, rng);
    try {
      return complete_from_seed(field, d, *theta, *theta_star, seed);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroParameter) throw;
    }
  }
  return std::nullopt;
}

ParameterArray make_array(const FieldPtr& field, int d, const Scalar& beta,
                          Rng& rng) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    if (auto pa = try_make_array(field, d, beta, rng)) return *pa;
  }
  fail(ErrorKind::Internal, "array generation exhausted its attempts");
}

Scalar pick_type_I_q(const FieldPtr& field, int d, Rng& rng) {
  if (field->kind() != FieldKind::FiniteField) {
    static const long long numerators[] = {2, 3, -2, -3, 5, -5, 7};
    const long long n = numerators[rng() % 7];
    return rng() % 2 ? field->from_int(n) : field->from_int(n).inverse();
  }
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const Scalar q = random_nonzero(field, rng);
    bool ok = true;
    for (int i = 1; i <= d && ok; ++i)
      if (pow(q, i).is_one()) ok = false;
    if (ok) return q;
  }
  fail(ErrorKind::Internal, "no q of large enough order found");
}

ParameterArray make_type_iv_array(const FieldPtr& field, Rng& rng) {
  internal_check(field->characteristic() == 2, "type IV needs characteristic 2");
  auto draw = [&]() -> std::optional<std::vector<Scalar>> {
    const Scalar t0 = random_element(field, rng);
    const Scalar t1 = random_element(field, rng);
    const Scalar t2 = random_element(field, rng);
    const Scalar t3 = t1 + t2 - t0;  // common ratio 1: theta_0-theta_3 = theta_1-theta_2
    std::vector<Scalar> theta{t0, t1, t2, t3};
    for (int i = 0; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        if (theta[i] == theta[j]) return std::nullopt;
    return theta;
  };
  for (int attempt = 0; attempt < 4000; ++attempt) {
    auto theta = draw();
    auto theta_star = draw();
    if (!theta || !theta_star) continue;
    const Scalar seed = random_nonzero(field, rng);
    try {
      return complete_from_seed(field, 3, *theta, *theta_star, seed);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroParameter) throw;
    }
  }
  fail(ErrorKind::Internal, "type IV generation exhausted its attempts");
}

ParameterArray k3() {
  const FieldPtr q = Field::rationals();
  auto seq = [&](std::initializer_list<long long> values) {
    std::vector<Scalar> out;
    for (long long v : values) out.push_back(q->from_int(v));
    return out;
  };
  ParameterArray pa{q, 3, seq({3, 1, -1, -3}), seq({3, 1, -1, -3}),
                    seq({-6, -8, -6}), seq({6, 8, 6})};
  return pa;
}

ParameterArray gf13_degenerate() {
  const FieldPtr f = Field::finite(13, 1);
  std::vector<Scalar> theta;
  for (long long v : {1, 5, 12, 8}) theta.push_back(f->from_int(v));
  return complete_from_seed(f, 3, theta, theta, f->one());
}

ParameterArray gf16_type_iv() {
  Rng rng(kCorpusSeed ^ 0x16);
  return make_type_iv_array(Field::finite(2, 4), rng);
}

const std::vector<ParameterArray>& standard_corpus() {
  static const std::vector<ParameterArray> corpus = [] {
    Rng rng(kCorpusSeed);
    std::vector<ParameterArray> out;
    const std::vector<FieldPtr> fields = {Field::rationals(), Field::finite(13, 1),
                                          Field::finite(101, 1)};
    for (const FieldPtr& field : fields) {
      for (int d = 3; d <= 8; ++d) {
        for (int rep = 0; rep < 3; ++rep) {
          out.push_back(make_array(field, d, field->from_int(2), rng));   // II
          out.push_back(make_array(field, d, field->from_int(-2), rng));  // III+-
          for (int variant = 0; variant < 2; ++variant) {                 // I
            const Scalar q = pick_type_I_q(field, d, rng);
            out.push_back(make_array(field, d, q + q.inverse(), rng));
          }
        }
      }
    }
    // the degenerate type I showcases and a quadratic-extension array
    out.push_back(gf13_degenerate());
    {
      const FieldPtr gf101 = Field::finite(101, 1);
      const Scalar q = gf101->from_int(10);  // 10^2 = -1 mod 101
      out.push_back(make_array(gf101, 3, q + q.inverse(), rng));
    }
    {
      const FieldPtr qs5 = Field::quadratic(5);
      const Scalar q = qs5->quadratic_element(BigRat(3, 2), BigRat(1, 2));
      out.push_back(make_array(qs5, 4, q + q.inverse(), rng));
    }
    return out;
  }();
  return corpus;
}

}  // namespace lpkit::testkit
