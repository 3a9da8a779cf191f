#include "lpkit/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace lpkit {

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients, reduced mod p

BigInt mod_reduce(const BigInt& v, const BigInt& p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& p) {
  // extended Euclid; a must be nonzero mod p
  BigInt r0 = p, r1 = mod_reduce(a, p);
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) fail(ErrorKind::DivisionByZero, "no inverse mod p");
  return mod_reduce(t0, p);
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  // deterministic Miller-Rabin for n < 3.3e24 with the fixed base set
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (int base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    BigInt x = boost::multiprecision::powm(BigInt(base), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b, const BigInt& p) {
  Poly r(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod_reduce(r[i] - b[i], p);
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const BigInt& p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = mod_reduce(c, p);
  poly_trim(r);
  return r;
}

// remainder of a modulo b (b nonzero)
Poly poly_rem(Poly a, const Poly& b, const BigInt& p) {
  poly_trim(a);
  const int db = poly_deg(b);
  internal_check(db >= 0, "poly_rem by zero polynomial");
  const BigInt lead_inv = mod_inverse(b.back(), p);
  while (poly_deg(a) >= db) {
    const int shift = poly_deg(a) - db;
    BigInt factor = mod_reduce(a.back() * lead_inv, p);
    for (int i = 0; i <= db; ++i)
      a[i + shift] = mod_reduce(a[i + shift] - factor * b[i], p);
    poly_trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, const BigInt& p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    BigInt inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = mod_reduce(c * inv, p);
  }
  return a;
}

Poly poly_powmod(Poly base, const BigInt& e, const Poly& f, const BigInt& p) {
  Poly result{BigInt(1)};
  base = poly_rem(std::move(base), f, p);
  if (e == 0) return result;
  const int top = static_cast<int>(boost::multiprecision::msb(e));
  for (int bit = top; bit >= 0; --bit) {
    result = poly_rem(poly_mul(result, result, p), f, p);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit)))
      result = poly_rem(poly_mul(result, base, p), f, p);
  }
  return result;
}

// Rabin's test: f monic of degree k is irreducible over GF(p) iff
// x^(p^k) = x (mod f) and gcd(x^(p^(k/r)) - x, f) = 1 for every prime r | k.
bool poly_irreducible(const Poly& f, const BigInt& p) {
  const int k = poly_deg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  std::vector<int> proper;  // k/r for prime r | k, with k <= 8
  for (int r : {2, 3, 5, 7})
    if (k % r == 0) proper.push_back(k / r);

  const Poly x{BigInt(0), BigInt(1)};
  Poly h = x;  // h = x^(p^j) mod f after j steps
  for (int j = 1; j <= k; ++j) {
    h = poly_powmod(h, p, f, p);
    if (std::find(proper.begin(), proper.end(), j) != proper.end()) {
      Poly g = poly_gcd(poly_sub(h, x, p), f, p);
      if (poly_deg(g) != 0) return false;
    }
  }
  return poly_sub(h, x, p).empty();
}

std::vector<BigInt> digits_base_p(BigInt n, const BigInt& p, int count) {
  std::vector<BigInt> out(count, BigInt(0));
  for (int i = 0; i < count && n != 0; ++i) {
    out[i] = n % p;
    n /= p;
  }
  return out;
}

std::optional<BigRat> rational_sqrt(const BigRat& x) {
  if (x < 0) return std::nullopt;
  const BigInt num = numerator(x), den = denominator(x);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return make_rat(sn, sd);
}

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(const std::string& s) {
  if (!valid_integer_text(s)) fail(ErrorKind::ParseError, "bad integer '" + s + "'");
  return BigInt(s);
}

BigRat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(parse_integer(s));
  BigInt num = parse_integer(s.substr(0, slash));
  BigInt den = parse_integer(s.substr(slash + 1));
  return make_rat(std::move(num), std::move(den));
}

std::string format_rational(const BigRat& v) {
  std::string out = numerator(v).str();
  if (denominator(v) != 1) out += "/" + denominator(v).str();
  return out;
}

}  // namespace

BigRat make_rat(BigInt num, BigInt den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigRat(num, den);
}

FieldPtr Field::rationals() {
  auto f = std::shared_ptr<Field>(new Field);
  f->kind_ = FieldKind::Rationals;
  return f;
}

FieldPtr Field::quadratic(const BigInt& d) {
  if (d == 0 || d == 1) fail(ErrorKind::ParseError, "radicand must not be 0 or 1");
  if (d > 1) {
    BigInt r = boost::multiprecision::sqrt(d);
    if (r * r == d) fail(ErrorKind::ParseError, "radicand is a perfect square");
  }
  auto f = std::shared_ptr<Field>(new Field);
  f->kind_ = FieldKind::QuadraticExt;
  f->radicand_ = d;
  return f;
}

FieldPtr Field::finite(const BigInt& p, int k) {
  if (!is_prime(p)) fail(ErrorKind::ParseError, "p is not prime");
  if (k < 1 || k > 8) fail(ErrorKind::ParseError, "extension degree must be in [1,8]");
  // least monic irreducible of degree k in coefficient-encoding order
  BigInt limit = boost::multiprecision::pow(p, static_cast<unsigned>(k));
  for (BigInt n = 0; n < limit; ++n) {
    Poly f = digits_base_p(n, p, k);
    f.push_back(BigInt(1));
    if (poly_irreducible(f, p)) return finite(p, k, f);
  }
  fail(ErrorKind::Internal, "no irreducible modulus found");
}

FieldPtr Field::finite(const BigInt& p, int k, std::vector<BigInt> modulus) {
  if (!is_prime(p)) fail(ErrorKind::ParseError, "p is not prime");
  if (k < 1 || k > 8) fail(ErrorKind::ParseError, "extension degree must be in [1,8]");
  if (modulus.size() != static_cast<size_t>(k) + 1)
    fail(ErrorKind::ParseError, "modulus must have k+1 coefficients");
  for (auto& c : modulus) c = mod_reduce(c, p);
  if (modulus.back() != 1) fail(ErrorKind::ParseError, "modulus must be monic");
  if (!poly_irreducible(modulus, p))
    fail(ErrorKind::ParseError, "modulus is not irreducible over GF(p)");
  auto f = std::shared_ptr<Field>(new Field);
  f->kind_ = FieldKind::FiniteField;
  f->p_ = p;
  f->k_ = k;
  f->modulus_ = std::move(modulus);
  return f;
}

BigInt Field::characteristic() const {
  return kind_ == FieldKind::FiniteField ? p_ : BigInt(0);
}

const BigInt& Field::radicand() const {
  internal_check(kind_ == FieldKind::QuadraticExt, "radicand on non-quadratic field");
  return radicand_;
}

const BigInt& Field::prime() const {
  internal_check(kind_ == FieldKind::FiniteField, "prime on non-finite field");
  return p_;
}

int Field::extension_degree() const {
  internal_check(kind_ == FieldKind::FiniteField, "degree on non-finite field");
  return k_;
}

const std::vector<BigInt>& Field::modulus() const {
  internal_check(kind_ == FieldKind::FiniteField, "modulus on non-finite field");
  return modulus_;
}

BigInt Field::order() const {
  internal_check(kind_ == FieldKind::FiniteField, "order on non-finite field");
  return boost::multiprecision::pow(p_, static_cast<unsigned>(k_));
}

bool Field::same(const Field& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case FieldKind::Rationals: return true;
    case FieldKind::QuadraticExt: return radicand_ == other.radicand_;
    case FieldKind::FiniteField:
      return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }
  return false;
}

Scalar Field::zero() const { return from_integer(BigInt(0)); }
Scalar Field::one() const { return from_integer(BigInt(1)); }

Scalar Field::from_int(long long v) const { return from_integer(BigInt(v)); }

Scalar Field::from_integer(const BigInt& v) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Scalar(shared_from_this(), BigRat(v));
    case FieldKind::QuadraticExt:
      return Scalar(shared_from_this(), Scalar::QuadVal{BigRat(v), BigRat(0)});
    case FieldKind::FiniteField: {
      std::vector<BigInt> c(k_, BigInt(0));
      c[0] = mod_reduce(v, p_);
      return Scalar(shared_from_this(), Scalar::GfVal{std::move(c)});
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

Scalar Field::from_rational(const BigRat& v) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Scalar(shared_from_this(), v);
    case FieldKind::QuadraticExt:
      return Scalar(shared_from_this(), Scalar::QuadVal{v, BigRat(0)});
    case FieldKind::FiniteField:
      fail(ErrorKind::FieldMismatch, "rational literal in a finite field");
  }
  fail(ErrorKind::Internal, "bad field kind");
}

Scalar Field::quadratic_element(BigRat a, BigRat b) const {
  internal_check(kind_ == FieldKind::QuadraticExt, "quadratic element of non-quadratic field");
  return Scalar(shared_from_this(), Scalar::QuadVal{std::move(a), std::move(b)});
}

Scalar Field::gf_from_coeffs(std::vector<BigInt> coeffs) const {
  internal_check(kind_ == FieldKind::FiniteField, "gf element of non-finite field");
  if (coeffs.size() != static_cast<size_t>(k_))
    fail(ErrorKind::ParseError, "expected exactly k coefficients");
  for (auto& c : coeffs) c = mod_reduce(c, p_);
  return Scalar(shared_from_this(), Scalar::GfVal{std::move(coeffs)});
}

Scalar Field::element_at(const BigInt& index) const {
  internal_check(kind_ == FieldKind::FiniteField, "element_at of non-finite field");
  internal_check(index >= 0 && index < order(), "element index out of range");
  return Scalar(shared_from_this(), Scalar::GfVal{digits_base_p(index, p_, k_)});
}

// ---------------------------------------------------------------------------
// Scalar arithmetic

namespace {

void require_same_field(const Scalar& x, const Scalar& y) {
  if (!x.field()->same(*y.field()))
    fail(ErrorKind::FieldMismatch, "operands live in different fields");
}

const BigRat& as_rat(const Scalar& x) { return std::get<BigRat>(x.rep()); }
const Scalar::QuadVal& as_quad(const Scalar& x) { return std::get<Scalar::QuadVal>(x.rep()); }
const Scalar::GfVal& as_gf(const Scalar& x) { return std::get<Scalar::GfVal>(x.rep()); }

}  // namespace

bool Scalar::is_zero() const {
  switch (field_->kind()) {
    case FieldKind::Rationals: return as_rat(*this) == 0;
    case FieldKind::QuadraticExt: {
      const auto& q = as_quad(*this);
      return q.a == 0 && q.b == 0;
    }
    case FieldKind::FiniteField: {
      const auto& c = as_gf(*this).c;
      return std::all_of(c.begin(), c.end(), [](const BigInt& v) { return v == 0; });
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == field_->one(); }

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(*this, o);
  return rep_ == o.rep_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(*this, o);
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return Scalar(field_, as_rat(*this) + as_rat(o));
    case FieldKind::QuadraticExt: {
      const auto &x = as_quad(*this), &y = as_quad(o);
      return Scalar(field_, QuadVal{x.a + y.a, x.b + y.b});
    }
    case FieldKind::FiniteField: {
      const auto &x = as_gf(*this).c, &y = as_gf(o).c;
      std::vector<BigInt> c(x.size());
      for (size_t i = 0; i < x.size(); ++i) {
        c[i] = x[i] + y[i];
        if (c[i] >= field_->prime()) c[i] -= field_->prime();
      }
      return Scalar(field_, GfVal{std::move(c)});
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return Scalar(field_, -as_rat(*this));
    case FieldKind::QuadraticExt: {
      const auto& x = as_quad(*this);
      return Scalar(field_, QuadVal{-x.a, -x.b});
    }
    case FieldKind::FiniteField: {
      auto c = as_gf(*this).c;
      for (auto& v : c)
        if (v != 0) v = field_->prime() - v;
      return Scalar(field_, GfVal{std::move(c)});
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(*this, o);
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return Scalar(field_, as_rat(*this) * as_rat(o));
    case FieldKind::QuadraticExt: {
      const auto &x = as_quad(*this), &y = as_quad(o);
      const BigRat d(field_->radicand());
      return Scalar(field_, QuadVal{x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a});
    }
    case FieldKind::FiniteField: {
      const auto& p = field_->prime();
      Poly prod = poly_mul(as_gf(*this).c, as_gf(o).c, p);
      prod = poly_rem(std::move(prod), field_->modulus(), p);
      prod.resize(field_->extension_degree(), BigInt(0));
      return Scalar(field_, GfVal{std::move(prod)});
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return Scalar(field_, BigRat(1) / as_rat(*this));
    case FieldKind::QuadraticExt: {
      const auto& x = as_quad(*this);
      const BigRat d(field_->radicand());
      // norm a^2 - b^2 D is nonzero for nonzero elements since D is no square
      BigRat norm = x.a * x.a - x.b * x.b * d;
      internal_check(norm != 0, "vanishing norm in quadratic field");
      return Scalar(field_, QuadVal{x.a / norm, -x.b / norm});
    }
    case FieldKind::FiniteField: {
      const auto& p = field_->prime();
      const auto& f = field_->modulus();
      Poly r0 = f, r1 = as_gf(*this).c;
      poly_trim(r1);
      Poly t0, t1{BigInt(1)};
      while (!r1.empty()) {
        // one Euclid step: r0 = q*r1 + r
        Poly r = r0, q;
        const int db = poly_deg(r1);
        const BigInt lead_inv = mod_inverse(r1.back(), p);
        q.assign(std::max(poly_deg(r) - db + 1, 0), BigInt(0));
        while (poly_deg(r) >= db) {
          const int shift = poly_deg(r) - db;
          BigInt factor = mod_reduce(r.back() * lead_inv, p);
          q[shift] = factor;
          for (int i = 0; i <= db; ++i)
            r[i + shift] = mod_reduce(r[i + shift] - factor * r1[i], p);
          poly_trim(r);
        }
        Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
      }
      internal_check(poly_deg(r0) == 0, "gcd with irreducible modulus not constant");
      const BigInt unit_inv = mod_inverse(r0[0], p);
      for (auto& c : t0) c = mod_reduce(c * unit_inv, p);
      t0.resize(field_->extension_degree(), BigInt(0));
      return Scalar(field_, GfVal{std::move(t0)});
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(*this, o);
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  return *this * o.inverse();
}

int Scalar::compare(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  switch (x.field()->kind()) {
    case FieldKind::Rationals: {
      const auto &a = as_rat(x), &b = as_rat(y);
      return a < b ? -1 : (a == b ? 0 : 1);
    }
    case FieldKind::QuadraticExt: {
      const auto &a = as_quad(x), &b = as_quad(y);
      if (a.a != b.a) return a.a < b.a ? -1 : 1;
      if (a.b != b.b) return a.b < b.b ? -1 : 1;
      return 0;
    }
    case FieldKind::FiniteField: {
      const auto &a = as_gf(x).c, &b = as_gf(y).c;
      for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

Scalar pow(const Scalar& x, long long e) {
  if (e < 0) return pow(x.inverse(), -e);
  Scalar result = x.field()->one();
  Scalar base = x;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n != 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text codec

Scalar Field::parse(const std::string& text) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return from_rational(parse_rational(text));
    case FieldKind::QuadraticExt: {
      if (text.size() > 2 && text.compare(text.size() - 2, 2, "*r") == 0) {
        const std::string body = text.substr(0, text.size() - 2);
        // split at the sign that separates the a and b parts: the last '+'
        // or '-' preceded by a digit
        size_t split = std::string::npos;
        for (size_t i = body.size(); i-- > 1;) {
          if ((body[i] == '+' || body[i] == '-') &&
              std::isdigit(static_cast<unsigned char>(body[i - 1]))) {
            split = i;
            break;
          }
        }
        if (split == std::string::npos)
          fail(ErrorKind::ParseError, "bad quadratic element '" + text + "'");
        BigRat a = parse_rational(body.substr(0, split));
        BigRat b = parse_rational(body.substr(split + 1));
        if (body[split] == '-') b = -b;
        return quadratic_element(std::move(a), std::move(b));
      }
      return from_rational(parse_rational(text));
    }
    case FieldKind::FiniteField: {
      if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        fail(ErrorKind::ParseError, "bad GF element '" + text + "'");
      std::vector<BigInt> coeffs;
      std::string inner = text.substr(1, text.size() - 2);
      std::stringstream ss(inner);
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(parse_integer(item));
      if (coeffs.size() != static_cast<size_t>(k_))
        fail(ErrorKind::ParseError, "GF element needs exactly k coefficients");
      return gf_from_coeffs(std::move(coeffs));
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

std::string Field::format(const Scalar& x) const {
  internal_check(same(*x.field()), "formatting scalar of a different field");
  switch (kind_) {
    case FieldKind::Rationals:
      return format_rational(as_rat(x));
    case FieldKind::QuadraticExt: {
      const auto& q = as_quad(x);
      if (q.b == 0) return format_rational(q.a);
      std::string out = format_rational(q.a);
      out += (q.b > 0) ? "+" : "-";
      out += format_rational(q.b > 0 ? q.b : BigRat(-q.b));
      out += "*r";
      return out;
    }
    case FieldKind::FiniteField: {
      const auto& c = as_gf(x).c;
      std::string out = "[";
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].str();
      }
      out += "]";
      return out;
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

// ---------------------------------------------------------------------------
// Square roots and q + 1/q = beta

namespace {

Scalar fpow(const Scalar& x, const BigInt& e) {
  internal_check(e >= 0, "fpow needs a nonnegative exponent");
  Scalar result = x.field()->one();
  if (e == 0) return result;
  Scalar base = x;
  const int top = static_cast<int>(boost::multiprecision::msb(e));
  for (int bit = top; bit >= 0; --bit) {
    result = result * result;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit)))
      result = result * base;
  }
  return result;
}

// Tonelli-Shanks in the multiplicative group of GF(p^k), p odd.
std::optional<Scalar> sqrt_finite_odd(const Field& field, const Scalar& x) {
  const FieldPtr fp = x.field();
  if (x.is_zero()) return fp->zero();
  const BigInt m = field.order() - 1;  // group order, even
  const Scalar one = fp->one();
  const Scalar minus_one = -one;
  if (fpow(x, m / 2) != one) return std::nullopt;

  BigInt t = m;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  // least non-residue in canonical enumeration order (deterministic)
  Scalar z = one;
  for (BigInt idx = 2; ; ++idx) {
    z = fp->element_at(idx);
    if (fpow(z, m / 2) == minus_one) break;
    internal_check(idx < field.order(), "no quadratic non-residue found");
  }

  unsigned big_m = s;
  Scalar c = fpow(z, t);
  Scalar tv = fpow(x, t);
  Scalar r = fpow(x, (t + 1) / 2);
  while (tv != one) {
    Scalar probe = tv;
    unsigned i = 0;
    while (probe != one) {
      probe = probe * probe;
      ++i;
      internal_check(i < big_m, "Tonelli-Shanks failed to converge");
    }
    Scalar b = c;
    for (unsigned j = 0; j + i + 1 < big_m; ++j) b = b * b;
    big_m = i;
    c = b * b;
    tv = tv * c;
    r = r * b;
  }
  return r;
}

// absolute trace GF(2^k) -> GF(2)
Scalar trace_to_gf2(const Scalar& u) {
  Scalar acc = u;
  Scalar power = u;
  const int k = u.field()->extension_degree();
  for (int i = 1; i < k; ++i) {
    power = power * power;
    acc = acc + power;
  }
  return acc;
}

}  // namespace

std::optional<Scalar> Field::square_root(const Scalar& x) const {
  internal_check(same(*x.field()), "square_root of foreign scalar");
  switch (kind_) {
    case FieldKind::Rationals: {
      auto r = rational_sqrt(as_rat(x));
      if (!r) return std::nullopt;
      return from_rational(*r);
    }
    case FieldKind::QuadraticExt: {
      const auto& q = as_quad(x);
      const BigRat d(radicand_);
      if (q.b == 0) {
        if (auto r = rational_sqrt(q.a)) return quadratic_element(*r, BigRat(0));
        if (auto r = rational_sqrt(q.a / d)) return quadratic_element(BigRat(0), *r);
        return std::nullopt;
      }
      // (a + b r)^2 = q needs a^2 + b^2 D = q.a and 2ab = q.b
      auto s0 = rational_sqrt(q.a * q.a - q.b * q.b * d);
      if (!s0) return std::nullopt;
      for (int sign : {1, -1}) {
        BigRat t = (q.a + (sign > 0 ? *s0 : BigRat(-*s0))) / 2;
        auto a = rational_sqrt(t);
        if (a && *a != 0) {
          BigRat b = q.b / (2 * *a);
          Scalar root = quadratic_element(*a, std::move(b));
          internal_check(root * root == x, "quadratic square root check failed");
          return root;
        }
      }
      return std::nullopt;
    }
    case FieldKind::FiniteField: {
      if (p_ == 2) {
        // squaring is the Frobenius, a bijection: sqrt(x) = x^(2^(k-1))
        Scalar r = x;
        for (int i = 1; i < k_; ++i) r = r * r;
        internal_check(r * r == x, "char-2 square root check failed");
        return r;
      }
      return sqrt_finite_odd(*this, x);
    }
  }
  fail(ErrorKind::Internal, "bad field kind");
}

std::vector<Scalar> Field::solve_unit_quadratic(const Scalar& beta) const {
  internal_check(same(*beta.field()), "solve_unit_quadratic of foreign scalar");
  std::vector<Scalar> roots;

  if (characteristic() == 2) {
    const Scalar one_v = one();
    if (beta.is_zero()) {
      // q^2 + 1 = (q + 1)^2: the double root 1, reported once
      roots.push_back(one_v);
    } else {
      // substitute q = beta z: z^2 + z + 1/beta^2 = 0 (Artin-Schreier)
      const Scalar c = (beta * beta).inverse();
      if (!trace_to_gf2(c).is_zero()) return {};
      Scalar delta = one_v;
      for (BigInt idx = 1; ; ++idx) {
        delta = element_at(idx);
        if (trace_to_gf2(delta).is_one()) break;
        internal_check(idx < order(), "no trace-one element found");
      }
      // z = sum_i delta^(2^i) * (c + c^2 + ... + c^(2^(i-1)))
      Scalar z = zero();
      Scalar delta_pow = delta;  // delta^(2^i)
      Scalar partial = zero();   // sum_{j<i} c^(2^j)
      Scalar c_pow = c;          // c^(2^i)
      for (int i = 0; i < k_; ++i) {
        if (i > 0) {
          delta_pow = delta_pow * delta_pow;
          partial = partial + c_pow;
          c_pow = c_pow * c_pow;
        }
        z = z + delta_pow * partial;
      }
      roots.push_back(beta * z);
      roots.push_back(beta * z + beta);
    }
  } else {
    const Scalar two = from_int(2);
    const Scalar disc = beta * beta - from_int(4);
    if (disc.is_zero()) {
      roots.push_back(beta / two);
    } else if (auto s = square_root(disc)) {
      roots.push_back((beta + *s) / two);
      roots.push_back((beta - *s) / two);
    }
  }

  for (const Scalar& q : roots) {
    internal_check(q * q - beta * q + one() == zero(), "unit quadratic root check failed");
  }
  std::sort(roots.begin(), roots.end(),
            [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace lpkit
