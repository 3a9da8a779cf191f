#include "lpkit/d4.hpp"

#include <algorithm>

namespace lpkit {

namespace {

// group element in normal form star^s down^a ddown^b
struct Element {
  bool s = false, a = false, b = false;

  // append one letter on the right, rewriting via
  //   (down)(star) = (star)(ddown),  (ddown)(star) = (star)(down)
  Element then(D4Letter letter) const {
    Element e = *this;
    switch (letter) {
      case D4Letter::Star:
        // moving the new star left past down^a ddown^b swaps the exponents
        e.s = !e.s;
        std::swap(e.a, e.b);
        break;
      case D4Letter::Down:
        e.a = !e.a;
        break;
      case D4Letter::DDown:
        e.b = !e.b;
        break;
    }
    return e;
  }

  D4Word word() const {
    D4Word w;
    if (s) w.push_back(D4Letter::Star);
    if (a) w.push_back(D4Letter::Down);
    if (b) w.push_back(D4Letter::DDown);
    return w;
  }
};

ParameterArray apply_letter(const ParameterArray& pa, D4Letter letter) {
  ParameterArray out;
  out.field = pa.field;
  out.d = pa.d;
  const int d = pa.d;
  switch (letter) {
    case D4Letter::Down:
      out.theta = pa.theta;
      for (int i = d; i >= 0; --i) out.theta_star.push_back(pa.theta_star[i]);
      for (int i = 1; i <= d; ++i) out.varphi.push_back(pa.phi[d - i]);
      for (int i = 1; i <= d; ++i) out.phi.push_back(pa.varphi[d - i]);
      break;
    case D4Letter::DDown:
      for (int i = d; i >= 0; --i) out.theta.push_back(pa.theta[i]);
      out.theta_star = pa.theta_star;
      out.varphi = pa.phi;
      out.phi = pa.varphi;
      break;
    case D4Letter::Star:
      out.theta = pa.theta_star;
      out.theta_star = pa.theta;
      out.varphi = pa.varphi;
      for (int i = 1; i <= d; ++i) out.phi.push_back(pa.phi[d - i]);
      break;
  }
  return out;
}

}  // namespace

D4Word parse_word(const std::string& text) {
  D4Word w;
  for (char c : text) {
    switch (c) {
      case 's': w.push_back(D4Letter::Star); break;
      case 'd': w.push_back(D4Letter::Down); break;
      case 'D': w.push_back(D4Letter::DDown); break;
      default:
        fail(ErrorKind::ParseError,
             std::string("bad D4 letter '") + c + "' (use s, d, D)");
    }
  }
  return w;
}

std::string word_to_string(const D4Word& word) {
  std::string out;
  for (D4Letter l : word) {
    switch (l) {
      case D4Letter::Star: out += 's'; break;
      case D4Letter::Down: out += 'd'; break;
      case D4Letter::DDown: out += 'D'; break;
    }
  }
  return out;
}

D4Word reduce_word(const D4Word& word) {
  Element e;
  for (D4Letter l : word) e = e.then(l);
  return e.word();
}

const std::vector<D4Word>& d4_elements() {
  static const std::vector<D4Word> elements = [] {
    std::vector<D4Word> out;
    for (const char* w : {"", "s", "d", "D", "dD", "sd", "sD", "sdD"})
      out.push_back(parse_word(w));
    return out;
  }();
  return elements;
}

ParameterArray apply(const ParameterArray& pa, const D4Word& word) {
  if (!validate(pa).valid) fail(ErrorKind::InvalidArray, "array fails validation");
  ParameterArray out = pa;
  for (D4Letter l : word) out = apply_letter(out, l);
  internal_check(validate(out).valid, "D4 image fails validation");
  return out;
}

std::vector<ParameterArray> orbit(const ParameterArray& pa) {
  if (!validate(pa).valid) fail(ErrorKind::InvalidArray, "array fails validation");
  std::vector<ParameterArray> out;
  for (const D4Word& w : d4_elements()) {
    ParameterArray image = pa;
    for (D4Letter l : w) image = apply_letter(image, l);
    if (std::find(out.begin(), out.end(), image) == out.end())
      out.push_back(std::move(image));
  }
  return out;
}

}  // namespace lpkit
