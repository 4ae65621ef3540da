#include "bcforge/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace bcforge {

namespace {

mpq_class parse_rational(const std::string& text) {
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  mpq_class q;
  if (q.set_str(body, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text.push_back(c);
  }
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (text.back() != 'i') return Scalar(parse_rational(text));
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Scalar(0, parse_rational(text));
  return Scalar(parse_rational(text.substr(0, split)), parse_rational(text.substr(split)));
}

Scalar Scalar::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero scalar");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return re_.get_str() + imag;
}

std::size_t Scalar::hash() const {
  std::size_t seed = 0;
  hash_combine(seed, std::hash<std::string>{}(re_.get_str()));
  hash_combine(seed, std::hash<std::string>{}(im_.get_str()));
  return seed;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace bcforge
