#include "pps/scalar.hpp"

#include <stdexcept>

namespace pps {

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar division by zero");
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  const mpq_class n = o.norm_squared();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string Scalar::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (!has_re) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

namespace {

mpq_class parse_rational(const std::string& text) {
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  const std::string digits = text.front() == '+' ? text.substr(1) : text;
  mpq_class q;
  if (q.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (text.back() != 'i') return Scalar(parse_rational(text));
  const std::string body = text.substr(0, text.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Scalar(0, parse_rational(body));
  return Scalar(parse_rational(body.substr(0, split)), parse_rational(body.substr(split)));
}

}  // namespace pps
