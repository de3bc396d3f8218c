#include "braidrep/scalar.hpp"

#include <cctype>
#include <ostream>

namespace braidrep {

namespace {

bool is_valid_rational_text(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return p > start;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  return digits(i) && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!is_valid_rational_text(text))
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator: \"" + text + "\"");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

bool rational_square_root(const Rational& r, Rational* root) {
  if (sgn(r) < 0) return false;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  if (root) *root = Rational(sn, sd);
  return true;
}

std::string Scalar::str() const {
  if (is_real()) return rational_to_string(re_);
  std::string im_part;
  if (im_ == 1)
    im_part = "i";
  else if (im_ == -1)
    im_part = "-i";
  else
    im_part = rational_to_string(im_) + "i";
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) > 0) return rational_to_string(re_) + "+" + im_part;
  return rational_to_string(re_) + im_part;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re(), b.re());
  if (c != 0) return c < 0;
  return cmp(a.im(), b.im()) < 0;
}

}  // namespace braidrep
