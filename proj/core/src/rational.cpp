#include "minklab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace minklab {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view s) {
  // Grammar: ['+'|'-'] digits ['/' digits]. No whitespace, no decimals.
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);  // mpz rejects leading '+'
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  size_t den_begin = 0, den_end = 0;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) return std::nullopt;
    den_end = i;
  }

  mpz_class num(std::string(s.substr(0, den_begin == 0 ? s.size() : den_begin - 1)), 10);
  mpz_class den(1);
  if (den_begin != 0) {
    den = mpz_class(std::string(s.substr(den_begin, den_end - den_begin)), 10);
    if (den == 0) return std::nullopt;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("rational: reciprocal of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(const Rational& base, long e) {
  if (e < 0) return pow(base.reciprocal(), -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  mpq_class q(num, den);  // already canonical: gcd(num,den)=1 is preserved by powers
  return Rational(std::move(q));
}

Rational floor_rational(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
  return Rational(mpq_class(q));
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.sign() < 0) throw std::invalid_argument("exact_sqrt: negative input");
  const mpz_class& num = q.raw().get_num();
  const mpz_class& den = q.raw().get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));  // gcd one => roots coprime
  }
  return std::nullopt;
}

std::pair<Rational, Rational> sqrt_enclosure(const Rational& q, const Rational& tol) {
  if (q.sign() < 0) throw std::invalid_argument("sqrt_enclosure: negative input");
  if (tol.sign() <= 0) throw std::invalid_argument("sqrt_enclosure: tolerance must be positive");
  if (auto s = exact_sqrt(q)) return {*s, *s};

  // Integer bracket [a, a+1] with a = isqrt(floor(q)); q is not a perfect
  // square here so both inequalities below are strict.
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.raw().get_num().get_mpz_t(), q.raw().get_den().get_mpz_t());
  mpz_class a;
  mpz_sqrt(a.get_mpz_t(), fl.get_mpz_t());
  Rational lo{mpq_class(a)};
  Rational hi = lo + Rational(1);

  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (mid * mid <= q) lo = mid; else hi = mid;
  }
  return {lo, hi};
}

}  // namespace minklab
