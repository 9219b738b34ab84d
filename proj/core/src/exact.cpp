#include "bilateral/exact.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace bilateral {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division by zero";
    case ErrorCode::ExactModeUnavailable: return "exact mode unavailable";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::UnsupportedOrder: return "unsupported order";
    case ErrorCode::InsufficientPrecision: return "insufficient precision";
    case ErrorCode::Usage: return "usage error";
  }
  return "unknown error";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text, bool allow_sign) {
  text = trim(text);
  std::string_view digits = text;
  if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw Error(ErrorCode::Usage, "malformed integer: '" + std::string(text) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::Usage, "malformed integer: '" + std::string(text) + "'");
    }
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return Integer(owned, 10);
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  q_.get_num() = numerator;
  q_.get_den() = denominator;
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  Integer num = parse_integer(text.substr(0, slash), true);
  Integer den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw Error(ErrorCode::Usage, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return result;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational result;
  result.q_.get_num() = std::move(num);
  result.q_.get_den() = std::move(den);  // already coprime
  return result;
}

Rational Rational::operator-() const {
  Rational result;
  result.q_ = -q_;
  return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

// --------------------------------------------------------- QuadraticNumber

QuadraticNumber QuadraticNumber::parse(std::string_view text) {
  text = trim(text);
  const auto plus = text.find(" + ");
  if (plus == std::string_view::npos) {
    if (text.find("sqrt3") != std::string_view::npos) {
      throw Error(ErrorCode::Usage, "malformed quadratic number: '" + std::string(text) + "'");
    }
    return QuadraticNumber(Rational::parse(text));
  }
  std::string_view tail = trim(text.substr(plus + 3));
  constexpr std::string_view suffix = "*sqrt3";
  if (tail.size() <= suffix.size() || tail.substr(tail.size() - suffix.size()) != suffix) {
    throw Error(ErrorCode::Usage, "malformed quadratic number: '" + std::string(text) + "'");
  }
  return {Rational::parse(text.substr(0, plus)),
          Rational::parse(tail.substr(0, tail.size() - suffix.size()))};
}

int QuadraticNumber::sign() const {
  const int a = rat_.sign();
  const int b = sqrt3_.sign();
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: compare a^2 with 3 b^2.
  const Rational a2 = rat_ * rat_;
  const Rational b2 = Rational{3} * sqrt3_ * sqrt3_;
  return a2 > b2 ? a : b;
}

Rational QuadraticNumber::norm() const { return rat_ * rat_ - Rational{3} * sqrt3_ * sqrt3_; }

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  rat_ += rhs.rat_;
  sqrt3_ += rhs.sqrt3_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
  rat_ -= rhs.rat_;
  sqrt3_ -= rhs.sqrt3_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  Rational a = rat_ * rhs.rat_ + Rational{3} * sqrt3_ * rhs.sqrt3_;
  Rational b = rat_ * rhs.sqrt3_ + sqrt3_ * rhs.rat_;
  rat_ = std::move(a);
  sqrt3_ = std::move(b);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "quadratic division by zero");
  const Rational n = rhs.norm();
  *this *= rhs.conjugate();
  rat_ /= n;
  sqrt3_ /= n;
  return *this;
}

std::string QuadraticNumber::str() const { return rat_.str() + " + " + sqrt3_.str() + "*sqrt3"; }

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

QuadraticNumber quad_arith(const QuadraticNumber& x, const QuadraticNumber& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  return {};
}

// ------------------------------------------------------------ IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Integer(0) : coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reflect() const {
  std::vector<Integer> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

QuadraticNumber IntPolynomial::evaluate(const QuadraticNumber& t) const {
  QuadraticNumber acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += QuadraticNumber(Rational(*it));
  }
  return acc;
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

// --------------------------------------------------------------- cotangent

bool has_exact_cot(const Rational& alpha) {
  const Integer& q = alpha.denominator();
  return q == 2 || q == 3 || q == 4 || q == 6;
}

QuadraticNumber cot_exact(const Rational& alpha) {
  if (alpha.is_integer()) throw Error(ErrorCode::Pole, "cot(pi*alpha) has a pole at integer alpha");
  if (!has_exact_cot(alpha)) {
    throw Error(ErrorCode::ExactModeUnavailable,
                "no exact cotangent for denominator " + alpha.denominator().get_str());
  }
  // Periodicity, then cot(pi(1-x)) = -cot(pi x) to land in (0, 1/2].
  Rational x = alpha.frac();
  int sign = 1;
  if (x > Rational(1, 2)) {
    x = Rational{1} - x;
    sign = -1;
  }
  QuadraticNumber value;
  if (x == Rational(1, 2)) {
    value = QuadraticNumber{};
  } else if (x == Rational(1, 3)) {
    value = QuadraticNumber(Rational{0}, Rational(1, 3));
  } else if (x == Rational(1, 4)) {
    value = QuadraticNumber(Rational{1});
  } else {  // 1/6
    value = QuadraticNumber::sqrt3();
  }
  return sign < 0 ? -value : value;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace bilateral
