#include "spexg/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spexg {

namespace mp = boost::multiprecision;

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(bigint c, int k) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<bigint> v(k + 1, 0);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

const bigint& Polynomial::coeff(int k) const {
  static const bigint kZero = 0;
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

Polynomial Polynomial::operator-() const {
  std::vector<bigint> v(c_);
  for (auto& x : v) x = -x;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<bigint> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.c_.size()) v[i] += a.c_[i];
    if (i < b.c_.size()) v[i] += b.c_[i];
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  std::vector<bigint> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const bigint& s, const Polynomial& p) {
  std::vector<bigint> v(p.c_);
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

bigint Polynomial::eval(const bigint& x) const {
  bigint acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bigrat Polynomial::eval(const bigrat& x) const {
  bigrat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + bigrat(*it);
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + it->convert_to<double>();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial::zero();
  std::vector<bigint> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = bigint(i) * c_[i];
  return Polynomial(std::move(v));
}

std::vector<std::string> Polynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.str());
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const bigint& a = c_[k];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    bigint mag = mp::abs(a);
    if (mag != 1 || k == 0) os << mag.str();
    if (k >= 1) {
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

using RatVec = std::vector<bigrat>;

RatVec to_rat(const Polynomial& p) {
  RatVec v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return v;
}

void rat_trim(RatVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Long division over Q; returns {quotient, remainder}.
std::pair<RatVec, RatVec> rat_divmod(RatVec a, const RatVec& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  RatVec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, bigrat(0));
  while (a.size() >= b.size() && !a.empty()) {
    bigrat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    rat_trim(a);
    if (a.size() >= b.size() && a.size() > 0 && q[a.size() - b.size()] != 0 &&
        a.back() == 0) {
      rat_trim(a);
    }
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) rat_trim(a);
    if (a.size() >= b.size() && q.size() <= a.size() - b.size()) break;
    if (a.empty() || a.size() < b.size()) break;
  }
  return {std::move(q), std::move(a)};
}

}  // namespace

RatDivision divide_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = rat_divmod(to_rat(a), to_rat(b));
  RatDivision out;
  out.exact = r.empty();
  out.quotient_integral = true;
  std::vector<bigint> qi(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (mp::denominator(q[i]) != 1) {
      out.quotient_integral = false;
      break;
    }
    qi[i] = mp::numerator(q[i]);
  }
  if (out.quotient_integral) out.quotient = Polynomial(std::move(qi));
  return out;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  RatVec x = to_rat(a), y = to_rat(b);
  rat_trim(x);
  rat_trim(y);
  while (!y.empty()) {
    auto [q, r] = rat_divmod(x, y);
    (void)q;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return Polynomial::zero();
  // Scale to a primitive integer polynomial with positive leading coefficient.
  bigint lcm_den = 1;
  for (const auto& c : x) lcm_den = mp::lcm(lcm_den, mp::denominator(c));
  std::vector<bigint> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    v[i] = mp::numerator(x[i]) * (lcm_den / mp::denominator(x[i]));
  bigint g = 0;
  for (const auto& c : v) g = mp::gcd(g, c);
  if (g == 0) g = 1;
  if (v.back() < 0) g = -g;
  for (auto& c : v) c /= g;
  return Polynomial(std::move(v));
}

int sign_at_dyadic(const Polynomial& p, const bigint& mantissa, int exp2) {
  if (exp2 < 0) throw std::invalid_argument("sign_at_dyadic: negative exponent");
  // p(m / 2^k) * 2^{k*d} = sum c_i m^i 2^{k(d-i)}, evaluated by Horner.
  const auto& c = p.coeffs();
  if (c.empty()) return 0;
  bigint acc = c.back();
  bigint scale = bigint(1) << exp2;
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i)
    acc = acc * mantissa + c[i] * (scale << (exp2 * (static_cast<int>(c.size()) - 2 - i)));
  // note: scale << (exp2 * j) == 2^{exp2*(j+1)}
  if (acc == 0) return 0;
  return acc > 0 ? 1 : -1;
}

int sign_at(const Polynomial& p, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("sign_at: non-finite point");
  if (x == 0.0) {
    const bigint& c0 = p.coeff(0);
    return c0 == 0 ? 0 : (c0 > 0 ? 1 : -1);
  }
  int e;
  double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
  long long mant = std::llround(std::ldexp(m, 53));
  int k = 53 - e;
  if (k >= 0) return sign_at_dyadic(p, bigint(mant), k);
  // x is a large even integer: evaluate directly.
  bigint xi = bigint(mant) << (-k);
  bigint v = p.eval(xi);
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

}  // namespace spexg
