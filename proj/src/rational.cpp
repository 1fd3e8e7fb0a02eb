#include "sched/rational.hpp"

#include <stdexcept>

namespace sched {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(const std::string& s) {
  if (!is_integer_text(s)) throw std::invalid_argument("bad integer: '" + s + "'");
  return Integer(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || !is_integer_text(frac) || frac[0] == '-' || frac[0] == '+')
      throw std::invalid_argument("bad decimal: '" + text + "'");
    bool negative = !head.empty() && head[0] == '-';
    Integer whole = head.empty() || head == "-" || head == "+" ? Integer(0) : parse_integer(head);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = whole * scale;
    Integer frac_num(frac);
    num += negative ? -frac_num : frac_num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  Rational q(parse_integer(s));
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Integer floor_to_int(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Integer ceil_to_int(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rational pow2(long k) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k >= 0 ? k : -k));
  Rational q = k >= 0 ? Rational(p) : Rational(1, p);
  q.canonicalize();
  return q;
}

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long n = static_cast<unsigned long>(invert ? -e : e);
  if (invert && base == 0) throw std::invalid_argument("zero base with negative exponent");
  Rational acc = 1, b = base;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (invert) acc = Rational(1) / acc;
  acc.canonicalize();
  return acc;
}

long floor_log(const Rational& base, const Rational& x) {
  if (base <= 1) throw std::invalid_argument("floor_log base must exceed 1");
  if (x <= 0) throw std::invalid_argument("floor_log argument must be positive");
  if (x == 1) return 0;
  // Exponential search for a bracketing power, upward or downward.
  if (x > 1) {
    long hi = 1;
    while (pow_int(base, hi) <= x) hi *= 2;
    long lo = hi / 2;  // base^lo <= x (hi >= 2) or lo == 0 with base^0 = 1 <= x
    while (lo + 1 < hi) {
      long mid = lo + (hi - lo) / 2;
      if (pow_int(base, mid) <= x)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }
  // x < 1: find the least m with base^-m <= x; answer is -m.
  long hi = 1;
  while (pow_int(base, -hi) > x) hi *= 2;
  long lo = hi / 2;  // base^-lo > x
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    if (pow_int(base, -mid) > x)
      lo = mid;
    else
      hi = mid;
  }
  return -hi;
}

Integer isqrt_floor(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer icbrt_floor(const Integer& n) {
  if (n < 0) throw std::invalid_argument("icbrt of negative");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

}  // namespace sched
