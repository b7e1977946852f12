#include "tcoh/field.hpp"

#include <charconv>
#include <limits>

#include "tcoh/errors.hpp"

namespace tcoh {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_i64(i128 v) {
  return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw InputError("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  big_ = std::make_unique<mpq_class>(q);
  big_->canonicalize();
  normalize_big();
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 un = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = gcd_u128(un, static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  Rational r;
  if (fits_i64(n) && fits_i64(d)) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
  return r;
}

void Rational::normalize_big() {
  if (!big_) return;
  const mpz_class& n = big_->get_num();
  const mpz_class& d = big_->get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_mul_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    i128 n = static_cast<i128>(a.num_) * b.num_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InternalError("division by zero");
  if (a.is_zero()) return Rational();
  if (!a.big_ && !b.big_) {
    i128 n = static_cast<i128>(a.num_) * b.den_;
    i128 d = static_cast<i128>(a.den_) * b.num_;
    return Rational::from_i128(n, d);
  }
  return Rational(a.to_mpq() / b.to_mpq());
}

Rational Rational::operator-() const {
  if (!big_) {
    if (num_ != std::numeric_limits<int64_t>::min()) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
  }
  return Rational(mpq_class(-to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in representation only when values differ
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw InputError("empty scalar");
  auto slash = text.find('/');
  std::string_view ns = trim(text.substr(0, slash));
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  auto valid = [](std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!valid(ns) || !valid(ds)) throw InputError("malformed scalar '" + std::string(text) + "'");
  std::string n(ns), d(ds);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  if (!d.empty() && d[0] == '+') d.erase(0, 1);
  mpz_class zn(n), zd(d);
  if (zd == 0) throw InputError("scalar '" + std::string(text) + "' has zero denominator");
  return Rational(mpq_class(zn, zd));
}

bool is_prime_u64(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(uint64_t p) {
  if (p > (uint64_t{1} << 31) || !is_prime_u64(p)) {
    throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Rational Field::from_int(int64_t v) const {
  if (kind_ == Kind::Rationals) return Rational(v);
  int64_t p = static_cast<int64_t>(p_);
  int64_t r = v % p;
  if (r < 0) r += p;
  return Rational(r);
}

Rational Field::embed(const Rational& v) const {
  if (kind_ == Kind::Rationals) return v;
  mpq_class q = v.to_mpq();
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class n = q.get_num() % p;
  mpz_class d = q.get_den() % p;
  if (n < 0) n += p;
  if (d == 0) throw InputError("scalar " + v.to_string() + " is undefined in " + describe());
  Rational rn(static_cast<int64_t>(n.get_si()));
  return mul(rn, inv(Rational(static_cast<int64_t>(d.get_si()))));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (kind_ == Kind::Rationals) return a + b;
  int64_t s = a.small_num() + b.small_num();
  if (s >= static_cast<int64_t>(p_)) s -= static_cast<int64_t>(p_);
  return Rational(s);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (kind_ == Kind::Rationals) return a - b;
  int64_t s = a.small_num() - b.small_num();
  if (s < 0) s += static_cast<int64_t>(p_);
  return Rational(s);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (kind_ == Kind::Rationals) return a * b;
  return Rational(static_cast<int64_t>(
      (static_cast<unsigned __int128>(a.small_num()) * static_cast<uint64_t>(b.small_num())) % p_));
}

Rational Field::neg(const Rational& a) const {
  if (kind_ == Kind::Rationals) return -a;
  if (a.is_zero()) return a;
  return Rational(static_cast<int64_t>(p_) - a.small_num());
}

Rational Field::inv(const Rational& a) const {
  if (a.is_zero()) throw InternalError("inverse of zero");
  if (kind_ == Kind::Rationals) return Rational(1) / a;
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(p_), nr = a.small_num();
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(p_);
  return Rational(t);
}

Rational Field::div(const Rational& a, const Rational& b) const {
  if (kind_ == Kind::Rationals) return a / b;
  return mul(a, inv(b));
}

void Field::axpy_into(Rational& a, const Rational& c, const Rational& b) const {
  if (c.is_zero() || b.is_zero()) return;
  a = add(a, mul(c, b));
}

std::string Field::describe() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace tcoh
