#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tcoh {

// Exact rational with an int64 fast path. Values that overflow the small
// representation move to GMP and move back when they fit again.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  bool is_integer() const;
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }
  mpq_class to_mpq() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string to_string() const;
  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

 private:
  static Rational from_i128(__int128 n, __int128 d);
  void normalize_big();

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

// Ground field. Elements of F_p are stored as Rationals with integer
// representatives in [0, p).
class Field {
 public:
  enum class Kind { Rationals, Prime };

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(uint64_t p);

  Kind kind() const { return kind_; }
  uint64_t characteristic() const { return p_; }
  bool is_prime() const { return kind_ == Kind::Prime; }

  Rational from_int(int64_t v) const;
  // Maps an arbitrary rational into the field; throws if the denominator
  // vanishes mod p.
  Rational embed(const Rational& v) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational div(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;

  // a += c * b, the inner kernel of elimination.
  void axpy_into(Rational& a, const Rational& c, const Rational& b) const;

  std::string describe() const;
  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Rationals;
  uint64_t p_ = 0;
};

bool is_prime_u64(uint64_t p);

}  // namespace tcoh
