#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace wsa {

using Rational = mpq_class;

/// Square roots adjoined to Q. Generators are square-free integers, at most
/// three, pairwise independent modulo squares.
class FieldTower {
 public:
  static constexpr int kMaxGenerators = 3;

  const std::vector<Rational>& generators() const { return gens_; }
  int size() const { return static_cast<int>(gens_.size()); }

  /// If sqrt(d) lies in the tower, returns (mask, k) with sqrt(d) = k * r_mask.
  std::optional<std::pair<unsigned, Rational>> express_sqrt(const Rational& d) const;

  /// Product of the generators selected by mask.
  Rational radicand(unsigned mask) const;

  bool operator==(const FieldTower& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Rational> gens_;
  friend FieldTower adjoin_sqrt(const FieldTower& tower, const Rational& d);
};

/// Returns a tower containing sqrt(d). Throws CapacityError when d is new and
/// the tower is full.
FieldTower adjoin_sqrt(const FieldTower& tower, const Rational& d);

/// The process-wide tower every Scalar refers to. Generators are only ever
/// appended, so existing values keep their meaning.
FieldTower active_tower();

/// Exact element of the active tower: q + sum_S a_S r_S.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}
  Scalar(int v) : q_(v) {}
  Scalar(const Rational& q) : q_(q) { q_.canonicalize(); }
  Scalar(long num, long den) : q_(num, den) { q_.canonicalize(); }

  /// sqrt(d), adjoining it to the active tower if needed.
  static Scalar sqrt(const Rational& d);

  bool is_zero() const { return q_ == 0 && irr_.empty(); }
  bool is_rational() const { return irr_.empty(); }
  bool is_one() const { return irr_.empty() && q_ == 1; }
  const Rational& rational_part() const { return q_; }
  const std::vector<std::pair<unsigned, Rational>>& irrational_terms() const { return irr_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const { return q_ == o.q_ && irr_ == o.irr_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Throws DivisionByZero on zero.
  Scalar inv() const;

  /// "a/b", "a/b*sqrt(d)" joined by signs; "0" for zero.
  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  Rational q_;
  std::vector<std::pair<unsigned, Rational>> irr_;  // sorted by mask, no zeros
  Scalar conjugate(int gen) const;                  // r_gen -> -r_gen
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Renders a rational as "a" or "a/b".
std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace wsa
