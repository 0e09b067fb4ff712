#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "pstab/errors.hpp"

namespace pstab {

/// Coefficient field of a computation: the rationals, or the Gaussian rationals Q(i).
enum class Field { Q, QI };

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); a Q-tagged value always has zero
/// imaginary part. Arithmetic between different field tags is an error,
/// never an implicit promotion.
class Scalar {
 public:
  Scalar() : field_(Field::Q) {}

  static Scalar zero(Field f) { return Scalar(f, 0, 0); }
  static Scalar one(Field f) { return Scalar(f, 1, 0); }
  static Scalar i() { return Scalar(Field::QI, 0, 1); }
  static Scalar integer(long v, Field f = Field::Q) { return Scalar(f, v, 0); }
  static Scalar rational(long num, long den, Field f = Field::Q);
  static Scalar make(Field f, mpq_class re, mpq_class im = 0);

  Field field() const { return field_; }
  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // o == 0 -> BadValue
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return field_ == o.field_ && re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Same value viewed in Q(i).
  Scalar lifted() const { return Scalar(Field::QI, re_, im_); }

  /// Canonical whitespace-free text form: "p", "p/q", "c*i", "a/b+c/d*i", "i", "-i", "3-i", ...
  std::string str() const;

  /// Parse the text form under a field context. An imaginary part under
  /// Field::Q is a FieldMismatch; anything else unparsable is MalformedScalar.
  static Scalar parse(std::string_view text, Field f);

 private:
  Scalar(Field f, mpq_class re, mpq_class im) : field_(f), re_(std::move(re)), im_(std::move(im)) {}
  void check_same_field(const Scalar& o) const {
    if (field_ != o.field_) fail(Errc::FieldMismatch, "mixed field tags in scalar arithmetic");
  }

  Field field_;
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact n-th root within the scalar's field, when one exists and we can
/// decide it (rational values: always decidable; Q(i) with nonzero imaginary
/// part: decidable for n <= 2). nullopt means "no root found or undecided";
/// `decided` reports which.
struct NthRootResult {
  bool decided = false;
  bool exists = false;
  Scalar root;
};
NthRootResult nth_root_in_field(const Scalar& value, unsigned n);

}  // namespace pstab
