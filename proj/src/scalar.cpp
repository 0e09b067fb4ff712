#include "pstab/scalar.hpp"

#include <cctype>
#include <ostream>

namespace pstab {

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "QI"; }

Field parse_field(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "QI") return Field::QI;
  fail(Errc::BadValue, "unknown field '" + std::string(name) + "' (expected Q or QI)");
}

Scalar Scalar::rational(long num, long den, Field f) {
  if (den == 0) fail(Errc::BadValue, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(f, q, 0);
}

Scalar Scalar::make(Field f, mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  if (f == Field::Q && im != 0) fail(Errc::FieldMismatch, "imaginary part under field Q");
  return Scalar(f, std::move(re), std::move(im));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, re_ + o.re_, im_ + o.im_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, re_ - o.re_, im_ - o.im_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_ == Field::Q) return Scalar(field_, re_ * o.re_, 0);
  return Scalar(field_, re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  if (o.is_zero()) fail(Errc::BadValue, "division by zero");
  if (field_ == Field::Q) return Scalar(field_, re_ / o.re_, 0);
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  return Scalar(field_, (re_ * o.re_ + im_ * o.im_) / norm, (im_ * o.re_ - re_ * o.im_) / norm);
}

Scalar Scalar::operator-() const { return Scalar(field_, -re_, -im_); }

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Imaginary term without a leading sign for positive values: "i", "2*i", "1/3*i".
std::string imag_term(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return rat_str(im) + "*i";
}

struct Cursor {
  std::string_view s;
  size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

// [sign] digits [/ digits]; returns false if no digits at cursor.
bool parse_rational(Cursor& c, mpq_class& out) {
  size_t start = c.pos;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) ++c.pos;
  size_t digits_start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == digits_start) {
    c.pos = start;
    return false;
  }
  if (!c.done() && c.peek() == '/') {
    ++c.pos;
    size_t den_start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == den_start) fail(Errc::MalformedScalar, "missing denominator in '" + std::string(c.s) + "'");
  }
  std::string token(c.s.substr(start, c.pos - start));
  if (!token.empty() && token.front() == '+') token.erase(token.begin());
  mpq_class q;
  if (q.set_str(token, 10) != 0) fail(Errc::MalformedScalar, "bad rational '" + token + "'");
  if (q.get_den() == 0) fail(Errc::MalformedScalar, "zero denominator in '" + token + "'");
  q.canonicalize();
  out = q;
  return true;
}

}  // namespace

std::string Scalar::str() const {
  if (im_ == 0) return rat_str(re_);
  if (re_ == 0) return imag_term(im_);
  std::string out = rat_str(re_);
  if (im_ > 0) out += '+';
  out += imag_term(im_);
  return out;
}

Scalar Scalar::parse(std::string_view text, Field f) {
  if (text.empty()) fail(Errc::MalformedScalar, "empty scalar");
  for (char ch : text)
    if (std::isspace(static_cast<unsigned char>(ch)))
      fail(Errc::MalformedScalar, "whitespace in scalar '" + std::string(text) + "'");

  Cursor c{text};
  mpq_class re = 0, im = 0;
  bool have_any = false;

  auto parse_i_suffix = [&](mpq_class coeff_sign) -> bool {
    // cursor sits after an optional rational; check for "*i" / "i"
    if (!c.done() && c.peek() == 'i') {
      ++c.pos;
      im = coeff_sign;
      return true;
    }
    return false;
  };

  // Leading pure-imaginary forms: "i", "-i", "+i"
  if (c.peek() == 'i' || ((c.peek() == '+' || c.peek() == '-') && c.pos + 1 < text.size() && text[c.pos + 1] == 'i')) {
    mpq_class sign = (c.peek() == '-') ? -1 : 1;
    if (c.peek() == '+' || c.peek() == '-') ++c.pos;
    parse_i_suffix(sign);
    have_any = true;
  } else {
    mpq_class first;
    if (!parse_rational(c, first)) fail(Errc::MalformedScalar, "bad scalar '" + std::string(text) + "'");
    have_any = true;
    if (!c.done() && c.peek() == '*') {
      ++c.pos;
      if (c.done() || c.peek() != 'i') fail(Errc::MalformedScalar, "expected i after * in '" + std::string(text) + "'");
      ++c.pos;
      im = first;
    } else {
      re = first;
      // optional imaginary tail: sign then (rational '*')? 'i'
      if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        mpq_class sign = (c.peek() == '-') ? -1 : 1;
        size_t tail_start = c.pos;
        ++c.pos;
        if (!c.done() && c.peek() == 'i') {
          ++c.pos;
          im = sign;
        } else {
          c.pos = tail_start;
          mpq_class coeff;
          if (!parse_rational(c, coeff)) fail(Errc::MalformedScalar, "bad scalar '" + std::string(text) + "'");
          if (c.done() || c.peek() != '*') fail(Errc::MalformedScalar, "trailing junk in '" + std::string(text) + "'");
          ++c.pos;
          if (c.done() || c.peek() != 'i') fail(Errc::MalformedScalar, "expected i in '" + std::string(text) + "'");
          ++c.pos;
          im = coeff;
        }
      }
    }
  }

  if (!have_any || !c.done())
    fail(Errc::MalformedScalar, "trailing characters in scalar '" + std::string(text) + "'");
  if (f == Field::Q && im != 0)
    fail(Errc::FieldMismatch, "imaginary scalar '" + std::string(text) + "' under field Q");
  return Scalar::make(f, re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

// Exact n-th root of a rational, honoring sign (odd n only for negatives).
bool mpq_nth_root(const mpq_class& q, unsigned n, mpq_class& out) {
  if (q == 0) {
    out = 0;
    return true;
  }
  bool negative = q < 0;
  if (negative && n % 2 == 0) return false;
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  mpz_class rnum, rden;
  int exact_num = mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), n);
  int exact_den = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), n);
  if (!exact_num || !exact_den) return false;
  out = mpq_class(negative ? -rnum : rnum, rden);
  out.canonicalize();
  return true;
}

}  // namespace

NthRootResult nth_root_in_field(const Scalar& value, unsigned n) {
  NthRootResult r;
  if (n == 0) fail(Errc::BadValue, "0th root");
  if (n == 1) return {true, true, value};
  if (value.imag() == 0) {
    mpq_class root;
    if (mpq_nth_root(value.real(), n, root)) {
      r = {true, true, Scalar::make(value.field(), root)};
      return r;
    }
    // Negative reals gain even roots in Q(i) through i: (c*i)^2 = -c^2.
    if (value.field() == Field::QI && n == 2 && value.real() < 0) {
      mpq_class pos_root;
      if (mpq_nth_root(mpq_class(-value.real()), 2, pos_root)) {
        r = {true, true, Scalar::make(Field::QI, 0, pos_root)};
        return r;
      }
    }
    r.decided = true;
    r.exists = false;
    return r;
  }
  if (n == 2) {
    // w = u + v*i with w^2 = a + b*i: u^2 = (a + sqrt(a^2+b^2))/2, v = b/(2u).
    mpq_class a = value.real(), b = value.imag();
    mpq_class norm_root;
    if (!mpq_nth_root(a * a + b * b, 2, norm_root)) {
      r.decided = true;
      return r;
    }
    mpq_class u2 = (a + norm_root) / 2;
    mpq_class u;
    if (u2 >= 0 && mpq_nth_root(u2, 2, u) && u != 0) {
      mpq_class v = b / (2 * u);
      r = {true, true, Scalar::make(Field::QI, u, v)};
      return r;
    }
    r.decided = true;
    return r;
  }
  // n >= 3 over Q(i) with nonzero imaginary part: not decided here.
  return r;
}

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedScalar: return "MALFORMED_SCALAR";
    case Errc::FieldMismatch: return "FIELD_MISMATCH";
    case Errc::NotSquare: return "NOT_SQUARE";
    case Errc::SizeMismatch: return "SIZE_MISMATCH";
    case Errc::SingularMatrix: return "SINGULAR_MATRIX";
    case Errc::DetNotOne: return "DET_NOT_ONE";
    case Errc::NotInvertible: return "NOT_INVERTIBLE";
    case Errc::ZeroMatrix: return "ZERO_MATRIX";
    case Errc::BadValue: return "BAD_VALUE";
    case Errc::MissingKey: return "MISSING_KEY";
    case Errc::UnknownKey: return "UNKNOWN_KEY";
    case Errc::RelatorViolation: return "RELATOR_VIOLATION";
    case Errc::Unsupported: return "UNSUPPORTED";
    case Errc::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace pstab
