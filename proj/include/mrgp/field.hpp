#pragma once

// Exact arithmetic in the ring of integers of Q or of a quadratic field
// Q(sqrt D). Elements are stored as p + q*w in the integral basis {1, w}.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "mrgp/error.hpp"
#include "mrgp/integer.hpp"

namespace mrgp {

enum class BasisMode {
  omega_sqrt,  // w = sqrt(D)
  omega_half,  // w = (1 + sqrt(D)) / 2, used iff D = 1 mod 4
};

class QuadField {
 public:
  /// K = Q, modelled as a degenerate field (q = 0, identity conjugation).
  static QuadField rational() { return QuadField(); }

  static QuadField quadratic(std::int64_t d) {
    if (d == 0 || d == 1) throw MathError(ErrorKind::invalid_d, "D must not be 0 or 1, got " + std::to_string(d));
    if (!is_squarefree(d)) throw MathError(ErrorKind::non_squarefree, "D = " + std::to_string(d) + " is not squarefree");
    QuadField f;
    f.d_ = d;
    f.basis_ = (((d % 4) + 4) % 4 == 1) ? BasisMode::omega_half : BasisMode::omega_sqrt;
    return f;
  }

  bool is_rational() const { return d_ == 1; }
  bool is_real() const { return d_ > 1; }
  bool is_imaginary() const { return d_ < 0; }

  /// Squarefree D. Meaningless (reported as 1) for the rational field.
  std::int64_t d() const { return d_; }
  BasisMode basis() const { return basis_; }
  int degree() const { return is_rational() ? 1 : 2; }
  int unit_rank() const { return is_real() ? 1 : 0; }

  /// w^2 = w2_linear * w + w2_const
  Int w2_linear() const { return basis_ == BasisMode::omega_half ? 1 : 0; }
  Int w2_const() const { return basis_ == BasisMode::omega_half ? Int((d_ - 1) / 4) : Int(d_); }

  std::string name() const { return is_rational() ? "Q" : "Q(sqrt " + std::to_string(d_) + ")"; }

  /// The field header used by the text form, e.g. "w = sqrt(2)".
  std::string omega_text() const {
    if (is_rational()) return "w = 0";
    const std::string root = "sqrt(" + std::to_string(d_) + ")";
    return basis_ == BasisMode::omega_half ? "w = (1+" + root + ")/2" : "w = " + root;
  }

  friend bool operator==(const QuadField& a, const QuadField& b) { return a.d_ == b.d_; }
  friend bool operator!=(const QuadField& a, const QuadField& b) { return a.d_ != b.d_; }

 private:
  QuadField() = default;

  std::int64_t d_ = 1;
  BasisMode basis_ = BasisMode::omega_sqrt;
};

inline QuadField make_field(std::int64_t d) { return QuadField::quadratic(d); }
inline QuadField make_rational_field() { return QuadField::rational(); }

/// Accepts "Q", "QQ", "rational", "Q(sqrt D)", "Q(sqrt(D))", "Q(sqrtD)".
inline QuadField parse_field(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "Q" || s == "QQ" || s == "rational") return QuadField::rational();
  auto fail = [&]() -> QuadField {
    throw MathError(ErrorKind::parse_error, "cannot parse field '" + std::string(text) + "'");
  };
  const std::string head = "Q(sqrt";
  if (s.rfind(head, 0) != 0 || s.back() != ')') return fail();
  std::string inner = s.substr(head.size(), s.size() - head.size() - 1);
  if (!inner.empty() && inner.front() == '(') {
    if (inner.back() != ')') return fail();
    inner = inner.substr(1, inner.size() - 2);
  }
  if (inner.empty()) return fail();
  std::size_t pos = 0;
  long long d = 0;
  try {
    d = std::stoll(inner, &pos);
  } catch (const std::exception&) {
    return fail();
  }
  if (pos != inner.size()) return fail();
  return QuadField::quadratic(d);
}

class QuadInt {
 public:
  explicit QuadInt(const QuadField& f, Int p = 0, Int q = 0) : field_(f), p_(std::move(p)), q_(std::move(q)) {
    if (field_.is_rational() && q_ != 0)
      throw MathError(ErrorKind::field_mismatch, "rational field elements have q = 0");
  }

  const QuadField& field() const { return field_; }
  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational_integer() const { return q_ == 0; }

  QuadInt operator-() const { return QuadInt(field_, -p_, -q_); }

  QuadInt& operator+=(const QuadInt& o) {
    check_same(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  QuadInt& operator-=(const QuadInt& o) {
    check_same(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  QuadInt& operator*=(const QuadInt& o) {
    check_same(o);
    // (p + q w)(r + s w) = pr + qs w^2 + (ps + qr) w, w^2 = L w + C
    const Int qs = q_ * o.q_;
    Int np = p_ * o.p_ + qs * field_.w2_const();
    Int nq = p_ * o.q_ + q_ * o.p_ + qs * field_.w2_linear();
    p_ = std::move(np);
    q_ = std::move(nq);
    return *this;
  }
  QuadInt& operator*=(const Int& k) {
    p_ *= k;
    q_ *= k;
    return *this;
  }

  friend QuadInt operator+(QuadInt a, const QuadInt& b) { return a += b; }
  friend QuadInt operator-(QuadInt a, const QuadInt& b) { return a -= b; }
  friend QuadInt operator*(QuadInt a, const QuadInt& b) { return a *= b; }
  friend QuadInt operator*(QuadInt a, const Int& k) { return a *= k; }
  friend QuadInt operator*(const Int& k, QuadInt a) { return a *= k; }
  friend QuadInt operator+(QuadInt a, const Int& k) {
    a.p_ += k;
    return a;
  }
  friend QuadInt operator-(QuadInt a, const Int& k) {
    a.p_ -= k;
    return a;
  }

  friend bool operator==(const QuadInt& a, const QuadInt& b) {
    return a.field_ == b.field_ && a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const QuadInt& a, const QuadInt& b) { return !(a == b); }

  /// Coordinate order (q, then p). Deterministic but carries no arithmetic meaning.
  friend bool coordinate_less(const QuadInt& a, const QuadInt& b) {
    return std::tie(a.q_, a.p_) < std::tie(b.q_, b.p_);
  }

 private:
  void check_same(const QuadInt& o) const {
    if (field_ != o.field_)
      throw MathError(ErrorKind::field_mismatch, field_.name() + " vs " + o.field_.name());
  }

  QuadField field_;
  Int p_;
  Int q_;
};

inline QuadInt from_integer(const QuadField& f, const Int& n) { return QuadInt(f, n, 0); }
inline QuadInt omega(const QuadField& f) { return QuadInt(f, 0, 1); }

/// Nontrivial automorphism; identity on Q.
inline QuadInt conjugate(const QuadInt& x) {
  const QuadField& f = x.field();
  if (f.is_rational()) return x;
  if (f.basis() == BasisMode::omega_sqrt) return QuadInt(f, x.p(), -x.q());
  // sigma(w) = 1 - w
  return QuadInt(f, x.p() + x.q(), -x.q());
}

/// Absolute norm. On Q this is the element itself.
inline Int norm(const QuadInt& x) {
  const QuadField& f = x.field();
  if (f.is_rational()) return x.p();
  if (f.basis() == BasisMode::omega_sqrt) return x.p() * x.p() - f.w2_const() * x.q() * x.q();
  return x.p() * x.p() + x.p() * x.q() - f.w2_const() * x.q() * x.q();
}

inline Int trace(const QuadInt& x) {
  const QuadField& f = x.field();
  if (f.is_rational()) return x.p();
  if (f.basis() == BasisMode::omega_sqrt) return 2 * x.p();
  return 2 * x.p() + x.q();
}

inline bool is_unit(const QuadInt& x) {
  const Int n = norm(x);
  return n == 1 || n == -1;
}

namespace detail {

// x / m computed as x * sigma(m) / N(m); returns nullopt when not integral.
inline std::optional<QuadInt> try_divide(const QuadInt& x, const QuadInt& m) {
  if (m.is_zero()) throw MathError(ErrorKind::division_by_zero, "division by zero element");
  if (x.field() != m.field()) throw MathError(ErrorKind::field_mismatch, x.field().name() + " vs " + m.field().name());
  if (x.field().is_rational()) {
    if (!int_divides(m.p(), x.p())) return std::nullopt;
    return QuadInt(x.field(), Int(x.p() / m.p()));
  }
  const Int n = norm(m);
  const QuadInt y = x * conjugate(m);
  if (!int_divides(n, y.p()) || !int_divides(n, y.q())) return std::nullopt;
  Int p = y.p() / n;
  Int q = y.q() / n;
  return QuadInt(x.field(), std::move(p), std::move(q));
}

}  // namespace detail

inline bool divides(const QuadInt& m, const QuadInt& x) { return detail::try_divide(x, m).has_value(); }

inline QuadInt exact_div(const QuadInt& x, const QuadInt& m) {
  auto r = detail::try_divide(x, m);
  if (!r) throw MathError(ErrorKind::not_divisible, "element is not divisible");
  return *std::move(r);
}

inline QuadInt pow(QuadInt base, unsigned long e) {
  QuadInt r = from_integer(base.field(), 1);
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

/// Exact sign of the real embedding (sqrt D > 0). Real or rational fields only.
inline int real_sign(const QuadInt& x) {
  const QuadField& f = x.field();
  if (f.is_imaginary()) throw MathError(ErrorKind::imaginary_embedding, f.name() + " has no real embedding");
  if (f.is_rational()) return sgn(x.p());
  // value = (P + Q sqrt D) / den with den in {1, 2}
  const Int P = f.basis() == BasisMode::omega_half ? Int(2 * x.p() + x.q()) : x.p();
  const Int& Q = x.q();
  const int sp = sgn(P);
  const int sq = sgn(Q);
  if (sp >= 0 && sq >= 0) return (sp > 0 || sq > 0) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  const Int lhs = P * P;
  const Int rhs = Int(f.d()) * Q * Q;
  const int c = cmp(lhs, rhs);  // D non-square so c != 0
  return sp > 0 ? c : -c;
}

/// Approximate real embedding with the requested mantissa precision (bits).
inline mpf_class real_embedding(const QuadInt& x, unsigned long precision_bits = 128) {
  const QuadField& f = x.field();
  if (f.is_imaginary()) throw MathError(ErrorKind::imaginary_embedding, f.name() + " has no real embedding");
  mpf_class p(x.p(), precision_bits);
  if (f.is_rational()) return p;
  mpf_class root(0, precision_bits);
  mpf_class dd(static_cast<double>(f.d()), precision_bits);
  mpf_sqrt(root.get_mpf_t(), dd.get_mpf_t());
  mpf_class w(root, precision_bits);
  if (f.basis() == BasisMode::omega_half) w = (root + 1) / 2;
  mpf_class r(0, precision_bits);
  r = p + mpf_class(x.q(), precision_bits) * w;
  return r;
}

/// (log|x|, log|sigma(x)|) under the real embedding, computed without
/// catastrophic cancellation: the larger conjugate is evaluated directly and
/// the smaller one recovered from the norm. x must be nonzero.
inline std::pair<double, double> log_abs_embeddings(const QuadInt& x) {
  const QuadField& f = x.field();
  if (f.is_imaginary()) throw MathError(ErrorKind::imaginary_embedding, f.name() + " has no real embedding");
  if (f.is_rational()) {
    const double l = log_abs(x.p());
    return {l, l};
  }
  const bool half = f.basis() == BasisMode::omega_half;
  const Int P = half ? Int(2 * x.p() + x.q()) : x.p();
  const double shift = half ? std::log(2.0) : 0.0;
  // |P| + |Q| sqrt D is the larger of |2^s x|, |2^s sigma(x)|
  double big;
  if (P == 0) {
    big = log_abs(x.q()) + 0.5 * std::log(static_cast<double>(f.d()));
  } else if (x.q() == 0) {
    big = log_abs(P);
  } else {
    const double a = log_abs(P);
    const double b = log_abs(x.q()) + 0.5 * std::log(static_cast<double>(f.d()));
    const double hi = std::max(a, b);
    big = hi + std::log1p(std::exp(std::min(a, b) - hi));
  }
  big -= shift;
  const double small = log_abs(norm(x)) - big;
  const bool x_is_big = sgn(P) * sgn(x.q()) >= 0;
  return x_is_big ? std::pair{big, small} : std::pair{small, big};
}

/// Height = max absolute basis coordinate.
inline Int height(const QuadInt& x) { return std::max(abs_int(x.p()), abs_int(x.q())); }

/// Canonical text form: "p" when q = 0, else "p + q*w" / "p - q*w".
inline std::string to_string(const QuadInt& x) {
  if (x.q() == 0) return x.p().get_str();
  const Int aq = abs_int(x.q());
  return x.p().get_str() + (x.q() < 0 ? " - " : " + ") + aq.get_str() + "*w";
}

/// Human-oriented form in terms of sqrt(D), e.g. "56 - 24*sqrt(5)" or
/// "(1 + 1*sqrt(5))/2". Display only; the parser accepts it back.
inline std::string to_sqrt_string(const QuadInt& x) {
  const QuadField& f = x.field();
  if (x.q() == 0) return x.p().get_str();
  const std::string root = "sqrt(" + std::to_string(f.d()) + ")";
  Int P = x.p();
  Int Q = x.q();
  bool halved = false;
  if (f.basis() == BasisMode::omega_half) {
    P = 2 * x.p() + x.q();
    if (int_divides(2, P) && int_divides(2, Q)) {
      P /= 2;
      Q /= 2;
    } else {
      halved = true;
    }
  }
  std::string body;
  if (P != 0) body = P.get_str() + (Q < 0 ? " - " : " + ") + abs_int(Q).get_str() + "*" + root;
  else body = Q.get_str() + "*" + root;
  return halved ? "(" + body + ")/2" : body;
}

/// Parses a sum of terms: integers, k*w, k*sqrt(D) (also "sqrtD", "s"),
/// with optional parentheses around the whole expression and an optional
/// trailing "/2" when the result is integral. "i" is accepted for sqrt(-1).
inline QuadInt parse_element(const QuadField& f, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&](const std::string& why) -> QuadInt {
    throw MathError(ErrorKind::parse_error, "cannot parse element '" + std::string(text) + "': " + why);
  };
  if (s.empty()) return fail("empty");

  Int divisor = 1;
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/2") == 0 && s.front() == '(' && s[s.size() - 3] == ')') {
    divisor = 2;
    s = s.substr(1, s.size() - 4);
  } else if (s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
  }

  // Accumulate 2 * value as (A + B*w) to allow halves from sqrt(D) in half basis.
  const QuadInt w = f.is_rational() ? from_integer(f, 0) : omega(f);
  // sqrt(D) in the {1, w} basis
  const QuadInt root = f.is_rational() ? from_integer(f, 0)
                       : f.basis() == BasisMode::omega_half ? QuadInt(f, -1, 2)
                                                            : w;
  const std::string root_tok = "sqrt(" + std::to_string(f.d()) + ")";
  const std::string root_tok2 = "sqrt" + std::to_string(f.d());

  QuadInt acc = from_integer(f, 0);
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      return fail("expected + or -");
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Int coef = 1;
    const bool has_digits = j > i;
    if (has_digits) coef = Int(s.substr(i, j - i));
    i = j;
    if (i < s.size() && s[i] == '*') {
      if (!has_digits) return fail("dangling '*'");
      ++i;
      if (i == s.size() || s[i] == '+' || s[i] == '-') return fail("missing factor after '*'");
    }
    QuadInt term = from_integer(f, 1);
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (f.is_rational()) return fail("rational field has no irrational part");
      if (s.compare(i, root_tok.size(), root_tok) == 0) {
        term = root;
        i += root_tok.size();
      } else if (s.compare(i, root_tok2.size(), root_tok2) == 0) {
        term = root;
        i += root_tok2.size();
      } else if (s[i] == 'w') {
        term = w;
        ++i;
      } else if (s[i] == 's') {
        term = root;
        ++i;
      } else if (s[i] == 'i' && f.d() == -1) {
        term = root;
        ++i;
      } else {
        return fail("unexpected '" + std::string(1, s[i]) + "'");
      }
    } else if (!has_digits) {
      return fail("missing term");
    }
    acc += term * Int(sign * coef);
  }
  if (divisor != 1) return exact_div(acc, from_integer(f, divisor));
  return acc;
}

}  // namespace mrgp
