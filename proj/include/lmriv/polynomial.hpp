#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmriv {

using Integer = mpz_class;
using Rational = mpq_class;

class NotDivisibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial over the integers, lowest power first.
/// The zero polynomial has no coefficients; no trailing zeros otherwise.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const Integer& c);
  static IntPoly x_power(int k);          // x^k
  static IntPoly linear(long root);       // x - root
  static IntPoly from_roots(std::initializer_list<long> roots);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k, zero outside the stored range.
  Integer operator[](int k) const;
  const Integer& leading() const;

  Integer content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  /// Sign of p(x) in {-1, 0, 1}, computed without building a rational.
  int sign_at(const Rational& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly multiply(const IntPoly& p, const IntPoly& q);
/// Quotient p / q; throws NotDivisibleError unless q divides p with an
/// integral quotient (always the case for primitive q dividing p over Q).
IntPoly exact_divide(const IntPoly& p, const IntPoly& q);
/// p(x - t).
IntPoly shift_argument(const IntPoly& p, const Integer& t);
/// p(x^2).
IntPoly substitute_square(const IntPoly& p);
/// q with p(x) = q(x^2); throws std::domain_error if p has an odd-power term.
IntPoly even_part_root(const IntPoly& p);
/// Pseudo-remainder lc(q)^(deg p - deg q + 1) * p mod q.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);
/// Primitive gcd with positive leading coefficient (zero if both are zero).
IntPoly gcd(const IntPoly& p, const IntPoly& q);
/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

/// Sturm chain of a square-free polynomial. `variations(a) - variations(b)`
/// counts the distinct real roots in the half-open interval (a, b].
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);

  int variations(const Rational& x) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;

  /// Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
  int count_above(const Rational& a) const { return variations(a) - variations_at_pos_infinity(); }
  int count_real() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

  const std::vector<IntPoly>& chain() const noexcept { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

/// Either the exact rational root (lo == hi) or an open interval (lo, hi)
/// whose endpoints are not roots and which contains exactly one distinct root.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
};

struct IsolatedRoot {
  RootInterval interval;
  int multiplicity = 1;
};

/// Distinct real roots of a polynomial, sorted descending, with
/// multiplicities. Keeps the square-free part so intervals can be refined.
class RootSet {
 public:
  RootSet() = default;
  RootSet(IntPoly source, IntPoly squarefree, std::vector<IsolatedRoot> roots);

  const std::vector<IsolatedRoot>& roots() const noexcept { return roots_; }
  const IntPoly& source() const noexcept { return source_; }
  const IntPoly& squarefree() const noexcept { return squarefree_; }
  int degree() const noexcept { return source_.degree(); }
  int total_multiplicity() const noexcept;
  bool real_rooted() const noexcept { return total_multiplicity() == degree(); }

  /// Roots repeated by multiplicity, descending.
  std::vector<RootInterval> expanded() const;

  /// Shrink every interval to width <= width.
  void refine(const Rational& width);

 private:
  IntPoly source_;
  IntPoly squarefree_;
  std::vector<IsolatedRoot> roots_;
};

/// 1 + max |c_i| / |c_deg|; every complex root lies strictly inside.
Rational cauchy_bound(const IntPoly& p);

/// Certified isolation of the real roots of a nonzero polynomial. Lower
/// endpoints are clamped at 0 when no root is negative.
RootSet isolate_real_roots(const IntPoly& p);

/// Bisect an isolating interval of a root of p until its width is <= width.
RootInterval refine_root(const IntPoly& p, const RootInterval& interval, const Rational& width);

/// Square-free polynomials r_1, r_2, ... where a root of p has multiplicity
/// >= k exactly when it is a root of r_k (obtained by repeated exact
/// division by the square-free part).
std::vector<IntPoly> multiplicity_layers(const IntPoly& p);

/// Multiplicity in p of the root isolated by `interval`, where `layers` is
/// multiplicity_layers(p) and the interval isolates a root of a square-free
/// multiple of p's square-free part.
int multiplicity_at(const std::vector<IntPoly>& layers, const RootInterval& interval);

/// One distinct real root of p*q with its multiplicity in p and in q.
struct JointRoot {
  RootInterval interval;
  int multiplicity_p = 0;
  int multiplicity_q = 0;
};

/// Merged root table of two polynomials, sorted descending. Intervals
/// isolate roots of `squarefree`, the square-free part of p*q.
struct JointRootTable {
  IntPoly squarefree;
  std::vector<JointRoot> roots;

  void refine(const Rational& width);
};

/// Exact merged root table of two nonzero polynomials. Root coincidences
/// between p and q are decided by gcd, never by interval width.
JointRootTable joint_roots(const IntPoly& p, const IntPoly& q);

/// Decimal rendering with up to `digits` fractional digits, trailing zeros
/// trimmed but at least one fractional digit kept ("3.0", "0.267949192").
std::string to_decimal(const Rational& value, int digits = 9);

/// Parses "1e-12", "0.001", "3/4" exactly.
Rational parse_rational(const std::string& text);

}  // namespace lmriv
