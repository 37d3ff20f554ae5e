#include "lmriv/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace lmriv {

namespace {

int sign(const Integer& v) { return sgn(v); }

Integer integer_power(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::x_power(int k) {
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::linear(long root) { return IntPoly{-root, 1}; }

IntPoly IntPoly::from_roots(std::initializer_list<long> roots) {
  IntPoly out = constant(1);
  for (long r : roots) out *= linear(r);
  return out;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = ::gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c = coeffs_;
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<long>(k);
  return IntPoly(std::move(c));
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  // b^d p(a/b) = sum c_k a^k b^(d-k), with b > 0.
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = 0;
  Integer bpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  return sign(acc);
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

IntPoly multiply(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly exact_divide(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw NotDivisibleError("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) {
    throw NotDivisibleError("not divisible: " + p.to_string() + " by " + q.to_string());
  }
  std::vector<Integer> rem = p.coefficients();
  const auto& d = q.coefficients();
  const int dq = q.degree();
  std::vector<Integer> quot(static_cast<std::size_t>(p.degree() - dq) + 1, 0);
  for (int k = p.degree() - dq; k >= 0; --k) {
    Integer& top = rem[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d[dq].get_mpz_t())) {
      throw NotDivisibleError("not divisible: " + p.to_string() + " by " + q.to_string());
    }
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d[dq].get_mpz_t());
    quot[k] = f;
    for (int j = 0; j <= dq; ++j) rem[k + j] -= f * d[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw NotDivisibleError("not divisible: " + p.to_string() + " by " + q.to_string());
  }
  return IntPoly(std::move(quot));
}

IntPoly shift_argument(const IntPoly& p, const Integer& t) {
  // Horner in the shifted variable: p(x - t) = (...(c_d (x - t) + c_{d-1})(x - t) ...).
  std::vector<Integer> c = p.coefficients();
  const int d = p.degree();
  const Integer neg = -t;
  for (int i = 0; i < d; ++i) {
    for (int k = d - 1; k >= i; --k) c[k] += neg * c[k + 1];
  }
  return IntPoly(std::move(c));
}

IntPoly substitute_square(const IntPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Integer> c(2 * static_cast<std::size_t>(p.degree()) + 1, 0);
  for (int k = 0; k <= p.degree(); ++k) c[2 * k] = p[k];
  return IntPoly(std::move(c));
}

IntPoly even_part_root(const IntPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Integer> c(static_cast<std::size_t>(p.degree()) / 2 + 1, 0);
  for (int k = 0; k <= p.degree(); ++k) {
    if (k % 2 == 1) {
      if (p[k] != 0) throw std::domain_error("odd-power term x^" + std::to_string(k));
    } else {
      c[k / 2] = p[k];
    }
  }
  return IntPoly(std::move(c));
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (p.degree() < q.degree()) return p;
  std::vector<Integer> r = p.coefficients();
  const auto& d = q.coefficients();
  const int dq = q.degree();
  const Integer& lc = d[dq];
  for (int k = p.degree(); k >= dq; --k) {
    const Integer top = r[k];
    for (auto& v : r) v *= lc;
    for (int j = 0; j <= dq; ++j) r[k - dq + j] -= top * d[j];
  }
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero()) return q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  IntPoly a = p.primitive_part();
  IntPoly b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
  const IntPoly prim = p.primitive_part();
  if (prim.degree() <= 0) return IntPoly{1};
  return exact_divide(prim, gcd(prim, prim.derivative())).primitive_part();
}

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  if (squarefree.is_zero()) throw std::domain_error("Sturm sequence of zero polynomial");
  chain_.push_back(squarefree);
  IntPoly next = squarefree.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    if (b.degree() == 0) break;
    // -rem(a, b) up to a positive factor: the pseudo-remainder multiplies by
    // lc(b)^(delta+1), so fix the sign when that factor is negative.
    IntPoly r = pseudo_remainder(a, b);
    const int delta = a.degree() - b.degree();
    if (b.leading() < 0 && (delta + 1) % 2 == 1) r = -r;
    if (r.is_zero()) break;
    Integer content = r.content();
    std::vector<Integer> c = r.coefficients();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    next = -IntPoly(std::move(c));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_pos_infinity() const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sgn(p.leading());
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_neg_infinity() const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.leading());
    if (p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

RootSet::RootSet(IntPoly source, IntPoly squarefree, std::vector<IsolatedRoot> roots)
    : source_(std::move(source)), squarefree_(std::move(squarefree)), roots_(std::move(roots)) {}

int RootSet::total_multiplicity() const noexcept {
  int total = 0;
  for (const auto& r : roots_) total += r.multiplicity;
  return total;
}

std::vector<RootInterval> RootSet::expanded() const {
  std::vector<RootInterval> out;
  for (const auto& r : roots_) {
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.interval);
  }
  return out;
}

void RootSet::refine(const Rational& width) {
  for (auto& r : roots_) r.interval = refine_root(squarefree_, r.interval, width);
}

Rational cauchy_bound(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of zero polynomial");
  Integer best = 0;
  for (int k = 0; k < p.degree(); ++k) best = std::max<Integer>(best, abs(p[k]));
  Rational bound(best, abs(p.leading()));
  bound.canonicalize();
  return bound + 1;
}

namespace {

// Splits (lo, hi] until each piece holds one distinct root of `sf`.
void isolate_in(const SturmSequence& sturm, const IntPoly& sf, const Rational& lo,
                const Rational& hi, int count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    if (sf.sign_at(hi) == 0) {
      out.push_back({hi, hi});
      return;
    }
    Rational a = lo;
    Rational b = hi;
    // Move a lower endpoint that is itself a (different) root off the root.
    while (sf.sign_at(a) == 0) {
      Rational m = (a + b) / 2;
      if (sturm.count(a, m) == 1) {
        if (sf.sign_at(m) == 0) {
          out.push_back({m, m});
          return;
        }
        b = m;
      } else {
        a = m;
      }
    }
    out.push_back({a, b});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int upper = sturm.count(mid, hi);
  isolate_in(sturm, sf, mid, hi, upper, out);
  isolate_in(sturm, sf, lo, mid, count - upper, out);
}

}  // namespace

RootSet isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  const IntPoly sf = squarefree_part(p);
  std::vector<IsolatedRoot> roots;
  if (sf.degree() <= 0) return RootSet(p, sf, {});

  const SturmSequence sturm(sf);
  const Rational bound = cauchy_bound(sf);
  const Rational zero = 0;
  const int negative = sturm.count(-bound, zero) - (sf.sign_at(zero) == 0 ? 1 : 0);
  const Rational lo = negative == 0 ? zero : Rational(-bound);

  std::vector<RootInterval> intervals;
  isolate_in(sturm, sf, lo, bound, sturm.count(lo, bound), intervals);
  if (sf.sign_at(lo) == 0) intervals.push_back({lo, lo});

  const auto layers = multiplicity_layers(p);
  for (auto& iv : intervals) {
    roots.push_back({iv, multiplicity_at(layers, iv)});
  }
  return RootSet(p, sf, std::move(roots));
}

RootInterval refine_root(const IntPoly& p, const RootInterval& interval, const Rational& width) {
  if (width <= 0) throw std::domain_error("refinement width must be positive");
  if (interval.exact()) return interval;
  const IntPoly sf = squarefree_part(p);
  Rational lo = interval.lo;
  Rational hi = interval.hi;
  const int slo = sf.sign_at(lo);
  const int shi = sf.sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi) {
    throw std::domain_error("interval does not isolate a sign change of the polynomial");
  }
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const int s = sf.sign_at(mid);
    if (s == 0) return {mid, mid};
    if (s == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

std::vector<IntPoly> multiplicity_layers(const IntPoly& p) {
  const IntPoly sf = squarefree_part(p);
  std::vector<IntPoly> layers;
  IntPoly rest = p.primitive_part();
  IntPoly layer = sf;
  while (layer.degree() > 0) {
    layers.push_back(layer);
    rest = exact_divide(rest, layer);
    layer = gcd(rest, sf);
  }
  return layers;
}

int multiplicity_at(const std::vector<IntPoly>& layers, const RootInterval& interval) {
  int mult = 0;
  for (const auto& layer : layers) {
    bool has_root = false;
    if (interval.exact()) {
      has_root = layer.sign_at(interval.lo) == 0;
    } else {
      // Layer roots are roots of the square-free polynomial the interval
      // isolates (one root inside, none at hi), so the count is 0 or 1.
      has_root = SturmSequence(layer).count(interval.lo, interval.hi) == 1;
    }
    if (!has_root) break;
    ++mult;
  }
  return mult;
}

void JointRootTable::refine(const Rational& width) {
  for (auto& r : roots) r.interval = refine_root(squarefree, r.interval, width);
}

JointRootTable joint_roots(const IntPoly& p, const IntPoly& q) {
  const RootSet merged = isolate_real_roots(p * q);
  const auto layers_p = multiplicity_layers(p);
  const auto layers_q = multiplicity_layers(q);
  JointRootTable out{merged.squarefree(), {}};
  out.roots.reserve(merged.roots().size());
  for (const auto& r : merged.roots()) {
    out.roots.push_back({r.interval, multiplicity_at(layers_p, r.interval),
                         multiplicity_at(layers_q, r.interval)});
  }
  return out;
}

std::string to_decimal(const Rational& value, int digits) {
  Rational scaled = abs(value);
  Integer scale = integer_power(10, static_cast<unsigned long>(digits));
  scaled *= scale;
  // Round half up on the magnitude.
  Integer num = scaled.get_num() * 2 + scaled.get_den();
  Integer den = scaled.get_den() * 2;
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), rounded.get_mpz_t(), scale.get_mpz_t());
  std::string frac_text = frac.get_str();
  frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  while (frac_text.size() > 1 && frac_text.back() == '0') frac_text.pop_back();
  if (frac_text.empty()) frac_text = "0";
  const bool negative = value < 0 && (whole != 0 || frac_text != "0");
  return (negative ? "-" : "") + whole.get_str() + "." + frac_text;
}

Rational parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a decimal or rational number: '" + text + "'");
  };
  if (text.empty()) return fail();
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) return fail();
    if (r.get_den() == 0) return fail();
    r.canonicalize();
    return r;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; pos < text.size() && text[pos] != 'e' && text[pos] != 'E'; ++pos) {
    const char c = text[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  long exponent = 0;
  if (pos < text.size()) {
    const std::string exp_text = text.substr(pos + 1);
    if (exp_text.empty()) return fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exp_text.size()) return fail();
  }
  exponent -= frac_digits;
  Integer mantissa(digits, 10);
  Rational out(mantissa);
  if (exponent >= 0) {
    out *= Rational(integer_power(10, static_cast<unsigned long>(exponent)));
  } else {
    out /= Rational(integer_power(10, static_cast<unsigned long>(-exponent)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace lmriv
