#include "pg5/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace pg5 {

Poly Poly::taylor_shift(const Rational& shift) const {
  // Horner-style synthetic expansion of p(x + shift).
  const int n = degree();
  if (n < 0) return Poly();
  std::vector<Rational> out(c_);
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) out[j] += shift * out[j + 1];
  return Poly(std::move(out));
}

int Poly::sign_variations() const {
  int var = 0, last = 0;
  for (const auto& c : c_) {
    const int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int Poly::root_multiplicity(const Rational& r, Poly* quot) const {
  Poly cur = *this;
  int mult = 0;
  while (!cur.is_zero() && cur.degree() >= 1 && cur.eval(r).is_zero()) {
    cur = cur.deflate(r);
    ++mult;
  }
  if (quot) *quot = cur;
  return mult;
}

Poly Poly::deflate(const Rational& r) const {
  const int n = degree();
  if (n < 1) throw std::logic_error("deflate: degree < 1");
  std::vector<Rational> q(n);
  Rational carry = c_[n];
  for (int i = n - 1; i >= 0; --i) {
    q[i] = carry;
    carry = c_[i] + carry * r;
  }
  if (!carry.is_zero()) throw std::logic_error("deflate: not a root");
  return Poly(std::move(q));
}

Rational Poly::root_upper_bound() const {
  const int n = degree();
  if (n < 1) return Rational(1);
  Rational m(0);
  for (int i = 0; i < n; ++i) {
    Rational a = boost::multiprecision::abs(c_[i] / c_[n]);
    if (a > m) m = a;
  }
  return m + 1;
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<int>(i));
  return Poly(std::move(d));
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rational> out(p.c_.size() + q.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < p.c_.size(); ++i)
    for (size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
  return Poly(std::move(out));
}

Poly Poly::gcd(Poly p, Poly q) {
  auto monic = [](Poly f) {
    if (f.is_zero()) return f;
    Rational lead = f.c_.back();
    for (auto& c : f.c_) c /= lead;
    return f;
  };
  while (!q.is_zero()) {
    // remainder of p mod q
    Poly r = p;
    while (!r.is_zero() && r.degree() >= q.degree()) {
      Rational f = r.c_.back() / q.c_.back();
      int shift = r.degree() - q.degree();
      for (int i = 0; i <= q.degree(); ++i) r.c_[i + shift] -= f * q.c_[i];
      r.trim();
    }
    p = std::move(q);
    q = std::move(r);
  }
  return monic(std::move(p));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = boost::multiprecision::abs(c);
    if (first) {
      if (sign(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign(c) > 0 ? " + " : " - ");
    }
    if (i == 0 || a != 1) os << a.str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

RootEnclosure isolate_largest_root(const Poly& p, const Rational& width) {
  if (p.degree() < 1) throw std::invalid_argument("isolate_largest_root: constant polynomial");
  RootEnclosure out;
  Rational hi = p.root_upper_bound();
  Rational lo = -hi;
  // Invariant: largest root lies in (lo, hi]. Shrink by bisection on the exact
  // count of roots above the midpoint.
  int total_above = p.roots_greater_than(lo);
  if (total_above == 0) throw std::invalid_argument("isolate_largest_root: no real root above Cauchy lower bound");
  while (true) {
    Rational mid = (lo + hi) / 2;
    if (p.eval(mid).is_zero()) {
      // Rational root hit; it is the largest iff nothing lies above it.
      if (p.roots_greater_than(mid) == 0) {
        out.exact = mid;
        out.multiplicity = p.root_multiplicity(mid);
        out.lo = mid - width;
        out.hi = mid + width;
        return out;
      }
      // Roots above mid exist; nudge the window up.
      lo = mid;
      continue;
    }
    int above = p.roots_greater_than(mid);
    if (above == 0) {
      hi = mid;
    } else {
      lo = mid;
      if (above == 1 && hi - lo <= width) break;
      if (hi - lo <= width && above > 1) {
        // Largest root has multiplicity > 1 (or a cluster tighter than width).
        out.multiplicity = above;
        break;
      }
    }
  }
  out.lo = lo;
  out.hi = hi;
  // Bisection midpoints rarely land on a rational root; probe the integers
  // inside the final interval so integer norms come out exact.
  const BigInt lo_floor = numerator(lo) / denominator(lo);
  for (BigInt k = lo_floor; Rational(k) <= hi; ++k) {
    if (Rational(k) > lo && p.eval(Rational(k)).is_zero() &&
        p.roots_greater_than(Rational(k)) == 0) {
      out.exact = Rational(k);
      out.multiplicity = p.root_multiplicity(Rational(k));
      break;
    }
  }
  return out;
}

}  // namespace pg5
