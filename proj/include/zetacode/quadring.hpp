#pragma once

#include "zetacode/rational.hpp"

namespace zetacode {

// Exact arithmetic in Q(sqrt(q)): values a + b*sqrt(q). Comparisons are
// decided by sign analysis of a, b and a^2 - b^2 q — no floating point.
// When q is a perfect square the sqrt(q) part is folded into a.
class QuadRingElement {
 public:
  QuadRingElement(Rat a, Rat b, Int q);
  static QuadRingElement sqrt_q(const Int& q) {
    return QuadRingElement(Rat(0), Rat(1), q);
  }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Int& q() const { return q_; }

  // -1, 0, +1
  int sign() const;

  QuadRingElement operator+(const QuadRingElement& o) const;
  QuadRingElement operator-(const QuadRingElement& o) const;
  QuadRingElement operator*(const QuadRingElement& o) const;
  QuadRingElement operator-() const;
  // conjugate/norm inverse; nonzero argument required.
  QuadRingElement inverse() const;
  QuadRingElement pow(unsigned e) const;

  bool operator==(const QuadRingElement& o) const { return (*this - o).sign() == 0; }
  bool operator<(const QuadRingElement& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QuadRingElement& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QuadRingElement& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const QuadRingElement& o) const { return (*this - o).sign() >= 0; }

 private:
  void check_same(const QuadRingElement& o) const;
  Rat a_, b_;
  Int q_;
};

}  // namespace zetacode
