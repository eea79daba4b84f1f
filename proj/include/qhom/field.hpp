#pragma once
// Exact coefficient arithmetic: the rationals, or a prime field GF(p).
//
// Scalars are GMP rationals throughout; a Field value carried by each matrix
// says how to combine them.  In GF(p) mode every scalar is kept canonical as
// an integer residue in [0, p) with denominator 1, so equality of scalars is
// plain mpq equality in both modes.  No floating point anywhere.
#include <gmpxx.h>

#include <qhom/errors.hpp>
#include <string>

namespace qhom {

using Scalar = mpq_class;

class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(); }

  static Field gf(unsigned long p) {
    if (p < 2) throw error("prime field modulus must be at least 2");
    mpz_class m(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(m.get_mpz_t(), 32) == 0)
      throw error("prime field modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
  }

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }
  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string name() const {
    return is_rational() ? "rational" : "gf " + std::to_string(p_);
  }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  // Canonical image of an arbitrary rational in this field.
  Scalar reduce(const Scalar& x) const {
    if (p_ == 0) return x;  // mpq_class is always gcd-normalized with den > 0
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = x.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = x.get_den() % p;
    if (den == 0) throw error("denominator divisible by field characteristic");
    if (den != 1) {
      mpz_class dinv;
      if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw error("denominator not invertible modulo characteristic");
      num = (num * dinv) % p;
    }
    return Scalar(num);
  }

  Scalar from_long(long n) const { return reduce(Scalar(n)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }

  Scalar inv(const Scalar& a) const {
    if (sgn(a) == 0) throw error("division by zero");
    if (p_ == 0) return Scalar(1) / a;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class ainv;
    if (mpz_invert(ainv.get_mpz_t(), mpz_class(a.get_num()).get_mpz_t(),
                   p.get_mpz_t()) == 0)
      throw error("element not invertible in prime field");
    return Scalar(ainv);
  }

  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& x) { return sgn(x) == 0; }

 private:
  unsigned long p_;
};

}  // namespace qhom
