#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcyc {

using Scalar = mpq_class;

struct CharNotZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Either Q or F_p.  Over F_p scalars are kept as integers in [0,p).
class FieldSpec {
 public:
  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(long p);
  static FieldSpec parse(std::string_view name);

  bool is_rational() const { return p_ == 0; }
  long characteristic() const { return p_; }
  std::string name() const;

  Scalar reduce(const Scalar& v) const;
  Scalar inverse(const Scalar& v) const;
  Scalar from_fraction(long num, long den) const { return reduce(Scalar(num, den)); }

  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
    acc += a * b;
    if (p_) reduce_inplace(acc);
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    Scalar r = a * b;
    if (p_) reduce_inplace(r);
    return r;
  }
  Scalar add(const Scalar& a, const Scalar& b) const {
    Scalar r = a + b;
    if (p_) reduce_inplace(r);
    return r;
  }
  Scalar neg(const Scalar& a) const {
    Scalar r = -a;
    if (p_) reduce_inplace(r);
    return r;
  }
  void reduce_inplace(Scalar& v) const;

  void require_char_zero(const char* what) const {
    if (p_) throw CharNotZero(std::string(what) + " needs characteristic 0, field is " + name());
  }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

 private:
  long p_ = 0;
};

std::string scalar_to_string(const Scalar& v);
Scalar scalar_from_string(const std::string& s);

}  // namespace hcyc
