#include "hcyc/exactlin/field.hpp"

namespace hcyc {

namespace {
bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

FieldSpec FieldSpec::prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  FieldSpec f;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view name) {
  if (name == "Q" || name == "QQ" || name == "rationals") return rationals();
  if (!name.empty() && (name[0] == 'F' || name[0] == 'p')) {
    std::string digits(name.substr(1));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
      return prime(std::stol(digits));
  }
  throw std::invalid_argument("unknown field: " + std::string(name));
}

std::string FieldSpec::name() const { return p_ ? "F" + std::to_string(p_) : "Q"; }

void FieldSpec::reduce_inplace(Scalar& v) const {
  if (!p_) return;
  mpz_class pz(p_);
  mpz_class num = v.get_num() % pz;
  if (num < 0) num += pz;
  if (v.get_den() == 1) {
    v = num;
    return;
  }
  mpz_class den = v.get_den() % pz;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw NotInvertible("denominator divisible by " + std::to_string(p_));
  v = mpz_class((num * inv) % pz);
}

Scalar FieldSpec::reduce(const Scalar& v) const {
  Scalar r = v;
  reduce_inplace(r);
  return r;
}

Scalar FieldSpec::inverse(const Scalar& v) const {
  if (v == 0) throw NotInvertible("inverse of zero");
  if (!p_) return 1 / v;
  mpz_class pz(p_), inv;
  mpz_class x = v.get_num() % pz;
  if (x < 0) x += pz;
  if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw NotInvertible("no inverse mod " + std::to_string(p_));
  return Scalar(inv);
}

std::string scalar_to_string(const Scalar& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Scalar scalar_from_string(const std::string& s) {
  Scalar v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  v.canonicalize();
  return v;
}

}  // namespace hcyc
