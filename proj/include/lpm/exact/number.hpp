#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lpm {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Error raised by any exact-algebra routine on a violated precondition.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) throw AlgebraError("not a rational number: " + text);
  if (r.get_den() == 0) throw AlgebraError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_of(const Rat& v) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

inline Int ceil_of(const Rat& v) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline IntVec to_int_vec(const std::vector<long>& v) {
  return IntVec(v.begin(), v.end());
}

/// Scales a rational vector to the primitive integer vector on the same ray.
inline IntVec primitive_ray(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * den;
    out[i] = s.get_num();
  }
  Int g = vec_gcd(out);
  if (g != 0 && g != 1)
    for (auto& x : out) x /= g;
  return out;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVec operator*(const Int& s, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline std::string join(const IntVec& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

}  // namespace lpm
