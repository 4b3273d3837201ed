#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace specguard {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const Int& i) { return i.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Exact conversion to double (nearest); only for reporting/rendering.
inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline bool fits_i64(const Int& v) {
  static const Int lo = Int(INT64_MIN), hi = Int(INT64_MAX);
  return v >= lo && v <= hi;
}

inline std::int64_t to_i64(const Int& v) { return v.convert_to<std::int64_t>(); }

inline std::size_t hash_combine(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

inline std::size_t hash_int(const Int& v) {
  const __mpz_struct* z = v.backend().data();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  int n = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
  for (int i = 0; i < n; ++i) h = hash_combine(h, static_cast<std::size_t>(z->_mp_d[i]));
  return h;
}

inline std::size_t hash_rat(const Rat& r) {
  return hash_combine(hash_int(numerator(r)), hash_int(denominator(r)));
}

/// Parse "p/q" or "p"; returns nullopt on malformed input.
inline std::optional<Rat> parse_rat(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace specguard
