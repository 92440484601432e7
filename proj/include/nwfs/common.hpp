#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nwfs {

using Time = std::int64_t;
using Weight = std::int64_t;
using Vertex = std::size_t;
using Rational = boost::rational<std::int64_t>;

// Malformed arguments: wrong dimensions, non-permutations, out-of-range indices.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that fails a semantic requirement (semimetric, certificate...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance too large for an exponential-time oracle.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A property that must hold by construction was observed to fail.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// ceil(num / den) for den > 0, exact on 128-bit intermediates.
inline std::int64_t ceil_div(__int128 num, __int128 den) {
  if (den <= 0) throw StructuralError("ceil_div: non-positive denominator");
  __int128 q = num / den;
  if (num % den != 0 && num > 0) ++q;
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("ceil_div: result does not fit in 64 bits");
  return static_cast<std::int64_t>(q);
}

inline std::int64_t ceil_rational(const Rational& r) {
  return ceil_div(r.numerator(), r.denominator());
}

// Smallest c with 2^c >= x, for x >= 1.
inline std::size_t ceil_log2(std::size_t x) {
  if (x == 0) throw StructuralError("ceil_log2 of zero");
  std::size_t c = 0;
  while ((std::size_t{1} << c) < x) ++c;
  return c;
}

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(v);
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    long long p = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    long long q = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument(text);
    if (q == 0) throw StructuralError("zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const StructuralError&) {
    throw;
  } catch (const std::exception&) {
    throw StructuralError("not a rational number: '" + text + "'");
  }
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace nwfs
