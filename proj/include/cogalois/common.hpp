#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cogalois {

/// Element of a finite group, coded as an index into its multiplication
/// table.  Index 0 is always the identity.
using elt = std::int32_t;

/// Error with a stable machine-readable code (used by tests and by the CLI
/// to map failures onto exit codes) plus a human-readable description of the
/// first violation found.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
  throw Error(code, msg);
}

/// Two supposedly equivalent computation routes disagreed.  This is never a
/// data error: it means the library itself is inconsistent, so it surfaces
/// as logic_error rather than Error.
[[noreturn]] inline void fatal_disagreement(const std::string& msg) {
  throw std::logic_error("internal disagreement: " + msg);
}

inline void require(bool cond, const char* code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

/// Deterministic 64-bit generator (splitmix64).  Used for the sampled parts
/// of property checks; hand-rolled so results are identical across
/// platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n).  Modulo bias is irrelevant at the sizes
  /// used here and keeps the sequence platform-stable.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
  std::uint64_t state_;
};

/// gcd/lcm/powmod over plain integers (64-bit, enough for moduli <= 10^9).
inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

inline std::int64_t powmod_i64(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

/// Multiplicative order of a mod n; requires gcd(a, n) == 1.
inline int mul_order_mod(std::int64_t a, std::int64_t n) {
  std::int64_t x = a % n;
  if (x < 0) x += n;
  int k = 1;
  std::int64_t y = x;
  while (y != 1 % n) {
    y = y * x % n;
    ++k;
    if (k > n) fail("BadParameters", "mul_order_mod: element not invertible");
  }
  return k;
}

inline int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace cogalois
