#pragma once

// Exact arithmetic over F_p, generalized binomial coefficients, and the
// weight-lattice combinatorics shared by every other module.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glk {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Scalar = std::uint32_t;  // canonical residue in [0, p)

// Largest prime power q = p^r accepted anywhere (desk-scale guard).
inline constexpr Int kMaxPrimePower = 125;

class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Prime field F_p with canonical representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(Int p) : p_(static_cast<Scalar>(p)) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
    if (p > kMaxPrimePower) throw GuardError("PrimeField: modulus exceeds desk-scale guard");
    inv_.assign(p_, 0);
    for (Scalar a = 1; a < p_; ++a) {
      for (Scalar b = 1; b < p_; ++b) {
        if (a * b % p_ == 1) { inv_[a] = b; break; }
      }
    }
  }

  Scalar p() const { return p_; }

  Scalar add(Scalar a, Scalar b) const { Scalar s = a + b; return s >= p_ ? s - p_ : s; }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar mul(Scalar a, Scalar b) const { return a * b % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }

  Scalar inv(Scalar a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return inv_[a % p_];
  }

  Scalar pow(Scalar a, Int e) const {
    if (e < 0) return pow(inv(a), -e);
    Scalar r = 1 % p_, b = a % p_;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Scalar from_int(Int n) const {
    Int r = n % static_cast<Int>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
  }

  Scalar from_big(const BigInt& n) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
  }

  // (-1)^k
  Scalar sign(Int k) const { return (k % 2 == 0) ? 1 % p_ : neg(1 % p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  Scalar p_;
  std::vector<Scalar> inv_;
};

// Exact binomial coefficient n over k for arbitrary integer n and k >= 0,
// via the falling factorial n(n-1)...(n-k+1)/k!.
inline BigInt binom(Int n, Int k) {
  if (k < 0) throw std::invalid_argument("binom: negative lower index");
  BigInt num = 1;
  for (Int i = 0; i < k; ++i) num *= (BigInt(n) - i);
  BigInt den = 1;
  for (Int i = 2; i <= k; ++i) den *= i;
  return num / den;
}

inline Scalar binom_mod(Int n, Int k, const PrimeField& F) {
  return F.from_big(binom(n, k));
}

// q = p^r with the desk-scale guard q <= 125.
inline Int prime_power(Int p, Int r) {
  if (!is_prime(p)) throw std::invalid_argument("prime_power: p is not prime");
  if (r < 1) throw std::invalid_argument("prime_power: r must be >= 1");
  Int q = 1;
  for (Int i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxPrimePower) throw GuardError("prime_power: q = p^r exceeds guard " + std::to_string(kMaxPrimePower));
  }
  return q;
}

// A weight in X(T) = Z^{m+n}.
struct Weight {
  std::vector<Int> v;

  Weight() = default;
  explicit Weight(std::vector<Int> entries) : v(std::move(entries)) {}
  Weight(std::initializer_list<Int> entries) : v(entries) {}

  std::size_t size() const { return v.size(); }
  Int operator[](std::size_t i) const { return v[i]; }
  Int& operator[](std::size_t i) { return v[i]; }

  Int sum() const {
    Int s = 0;
    for (Int x : v) s += x;
    return s;
  }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
    return r;
  }
  Weight operator*(Int c) const {
    Weight r = *this;
    for (auto& x : r.v) x *= c;
    return r;
  }

  bool operator==(const Weight& o) const { return v == o.v; }
  bool operator!=(const Weight& o) const { return v != o.v; }
  // lexicographic; the canonical deterministic order everywhere
  bool operator<(const Weight& o) const { return v < o.v; }

  // componentwise partial order mu <= lambda
  bool dominated_by(const Weight& o) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] > o.v[i]) return false;
    return true;
  }
};

// epsilon_i basis weight of Z^len
inline Weight eps(std::size_t i, std::size_t len) {
  Weight w(std::vector<Int>(len, 0));
  w[i] = 1;
  return w;
}

// entrywise n -> n - q*floor(n/q), so every entry lands in [0, q)
inline Int bar(Int n, Int q) {
  Int r = n % q;
  return r < 0 ? r + q : r;
}

inline Weight bar(const Weight& w, Int q) {
  Weight r = w;
  for (auto& x : r.v) x = bar(x, q);
  return r;
}

// dominance for GL(m|n): weakly decreasing inside each block
inline bool is_dominant(const Weight& w, Int m, Int n) {
  for (Int i = 0; i + 1 < m; ++i)
    if (w[i] < w[i + 1]) return false;
  for (Int i = m; i + 1 < m + n; ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

// all of X^{(r)}(T) = [0,q)^len in lexicographic order
inline std::vector<Weight> weight_box(Int q, std::size_t len) {
  std::vector<Weight> out;
  Weight cur(std::vector<Int>(len, 0));
  while (true) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++cur[i] < q) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

// Orbit O_t of lambda -> bar(lambda+alpha) on X^{(r)}(T) for GL(1|1):
// all lambda with |lambda| = t (mod q), in lexicographic order.
inline std::vector<Weight> orbit(Int t, Int q) {
  if (t < 0 || t >= q) throw std::invalid_argument("orbit: t out of range");
  std::vector<Weight> out;
  for (Int a = 0; a < q; ++a) out.push_back(Weight{a, bar(t - a, q)});
  return out;
}

}  // namespace glk
