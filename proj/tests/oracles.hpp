#pragma once

// Test-only reference computations. Everything here is evaluated in long
// double by plain summation and never calls into the library's evaluators.

#include <cmath>
#include <cstddef>
#include <vector>

namespace coboson::test {

// Closed-form ratio with (1 - x^{n+1})/(1 - x) expanded as the finite sum
// 1 + x + ... + x^n, which has no cancellation near x = 1.
inline long double raw_ratio(bool fermion, long double x, unsigned long n) {
  if (n == 0 || x == 1.0L) return 1.0L;
  long double geo = 0.0L, xk = 1.0L;
  for (unsigned long k = 0; k <= n; ++k) {
    geo += xk;
    xk *= x;
  }
  const long double q = static_cast<long double>(n + 1) / geo;
  return fermion ? std::pow(x, static_cast<long double>(n)) * q : q;
}

// Ratio via explicit product expansion of prod_j (1 + lambda_j t) or
// prod_j 1/(1 - lambda_j t), truncated at lambda^M < 1e-18.
inline long double enumerated_ratio(bool fermion, long double x, unsigned n) {
  std::vector<long double> w;
  for (long double lam = 1.0L - x; lam > 1e-18L * (1.0L - x) && w.size() < 5000; lam *= x) {
    w.push_back(lam);
    if (x == 0.0L) break;
  }
  std::vector<long double> c(n + 2, 0.0L);
  c[0] = 1.0L;
  for (long double lam : w) {
    if (fermion) {
      for (std::size_t k = n + 1; k >= 1; --k) c[k] += lam * c[k - 1];
    } else {
      for (std::size_t k = 1; k <= n + 1; ++k) c[k] += lam * c[k - 1];
    }
  }
  return static_cast<long double>(n + 1) * c[n + 1] / c[n];
}

// Streams brackets 1 + (n-1) chi_{n+1}/chi_n for n = 0, 1, 2, ... keeping
// x^n and 1 + x + ... + x^n as running values.
class BracketStream {
 public:
  BracketStream(bool fermion, long double x) : fermion_(fermion), x_(x) {}

  long double next() {
    const long double xn = xpow_;  // x^n
    geo_ += xn;                    // 1 + x + ... + x^n
    const long double nd = static_cast<long double>(n_);
    long double ratio = 1.0L;
    if (n_ > 0 && x_ != 1.0L) {
      ratio = (nd + 1.0L) / geo_;
      if (fermion_) ratio *= xn;
    }
    long double b = 1.0L + (nd - 1.0L) * ratio;
    if (fermion_ && x_ == 0.0L) b = 1.0L;
    xpow_ *= x_;
    ++n_;
    return b;
  }

 private:
  bool fermion_;
  long double x_;
  unsigned long n_ = 0;
  long double xpow_ = 1.0L;
  long double geo_ = 0.0L;
};

// Two-level ground occupation by direct summation of both sums.
inline long double two_level_direct(bool fermion, long double x, unsigned long n_total,
                                    long double beta) {
  BracketStream br(fermion, x);
  long double num = 0.0L, z = 0.0L;
  for (unsigned long n = 0; n <= n_total; ++n) {
    const long double wgt = std::exp(-beta * static_cast<long double>(n_total - n));
    num += wgt * br.next();
    z += wgt;
  }
  return num / z;
}

// Level occupation by direct summation out to e*n = 60.
inline long double level_direct(bool fermion, long double x, long double e) {
  BracketStream br(fermion, x);
  const auto nmax = static_cast<unsigned long>(60.0L / e) + 200;
  long double acc = 0.0L;
  for (unsigned long n = 0; n <= nmax; ++n)
    acc += std::exp(-e * static_cast<long double>(n)) * br.next();
  return (1.0L - std::exp(-e)) * acc;
}

}  // namespace coboson::test
