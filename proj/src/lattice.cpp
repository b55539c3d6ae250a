#include "qtorus/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace qtorus {

void check_dim(const MultiIndex& m, int d, const char* where) {
  if (static_cast<int>(m.size()) != d) {
    throw std::invalid_argument(std::string(where) + ": index dimension " +
                                std::to_string(m.size()) + " does not match d=" +
                                std::to_string(d));
  }
}

MultiIndex zero_index(int d) { return MultiIndex(d, 0); }

MultiIndex unit_index(int d, int j) {
  if (j < 1 || j > d) throw std::invalid_argument("unit_index: generator out of range");
  MultiIndex m(d, 0);
  m[j - 1] = 1;
  return m;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  check_dim(b, static_cast<int>(a.size()), "add");
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MultiIndex sub(const MultiIndex& a, const MultiIndex& b) {
  check_dim(b, static_cast<int>(a.size()), "sub");
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

MultiIndex negate(const MultiIndex& a) {
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

long index_norm1(const MultiIndex& m) {
  long s = 0;
  for (int v : m) s += std::abs(static_cast<long>(v));
  return s;
}

long index_norm_inf(const MultiIndex& m) {
  long s = 0;
  for (int v : m) s = std::max(s, std::abs(static_cast<long>(v)));
  return s;
}

long index_norm2_sq(const MultiIndex& m) {
  long s = 0;
  for (int v : m) s += static_cast<long>(v) * v;
  return s;
}

double index_norm2(const MultiIndex& m) {
  return std::sqrt(static_cast<double>(index_norm2_sq(m)));
}

double index_norm(const MultiIndex& m, double p) {
  if (p == 1.0) return static_cast<double>(index_norm1(m));
  if (p == 2.0) return index_norm2(m);
  if (std::isinf(p)) return static_cast<double>(index_norm_inf(m));
  throw std::invalid_argument("index_norm: p must be 1, 2 or inf");
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

FolnerBox::FolnerBox(int N, int d) : n_(N), d_(d) {
  if (N < 0) throw std::invalid_argument("FolnerBox: N must be >= 0");
  if (d < 1) throw std::invalid_argument("FolnerBox: d must be >= 1");
  long s = 1;
  const long side = 2L * N + 1;
  for (int i = 0; i < d; ++i) {
    if (s > std::numeric_limits<long>::max() / side)
      throw std::invalid_argument("FolnerBox: size overflow");
    s *= side;
  }
  size_ = s;
}

bool FolnerBox::contains(const MultiIndex& m) const {
  check_dim(m, d_, "FolnerBox::contains");
  for (int v : m)
    if (v < -n_ || v > n_) return false;
  return true;
}

long FolnerBox::index_of(const MultiIndex& m) const {
  if (!contains(m)) throw std::invalid_argument("FolnerBox::index_of: out of box");
  const long side = 2L * n_ + 1;
  long idx = 0;
  for (int i = 0; i < d_; ++i) idx = idx * side + (m[i] + n_);
  return idx;
}

MultiIndex FolnerBox::at(long idx) const {
  if (idx < 0 || idx >= size_) throw std::invalid_argument("FolnerBox::at: index out of range");
  const long side = 2L * n_ + 1;
  MultiIndex m(d_);
  for (int i = d_ - 1; i >= 0; --i) {
    m[i] = static_cast<int>(idx % side) - n_;
    idx /= side;
  }
  return m;
}

Rational folner_overlap(int N, const MultiIndex& k) {
  if (N < 0) throw std::invalid_argument("folner_overlap: N must be >= 0");
  if (k.empty()) throw std::invalid_argument("folner_overlap: empty index");
  const long long side = 2LL * N + 1;
  long long num = 1, den = 1;
  for (int v : k) {
    const long long rem = side - std::llabs(static_cast<long long>(v));
    if (rem <= 0) return Rational(0, 1);
    num *= rem;
    den *= side;
  }
  return Rational(num, den);
}

}  // namespace qtorus
