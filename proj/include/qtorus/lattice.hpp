#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtorus {

// A point of Z^d. The dimension is carried by size(); containers holding
// multi-indices check it at their boundaries and throw std::invalid_argument
// on mismatch.
using MultiIndex = std::vector<int>;

void check_dim(const MultiIndex& m, int d, const char* where);

MultiIndex zero_index(int d);
MultiIndex unit_index(int d, int j);  // e_j, generator index j in 1..d

MultiIndex add(const MultiIndex& a, const MultiIndex& b);
MultiIndex sub(const MultiIndex& a, const MultiIndex& b);
MultiIndex negate(const MultiIndex& a);

long index_norm1(const MultiIndex& m);
long index_norm_inf(const MultiIndex& m);
double index_norm2(const MultiIndex& m);
long index_norm2_sq(const MultiIndex& m);

// |m|_p for p in {1, 2, inf}; exact for p=1 and p=inf.
double index_norm(const MultiIndex& m, double p);

// Reduced fraction with non-negative denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// The cube Z_N = {-N,...,N}^d with its enumeration on {0,...,(2N+1)^d - 1}.
// Lexicographic odometer order, first coordinate most significant.
class FolnerBox {
 public:
  FolnerBox(int N, int d);

  int N() const { return n_; }
  int d() const { return d_; }
  long size() const { return size_; }

  bool contains(const MultiIndex& m) const;
  long index_of(const MultiIndex& m) const;
  MultiIndex at(long idx) const;

 private:
  int n_;
  int d_;
  long size_;
};

// |Z_N ∩ (Z_N + k)| / |Z_N| as an exact rational:
// prod_j max(0, 2N+1-|k_j|) / (2N+1)^d.
Rational folner_overlap(int N, const MultiIndex& k);

}  // namespace qtorus
