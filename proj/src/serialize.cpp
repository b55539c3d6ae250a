#include "qtorus/serialize.hpp"

#include <cinttypes>
#include <cstdio>

namespace qtorus {

Json theta_to_json(const Theta& theta) {
  Json upper = Json::array();
  for (int j = 0; j < theta.d(); ++j) {
    for (int k = j + 1; k < theta.d(); ++k) {
      if (theta.entry(j, k) != 0.0) upper.push_back({j, k, theta.entry(j, k)});
    }
  }
  return upper;
}

Theta theta_from_upper_json(int d, const Json& upper) {
  std::vector<std::tuple<int, int, double>> entries;
  for (const auto& e : upper)
    entries.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
  return Theta::from_upper(d, entries);
}

Json element_to_json(const QtElement& x) {
  Json j;
  j["d"] = x.d();
  j["theta"] = theta_to_json(x.theta());
  Json coeffs = Json::array();
  for (const auto& [m, c] : x.coeffs()) {
    coeffs.push_back({{"m", m}, {"re", c.real()}, {"im", c.imag()}});
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

QtElement element_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  QtElement x(theta_from_upper_json(d, j.at("theta")));
  for (const auto& e : j.at("coeffs")) {
    const MultiIndex m = e.at("m").get<MultiIndex>();
    x.add_coeff(m, Complex{e.at("re").get<double>(), e.at("im").get<double>()});
  }
  return x;
}

Json rep_to_json(const TruncatedRep& A) {
  Json j;
  j["d"] = A.box.d();
  j["N"] = A.box.N();
  j["dim"] = A.dim();
  Json entries = Json::array();
  for (long r = 0; r < A.dim(); ++r)
    for (long c = 0; c < A.dim(); ++c)
      entries.push_back({A.mat(r, c).real(), A.mat(r, c).imag()});
  j["entries"] = std::move(entries);
  return j;
}

std::string element_hash(const QtElement& x) {
  const std::string s = element_to_json(x).dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string format_double17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace qtorus
