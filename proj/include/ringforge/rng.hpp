#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ringforge/errors.hpp"

namespace ringforge {

/// Deterministic RNG. mt19937_64 output is pinned by the standard; we map
/// raw draws to reals and bounded ints ourselves so no libstdc++
/// distribution internals leak into results. State round-trips through a
/// string for checkpointing.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; the spare is part of the saved state.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  /// Unbiased integer in [0, n).
  std::size_t index(std::size_t n) {
    if (n == 0) throw ContractError("Rng::index: n must be positive");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t lim = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x = eng_();
    while (x >= lim) x = eng_();
    return static_cast<std::size_t>(x % un);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

  std::string save_state() const {
    std::ostringstream os;
    os << eng_ << ";" << (has_spare_ ? 1 : 0) << ";";
    os.precision(17);
    os << spare_;
    return os.str();
  }

  void load_state(const std::string& s) {
    const auto p1 = s.rfind(';');
    const auto p0 = s.rfind(';', p1 == std::string::npos ? 0 : p1 - 1);
    if (p0 == std::string::npos || p1 == std::string::npos) {
      throw FormatError("Rng::load_state: malformed state string");
    }
    std::istringstream is(s.substr(0, p0));
    is >> eng_;
    if (!is) throw FormatError("Rng::load_state: bad engine state");
    has_spare_ = s.substr(p0 + 1, p1 - p0 - 1) == "1";
    spare_ = std::stod(s.substr(p1 + 1));
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ringforge
