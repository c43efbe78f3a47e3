#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace ecrys {

// Weight in the fundamental-weight basis, indexed by Dynkin label 0..7.
// Slots above the rank stay zero, so comparison and hashing act uniformly.
struct Weight {
  std::array<int, 8> c{};

  int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Weight& operator+=(const Weight& o) {
    for (int i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const {
    Weight r;
    for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  bool is_zero() const {
    for (int x : c)
      if (x) return false;
    return true;
  }

  // Signed-index form over affine labels: negatives ascending, then positives
  // ascending, e.g. "-0,-4,2,5". Used by the graph fixture format.
  std::string signed_str() const {
    std::string s;
    auto app = [&](const std::string& t) {
      if (!s.empty()) s += ',';
      s += t;
    };
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k > c[i]; --k) app("-" + std::to_string(i));
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < c[i]; ++k) app(std::to_string(i));
    return s;
  }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : w.c) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace ecrys
