#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ecrys/weight.hpp"

namespace ecrys {

// Dynkin diagram automorphism as a permutation of labels 0..rank.
struct DiagramAut {
  std::array<int, 8> perm{};
  int order = 1;
  int operator()(int i) const { return perm[i]; }

  DiagramAut inverse(int ncolors) const {
    DiagramAut r;
    for (int i = 0; i < ncolors; ++i) r.perm[perm[i]] = i;
    r.order = order;
    return r;
  }
};

namespace detail {
// Exact rational scalar for the null-space elimination; values stay tiny.
struct Frac {
  long long n = 0, d = 1;
  Frac() = default;
  Frac(long long v) : n(v) {}
  Frac(long long n_, long long d_) : n(n_), d(d_) { reduce(); }
  void reduce() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.n * b.n, a.d * b.d); }
  friend Frac operator/(Frac a, Frac b) { return Frac(a.n * b.d, a.d * b.n); }
  friend Frac operator-(Frac a, Frac b) {
    return Frac(a.n * b.d - b.n * a.d, a.d * b.d);
  }
  bool zero() const { return n == 0; }
};
}  // namespace detail

// Affine root datum of a simply laced type: Cartan matrix over labels
// 0..rank, marks, classical positive roots, exact Weyl dimension.
class RootData {
 public:
  int rank;                               // classical labels are 1..rank
  std::vector<std::pair<int, int>> edges; // affine Dynkin edges
  std::array<std::array<int, 8>, 8> a{};  // Cartan entries
  std::array<int, 8> marks{};             // null vector of A, marks[0] = 1
  std::vector<std::array<int, 8>> pos_roots;  // simple-root coordinates

  static const RootData& e6() {
    static const RootData rd(6, {{0, 2}, {2, 4}, {1, 3}, {3, 4}, {4, 5}, {5, 6}}, 36);
    return rd;
  }
  static const RootData& e7() {
    static const RootData rd(
        7, {{0, 1}, {1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}}, 63);
    return rd;
  }

  int ncolors() const { return rank + 1; }

  // Column j of the Cartan matrix as a weight (level-zero automatically).
  Weight simple_root(int j) const {
    Weight w;
    for (int i = 0; i <= rank; ++i) w[i] = a[i][j];
    return w;
  }

  int level(const Weight& w) const {
    int s = 0;
    for (int i = 0; i <= rank; ++i) s += marks[i] * w[i];
    return s;
  }

  // Fill slot 0 so the level vanishes; classical slots are kept.
  Weight with_level0(Weight w) const {
    int s = 0;
    for (int i = 1; i <= rank; ++i) s += marks[i] * w[i];
    w[0] = -s;  // marks[0] == 1
    return w;
  }

  // Exact dimension of the irreducible with classical highest weight λ.
  // Every denominator term cancels completely into the numerator terms, so
  // the final product is integral and fits the sizes used here.
  long long weyl_dim(const Weight& lambda) const {
    for (int i = 1; i <= rank; ++i)
      if (lambda[i] < 0) throw std::invalid_argument("weyl_dim: not dominant");
    std::vector<unsigned long long> nums;
    nums.reserve(pos_roots.size());
    std::vector<unsigned long long> dens;
    dens.reserve(pos_roots.size());
    for (const auto& beta : pos_roots) {
      unsigned long long n = 0, d = 0;
      for (int i = 1; i <= rank; ++i) {
        n += static_cast<unsigned long long>(beta[i]) * (lambda[i] + 1);
        d += static_cast<unsigned long long>(beta[i]);
      }
      nums.push_back(n);
      dens.push_back(d);
    }
    for (unsigned long long d : dens) {
      for (auto& n : nums) {
        if (d == 1) break;
        unsigned long long g = std::gcd(d, n);
        d /= g;
        n /= g;
      }
      if (d != 1) throw std::logic_error("weyl_dim: non-integral quotient");
    }
    unsigned __int128 prod = 1;
    for (unsigned long long n : nums) {
      prod *= n;
      if (prod > static_cast<unsigned __int128>(1) << 100)
        throw std::overflow_error("weyl_dim: result too large");
    }
    return static_cast<long long>(prod);
  }

  bool preserves_diagram(const DiagramAut& p) const {
    for (int i = 0; i <= rank; ++i)
      for (int j = 0; j <= rank; ++j)
        if (a[p(i)][p(j)] != a[i][j]) return false;
    // permutation of 0..rank, identity above
    std::array<bool, 8> seen{};
    for (int i = 0; i <= rank; ++i) {
      if (p.perm[i] < 0 || p.perm[i] > rank || seen[p.perm[i]]) return false;
      seen[p.perm[i]] = true;
    }
    return true;
  }

  // Order-three rotation of E6^(1): 0→1→6→0, 2→3→5→2, 4 fixed.
  DiagramAut rotation3() const {
    DiagramAut p;
    p.perm = {1, 6, 3, 5, 4, 2, 0, 7};
    p.order = 3;
    if (rank != 6 || !preserves_diagram(p))
      throw std::logic_error("rotation3: not an automorphism");
    return p;
  }

  // Order-two involution of E7^(1): 0↔7, 1↔6, 3↔5, 2 and 4 fixed.
  DiagramAut involution2() const {
    DiagramAut p;
    p.perm = {7, 6, 2, 5, 4, 3, 1, 0};
    p.order = 2;
    if (rank != 7 || !preserves_diagram(p))
      throw std::logic_error("involution2: not an automorphism");
    return p;
  }

  // Apply an automorphism to a weight: (p·w)[p(i)] = w[i].
  Weight twist(const DiagramAut& p, const Weight& w) const {
    Weight r;
    for (int i = 0; i <= rank; ++i) r[p(i)] = w[i];
    return r;
  }

 private:
  RootData(int rank_, std::vector<std::pair<int, int>> edges_, int npos)
      : rank(rank_), edges(std::move(edges_)) {
    for (int i = 0; i <= rank; ++i) a[i][i] = 2;
    for (auto [x, y] : edges) {
      a[x][y] = -1;
      a[y][x] = -1;
    }
    compute_marks();
    compute_pos_roots(npos);
  }

  // Null space of the affine Cartan matrix by exact rational elimination;
  // must be one-dimensional with a positive integer generator.
  void compute_marks() {
    using detail::Frac;
    int n = rank + 1;
    std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = Frac(a[i][j]);
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
      int piv = -1;
      for (int i = r; i < n; ++i)
        if (!m[i][c].zero()) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(m[r], m[piv]);
      Frac pv = m[r][c];
      for (int j = 0; j < n; ++j) m[r][j] = m[r][j] / pv;
      for (int i = 0; i < n; ++i) {
        if (i == r || m[i][c].zero()) continue;
        Frac f = m[i][c];
        for (int j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[r][j];
      }
      pivot_col.push_back(c);
      ++r;
    }
    if (r != n - 1) throw std::logic_error("marks: kernel not one-dimensional");
    int free_col = -1;
    for (int c = 0; c < n; ++c)
      if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
        free_col = c;
    std::vector<Frac> v(n);
    v[free_col] = Frac(1);
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = Frac(0) - m[i][free_col];
    long long den = 1;
    for (auto& x : v) den = std::lcm(den, x.d);
    std::vector<long long> iv(n);
    for (int i = 0; i < n; ++i) iv[i] = v[i].n * (den / v[i].d);
    if (iv[0] == 0) throw std::logic_error("marks: vanishing affine entry");
    for (int i = 0; i < n; ++i) {
      if (iv[i] % iv[0] != 0) throw std::logic_error("marks: not integral");
      long long q = iv[i] / iv[0];
      if (q <= 0) throw std::logic_error("marks: not positive");
      marks[i] = static_cast<int>(q);
    }
  }

  // Closure of the simple roots under "add α_j when ⟨β, α_j^∨⟩ = −1";
  // also checks ρ = half-sum has all Dynkin labels equal to one.
  void compute_pos_roots(int npos) {
    std::set<std::array<int, 8>> seen;
    std::vector<std::array<int, 8>> queue;
    for (int j = 1; j <= rank; ++j) {
      std::array<int, 8> e{};
      e[j] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto beta = queue[q];
      for (int j = 1; j <= rank; ++j) {
        int pair = 0;
        for (int i = 1; i <= rank; ++i) pair += beta[i] * a[j][i];
        if (pair == -1) {
          auto nb = beta;
          nb[j] += 1;
          if (seen.insert(nb).second) queue.push_back(nb);
        }
      }
    }
    pos_roots.assign(seen.begin(), seen.end());
    if (static_cast<int>(pos_roots.size()) != npos)
      throw std::logic_error("positive root count mismatch");
    for (int j = 1; j <= rank; ++j) {
      int s = 0;
      for (const auto& beta : pos_roots)
        for (int i = 1; i <= rank; ++i) s += beta[i] * a[j][i];
      if (s != 2) throw std::logic_error("rho is not the all-ones weight");
    }
  }
};

}  // namespace ecrys
