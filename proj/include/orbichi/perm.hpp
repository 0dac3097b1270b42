#ifndef ORBICHI_PERM_HPP
#define ORBICHI_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "orbichi/errors.hpp"

namespace orbichi {

/// A permutation of {0,...,n-1} stored as its image list: p[i] is where i
/// goes. Composition is function composition, (p*q)(i) = p[q[i]], so the
/// right factor acts first.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

inline std::int64_t factorial_i64(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Lehmer-code rank of a permutation within S_n, in [0, n!).
inline std::int64_t perm_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::int64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * factorial_i64(n - 1 - i);
  }
  return rank;
}

inline Perm perm_unrank(int n, std::int64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    std::int64_t f = factorial_i64(n - 1 - i);
    int idx = static_cast<int>(rank / f);
    rank %= f;
    p[i] = pool[idx];
    pool.erase(pool.begin() + idx);
  }
  return p;
}

/// Cycle notation with 1-based points, fixed points omitted; "()" for the
/// identity.
inline std::string cycle_string(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> done(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      done[j] = 1;
      j = p[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Orbits of the subgroup generated by `gens` on {0,...,n-1}, each sorted,
/// listed in order of their minimal point.
inline std::vector<std::vector<int>> point_orbits(const std::vector<Perm>& gens,
                                                  int n) {
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int s = 0; s < n; ++s) {
    if (orbit_of[s] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> stack{s};
    orbit_of[s] = id;
    std::vector<int> members{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Perm& g : gens) {
        int y = g[x];
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          stack.push_back(y);
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  return orbits;
}

}  // namespace orbichi

#endif
