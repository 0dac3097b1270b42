#ifndef ORBICHI_GROUP_HPP
#define ORBICHI_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/caps.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/perm.hpp"

namespace orbichi {

/// A finite group as a validated multiplication table over dense element
/// indices 0..order-1. Immutable after construction; safe to share across
/// threads.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

  int element_order(int a) const {
    int x = a, ord = 1;
    while (x != identity_) {
      x = mul(x, a);
      ++ord;
    }
    return ord;
  }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int a) const {
    if (a >= 0 && a < static_cast<int>(labels_.size())) return labels_[a];
    return "g" + std::to_string(a);
  }

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

  friend FiniteGroup make_group(const std::vector<std::vector<int>>&,
                                std::vector<std::string>, const Caps&);
  friend FiniteGroup make_group_unchecked(std::vector<std::int32_t>, int,
                                          std::vector<std::string>);

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::int32_t> table_;  // row-major order x order
  std::vector<std::int32_t> inv_;
  std::vector<std::string> labels_;
};

namespace detail {

/// Greedy generating set: add the first element not yet in the closure of
/// the current set, until the closure is everything.
inline std::vector<int> closure_from(const FiniteGroup& g,
                                     std::span<const int> seed);

inline std::vector<int> find_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> covered(g.order(), 0);
  covered[g.identity()] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (int y : closure_from(g, gens)) covered[y] = 1;
  }
  return gens;
}

}  // namespace detail

/// Builds a group from an explicit table without validation. Intended for
/// constructions that are correct by construction (wreath products, direct
/// products); still exercised by make_group in tests.
inline FiniteGroup make_group_unchecked(std::vector<std::int32_t> table,
                                        int order,
                                        std::vector<std::string> labels = {}) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  // identity: the row r with table[r][x] == x for all x
  g.identity_ = -1;
  for (int r = 0; r < order; ++r) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      if (g.table_[r * order + x] != x) ok = false;
    if (ok) {
      g.identity_ = r;
      break;
    }
  }
  if (g.identity_ < 0) throw NotAGroup("no identity element");
  g.inv_.assign(order, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (g.table_[a * order + b] == g.identity_) {
        g.inv_[a] = b;
        break;
      }
  for (int a = 0; a < order; ++a)
    if (g.inv_[a] < 0) throw NotAGroup("element without inverse");
  return g;
}

/// Validates a multiplication table and returns the group.
///
/// Associativity is proven with Light's test: once the table is closed and
/// every row/column is a permutation, x*(s*y) == (x*s)*y for all x, y and
/// all s in a generating set implies full associativity. Failures report a
/// witnessing triple.
inline FiniteGroup make_group(const std::vector<std::vector<int>>& mul,
                              std::vector<std::string> labels = {},
                              const Caps& caps = default_caps()) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw NotAGroup("empty table");
  if (n > caps.order)
    throw OrderCapExceeded("order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(caps.order));
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      throw NotAGroup("table is not square at row " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      int v = mul[a][b];
      if (v < 0 || v >= n)
        throw NotAGroup("entry out of range at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
      table[a * n + b] = v;
    }
  }
  // Latin square check: each row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen_row[table[a * n + b]]++)
        throw NotAGroup("row " + std::to_string(a) +
                        " is not a permutation (repeat at column " +
                        std::to_string(b) + ")");
      if (seen_col[table[b * n + a]]++)
        throw NotAGroup("column " + std::to_string(a) +
                        " is not a permutation (repeat at row " +
                        std::to_string(b) + ")");
    }
  }
  FiniteGroup g = make_group_unchecked(std::move(table), n, std::move(labels));
  // Two-sidedness of the identity and inverses.
  for (int x = 0; x < n; ++x) {
    if (g.mul(x, g.identity()) != x)
      throw NotAGroup("identity is not two-sided at " + std::to_string(x));
    if (g.mul(g.inv(x), x) != g.identity())
      throw NotAGroup("inverse of " + std::to_string(x) + " is one-sided");
  }
  // Light's associativity test over a generating set.
  for (int s : detail::find_generating_set(g)) {
    for (int x = 0; x < n; ++x) {
      int xs = g.mul(x, s);
      for (int y = 0; y < n; ++y) {
        if (g.mul(xs, y) != g.mul(x, g.mul(s, y)))
          throw NotAGroup("associativity fails at triple (" +
                          std::to_string(x) + "," + std::to_string(s) + "," +
                          std::to_string(y) + ")");
      }
    }
  }
  return g;
}

/// A subgroup as a sorted element-index set of a parent group.
struct Subgroup {
  std::vector<int> elements;  // sorted, contains the identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const { return elements < o.elements; }
};

namespace detail {
inline std::vector<int> closure_from(const FiniteGroup& g,
                                     std::span<const int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> stack, members;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      stack.push_back(x);
      members.push_back(x);
    }
  };
  push(g.identity());
  for (int s : seed) push(s);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s : seed) {
      push(g.mul(x, s));
      push(g.mul(s, x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}
}  // namespace detail

inline Subgroup subgroup_generated(const FiniteGroup& g,
                                   std::span<const int> elems) {
  for (int x : elems)
    if (x < 0 || x >= g.order())
      throw InvalidInput("element index out of range: " + std::to_string(x));
  return Subgroup{detail::closure_from(g, elems)};
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{{g.identity()}};
}

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(all)};
}

/// Centralizer of an element set: all g commuting with every member.
inline Subgroup centralizer(const FiniteGroup& g, std::span<const int> elems) {
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int s : elems)
      if (g.mul(x, s) != g.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return Subgroup{std::move(members)};
}

inline Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h,
                                   int by) {
  std::vector<int> members;
  members.reserve(h.elements.size());
  for (int x : h.elements) members.push_back(g.conjugate(by, x));
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_subgroup(g, h, x) == h) members.push_back(x);
  return Subgroup{std::move(members)};
}

/// Conjugacy classes, each sorted ascending so the representative (front)
/// is the minimal element index. Classes are listed by representative.
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> claimed(g.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (claimed[x]) continue;
    std::vector<int> cls;
    for (int c = 0; c < g.order(); ++c) {
      int y = g.conjugate(c, x);
      if (!claimed[y]) {
        claimed[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Complete subgroup list via join-closure: seed with all cyclic subgroups,
/// then join pairs until no new subgroup appears. Sorted by (order,
/// elements) for deterministic output.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                           const Caps& caps = default_caps()) {
  if (g.order() > caps.subgroup_lattice)
    throw OrderCapExceeded("subgroup enumeration capped at order " +
                           std::to_string(caps.subgroup_lattice));
  std::set<std::vector<int>> seen;
  seen.insert(trivial_subgroup(g).elements);
  for (int x = 0; x < g.order(); ++x) {
    int one[] = {x};
    seen.insert(subgroup_generated(g, one).elements);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(seen.begin(), seen.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> both = snapshot[i];
        both.insert(both.end(), snapshot[j].begin(), snapshot[j].end());
        auto join = subgroup_generated(g, both).elements;
        if (seen.insert(std::move(join)).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (auto& e : seen) out.push_back(Subgroup{e});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

/// Groups a subgroup list into G-conjugacy classes; returns index lists
/// into `subs`, each sorted, ordered by first member.
inline std::vector<std::vector<int>> subgroup_conjugacy_classes(
    const FiniteGroup& g, const std::vector<Subgroup>& subs) {
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < subs.size(); ++i)
    index_of[subs[i].elements] = static_cast<int>(i);
  std::vector<char> claimed(subs.size(), 0);
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (claimed[i]) continue;
    std::vector<int> cls;
    for (int c = 0; c < g.order(); ++c) {
      auto conj = conjugate_subgroup(g, subs[i], c);
      auto it = index_of.find(conj.elements);
      if (it == index_of.end())
        throw InvalidInput("subgroup list is not closed under conjugation");
      if (!claimed[it->second]) {
        claimed[it->second] = 1;
        cls.push_back(it->second);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Builtin constructions

inline FiniteGroup cyclic_group(int n, const Caps& caps = default_caps()) {
  if (n < 1) throw InvalidInput("cyclic group needs n >= 1");
  if (n > caps.order) throw OrderCapExceeded("cyclic order exceeds cap");
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a)
    labels[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
  return make_group_unchecked(std::move(table), n, std::move(labels));
}

/// A finite group realized by permutations of a fixed degree: the flat
/// group plus the permutation attached to each element index.
struct PermutationGroup {
  FiniteGroup group;
  int degree = 0;
  std::vector<Perm> element_perms;
  std::vector<int> sorted_by_perm;  // element indices sorted by permutation

  std::optional<int> index_of(const Perm& p) const {
    auto it = std::lower_bound(sorted_by_perm.begin(), sorted_by_perm.end(), p,
                               [&](int i, const Perm& q) {
                                 return element_perms[i] < q;
                               });
    if (it == sorted_by_perm.end() || element_perms[*it] != p)
      return std::nullopt;
    return *it;
  }
};

namespace detail {
inline PermutationGroup finish_perm_group(std::vector<Perm> perms, int degree,
                                          const Caps& caps) {
  const int n = static_cast<int>(perms.size());
  if (n > caps.order)
    throw OrderCapExceeded("permutation group order " + std::to_string(n) +
                           " exceeds cap " + std::to_string(caps.order));
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = index.at(compose(perms[a], perms[b]));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = cycle_string(perms[i]);
  PermutationGroup pg;
  pg.group = make_group_unchecked(std::move(table), n, std::move(labels));
  pg.degree = degree;
  pg.element_perms = std::move(perms);
  pg.sorted_by_perm.resize(n);
  std::iota(pg.sorted_by_perm.begin(), pg.sorted_by_perm.end(), 0);
  std::sort(pg.sorted_by_perm.begin(), pg.sorted_by_perm.end(),
            [&](int a, int b) {
              return pg.element_perms[a] < pg.element_perms[b];
            });
  return pg;
}
}  // namespace detail

/// Symmetric group on {0..n-1}; element i is perm_unrank(n, i), so index 0
/// is the identity and the Lehmer rank doubles as the element index.
inline PermutationGroup symmetric_group(int n,
                                        const Caps& caps = default_caps()) {
  if (n < 1) throw InvalidInput("symmetric group needs n >= 1");
  std::int64_t ord = factorial_i64(n);
  if (ord > caps.order) throw OrderCapExceeded("n! exceeds order cap");
  std::vector<Perm> perms(ord);
  for (std::int64_t i = 0; i < ord; ++i) perms[i] = perm_unrank(n, i);
  return detail::finish_perm_group(std::move(perms), n, caps);
}

/// Closure of a list of permutation generators (all of equal degree).
inline PermutationGroup permutation_group(const std::vector<Perm>& gens,
                                          const Caps& caps = default_caps()) {
  if (gens.empty()) throw InvalidInput("need at least one generator");
  const int degree = static_cast<int>(gens[0].size());
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw DegreeMismatch("generators of unequal degree");
    if (!is_perm(g)) throw InvalidInput("generator is not a permutation");
  }
  std::set<Perm> seen{identity_perm(degree)};
  std::vector<Perm> queue{identity_perm(degree)};
  while (!queue.empty()) {
    Perm x = std::move(queue.back());
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm y = compose(x, g);
      if (seen.insert(y).second) {
        if (static_cast<std::int64_t>(seen.size()) > caps.order)
          throw OrderCapExceeded("closure exceeds order cap");
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> perms(seen.begin(), seen.end());
  return detail::finish_perm_group(std::move(perms), degree, caps);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  const Caps& caps = default_caps()) {
  std::int64_t ord = static_cast<std::int64_t>(a.order()) * b.order();
  if (ord > caps.order) throw OrderCapExceeded("product order exceeds cap");
  const int n = static_cast<int>(ord);
  auto enc = [&](int x, int y) { return x * b.order() + y; };
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          table[enc(x1, y1) * n + enc(x2, y2)] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::string> labels(n);
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      labels[enc(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
  return make_group_unchecked(std::move(table), n, std::move(labels));
}

/// Reindexes a subgroup as a standalone group; element i of the result is
/// h.elements[i] in the parent.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const int m = h.order();
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[h.elements[i]] = i;
  std::vector<std::int32_t> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = pos.find(g.mul(h.elements[i], h.elements[j]));
      if (it == pos.end())
        throw InvalidInput("element set is not closed under multiplication");
      table[i * m + j] = it->second;
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = g.label(h.elements[i]);
  return make_group_unchecked(std::move(table), m, std::move(labels));
}

}  // namespace orbichi

#endif
