#ifndef ORBICHI_INDEX_SUBGROUPS_HPP
#define ORBICHI_INDEX_SUBGROUPS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orbichi/caps.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/gamma_sets.hpp"
#include "orbichi/group.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/rational.hpp"

namespace orbichi {

/// Realization of one finite-index subgroup, depending on the source:
/// an HNF sublattice basis (free abelian), a transitive coset action with
/// basepoint 0 (free), or a literal subgroup (finite source).
struct CosetRealization {
  PermHom action;  // transitive; basepoint is point 0
};

struct FiniteIndexSubgroup {
  int index = 0;
  std::variant<std::vector<std::vector<long long>>,  // HNF rows
               CosetRealization, Subgroup>
      realization;
  GroupPresentation iso_type;
};

// ---------------------------------------------------------------------------
// Free abelian: Hermite normal form enumeration

/// All d x d HNF matrices of determinant n: upper triangular, positive
/// diagonal, entries above a diagonal reduced modulo that column's
/// diagonal. These biject with the index-n sublattices of Z^d.
inline std::vector<std::vector<std::vector<long long>>> hnf_matrices(
    int d, int n) {
  if (d < 1 || n < 1) throw InvalidInput("hnf_matrices needs d, n >= 1");
  std::vector<std::vector<std::vector<long long>>> out;
  std::vector<long long> diag(d);
  std::vector<std::vector<long long>> m(d, std::vector<long long>(d, 0));

  auto fill_above = [&](auto&& self, int i, int j) -> void {
    if (i == d) {
      out.push_back(m);
      return;
    }
    if (j == d) {
      self(self, i + 1, i + 2);
      return;
    }
    for (long long v = 0; v < diag[j]; ++v) {
      m[i][j] = v;
      self(self, i, j + 1);
    }
    m[i][j] = 0;
  };
  auto pick_diag = [&](auto&& self, int i, int remaining) -> void {
    if (i == d) {
      if (remaining == 1) {
        for (int r = 0; r < d; ++r) m[r][r] = diag[r];
        fill_above(fill_above, 0, 1);
      }
      return;
    }
    for (int v = 1; v <= remaining; ++v) {
      if (remaining % v) continue;
      diag[i] = v;
      self(self, i + 1, remaining / v);
    }
  };
  pick_diag(pick_diag, 0, n);
  return out;
}

// ---------------------------------------------------------------------------
// Free groups: Hall's recursion and the transitive-action oracle

/// Number of index-n subgroups of the free group of rank k:
///   N_n = n (n!)^(k-1) - sum_{i=1}^{n-1} ((n-i)!)^(k-1) N_i.
inline Integer hall_subgroup_count(int k, int n) {
  if (k < 1 || n < 1) throw InvalidInput("hall_subgroup_count needs k, n >= 1");
  std::vector<Integer> counts(n + 1);
  for (int m = 1; m <= n; ++m) {
    Integer total = m;
    Integer mfact = factorial(m);
    for (int e = 1; e < k; ++e) total *= mfact;
    for (int i = 1; i < m; ++i) {
      Integer term = counts[i];
      Integer f = factorial(m - i);
      for (int e = 1; e < k; ++e) term *= f;
      total -= term;
    }
    counts[m] = total;
  }
  return counts[n];
}

/// Independent oracle: the number of transitive homomorphisms from the
/// free group of rank k into S_n, by direct enumeration.
inline Integer transitive_hom_count(int k, int n,
                                    const Caps& caps = default_caps()) {
  PermutationGroup sym = symmetric_group(n, caps);
  GroupPresentation p = free_presentation(k);
  Integer count = 0;
  for_each_hom(
      p, sym.group,
      [&](const std::vector<int>& images) {
        PermHom ph;
        ph.degree = n;
        for (int idx : images) ph.gen_images.push_back(sym.element_perms[idx]);
        if (is_transitive(ph)) ++count;
      },
      caps);
  return count;
}

namespace detail {

/// Canonical relabeling of a transitive action with marked point 0: points
/// renamed in BFS discovery order (generators in order, then their
/// inverses are not needed since the images generate a finite group).
/// Two (action, basepoint) pairs get equal forms iff they define the same
/// subgroup of the free group.
inline std::vector<Perm> canonical_pointed_action(
    const std::vector<Perm>& gens, int n) {
  std::vector<int> newname(n, -1);
  int next = 0;
  newname[0] = next++;
  std::vector<int> bfs{0};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (const Perm& g : gens) {
      int q = g[bfs[head]];
      if (newname[q] < 0) {
        newname[q] = next++;
        bfs.push_back(q);
      }
    }
  }
  std::vector<Perm> out(gens.size(), Perm(n));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < n; ++i) out[k][newname[i]] = newname[gens[k][i]];
  return out;
}

}  // namespace detail

/// Lists the index-n subgroups of the free group of rank k as canonically
/// labeled pointed coset actions. The count must match Hall's recursion.
inline std::vector<FiniteIndexSubgroup> list_free_subgroups(
    int k, int n, const Caps& caps = default_caps()) {
  PermutationGroup sym = symmetric_group(n, caps);
  GroupPresentation p = free_presentation(k);
  std::vector<std::vector<Perm>> canon;
  for_each_hom(
      p, sym.group,
      [&](const std::vector<int>& images) {
        std::vector<Perm> gens;
        for (int idx : images) gens.push_back(sym.element_perms[idx]);
        PermHom ph{n, gens};
        if (!is_transitive(ph)) return;
        canon.push_back(detail::canonical_pointed_action(gens, n));
      },
      caps);
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<FiniteIndexSubgroup> out;
  for (auto& gens : canon) {
    FiniteIndexSubgroup s;
    s.index = n;
    s.iso_type = free_presentation(k * n - n + 1);
    s.realization = CosetRealization{PermHom{n, std::move(gens)}};
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Count / list dispatch

inline Integer count_index_n_subgroups(const GroupPresentation& p, int n,
                                       const Caps& caps = default_caps()) {
  if (n < 1) throw InvalidInput("subgroup index must be >= 1");
  switch (p.kind) {
    case PresetKind::Trivial:
      return n == 1 ? 1 : 0;
    case PresetKind::FreeAbelian:
      return static_cast<Integer>(hnf_matrices(p.generator_count, n).size());
    case PresetKind::Free:
      return hall_subgroup_count(p.generator_count, n);
    case PresetKind::Finite: {
      const FiniteGroup& g = *p.finite_model;
      if (g.order() % n != 0) return 0;
      Integer count = 0;
      for (const Subgroup& h : all_subgroups(g, caps))
        if (g.order() / h.order() == n) ++count;
      return count;
    }
    case PresetKind::Presented:
      throw UnsupportedSource(
          "subgroup counting is not implemented for general presented "
          "sources");
  }
  throw InvalidInput("unknown preset kind");
}

inline std::vector<FiniteIndexSubgroup> list_index_n_subgroups(
    const GroupPresentation& p, int n, const Caps& caps = default_caps()) {
  if (n < 1) throw InvalidInput("subgroup index must be >= 1");
  std::vector<FiniteIndexSubgroup> out;
  switch (p.kind) {
    case PresetKind::Trivial: {
      if (n == 1) {
        FiniteIndexSubgroup s;
        s.index = 1;
        s.iso_type = trivial_presentation();
        s.realization = Subgroup{{0}};
        out.push_back(std::move(s));
      }
      return out;
    }
    case PresetKind::FreeAbelian: {
      for (auto& m : hnf_matrices(p.generator_count, n)) {
        FiniteIndexSubgroup s;
        s.index = n;
        s.iso_type = free_abelian_presentation(p.generator_count);
        s.realization = std::move(m);
        out.push_back(std::move(s));
      }
      return out;
    }
    case PresetKind::Free:
      return list_free_subgroups(p.generator_count, n, caps);
    case PresetKind::Finite: {
      const FiniteGroup& g = *p.finite_model;
      if (g.order() % n != 0) return out;
      for (const Subgroup& h : all_subgroups(g, caps)) {
        if (g.order() / h.order() != n) continue;
        FiniteIndexSubgroup s;
        s.index = n;
        s.iso_type = finite_presentation(subgroup_as_group(g, h));
        s.realization = h;
        out.push_back(std::move(s));
      }
      return out;
    }
    case PresetKind::Presented:
      throw UnsupportedSource(
          "subgroup listing is not implemented for general presented "
          "sources");
  }
  throw InvalidInput("unknown preset kind");
}

}  // namespace orbichi

#endif
