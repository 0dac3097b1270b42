#ifndef ORBICHI_GAMMA_SETS_HPP
#define ORBICHI_GAMMA_SETS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/errors.hpp"
#include "orbichi/group.hpp"
#include "orbichi/perm.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/wreath.hpp"

namespace orbichi {

/// A homomorphism into a symmetric group, kept as raw permutations (one
/// image per source generator).
struct PermHom {
  int degree = 0;
  std::vector<Perm> gen_images;
};

/// Componentwise projection of a wreath-valued homomorphism to S_n.
inline PermHom underlying_permutation_hom(const WreathGroup& w,
                                          const Homomorphism& theta) {
  PermHom ph;
  ph.degree = w.copies();
  ph.gen_images.reserve(theta.images.size());
  for (int flat : theta.images) ph.gen_images.push_back(w.perm_of(flat));
  return ph;
}

/// Same projection expressed inside symmetric_group(n): image indices are
/// the Lehmer ranks.
inline Homomorphism to_symmetric_hom(const WreathGroup& w,
                                     const Homomorphism& theta) {
  Homomorphism h;
  h.images.reserve(theta.images.size());
  for (int flat : theta.images)
    h.images.push_back(static_cast<int>(w.project(flat)));
  return h;
}

inline bool is_transitive(const PermHom& ph) {
  if (ph.degree == 0) return true;
  return point_orbits(ph.gen_images, ph.degree).size() == 1;
}

/// The S_n-conjugacy class of a permutation homomorphism, i.e. the
/// isomorphism class of the corresponding finite group action. Canonical
/// form: the lexicographically minimal image tuple under simultaneous
/// conjugation.
struct GammaSetClass {
  int degree = 0;
  std::vector<Perm> canonical;

  bool operator==(const GammaSetClass& o) const {
    return degree == o.degree && canonical == o.canonical;
  }
  bool operator<(const GammaSetClass& o) const {
    if (degree != o.degree) return degree < o.degree;
    return canonical < o.canonical;
  }
};

inline GammaSetClass gamma_set_class(const PermHom& ph) {
  GammaSetClass cls;
  cls.degree = ph.degree;
  if (ph.degree == 0) return cls;
  std::vector<Perm> best = ph.gen_images;
  const std::int64_t nf = factorial_i64(ph.degree);
  std::vector<Perm> conj(ph.gen_images.size());
  for (std::int64_t r = 0; r < nf; ++r) {
    Perm s = perm_unrank(ph.degree, r);
    Perm s_inv = perm_inverse(s);
    for (std::size_t k = 0; k < ph.gen_images.size(); ++k)
      conj[k] = compose(s, compose(ph.gen_images[k], s_inv));
    if (conj < best) best = conj;
  }
  cls.canonical = std::move(best);
  return cls;
}

/// Class of the disjoint union: block-diagonal images, re-canonicalized.
inline GammaSetClass disjoint_union_class(const GammaSetClass& a,
                                          const GammaSetClass& b) {
  if (a.canonical.size() != b.canonical.size() && a.degree > 0 && b.degree > 0)
    throw InvalidInput("gamma-set classes with different generator counts");
  if (a.degree == 0) return b;
  if (b.degree == 0) return a;
  PermHom joint;
  joint.degree = a.degree + b.degree;
  for (std::size_t k = 0; k < a.canonical.size(); ++k) {
    Perm p(joint.degree);
    for (int i = 0; i < a.degree; ++i) p[i] = a.canonical[k][i];
    for (int i = 0; i < b.degree; ++i) p[a.degree + i] = b.canonical[k][i] + a.degree;
    joint.gen_images.push_back(std::move(p));
  }
  return gamma_set_class(joint);
}

/// All isomorphism classes of transitive degree-n actions of the source,
/// i.e. conjugacy classes of index-n subgroups seen through their coset
/// actions. Sorted canonically.
inline std::vector<GammaSetClass> transitive_gamma_set_classes(
    const GroupPresentation& p, int degree, const Caps& caps = default_caps()) {
  PermutationGroup sym = symmetric_group(degree, caps);
  std::vector<GammaSetClass> found;
  for_each_hom(
      p, sym.group,
      [&](const std::vector<int>& images) {
        PermHom ph;
        ph.degree = degree;
        for (int idx : images) ph.gen_images.push_back(sym.element_perms[idx]);
        if (!is_transitive(ph)) return;
        found.push_back(gamma_set_class(ph));
      },
      caps);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

/// Coset action of a finite group on G/H for the literal presentation
/// (one generator per group element); point 0 is the coset H.
inline PermHom coset_action(const FiniteGroup& g, const Subgroup& h) {
  // Enumerate cosets xH by their sorted element sets.
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_of(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> members;
    for (int hh : h.elements) members.push_back(g.mul(x, hh));
    std::sort(members.begin(), members.end());
    int id = static_cast<int>(cosets.size());
    for (int m : members) coset_of[m] = id;
    cosets.push_back(std::move(members));
  }
  // Reorder so the coset H itself is point 0.
  int home = coset_of[g.identity()];
  std::vector<int> relabel(cosets.size());
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[home]);
  std::vector<int> inverse_label(cosets.size());
  for (std::size_t i = 0; i < relabel.size(); ++i) inverse_label[relabel[i]] = i;

  PermHom ph;
  ph.degree = static_cast<int>(cosets.size());
  ph.gen_images.resize(g.order());
  for (int gen = 0; gen < g.order(); ++gen) {
    Perm perm(ph.degree);
    for (int pt = 0; pt < ph.degree; ++pt) {
      int rep = cosets[relabel[pt]][0];
      perm[pt] = inverse_label[coset_of[g.mul(gen, rep)]];
    }
    ph.gen_images[gen] = std::move(perm);
  }
  return ph;
}

// ---------------------------------------------------------------------------
// Orbit structure with Schreier data

/// One orbit of a permutation action together with a word transversal and
/// Schreier generator words for the basepoint stabilizer. Words are letter
/// sequences in the source generators; the transversal word for a point
/// maps the basepoint (points[0], the minimal point) to it. Schreier
/// generators are the non-tree words; tree edges contribute freely trivial
/// words and are omitted.
struct OrbitData {
  std::vector<int> points;
  std::vector<std::vector<int>> transversal;  // aligned with points
  std::vector<std::vector<int>> schreier_gens;
};

inline std::vector<OrbitData> orbit_structure(const PermHom& ph) {
  const int n = ph.degree;
  const int k = static_cast<int>(ph.gen_images.size());
  std::vector<int> seen(n, 0);
  std::vector<OrbitData> orbits;
  for (int base = 0; base < n; ++base) {
    if (seen[base]) continue;
    OrbitData od;
    std::vector<std::vector<int>> word_of(n);
    std::vector<int> bfs{base};
    seen[base] = 1;
    od.points.push_back(base);
    std::vector<std::pair<int, int>> non_tree;  // (point, generator)
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      int p = bfs[head];
      for (int i = 0; i < k; ++i) {
        int q = ph.gen_images[i][p];
        if (!seen[q]) {
          seen[q] = 1;
          word_of[q] = word_of[p];
          word_of[q].insert(word_of[q].begin(), i + 1);  // letter acts first... see note
          bfs.push_back(q);
          od.points.push_back(q);
        } else {
          non_tree.emplace_back(p, i);
        }
      }
    }
    // Note on word orientation: a word [l1,...,lm] is the group element
    // l1*l2*...*lm whose permutation action applies lm first. The word
    // moving the basepoint to q through edge (p, i) is [i+1] + word(p).
    std::sort(od.points.begin(), od.points.end());
    od.transversal.reserve(od.points.size());
    for (int pt : od.points) od.transversal.push_back(word_of[pt]);
    for (auto [p, i] : non_tree) {
      int q = ph.gen_images[i][p];
      std::vector<int> word;
      const auto& tq = word_of[q];
      for (auto it = tq.rbegin(); it != tq.rend(); ++it) word.push_back(-*it);
      word.push_back(i + 1);
      word.insert(word.end(), word_of[p].begin(), word_of[p].end());
      od.schreier_gens.push_back(std::move(word));
    }
    orbits.push_back(std::move(od));
  }
  return orbits;
}

// ---------------------------------------------------------------------------
// Hermite normal form of an integer row lattice

/// Row-style HNF of the lattice spanned by `rows` in Z^d: upper triangular,
/// positive diagonal, entries above each diagonal reduced into [0, diag).
/// Requires full rank d (finite index), which holds for point stabilizers
/// of transitive abelian actions.
inline std::vector<std::vector<long long>> hnf_of_lattice(
    std::vector<std::vector<long long>> rows, int d) {
  std::vector<std::vector<long long>> basis;
  for (int col = 0; col < d; ++col) {
    // Gcd-eliminate column `col` across all remaining rows.
    while (true) {
      int pivot = -1;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][col] != 0 &&
            (pivot < 0 || std::llabs(rows[r][col]) < std::llabs(rows[pivot][col])))
          pivot = static_cast<int>(r);
      if (pivot < 0) break;
      bool reduced_all = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(r) == pivot || rows[r][col] == 0) continue;
        long long q = rows[r][col] / rows[pivot][col];
        for (int c = 0; c < d; ++c) rows[r][c] -= q * rows[pivot][c];
        if (rows[r][col] != 0) reduced_all = false;
      }
      if (reduced_all) {
        auto row = rows[pivot];
        if (row[col] < 0)
          for (auto& v : row) v = -v;
        basis.push_back(row);
        rows.erase(rows.begin() + pivot);
        break;
      }
    }
    if (static_cast<int>(basis.size()) != col + 1)
      throw InvalidInput("stabilizer lattice does not have full rank");
  }
  // Reduce entries above each diagonal.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j) {
      long long diag = basis[i][i];
      long long q = basis[j][i] / diag;
      if (basis[j][i] - q * diag < 0) q -= 1;
      if (q != 0)
        for (int c = 0; c < d; ++c) basis[j][c] -= q * basis[i][c];
    }
  return basis;
}

// ---------------------------------------------------------------------------
// Restriction of a wreath-valued homomorphism to one orbit

/// The restriction of theta to an orbit: a homomorphism from the basepoint
/// stabilizer (in its intrinsic presentation) into the base group.
struct RestrictedHom {
  GroupPresentation stabilizer;
  std::vector<int> images;  // base-group element indices
  int orbit_size = 0;
  std::vector<std::vector<long long>> hnf;  // FreeAbelian sources only
};

namespace detail {

/// Component of theta(word) at the orbit basepoint; the word must
/// stabilize the basepoint.
inline int component_at_basepoint(const WreathGroup& w,
                                  const std::vector<int>& theta_images,
                                  const std::vector<int>& word, int basepoint) {
  int flat = evaluate_word(word, theta_images, w.group());
  return w.component(flat, basepoint);
}

inline std::vector<long long> word_exponents(const std::vector<int>& word,
                                             int d) {
  std::vector<long long> v(d, 0);
  for (int letter : word) v[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
  return v;
}

}  // namespace detail

inline RestrictedHom restrict_to_orbit(const WreathGroup& w,
                                       const GroupPresentation& src,
                                       const Homomorphism& theta,
                                       const OrbitData& orbit) {
  RestrictedHom out;
  out.orbit_size = static_cast<int>(orbit.points.size());
  const int base = orbit.points[0];
  switch (src.kind) {
    case PresetKind::Trivial: {
      if (out.orbit_size != 1)
        throw InvalidInput("trivial source cannot act transitively on >1 points");
      out.stabilizer = trivial_presentation();
      return out;
    }
    case PresetKind::Free: {
      // Rank is k*r - (r-1); the Schreier non-tree words are a free basis.
      out.stabilizer =
          free_presentation(static_cast<int>(orbit.schreier_gens.size()));
      for (const auto& word : orbit.schreier_gens)
        out.images.push_back(
            detail::component_at_basepoint(w, theta.images, word, base));
      return out;
    }
    case PresetKind::FreeAbelian: {
      const int d = src.generator_count;
      std::vector<std::vector<long long>> relations;
      for (const auto& word : orbit.schreier_gens)
        relations.push_back(detail::word_exponents(word, d));
      // Tree words are freely trivial but their exponent vectors are 0, so
      // they contribute nothing; full rank is guaranteed by finite index.
      out.hnf = hnf_of_lattice(std::move(relations), d);
      out.stabilizer = free_abelian_presentation(d);
      for (const auto& basis_vec : out.hnf) {
        int flat = w.group().identity();
        for (int i = 0; i < d; ++i) {
          int gen = theta.images[i];
          int step = basis_vec[i] >= 0 ? gen : w.group().inv(gen);
          for (long long c = 0; c < std::llabs(basis_vec[i]); ++c)
            flat = w.group().mul(flat, step);
        }
        out.images.push_back(w.component(flat, base));
      }
      return out;
    }
    case PresetKind::Finite: {
      const FiniteGroup& gamma = *src.finite_model;
      std::vector<int> stab_elements;
      for (int j = 0; j < gamma.order(); ++j) {
        Perm pj = w.perm_of(theta.images[j]);
        if (pj[base] == base) stab_elements.push_back(j);
      }
      Subgroup stab{std::move(stab_elements)};
      out.stabilizer = finite_presentation(subgroup_as_group(gamma, stab));
      for (int j : stab.elements)
        out.images.push_back(w.component(theta.images[j], base));
      return out;
    }
    case PresetKind::Presented:
      throw UnsupportedSource(
          "stabilizer presentations are not derived for general presented "
          "sources");
  }
  throw InvalidInput("unknown preset kind");
}

}  // namespace orbichi

#endif
