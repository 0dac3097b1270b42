#ifndef ORBICHI_GSPACE_HPP
#define ORBICHI_GSPACE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/caps.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/gamma_sets.hpp"
#include "orbichi/group.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/rational.hpp"
#include "orbichi/wreath.hpp"

namespace orbichi {

/// A literal finite G-set: the ground-truth oracle for descriptors.
struct FiniteGSet {
  int size = 0;
  std::vector<std::vector<int>> action;  // action[g][x]
};

inline void validate_gset(const FiniteGroup& g, const FiniteGSet& x) {
  if (static_cast<int>(x.action.size()) != g.order())
    throw InvalidAction("action table has wrong number of rows");
  for (const auto& row : x.action) {
    if (static_cast<int>(row.size()) != x.size)
      throw InvalidAction("action row has wrong length");
    for (int v : row)
      if (v < 0 || v >= x.size) throw InvalidAction("action image out of range");
  }
  for (int p = 0; p < x.size; ++p)
    if (x.action[g.identity()][p] != p)
      throw InvalidAction("identity does not act trivially");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      int ab = g.mul(a, b);
      for (int p = 0; p < x.size; ++p)
        if (x.action[a][x.action[b][p]] != x.action[ab][p])
          throw InvalidAction("action is not compatible with multiplication");
    }
}

/// The orbifold input: fixed-set Euler characteristics chi(M^H), one value
/// per conjugacy class of subgroups of G. Total by construction; lookups
/// resolve arbitrary subgroups through their class.
class GSpaceDescriptor {
 public:
  GSpaceDescriptor() = default;

  GSpaceDescriptor(FiniteGroup group, std::vector<Subgroup> reps,
                   std::map<std::vector<int>, int> class_of,
                   std::vector<long long> chi)
      : group_(std::move(group)),
        reps_(std::move(reps)),
        class_of_(std::move(class_of)),
        chi_(std::move(chi)) {}

  const FiniteGroup& group() const { return group_; }
  int class_count() const { return static_cast<int>(reps_.size()); }
  const Subgroup& class_rep(int i) const { return reps_[i]; }
  long long class_chi(int i) const { return chi_[i]; }

  int class_of_subgroup(const Subgroup& h) const {
    auto it = class_of_.find(h.elements);
    if (it == class_of_.end())
      throw InvalidInput("not a subgroup of the descriptor group");
    return it->second;
  }

  /// chi(M^{<elems>}): closes the element set and resolves its class.
  long long chi_generated(std::span<const int> elems) const {
    return chi_[class_of_subgroup(subgroup_generated(group_, elems))];
  }

  long long chi_subgroup(const Subgroup& h) const {
    return chi_[class_of_subgroup(h)];
  }

  /// chi(M) = chi of the trivial subgroup's class.
  long long chi_whole() const {
    return chi_[class_of_subgroup(trivial_subgroup(group_))];
  }

 private:
  FiniteGroup group_;
  std::vector<Subgroup> reps_;
  std::map<std::vector<int>, int> class_of_;
  std::vector<long long> chi_;
};

namespace detail {

struct DescriptorSkeleton {
  std::vector<Subgroup> reps;
  std::map<std::vector<int>, int> class_of;
};

inline DescriptorSkeleton descriptor_skeleton(const FiniteGroup& g,
                                              const Caps& caps) {
  auto subs = all_subgroups(g, caps);
  auto classes = subgroup_conjugacy_classes(g, subs);
  DescriptorSkeleton sk;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sk.reps.push_back(subs[classes[c][0]]);
    for (int idx : classes[c])
      sk.class_of[subs[idx].elements] = static_cast<int>(c);
  }
  return sk;
}

inline std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
  std::string out = "<";
  bool first = true;
  for (int x : h.elements) {
    if (x == g.identity() && h.order() > 1) continue;
    if (!first) out += ",";
    out += g.label(x);
    first = false;
  }
  return out + ">";
}

}  // namespace detail

/// Builds a descriptor from (generator set, chi) entries. Every subgroup
/// conjugacy class must be covered exactly once after closing the
/// generator sets and resolving conjugacy.
inline GSpaceDescriptor descriptor_from_table(
    const FiniteGroup& g,
    const std::vector<std::pair<std::vector<int>, long long>>& entries,
    const Caps& caps = default_caps()) {
  auto sk = detail::descriptor_skeleton(g, caps);
  std::vector<std::optional<long long>> chi(sk.reps.size());
  for (const auto& [gens, value] : entries) {
    Subgroup h = subgroup_generated(g, gens);
    int c = sk.class_of.at(h.elements);
    if (chi[c].has_value()) {
      if (*chi[c] != value)
        throw ConjugacyConflict("conjugate keys with different values for class " +
                                detail::subgroup_label(g, sk.reps[c]));
      throw DuplicateClass("class covered twice: " +
                           detail::subgroup_label(g, sk.reps[c]));
    }
    chi[c] = value;
  }
  std::vector<long long> values(sk.reps.size());
  for (std::size_t c = 0; c < sk.reps.size(); ++c) {
    if (!chi[c].has_value())
      throw MissingClass("no value for subgroup class " +
                         detail::subgroup_label(g, sk.reps[c]));
    values[c] = *chi[c];
  }
  return GSpaceDescriptor(g, std::move(sk.reps), std::move(sk.class_of),
                          std::move(values));
}

/// Burnside-mark descriptor of a literal G-set: chi(M^H) := |X^H|.
inline GSpaceDescriptor descriptor_from_gset(const FiniteGSet& x,
                                             const FiniteGroup& g,
                                             const Caps& caps = default_caps()) {
  validate_gset(g, x);
  auto sk = detail::descriptor_skeleton(g, caps);
  std::vector<long long> values(sk.reps.size(), 0);
  for (std::size_t c = 0; c < sk.reps.size(); ++c) {
    long long fixed = 0;
    for (int p = 0; p < x.size; ++p) {
      bool ok = true;
      for (int h : sk.reps[c].elements)
        if (x.action[h][p] != p) {
          ok = false;
          break;
        }
      if (ok) ++fixed;
    }
    values[c] = fixed;
  }
  return GSpaceDescriptor(g, std::move(sk.reps), std::move(sk.class_of),
                          std::move(values));
}

/// The one-point space: every fixed set is a point.
inline GSpaceDescriptor point_descriptor(const FiniteGroup& g,
                                         const Caps& caps = default_caps()) {
  auto sk = detail::descriptor_skeleton(g, caps);
  std::vector<long long> values(sk.reps.size(), 1);
  return GSpaceDescriptor(g, std::move(sk.reps), std::move(sk.class_of),
                          std::move(values));
}

/// Pointwise sum (for linearity checks and virtual descriptors).
inline GSpaceDescriptor descriptor_sum(const GSpaceDescriptor& a,
                                       const GSpaceDescriptor& b) {
  if (!a.group().same_table(b.group()))
    throw GroupMismatch("descriptor sum over different groups");
  auto sk = detail::descriptor_skeleton(a.group(), default_caps());
  std::vector<long long> values(sk.reps.size());
  for (std::size_t c = 0; c < sk.reps.size(); ++c)
    values[c] = a.chi_subgroup(sk.reps[c]) + b.chi_subgroup(sk.reps[c]);
  return GSpaceDescriptor(a.group(), std::move(sk.reps), std::move(sk.class_of),
                          std::move(values));
}

inline GSpaceDescriptor descriptor_scale(const GSpaceDescriptor& a,
                                         long long factor) {
  auto sk = detail::descriptor_skeleton(a.group(), default_caps());
  std::vector<long long> values(sk.reps.size());
  for (std::size_t c = 0; c < sk.reps.size(); ++c)
    values[c] = factor * a.chi_subgroup(sk.reps[c]);
  return GSpaceDescriptor(a.group(), std::move(sk.reps), std::move(sk.class_of),
                          std::move(values));
}

// ---------------------------------------------------------------------------
// Invariant building blocks

/// chi of the fixed set of a homomorphism: depends only on the generated
/// image subgroup.
inline long long chi_of_hom_fixed(const GSpaceDescriptor& desc,
                                  const Homomorphism& theta) {
  return desc.chi_generated(theta.images);
}

/// chi(M^{<S>} / K) by the Burnside count (1/|K|) sum_k chi(M^{<S,k>}).
/// K must centralize S so that it acts on the fixed set.
inline long long chi_quotient(const GSpaceDescriptor& desc, const Subgroup& k,
                              std::span<const int> ambient_fixed = {}) {
  const FiniteGroup& g = desc.group();
  for (int kk : k.elements)
    for (int s : ambient_fixed)
      if (g.mul(kk, s) != g.mul(s, kk))
        throw NotCentralizing("subgroup does not centralize the constraint set");
  Integer total = 0;
  std::vector<int> gens(ambient_fixed.begin(), ambient_fixed.end());
  gens.push_back(0);
  for (int kk : k.elements) {
    gens.back() = kk;
    total += desc.chi_generated(gens);
  }
  Rational value(total, k.order());
  Integer result = as_integer(value, "orbit-space Euler characteristic");
  return static_cast<long long>(result);
}

/// Euler-Satake characteristic of a translation groupoid X x| K with
/// chi(X) given: chi / |K|.
inline Rational chi_es(const Integer& chi_value, const Integer& k_order) {
  if (k_order < 1) throw InvalidInput("group order must be positive");
  return Rational(chi_value, k_order);
}

// ---------------------------------------------------------------------------
// Wreath fixed sets

/// chi((M^n)^{<elements>}) for any set of wreath-group elements, via the
/// orbit decomposition: the product over orbits of chi(M^{K_b}) where K_b
/// is the basepoint-component image of the orbit stabilizer (generated by
/// the Schreier-generator images).
inline Integer wreath_fixed_chi_elements(const GSpaceDescriptor& desc,
                                         const WreathGroup& w,
                                         std::span<const int> elements) {
  if (desc.group().order() != w.base().order())
    throw GroupMismatch("descriptor group does not match the wreath base");
  PermHom ph;
  ph.degree = w.copies();
  ph.gen_images.reserve(elements.size());
  for (int flat : elements) ph.gen_images.push_back(w.perm_of(flat));
  std::vector<int> images(elements.begin(), elements.end());
  Integer product = 1;
  for (const OrbitData& orbit : orbit_structure(ph)) {
    std::vector<int> component_images;
    component_images.reserve(orbit.schreier_gens.size());
    for (const auto& word : orbit.schreier_gens)
      component_images.push_back(
          detail::component_at_basepoint(w, images, word, orbit.points[0]));
    product *= desc.chi_generated(component_images);
    if (product == 0) return 0;
  }
  return product;
}

/// chi((M^n)^{<theta>}) for a homomorphism into the wreath group.
inline Integer wreath_fixed_chi(const GSpaceDescriptor& desc,
                                const WreathGroup& w,
                                const Homomorphism& theta) {
  return wreath_fixed_chi_elements(desc, w, theta.images);
}

/// Literal oracle: counts the tuples of X^n fixed by every generator image
/// under (g_1..g_n, s)(x_1..x_n) = (g_1 x_{s^-1(1)}, ..., g_n x_{s^-1(n)}).
inline Integer gset_wreath_oracle(const FiniteGSet& x, const FiniteGroup& g,
                                  const WreathGroup& w,
                                  const Homomorphism& theta,
                                  const Caps& caps = default_caps()) {
  if (g.order() != w.base().order())
    throw GroupMismatch("G-set group does not match the wreath base");
  const int n = w.copies();
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= x.size;
    if (total > caps.gset_points)
      throw SizeCapExceeded("|X|^n exceeds the oracle scan cap");
  }
  if (x.size == 0) return 0;
  struct Gen {
    std::vector<int> components;
    Perm s_inv;
  };
  std::vector<Gen> gens;
  for (int flat : theta.images) {
    WreathElement e = w.decode(flat);
    gens.push_back(Gen{std::move(e.components), perm_inverse(e.perm)});
  }
  std::vector<int> tuple(n, 0);
  Integer count = 0;
  while (true) {
    bool fixed = true;
    for (const Gen& gen : gens) {
      for (int i = 0; i < n && fixed; ++i)
        if (tuple[i] != x.action[gen.components[i]][tuple[gen.s_inv[i]]])
          fixed = false;
      if (!fixed) break;
    }
    if (fixed) ++count;
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] == x.size - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return count;
}

}  // namespace orbichi

#endif
