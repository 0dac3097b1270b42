#ifndef ORBICHI_SECTORS_HPP
#define ORBICHI_SECTORS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/caps.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/gamma_sets.hpp"
#include "orbichi/group.hpp"
#include "orbichi/gspace.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/rational.hpp"
#include "orbichi/wreath.hpp"

namespace orbichi {

/// The two multiplicative invariants this library extends: the Euler
/// characteristic of the orbit space and the Euler-Satake characteristic.
enum class Invariant { Euler, EulerSatake };

inline const char* invariant_name(Invariant inv) {
  return inv == Invariant::Euler ? "euler" : "euler_satake";
}

/// One sector's contribution to an extension.
struct SectorTerm {
  std::vector<int> rep_images;  // class representative image tuple
  std::int64_t class_size = 0;
  Integer chi_fixed = 0;         // chi of the sector's fixed set
  Integer automorphism_order = 0;
  Rational value = 0;            // the invariant applied to this sector
};

struct ExtensionResult {
  Rational value = 0;
  std::vector<SectorTerm> terms;
  std::uint64_t homs_enumerated = 0;
  std::uint64_t classes = 0;
};

// ---------------------------------------------------------------------------
// Extension over conjugacy classes of homomorphisms into G

/// Sum of the invariant over all sectors: conjugacy classes of
/// homomorphisms from the source into the descriptor group, each carrying
/// its fixed set and centralizer. Zero-chi sectors are kept in the
/// breakdown and contribute zero.
inline ExtensionResult gamma_extension(Invariant inv,
                                       const GroupPresentation& src,
                                       const GSpaceDescriptor& desc,
                                       const Caps& caps = default_caps()) {
  const FiniteGroup& g = desc.group();
  auto homs = enumerate_homs(src, g, caps);
  auto classes = hom_conjugacy_classes(homs, g);
  ExtensionResult out;
  out.homs_enumerated = homs.size();
  out.classes = classes.size();
  for (const HomClass& cls : classes) {
    SectorTerm term;
    term.rep_images = cls.rep.images;
    term.class_size = cls.size;
    term.chi_fixed = desc.chi_generated(cls.rep.images);
    term.automorphism_order = cls.centralizer_order;
    if (inv == Invariant::EulerSatake) {
      term.value = Rational(term.chi_fixed, cls.centralizer_order);
    } else {
      Subgroup c = centralizer(g, cls.rep.images);
      term.value = chi_quotient(desc, c, cls.rep.images);
    }
    out.value += term.value;
    out.terms.push_back(std::move(term));
  }
  return out;
}

/// chi((M^n)^{<(g,s)>}) for one structured wreath element, without the
/// flat group: the product over cycles of s of chi(M^{<cycle product>}),
/// the cycle product at basepoint b being g_b g_{s^-1(b)} ... around the
/// cycle.
inline Integer wreath_element_fixed_chi(const GSpaceDescriptor& desc,
                                        const std::vector<int>& components,
                                        const Perm& perm) {
  const FiniteGroup& g = desc.group();
  const int n = static_cast<int>(perm.size());
  Perm inv = perm_inverse(perm);
  std::vector<char> done(n, 0);
  Integer product = 1;
  for (int b = 0; b < n; ++b) {
    if (done[b]) continue;
    int cycle_product = g.identity();
    int i = b;
    do {
      done[i] = 1;
      cycle_product = g.mul(cycle_product, components[i]);
      i = inv[i];
    } while (i != b);
    int gens[] = {cycle_product};
    product *= desc.chi_generated(gens);
    if (product == 0) return 0;
  }
  return product;
}

/// Extension on the n-th wreath symmetric product for the trivial source:
/// a single sector with centralizer the whole wreath group. Works without
/// materializing the wreath multiplication table, so large |G|^n n! stay
/// reachable; the element scan is budgeted against the search cap.
inline ExtensionResult trivial_source_wreath_extension(
    Invariant inv, const GSpaceDescriptor& desc, int n, const Caps& caps) {
  const FiniteGroup& g = desc.group();
  Integer wreath_order = factorial(n);
  for (int i = 0; i < n; ++i) wreath_order *= g.order();
  ExtensionResult out;
  out.homs_enumerated = 1;
  out.classes = 1;
  SectorTerm term;
  term.class_size = 1;
  term.automorphism_order = wreath_order;
  Integer chi_power = 1;
  for (int i = 0; i < n; ++i) chi_power *= desc.chi_whole();
  term.chi_fixed = chi_power;
  if (inv == Invariant::EulerSatake) {
    term.value = Rational(chi_power, wreath_order);
  } else {
    if (wreath_order > caps.search_nodes)
      throw SearchCapExceeded("wreath element scan exceeds the node budget");
    // Burnside over the whole wreath group, elements visited structurally.
    Integer total = 0;
    std::vector<int> components(n, 0);
    const std::int64_t nfact = factorial_i64(n);
    for (std::int64_t pr = 0; pr < nfact; ++pr) {
      Perm perm = perm_unrank(n, pr);
      std::fill(components.begin(), components.end(), 0);
      while (true) {
        total += wreath_element_fixed_chi(desc, components, perm);
        int pos = n - 1;
        while (pos >= 0 && components[pos] == g.order() - 1)
          components[pos--] = 0;
        if (pos < 0) break;
        ++components[pos];
      }
    }
    Rational value(total, wreath_order);
    as_integer(value, "symmetric-product orbit-space Euler characteristic");
    term.value = value;
  }
  out.value = term.value;
  out.terms.push_back(std::move(term));
  return out;
}

namespace detail {

/// Euler value of one wreath sector: chi of the fixed set modulo the
/// centralizer action, by the Burnside count over the centralizer.
inline Rational wreath_euler_sector_value(const GSpaceDescriptor& desc,
                                          const WreathGroup& w,
                                          const std::vector<int>& rep_images,
                                          const Subgroup& centralizer_sub) {
  Integer total = 0;
  std::vector<int> extended(rep_images);
  extended.push_back(0);
  for (int c : centralizer_sub.elements) {
    extended.back() = c;
    total += wreath_fixed_chi_elements(desc, w, extended);
  }
  Rational value(total, centralizer_sub.order());
  as_integer(value, "wreath sector orbit-space Euler characteristic");
  return value;
}

}  // namespace detail

/// Extension evaluated on the n-th wreath symmetric product: the target is
/// wreath(G, n) and fixed sets are computed by the orbit-product rule. For
/// n = 0 the value is 1 by the empty-product convention. The Euler-Satake
/// run re-derives the total from the sum over all homomorphisms and throws
/// on disagreement.
inline ExtensionResult gamma_extension_wreath(Invariant inv,
                                              const GroupPresentation& src,
                                              const GSpaceDescriptor& desc,
                                              int n,
                                              const Caps& caps = default_caps()) {
  ExtensionResult out;
  if (n == 0) {
    out.value = 1;
    SectorTerm term;
    term.class_size = 1;
    term.chi_fixed = 1;
    term.automorphism_order = 1;
    term.value = 1;
    out.terms.push_back(std::move(term));
    out.classes = 1;
    return out;
  }
  if (src.kind == PresetKind::Trivial)
    return trivial_source_wreath_extension(inv, desc, n, caps);
  WreathGroup w = wreath_product(desc.group(), n, caps);
  auto homs = enumerate_homs(src, w.group(), caps);
  auto classes = hom_conjugacy_classes(homs, w.group());
  out.homs_enumerated = homs.size();
  out.classes = classes.size();
  for (const HomClass& cls : classes) {
    SectorTerm term;
    term.rep_images = cls.rep.images;
    term.class_size = cls.size;
    term.chi_fixed = wreath_fixed_chi_elements(desc, w, cls.rep.images);
    term.automorphism_order = cls.centralizer_order;
    if (inv == Invariant::EulerSatake) {
      term.value = Rational(term.chi_fixed, cls.centralizer_order);
    } else {
      Subgroup c = centralizer(w.group(), cls.rep.images);
      term.value =
          detail::wreath_euler_sector_value(desc, w, cls.rep.images, c);
    }
    out.value += term.value;
    out.terms.push_back(std::move(term));
  }
  if (inv == Invariant::EulerSatake) {
    // The class sum must agree with the sum over every homomorphism,
    // each fixed set computed from scratch.
    Integer all_hom_chi_total = 0;
    for (const Homomorphism& theta : homs)
      all_hom_chi_total += wreath_fixed_chi_elements(desc, w, theta.images);
    Rational recheck(all_hom_chi_total, Integer(w.group().order()));
    if (recheck != out.value)
      throw Error("class sum and all-homomorphism sum disagree: " +
                  rational_to_string(out.value) + " vs " +
                  rational_to_string(recheck));
  }
  return out;
}

/// Extension attached to an isomorphism class of finite group actions,
/// computed from the wreath side: sum over hom classes into wreath(G, n)
/// whose underlying permutation class matches. Works for arbitrary (not
/// necessarily transitive) classes.
inline ExtensionResult gamma_set_extension_bruteforce(
    Invariant inv, const GroupPresentation& src, const GammaSetClass& cls,
    const GSpaceDescriptor& desc, const Caps& caps = default_caps()) {
  ExtensionResult out;
  const int n = cls.degree;
  if (n == 0) {
    out.value = 1;
    return out;
  }
  WreathGroup w = wreath_product(desc.group(), n, caps);
  auto homs = enumerate_homs(src, w.group(), caps);
  auto hom_classes = hom_conjugacy_classes(homs, w.group());
  out.homs_enumerated = homs.size();
  for (const HomClass& hc : hom_classes) {
    if (gamma_set_class(underlying_permutation_hom(w, hc.rep)) != cls) continue;
    SectorTerm term;
    term.rep_images = hc.rep.images;
    term.class_size = hc.size;
    term.chi_fixed = wreath_fixed_chi_elements(desc, w, hc.rep.images);
    term.automorphism_order = hc.centralizer_order;
    if (inv == Invariant::EulerSatake) {
      term.value = Rational(term.chi_fixed, hc.centralizer_order);
    } else {
      Subgroup c = centralizer(w.group(), hc.rep.images);
      term.value =
          detail::wreath_euler_sector_value(desc, w, hc.rep.images, c);
    }
    out.value += term.value;
    out.terms.push_back(std::move(term));
    ++out.classes;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Direct path for finite sources

namespace detail {

/// Applies (u, g) to a homomorphism tuple rho: H -> G given as images
/// aligned with h.elements: result(x) = g^-1 rho(u x u^-1) g.
inline std::vector<int> rho_act(const FiniteGroup& gamma, const Subgroup& h,
                                const std::map<int, int>& pos_in_h,
                                const FiniteGroup& g,
                                const std::vector<int>& rho, int u, int gg) {
  std::vector<int> result(rho.size());
  int gg_inv = g.inv(gg);
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    int conj = gamma.conjugate(u, h.elements[i]);
    result[i] = g.mul(g.mul(gg_inv, rho[pos_in_h.at(conj)]), gg);
  }
  return result;
}

}  // namespace detail

/// One orbit of HOM(H, G) under the normalizer-times-G action, with its
/// stabilizer data.
struct RhoOrbit {
  std::vector<int> rep;            // lex-min images, aligned with h.elements
  std::int64_t orbit_size = 0;
  std::int64_t stabilizer_order = 0;  // |T_rho| inside N x G
  std::int64_t automorphism_order = 0;  // |T_rho| / |H|
  std::vector<std::pair<int, int>> stabilizer_pairs;  // the members of T_rho
};

/// Enumerates HOM(H, G)/(N_Gamma(H) x G) for a finite source group.
inline std::vector<RhoOrbit> rho_orbits(const FiniteGroup& gamma,
                                        const Subgroup& h,
                                        const FiniteGroup& g,
                                        const Caps& caps = default_caps()) {
  Subgroup n = normalizer(gamma, h);
  std::map<int, int> pos_in_h;
  for (std::size_t i = 0; i < h.elements.size(); ++i)
    pos_in_h[h.elements[i]] = static_cast<int>(i);
  FiniteGroup hh = subgroup_as_group(gamma, h);
  auto homs = enumerate_homs(finite_presentation(hh), g, caps);
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < homs.size(); ++i)
    index_of[homs[i].images] = static_cast<int>(i);
  std::vector<char> claimed(homs.size(), 0);
  std::vector<RhoOrbit> orbits;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (claimed[i]) continue;
    RhoOrbit orbit;
    orbit.rep = homs[i].images;
    for (int u : n.elements) {
      for (int gg = 0; gg < g.order(); ++gg) {
        auto moved = detail::rho_act(gamma, h, pos_in_h, g, homs[i].images, u, gg);
        auto it = index_of.find(moved);
        if (it == index_of.end())
          throw Error("homomorphism set is not closed under the action");
        if (!claimed[it->second]) {
          claimed[it->second] = 1;
          ++orbit.orbit_size;
        }
        if (moved == homs[i].images) orbit.stabilizer_pairs.emplace_back(u, gg);
      }
    }
    orbit.stabilizer_order =
        static_cast<std::int64_t>(orbit.stabilizer_pairs.size());
    if (orbit.stabilizer_order % h.order() != 0)
      throw Error("stabilizer order not divisible by |H|");
    orbit.automorphism_order = orbit.stabilizer_order / h.order();
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

/// Direct evaluation of the extension attached to the transitive action on
/// Gamma/H for a finite source group, summing over
/// HOM(H,G)/(N_Gamma(H) x G) with the automorphism group H \ T_rho acting
/// on the fixed set through its G component.
inline ExtensionResult gamma_set_extension_direct(
    Invariant inv, const FiniteGroup& gamma, const Subgroup& h,
    const GSpaceDescriptor& desc, const Caps& caps = default_caps()) {
  ExtensionResult out;
  for (const RhoOrbit& orbit : rho_orbits(gamma, h, desc.group(), caps)) {
    out.homs_enumerated += orbit.orbit_size;
    SectorTerm term;
    term.rep_images = orbit.rep;
    term.class_size = orbit.orbit_size;
    term.chi_fixed = desc.chi_generated(orbit.rep);
    term.automorphism_order = orbit.automorphism_order;
    if (inv == Invariant::EulerSatake) {
      term.value = Rational(term.chi_fixed * Integer(h.order()),
                            Integer(orbit.stabilizer_order));
    } else {
      // chi(M^{<rho>} / Aut): the automorphism cosets act through their G
      // factor, so Burnside over T_rho with each (u, g) contributing the
      // g-constrained fixed set.
      Integer total = 0;
      std::vector<int> extended(orbit.rep);
      extended.push_back(0);
      for (auto [u, gg] : orbit.stabilizer_pairs) {
        extended.back() = gg;
        total += desc.chi_generated(extended);
      }
      Rational value(total, Integer(orbit.stabilizer_order));
      as_integer(value, "sector orbit-space Euler characteristic");
      term.value = value;
    }
    out.value += term.value;
    out.terms.push_back(std::move(term));
    ++out.classes;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Irreducible decomposition and the exponential-identity point values

/// One group of isomorphic irreducible constituents of a bundle: the orbit
/// count for a fixed (stabilizer class, restricted hom class) pair.
struct IrreducibleRecord {
  GammaSetClass stabilizer_class;  // transitive class of the orbit action
  int orbit_size = 0;
  std::vector<int> rho_class;  // restricted images, minimized under G-conj
  int multiplicity = 0;
};

struct IrreducibleDecomposition {
  int degree = 0;
  std::vector<IrreducibleRecord> records;
};

namespace detail {
inline std::vector<int> minimize_under_conjugation(const FiniteGroup& g,
                                                   std::vector<int> images) {
  std::vector<int> best = images;
  std::vector<int> conj(images.size());
  for (int c = 0; c < g.order(); ++c) {
    for (std::size_t k = 0; k < images.size(); ++k)
      conj[k] = g.conjugate(c, images[k]);
    if (conj < best) best = conj;
  }
  return best;
}
}  // namespace detail

/// Splits a wreath-valued homomorphism into its irreducible constituents,
/// one record per (orbit iso-class, restricted hom class) with
/// multiplicities. sum(orbit_size * multiplicity) == degree.
inline IrreducibleDecomposition eta_split(const WreathGroup& w,
                                          const GroupPresentation& src,
                                          const Homomorphism& theta) {
  IrreducibleDecomposition out;
  out.degree = w.copies();
  PermHom ph = underlying_permutation_hom(w, theta);
  std::map<std::pair<GammaSetClass, std::vector<int>>, int> buckets;
  std::map<std::pair<GammaSetClass, std::vector<int>>, int> sizes;
  for (const OrbitData& orbit : orbit_structure(ph)) {
    // The orbit's own transitive class.
    PermHom restricted_action;
    restricted_action.degree = static_cast<int>(orbit.points.size());
    std::map<int, int> local;
    for (std::size_t i = 0; i < orbit.points.size(); ++i)
      local[orbit.points[i]] = static_cast<int>(i);
    for (const Perm& p : ph.gen_images) {
      Perm q(restricted_action.degree);
      for (std::size_t i = 0; i < orbit.points.size(); ++i)
        q[i] = local.at(p[orbit.points[i]]);
      restricted_action.gen_images.push_back(std::move(q));
    }
    RestrictedHom rho = restrict_to_orbit(w, src, theta, orbit);
    auto key = std::make_pair(
        gamma_set_class(restricted_action),
        detail::minimize_under_conjugation(w.base(), rho.images));
    buckets[key] += 1;
    sizes[key] = rho.orbit_size;
  }
  for (auto& [key, mult] : buckets) {
    IrreducibleRecord rec;
    rec.stabilizer_class = key.first;
    rec.rho_class = key.second;
    rec.orbit_size = sizes[key];
    rec.multiplicity = mult;
    out.records.push_back(std::move(rec));
  }
  return out;
}

/// The two point values of the exponential identity at degree n:
///   psi(n)  = sum over all homs into wreath(G, n) of chi / |G|^n
///   phi(n)  = the same sum restricted to transitive underlying actions
/// with the conventions psi(0) = 1 and phi(0) = 0.
struct ExpIdentityPoint {
  Rational phi_transitive = 0;
  Rational psi_all = 0;
  std::uint64_t homs_enumerated = 0;
};

inline ExpIdentityPoint psi_phi_values(const GroupPresentation& src,
                                       const GSpaceDescriptor& desc, int n,
                                       const Caps& caps = default_caps()) {
  ExpIdentityPoint out;
  if (n == 0) {
    out.psi_all = 1;
    return out;
  }
  WreathGroup w = wreath_product(desc.group(), n, caps);
  Integer chi_all = 0, chi_transitive = 0;
  std::uint64_t homs = 0;
  for_each_hom(
      src, w.group(),
      [&](const std::vector<int>& images) {
        ++homs;
        Integer chi = wreath_fixed_chi_elements(desc, w, images);
        chi_all += chi;
        PermHom ph;
        ph.degree = n;
        for (int flat : images) ph.gen_images.push_back(w.perm_of(flat));
        if (is_transitive(ph)) chi_transitive += chi;
      },
      caps);
  Integer gn = 1;
  for (int i = 0; i < n; ++i) gn *= desc.group().order();
  out.psi_all = Rational(chi_all, gn);
  out.phi_transitive = Rational(chi_transitive, gn);
  out.homs_enumerated = homs;
  return out;
}

inline Rational psi_value(const GroupPresentation& src,
                          const GSpaceDescriptor& desc, int n,
                          const Caps& caps = default_caps()) {
  return psi_phi_values(src, desc, n, caps).psi_all;
}

inline Rational phi_eta_value(const GroupPresentation& src,
                              const GSpaceDescriptor& desc, int n,
                              const Caps& caps = default_caps()) {
  return psi_phi_values(src, desc, n, caps).phi_transitive;
}

}  // namespace orbichi

#endif
