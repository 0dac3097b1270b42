#ifndef ORBICHI_IDENTITIES_HPP
#define ORBICHI_IDENTITIES_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/caps.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/gamma_sets.hpp"
#include "orbichi/group.hpp"
#include "orbichi/gspace.hpp"
#include "orbichi/index_subgroups.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/rational.hpp"
#include "orbichi/sectors.hpp"
#include "orbichi/series.hpp"
#include "orbichi/wreath.hpp"

namespace orbichi {

struct EnumStats {
  std::uint64_t homs = 0;
  std::uint64_t classes = 0;

  void absorb(const ExtensionResult& r) {
    homs += r.homs_enumerated;
    classes += r.classes;
  }
};

namespace detail {

/// Euler-Satake extension value by the all-homomorphism sum
/// (1/|G|) sum_theta chi(M^{<theta>}); equals the per-class sum.
inline Rational es_extension_value(const GroupPresentation& src,
                                   const GSpaceDescriptor& desc,
                                   const Caps& caps, EnumStats* stats) {
  Integer total = 0;
  std::uint64_t homs = 0;
  for_each_hom(
      src, desc.group(),
      [&](const std::vector<int>& images) {
        ++homs;
        total += desc.chi_generated(images);
      },
      caps);
  if (stats) stats->homs += homs;
  return Rational(total, Integer(desc.group().order()));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Left-hand side: the wreath symmetric product series

/// sum_n q^n (extension of the invariant on M^n x| G(S_n)), coefficient 0
/// fixed to 1 by the empty-product convention.
inline RationalSeries lhs_series(Invariant inv, const GroupPresentation& src,
                                 const GSpaceDescriptor& desc, int truncation,
                                 const Caps& caps = default_caps(),
                                 EnumStats* stats = nullptr) {
  RationalSeries out(truncation);
  out.set_coeff(0, 1);
  for (int n = 1; n <= truncation; ++n) {
    ExtensionResult r = gamma_extension_wreath(inv, src, desc, n, caps);
    if (stats) stats->absorb(r);
    out.set_coeff(n, r.value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Right-hand sides

/// Euler product form: prod_r (1 - q^r)^(-e_r) with e_r the sum of the
/// transitive-class extensions over index-r subgroup classes. Abelian
/// sources use the iso-type shortcut (every finite-index subgroup of Z^d
/// is Z^d); free sources go through the brute-force class path; finite
/// sources through the direct path.
inline RationalSeries rhs_euler_product(const GroupPresentation& src,
                                        const GSpaceDescriptor& desc,
                                        int truncation,
                                        const Caps& caps = default_caps(),
                                        EnumStats* stats = nullptr) {
  std::vector<RationalSeries> factors;
  switch (src.kind) {
    case PresetKind::Trivial:
    case PresetKind::FreeAbelian: {
      ExtensionResult ext = gamma_extension(Invariant::Euler, src, desc, caps);
      if (stats) stats->absorb(ext);
      for (int r = 1; r <= truncation; ++r) {
        Integer count = count_index_n_subgroups(src, r, caps);
        if (count == 0) continue;
        factors.push_back(
            geom_power(r, Rational(count) * ext.value, truncation));
      }
      break;
    }
    case PresetKind::Free: {
      for (int r = 1; r <= truncation; ++r) {
        Rational exponent = 0;
        for (const GammaSetClass& cls :
             transitive_gamma_set_classes(src, r, caps)) {
          ExtensionResult ext = gamma_set_extension_bruteforce(
              Invariant::Euler, src, cls, desc, caps);
          if (stats) stats->absorb(ext);
          exponent += ext.value;
        }
        if (exponent != 0) factors.push_back(geom_power(r, exponent, truncation));
      }
      break;
    }
    case PresetKind::Finite: {
      const FiniteGroup& gamma = *src.finite_model;
      auto subs = all_subgroups(gamma, caps);
      auto classes = subgroup_conjugacy_classes(gamma, subs);
      for (const auto& cls : classes) {
        const Subgroup& rep = subs[cls[0]];
        int r = gamma.order() / rep.order();
        if (r > truncation) continue;
        ExtensionResult ext =
            gamma_set_extension_direct(Invariant::Euler, gamma, rep, desc, caps);
        if (stats) stats->absorb(ext);
        if (ext.value != 0) factors.push_back(geom_power(r, ext.value, truncation));
      }
      break;
    }
    case PresetKind::Presented:
      throw UnsupportedSource(
          "Euler product needs subgroup data; general presented sources are "
          "not supported");
  }
  return product_family(factors, truncation);
}

/// Exponential form for the Euler-Satake extension:
///   exp( sum_n q^n/n * [ sum over index-n subgroups of the subgroup's
///   Euler-Satake extension value ] ).
inline RationalSeries rhs_es_exp(const GroupPresentation& src,
                                 const GSpaceDescriptor& desc, int truncation,
                                 const Caps& caps = default_caps(),
                                 EnumStats* stats = nullptr) {
  RationalSeries inner(truncation);
  for (int n = 1; n <= truncation; ++n) {
    Rational total = 0;
    switch (src.kind) {
      case PresetKind::Trivial:
      case PresetKind::FreeAbelian: {
        Integer count = count_index_n_subgroups(src, n, caps);
        if (count != 0)
          total = Rational(count) *
                  detail::es_extension_value(src, desc, caps, stats);
        break;
      }
      case PresetKind::Free: {
        Integer count = hall_subgroup_count(src.generator_count, n);
        int rank = src.generator_count * n - n + 1;
        total = Rational(count) * detail::es_extension_value(
                                      free_presentation(rank), desc, caps, stats);
        break;
      }
      case PresetKind::Finite: {
        const FiniteGroup& gamma = *src.finite_model;
        for (const Subgroup& h : all_subgroups(gamma, caps)) {
          if (gamma.order() / h.order() != n) continue;
          total += detail::es_extension_value(
              finite_presentation(subgroup_as_group(gamma, h)), desc, caps,
              stats);
        }
        break;
      }
      case PresetKind::Presented:
        throw UnsupportedSource(
            "Euler-Satake exponential needs subgroup data; general presented "
            "sources are not supported");
    }
    inner.set_coeff(n, total / n);
  }
  return exp_series(inner);
}

/// The master product over subgroup classes (H) and hom orbits [rho]:
/// each factor is the single-sector symmetric-product series
///   sum_n q^(|Gamma/H| n) phi((M^<rho>)^n x| Aut(S_n)),
/// which collapses to a geometric power for the Euler invariant and to an
/// exponential with the orbifold-cover degree for Euler-Satake. Supported
/// for abelian presets and finite sources.
inline RationalSeries rhs_master_product(Invariant inv,
                                         const GroupPresentation& src,
                                         const GSpaceDescriptor& desc,
                                         int truncation,
                                         const Caps& caps = default_caps(),
                                         EnumStats* stats = nullptr) {
  const FiniteGroup& g = desc.group();
  RationalSeries out = RationalSeries::one(truncation);
  switch (src.kind) {
    case PresetKind::Trivial:
    case PresetKind::FreeAbelian: {
      // Every finite-index subgroup is isomorphic to the source itself and
      // the normalizer action is trivial, so [rho] classes are plain
      // G-conjugacy classes of HOM(src, G) and the cover degree is the
      // index.
      auto homs = enumerate_homs(src, g, caps);
      auto classes = hom_conjugacy_classes(homs, g);
      if (stats) {
        stats->homs += homs.size();
        stats->classes += classes.size();
      }
      for (int r = 1; r <= truncation; ++r) {
        Integer count = count_index_n_subgroups(src, r, caps);
        if (count == 0) continue;
        for (const HomClass& cls : classes) {
          Integer chi = desc.chi_generated(cls.rep.images);
          if (inv == Invariant::Euler) {
            Subgroup c = centralizer(g, cls.rep.images);
            Rational sector = chi_quotient(desc, c, cls.rep.images);
            out = out * geom_power(r, Rational(count) * sector, truncation);
          } else {
            Rational sector(chi, cls.centralizer_order);
            RationalSeries arg(truncation);
            if (r <= truncation)
              arg.set_coeff(r, Rational(count) * sector / r);
            out = out * exp_series(arg);
          }
        }
      }
      break;
    }
    case PresetKind::Finite: {
      const FiniteGroup& gamma = *src.finite_model;
      auto subs = all_subgroups(gamma, caps);
      auto sub_classes = subgroup_conjugacy_classes(gamma, subs);
      for (const auto& sub_cls : sub_classes) {
        const Subgroup& h = subs[sub_cls[0]];
        int r = gamma.order() / h.order();
        if (r > truncation) continue;
        for (const RhoOrbit& orbit : rho_orbits(gamma, h, g, caps)) {
          if (stats) ++stats->classes;
          Integer chi = desc.chi_generated(orbit.rep);
          if (inv == Invariant::Euler) {
            Integer total = 0;
            std::vector<int> extended(orbit.rep);
            extended.push_back(0);
            for (auto [u, gg] : orbit.stabilizer_pairs) {
              extended.back() = gg;
              total += desc.chi_generated(extended);
            }
            Rational sector(total, Integer(orbit.stabilizer_order));
            as_integer(sector, "sector orbit-space Euler characteristic");
            out = out * geom_power(r, sector, truncation);
          } else {
            Integer cg = centralizer(g, orbit.rep).order();
            Integer cover = orbit.stabilizer_order / (cg * h.order());
            if (cover * cg * h.order() != orbit.stabilizer_order)
              throw Error("cover degree is not integral");
            RationalSeries arg(truncation);
            if (r <= truncation)
              arg.set_coeff(r, Rational(chi, cg) / Rational(cover));
            out = out * exp_series(arg);
          }
        }
      }
      break;
    }
    case PresetKind::Free:
    case PresetKind::Presented:
      throw UnsupportedSource(
          "master product needs normalizer-orbit data, available for abelian "
          "presets and finite sources only");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exponential identity (decomposable-functor form)

/// Phi(q) = sum phi(n) q^n / n! over transitive-constituent sectors.
inline RationalSeries dm_phi(const GroupPresentation& src,
                             const GSpaceDescriptor& desc, int truncation,
                             const Caps& caps = default_caps(),
                             EnumStats* stats = nullptr) {
  RationalSeries out(truncation);
  for (int n = 1; n <= truncation; ++n) {
    ExpIdentityPoint pt = psi_phi_values(src, desc, n, caps);
    if (stats) stats->homs += pt.homs_enumerated;
    out.set_coeff(n, pt.phi_transitive / Rational(factorial(n)));
  }
  return out;
}

/// Psi(q) = sum psi(n) q^n / n!; coefficientwise equal to the Euler-Satake
/// wreath series.
inline RationalSeries dm_psi(const GroupPresentation& src,
                             const GSpaceDescriptor& desc, int truncation,
                             const Caps& caps = default_caps(),
                             EnumStats* stats = nullptr) {
  RationalSeries out(truncation);
  out.set_coeff(0, 1);
  for (int n = 1; n <= truncation; ++n) {
    ExpIdentityPoint pt = psi_phi_values(src, desc, n, caps);
    if (stats) stats->homs += pt.homs_enumerated;
    out.set_coeff(n, pt.psi_all / Rational(factorial(n)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Abstract sector data (formula-level inputs for sources given only by
// their sector invariants, e.g. quotients by Lie groups)

struct AbstractRhoTerm {
  int orbit_size = 0;       // |Gamma/H|
  Rational value = 0;       // sector invariant on the [rho] sector
  Integer cover_degree = 1;  // |N^rho(H)/H|
};

struct AbstractClassEntry {
  std::string label;
  Integer count = 0;   // subgroups of this index in the class
  Rational value = 0;  // chi_(Gamma/H) or chi^ES_H, depending on use
  std::vector<AbstractRhoTerm> rho_terms;
};

struct AbstractSectorData {
  // by_index[n] lists the class entries at subgroup index n (1-based).
  std::map<int, std::vector<AbstractClassEntry>> by_index;

  void validate() const {
    for (const auto& [n, entries] : by_index) {
      if (n < 1) throw InvalidInput("abstract sector index must be >= 1");
      std::set<std::string> labels;
      for (const auto& e : entries) {
        if (e.count < 0) throw InvalidInput("negative subgroup count");
        if (!labels.insert(e.label).second)
          throw InvalidInput("duplicate label '" + e.label + "' at index " +
                             std::to_string(n));
      }
    }
  }
};

/// Euler product from abstract data: exponent at r = sum of per-class
/// values (one per conjugacy class).
inline RationalSeries rhs_euler_product_abstract(const AbstractSectorData& data,
                                                 int truncation) {
  data.validate();
  std::vector<RationalSeries> factors;
  for (const auto& [r, entries] : data.by_index) {
    if (r > truncation) continue;
    Rational exponent = 0;
    for (const auto& e : entries) exponent += e.value;
    if (exponent != 0) factors.push_back(geom_power(r, exponent, truncation));
  }
  return product_family(factors, truncation);
}

/// Euler-Satake exponential from abstract data: inner sum at n is
/// count * per-subgroup value, summed over classes.
inline RationalSeries rhs_es_exp_abstract(const AbstractSectorData& data,
                                          int truncation) {
  data.validate();
  RationalSeries inner(truncation);
  for (const auto& [n, entries] : data.by_index) {
    if (n > truncation) continue;
    Rational total = 0;
    for (const auto& e : entries) total += Rational(e.count) * e.value;
    inner.set_coeff(n, total / n);
  }
  return exp_series(inner);
}

/// Master product from abstract per-[rho] data. For the Euler invariant
/// each rho term's value is phi(M^<rho> x| Aut); for Euler-Satake it is
/// the covered sector value phi(M^<rho> x| C_G(rho)) with its cover degree.
inline RationalSeries rhs_master_product_abstract(Invariant inv,
                                                  const AbstractSectorData& data,
                                                  int truncation) {
  data.validate();
  RationalSeries out = RationalSeries::one(truncation);
  for (const auto& [n, entries] : data.by_index) {
    for (const auto& e : entries) {
      for (const auto& t : e.rho_terms) {
        if (t.orbit_size < 1) throw InvalidInput("rho term needs orbit size >= 1");
        if (t.orbit_size > truncation) continue;
        if (inv == Invariant::Euler) {
          out = out * geom_power(t.orbit_size, t.value, truncation);
        } else {
          if (t.cover_degree < 1) throw InvalidInput("cover degree must be >= 1");
          RationalSeries arg(truncation);
          arg.set_coeff(t.orbit_size, t.value / Rational(t.cover_degree));
          out = out * exp_series(arg);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

enum class TheoremTag {
  Euler,        // "thm-euler"
  EulerSatake,  // "thm-es"
  Product,      // "thm-product"
  ExpIdentity,  // "thm-dm"
  GammaSet,     // "thm-gammaset"
  MacDonald,    // "macdonald"
};

inline TheoremTag theorem_tag_from_string(const std::string& s) {
  if (s == "thm-euler") return TheoremTag::Euler;
  if (s == "thm-es") return TheoremTag::EulerSatake;
  if (s == "thm-product") return TheoremTag::Product;
  if (s == "thm-dm") return TheoremTag::ExpIdentity;
  if (s == "thm-gammaset") return TheoremTag::GammaSet;
  if (s == "macdonald") return TheoremTag::MacDonald;
  throw InvalidInput("unknown theorem tag '" + s + "'");
}

inline const char* theorem_tag_name(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::Euler: return "thm-euler";
    case TheoremTag::EulerSatake: return "thm-es";
    case TheoremTag::Product: return "thm-product";
    case TheoremTag::ExpIdentity: return "thm-dm";
    case TheoremTag::GammaSet: return "thm-gammaset";
    case TheoremTag::MacDonald: return "macdonald";
  }
  return "?";
}

struct VerificationReport {
  std::string theorem;
  int truncation = 0;
  std::vector<Rational> lhs, rhs;
  bool pass = false;
  std::optional<SeriesMismatch> mismatch;
  EnumStats stats;
  std::int64_t wall_ms = 0;
};

namespace detail {

inline VerificationReport finish_report(const std::string& theorem, int t,
                                        const RationalSeries& lhs,
                                        const RationalSeries& rhs,
                                        EnumStats stats,
                                        std::chrono::steady_clock::time_point start) {
  VerificationReport rep;
  rep.theorem = theorem;
  rep.truncation = t;
  for (int i = 0; i <= t; ++i) {
    rep.lhs.push_back(lhs.coeff(i));
    rep.rhs.push_back(rhs.coeff(i));
  }
  rep.mismatch = series_mismatch(lhs, rhs);
  rep.pass = !rep.mismatch.has_value();
  rep.stats = stats;
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

/// Right side of the gamma-set decomposition: the product over transitive
/// classes of degree d <= T of sum_r q^(rd) phi_{r copies}.
inline RationalSeries rhs_gamma_set_product(Invariant inv,
                                            const GroupPresentation& src,
                                            const GSpaceDescriptor& desc,
                                            int truncation, const Caps& caps,
                                            EnumStats* stats) {
  RationalSeries out = RationalSeries::one(truncation);
  for (int deg = 1; deg <= truncation; ++deg) {
    for (const GammaSetClass& cls :
         transitive_gamma_set_classes(src, deg, caps)) {
      RationalSeries factor(truncation);
      factor.set_coeff(0, 1);
      GammaSetClass accumulated;  // degree 0 = empty class
      for (int r = 1; r * deg <= truncation; ++r) {
        accumulated = disjoint_union_class(accumulated, cls);
        ExtensionResult ext =
            gamma_set_extension_bruteforce(inv, src, accumulated, desc, caps);
        if (stats) stats->absorb(ext);
        factor.set_coeff(r * deg, ext.value);
      }
      out = out * factor;
    }
  }
  return out;
}

}  // namespace detail

/// Checks Psi = exp(Phi) exactly.
inline VerificationReport verify_dm(const GroupPresentation& src,
                                    const GSpaceDescriptor& desc, int truncation,
                                    const Caps& caps = default_caps()) {
  auto start = std::chrono::steady_clock::now();
  EnumStats stats;
  RationalSeries phi = dm_phi(src, desc, truncation, caps, &stats);
  RationalSeries psi = dm_psi(src, desc, truncation, caps, &stats);
  return detail::finish_report("thm-dm", truncation, psi, exp_series(phi),
                               stats, start);
}

/// Builds both sides of the tagged identity and compares exactly.
inline VerificationReport verify(TheoremTag tag, Invariant inv,
                                 const GroupPresentation& src,
                                 const GSpaceDescriptor& desc, int truncation,
                                 const Caps& caps = default_caps()) {
  auto start = std::chrono::steady_clock::now();
  EnumStats stats;
  switch (tag) {
    case TheoremTag::Euler: {
      RationalSeries lhs =
          lhs_series(Invariant::Euler, src, desc, truncation, caps, &stats);
      RationalSeries rhs = rhs_euler_product(src, desc, truncation, caps, &stats);
      return detail::finish_report("thm-euler", truncation, lhs, rhs, stats,
                                   start);
    }
    case TheoremTag::EulerSatake: {
      RationalSeries lhs = lhs_series(Invariant::EulerSatake, src, desc,
                                      truncation, caps, &stats);
      RationalSeries rhs = rhs_es_exp(src, desc, truncation, caps, &stats);
      return detail::finish_report("thm-es", truncation, lhs, rhs, stats, start);
    }
    case TheoremTag::Product: {
      RationalSeries lhs = lhs_series(inv, src, desc, truncation, caps, &stats);
      RationalSeries rhs =
          rhs_master_product(inv, src, desc, truncation, caps, &stats);
      return detail::finish_report("thm-product", truncation, lhs, rhs, stats,
                                   start);
    }
    case TheoremTag::ExpIdentity:
      return verify_dm(src, desc, truncation, caps);
    case TheoremTag::GammaSet: {
      RationalSeries lhs = lhs_series(inv, src, desc, truncation, caps, &stats);
      RationalSeries rhs = detail::rhs_gamma_set_product(inv, src, desc,
                                                         truncation, caps,
                                                         &stats);
      return detail::finish_report("thm-gammaset", truncation, lhs, rhs, stats,
                                   start);
    }
    case TheoremTag::MacDonald: {
      if (src.kind != PresetKind::Trivial)
        throw InvalidInput("macdonald verification needs the trivial source");
      RationalSeries lhs = lhs_series(inv, src, desc, truncation, caps, &stats);
      RationalSeries rhs(truncation);
      if (inv == Invariant::Euler) {
        Subgroup whole = whole_group(desc.group());
        rhs = geom_power(1, chi_quotient(desc, whole), truncation);
      } else {
        RationalSeries arg(truncation);
        if (truncation >= 1)
          arg.set_coeff(1, Rational(Integer(desc.chi_whole()),
                                    Integer(desc.group().order())));
        rhs = exp_series(arg);
      }
      return detail::finish_report("macdonald", truncation, lhs, rhs, stats,
                                   start);
    }
  }
  throw InvalidInput("unknown theorem tag");
}

}  // namespace orbichi

#endif
