#ifndef ORBICHI_CONFIG_HPP
#define ORBICHI_CONFIG_HPP

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbichi/caps.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/gspace.hpp"
#include "orbichi/group.hpp"
#include "orbichi/identities.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/sectors.hpp"
#include "orbichi/wreath.hpp"

namespace orbichi {

using nlohmann::json;

inline Invariant invariant_from_string(const std::string& s) {
  if (s == "euler") return Invariant::Euler;
  if (s == "euler_satake") return Invariant::EulerSatake;
  throw InvalidInput("unknown invariant '" + s + "'");
}

/// Presentation schema:
///   {"kind":"trivial"|"free_abelian"|"free"|"presented",
///    "rank":d, "relators":[[...]]}
inline GroupPresentation parse_presentation(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw InvalidInput("presentation needs a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "trivial") return trivial_presentation();
  int rank = j.value("rank", 0);
  if (kind == "free_abelian") return free_abelian_presentation(rank);
  if (kind == "free") return free_presentation(rank);
  if (kind == "presented") {
    std::vector<std::vector<int>> relators;
    if (j.contains("relators"))
      relators = j.at("relators").get<std::vector<std::vector<int>>>();
    return make_presentation(rank, std::move(relators));
  }
  throw InvalidInput("unknown presentation kind '" + kind + "'");
}

/// A group built from config, with the permutation realization kept when
/// there is one (needed to resolve permutation-shaped descriptor keys).
struct LoadedGroup {
  FiniteGroup group;
  std::vector<Perm> element_perms;  // empty when not permutation-realized
  std::string description;
};

/// Group schema:
///   {"kind":"cyclic","n":k} | {"kind":"symmetric","n":k}
/// | {"kind":"permutation","generators":[[...],...]}
/// | {"kind":"table","mul":[[...]]}
/// | {"kind":"product","factors":[...]}
/// | {"kind":"wreath","base":{...},"copies":n}
inline LoadedGroup parse_group(const json& j, const Caps& caps = default_caps()) {
  if (!j.is_object() || !j.contains("kind"))
    throw InvalidInput("group needs a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  LoadedGroup out;
  if (kind == "cyclic") {
    int n = j.at("n").get<int>();
    out.group = cyclic_group(n, caps);
    out.description = "cyclic " + std::to_string(n);
  } else if (kind == "symmetric") {
    int n = j.at("n").get<int>();
    PermutationGroup pg = symmetric_group(n, caps);
    out.group = std::move(pg.group);
    out.element_perms = std::move(pg.element_perms);
    out.description = "symmetric " + std::to_string(n);
  } else if (kind == "permutation") {
    auto gens = j.at("generators").get<std::vector<Perm>>();
    PermutationGroup pg = permutation_group(gens, caps);
    out.group = std::move(pg.group);
    out.element_perms = std::move(pg.element_perms);
    out.description = "permutation group of order " +
                      std::to_string(out.group.order());
  } else if (kind == "table") {
    auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
    out.group = make_group(mul, {}, caps);
    out.description = "table group of order " + std::to_string(out.group.order());
  } else if (kind == "product") {
    auto factors = j.at("factors");
    if (!factors.is_array() || factors.empty())
      throw InvalidInput("product needs a nonempty factor list");
    LoadedGroup acc = parse_group(factors[0], caps);
    out = std::move(acc);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      LoadedGroup next = parse_group(factors[i], caps);
      out.group = direct_product(out.group, next.group, caps);
      out.element_perms.clear();
      out.description += " x " + next.description;
    }
  } else if (kind == "wreath") {
    LoadedGroup base = parse_group(j.at("base"), caps);
    int copies = j.at("copies").get<int>();
    WreathGroup w = wreath_product(base.group, copies, caps);
    out.group = w.group();
    out.description = "wreath(" + base.description + ", " +
                      std::to_string(copies) + ")";
  } else {
    throw InvalidInput("unknown group kind '" + kind + "'");
  }
  return out;
}

namespace detail {
inline int resolve_element(const json& item, const LoadedGroup& g) {
  if (item.is_number_integer()) {
    int idx = item.get<int>();
    if (idx < 0 || idx >= g.group.order())
      throw InvalidInput("element index out of range");
    return idx;
  }
  if (item.is_array()) {
    if (g.element_perms.empty())
      throw InvalidInput(
          "permutation-shaped element given for a group without a "
          "permutation realization");
    Perm p = item.get<Perm>();
    for (std::size_t i = 0; i < g.element_perms.size(); ++i)
      if (g.element_perms[i] == p) return static_cast<int>(i);
    throw InvalidInput("permutation is not an element of the group");
  }
  throw InvalidInput("descriptor generator must be an index or a permutation");
}
}  // namespace detail

/// Descriptor schema:
///   {"kind":"point"}
/// | {"kind":"fixed_chi_table","entries":[{"generators":[...],"chi":v},...]}
/// | {"kind":"finite_gset","size":m,"action":[[...]]}
inline GSpaceDescriptor parse_descriptor(const json& j, const LoadedGroup& g,
                                         const Caps& caps = default_caps()) {
  if (!j.is_object() || !j.contains("kind"))
    throw InvalidInput("descriptor needs a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "point") return point_descriptor(g.group, caps);
  if (kind == "fixed_chi_table") {
    std::vector<std::pair<std::vector<int>, long long>> entries;
    for (const auto& e : j.at("entries")) {
      std::vector<int> gens;
      for (const auto& item : e.at("generators"))
        gens.push_back(detail::resolve_element(item, g));
      entries.emplace_back(std::move(gens), e.at("chi").get<long long>());
    }
    return descriptor_from_table(g.group, entries, caps);
  }
  if (kind == "finite_gset") {
    FiniteGSet x;
    x.size = j.at("size").get<int>();
    x.action = j.at("action").get<std::vector<std::vector<int>>>();
    return descriptor_from_gset(x, g.group, caps);
  }
  throw InvalidInput("unknown descriptor kind '" + kind + "'");
}

/// Abstract sector data schema:
///   {"entries":[{"index":n,"label":s,"count":c,"value":"p/q",
///                "rho_terms":[{"orbit_size":r,"value":"p/q","degree":d}]}]}
inline AbstractSectorData parse_abstract_sector_data(const json& j) {
  AbstractSectorData data;
  for (const auto& e : j.at("entries")) {
    AbstractClassEntry entry;
    entry.label = e.at("label").get<std::string>();
    entry.count = Integer(e.at("count").get<long long>());
    entry.value = rational_from_string(e.at("value").get<std::string>());
    if (e.contains("rho_terms")) {
      for (const auto& t : e.at("rho_terms")) {
        AbstractRhoTerm term;
        term.orbit_size = t.at("orbit_size").get<int>();
        term.value = rational_from_string(t.at("value").get<std::string>());
        term.cover_degree = Integer(t.value("degree", 1));
        entry.rho_terms.push_back(std::move(term));
      }
    }
    data.by_index[e.at("index").get<int>()].push_back(std::move(entry));
  }
  data.validate();
  return data;
}

struct RunConfig {
  GroupPresentation gamma;
  LoadedGroup group;
  GSpaceDescriptor space;
  Invariant invariant = Invariant::EulerSatake;
  int truncation = 4;
  Caps caps;
  std::optional<AbstractSectorData> abstract;
};

inline Caps parse_caps(const json& j, Caps base) {
  if (j.contains("order")) base.order = j.at("order").get<std::int64_t>();
  if (j.contains("nodes")) base.search_nodes = j.at("nodes").get<std::int64_t>();
  if (j.contains("gset")) base.gset_points = j.at("gset").get<std::int64_t>();
  if (j.contains("subgroups"))
    base.subgroup_lattice = j.at("subgroups").get<std::int64_t>();
  if (j.contains("truncation_max"))
    base.truncation_max = j.at("truncation_max").get<int>();
  if (j.contains("threads")) base.threads = j.at("threads").get<int>();
  if (base.order < 1 || base.search_nodes < 1 || base.gset_points < 1 ||
      base.subgroup_lattice < 1 || base.truncation_max < 1 || base.threads < 1)
    throw InvalidInput("caps must be positive");
  return base;
}

inline RunConfig parse_run_config(const json& j, Caps base_caps = default_caps()) {
  RunConfig cfg;
  cfg.caps = j.contains("caps") ? parse_caps(j.at("caps"), base_caps) : base_caps;
  if (!j.contains("gamma")) throw InvalidInput("config needs 'gamma'");
  if (!j.contains("group")) throw InvalidInput("config needs 'group'");
  cfg.gamma = parse_presentation(j.at("gamma"));
  cfg.group = parse_group(j.at("group"), cfg.caps);
  if (j.contains("space"))
    cfg.space = parse_descriptor(j.at("space"), cfg.group, cfg.caps);
  else
    cfg.space = point_descriptor(cfg.group.group, cfg.caps);
  if (j.contains("invariant"))
    cfg.invariant = invariant_from_string(j.at("invariant").get<std::string>());
  cfg.truncation = j.value("truncation", 4);
  if (cfg.truncation < 1 || cfg.truncation > cfg.caps.truncation_max)
    throw InvalidInput("truncation must be in [1, " +
                       std::to_string(cfg.caps.truncation_max) + "]");
  if (j.contains("abstract"))
    cfg.abstract = parse_abstract_sector_data(j.at("abstract"));
  return cfg;
}

inline RunConfig load_run_config(const std::string& path,
                                 Caps base_caps = default_caps()) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput("config parse error: " + std::string(e.what()));
  }
  return parse_run_config(j, base_caps);
}

// ---------------------------------------------------------------------------
// Report serialization

inline json report_to_json(const VerificationReport& rep) {
  json j;
  j["theorem"] = rep.theorem;
  j["T"] = rep.truncation;
  json lhs = json::array(), rhs = json::array();
  for (const auto& c : rep.lhs) lhs.push_back(rational_to_string(c));
  for (const auto& c : rep.rhs) rhs.push_back(rational_to_string(c));
  j["lhs"] = std::move(lhs);
  j["rhs"] = std::move(rhs);
  j["verdict"] = rep.pass ? "pass" : "fail";
  if (rep.mismatch) {
    j["mismatch"] = {{"index", rep.mismatch->index},
                     {"lhs", rational_to_string(rep.mismatch->lhs)},
                     {"rhs", rational_to_string(rep.mismatch->rhs)}};
  }
  j["stats"] = {{"homs_enumerated", rep.stats.homs},
                {"classes", rep.stats.classes},
                {"wall_ms", rep.wall_ms}};
  return j;
}

inline json terms_to_json(const std::vector<SectorTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms) {
    arr.push_back({{"rep", t.rep_images},
                   {"class_size", t.class_size},
                   {"chi_fixed", t.chi_fixed.str()},
                   {"automorphisms", t.automorphism_order.str()},
                   {"value", rational_to_string(t.value)}});
  }
  return arr;
}

}  // namespace orbichi

#endif
