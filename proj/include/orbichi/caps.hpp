#ifndef ORBICHI_CAPS_HPP
#define ORBICHI_CAPS_HPP

#include <cstdint>

namespace orbichi {

/// Resource caps. All defaults are sized so the shipped verification
/// configurations run in seconds; callers may raise or lower them.
struct Caps {
  /// Largest group order make_group / wreath_product will materialize.
  std::int64_t order = 20160;
  /// Largest group handed to all_subgroups.
  std::int64_t subgroup_lattice = 384;
  /// Homomorphism search budget, counted in visited search-tree nodes.
  std::int64_t search_nodes = 100'000'000;
  /// Largest |X|^n scanned by the literal G-set fixed-point oracle.
  std::int64_t gset_points = 10'000'000;
  /// Hard ceiling on series truncation accepted from configs.
  int truncation_max = 8;
  /// Worker threads for the parallelizable enumerations (1 = serial).
  int threads = 1;
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace orbichi

#endif
