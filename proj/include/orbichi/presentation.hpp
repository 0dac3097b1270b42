#ifndef ORBICHI_PRESENTATION_HPP
#define ORBICHI_PRESENTATION_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "orbichi/caps.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/group.hpp"

namespace orbichi {

enum class PresetKind { Trivial, FreeAbelian, Free, Finite, Presented };

/// A finitely generated group given by generators and relators. Relator
/// words are sequences of nonzero integers; +i / -i denote generator i
/// (1-indexed) and its inverse.
struct GroupPresentation {
  PresetKind kind = PresetKind::Presented;
  int generator_count = 0;
  std::vector<std::vector<int>> relators;
  std::optional<FiniteGroup> finite_model;  // kind == Finite only

  bool is_abelian_preset() const {
    return kind == PresetKind::Trivial || kind == PresetKind::FreeAbelian;
  }
};

inline void validate_relators(int generator_count,
                              const std::vector<std::vector<int>>& relators) {
  for (const auto& w : relators)
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > generator_count)
        throw BadLetter("relator letter " + std::to_string(letter) +
                        " out of range for " +
                        std::to_string(generator_count) + " generators");
}

inline GroupPresentation trivial_presentation() {
  return GroupPresentation{PresetKind::Trivial, 0, {}, std::nullopt};
}

/// Z^d with the d(d-1)/2 commutator relators [i, j, -i, -j] for i < j.
inline GroupPresentation free_abelian_presentation(int d) {
  if (d < 1) throw InvalidInput("free abelian rank must be >= 1");
  GroupPresentation p{PresetKind::FreeAbelian, d, {}, std::nullopt};
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      p.relators.push_back({i, j, -i, -j});
  return p;
}

inline GroupPresentation free_presentation(int k) {
  if (k < 1) throw InvalidInput("free rank must be >= 1");
  return GroupPresentation{PresetKind::Free, k, {}, std::nullopt};
}

/// Literal presentation of a finite group from its Cayley table: one
/// generator per element, one length-3 relator per product.
inline GroupPresentation finite_presentation(const FiniteGroup& g) {
  GroupPresentation p{PresetKind::Finite, g.order(), {}, g};
  p.relators.reserve(static_cast<std::size_t>(g.order()) * g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      p.relators.push_back({i + 1, j + 1, -(g.mul(i, j) + 1)});
  return p;
}

inline GroupPresentation make_presentation(
    int generator_count, std::vector<std::vector<int>> relators) {
  if (generator_count < 0) throw InvalidInput("negative generator count");
  validate_relators(generator_count, relators);
  return GroupPresentation{PresetKind::Presented, generator_count,
                           std::move(relators), std::nullopt};
}

/// A homomorphism from a presentation into a finite group, stored as the
/// generator image tuple. The source presentation and target group are
/// carried by context.
struct Homomorphism {
  std::vector<int> images;

  bool operator==(const Homomorphism& o) const { return images == o.images; }
  bool operator<(const Homomorphism& o) const { return images < o.images; }
};

/// Left-to-right product of generator images along a word.
inline int evaluate_word(const std::vector<int>& word,
                         const std::vector<int>& images,
                         const FiniteGroup& g) {
  int x = g.identity();
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) > static_cast<int>(images.size()))
      throw BadLetter("word letter " + std::to_string(letter) +
                      " out of range");
    int img = images[std::abs(letter) - 1];
    x = g.mul(x, letter > 0 ? img : g.inv(img));
  }
  return x;
}

inline bool satisfies_relators(const GroupPresentation& p,
                               const std::vector<int>& images,
                               const FiniteGroup& g) {
  for (const auto& w : p.relators)
    if (evaluate_word(w, images, g) != g.identity()) return false;
  return true;
}

namespace detail {

/// Relators bucketed by the depth at which they become fully assigned.
inline std::vector<std::vector<const std::vector<int>*>> relators_by_depth(
    const GroupPresentation& p) {
  std::vector<std::vector<const std::vector<int>*>> buckets(
      p.generator_count + 1);
  for (const auto& w : p.relators) {
    int depth = 0;
    for (int letter : w) depth = std::max(depth, std::abs(letter));
    buckets[depth].push_back(&w);
  }
  return buckets;
}

template <typename Visitor>
void hom_dfs(const GroupPresentation& p, const FiniteGroup& g,
             const std::vector<std::vector<const std::vector<int>*>>& buckets,
             std::vector<int>& images, int depth, std::int64_t& nodes,
             std::int64_t node_cap, const Visitor& visit) {
  if (depth == p.generator_count) {
    visit(images);
    return;
  }
  for (int img = 0; img < g.order(); ++img) {
    if (++nodes > node_cap)
      throw SearchCapExceeded("homomorphism search exceeded " +
                              std::to_string(node_cap) + " nodes");
    images[depth] = img;
    bool ok = true;
    for (const auto* w : buckets[depth + 1])
      if (evaluate_word(*w, images, g) != g.identity()) {
        ok = false;
        break;
      }
    if (ok) hom_dfs(p, g, buckets, images, depth + 1, nodes, node_cap, visit);
  }
  images[depth] = 0;
}

}  // namespace detail

/// Visits every homomorphism P -> G in lexicographic order of the image
/// tuple. Relators are checked as soon as all their letters are assigned.
template <typename Visitor>
void for_each_hom(const GroupPresentation& p, const FiniteGroup& g,
                  const Visitor& visit, const Caps& caps = default_caps()) {
  auto buckets = detail::relators_by_depth(p);
  std::vector<int> images(p.generator_count, 0);
  std::int64_t nodes = 0;
  detail::hom_dfs(p, g, buckets, images, 0, nodes, caps.search_nodes, visit);
}

/// Materializes the homomorphism list. With caps.threads > 1 the search
/// splits on the first generator image; chunks are concatenated in order,
/// so the result is identical to the serial run.
inline std::vector<Homomorphism> enumerate_homs(
    const GroupPresentation& p, const FiniteGroup& g,
    const Caps& caps = default_caps()) {
  std::vector<Homomorphism> out;
  if (p.generator_count == 0 || caps.threads <= 1 || g.order() < 2 * caps.threads) {
    for_each_hom(
        p, g, [&](const std::vector<int>& images) { out.push_back({images}); },
        caps);
    return out;
  }
  const int nthreads = std::min(caps.threads, g.order());
  std::vector<std::vector<Homomorphism>> parts(nthreads);
  std::vector<std::thread> workers;
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex error_mutex;
  auto buckets = detail::relators_by_depth(p);
  for (int t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t]() {
      try {
        std::vector<int> images(p.generator_count, 0);
        std::int64_t nodes = 0;
        // Per-worker budget: conservative equal split.
        std::int64_t budget = caps.search_nodes / nthreads + 1;
        for (int first = t; first < g.order(); first += nthreads) {
          images[0] = first;
          bool ok = true;
          for (const auto* w : buckets[1])
            if (evaluate_word(*w, images, g) != g.identity()) {
              ok = false;
              break;
            }
          if (!ok) continue;
          detail::hom_dfs(p, g, buckets, images, 1, nodes, budget,
                          [&](const std::vector<int>& im) {
                            parts[t].push_back({im});
                          });
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed = true;
        error = e.what();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failed) throw SearchCapExceeded(error);
  // Interleaved first-image ranges: merge back into lexicographic order.
  std::vector<std::size_t> cursor(nthreads, 0);
  for (int first = 0; first < g.order(); ++first) {
    int t = first % nthreads;
    auto& part = parts[t];
    while (cursor[t] < part.size() && part[cursor[t]].images[0] == first)
      out.push_back(std::move(part[cursor[t]++]));
  }
  return out;
}

/// One conjugacy class of homomorphisms under simultaneous conjugation of
/// the image tuple. The representative is the lexicographically minimal
/// member; size * centralizer_order == |G|.
struct HomClass {
  Homomorphism rep;
  std::int64_t size = 0;
  std::int64_t centralizer_order = 0;
};

/// Partitions a complete, deduplicated hom list (as produced by
/// enumerate_homs) into conjugacy classes.
inline std::vector<HomClass> hom_conjugacy_classes(
    const std::vector<Homomorphism>& homs, const FiniteGroup& g) {
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < homs.size(); ++i)
    index_of[homs[i].images] = static_cast<int>(i);
  std::vector<char> claimed(homs.size(), 0);
  std::vector<HomClass> classes;
  std::vector<int> conj;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (claimed[i]) continue;
    HomClass cls;
    cls.rep = homs[i];
    for (int c = 0; c < g.order(); ++c) {
      conj.resize(homs[i].images.size());
      for (std::size_t k = 0; k < conj.size(); ++k)
        conj[k] = g.conjugate(c, homs[i].images[k]);
      auto it = index_of.find(conj);
      if (it == index_of.end())
        throw InvalidInput("hom list is not closed under conjugation");
      if (!claimed[it->second]) {
        claimed[it->second] = 1;
        ++cls.size;
      }
    }
    cls.centralizer_order = g.order() / cls.size;
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace orbichi

#endif
