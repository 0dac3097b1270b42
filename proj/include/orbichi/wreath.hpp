#ifndef ORBICHI_WREATH_HPP
#define ORBICHI_WREATH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orbichi/caps.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/group.hpp"
#include "orbichi/perm.hpp"

namespace orbichi {

/// One element of G(S_n) in structured form: n base-group components and a
/// permutation of the copies.
struct WreathElement {
  std::vector<int> components;  // g_1..g_n as base-group indices
  Perm perm;
};

/// The wreath product G(S_n) = G^n x| S_n as a flat FiniteGroup together
/// with the bijective codec between flat indices and WreathElement.
///
/// Flat encoding is mixed-radix: index = comp_code * n! + perm_rank with
/// comp_code = sum_i g_i * |G|^i. Multiplication follows
///   ((g_1..g_n), s)((h_1..h_n), t) = ((g_1 h_{s^-1(1)}..g_n h_{s^-1(n)}), st)
/// with st meaning "t first", matching Perm composition.
class WreathGroup {
 public:
  WreathGroup(FiniteGroup base, int copies, const Caps& caps = default_caps())
      : base_(std::move(base)), copies_(copies) {
    if (copies < 1) throw InvalidInput("wreath product needs n >= 1");
    std::int64_t order = 1;
    for (int i = 0; i < copies; ++i) {
      order *= base_.order();
      if (order > caps.order) throw OrderCapExceeded("|G|^n exceeds order cap");
    }
    nfact_ = factorial_i64(copies);
    if (order > caps.order / nfact_)
      throw OrderCapExceeded("|G|^n * n! exceeds order cap");
    order *= nfact_;

    const int n = static_cast<int>(order);
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
    std::vector<WreathElement> decoded(n);
    for (int i = 0; i < n; ++i) decoded[i] = decode_raw(i);
    WreathElement prod;
    prod.components.resize(copies_);
    for (int a = 0; a < n; ++a) {
      const WreathElement& x = decoded[a];
      Perm s_inv = perm_inverse(x.perm);
      for (int b = 0; b < n; ++b) {
        const WreathElement& y = decoded[b];
        for (int i = 0; i < copies_; ++i)
          prod.components[i] = base_.mul(x.components[i], y.components[s_inv[i]]);
        prod.perm = compose(x.perm, y.perm);
        table[a * static_cast<std::size_t>(n) + b] = encode(prod);
      }
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
      std::string l = "((";
      for (int j = 0; j < copies_; ++j) {
        if (j) l += ",";
        l += base_.label(decoded[i].components[j]);
      }
      l += ")," + cycle_string(decoded[i].perm) + ")";
      labels[i] = std::move(l);
    }
    group_ = make_group_unchecked(std::move(table), n, std::move(labels));
  }

  const FiniteGroup& group() const { return group_; }
  const FiniteGroup& base() const { return base_; }
  int copies() const { return copies_; }

  int encode(const WreathElement& w) const {
    std::int64_t comp = 0;
    for (int i = copies_ - 1; i >= 0; --i)
      comp = comp * base_.order() + w.components[i];
    return static_cast<int>(comp * nfact_ + perm_rank(w.perm));
  }

  WreathElement decode(int flat) const { return decode_raw(flat); }

  /// Base-group component g_{i+1} of a flat element (0-based slot i).
  int component(int flat, int i) const {
    std::int64_t comp = flat / nfact_;
    for (int j = 0; j < i; ++j) comp /= base_.order();
    return static_cast<int>(comp % base_.order());
  }

  Perm perm_of(int flat) const {
    return perm_unrank(copies_, flat % nfact_);
  }

  /// Projection G(S_n) -> S_n by forgetting components; the result is the
  /// Lehmer rank, which is the element index in symmetric_group(n).
  std::int64_t project(int flat) const { return flat % nfact_; }

 private:
  WreathElement decode_raw(int flat) const {
    WreathElement w;
    w.perm = perm_unrank(copies_, flat % nfact_);
    std::int64_t comp = flat / nfact_;
    w.components.resize(copies_);
    for (int i = 0; i < copies_; ++i) {
      w.components[i] = static_cast<int>(comp % base_.order());
      comp /= base_.order();
    }
    return w;
  }

  FiniteGroup base_;
  FiniteGroup group_;
  int copies_;
  std::int64_t nfact_;
};

inline WreathGroup wreath_product(const FiniteGroup& base, int copies,
                                  const Caps& caps = default_caps()) {
  return WreathGroup(base, copies, caps);
}

}  // namespace orbichi

#endif
