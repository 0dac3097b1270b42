#ifndef ORBICHI_SERIES_HPP
#define ORBICHI_SERIES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/errors.hpp"
#include "orbichi/rational.hpp"

namespace orbichi {

/// A formal power series truncated at degree T, with exact rational
/// coefficients. Binary operations truncate to the smaller T.
class RationalSeries {
 public:
  explicit RationalSeries(int truncation)
      : coeffs_(static_cast<std::size_t>(truncation) + 1) {
    if (truncation < 0) throw InvalidInput("negative truncation");
  }

  static RationalSeries zero(int t) { return RationalSeries(t); }

  static RationalSeries one(int t) {
    RationalSeries s(t);
    s.coeffs_[0] = 1;
    return s;
  }

  static RationalSeries monomial(int t, int degree, Rational c) {
    RationalSeries s(t);
    if (degree <= t) s.coeffs_[degree] = std::move(c);
    return s;
  }

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& coeff(int i) const { return coeffs_[i]; }

  void set_coeff(int i, Rational c) { coeffs_[i] = std::move(c); }

  RationalSeries truncate_to(int t) const {
    RationalSeries s(std::min(t, truncation()));
    for (int i = 0; i <= s.truncation(); ++i) s.coeffs_[i] = coeffs_[i];
    return s;
  }

  RationalSeries operator+(const RationalSeries& o) const {
    RationalSeries s(std::min(truncation(), o.truncation()));
    for (int i = 0; i <= s.truncation(); ++i)
      s.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return s;
  }

  RationalSeries operator-(const RationalSeries& o) const {
    RationalSeries s(std::min(truncation(), o.truncation()));
    for (int i = 0; i <= s.truncation(); ++i)
      s.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return s;
  }

  RationalSeries operator*(const RationalSeries& o) const {
    RationalSeries s(std::min(truncation(), o.truncation()));
    for (int i = 0; i <= s.truncation(); ++i)
      for (int j = 0; i + j <= s.truncation(); ++j)
        s.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    return s;
  }

  RationalSeries scale(const Rational& c) const {
    RationalSeries s(truncation());
    for (int i = 0; i <= truncation(); ++i) s.coeffs_[i] = coeffs_[i] * c;
    return s;
  }

  /// Formal derivative: a_n -> n a_n, shifted down one degree.
  RationalSeries derivative() const {
    if (truncation() == 0) return RationalSeries(0);
    RationalSeries s(truncation() - 1);
    for (int i = 1; i <= truncation(); ++i)
      s.coeffs_[i - 1] = coeffs_[i] * i;
    return s;
  }

  bool operator==(const RationalSeries& o) const {
    return coeffs_ == o.coeffs_;
  }

  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(rational_to_string(c));
    return out;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// exp of a series with zero constant term, by the recurrence
/// n F_n = sum_{j=1..n} j f_j F_{n-j} (from F' = f' F). Exact.
inline RationalSeries exp_series(const RationalSeries& f) {
  if (f.coeff(0) != 0)
    throw BadConstantTerm("exp needs constant term 0, got " +
                          rational_to_string(f.coeff(0)));
  RationalSeries out(f.truncation());
  out.set_coeff(0, 1);
  for (int n = 1; n <= f.truncation(); ++n) {
    Rational acc = 0;
    for (int j = 1; j <= n; ++j) acc += Rational(j) * f.coeff(j) * out.coeff(n - j);
    out.set_coeff(n, acc / n);
  }
  return out;
}

/// log of a series with constant term 1: g_n = f_n - (1/n) sum_{j<n} j g_j f_{n-j}.
inline RationalSeries log_series(const RationalSeries& f) {
  if (f.coeff(0) != 1)
    throw BadConstantTerm("log needs constant term 1, got " +
                          rational_to_string(f.coeff(0)));
  RationalSeries out(f.truncation());
  for (int n = 1; n <= f.truncation(); ++n) {
    Rational acc = 0;
    for (int j = 1; j < n; ++j) acc += Rational(j) * out.coeff(j) * f.coeff(n - j);
    out.set_coeff(n, f.coeff(n) - acc / n);
  }
  return out;
}

/// (1 - q^r)^(-c) for exact rational c, via exp(c * sum_m q^(rm)/m).
inline RationalSeries geom_power(int r, const Rational& c, int truncation) {
  if (r < 1) throw InvalidInput("geom_power needs r >= 1");
  RationalSeries inner(truncation);
  for (int m = 1; m * r <= truncation; ++m)
    inner.set_coeff(m * r, c / m);
  return exp_series(inner);
}

inline RationalSeries product_family(const std::vector<RationalSeries>& factors,
                                     int truncation) {
  RationalSeries out = RationalSeries::one(truncation);
  for (const auto& f : factors) out = out * f.truncate_to(truncation);
  return out;
}

struct SeriesMismatch {
  int index;
  Rational lhs;
  Rational rhs;
};

/// Exact comparison up to the smaller truncation; reports the first
/// differing coefficient.
inline std::optional<SeriesMismatch> series_mismatch(const RationalSeries& f,
                                                     const RationalSeries& g) {
  int t = std::min(f.truncation(), g.truncation());
  for (int i = 0; i <= t; ++i)
    if (f.coeff(i) != g.coeff(i))
      return SeriesMismatch{i, f.coeff(i), g.coeff(i)};
  return std::nullopt;
}

inline bool series_equal(const RationalSeries& f, const RationalSeries& g) {
  return !series_mismatch(f, g).has_value();
}

}  // namespace orbichi

#endif
