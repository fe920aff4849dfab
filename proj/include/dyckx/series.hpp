#pragma once

#include "dyckx/rational.hpp"

#include <string>
#include <vector>

namespace dyckx {

// Formal power series over exact rationals, truncated at a fixed degree.
// Coefficients cover z^0 .. z^order(); every operation is exact through the
// result's truncation order (the min of the operands' orders).
class Series {
 public:
  static constexpr int kDefaultOrder = 24;

  explicit Series(int order = kDefaultOrder);

  static Series constant(Rational c, int order = kDefaultOrder);
  static Series one(int order = kDefaultOrder);
  // c * z^degree (zero series if degree > order).
  static Series monomial(int degree, Rational c, int order = kDefaultOrder);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int k) const;
  void set_coeff(int k, Rational v);
  bool is_zero() const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  // Division by a unit series (nonzero constant term).
  friend Series operator/(const Series& a, const Series& b);
  bool operator==(const Series& o) const = default;

  Series scaled(const Rational& c) const;
  // Multiply by z^k (top coefficients fall off the truncation).
  Series shifted(int k) const;
  Series truncated(int new_order) const;

  // Reciprocal; requires a nonzero constant term.
  Series inverse() const;
  // Square root with constant term 1; requires constant term 1.
  Series sqrt() const;
  // Logarithm of a series with constant term 1 (result has constant term 0).
  Series log() const;
  // Exponential of a series with constant term 0 (result has constant term 1).
  Series exp() const;

  // exp(sum_{n>=1} counts[n] z^n / n); counts[0] is ignored, missing tail counts
  // are treated as unconstrained (the result is only meaningful through
  // min(order, counts.size()-1) and exact there).
  static Series exp_from_counts(const std::vector<Int>& counts, int order);

  // Exact evaluation of the truncated polynomial at z0.
  Rational eval(const Rational& z0) const;

  // Coefficientwise equality through degree `through` (default: min of orders).
  bool agrees_with(const Series& o, int through = -1) const;

  // Human-readable form, e.g. "1 + 2*z + 8*z^2".
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

// Square matrix of Series with one truncation order across all entries.
class SeriesMatrix {
 public:
  SeriesMatrix(int dim, int order);

  static SeriesMatrix identity(int dim, int order);
  // Embed an integer matrix as constant series.
  static SeriesMatrix from_int(const std::vector<std::vector<long long>>& a, int order);

  int dim() const { return dim_; }
  int order() const { return entries_.front().order(); }

  Series& at(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
  const Series& at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  SeriesMatrix scaled(const Series& s) const;

  // Exact determinant by cofactor expansion (dimensions stay tiny here).
  Series det() const;
  // Adjugate / det; requires the constant-term matrix to be invertible.
  SeriesMatrix inverse() const;

 private:
  int dim_;
  std::vector<Series> entries_;
};

}  // namespace dyckx
