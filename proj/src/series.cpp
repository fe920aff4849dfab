#include "dyckx/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dyckx {

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    std::string top = slash == std::string::npos ? s : s.substr(0, slash);
    if (top.empty()) throw std::invalid_argument("empty numerator");
    if (slash == std::string::npos) return Rational(Int(top));
    std::string bottom = s.substr(slash + 1);
    if (bottom.empty()) throw std::invalid_argument("empty denominator");
    Int num(top);
    Int den(bottom);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: \"" + s + "\"");
  }
}

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series Series::constant(Rational c, int order) {
  Series s(order);
  s.coeffs_[0] = std::move(c);
  return s;
}

Series Series::one(int order) { return constant(Rational(1), order); }

Series Series::monomial(int degree, Rational c, int order) {
  Series s(order);
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (degree <= order) s.coeffs_[static_cast<size_t>(degree)] = std::move(c);
  return s;
}

const Rational& Series::coeff(int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
  return coeffs_[static_cast<size_t>(k)];
}

void Series::set_coeff(int k, Rational v) {
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
  coeffs_[static_cast<size_t>(k)] = std::move(v);
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Series Series::operator-() const {
  Series r(order());
  for (int k = 0; k <= order(); ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

Series Series::scaled(const Rational& c) const {
  Series r(order());
  for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * c;
  return r;
}

Series Series::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  Series r(order());
  for (int j = 0; j + k <= order(); ++j) r.coeffs_[j + k] = coeffs_[j];
  return r;
}

Series Series::truncated(int new_order) const {
  Series r(new_order);
  for (int k = 0; k <= std::min(order(), new_order); ++k) r.coeffs_[k] = coeffs_[k];
  return r;
}

Series Series::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("series inverse: zero constant term");
  Series r(order());
  r.coeffs_[0] = 1 / coeffs_[0];
  for (int k = 1; k <= order(); ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = -acc / coeffs_[0];
  }
  return r;
}

Series Series::sqrt() const {
  if (coeffs_[0] != 1) throw std::domain_error("series sqrt: constant term must be 1");
  // s_k = (f_k - sum_{0<j<k} s_j s_{k-j}) / 2 with s_0 = 1.
  Series r(order());
  r.coeffs_[0] = 1;
  for (int k = 1; k <= order(); ++k) {
    Rational acc = coeffs_[k];
    for (int j = 1; j < k; ++j) acc -= r.coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = acc / 2;
  }
  return r;
}

Series Series::log() const {
  if (coeffs_[0] != 1) throw std::domain_error("series log: constant term must be 1");
  // From f' = u' f: k u_k = k f_k - sum_{0<j<k} j u_j f_{k-j}.
  Series u(order());
  for (int k = 1; k <= order(); ++k) {
    Rational acc = Rational(k) * coeffs_[k];
    for (int j = 1; j < k; ++j) acc -= Rational(j) * u.coeffs_[j] * coeffs_[k - j];
    u.coeffs_[k] = acc / k;
  }
  return u;
}

Series Series::exp() const {
  if (coeffs_[0] != 0) throw std::domain_error("series exp: constant term must be 0");
  // f' = u' f: k f_k = sum_{0<j<=k} j u_j f_{k-j}.
  Series f(order());
  f.coeffs_[0] = 1;
  for (int k = 1; k <= order(); ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += Rational(j) * coeffs_[j] * f.coeffs_[k - j];
    f.coeffs_[k] = acc / k;
  }
  return f;
}

Series Series::exp_from_counts(const std::vector<Int>& counts, int order) {
  Series u(order);
  for (int n = 1; n <= order && n < static_cast<int>(counts.size()); ++n)
    u.coeffs_[n] = Rational(counts[n], n);
  return u.exp();
}

Rational Series::eval(const Rational& z0) const {
  Rational acc(0);
  for (int k = order(); k >= 0; --k) acc = acc * z0 + coeffs_[k];
  return acc;
}

bool Series::agrees_with(const Series& o, int through) const {
  int upto = std::min(order(), o.order());
  if (through >= 0) upto = std::min(upto, through);
  for (int k = 0; k <= upto; ++k)
    if (coeffs_[k] != o.coeffs_[k]) return false;
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  bool any = false;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (any) os << " + ";
    os << rational_to_string(coeffs_[k]);
    if (k == 1) os << "*z";
    if (k > 1) os << "*z^" << k;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

SeriesMatrix::SeriesMatrix(int dim, int order) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
  entries_.assign(static_cast<size_t>(dim) * dim, Series(order));
}

SeriesMatrix SeriesMatrix::identity(int dim, int order) {
  SeriesMatrix m(dim, order);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Series::one(order);
  return m;
}

SeriesMatrix SeriesMatrix::from_int(const std::vector<std::vector<long long>>& a, int order) {
  int d = static_cast<int>(a.size());
  SeriesMatrix m(d, order);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(a[i].size()) != d)
      throw std::invalid_argument("from_int: matrix must be square");
    for (int j = 0; j < d; ++j) m.at(i, j) = Series::constant(Rational(a[i][j]), order);
  }
  return m;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  SeriesMatrix r(a.dim(), std::min(a.order(), b.order()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  SeriesMatrix r(a.dim(), std::min(a.order(), b.order()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  SeriesMatrix r(a.dim(), std::min(a.order(), b.order()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Series acc(r.order());
      for (int k = 0; k < a.dim(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

SeriesMatrix SeriesMatrix::scaled(const Series& s) const {
  SeriesMatrix r(dim_, std::min(order(), s.order()));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = at(i, j) * s;
  return r;
}

namespace {

Series det_recursive(const SeriesMatrix& m, std::vector<int>& cols, int row) {
  if (static_cast<int>(cols.size()) == 1) return m.at(row, cols[0]);
  Series acc(m.order());
  for (size_t c = 0; c < cols.size(); ++c) {
    int col = cols[c];
    if (m.at(row, col).is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t k = 0; k < cols.size(); ++k)
      if (k != c) rest.push_back(cols[k]);
    Series sub = m.at(row, col) * det_recursive(m, rest, row + 1);
    acc = (c % 2 == 0) ? acc + sub : acc - sub;
  }
  return acc;
}

}  // namespace

Series SeriesMatrix::det() const {
  std::vector<int> cols(static_cast<size_t>(dim_));
  for (int j = 0; j < dim_; ++j) cols[static_cast<size_t>(j)] = j;
  return det_recursive(*this, cols, 0);
}

SeriesMatrix SeriesMatrix::inverse() const {
  Series d = det();
  if (d.coeff(0) == 0) throw std::domain_error("matrix inverse: constant-term matrix singular");
  Series dinv = d.inverse();
  if (dim_ == 1) {
    SeriesMatrix r(1, order());
    r.at(0, 0) = dinv;
    return r;
  }
  // Adjugate via cofactors: adj(i,j) = (-1)^{i+j} det(minor(j,i)).
  SeriesMatrix r(dim_, order());
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      SeriesMatrix minor(dim_ - 1, order());
      for (int a = 0, ai = 0; a < dim_; ++a) {
        if (a == j) continue;
        for (int b = 0, bj = 0; b < dim_; ++b) {
          if (b == i) continue;
          minor.at(ai, bj) = at(a, b);
          ++bj;
        }
        ++ai;
      }
      Series cof = minor.det();
      if ((i + j) % 2 == 1) cof = -cof;
      r.at(i, j) = cof * dinv;
    }
  return r;
}

}  // namespace dyckx
