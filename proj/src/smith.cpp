#include "knotkit/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "knotkit/errors.hpp"

namespace knotkit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Coeff>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("IntMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw ValidationError("IntMatrix: dimension mismatch in product");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Coeff a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

struct Reducer {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
  }
  // row_dst += factor * row_src
  void add_row(std::size_t dst, std::size_t src, Coeff factor) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(dst, j) = checked_add(d(dst, j), checked_mul(factor, d(src, j)));
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) = checked_add(u(dst, j), checked_mul(factor, u(src, j)));
  }
  // col_dst += factor * col_src
  void add_col(std::size_t dst, std::size_t src, Coeff factor) {
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, dst) = checked_add(d(i, dst), checked_mul(factor, d(i, src)));
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) = checked_add(v(i, dst), checked_mul(factor, v(i, src)));
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(r, j) = checked_neg(d(r, j));
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = checked_neg(u(r, j));
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    Coeff best = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        const Coeff a = checked_abs(d(i, j));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (best == 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_pivot(std::size_t t) {
    while (true) {
      const Coeff p = d(t, t);
      for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d(i, t) != 0) add_row(i, t, -(d(i, t) / p));
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(t, j) != 0) add_col(j, t, -(d(t, j) / p));

      // A nonzero remainder is smaller than the pivot: promote it and retry.
      bool moved = false;
      for (std::size_t i = t + 1; i < d.rows() && !moved; ++i)
        if (d(i, t) != 0) {
          swap_rows(t, i);
          moved = true;
        }
      for (std::size_t j = t + 1; j < d.cols() && !moved; ++j)
        if (d(t, j) != 0) {
          swap_cols(t, j);
          moved = true;
        }
      if (moved) continue;

      // Enforce d_t | every later entry.
      bool fixed = false;
      for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) negate_row(t);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());
  SmithForm out;
  for (std::size_t t = 0; t < limit; ++t) {
    if (!r.place_pivot(t)) break;
    r.reduce_pivot(t);
    out.invariant_factors.push_back(r.d(t, t));
  }
  out.diagonal = std::move(r.d);
  out.left = std::move(r.u);
  out.right = std::move(r.v);
  return out;
}

Coeff determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Coeff sign = 1;
  Coeff prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

}  // namespace knotkit
