#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cornerk/integer_matrix.hpp"
#include "cornerk/numeric.hpp"

namespace cornerk {

/// Result of u * a * v = diag(d), with u, v unimodular (products of
/// elementary operations, so |det| = 1 by construction). The diagonal is
/// nonnegative, each entry divides the next, and zeros trail. v_inverse is
/// tracked during the reduction because change-of-basis into kernel
/// coordinates needs it; recomputing an inverse afterwards would be wasteful.
struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix v;
  IntegerMatrix v_inverse;
  std::vector<Int> d;
  std::size_t rank = 0;

  /// Exact recheck of the defining identity against the original matrix.
  [[nodiscard]] bool verify(const IntegerMatrix& a) const {
    if (u.rows() != a.rows() || v.cols() != a.cols()) return false;
    IntegerMatrix prod = u * a * v;
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        const Int expected = (i == j && i < d.size()) ? d[i] : Int(0);
        if (prod.at(i, j) != expected) return false;
      }
    }
    IntegerMatrix vv = v * v_inverse;
    return vv == IntegerMatrix::identity(v.rows());
  }
};

/// Smith normal form over the integers with exact arithmetic.
///
/// Pivot selection always takes a minimal-absolute-value nonzero entry of
/// the working submatrix and reduces with nearest-integer quotients; every
/// re-selection strictly shrinks the pivot, which both guarantees
/// termination and keeps intermediate entries small on the incidence
/// matrices this project feeds it.
inline SmithForm smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm out;
  out.u = IntegerMatrix::identity(m);
  out.v = IntegerMatrix::identity(n);
  out.v_inverse = IntegerMatrix::identity(n);
  IntegerMatrix b = a;

  // Column operation on b/v is mirrored as the inverse row operation on
  // v_inverse so that v * v_inverse stays the identity throughout.
  const auto swap_cols = [&](std::size_t x, std::size_t y) {
    b.swap_cols(x, y);
    out.v.swap_cols(x, y);
    out.v_inverse.swap_rows(x, y);
  };
  const auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
    b.add_col_multiple(dst, src, q);
    out.v.add_col_multiple(dst, src, q);
    out.v_inverse.add_row_multiple(src, dst, -q);
  };
  const auto swap_rows = [&](std::size_t x, std::size_t y) {
    b.swap_rows(x, y);
    out.u.swap_rows(x, y);
  };
  const auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {
    b.add_row_multiple(dst, src, q);
    out.u.add_row_multiple(dst, src, q);
  };

  const std::size_t bound = m < n ? m : n;
  std::size_t t = 0;
  for (; t < bound; ++t) {
    // Locate a minimal nonzero pivot in the submatrix at (t, t).
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        const Int& e = b.at(i, j);
        if (e == 0) continue;
        if (!found || abs(e) < abs(b.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (b.at(i, t) == 0) continue;
        add_row(i, t, -div_round_nearest(b.at(i, t), b.at(t, t)));
        if (b.at(i, t) != 0) {
          // Remainder is strictly smaller than the pivot; promote it.
          swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (b.at(t, j) == 0) continue;
        add_col(j, t, -div_round_nearest(b.at(t, j), b.at(t, t)));
        if (b.at(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // Row and column are clear. Enforce that the pivot divides the rest
      // of the submatrix before moving on, folding a bad row into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n && divides; ++j) {
          if (b.at(i, j) % b.at(t, t) != 0) {
            add_row(t, i, Int(1));
            divides = false;
          }
        }
      }
      if (divides) break;
    }
  }

  out.rank = t;
  for (std::size_t k = 0; k < t; ++k) {
    if (b.at(k, k) < 0) {
      b.negate_row(k);
      out.u.negate_row(k);
    }
  }
  out.d.reserve(bound);
  for (std::size_t k = 0; k < bound; ++k) out.d.push_back(k < t ? b.at(k, k) : Int(0));

  if (!out.verify(a)) {
    throw std::logic_error("smith_normal_form: internal verification failed");
  }
  return out;
}

[[nodiscard]] inline std::size_t matrix_rank(const IntegerMatrix& a) {
  return smith_normal_form(a).rank;
}

/// Columns form a basis of the integer kernel (may have zero columns when
/// the kernel is trivial, i.e. the result is n x 0).
[[nodiscard]] inline IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  SmithForm s = smith_normal_form(a);
  const std::size_t n = a.cols();
  IntegerMatrix out(n, n - s.rank);
  for (std::size_t j = s.rank; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out.at(i, j - s.rank) = s.v.at(i, j);
  }
  return out;
}

} // namespace cornerk
