#pragma once

#include "qskein/skein.hpp"

#include <string>
#include <vector>

namespace qskein {

// Combined index vector w of a pair of partitions: k_star entries from the
// starred block followed by k entries from the plain block,
//   w_i = mu_{k_star - i + 1} + i - 1            for i = 1..k_star,
//   w_i = lambda_{i - k_star} - i + 1            for i = k_star+1..k_star+k.
// The starred block is strictly increasing, the plain block strictly
// decreasing, and w_{k_star} = mu_1 + k_star - 1 >= 0 > lambda-side tail.
struct IndexVector {
  std::vector<int> starred;
  std::vector<int> plain;

  int dim() const { return static_cast<int>(starred.size() + plain.size()); }
  friend bool operator==(const IndexVector&, const IndexVector&) = default;
  std::string to_string() const;
};

IndexVector index_vector(const Partition& lambda, const Partition& mu);

// Entry of the determinantal template: 0, 1, h_n or h_n*.
struct MatrixEntry {
  enum Kind { kZero, kOne, kPlain, kStarred } kind = kZero;
  int n = 0;

  SkeinElement element() const;
  std::string to_string() const;  // "0", "1", "h3", "hs2"
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Square template matrix attached to an index vector. The row of a starred
// value w holds hs_{w-j+1} in column j (1-based), the row of a plain value
// holds h_{w+j-1}; subscript < 0 is 0 and subscript 0 is 1.
class TemplateMatrix {
 public:
  explicit TemplateMatrix(IndexVector w);

  int dim() const { return w_.dim(); }
  int starred_rows() const { return static_cast<int>(w_.starred.size()); }
  const IndexVector& index() const { return w_; }
  const MatrixEntry& at(int row, int col) const;

  bool row_is_zero(int row) const;
  bool rows_equal(int r1, int r2) const;

  // Rows as entry strings, e.g. {"hs2","hs1","1","0","0"}.
  std::vector<std::vector<std::string>> to_strings() const;

  SkeinElement determinant() const;

 private:
  IndexVector w_;
  std::vector<std::vector<MatrixEntry>> entries_;
};

// Basis element: determinant of the template matrix of (lambda, mu).
SkeinElement q_element(const Partition& lambda, const Partition& mu);

// Outcome of normalising a raw index vector: either the determinant is
// forced to vanish, or it is sign * the basis element of (lambda, mu).
struct NormalForm {
  bool is_zero = false;
  int sign = 1;
  Partition lambda;
  Partition mu;
};

// Raw index vector: any starred/plain value lists, each value >= -dim. The
// normal form is computed structurally: zero rows and repeated rows force 0,
// sorting rows tracks the sign, and degenerate border rows (a lone 1 in the
// corner) strip to a smaller matrix.
NormalForm normalize_index_vector(IndexVector w);

// Meridian-map eigenvalue attached to (lambda, mu): delta plus
// (s - s^{-1}) (v^{-1} sum_{cells of lambda} s^{2c} - v sum_{cells of mu} s^{-2c}).
RingElem eigenvalue(const Partition& lambda, const Partition& mu);

// Same eigenvalue computed from the raw index vector of the pair, as
// s^{-2 k_star} (sum alpha_i + sum beta_j - delta * sum_{j=1}^{dim-1} s^{2j})
// with alpha from the w entries and beta the geometric correction row.
// Satisfies eigenvalue_from_index(index_vector(l, m)) == eigenvalue(m, l).
RingElem eigenvalue_from_index(const IndexVector& w);

enum class MeridianKind { kPositive, kReversed };

// Eigenvalue of the meridian maps on a single generator: the positive
// meridian scales h_n by v^{-1}(s^{2n-1} - s^{-1}) + delta and h_n* by
// v(s^{-2n+1} - s) + delta; the reversed meridian swaps the two roles.
RingElem meridian_generator_eigenvalue(MeridianKind kind, bool starred, int n);

}  // namespace qskein
