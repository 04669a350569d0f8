#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qskein {

// Integer partition: weakly decreasing positive parts. The empty partition is
// default-constructed.
class Partition {
 public:
  Partition() = default;
  // Validates; throws std::invalid_argument unless parts are positive and
  // weakly decreasing.
  explicit Partition(std::vector<int> parts);

  int size() const;                 // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const;            // 1-based; 0 beyond the length
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the part lists; used only as a canonical container order.
  friend auto operator<=>(const Partition&, const Partition&) = default;

  Partition conjugate() const;

  // Content i.e. column - row and hook length for every cell, row by row.
  std::vector<int> cell_contents() const;
  std::vector<int> cell_hooks() const;

  // n(lambda) = sum over rows of (row index - 1) * part.
  long long weighted_row_sum() const;

  std::string to_string() const;                 // "[4,2,2]", "[]"
  static Partition parse(const std::string&);

  // All partitions of n, largest-part-first lex descending, so [n] comes
  // first and [1,...,1] last. max_length < 0 means unbounded.
  static std::vector<Partition> all_of(int n, int max_length = -1);

 private:
  std::vector<int> parts_;
};

// Parts of lambda together with N - mu_j for every part of mu, zeros dropped,
// sorted decreasingly. Requires N >= lambda_1 + mu_1.
Partition complement_union(const Partition& lambda, const Partition& mu, int N);

}  // namespace qskein
