#include "qskein/qbasis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace qskein {

std::string IndexVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < starred.size(); ++i) {
    if (i) os << ',';
    os << starred[i];
  }
  os << " | ";
  for (std::size_t i = 0; i < plain.size(); ++i) {
    if (i) os << ',';
    os << plain[i];
  }
  os << ')';
  return os.str();
}

IndexVector index_vector(const Partition& lambda, const Partition& mu) {
  IndexVector w;
  int kstar = mu.length();
  for (int i = 1; i <= kstar; ++i) w.starred.push_back(mu.part(kstar - i + 1) + i - 1);
  for (int i = kstar + 1; i <= kstar + lambda.length(); ++i)
    w.plain.push_back(lambda.part(i - kstar) - i + 1);
  return w;
}

SkeinElement MatrixEntry::element() const {
  switch (kind) {
    case kZero: return SkeinElement{};
    case kOne: return SkeinElement(1);
    case kPlain: return SkeinElement::h(n);
    case kStarred: return SkeinElement::hstar(n);
  }
  return SkeinElement{};
}

std::string MatrixEntry::to_string() const {
  switch (kind) {
    case kZero: return "0";
    case kOne: return "1";
    case kPlain: return "h" + std::to_string(n);
    case kStarred: return "hs" + std::to_string(n);
  }
  return "0";
}

namespace {

MatrixEntry make_entry(bool starred, int subscript) {
  if (subscript < 0) return {MatrixEntry::kZero, 0};
  if (subscript == 0) return {MatrixEntry::kOne, 0};
  return {starred ? MatrixEntry::kStarred : MatrixEntry::kPlain, subscript};
}

}  // namespace

TemplateMatrix::TemplateMatrix(IndexVector w) : w_(std::move(w)) {
  int d = dim();
  int kstar = starred_rows();
  entries_.resize(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    bool starred = r < kstar;
    int value = starred ? w_.starred[static_cast<std::size_t>(r)]
                        : w_.plain[static_cast<std::size_t>(r - kstar)];
    auto& row = entries_[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j)
      row.push_back(make_entry(starred, starred ? value - j + 1 : value + j - 1));
  }
}

const MatrixEntry& TemplateMatrix::at(int row, int col) const {
  return entries_.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col));
}

bool TemplateMatrix::row_is_zero(int row) const {
  for (const auto& e : entries_.at(static_cast<std::size_t>(row)))
    if (e.kind != MatrixEntry::kZero) return false;
  return true;
}

bool TemplateMatrix::rows_equal(int r1, int r2) const {
  return entries_.at(static_cast<std::size_t>(r1)) == entries_.at(static_cast<std::size_t>(r2));
}

std::vector<std::vector<std::string>> TemplateMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : entries_) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(e.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

SkeinElement TemplateMatrix::determinant() const {
  int d = dim();
  if (d == 0) return SkeinElement(1);
  if (d > 31) throw std::invalid_argument("determinant: dimension above 31 is not supported");
  // Cofactor expansion down the rows, memoised on the set of still-unused
  // columns; the row is determined by how many columns are already used.
  std::unordered_map<std::uint32_t, SkeinElement> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> const SkeinElement& {
    auto found = memo.find(mask);
    if (found != memo.end()) return found->second;
    SkeinElement acc;
    if (mask == 0) {
      acc = SkeinElement(1);
    } else {
      int row = d - std::popcount(mask);
      int sign = 1;
      for (int j = 0; j < d; ++j) {
        if (!(mask >> j & 1u)) continue;
        const MatrixEntry& e = entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        if (e.kind != MatrixEntry::kZero) {
          const SkeinElement& sub = self(self, mask & ~(1u << j));
          SkeinElement term = e.kind == MatrixEntry::kOne ? sub : e.element() * sub;
          acc += sign > 0 ? term : -term;
        }
        sign = -sign;
      }
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  return rec(rec, (d == 31) ? 0x7fffffffu : ((1u << d) - 1));
}

SkeinElement q_element(const Partition& lambda, const Partition& mu) {
  return TemplateMatrix(index_vector(lambda, mu)).determinant();
}

NormalForm normalize_index_vector(IndexVector w) {
  int sign = 1;
  auto sort_counting = [&sign](std::vector<int>& xs, bool ascending) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      for (std::size_t j = 0; j + 1 < xs.size() - i; ++j) {
        bool out_of_order = ascending ? xs[j] > xs[j + 1] : xs[j] < xs[j + 1];
        if (out_of_order) {
          std::swap(xs[j], xs[j + 1]);
          sign = -sign;
        }
      }
  };
  while (true) {
    int dim = w.dim();
    if (dim == 0) break;
    for (int x : w.starred)
      if (x < 0) return {true, 1, {}, {}};
    for (int x : w.plain)
      if (x <= -dim) return {true, 1, {}, {}};
    sort_counting(w.starred, true);
    sort_counting(w.plain, false);
    for (std::size_t i = 0; i + 1 < w.starred.size(); ++i)
      if (w.starred[i] == w.starred[i + 1]) return {true, 1, {}, {}};
    for (std::size_t i = 0; i + 1 < w.plain.size(); ++i)
      if (w.plain[i] == w.plain[i + 1]) return {true, 1, {}, {}};
    if (!w.starred.empty() && w.starred.front() == 0) {
      // First row is (1, 0, ..., 0): expand along it. Dropping row and
      // column 1 shifts the remaining starred values down and plain values
      // up by one.
      w.starred.erase(w.starred.begin());
      for (int& x : w.starred) --x;
      for (int& x : w.plain) ++x;
      continue;
    }
    if (!w.plain.empty() && w.plain.back() == 1 - dim) {
      // Last row is (0, ..., 0, 1): expand along it. Dropping the last row
      // and column leaves all other values unchanged.
      w.plain.pop_back();
      continue;
    }
    break;
  }
  NormalForm out;
  out.sign = sign;
  int kstar = static_cast<int>(w.starred.size());
  std::vector<int> mu(w.starred.size());
  for (int i = 1; i <= kstar; ++i)
    mu[static_cast<std::size_t>(kstar - i)] = w.starred[static_cast<std::size_t>(i - 1)] - i + 1;
  std::vector<int> lambda(w.plain.size());
  for (std::size_t j = 0; j < w.plain.size(); ++j)
    lambda[j] = w.plain[j] + kstar + static_cast<int>(j);
  out.lambda = Partition(std::move(lambda));
  out.mu = Partition(std::move(mu));
  return out;
}

RingElem eigenvalue(const Partition& lambda, const Partition& mu) {
  LaurentPoly lsum, msum;
  for (int c : lambda.cell_contents()) lsum += LaurentPoly::s(2 * c);
  for (int c : mu.cell_contents()) msum += LaurentPoly::s(-2 * c);
  LaurentPoly z = LaurentPoly::s(1) - LaurentPoly::s(-1);
  LaurentPoly lin = z * (LaurentPoly::v(-1) * lsum - LaurentPoly::v(1) * msum);
  return RingElem(lin) + RingElem::delta();
}

RingElem eigenvalue_from_index(const IndexVector& w) {
  int kstar = static_cast<int>(w.starred.size());
  int dim = w.dim();
  // The termwise formula needs at least one row; the 0x0 matrix is the unit
  // element, whose meridian eigenvalue is the bare loop value.
  if (dim == 0) return RingElem::delta();
  RingElem sum(0);
  for (int x : w.starred) sum += RingElem(LaurentPoly::term(1, -1, 2 * x + 1));
  for (int x : w.plain) sum += RingElem(LaurentPoly::term(1, 1, 1 - 2 * x));
  LaurentPoly beta_num;
  for (int j = 1; j <= dim; ++j)
    beta_num += LaurentPoly::term(1, -1, 2 * j - 2) - LaurentPoly::term(1, 1, 2 * j);
  sum += RingElem(beta_num, LaurentPoly::s(1) - LaurentPoly::s(-1));
  LaurentPoly geo;
  for (int j = 1; j < dim; ++j) geo += LaurentPoly::s(2 * j);
  sum -= RingElem::delta() * RingElem(geo);
  return RingElem(LaurentPoly::s(-2 * kstar)) * sum;
}

RingElem meridian_generator_eigenvalue(MeridianKind kind, bool starred, int n) {
  if (n < 1) throw std::invalid_argument("meridian_generator_eigenvalue: need n >= 1");
  bool inverse_branch = (kind == MeridianKind::kPositive) != starred;
  LaurentPoly p = inverse_branch
      ? LaurentPoly::v(-1) * (LaurentPoly::s(2 * n - 1) - LaurentPoly::s(-1))
      : LaurentPoly::v(1) * (LaurentPoly::s(-2 * n + 1) - LaurentPoly::s(1));
  return RingElem(p) + RingElem::delta();
}

}  // namespace qskein
