#include "qskein/conversion.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace qskein {

SkeinElement QExpansion::recombine() const {
  SkeinElement r;
  for (const auto& [key, c] : coeffs) r += q_element(key.first, key.second).scaled(c);
  return r;
}

std::string QExpansion::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeffs) {
    std::string cs = c.to_string();
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string q = "Q(" + key.first.to_string() + "," + key.second.to_string() + ")";
    if (cs == "1") {
      os << q;
    } else if (cs.find(' ') != std::string::npos) {
      os << "(" << cs << ")*" << q;
    } else {
      os << cs << "*" << q;
    }
  }
  return os.str();
}

std::vector<BasisKey> enumerate_basis(int charge, int max_n) {
  if (max_n < std::max(charge, 0))
    throw std::invalid_argument("enumerate_basis: need max_n >= max(charge, 0)");
  std::vector<BasisKey> out;
  for (int m = max_n; m >= std::max(charge, 0); --m) {
    int mu_size = m - charge;
    if (mu_size < 0) continue;
    for (const auto& lambda : Partition::all_of(m))
      for (const auto& mu : Partition::all_of(mu_size)) out.emplace_back(lambda, mu);
  }
  return out;
}

namespace {

std::map<BasisKey, RingElem> expand_charge_class(const SkeinElement& x, int charge) {
  std::vector<BasisKey> keys = enumerate_basis(charge, x.max_plain_degree());
  std::vector<SkeinElement> columns;
  columns.reserve(keys.size());
  for (const auto& [lambda, mu] : keys) columns.push_back(q_element(lambda, mu));

  // Row space: every monomial seen in x or in a candidate column.
  std::map<SkeinMonomial, std::size_t> row_of;
  auto note = [&row_of](const SkeinElement& e) {
    for (const auto& [m, c] : e.terms()) row_of.try_emplace(m, row_of.size());
  };
  note(x);
  for (const auto& q : columns) note(q);

  std::size_t n_rows = row_of.size(), n_cols = keys.size();
  std::vector<std::vector<RingElem>> a(n_rows, std::vector<RingElem>(n_cols + 1, RingElem(0)));
  for (std::size_t j = 0; j < n_cols; ++j)
    for (const auto& [m, c] : columns[j].terms()) a[row_of[m]][j] = c;
  for (const auto& [m, c] : x.terms()) a[row_of[m]][n_cols] = c;

  // Gauss-Jordan over the fraction field; pivot on the first nonzero entry
  // in the column.
  std::vector<std::size_t> pivot_of_col(n_cols, SIZE_MAX);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < n_cols && next_row < n_rows; ++col) {
    std::size_t p = next_row;
    while (p < n_rows && a[p][col].is_zero()) ++p;
    if (p == n_rows) continue;
    std::swap(a[p], a[next_row]);
    RingElem inv = a[next_row][col].pow(-1);
    for (std::size_t j = col; j <= n_cols; ++j)
      if (!a[next_row][j].is_zero()) a[next_row][j] *= inv;
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r == next_row || a[r][col].is_zero()) continue;
      RingElem f = a[r][col];
      for (std::size_t j = col; j <= n_cols; ++j)
        if (!a[next_row][j].is_zero()) a[r][j] -= f * a[next_row][j];
    }
    pivot_of_col[col] = next_row;
    ++next_row;
  }
  for (std::size_t r = next_row; r < n_rows; ++r)
    if (!a[r][n_cols].is_zero())
      throw std::logic_error("expand_in_q: nonzero residual " + a[r][n_cols].to_string() +
                             "; element outside the candidate span");

  std::map<BasisKey, RingElem> out;
  for (std::size_t col = 0; col < n_cols; ++col) {
    if (pivot_of_col[col] == SIZE_MAX) continue;
    const RingElem& c = a[pivot_of_col[col]][n_cols];
    if (!c.is_zero()) out.emplace(keys[col], c);
  }
  return out;
}

}  // namespace

QExpansion expand_in_q(const SkeinElement& x) {
  QExpansion out;
  for (const auto& [charge, part] : x.charge_split()) {
    auto coords = expand_charge_class(part, charge);
    out.coeffs.merge(coords);
  }
  return out;
}

QExpansion multiply_in_q(const Partition& l1, const Partition& m1,
                         const Partition& l2, const Partition& m2) {
  QExpansion out = expand_in_q(q_element(l1, m1) * q_element(l2, m2));
  for (const auto& [key, c] : out.coeffs) {
    auto poly = c.to_integral();
    bool ok = poly && poly->is_constant() && poly->coeff(0, 0) > 0;
    if (!ok)
      throw std::logic_error("multiply_in_q: coefficient of Q(" + key.first.to_string() + "," +
                             key.second.to_string() + ") is not a nonnegative integer: " +
                             c.to_string());
  }
  return out;
}

SkeinElement meridian_map(const SkeinElement& x, MeridianKind kind) {
  QExpansion coords = expand_in_q(x);
  SkeinElement r;
  for (const auto& [key, c] : coords.coeffs) {
    RingElem ev = kind == MeridianKind::kPositive ? eigenvalue(key.first, key.second)
                                                  : eigenvalue(key.second, key.first);
    r += q_element(key.first, key.second).scaled(c * ev);
  }
  return r;
}

}  // namespace qskein
