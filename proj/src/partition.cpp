#include "qskein/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qskein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

std::vector<int> Partition::cell_contents() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back(j - i);
  return out;
}

std::vector<int> Partition::cell_hooks() const {
  Partition conj = conjugate();
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j)
      out.push_back(part(i) - j + conj.part(j) - i + 1);
  return out;
}

long long Partition::weighted_row_sum() const {
  long long n = 0;
  for (int i = 1; i <= length(); ++i) n += static_cast<long long>(i - 1) * part(i);
  return n;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw std::invalid_argument("Partition::parse: expected '['");
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("Partition::parse: expected digit");
      parts.push_back(std::stoi(text.substr(start, i - start)));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw std::invalid_argument("Partition::parse: expected ',' or ']'");
    }
  }
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("Partition::parse: trailing input");
  return Partition(std::move(parts));
}

std::vector<Partition> Partition::all_of(int n, int max_length) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(Partition(current));
      return;
    }
    if (max_length >= 0 && static_cast<int>(current.size()) >= max_length) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition complement_union(const Partition& lambda, const Partition& mu, int N) {
  if (N < lambda.part(1) + mu.part(1))
    throw std::invalid_argument("complement_union: need N >= lambda_1 + mu_1");
  std::vector<int> parts = lambda.parts();
  for (int p : mu.parts())
    if (N - p > 0) parts.push_back(N - p);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace qskein
