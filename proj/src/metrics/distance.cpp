#include "vecfield/metrics/distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace vecfield {

Categorical normalize(const std::map<std::string, std::size_t>& counts) {
  std::size_t total = 0;
  for (const auto& [label, n] : counts) total += n;
  if (total == 0) throw std::domain_error("normalize: no observations");
  Categorical p;
  for (const auto& [label, n] : counts) p[label] = static_cast<double>(n) / static_cast<double>(total);
  return p;
}

void validate(const Categorical& p) {
  double sum = 0.0;
  for (const auto& [label, value] : p) {
    if (!(value >= 0.0)) throw std::invalid_argument("categorical: negative probability for '" + label + "'");
    sum += value;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("categorical: probabilities do not sum to one");
}

double wasserstein1(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::domain_error("wasserstein1: empty sample list");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());

  // Walk the merged breakpoints; between consecutive breakpoints both CDFs
  // are constant.
  std::size_t i = 0, j = 0;
  double prev = std::min(sa.front(), sb.front());
  double total = 0.0;
  while (i < sa.size() || j < sb.size()) {
    double next;
    if (j == sb.size() || (i < sa.size() && sa[i] <= sb[j])) {
      next = sa[i];
    } else {
      next = sb[j];
    }
    const double fa = static_cast<double>(i) / na;
    const double fb = static_cast<double>(j) / nb;
    total += std::abs(fa - fb) * (next - prev);
    while (i < sa.size() && sa[i] == next) ++i;
    while (j < sb.size() && sb[j] == next) ++j;
    prev = next;
  }
  return total;
}

double total_variation(const Categorical& p, const Categorical& q) {
  double sum = 0.0;
  auto ip = p.begin();
  auto iq = q.begin();
  while (ip != p.end() || iq != q.end()) {
    if (iq == q.end() || (ip != p.end() && ip->first < iq->first)) {
      sum += std::abs(ip->second);
      ++ip;
    } else if (ip == p.end() || iq->first < ip->first) {
      sum += std::abs(iq->second);
      ++iq;
    } else {
      sum += std::abs(ip->second - iq->second);
      ++ip;
      ++iq;
    }
  }
  return 0.5 * sum;
}

}  // namespace vecfield
