#include "strata/strata/poset.hpp"

#include <algorithm>
#include <numeric>

#include "strata/algebra/algebra.hpp"

namespace strata::strata {

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  Poset p;
  std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) p.leq_[x][x] = true;
  for (auto [x, y] : covers) {
    if (x >= n || y >= n) throw std::out_of_range("order pair outside the index set");
    p.leq_[x][y] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k][j]) p.leq_[i][j] = true;
  std::vector<algebra::Violation> bad;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (p.leq_[x][y] && p.leq_[y][x])
        bad.push_back({"antisymmetry", {p.labels_[x], p.labels_[y]},
                       p.labels_[x] + " <= " + p.labels_[y] + " and conversely"});
  if (!bad.empty()) throw algebra::ValidationError(std::move(bad));
  return p;
}

Poset Poset::antichain(std::vector<std::string> labels) { return from_covers(std::move(labels), {}); }

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y) {
      if (!less(x, y)) continue;
      bool between = false;
      for (std::size_t z = 0; z < size() && !between; ++z) between = less(x, z) && less(z, y);
      if (!between) out.emplace_back(x, y);
    }
  return out;
}

std::vector<std::size_t> Poset::down_set(std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (leq(x, y)) out.push_back(x);
  return out;
}

bool Poset::is_initial_segment(const std::vector<std::size_t>& subset) const {
  for (auto y : subset)
    for (std::size_t x = 0; x < size(); ++x)
      if (leq(x, y) && std::find(subset.begin(), subset.end(), x) == subset.end()) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Poset::initial_segments() const {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < size(); ++x)
      if (mask >> x & 1) s.push_back(x);
    if (is_initial_segment(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::size_t> Poset::maximal_elements(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> out;
  for (auto x : subset) {
    bool maximal = true;
    for (auto y : subset) maximal = maximal && !less(x, y);
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end(),
            [this](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> all(size());
  std::iota(all.begin(), all.end(), 0);
  return maximal_elements(all);
}

Poset Poset::restrict(const std::vector<std::size_t>& members) const {
  Poset p;
  for (auto m : members) p.labels_.push_back(labels_[m]);
  p.leq_.assign(members.size(), std::vector<bool>(members.size(), false));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) p.leq_[i][j] = leq(members[i], members[j]);
  return p;
}

std::string Poset::to_string() const {
  auto c = covers();
  if (c.empty()) return "antichain";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i)
    out += (i ? ", " : "") + labels_[c[i].first] + "<" + labels_[c[i].second];
  return out;
}

}  // namespace strata::strata
