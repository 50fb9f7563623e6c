#include "wminus/dims.hpp"

#include <vector>

namespace wminus {

DimTable series_coefficients(int64_t max_r, int64_t max_k, int side) {
  std::vector<std::vector<int64_t>> grid(static_cast<size_t>(max_r) + 1,
                                         std::vector<int64_t>(static_cast<size_t>(max_k) + 1, 0));
  grid[0][0] = 1;
  // Multiply in each geometric factor 1/(1 - t^a q^b); ascending in-place pass
  // allows unbounded multiplicity.
  for (int64_t a = 1; a <= max_r; a += 2) {
    for (int64_t b = 1; b <= max_k; ++b) {
      for (int64_t r = a; r <= max_r; ++r)
        for (int64_t k = b; k <= max_k; ++k)
          grid[static_cast<size_t>(r)][static_cast<size_t>(k)] +=
              grid[static_cast<size_t>(r - a)][static_cast<size_t>(k - b)];
    }
  }
  DimTable t;
  for (int64_t r = 0; r <= max_r; ++r)
    for (int64_t k = 0; k <= max_k; ++k)
      t[{side >= 0 ? r : -r, k}] = grid[static_cast<size_t>(r)][static_cast<size_t>(k)];
  return t;
}

namespace {
// Multisets as lexicographically nonincreasing pair sequences.
int64_t count_multisets(int64_t r, int64_t k, int64_t max_a, int64_t max_b_at_max_a) {
  if (r == 0 && k == 0) return 1;
  if (r <= 0 || k <= 0) return 0;
  int64_t total = 0;
  // Step by two from an odd max_a so every candidate part stays odd.
  for (int64_t a = max_a; a >= 1; a -= 2) {
    if (a > r) continue;
    int64_t bcap = (a == max_a) ? max_b_at_max_a : k;
    for (int64_t b = std::min(bcap, k); b >= 1; --b) total += count_multisets(r - a, k - b, a, b);
  }
  return total;
}
}  // namespace

int64_t multiset_generator_count(int64_t r, int64_t k) {
  if (r == 0 && k == 0) return 1;
  int64_t start = (r % 2 == 0) ? r - 1 : r;
  return count_multisets(r, k, start < 0 ? 0 : start | 1, k);
}

int64_t odd_partition_count(int64_t n) {
  std::vector<int64_t> dp(static_cast<size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int64_t part = 1; part <= n; part += 2)
    for (int64_t m = part; m <= n; ++m) dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - part)];
  return dp[static_cast<size_t>(n)];
}

int64_t distinct_partition_count(int64_t n) {
  std::vector<int64_t> dp(static_cast<size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int64_t part = 1; part <= n; ++part)
    for (int64_t m = n; m >= part; --m) dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - part)];
  return dp[static_cast<size_t>(n)];
}

std::string render_table(const DimTable& t, int64_t max_r, int64_t max_k) {
  auto cell = [&t](int64_t r, int64_t k) -> int64_t {
    auto it = t.find({r, k});
    return it == t.end() ? 0 : it->second;
  };
  std::vector<size_t> width(static_cast<size_t>(max_k) + 1, 1);
  for (int64_t k = 0; k <= max_k; ++k) {
    size_t w = std::to_string(k).size();
    for (int64_t r = 0; r <= max_r; ++r)
      w = std::max(w, std::to_string(cell(r, k)).size());
    width[static_cast<size_t>(k)] = w;
  }
  auto pad = [](const std::string& s, size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  std::string out = "r\\k";
  for (int64_t k = 0; k <= max_k; ++k)
    out += "  " + pad(std::to_string(k), width[static_cast<size_t>(k)]);
  out += "\n";
  for (int64_t r = 0; r <= max_r; ++r) {
    out += pad(std::to_string(r), 3);
    for (int64_t k = 0; k <= max_k; ++k)
      out += "  " + pad(std::to_string(cell(r, k)), width[static_cast<size_t>(k)]);
    out += "\n";
  }
  return out;
}

}  // namespace wminus
