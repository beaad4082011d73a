// Shared generators and brute-force oracles for the test suites.
#ifndef CONFBLOCKS_TESTS_SUPPORT_HPP
#define CONFBLOCKS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "confblocks/cb.hpp"
#include "confblocks/young.hpp"

namespace confblocks::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Uniform-ish random diagram with at most `rows` rows and first part at most `width`.
inline Partition random_partition(Rng& rng, int rows, int width) {
  std::vector<int> parts(rows);
  for (int& p : parts) p = uniform(rng, 0, width);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(parts);
}

inline SlWeight random_weight(Rng& rng, int r, int level) { return SlWeight(r, random_partition(rng, r, level)); }

inline std::vector<SlWeight> random_weights(Rng& rng, int r, int level, int n) {
  std::vector<SlWeight> ws;
  for (int i = 0; i < n; ++i) ws.push_back(random_weight(rng, r, level));
  return ws;
}

/// Random setup; with `divisible` the total box count is a multiple of r+1.
inline BlockSetup random_setup(Rng& rng, int max_rank, int max_level, int min_n, int max_n, bool divisible) {
  while (true) {
    const int r = uniform(rng, 1, max_rank);
    const int level = uniform(rng, 1, max_level);
    const int n = uniform(rng, min_n, max_n);
    auto ws = random_weights(rng, r, level, n);
    BlockSetup setup(r, level, std::move(ws));
    if (!divisible || setup.total_size() % (r + 1) == 0) return setup;
  }
}

/// Random weights with |lambda_i| <= max_size sitting exactly at their critical level.
struct CriticalTuple {
  int r;
  int level;
  std::vector<SlWeight> weights;
};

inline CriticalTuple random_critical_tuple(Rng& rng, int max_rank, int max_n, int max_size) {
  while (true) {
    const int r = uniform(rng, 1, max_rank);
    const int n = uniform(rng, 2, max_n);
    std::vector<SlWeight> ws;
    int total = 0;
    int widest = 0;
    for (int i = 0; i < n; ++i) {
      Partition p;
      do {
        p = random_partition(rng, r, max_size);
      } while (p.size() > max_size);
      ws.emplace_back(r, p);
      total += ws.back().size();
      widest = std::max(widest, ws.back().theta());
    }
    if (total % (r + 1) != 0) continue;
    const int level = total / (r + 1) - 1;
    if (level < 1 || widest > level) continue;
    return {r, level, ws};
  }
}

/// Brute-force LR coefficient: every filling of nu/lam by letters 1..len(mu),
/// checked for row weakness, column strictness, content and the lattice
/// property of the reverse reading word.
inline std::int64_t brute_force_lr(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lam) || lam.size() + mu.size() != nu.size()) return 0;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < nu.length(); ++i) {
    for (int j = lam[static_cast<std::size_t>(i)]; j < nu[static_cast<std::size_t>(i)]; ++j) cells.emplace_back(i, j);
  }
  const int letters = mu.length();
  if (cells.empty()) return mu.empty() ? 1 : 0;
  if (letters == 0) return 0;
  std::vector<std::vector<int>> grid(nu.length(), std::vector<int>(nu.first(), 0));
  std::int64_t count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      std::vector<int> content(letters + 1, 0);
      // reading word: rows top to bottom, each row right to left
      for (int i = 0; i < nu.length(); ++i) {
        for (int j = nu[static_cast<std::size_t>(i)] - 1; j >= lam[static_cast<std::size_t>(i)]; --j) {
          const int v = grid[i][j];
          ++content[v];
          if (v > 1 && content[v] > content[v - 1]) return;
        }
      }
      for (int v = 1; v <= letters; ++v) {
        if (content[v] != mu[static_cast<std::size_t>(v - 1)]) return;
      }
      ++count;
      return;
    }
    const auto [i, j] = cells[idx];
    for (int v = 1; v <= letters; ++v) {
      if (j > lam[static_cast<std::size_t>(i)] && grid[i][j - 1] > v) continue;
      if (i > 0 && j < nu[static_cast<std::size_t>(i - 1)] && j >= lam[static_cast<std::size_t>(i - 1)] &&
          grid[i - 1][j] >= v) {
        continue;
      }
      grid[i][j] = v;
      fill(idx + 1);
      grid[i][j] = 0;
    }
  };
  fill(0);
  return count;
}

/// All partitions of `size` with at most `rows` rows.
inline std::vector<Partition> partitions_of(int size, int rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      go(left - v, v);
      cur.pop_back();
    }
  };
  go(size, size);
  return out;
}

inline std::vector<SlWeight> duals(const std::vector<SlWeight>& ws) {
  std::vector<SlWeight> out;
  for (const auto& w : ws) out.push_back(dual_star(w));
  return out;
}

inline std::vector<SlWeight> parse_all(std::initializer_list<const char*> texts, int r) {
  std::vector<SlWeight> out;
  for (const char* t : texts) out.push_back(parse_weight(t, r));
  return out;
}

}  // namespace confblocks::testing

#endif  // CONFBLOCKS_TESTS_SUPPORT_HPP
