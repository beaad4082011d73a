#include "confblocks/nefgeo.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace confblocks {

FCurve::FCurve(std::array<std::vector<int>, 4> blocks, int n) : blocks_(std::move(blocks)), n_(n) {
  std::vector<int> seen(std::max(n, 0), 0);
  for (auto& b : blocks_) {
    if (b.empty()) throw DomainError("F-curve blocks must be non-empty");
    std::sort(b.begin(), b.end());
    for (int i : b) {
      if (i < 0 || i >= n) throw DomainError("F-curve index " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
      if (seen[i]++) throw DomainError("F-curve blocks overlap at index " + std::to_string(i + 1));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) throw DomainError("F-curve blocks miss index " + std::to_string(i + 1));
  }
}

FCurve FCurve::parse(std::string_view text, int n) {
  std::array<std::vector<int>, 4> blocks;
  std::size_t block = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw ParseError("empty index in F-curve '" + std::string(text) + "'");
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad index '" + token + "' in F-curve '" + std::string(text) + "'");
    }
    blocks[block].push_back(v - 1);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      if (++block >= 4) throw ParseError("F-curve '" + std::string(text) + "' has more than four blocks");
    } else {
      token += c;
    }
  }
  flush();
  if (block != 3) throw ParseError("F-curve '" + std::string(text) + "' needs exactly four blocks");
  return FCurve(std::move(blocks), n);
}

std::vector<FCurve> FCurve::all(int n) {
  std::vector<FCurve> out;
  if (n < 4) return out;
  // Restricted growth strings with exactly four labels.
  std::vector<int> label(n, 0);
  std::function<void(int, int)> go = [&](int i, int used) {
    if (i == n) {
      if (used != 4) return;
      std::array<std::vector<int>, 4> blocks;
      for (int j = 0; j < n; ++j) blocks[label[j]].push_back(j);
      out.emplace_back(std::move(blocks), n);
      return;
    }
    if (used + (n - i) < 4) return;
    for (int b = 0; b <= std::min(used, 3); ++b) {
      label[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  go(0, 0);
  return out;
}

std::string FCurve::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < 4; ++b) {
    if (b) out += '|';
    for (std::size_t j = 0; j < blocks_[b].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[b][j] + 1);
    }
  }
  return out;
}

HassettWeights::HassettWeights(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& a : weights_) {
    if (a <= 0 || a > 1) throw DomainError("Hassett weight " + confblocks::to_string(a) + " outside (0, 1]");
  }
  if (total() <= 2) throw DomainError("Hassett weights must sum to more than 2");
}

Rational HassettWeights::total() const {
  Rational s = 0;
  for (const auto& a : weights_) s += a;
  return s;
}

namespace {

ContractionCheck lightest_three(std::span<const int> values, const FCurve& f, const BigInt& bound) {
  if (static_cast<int>(values.size()) != f.points()) {
    throw DomainError("F-curve has " + std::to_string(f.points()) + " points but there are " +
                      std::to_string(values.size()) + " weights");
  }
  ContractionCheck out{false, {}, bound};
  for (std::size_t b = 0; b < 4; ++b) {
    BigInt s = 0;
    for (int i : f.blocks()[b]) s += values[i];
    out.sorted_block_sums[b] = s;
  }
  std::sort(out.sorted_block_sums.begin(), out.sorted_block_sums.end());
  out.contracts = out.sorted_block_sums[0] + out.sorted_block_sums[1] + out.sorted_block_sums[2] <= bound;
  return out;
}

}  // namespace

ContractionCheck contracts_type_a(int r, int level, std::span<const SlWeight> weights, const FCurve& f) {
  std::vector<int> sizes;
  for (const auto& w : weights) {
    if (w.rank() != r || !w.in_level(level)) throw DomainError("weight " + w.to_string() + " not in P_level(sl_{r+1})");
    sizes.push_back(w.size());
  }
  return lightest_three(sizes, f, r + level);
}

ContractionCheck contracts_theta(int level, std::span<const SlWeight> weights, const FCurve& f) {
  std::vector<int> pairings;
  for (const auto& w : weights) {
    if (!w.in_level(level)) throw DomainError("weight " + w.to_string() + " not in P_" + std::to_string(level));
    pairings.push_back(theta_pairing(w));
  }
  return lightest_three(pairings, f, level + 1);
}

HassettWeights hassett_weights_type_a(int r, int level, std::span<const SlWeight> weights) {
  const int bound = r + level;
  int total = 0;
  std::vector<Rational> a;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const int s = weights[i].size();
    if (s == 0) throw PreconditionError("hypothesis 0 < |lambda_i| fails: weight " + std::to_string(i + 1) + " is zero");
    if (s > bound) {
      throw PreconditionError("hypothesis |lambda_i| <= r + level fails: |lambda_" + std::to_string(i + 1) +
                              "| = " + std::to_string(s) + " > " + std::to_string(bound));
    }
    total += s;
    a.push_back(Rational(s) / bound);
  }
  if (total <= 2 * bound) {
    throw PreconditionError("hypothesis sum |lambda_i| > 2(r + level) fails: " + std::to_string(total) +
                            " <= " + std::to_string(2 * bound));
  }
  return HassettWeights(std::move(a));
}

HassettWeights hassett_weights_theta(int level, std::span<const SlWeight> weights) {
  const int bound = level + 1;
  int total = 0;
  std::vector<Rational> a;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const int t = theta_pairing(weights[i]);
    if (t == 0) throw PreconditionError("hypothesis lambda_i != 0 fails: weight " + std::to_string(i + 1) + " is zero");
    if (!weights[i].in_level(level)) {
      throw PreconditionError("weight " + std::to_string(i + 1) + " is not in P_" + std::to_string(level));
    }
    total += t;
    a.push_back(Rational(t) / bound);
  }
  if (total <= 2 * bound) {
    throw PreconditionError("hypothesis sum (lambda_i, theta) > 2(level + 1) fails: " + std::to_string(total) +
                            " <= " + std::to_string(2 * bound));
  }
  return HassettWeights(std::move(a));
}

bool hassett_contracts(const HassettWeights& a, const FCurve& f) {
  if (static_cast<int>(a.weights().size()) != f.points()) {
    throw DomainError("F-curve has " + std::to_string(f.points()) + " points but there are " +
                      std::to_string(a.weights().size()) + " Hassett weights");
  }
  std::array<Rational, 4> sums;
  for (std::size_t b = 0; b < 4; ++b) {
    for (int i : f.blocks()[b]) sums[b] += a.weights()[i];
  }
  // Heaviest leg; ties go to the block holding the smallest index.
  std::size_t heavy = 0;
  for (std::size_t b = 1; b < 4; ++b) {
    if (sums[b] > sums[heavy] || (sums[b] == sums[heavy] && f.blocks()[b].front() < f.blocks()[heavy].front())) {
      heavy = b;
    }
  }
  Rational light = 0;
  for (std::size_t b = 0; b < 4; ++b) {
    if (b != heavy) light += sums[b];
  }
  return light <= 1;
}

}  // namespace confblocks
