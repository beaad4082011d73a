#include "confblocks/schur.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace confblocks {

SchurExpansion::SchurExpansion(int row_bound) : row_bound_(row_bound) {
  if (row_bound < 1) throw DomainError("row bound must be positive");
}

SchurExpansion SchurExpansion::unit(int row_bound) { return single(Partition{}, row_bound); }

SchurExpansion SchurExpansion::single(const Partition& p, int row_bound) {
  SchurExpansion e(row_bound);
  e.add(p, 1);
  return e;
}

BigInt SchurExpansion::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurExpansion::add(const Partition& p, const BigInt& c) {
  if (c == 0 || p.length() > row_bound_) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// Fills nu/lam row by row. a[j][i] = number of letter i in row j; a filling is
// an LR tableau iff
//   columns strict: lam_j + sum_{i'<=i} a[j][i'] <= lam_{j-1} + sum_{i'<i} a[j-1][i'] when a[j][i] > 0
//   lattice word:   sum_{j'<=j} a[j'][i+1] <= sum_{j'<j} a[j'][i]
class LrFiller {
 public:
  using Sink = std::function<void(const std::vector<int>& rows_filled, int rows_done)>;

  LrFiller(const Partition& lam, const Partition& mu, int max_rows, const Partition* target, Sink sink)
      : lam_(lam), mu_(mu.parts()), target_(target), sink_(std::move(sink)) {
    letters_ = static_cast<int>(mu_.size());
    rows_ = std::min(max_rows, lam.length() + letters_);
    placed_.assign(letters_ + 1, 0);
    prev_end_.assign(letters_ + 1, INT_MAX);
    nu_.assign(rows_, 0);
    cur_end_.assign(letters_ + 1, 0);
  }

  void run() {
    if (lam_.length() > rows_) return;
    fill_row(0);
  }

 private:
  void fill_row(int j) {
    bool done = true;
    for (int i = 1; i <= letters_; ++i) done = done && placed_[i] == mu_[i - 1];
    if (done) {
      sink_(nu_, j);
      return;
    }
    if (j >= rows_) return;
    cur_end_[0] = lam_[static_cast<std::size_t>(j)];
    if (j > 0 && cur_end_[0] > prev_end_[letters_]) return;
    place_letter(j, 1);
  }

  void place_letter(int j, int i) {
    const int pos = cur_end_[i - 1];
    if (i > letters_) {
      if (target_ && pos != (*target_)[static_cast<std::size_t>(j)]) return;
      nu_[j] = pos;
      const auto saved_prev = prev_end_;
      for (int l = 1; l <= letters_; ++l) placed_[l] += cur_end_[l] - cur_end_[l - 1];
      prev_end_ = cur_end_;
      auto saved_cur = cur_end_;
      fill_row(j + 1);
      cur_end_ = saved_cur;
      prev_end_ = saved_prev;
      for (int l = 1; l <= letters_; ++l) placed_[l] -= cur_end_[l] - cur_end_[l - 1];
      return;
    }
    int hi = mu_[i - 1] - placed_[i];
    if (i >= 2) hi = std::min(hi, placed_[i - 1] - placed_[i]);
    if (j > 0) hi = std::min(hi, std::max(0, prev_end_[i - 1] - pos));
    if (target_) hi = std::min(hi, (*target_)[static_cast<std::size_t>(j)] - pos);
    for (int a = hi; a >= 0; --a) {
      cur_end_[i] = pos + a;
      place_letter(j, i + 1);
    }
  }

  const Partition& lam_;
  std::vector<int> mu_;
  const Partition* target_;
  Sink sink_;
  int letters_ = 0;
  int rows_ = 0;
  std::vector<int> placed_;    // per letter, count in rows above the current one
  std::vector<int> prev_end_;  // end column of letters <= i in the previous row
  std::vector<int> cur_end_;
  std::vector<int> nu_;
};

Partition assemble(const Partition& lam, const std::vector<int>& filled, int rows_done) {
  std::vector<int> parts(filled.begin(), filled.begin() + rows_done);
  for (int j = rows_done; j < lam.length(); ++j) parts.push_back(lam[static_cast<std::size_t>(j)]);
  return Partition(std::move(parts));
}

using CoeffKey = std::tuple<Partition, Partition, Partition>;
using ExpandKey = std::tuple<Partition, Partition, int>;

struct LrCache {
  std::shared_mutex mutex;
  std::map<CoeffKey, std::int64_t> coefficients;
  std::map<ExpandKey, std::vector<std::pair<Partition, std::int64_t>>> expansions;
};

LrCache& cache() {
  static LrCache c;
  return c;
}

}  // namespace

std::int64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() + mu.size() != nu.size() || !nu.contains(lam) || !nu.contains(mu)) return 0;
  const Partition& a = lam.size() >= mu.size() ? lam : mu;
  const Partition& b = lam.size() >= mu.size() ? mu : lam;
  CoeffKey key{a, b, nu};
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.coefficients.find(key); it != c.coefficients.end()) return it->second;
  }
  std::int64_t count = 0;
  LrFiller filler(a, b, nu.length(), &nu, [&](const std::vector<int>& filled, int rows_done) {
    if (assemble(a, filled, rows_done) == nu) ++count;
  });
  filler.run();
  std::unique_lock lock(c.mutex);
  c.coefficients.emplace(std::move(key), count);
  return count;
}

const std::vector<std::pair<Partition, std::int64_t>>& lr_expand(const Partition& lam, const Partition& mu,
                                                                 int max_rows) {
  const Partition& a = lam.size() >= mu.size() ? lam : mu;
  const Partition& b = lam.size() >= mu.size() ? mu : lam;
  ExpandKey key{a, b, max_rows};
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.expansions.find(key); it != c.expansions.end()) return it->second;
  }
  std::map<Partition, std::int64_t> acc;
  LrFiller filler(a, b, max_rows, nullptr, [&](const std::vector<int>& filled, int rows_done) {
    ++acc[assemble(a, filled, rows_done)];
  });
  filler.run();
  std::vector<std::pair<Partition, std::int64_t>> result(acc.begin(), acc.end());
  std::unique_lock lock(c.mutex);
  auto [it, inserted] = c.expansions.emplace(std::move(key), std::move(result));
  return it->second;
}

SchurExpansion schur_product_bounded(const SchurExpansion& a, const SchurExpansion& b) {
  if (a.row_bound() != b.row_bound()) throw DomainError("Schur expansions have different row bounds");
  SchurExpansion out(a.row_bound());
  for (const auto& [p, cp] : a.terms()) {
    for (const auto& [q, cq] : b.terms()) {
      const BigInt c = cp * cq;
      for (const auto& [nu, m] : lr_expand(p, q, a.row_bound())) out.add(nu, c * m);
    }
  }
  return out;
}

namespace {

void check_ranks(int r, std::span<const SlWeight> weights) {
  for (const auto& w : weights) {
    if (w.rank() != r) {
      throw DomainError("weight " + w.to_string() + " belongs to sl_" + std::to_string(w.rank() + 1) +
                        ", expected sl_" + std::to_string(r + 1));
    }
  }
}

}  // namespace

BigInt coinvariant_rank(int r, std::span<const SlWeight> weights) {
  check_ranks(r, weights);
  if (weights.empty()) return 1;
  int total = 0;
  for (const auto& w : weights) total += w.size();
  if (total % (r + 1) != 0) return 0;
  const int width = total / (r + 1);
  for (const auto& w : weights) {
    if (w.theta() > width) return 0;
  }
  const Partition target = complement_in_box(weights.back().diagram(), r + 1, width);

  // Every constituent of a partial product is contained in every constituent
  // of the full product, so anything outside `target` is dead.
  std::map<Partition, BigInt> acc{{Partition{}, BigInt(1)}};
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    std::map<Partition, BigInt> next;
    for (const auto& [p, c] : acc) {
      for (const auto& [nu, m] : lr_expand(p, weights[i].diagram(), r + 1)) {
        if (target.contains(nu)) next[nu] += c * m;
      }
    }
    acc = std::move(next);
    if (acc.empty()) return 0;
  }
  auto it = acc.find(target);
  return it == acc.end() ? BigInt(0) : it->second;
}

BigInt gl_dimension(const Partition& p, int rows) {
  if (p.length() > rows) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < rows; ++i) {
    for (int j = i + 1; j < rows; ++j) {
      num *= p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

namespace {

using GlWeight = std::vector<int>;
using WeightMap = std::map<GlWeight, std::int64_t>;

// Weight multiplicities of the gl_m irreducible with highest weight `top`
// (length m), by Gelfand-Tsetlin branching gl_m -> gl_{m-1}.
WeightMap gt_weights(const std::vector<int>& top, std::map<std::vector<int>, WeightMap>& memo) {
  if (auto it = memo.find(top); it != memo.end()) return it->second;
  const int m = static_cast<int>(top.size());
  WeightMap out;
  if (m == 1) {
    out[{top[0]}] = 1;
    memo.emplace(top, out);
    return out;
  }
  int top_sum = 0;
  for (int v : top) top_sum += v;
  std::vector<int> below(m - 1);
  std::function<void(int)> choose = [&](int i) {
    if (i == m - 1) {
      int below_sum = 0;
      for (int v : below) below_sum += v;
      for (const auto& [w, c] : gt_weights(below, memo)) {
        GlWeight ext = w;
        ext.push_back(top_sum - below_sum);
        out[ext] += c;
      }
      return;
    }
    for (int v = top[i + 1]; v <= top[i]; ++v) {
      below[i] = v;
      choose(i + 1);
    }
  };
  choose(0);
  memo.emplace(top, out);
  return out;
}

}  // namespace

BigInt invariant_oracle(int r, std::span<const SlWeight> weights, std::uint64_t capacity) {
  check_ranks(r, weights);
  const int m = r + 1;
  BigInt dims = 1;
  for (const auto& w : weights) {
    dims *= gl_dimension(w.diagram(), m);
    if (dims > capacity) {
      throw CapacityError("tensor product dimension exceeds oracle capacity " + std::to_string(capacity));
    }
  }

  std::map<std::vector<int>, WeightMap> memo;
  WeightMap acc{{GlWeight(m, 0), 1}};
  for (const auto& w : weights) {
    std::vector<int> top(m);
    for (int i = 0; i < m; ++i) top[i] = w.diagram()[static_cast<std::size_t>(i)];
    const WeightMap factor = gt_weights(top, memo);
    WeightMap next;
    for (const auto& [x, cx] : acc) {
      for (const auto& [y, cy] : factor) {
        GlWeight z(m);
        for (int i = 0; i < m; ++i) z[i] = x[i] + y[i];
        next[z] += cx * cy;
      }
    }
    acc = std::move(next);
  }

  int total = 0;
  for (const auto& w : weights) total += w.size();
  if (total % m != 0) return 0;
  const int c = total / m;

  // mult of V_{(c,...,c)} = sum_w sgn(w) * mult(nu + rho - w rho)
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::int64_t result = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) inversions += perm[i] > perm[j];
    }
    GlWeight probe(m);
    for (int i = 0; i < m; ++i) probe[i] = c + (r - i) - (r - perm[i]);
    if (auto it = acc.find(probe); it != acc.end()) result += (inversions % 2 ? -1 : 1) * it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace confblocks
