#include "confblocks/cb.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "confblocks/qgrass.hpp"
#include "confblocks/schur.hpp"

namespace confblocks {

namespace {

void require_rank(int r, const SlWeight& w) {
  if (w.rank() != r) {
    throw DomainError("weight " + w.to_string() + " belongs to sl_" + std::to_string(w.rank() + 1) +
                      ", expected sl_" + std::to_string(r + 1));
  }
}

void require_level(int level, const SlWeight& w) {
  if (!w.in_level(level)) {
    throw DomainError("weight " + w.to_string() + " is not in P_" + std::to_string(level) + " ((lambda,theta) = " +
                      std::to_string(w.theta()) + ")");
  }
}

}  // namespace

BlockSetup::BlockSetup(int r, int level, std::vector<SlWeight> weights)
    : r_(r), level_(level), weights_(std::move(weights)) {
  if (r < 1) throw DomainError("algebra rank r must be positive");
  if (level < 1) throw DomainError("level must be positive");
  for (const auto& w : weights_) {
    require_rank(r, w);
    require_level(level, w);
  }
}

int BlockSetup::total_size() const {
  int total = 0;
  for (const auto& w : weights_) total += w.size();
  return total;
}

Rational casimir(int r, const SlWeight& w) {
  require_rank(r, w);
  const int m = r + 1;
  auto pairing = [m](const std::vector<int>& x, const std::vector<int>& y) {
    long long dot = 0;
    long long sx = 0;
    long long sy = 0;
    for (int i = 0; i < m; ++i) {
      dot += static_cast<long long>(x[i]) * y[i];
      sx += x[i];
      sy += y[i];
    }
    return Rational(dot) - Rational(sx * sy) / m;
  };
  std::vector<int> lam(m);
  std::vector<int> rho(m);
  for (int i = 0; i < m; ++i) {
    lam[i] = w.diagram()[static_cast<std::size_t>(i)];
    rho[i] = r - i;
  }
  return pairing(lam, lam) + 2 * pairing(lam, rho);
}

Rational conformal_weight(int r, int level, const SlWeight& w) {
  require_rank(r, w);
  require_level(level, w);
  return casimir(r, w) / (2 * (level + r + 1));
}

namespace {

struct Reflected {
  Partition weight;
  int sign;
};

// Brings nu + rho into the level-shifted fundamental alcove using the affine
// Weyl group (permutations and translations by (level+r+1) * root lattice).
// nullopt when nu + rho lies on a wall.
std::optional<Reflected> reflect_to_alcove(int r, int level, const Partition& nu) {
  const int m = r + 1;
  const int shifted = level + m;
  std::vector<int> residue(m);
  long long translations = 0;
  for (int i = 0; i < m; ++i) {
    const int v = nu[static_cast<std::size_t>(i)] + (r - i);
    int t = v / shifted;
    int w = v % shifted;
    if (w < 0) {
      w += shifted;
      --t;
    }
    residue[i] = w;
    translations += t;
  }
  {
    std::vector<int> sorted = residue;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  }

  // Restore the coordinate sum with a root-lattice translation: the T-fold
  // rotation "add `shifted` to the smallest entry" keeps us in the alcove.
  long long q = translations / m;
  long long rem = translations % m;
  if (rem < 0) {
    rem += m;
    --q;
  }
  std::vector<long long> entry(m);
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = 0; j < m; ++j) smaller += residue[j] < residue[i];
    entry[i] = residue[i] + q * shifted + (smaller < rem ? shifted : 0);
  }
  int inversions = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) inversions += entry[i] < entry[j];
  }
  std::vector<long long> sorted = entry;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<int> parts(m);
  const long long last = sorted[m - 1];
  for (int i = 0; i < m; ++i) parts[i] = static_cast<int>(sorted[i] - (r - i) - last);
  return Reflected{Partition(std::move(parts)), inversions % 2 ? -1 : 1};
}

// Level-truncated product a x b, keyed by normalized diagram.
std::map<Partition, std::int64_t> kac_walton_product(int r, int level, const SlWeight& a, const SlWeight& b) {
  std::map<Partition, std::int64_t> out;
  for (const auto& [nu, mult] : lr_expand(a.diagram(), b.diagram(), r + 1)) {
    if (auto hit = reflect_to_alcove(r, level, nu)) out[hit->weight] += hit->sign * mult;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw ConsistencyError("negative fusion multiplicity from affine reflection");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

// P_level with cached fusion rows N_{a,b}^{.}.
class FusionRing {
 public:
  FusionRing(int r, int level) : r_(r), level_(level), weights_(weights_in_level(r, level)) {
    for (std::size_t i = 0; i < weights_.size(); ++i) index_.emplace(weights_[i].diagram(), static_cast<int>(i));
    dual_.resize(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i) dual_[i] = index(dual_star(weights_[i]));
    rows_.resize(weights_.size() * weights_.size());
  }

  std::size_t size() const { return weights_.size(); }
  const SlWeight& weight(int i) const { return weights_[i]; }
  int index(const SlWeight& w) const { return index_.at(w.diagram()); }
  int dual(int i) const { return dual_[i]; }

  const std::vector<std::int64_t>& row(int a, int b) {
    const std::size_t slot = static_cast<std::size_t>(a) * weights_.size() + b;
    {
      std::lock_guard lock(mutex_);
      if (rows_[slot]) return *rows_[slot];
    }
    auto computed = std::make_unique<std::vector<std::int64_t>>(weights_.size(), 0);
    for (const auto& [nu, mult] : kac_walton_product(r_, level_, weights_[a], weights_[b])) {
      (*computed)[index_.at(nu)] = mult;
    }
    std::lock_guard lock(mutex_);
    if (!rows_[slot]) rows_[slot] = std::move(computed);
    return *rows_[slot];
  }

 private:
  int r_;
  int level_;
  std::vector<SlWeight> weights_;
  std::map<Partition, int> index_;
  std::vector<int> dual_;
  std::mutex mutex_;
  std::vector<std::unique_ptr<std::vector<std::int64_t>>> rows_;
};

FusionRing& fusion_ring(int r, int level) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<FusionRing>> rings;
  std::lock_guard lock(mutex);
  auto& slot = rings[{r, level}];
  if (!slot) slot = std::make_unique<FusionRing>(r, level);
  return *slot;
}

}  // namespace

BigInt kac_walton_fusion(int r, int level, const SlWeight& a, const SlWeight& b, const SlWeight& c) {
  const BlockSetup checked(r, level, {a, b, c});
  const auto product = kac_walton_product(r, level, a, b);
  auto it = product.find(dual_star(c).diagram());
  return it == product.end() ? BigInt(0) : BigInt(it->second);
}

BigInt fusion_coefficient(int r, int level, const SlWeight& a, const SlWeight& b, const SlWeight& c) {
  return witten_rank(BlockSetup(r, level, {a, b, c}));
}

BigInt cb_rank(const BlockSetup& setup) {
  const auto& ws = setup.weights();
  if (ws.empty()) return 1;
  if (ws.size() == 1) return ws.front().is_zero() ? 1 : 0;
  FusionRing& ring = fusion_ring(setup.r(), setup.level());
  std::vector<BigInt> chain(ring.size(), 0);
  chain[ring.index(ws.front())] = 1;
  for (std::size_t i = 1; i + 1 < ws.size(); ++i) {
    const int step = ring.index(ws[i]);
    std::vector<BigInt> next(ring.size(), 0);
    for (std::size_t a = 0; a < ring.size(); ++a) {
      if (chain[a] == 0) continue;
      const auto& row = ring.row(static_cast<int>(a), step);
      for (std::size_t c = 0; c < ring.size(); ++c) {
        if (row[c] != 0) next[c] += chain[a] * row[c];
      }
    }
    chain = std::move(next);
  }
  return chain[ring.dual(ring.index(ws.back()))];
}

BigInt witten_rank(const BlockSetup& setup) {
  const int r = setup.r();
  const int level = setup.level();
  const int total = setup.total_size();
  if (total % (r + 1) != 0) return 0;
  const int s = total / (r + 1) - level;
  if (s < 0) return coinvariant_rank(r, setup.weights());
  std::vector<Partition> classes;
  for (const auto& w : setup.weights()) classes.push_back(w.diagram());
  for (int i = 0; i < s; ++i) classes.push_back(Partition{level});
  return gw_invariant(GrassmannBox(r + 1, r + 1 + level), classes, s);
}

std::optional<int> critical_level(int r, std::span<const SlWeight> weights) {
  int total = 0;
  for (const auto& w : weights) {
    require_rank(r, w);
    total += w.size();
  }
  if (total % (r + 1) != 0) return std::nullopt;
  return total / (r + 1) - 1;
}

Rational theta_level(int r, std::span<const SlWeight> weights) {
  int total = 0;
  for (const auto& w : weights) {
    require_rank(r, w);
    total += theta_pairing(w);
  }
  return Rational(-1) + Rational(total) / 2;
}

VanishingReport vanishing_report(const BlockSetup& setup) {
  VanishingReport rep;
  rep.critical_level = critical_level(setup.r(), setup.weights());
  rep.theta_level = theta_level(setup.r(), setup.weights());
  rep.above_critical = rep.critical_level && setup.level() > *rep.critical_level;
  rep.above_theta = Rational(setup.level()) > rep.theta_level;
  rep.rank_classical = coinvariant_rank(setup.r(), setup.weights());
  rep.rank_cb = cb_rank(setup);
  rep.ranks_equal = rep.rank_classical == rep.rank_cb;
  if ((rep.above_critical || rep.above_theta) && !rep.ranks_equal) {
    throw ConsistencyError("block rank differs from coinvariant rank above a vanishing level");
  }
  return rep;
}

PartnerData partner(const BlockSetup& setup, bool force) {
  const auto crit = critical_level(setup.r(), setup.weights());
  if (!force) {
    if (!crit) {
      throw PreconditionError("critical level undefined: " + std::to_string(setup.r() + 1) +
                              " does not divide the total box count " + std::to_string(setup.total_size()));
    }
    if (*crit != setup.level()) {
      throw PreconditionError("level " + std::to_string(setup.level()) + " ≠ critical level " +
                              std::to_string(*crit));
    }
  }
  std::vector<SlWeight> transposed;
  for (const auto& w : setup.weights()) transposed.push_back(transpose(w, setup.level()));
  PartnerData out{setup, BlockSetup(setup.level(), setup.r(), std::move(transposed)), 0, 0, 0, false};
  out.rank_source = cb_rank(out.source);
  out.rank_partner = cb_rank(out.partner);
  out.rank_classical = coinvariant_rank(setup.r(), setup.weights());
  out.identity_holds = out.rank_source + out.rank_partner == out.rank_classical;
  if (!force && !out.identity_holds) {
    throw ConsistencyError("critical-level rank identity failed: " + to_string(out.rank_source) + " + " +
                           to_string(out.rank_partner) + " != " + to_string(out.rank_classical));
  }
  return out;
}

BigInt factorization_rank(const BlockSetup& setup, std::span<const int> subset) {
  const int n = static_cast<int>(setup.n());
  std::set<int> in(subset.begin(), subset.end());
  if (in.size() != subset.size()) throw DomainError("factorization subset has repeated indices");
  if (in.empty() || static_cast<int>(in.size()) == n) throw DomainError("factorization subset must be proper and non-empty");
  if (*in.begin() < 0 || *in.rbegin() >= n) throw DomainError("factorization subset index out of range");

  std::vector<SlWeight> left;
  std::vector<SlWeight> right;
  for (int i = 0; i < n; ++i) (in.count(i) ? left : right).push_back(setup.weights()[i]);
  BigInt total = 0;
  for (const auto& mu : weights_in_level(setup.r(), setup.level())) {
    auto l = left;
    auto rt = right;
    l.push_back(mu);
    rt.push_back(dual_star(mu));
    const BigInt a = cb_rank(BlockSetup(setup.r(), setup.level(), std::move(l)));
    if (a == 0) continue;
    total += a * cb_rank(BlockSetup(setup.r(), setup.level(), std::move(rt)));
  }
  return total;
}

DegreeBreakdown degree_m04(int r, int level, std::span<const SlWeight> weights) {
  if (weights.size() != 4) throw DomainError("degree over the 4-pointed moduli space needs exactly 4 weights");
  const BlockSetup setup(r, level, {weights.begin(), weights.end()});
  DegreeBreakdown out;
  out.rank = cb_rank(setup);
  Rational delta_sum = 0;
  for (const auto& w : weights) delta_sum += conformal_weight(r, level, w);
  out.bulk_term = Rational(out.rank) * delta_sum;

  constexpr std::array<std::array<int, 4>, 3> kSplits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  const auto channels = weights_in_level(r, level);
  Rational degree = out.bulk_term;
  for (std::size_t s = 0; s < kSplits.size(); ++s) {
    const auto& [a, b, c, d] = kSplits[s];
    Rational term = 0;
    for (const auto& mu : channels) {
      const BigInt left = cb_rank(BlockSetup(r, level, {weights[a], weights[b], mu}));
      if (left == 0) continue;
      const BigInt right = cb_rank(BlockSetup(r, level, {weights[c], weights[d], dual_star(mu)}));
      term += conformal_weight(r, level, mu) * Rational(left * right);
    }
    out.pairing_terms[s] = term;
    degree -= term;
  }
  if (boost::multiprecision::denominator(degree) != 1) {
    throw ConsistencyError("non-integral degree " + to_string(degree));
  }
  if (degree < 0) throw ConsistencyError("negative degree " + to_string(degree));
  out.degree = boost::multiprecision::numerator(degree);
  return out;
}

}  // namespace confblocks
