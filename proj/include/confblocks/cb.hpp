#ifndef CONFBLOCKS_CB_HPP
#define CONFBLOCKS_CB_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "confblocks/numeric.hpp"
#include "confblocks/young.hpp"

namespace confblocks {

/// (sl_{r+1}, weights, level) with every weight in P_level.
class BlockSetup {
 public:
  BlockSetup(int r, int level, std::vector<SlWeight> weights);

  int r() const { return r_; }
  int level() const { return level_; }
  const std::vector<SlWeight>& weights() const { return weights_; }
  std::size_t n() const { return weights_.size(); }
  int total_size() const;

 private:
  int r_;
  int level_;
  std::vector<SlWeight> weights_;
};

struct VanishingReport {
  std::optional<int> critical_level;
  Rational theta_level;
  bool above_critical = false;
  bool above_theta = false;
  BigInt rank_classical;
  BigInt rank_cb;
  bool ranks_equal = false;
};

struct PartnerData {
  BlockSetup source;
  BlockSetup partner;
  BigInt rank_source;
  BigInt rank_partner;
  BigInt rank_classical;
  bool identity_holds = false;
};

struct DegreeBreakdown {
  BigInt degree;
  BigInt rank;
  Rational bulk_term;
  /// Splits {1,2|3,4}, {1,3|2,4}, {1,4|2,3}.
  std::array<Rational, 3> pairing_terms;
};

/// (lambda, lambda + 2 rho) with (theta, theta) = 2.
Rational casimir(int r, const SlWeight& w);
/// casimir / (2 (level + r + 1)).
Rational conformal_weight(int r, int level, const SlWeight& w);

/// Rank of the 3-point block, read off quantum cohomology of Gr(r+1, r+1+level).
BigInt fusion_coefficient(int r, int level, const SlWeight& a, const SlWeight& b, const SlWeight& c);
/// Same number by the affine Weyl alternating sum over classical constituents of a x b.
BigInt kac_walton_fusion(int r, int level, const SlWeight& a, const SlWeight& b, const SlWeight& c);

/// Rank by contracting level-l fusion matrices along the points.
BigInt cb_rank(const BlockSetup& setup);
/// Rank as one quantum product on Gr(r+1, r+1+level).
BigInt witten_rank(const BlockSetup& setup);

/// -1 + sum |lambda_i| / (r+1); nullopt when r+1 does not divide the sum.
std::optional<int> critical_level(int r, std::span<const SlWeight> weights);
/// -1 + (1/2) sum (lambda_i, theta).
Rational theta_level(int r, std::span<const SlWeight> weights);

VanishingReport vanishing_report(const BlockSetup& setup);

/// Builds the level-rank partner (sl_{level+1}, transposed weights, r) and
/// checks rank_source + rank_partner = rank_classical. Throws
/// PreconditionError unless the level is the critical level or `force` is set;
/// when forced, the identity is only recorded, never enforced.
PartnerData partner(const BlockSetup& setup, bool force = false);

/// Sum over mu in P_level of rank(lambda_I, mu) * rank(lambda_{I^c}, mu*).
/// `subset` holds 0-based point indices.
BigInt factorization_rank(const BlockSetup& setup, std::span<const int> subset);

/// Degree of the block bundle over the 4-pointed moduli space.
DegreeBreakdown degree_m04(int r, int level, std::span<const SlWeight> weights);

}  // namespace confblocks

#endif  // CONFBLOCKS_CB_HPP
