#ifndef CONFBLOCKS_NEFGEO_HPP
#define CONFBLOCKS_NEFGEO_HPP

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confblocks/numeric.hpp"
#include "confblocks/young.hpp"

namespace confblocks {

/// F-curve F(N_1, N_2, N_3, N_4): a partition of the points {0, ..., n-1}
/// into four non-empty blocks.
class FCurve {
 public:
  FCurve(std::array<std::vector<int>, 4> blocks, int n);

  /// "1|2|3|4,5,6" with 1-based indices.
  static FCurve parse(std::string_view text, int n);
  /// Every F-curve on n points, each block set listed once (blocks sorted by smallest element).
  static std::vector<FCurve> all(int n);

  const std::array<std::vector<int>, 4>& blocks() const { return blocks_; }
  int points() const { return n_; }
  std::string to_string() const;

 private:
  std::array<std::vector<int>, 4> blocks_;
  int n_;
};

/// Hassett weight data a_1..a_n with 0 < a_i <= 1 and sum > 2.
class HassettWeights {
 public:
  explicit HassettWeights(std::vector<Rational> weights);
  const std::vector<Rational>& weights() const { return weights_; }
  Rational total() const;

 private:
  std::vector<Rational> weights_;
};

struct ContractionCheck {
  bool contracts;
  std::array<BigInt, 4> sorted_block_sums;
  BigInt bound;
};

/// Three lightest block sums of |lambda_i| against r + level.
ContractionCheck contracts_type_a(int r, int level, std::span<const SlWeight> weights, const FCurve& f);
/// Three lightest block sums of (lambda_i, theta) against level + 1.
ContractionCheck contracts_theta(int level, std::span<const SlWeight> weights, const FCurve& f);

/// a_i = |lambda_i| / (r + level). Throws PreconditionError naming the failed hypothesis.
HassettWeights hassett_weights_type_a(int r, int level, std::span<const SlWeight> weights);
/// a_i = (lambda_i, theta) / (level + 1).
HassettWeights hassett_weights_theta(int level, std::span<const SlWeight> weights);

/// Whether rho_A contracts f: the blocks other than the heaviest carry total weight <= 1.
bool hassett_contracts(const HassettWeights& a, const FCurve& f);

}  // namespace confblocks

#endif  // CONFBLOCKS_NEFGEO_HPP
