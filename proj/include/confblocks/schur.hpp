#ifndef CONFBLOCKS_SCHUR_HPP
#define CONFBLOCKS_SCHUR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "confblocks/numeric.hpp"
#include "confblocks/young.hpp"

namespace confblocks {

/// Positive integer combination of Schur functions in `row_bound` variables.
class SchurExpansion {
 public:
  explicit SchurExpansion(int row_bound);

  static SchurExpansion unit(int row_bound);
  static SchurExpansion single(const Partition& p, int row_bound);

  int row_bound() const { return row_bound_; }
  const std::map<Partition, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const Partition& p) const;
  bool empty() const { return terms_.empty(); }

  /// Adds c * s_p; partitions with too many rows are dropped, zeros erased.
  void add(const Partition& p, const BigInt& c);

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  int row_bound_;
  std::map<Partition, BigInt> terms_;
};

/// Number of Littlewood-Richardson tableaux of shape nu/lam with content mu.
std::int64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/// Every nu with at most `max_rows` rows and c^nu_{lam,mu} > 0, with its coefficient.
/// Memoized; the returned reference stays valid for the process lifetime.
const std::vector<std::pair<Partition, std::int64_t>>& lr_expand(const Partition& lam, const Partition& mu,
                                                                 int max_rows);

SchurExpansion schur_product_bounded(const SchurExpansion& a, const SchurExpansion& b);

/// dim (V_{lambda_1} x ... x V_{lambda_n})_{sl_{r+1}} via the box-complement multiplicity.
BigInt coinvariant_rank(int r, std::span<const SlWeight> weights);

inline constexpr std::uint64_t kDefaultOracleCapacity = 10'000'000;

/// Same quantity as coinvariant_rank, from weight multiplicities of the tensor
/// product followed by Weyl alternation. Throws CapacityError when the product
/// of the representation dimensions exceeds `capacity`.
BigInt invariant_oracle(int r, std::span<const SlWeight> weights,
                        std::uint64_t capacity = kDefaultOracleCapacity);

/// Weyl dimension formula for the gl_{rows} representation with diagram p.
BigInt gl_dimension(const Partition& p, int rows);

}  // namespace confblocks

#endif  // CONFBLOCKS_SCHUR_HPP
