#ifndef CONFBLOCKS_QGRASS_HPP
#define CONFBLOCKS_QGRASS_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>

#include "confblocks/numeric.hpp"
#include "confblocks/young.hpp"

namespace confblocks {

/// Gr(k, n): k-planes in C^n. Schubert classes are indexed by partitions in a
/// k x (n-k) box.
struct GrassmannBox {
  int k;
  int n;

  GrassmannBox(int k, int n);
  int width() const { return n - k; }
  bool holds(const Partition& p) const { return p.fits_in(k, width()); }

  friend bool operator==(const GrassmannBox&, const GrassmannBox&) = default;
};

struct RimHookReduction {
  Partition remainder;
  int degree;
  int sign;
};

/// Strips n-rim hooks until the diagram fits the box. Each removed hook R
/// contributes q and a sign (-1)^{k - height(R)}. Returns nullopt when the
/// class vanishes.
std::optional<RimHookReduction> rim_hook_reduce(const Partition& p, const GrassmannBox& box);

/// Element of QH*(Gr(k,n)) = H*(Gr(k,n)) [q].
class QClass {
 public:
  using Key = std::pair<Partition, int>;  // (Schubert index, q-degree)

  explicit QClass(GrassmannBox box) : box_(box) {}
  static QClass schubert(const GrassmannBox& box, const Partition& p);

  const GrassmannBox& box() const { return box_; }
  const std::map<Key, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const Partition& p, int degree) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& p, int degree, const BigInt& c);
  /// Keeps only the q^0 part.
  QClass classical_part() const;

  friend bool operator==(const QClass&, const QClass&) = default;

 private:
  GrassmannBox box_;
  std::map<Key, BigInt> terms_;
};

QClass quantum_product(const QClass& a, const QClass& b);

/// <sigma_1, ..., sigma_m>_d: coefficient of q^d [pt] in the quantum product.
BigInt gw_invariant(const GrassmannBox& box, std::span<const Partition> classes, int degree);

}  // namespace confblocks

#endif  // CONFBLOCKS_QGRASS_HPP
