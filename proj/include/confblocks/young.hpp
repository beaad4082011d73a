#ifndef CONFBLOCKS_YOUNG_HPP
#define CONFBLOCKS_YOUNG_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace confblocks {

/// A Young diagram stored as its weakly decreasing row lengths, without
/// trailing zeros. Equality, ordering and hashing see only that canonical form.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }

  /// Row length, 0-based; zero past the last nonzero row.
  int operator[](std::size_t row) const { return row < parts_.size() ? parts_[row] : 0; }

  /// Number of nonzero rows.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Total number of boxes.
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  bool fits_in(int rows, int width) const { return length() <= rows && first() <= width; }
  bool contains(const Partition& other) const;
  Partition conjugate() const;

  /// "[3,1,1]"; the empty diagram prints as "[]".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Dominant integral weight of sl_{r+1}, kept as a normalized diagram with at
/// most r rows.
class SlWeight {
 public:
  /// Normalizes on construction: `parts` may have up to rank+1 rows.
  SlWeight(int rank, const Partition& parts);
  SlWeight(int rank, std::initializer_list<int> parts) : SlWeight(rank, Partition(parts)) {}

  static SlWeight zero(int rank) { return SlWeight(rank, Partition{}); }

  int rank() const { return rank_; }
  const Partition& diagram() const { return diagram_; }
  int size() const { return diagram_.size(); }
  bool is_zero() const { return diagram_.empty(); }

  /// (lambda, theta) = first row of the normalized diagram.
  int theta() const { return diagram_.first(); }
  bool in_level(int level) const { return theta() <= level; }

  /// Coefficients a_1..a_r with lambda = sum a_j omega_j.
  std::vector<int> fundamental_coeffs() const;
  /// "2w1+w3"; the zero weight prints as "0".
  std::string to_string() const;

  friend bool operator==(const SlWeight&, const SlWeight&) = default;
  friend std::strong_ordering operator<=>(const SlWeight& a, const SlWeight& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.diagram_ <=> b.diagram_;
  }

 private:
  int rank_;
  Partition diagram_;
};

/// Subtracts the rows-th part from every part. `rows` is r+1 for sl_{r+1}.
SlWeight normalize(std::span<const int> parts, int rows);

/// lambda^{(i)} = sum_{j >= i} a_j.
SlWeight weight_from_fundamental(std::span<const int> coeffs, int r);

/// Conjugate diagram, read as a weight of sl_{level+1}. Requires w in P_level.
SlWeight transpose(const SlWeight& w, int level);

/// Highest weight of the dual representation.
SlWeight dual_star(const SlWeight& w);

/// (width - p^{(rows)}, ..., width - p^{(1)}).
Partition complement_in_box(const Partition& p, int rows, int width);

int theta_pairing(const SlWeight& w);

/// Schubert index set {width + a - p^{(a)} : a = 1..k}, 1-based and increasing.
std::vector<int> to_index_set(const Partition& p, int k, int width);

/// All of P_level(sl_{r+1}) in lexicographic order of normalized diagrams.
std::vector<SlWeight> weights_in_level(int r, int level);

/// Every partition fitting in a rows x width box, lexicographically ordered.
std::vector<Partition> partitions_in_box(int rows, int width);

/// Accepts "2w1+w3", "w2", "0" or "[3,1,1]". Whitespace is ignored.
SlWeight parse_weight(std::string_view text, int r);
/// Accepts "[3,1]" or "3,1" (bare) or "[]".
Partition parse_partition(std::string_view text);

/// Splits on `sep` outside of square brackets.
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace confblocks

template <>
struct std::hash<confblocks::Partition> : confblocks::PartitionHash {};

#endif  // CONFBLOCKS_YOUNG_HPP
