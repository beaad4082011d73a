#include <doctest.h>

#include <algorithm>
#include <functional>

#include "confblocks/qgrass.hpp"
#include "confblocks/schur.hpp"
#include "support.hpp"

using namespace confblocks;

namespace {

// Rim-hook reduction sliding the smallest movable bead first.
std::optional<RimHookReduction> reduce_smallest_first(const Partition& p, const GrassmannBox& box) {
  const int k = box.k;
  std::vector<int> beads(k);
  for (int i = 0; i < k; ++i) beads[i] = p[static_cast<std::size_t>(i)] + k - 1 - i;
  int degree = 0;
  int sign = 1;
  while (*std::max_element(beads.begin(), beads.end()) >= box.n) {
    std::sort(beads.begin(), beads.end());
    bool moved = false;
    for (int i = 0; i < k && !moved; ++i) {
      const int to = beads[i] - box.n;
      if (to < 0 || std::count(beads.begin(), beads.end(), to)) continue;
      const int between = static_cast<int>(std::count_if(beads.begin(), beads.end(), [&](int b) {
        return b > to && b < beads[i];
      }));
      if ((k - between - 1) % 2) sign = -sign;
      beads[i] = to;
      ++degree;
      moved = true;
    }
    if (!moved) return std::nullopt;
  }
  std::sort(beads.begin(), beads.end(), std::greater<>());
  std::vector<int> parts(k);
  for (int i = 0; i < k; ++i) parts[i] = beads[i] - (k - 1 - i);
  return RimHookReduction{Partition(parts), degree, sign};
}

// Quantum Pieri rule: sigma_i * sigma_lam as a classical Pieri sum in the box
// plus q times the sum over nu with lam_j - 1 >= nu_j >= lam_{j+1} - 1.
QClass quantum_pieri(const GrassmannBox& box, int i, const Partition& lam) {
  QClass out(box);
  for (const auto& mu : partitions_in_box(box.k, box.width())) {
    if (mu.size() != lam.size() + i || !mu.contains(lam)) continue;
    bool horizontal = true;
    for (int j = 1; j < box.k; ++j) horizontal &= mu[static_cast<std::size_t>(j)] <= lam[static_cast<std::size_t>(j - 1)];
    if (horizontal) out.add(mu, 0, 1);
  }
  const int target = lam.size() + i - box.n;
  if (target < 0 || lam.length() < box.k) return out;
  for (const auto& nu : partitions_in_box(box.k, box.width())) {
    if (nu.size() != target) continue;
    bool ok = true;
    for (int j = 0; j < box.k; ++j) {
      const int hi = lam[static_cast<std::size_t>(j)] - 1;
      const int lo = j + 1 < box.k ? lam[static_cast<std::size_t>(j + 1)] - 1 : 0;
      const int v = nu[static_cast<std::size_t>(j)];
      ok &= v <= hi && v >= lo;
    }
    if (ok) out.add(nu, 1, 1);
  }
  return out;
}

QClass sigma(const GrassmannBox& box, const Partition& p) { return QClass::schubert(box, p); }

}  // namespace

TEST_CASE("grassmann box") {
  CHECK_THROWS_AS(GrassmannBox(0, 3), DomainError);
  CHECK_THROWS_AS(GrassmannBox(3, 3), DomainError);
  GrassmannBox box(2, 5);
  CHECK(box.width() == 3);
  CHECK(box.holds({3, 3}));
  CHECK_FALSE(box.holds({4}));
}

TEST_CASE("rim_hook_reduce examples") {
  auto a = rim_hook_reduce({2, 1}, GrassmannBox(2, 3));
  REQUIRE(a);
  CHECK(a->remainder.empty());
  CHECK(a->degree == 1);
  CHECK(a->sign == 1);

  auto b = rim_hook_reduce({2}, GrassmannBox(1, 2));
  REQUIRE(b);
  CHECK(b->remainder.empty());
  CHECK(b->degree == 1);
  CHECK(b->sign == 1);

  auto c = rim_hook_reduce({1, 1}, GrassmannBox(2, 4));
  REQUIRE(c);
  CHECK(c->remainder == Partition({1, 1}));
  CHECK(c->degree == 0);
  CHECK(c->sign == 1);

  // (3,1) in Gr(2,4): a 4-hook of height 2 leaves nothing, sign +1
  auto d = rim_hook_reduce({3, 1}, GrassmannBox(2, 4));
  REQUIRE(d);
  CHECK(d->remainder.empty());
  CHECK(d->sign == 1);
  // (4) in Gr(2,4): a horizontal 4-hook of height 1, sign -1
  auto e = rim_hook_reduce({4}, GrassmannBox(2, 4));
  REQUIRE(e);
  CHECK(e->remainder.empty());
  CHECK(e->sign == -1);
  // (3) in Gr(2,4) has no 4-hook
  CHECK_FALSE(rim_hook_reduce({3}, GrassmannBox(2, 4)));

  CHECK_THROWS_AS(rim_hook_reduce({1, 1, 1}, GrassmannBox(2, 4)), DomainError);
}

TEST_CASE("rim_hook_reduce is order independent") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = k + 1; n <= k + 4; ++n) {
      const GrassmannBox box(k, n);
      for (const auto& p : partitions_in_box(k, 3 * n)) {
        const auto a = rim_hook_reduce(p, box);
        const auto b = reduce_smallest_first(p, box);
        REQUIRE(a.has_value() == b.has_value());
        if (!a) continue;
        CHECK(a->remainder == b->remainder);
        CHECK(a->degree == b->degree);
        CHECK(a->sign == b->sign);
        CHECK(box.holds(a->remainder));
        CHECK(a->remainder.size() + a->degree * n == p.size());
      }
    }
  }
}

TEST_CASE("quantum_product examples") {
  const GrassmannBox g24(2, 4);
  auto x = quantum_product(sigma(g24, {2}), sigma(g24, {1, 1}));
  CHECK(x.terms().size() == 1);
  CHECK(x.coefficient({}, 1) == 1);

  const GrassmannBox g13(1, 3);
  auto y = quantum_product(sigma(g13, {2}), sigma(g13, {1}));
  CHECK(y.terms().size() == 1);
  CHECK(y.coefficient({}, 1) == 1);

  auto z = quantum_product(sigma(g24, {2}), sigma(g24, {2}));
  CHECK(z.terms().size() == 1);
  CHECK(z.coefficient({2, 2}, 0) == 1);

  const GrassmannBox g12(1, 2);
  auto h = quantum_product(sigma(g12, {1}), sigma(g12, {1}));
  CHECK(h.terms().size() == 1);
  CHECK(h.coefficient({}, 1) == 1);

  CHECK_THROWS_AS(quantum_product(sigma(g24, {1}), sigma(g13, {1})), DomainError);
}

TEST_CASE("quantum_product matches the quantum Pieri rule") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = k + 1; n <= 7; ++n) {
      const GrassmannBox box(k, n);
      for (int i = 1; i <= box.width(); ++i) {
        for (const auto& lam : partitions_in_box(k, box.width())) {
          CHECK(quantum_product(sigma(box, {i}), sigma(box, lam)) == quantum_pieri(box, i, lam));
        }
      }
    }
  }
}

TEST_CASE("projective space") {
  for (int n = 2; n <= 6; ++n) {
    const GrassmannBox box(1, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        auto prod = quantum_product(sigma(box, Partition({a})), sigma(box, Partition({b})));
        CHECK(prod.terms().size() == 1);
        if (a + b < n) {
          CHECK(prod.coefficient(Partition({a + b}), 0) == 1);
        } else {
          CHECK(prod.coefficient(Partition({a + b - n}), 1) == 1);
        }
      }
    }
  }
}

TEST_CASE("quantum_product commutes and classical part is the LR product") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = k + 1; n <= 6; ++n) {
      const GrassmannBox box(k, n);
      const auto basis = partitions_in_box(k, box.width());
      for (const auto& a : basis) {
        for (const auto& b : basis) {
          const auto ab = quantum_product(sigma(box, a), sigma(box, b));
          CHECK(ab == quantum_product(sigma(box, b), sigma(box, a)));
          QClass classical(box);
          for (const auto& [nu, c] : lr_expand(a, b, k)) {
            if (box.holds(nu)) classical.add(nu, 0, c);
          }
          CHECK(ab.classical_part() == classical);
        }
      }
    }
  }
}

TEST_CASE("gw_invariant examples") {
  const GrassmannBox g24(2, 4);
  CHECK(gw_invariant(g24, std::vector<Partition>{{2}, {1, 1}, {2, 2}}, 1) == 1);
  CHECK(gw_invariant(g24, std::vector<Partition>{{2}, {2}, {2, 2}}, 1) == 0);
  CHECK(gw_invariant(g24, std::vector<Partition>{{2}, {1}}, 0) == 0);
  CHECK(gw_invariant(g24, std::vector<Partition>{{1}, {1}, {1}, {1}}, 0) == 2);
  CHECK(gw_invariant(g24, std::vector<Partition>{{2}, {2}}, 0) == 1);
  CHECK(gw_invariant(GrassmannBox(1, 3), std::vector<Partition>{{2}, {2}, {1}}, 1) == 1);
  CHECK_THROWS_AS(gw_invariant(g24, std::vector<Partition>{{2}}, 0), PreconditionError);
  CHECK_THROWS_AS(gw_invariant(g24, std::vector<Partition>{{3}, {1}}, 0), DomainError);
}

TEST_CASE("gw_invariant symmetry, duality and classical limit") {
  testing::Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const int k = testing::uniform(rng, 1, 3);
    const int n = testing::uniform(rng, k + 1, 7);
    const GrassmannBox box(k, n);
    const int m = testing::uniform(rng, 2, 4);
    std::vector<Partition> classes;
    for (int i = 0; i < m; ++i) classes.push_back(testing::random_partition(rng, k, box.width()));
    int total = 0;
    for (const auto& c : classes) total += c.size();
    const int excess = total - k * box.width();
    const int d = excess >= 0 && excess % n == 0 ? excess / n : 0;
    const BigInt value = gw_invariant(box, classes, d);
    CHECK(value >= 0);

    auto shuffled = classes;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(gw_invariant(box, shuffled, d) == value);

    std::vector<Partition> transposed;
    for (const auto& c : classes) transposed.push_back(c.conjugate());
    CHECK(gw_invariant(GrassmannBox(n - k, n), transposed, d) == value);

    if (d == 0) {
      SchurExpansion prod = SchurExpansion::unit(k);
      for (const auto& c : classes) prod = schur_product_bounded(prod, SchurExpansion::single(c, k));
      const Partition full(std::vector<int>(k, box.width()));
      CHECK(prod.coefficient(full) == value);
    }
  }
}
