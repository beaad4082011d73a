#include "confblocks/qgrass.hpp"

#include <algorithm>
#include <climits>

#include "confblocks/schur.hpp"

namespace confblocks {

GrassmannBox::GrassmannBox(int k_, int n_) : k(k_), n(n_) {
  if (!(0 < k && k < n)) {
    throw DomainError("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") needs 0 < k < n");
  }
}

std::optional<RimHookReduction> rim_hook_reduce(const Partition& p, const GrassmannBox& box) {
  const int k = box.k;
  const int n = box.n;
  if (p.length() > k) throw DomainError(p.to_string() + " has more than " + std::to_string(k) + " rows");
  if (box.holds(p)) return RimHookReduction{p, 0, 1};

  // Abacus with k beads at beta_i = p_i + k - 1 - i. Removing an n-rim hook of
  // height h slides one bead down n places past h - 1 other beads.
  std::vector<int> beads(k);
  for (int i = 0; i < k; ++i) beads[i] = p[static_cast<std::size_t>(i)] + k - 1 - i;
  int degree = 0;
  int sign = 1;
  while (beads.front() >= n) {
    bool moved = false;
    for (int i = 0; i < k && !moved; ++i) {
      const int to = beads[i] - n;
      if (to < 0) break;
      if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
      int between = 0;
      for (int b : beads) between += (b > to && b < beads[i]);
      const int height = between + 1;
      if ((k - height) % 2 != 0) sign = -sign;
      beads[i] = to;
      std::sort(beads.begin(), beads.end(), std::greater<>());
      ++degree;
      moved = true;
    }
    if (!moved) return std::nullopt;
  }
  std::vector<int> parts(k);
  for (int i = 0; i < k; ++i) parts[i] = beads[i] - (k - 1 - i);
  return RimHookReduction{Partition(std::move(parts)), degree, sign};
}

QClass QClass::schubert(const GrassmannBox& box, const Partition& p) {
  if (!box.holds(p)) {
    throw DomainError(p.to_string() + " is not a Schubert index for Gr(" + std::to_string(box.k) + "," +
                      std::to_string(box.n) + ")");
  }
  QClass c(box);
  c.add(p, 0, 1);
  return c;
}

BigInt QClass::coefficient(const Partition& p, int degree) const {
  auto it = terms_.find({p, degree});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QClass::add(const Partition& p, int degree, const BigInt& c) {
  if (c == 0) return;
  if (!box_.holds(p) || degree < 0) throw DomainError("term " + p.to_string() + " outside the Schubert basis");
  auto [it, inserted] = terms_.try_emplace(Key{p, degree}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QClass QClass::classical_part() const {
  QClass out(box_);
  for (const auto& [key, c] : terms_) {
    if (key.second == 0) out.add(key.first, 0, c);
  }
  return out;
}

namespace {

// a * b, discarding any term whose q-degree exceeds max_degree.
QClass multiply(const QClass& a, const QClass& b, int max_degree) {
  if (!(a.box() == b.box())) throw DomainError("quantum classes live on different Grassmannians");
  const GrassmannBox& box = a.box();
  QClass out(box);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const int base = ka.second + kb.second;
      if (base > max_degree) continue;
      const BigInt c = ca * cb;
      for (const auto& [nu, m] : lr_expand(ka.first, kb.first, box.k)) {
        auto red = rim_hook_reduce(nu, box);
        if (!red || base + red->degree > max_degree) continue;
        out.add(red->remainder, base + red->degree, c * (red->sign * m));
      }
    }
  }
  return out;
}

}  // namespace

QClass quantum_product(const QClass& a, const QClass& b) { return multiply(a, b, INT_MAX); }

BigInt gw_invariant(const GrassmannBox& box, std::span<const Partition> classes, int degree) {
  if (classes.size() < 2) throw PreconditionError("a Gromov-Witten invariant needs at least two classes");
  if (degree < 0) throw DomainError("q-degree must be non-negative");
  int total = 0;
  for (const auto& p : classes) {
    if (!box.holds(p)) {
      throw DomainError(p.to_string() + " is not a Schubert index for Gr(" + std::to_string(box.k) + "," +
                        std::to_string(box.n) + ")");
    }
    total += p.size();
  }
  if (total != box.k * box.width() + box.n * degree) return 0;

  QClass acc = QClass::schubert(box, classes.front());
  for (std::size_t i = 1; i < classes.size() && !acc.is_zero(); ++i) {
    acc = multiply(acc, QClass::schubert(box, classes[i]), degree);
  }
  std::vector<int> full(box.k, box.width());
  BigInt value = acc.coefficient(Partition(std::move(full)), degree);
  if (value < 0) throw ConsistencyError("negative Gromov-Witten invariant: rim-hook signs did not cancel");
  return value;
}

}  // namespace confblocks
