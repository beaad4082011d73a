#include "confblocks/young.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "confblocks/numeric.hpp"

namespace confblocks {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition is not weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(first(), 0);
  for (int row : parts_) {
    for (int c = 0; c < row; ++c) ++cols[c];
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : p.parts()) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

SlWeight::SlWeight(int rank, const Partition& parts) : rank_(rank) {
  if (rank < 1) throw DomainError("algebra rank must be positive");
  if (parts.length() > rank + 1) {
    throw DomainError("diagram " + parts.to_string() + " has more than " + std::to_string(rank + 1) +
                      " rows");
  }
  const int last = parts[static_cast<std::size_t>(rank)];
  std::vector<int> shifted(parts.parts().begin(), parts.parts().end());
  for (int& v : shifted) v -= last;
  diagram_ = Partition(std::move(shifted));
}

std::vector<int> SlWeight::fundamental_coeffs() const {
  std::vector<int> a(rank_);
  for (int i = 0; i < rank_; ++i) a[i] = diagram_[i] - diagram_[i + 1];
  return a;
}

std::string SlWeight::to_string() const {
  std::string out;
  const auto a = fundamental_coeffs();
  for (int j = 0; j < rank_; ++j) {
    if (a[j] == 0) continue;
    if (!out.empty()) out += '+';
    if (a[j] != 1) out += std::to_string(a[j]);
    out += 'w' + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

SlWeight normalize(std::span<const int> parts, int rows) {
  if (rows < 2) throw DomainError("normalize needs at least two rows");
  if (static_cast<int>(parts.size()) > rows) throw DomainError("more parts than rows");
  return SlWeight(rows - 1, Partition(std::vector<int>(parts.begin(), parts.end())));
}

SlWeight weight_from_fundamental(std::span<const int> coeffs, int r) {
  if (static_cast<int>(coeffs.size()) != r) throw DomainError("expected " + std::to_string(r) + " coefficients");
  std::vector<int> parts(r, 0);
  int running = 0;
  for (int i = r - 1; i >= 0; --i) {
    if (coeffs[i] < 0) throw DomainError("negative fundamental coefficient");
    running += coeffs[i];
    parts[i] = running;
  }
  return SlWeight(r, Partition(std::move(parts)));
}

SlWeight transpose(const SlWeight& w, int level) {
  if (level < 1) throw DomainError("level must be positive");
  if (!w.in_level(level)) {
    throw DomainError("weight " + w.to_string() + " is not in P_" + std::to_string(level));
  }
  return SlWeight(level, w.diagram().conjugate());
}

SlWeight dual_star(const SlWeight& w) {
  const int r = w.rank();
  const int k = w.theta();
  std::vector<int> parts(r + 1);
  for (int i = 0; i <= r; ++i) parts[i] = k - w.diagram()[static_cast<std::size_t>(r - i)];
  return SlWeight(r, Partition(std::move(parts)));
}

Partition complement_in_box(const Partition& p, int rows, int width) {
  if (rows < 0 || width < 0 || !p.fits_in(rows, width)) {
    throw DomainError(p.to_string() + " does not fit in a " + std::to_string(rows) + "x" +
                      std::to_string(width) + " box");
  }
  std::vector<int> parts(rows);
  for (int i = 0; i < rows; ++i) parts[i] = width - p[static_cast<std::size_t>(rows - 1 - i)];
  return Partition(std::move(parts));
}

int theta_pairing(const SlWeight& w) { return w.theta(); }

std::vector<int> to_index_set(const Partition& p, int k, int width) {
  if (!p.fits_in(k, width)) {
    throw DomainError(p.to_string() + " does not fit in a " + std::to_string(k) + "x" + std::to_string(width) +
                      " box");
  }
  std::vector<int> out(k);
  for (int a = 1; a <= k; ++a) out[a - 1] = width + a - p[static_cast<std::size_t>(a - 1)];
  return out;
}

namespace {

void box_partitions(int rows, int bound, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (static_cast<int>(prefix.size()) == rows) {
    out.emplace_back(prefix);
    return;
  }
  for (int v = 0; v <= bound; ++v) {
    prefix.push_back(v);
    box_partitions(rows, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int width) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (rows <= 0 || width <= 0) return {Partition{}};
  box_partitions(rows, width, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SlWeight> weights_in_level(int r, int level) {
  if (r < 1 || level < 0) throw DomainError("weights_in_level needs r >= 1 and level >= 0");
  std::vector<SlWeight> out;
  for (const auto& p : partitions_in_box(r, level)) out.emplace_back(r, p);
  return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("cannot read integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

std::vector<int> parse_int_list(std::string_view body, std::string_view context) {
  std::vector<int> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    out.push_back(parse_int(body.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::string_view body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced brackets in '" + s + "'");
    body = body.substr(1, body.size() - 2);
  }
  try {
    return Partition(parse_int_list(body, s));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + s + "'");
  }
}

SlWeight parse_weight(std::string_view text, int r) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty weight");
  if (s.front() == '[') {
    const Partition p = parse_partition(s);
    if (p.length() > r + 1) throw ParseError("'" + s + "' has more than " + std::to_string(r + 1) + " rows");
    return SlWeight(r, p);
  }
  if (s == "0") return SlWeight::zero(r);
  std::vector<int> coeffs(r, 0);
  std::size_t start = 0;
  while (true) {
    const auto plus = s.find('+', start);
    const std::string_view term = std::string_view(s).substr(start, plus - start);
    const auto w = term.find('w');
    if (w == std::string_view::npos) throw ParseError("term '" + std::string(term) + "' has no 'w'");
    const int mult = w == 0 ? 1 : parse_int(term.substr(0, w), s);
    const int j = parse_int(term.substr(w + 1), s);
    if (j < 1 || j > r) {
      throw ParseError("fundamental weight w" + std::to_string(j) + " does not exist for sl_" + std::to_string(r + 1));
    }
    if (mult < 0) throw ParseError("negative coefficient in '" + s + "'");
    coeffs[j - 1] += mult;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return weight_from_fundamental(coeffs, r);
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  out.push_back(cur);
  return out;
}

}  // namespace confblocks
