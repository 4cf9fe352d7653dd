#include "pspace/poset.hpp"

#include <algorithm>
#include <set>

#include "pspace/error.hpp"

namespace pspace {

namespace {

std::vector<std::string> numeric_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

Poset Poset::from_relation(std::vector<std::string> names,
                           const std::vector<std::vector<bool>>& leq) {
  Poset p;
  const std::size_t n = names.size();
  p.names_ = std::move(names);
  p.up_.assign(n, Subset(n));
  p.down_.assign(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) {
        p.up_[i].insert(j);
        p.down_[j].insert(i);
      }
  return p;
}

Poset Poset::from_pairs(std::vector<std::string> names,
                        const std::vector<std::pair<std::size_t, std::size_t>>& le) {
  const std::size_t n = names.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (auto [a, b] : le) {
    if (a >= n || b >= n) throw Error(ErrorCode::invalid_argument, "order pair index out of range");
    rel[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i][j] && rel[j][i])
        throw Error(ErrorCode::antisymmetry_violation,
                    "cycle through '" + names[i] + "' and '" + names[j] + "'");
  return from_relation(std::move(names), rel);
}

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < size() && direct; ++k)
        if (less(i, k) && less(k, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

bool Poset::same_order(const Poset& other) const {
  return size() == other.size() && up_ == other.up_;
}

Poset validate_poset(std::vector<std::string> names,
                     const std::vector<std::pair<std::string, std::string>>& le_pairs) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw Error(ErrorCode::duplicate_label, "duplicate label '" + n + "'");
  auto lookup = [&](const std::string& label) {
    auto it = std::find(names.begin(), names.end(), label);
    if (it == names.end()) throw Error(ErrorCode::unknown_label, "unknown label '" + label + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(le_pairs.size());
  for (const auto& [a, b] : le_pairs) idx.emplace_back(lookup(a), lookup(b));
  return Poset::from_pairs(std::move(names), idx);
}

Poset chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> le;
  for (std::size_t i = 0; i + 1 < n; ++i) le.emplace_back(i, i + 1);
  return Poset::from_pairs(numeric_names(n), le);
}

Poset antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Poset::from_pairs(std::move(names), {});
}

Poset single_point() { return Poset::from_pairs({"*"}, {}); }

Subset closure(const Poset& p, const Subset& s, Direction dir) {
  Subset out = p.none();
  s.for_each([&](std::size_t i) { out |= dir == Direction::down ? p.down(i) : p.up(i); });
  return out;
}

bool is_lower_set(const Poset& p, const Subset& s) {
  return closure(p, s, Direction::down) == s;
}

bool is_upper_set(const Poset& p, const Subset& s) { return closure(p, s, Direction::up) == s; }

bool is_antichain(const Poset& p, const Subset& s) {
  bool ok = true;
  s.for_each([&](std::size_t i) {
    if ((p.up(i) & s).count() != 1) ok = false;
  });
  return ok;
}

bool is_convex(const Poset& p, const Subset& s) {
  return (closure(p, s, Direction::down) & closure(p, s, Direction::up)) == s;
}

Subset maximal_elements(const Poset& p, const Subset& s) {
  Subset out = p.none();
  s.for_each([&](std::size_t i) {
    if ((p.up(i) & s).count() == 1) out.insert(i);
  });
  return out;
}

Subset minimal_elements(const Poset& p, const Subset& s) {
  Subset out = p.none();
  s.for_each([&](std::size_t i) {
    if ((p.down(i) & s).count() == 1) out.insert(i);
  });
  return out;
}

Antichain Antichain::checked(const Poset& p, Subset s) {
  if (s.universe() != p.size()) throw Error(ErrorCode::base_mismatch, "subset width differs from poset size");
  if (!is_antichain(p, s)) throw Error(ErrorCode::invalid_argument, "elements are not pairwise incomparable");
  return Antichain(std::move(s));
}

Antichain extremal_antichain(const Poset& p, const Subset& s, Extremum which) {
  if (s.universe() != p.size()) throw Error(ErrorCode::base_mismatch, "subset width differs from poset size");
  if (s.empty()) throw Error(ErrorCode::empty_subset, "extremal elements of an empty subset");
  return Antichain(which == Extremum::max ? maximal_elements(p, s) : minimal_elements(p, s));
}

bool check_monotone(const MonotoneMap& f) {
  if (f.table.size() != f.src.size()) return false;
  for (std::size_t v : f.table)
    if (v >= f.dst.size()) return false;
  for (std::size_t i = 0; i < f.src.size(); ++i)
    for (std::size_t j = 0; j < f.src.size(); ++j)
      if (f.src.leq(i, j) && !f.dst.leq(f.table[i], f.table[j])) return false;
  return true;
}

Poset tensor(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() * q.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) names.push_back("(" + p.name(x) + "," + q.name(y) + ")");
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x1 = a / q.size(), y1 = a % q.size();
      const std::size_t x2 = b / q.size(), y2 = b % q.size();
      rel[a][b] = p.leq(x1, x2) && q.leq(y1, y2);
    }
  return Poset::from_relation(std::move(names), rel);
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n > 6) throw Error(ErrorCode::size_limit_exceeded, "poset enumeration is limited to 6 elements");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;

  std::vector<Poset> out;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(rel[i].begin(), rel[i].end(), false);
      rel[i][i] = true;
    }
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      // 0: incomparable, 1: i < j, 2: j < i
      const std::size_t digit = c % 3;
      c /= 3;
      if (digit == 1) rel[i][j] = true;
      if (digit == 2) rel[j][i] = true;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if (rel[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (rel[j][k] && !rel[i][k]) {
              transitive = false;
              break;
            }
    if (transitive) out.push_back(Poset::from_relation(numeric_names(n), rel));
  }
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_monotone_maps(const Poset& src, const Poset& dst) {
  std::vector<std::vector<std::size_t>> out;
  if (dst.empty() && !src.empty()) return out;
  std::vector<std::size_t> table(src.size(), 0);
  // Depth-first over table positions; each prefix is checked against all
  // earlier positions so only monotone completions are expanded.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == src.size()) {
      out.push_back(table);
      return;
    }
    for (std::size_t v = 0; v < dst.size(); ++v) {
      bool ok = true;
      for (std::size_t k = 0; k < pos && ok; ++k) {
        if (src.leq(k, pos) && !dst.leq(table[k], v)) ok = false;
        if (src.leq(pos, k) && !dst.leq(v, table[k])) ok = false;
      }
      if (!ok) continue;
      table[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace pspace
