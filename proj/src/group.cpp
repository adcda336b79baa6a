#include "galstruct/group.hpp"

#include "galstruct/error.hpp"
#include "galstruct/resolution.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace galstruct {

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("NotAGroup", "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error("NotAGroup", "table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw Error("NotAGroup", "entry " + std::to_string(x) + " out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw Error("NotAGroup", "index 0 is not a two-sided identity, witness " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error("NotAGroup", "associativity fails at " + triple(a, b, c));
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) inv[a] = b;
    if (inv[a] < 0) throw Error("NotAGroup", "no inverse for " + std::to_string(a));
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->table_ = table;
  g->inverse_ = std::move(inv);
  if (n > 1) g->min_gens_ = galstruct::min_generators(*g).generators;
  g->resolution_ = std::make_shared<const Resolution>(build_resolution(*g, g->min_gens_));
  return g;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) { return &a == &b || a.table() == b.table(); }

std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int e : elements) {
      const int x = g.mul(out[i], e);
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool generates(const FiniteGroup& g, const std::vector<int>& elements) {
  return closure(g, elements).size() == g.order();
}

MinGenerators min_generators(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  if (n == 1) throw Error("TrivialGroup", "the trivial group has no generators in G\\{1}");
  for (int d = 1; d < n; ++d) {
    // lexicographic d-subsets of {1..n-1}
    std::vector<int> pick(d);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      if (generates(g, pick)) return {static_cast<std::size_t>(d), pick};
      int i = d - 1;
      while (i >= 0 && pick[i] == n - d + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error("NotAGroup", "no generating set found");
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members) : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const int n = static_cast<int>(parent_->order());
  local_.assign(n, -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= n) throw Error("NotASubgroup", "element out of range");
    local_[members_[i]] = static_cast<int>(i);
  }
  if (members_.empty() || members_[0] != 0) throw Error("NotASubgroup", "identity missing");
  const std::size_t m = members_.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int p = parent_->mul(members_[i], members_[j]);
      if (local_[p] < 0)
        throw Error("NotASubgroup", "not closed: " + std::to_string(members_[i]) + "*" + std::to_string(members_[j]));
      table[i][j] = local_[p];
    }
  if (m == parent_->order()) {
    group_ = parent_;
  } else {
    std::string name = parent_->name().empty() ? "" : parent_->name() + "<";
    for (std::size_t i = 0; i < m && !name.empty(); ++i) name += (i ? "," : "") + std::to_string(members_[i]);
    if (!name.empty()) name += ">";
    group_ = FiniteGroup::from_table(table, name);
  }
}

bool Subgroup::contains(int g) const { return local_[g] >= 0; }

std::vector<int> Subgroup::left_transversal() const {
  const int n = static_cast<int>(parent_->order());
  std::vector<bool> covered(n, false);
  std::vector<int> t;
  for (int g = 0; g < n; ++g) {
    if (covered[g]) continue;
    t.push_back(g);
    for (int h : members_) covered[parent_->mul(g, h)] = true;
  }
  return t;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, all);
}

std::vector<Subgroup> subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  for (int x = 0; x < static_cast<int>(g->order()); ++x) {
    auto c = closure(*g, {x});
    if (found.insert(c).second) frontier.push_back(c);
  }
  const std::vector<std::vector<int>> cyclic(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        std::vector<int> gens(h);
        gens.insert(gens.end(), c.begin(), c.end());
        auto j = closure(*g, gens);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  for (auto& m : sorted) out.emplace_back(g, m);
  return out;
}

// ---------------------------------------------------------------- GSet

GSet::GSet(GroupPtr group, std::vector<std::vector<int>> action) : group_(std::move(group)), action_(std::move(action)) {
  const std::size_t n = group_->order();
  if (action_.size() != n) throw Error("NotAnAction", "action table needs one row per group element");
  const std::size_t s = action_[0].size();
  for (std::size_t g = 0; g < n; ++g) {
    if (action_[g].size() != s) throw Error("NotAnAction", "ragged action table at row " + std::to_string(g));
    std::vector<bool> hit(s, false);
    for (std::size_t p = 0; p < s; ++p) {
      const int q = action_[g][p];
      if (q < 0 || static_cast<std::size_t>(q) >= s)
        throw Error("NotAnAction", "entry (" + std::to_string(g) + ", " + std::to_string(p) + ") out of range");
      if (hit[q]) throw Error("NotAnAction", "row " + std::to_string(g) + " is not a permutation");
      hit[q] = true;
    }
  }
  for (std::size_t p = 0; p < s; ++p)
    if (action_[0][p] != static_cast<int>(p))
      throw Error("NotAnAction", "identity moves point " + std::to_string(p) + ", witness " + triple(0, 0, static_cast<int>(p)));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t p = 0; p < s; ++p)
        if (action_[group_->mul(g, h)][p] != action_[g][action_[h][p]])
          throw Error("NotAnAction", "(gh).p != g.(h.p) at (g, h, point) = " +
                                         triple(static_cast<int>(g), static_cast<int>(h), static_cast<int>(p)));
  std::vector<bool> seen(s, false);
  for (std::size_t p = 0; p < s; ++p) {
    if (seen[p]) continue;
    std::set<int> orb;
    for (std::size_t g = 0; g < n; ++g) orb.insert(action_[g][p]);
    for (int q : orb) seen[q] = true;
    orbits_.emplace_back(orb.begin(), orb.end());
  }
}

Subgroup GSet::stabilizer(int p) const {
  std::vector<int> m;
  for (std::size_t g = 0; g < group_->order(); ++g)
    if (action_[g][p] == p) m.push_back(static_cast<int>(g));
  return Subgroup(group_, m);
}

std::vector<int> GSet::transversal(int p) const {
  std::map<int, int> first;
  for (std::size_t g = 0; g < group_->order(); ++g) first.emplace(action_[g][p], static_cast<int>(g));
  std::vector<int> out;
  for (const auto& [q, t] : first) out.push_back(t);
  return out;
}

GSet coset_action(const Subgroup& h) {
  const auto& g = h.parent();
  const auto reps = h.left_transversal();
  std::vector<int> coset_of(g->order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (int m : h.members()) coset_of[g->mul(reps[c], m)] = static_cast<int>(c);
  std::vector<std::vector<int>> act(g->order(), std::vector<int>(reps.size()));
  for (std::size_t x = 0; x < g->order(); ++x)
    for (std::size_t c = 0; c < reps.size(); ++c) act[x][c] = coset_of[g->mul(static_cast<int>(x), reps[c])];
  return GSet(g, act);
}

// ---------------------------------------------------------------- catalog

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(t, "C" + std::to_string(n));
}

namespace {

GroupPtr klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return FiniteGroup::from_table(t, "C2xC2");
}

GroupPtr symmetric_three() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup::from_table(t, "S3");
}

}  // namespace

std::vector<std::string> catalog_names() { return {"C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "S3"}; }

GroupPtr catalog_group(const std::string& name) {
  static const std::map<std::string, GroupPtr> cache = [] {
    std::map<std::string, GroupPtr> m;
    for (int n = 1; n <= 6; ++n) m["C" + std::to_string(n)] = cyclic_group(n);
    m["C2xC2"] = klein_four();
    m["S3"] = symmetric_three();
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) throw Error("UnknownGroup", "no catalog group named '" + name + "'");
  return it->second;
}

}  // namespace galstruct
