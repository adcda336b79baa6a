#pragma once

// Finite groups given by Cayley tables, their subgroups, and finite G-sets.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace galstruct {

struct Resolution;
class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
  // Validates the table exhaustively; throws Error("NotAGroup") with a witness.
  static GroupPtr from_table(const std::vector<std::vector<int>>& table, std::string name = "");

  std::size_t order() const noexcept { return table_.size(); }
  const std::string& name() const noexcept { return name_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  bool is_abelian() const;

  // Minimal generating set, lexicographically first among those of minimal size.
  const std::vector<int>& min_generators() const noexcept { return min_gens_; }
  // Free ZG-resolution used by the cohomology engine (built with the group).
  const Resolution& resolution() const { return *resolution_; }

private:
  FiniteGroup() = default;
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> min_gens_;
  std::shared_ptr<const Resolution> resolution_;
};

bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// Subgroup closure of a set of elements.
std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& elements);
bool generates(const FiniteGroup& g, const std::vector<int>& elements);

// Throws Error("TrivialGroup") for |G| = 1.
struct MinGenerators {
  std::size_t d;
  std::vector<int> generators;
};
MinGenerators min_generators(const FiniteGroup& g);

class Subgroup {
public:
  // members are validated (identity, closure).
  Subgroup(GroupPtr parent, std::vector<int> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<int>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  bool contains(int g) const;
  // Position of a parent element inside members(), or -1.
  int local_index(int g) const { return local_[g]; }
  // The subgroup as a standalone group: element i of it is members()[i].
  const GroupPtr& as_group() const noexcept { return group_; }
  // Left transversal of G/H: smallest element index of every coset tH,
  // ordered by that index (so the identity comes first).
  std::vector<int> left_transversal() const;

private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<int> local_;
  GroupPtr group_;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
// All subgroups ordered by (order, member list).
std::vector<Subgroup> subgroups(const GroupPtr& g);

class GSet {
public:
  // action[g][p] = g.p ; throws Error("NotAnAction") with (g, h, point).
  GSet(GroupPtr group, std::vector<std::vector<int>> action);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return action_.empty() ? 0 : action_[0].size(); }
  int act(int g, int p) const { return action_[g][p]; }
  const std::vector<std::vector<int>>& table() const noexcept { return action_; }
  const std::vector<std::vector<int>>& orbits() const noexcept { return orbits_; }
  Subgroup stabilizer(int p) const;
  // For every point q in the orbit of p (ascending), the smallest t with t.p = q.
  std::vector<int> transversal(int p) const;

private:
  GroupPtr group_;
  std::vector<std::vector<int>> action_;
  std::vector<std::vector<int>> orbits_;
};

// Catalog: C1, C2, C3, C4, C5, C6, C2xC2, S3.
GroupPtr catalog_group(const std::string& name);
std::vector<std::string> catalog_names();
// Cyclic group C_n with element k = g^k.
GroupPtr cyclic_group(int n);

// Action of G on the left cosets of H (cosets numbered by their smallest element).
GSet coset_action(const Subgroup& h);

}  // namespace galstruct
