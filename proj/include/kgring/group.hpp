#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kgring/error.hpp"

namespace kgring {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group as an explicit multiplication table over element indices
// 0..n-1. Index 0 is always the identity; constructors re-index raw tables
// if needed so this holds. Instances are immutable after construction and
// safe to share across threads.
class FiniteGroup {
 public:
  int order() const { return n_; }

  // Left translation L_a is row a of this table.
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }

  const std::string& label(int a) const { return labels_[a]; }
  // Index of the element with the given label, or -1.
  int index_of(const std::string& label) const;

  // Short descriptive name, e.g. "C_3", "D_4", "S_3", "C_2 x C_2".
  const std::string& name() const { return name_; }

  bool is_abelian() const { return abelian_; }

  // Deep table/label comparison; used for handle compatibility checks so
  // that independently built copies of the same group interoperate.
  bool same_structure(const FiniteGroup& other) const;

  friend GroupPtr make_cyclic(int n);
  friend GroupPtr make_dihedral(int n);
  friend GroupPtr make_symmetric(int n);
  friend GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);
  friend GroupPtr from_table(const std::vector<std::vector<int>>& table,
                             std::vector<std::string> labels);

 private:
  FiniteGroup() = default;
  // Validates identity/inverses/associativity over all triples; throws
  // Errc::invalid_group naming the first violating triple.
  void validate() const;
  void finalize(std::string name);

  int n_ = 0;
  std::vector<int> mul_;  // row-major n*n
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::string name_;
  bool abelian_ = false;
};

// C_n with mul(i,j) = (i+j) mod n. Labels e, g, g2, ...
GroupPtr make_cyclic(int n);

// Dihedral group of order 2n: indices 0..n-1 are rotations r^k,
// n..2n-1 are reflections s r^k. D_1 is C_2 presented with a reflection.
GroupPtr make_dihedral(int n);

// Symmetric group on {0..n-1}, n <= 4. Elements are permutations in
// lexicographic one-line order (identity first); labels are the one-line
// digit strings ("102" maps 0->1, 1->0, 2->2), identity labelled "e".
// Product sigma*tau applies tau first.
GroupPtr make_symmetric(int n);

// Componentwise product of order |G|*|H|; element (a,b) has index a*|H|+b
// and label "<label_G(a)>.<label_H(b)>" (identity "e").
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

// Builds a group from a raw square table (entries are element indices).
// The table is validated and re-indexed so the identity sits at index 0.
// Default labels are "e", "x1", "x2", ... by (re-indexed) position.
GroupPtr from_table(const std::vector<std::vector<int>>& table,
                    std::vector<std::string> labels = {});

// Group spec grammar (see README):
//   spec   := family ":" nat | "product(" spec "," spec ")" | "table:" table
//   family := "cyclic" | "dihedral" | "symmetric"
//   table  := "[" row ("," row)* "]",  row := "[" nat ("," nat)* "]"
GroupPtr parse_group_spec(const std::string& text);

// A sorted duplicate-free subset of a group's element indices. Carries the
// group handle; binary operations require compatible handles.
class Subset {
 public:
  Subset(GroupPtr group, std::vector<int> elements);

  static Subset all(const GroupPtr& group);
  static Subset identity_only(const GroupPtr& group);
  // Parses a comma-separated list of element labels.
  static Subset from_labels(const GroupPtr& group, const std::string& labels);

  const GroupPtr& group() const { return group_; }
  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int idx) const;
  std::string describe() const;  // comma-separated labels

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.elems_ == b.elems_;
  }

 private:
  GroupPtr group_;
  std::vector<int> elems_;
};

// {s*t : s in S, t in T}, sorted and duplicate-free.
Subset product_set(const Subset& s, const Subset& t);

// Handle compatibility: same object or structurally identical group.
bool same_group(const GroupPtr& a, const GroupPtr& b);
void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* where);

}  // namespace kgring
