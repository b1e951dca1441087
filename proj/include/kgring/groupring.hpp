#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgring/field.hpp"
#include "kgring/group.hpp"

namespace kgring {

// Sparse element of K[G]: map from group-element index to nonzero field
// coefficient. Zero coefficients are never stored, so the key set is the
// support. Values are immutable in spirit; every operation returns a new
// element.
class GroupRingElement {
 public:
  GroupRingElement(GroupPtr group, FieldPtr field)
      : group_(std::move(group)), field_(std::move(field)) {}

  static GroupRingElement zero(const GroupPtr& g, const FieldPtr& f) { return {g, f}; }
  static GroupRingElement one(const GroupPtr& g, const FieldPtr& f) { return delta(g, f, 0); }
  // c * delta_g; defaults to coefficient 1.
  static GroupRingElement delta(const GroupPtr& g, const FieldPtr& f, int elem,
                                FiniteField::Elem c = 1);

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  const std::map<int, FiniteField::Elem>& coeffs() const { return c_; }

  FiniteField::Elem coeff(int g) const;
  void set_coeff(int g, FiniteField::Elem v);  // erases on v == 0

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  std::vector<int> support() const;
  int support_size() const { return static_cast<int>(c_.size()); }

  GroupRingElement add(const GroupRingElement& rhs) const;
  GroupRingElement sub(const GroupRingElement& rhs) const;
  GroupRingElement neg() const;
  GroupRingElement scalar_mul(FiniteField::Elem c) const;

  std::string str() const;  // e.g. "e + g2", "2*g + t*g2" over extension fields

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.c_ == b.c_;
  }

 private:
  GroupPtr group_;
  FieldPtr field_;
  std::map<int, FiniteField::Elem> c_;
};

GroupRingElement delta(const GroupPtr& g, const FieldPtr& f, int elem);

// (alpha*beta)(g) = sum over h1 h2 = g of alpha(h1) beta(h2).
GroupRingElement convolve(const GroupRingElement& a, const GroupRingElement& b);

// d x d matrix over K[G]; all entries share the group and field handles.
class GroupRingMatrix {
 public:
  GroupRingMatrix(GroupPtr group, FieldPtr field, int d);

  static GroupRingMatrix identity(const GroupPtr& g, const FieldPtr& f, int d);

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  int dim() const { return d_; }

  const GroupRingElement& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * d_ + j]; }
  GroupRingElement& at(int i, int j) { return e_[static_cast<std::size_t>(i) * d_ + j]; }

  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b);

 private:
  GroupPtr group_;
  FieldPtr field_;
  int d_;
  std::vector<GroupRingElement> e_;
};

GroupRingMatrix mat_identity(const GroupPtr& g, const FieldPtr& f, int d);
GroupRingMatrix mat_mul(const GroupRingMatrix& a, const GroupRingMatrix& b);

// Some B with entries supported in s_b and A B = 1, or nullopt. A B = 1 is
// linear in B's coefficients (d^2 |s_b| unknowns over K); solved by exact
// Gaussian elimination with free variables set to 0, so the returned B is
// canonical.
std::optional<GroupRingMatrix> solve_right_inverse(const GroupRingMatrix& a, const Subset& s_b);

enum class ProbeOutcome { none_in_scope, witness_found };

struct ProbeVerdict {
  ProbeOutcome outcome = ProbeOutcome::none_in_scope;
  std::optional<std::pair<GroupRingMatrix, GroupRingMatrix>> witness;  // (A, B)
  std::uint64_t search_space = 0;
  std::uint64_t candidates_tested = 0;
  double elapsed_seconds = 0.0;
};

// Enumerates every A in Mat_d(K[G]) with entry supports in S (coefficients
// ordered lexicographically by (row, col, group element, field element)),
// solves A B = 1 for B supported in S, and reports the first pair with
// B A != 1. Finite G always yields none_in_scope (finite rings); a witness
// would be re-verified by independent multiplication before being returned.
// Throws Errc::budget_exceeded when q^(d^2 |S|) > budget.
ProbeVerdict probe_stable_finiteness(const GroupPtr& g, const FieldPtr& f, int d, const Subset& s,
                                     std::uint64_t budget = kDefaultBudget, int jobs = 1);

// The d = 1 case: a b = 1 with b a != 1 in K[G] itself.
ProbeVerdict probe_direct_finiteness(const GroupPtr& g, const FieldPtr& f, const Subset& s,
                                     std::uint64_t budget = kDefaultBudget, int jobs = 1);

// Desk-scale cross-check of the equivalence "K[G] stably finite iff
// K[G x H] directly finite for every finite H": runs the direct probe on
// K[G x H] and stable probes on K[G] at every d <= |H|. A witness on just
// one side at this scope would not by itself contradict the equivalence
// (it quantifies over all H and all d), so the report spells the scopes
// out; a direct witness together with an empty stable probe at d = |H|
// and full support is flagged as inconsistent.
struct CrosscheckReport {
  ProbeVerdict direct_on_product;            // K[G x H], d = 1, S = G x H
  std::vector<ProbeVerdict> stable_on_g;     // K[G], d = 1..|H|, S = G
  bool consistent = true;
  std::string scope_note;
};

CrosscheckReport dykema_juschenko_crosscheck(const GroupPtr& g, const GroupPtr& h,
                                             const FieldPtr& f,
                                             std::uint64_t budget = kDefaultBudget, int jobs = 1);

struct UnitWitness {
  GroupRingElement element;
  GroupRingElement inverse;  // two-sided
  bool trivial;              // support size 1, i.e. c * delta_g
};

struct IdempotentWitness {
  GroupRingElement element;
  bool trivial;  // 0 or 1
};

// All alpha supported in S with a two-sided inverse in K[G]; the inverse
// is found by a d = 1 right-inverse solve over support G and then checking
// the left product. Enumeration order as in the probes.
std::vector<UnitWitness> search_units(const GroupPtr& g, const FieldPtr& f, const Subset& s,
                                      std::uint64_t budget = kDefaultBudget, int jobs = 1);

// All ordered pairs (alpha, beta), both nonzero and supported in S, with
// alpha * beta = 0.
std::vector<std::pair<GroupRingElement, GroupRingElement>> search_zero_divisors(
    const GroupPtr& g, const FieldPtr& f, const Subset& s, std::uint64_t budget = kDefaultBudget,
    int jobs = 1);

// All alpha supported in S with alpha^2 = alpha.
std::vector<IdempotentWitness> search_idempotents(const GroupPtr& g, const FieldPtr& f,
                                                  const Subset& s,
                                                  std::uint64_t budget = kDefaultBudget,
                                                  int jobs = 1);

// Decodes candidate index n into the matrix whose coefficient tuple,
// ordered by (row, col, support position), is the base-q expansion of n
// with the first coordinate most significant. Exposed for tests and for
// the parallel search partitioning.
GroupRingMatrix matrix_from_index(const GroupPtr& g, const FieldPtr& f, int d, const Subset& s,
                                  std::uint64_t n);
GroupRingElement element_from_index(const GroupPtr& g, const FieldPtr& f, const Subset& s,
                                    std::uint64_t n);

}  // namespace kgring
