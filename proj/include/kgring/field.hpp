#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kgring/error.hpp"

namespace kgring {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// GF(p^k) with exact arithmetic on dense coefficient vectors over GF(p).
// An element is passed around as a packed code in 0..p^k-1: the base-p
// digits of the code are the coefficients (constant term = least
// significant digit). Codes double as the canonical element enumeration
// order used by every exhaustive search in this project.
//
// The modulus is the lexicographically smallest monic irreducible
// polynomial of degree k over GF(p), comparing coefficient vectors with
// the constant term first. No log/antilog tables; fields stay tiny.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  static FieldPtr make(int p, int k, std::uint64_t budget = std::uint64_t{1} << 20);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint32_t size() const { return q_; }

  // Modulus coefficients, constant term first, length k+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // Errc::invalid_parameter on 0
  Elem pow(Elem a, std::uint64_t e) const;

  // x^(p^m), i.e. the m-th power of the Frobenius automorphism.
  Elem frobenius(Elem x, std::uint64_t m) const;

  // Coefficient vector of length k, constant term first.
  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<int>& c) const;

  // Reduced scalar embedding of an integer (useful for +-1 literals).
  Elem from_int(long long v) const;

  // Polynomial rendering, e.g. "t2+t+1"; prime fields print the residue.
  std::string str(Elem a) const;

  bool same_structure(const FiniteField& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  FiniteField() = default;

  int p_ = 0;
  int k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^0..p^k
};

// Free-function spellings mirroring the rest of the library.
FieldPtr make_field(int p, int k, std::uint64_t budget = std::uint64_t{1} << 20);

// All x in F with frobenius(x, m) = x, in code order. The result is the
// subfield GF(p^gcd(m,k)) sitting inside F.
std::vector<FiniteField::Elem> fixed_subfield(const FieldPtr& f, std::uint64_t m);

// An injective ring homomorphism GF(p^m) -> GF(p^k), m | k. The image of
// the small field's generator is the root of the small modulus inside the
// big field whose coefficient vector is lexicographically smallest.
class Embedding {
 public:
  Embedding(FieldPtr from, FieldPtr to, std::vector<FiniteField::Elem> map)
      : from_(std::move(from)), to_(std::move(to)), map_(std::move(map)) {}

  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }
  FiniteField::Elem operator()(FiniteField::Elem x) const { return map_.at(x); }

 private:
  FieldPtr from_;
  FieldPtr to_;
  std::vector<FiniteField::Elem> map_;
};

// Errc::no_embedding when degrees do not divide or characteristics differ.
Embedding embed(const FieldPtr& small, const FieldPtr& big);

// "GF(p)" or "GF(p^k)".
FieldPtr parse_field_spec(const std::string& text);

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

}  // namespace kgring
