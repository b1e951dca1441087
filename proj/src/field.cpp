#include "kgring/field.hpp"

#include <algorithm>
#include <numeric>

namespace kgring {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a mod b; b monic.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  while (a.size() >= b.size()) {
    int lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      int v = a[shift + i] - lead * b[i] % p;
      a[shift + i] = ((v % p) + p) % p;
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t m = 0; m < count; ++m) {
      Poly g(d + 1, 0);
      std::uint64_t v = m;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest (constant term most significant) monic
// irreducible polynomial of degree k over GF(p).
Poly canonical_modulus(int p, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t m = 0; m < count; ++m) {
    Poly f(k + 1, 0);
    std::uint64_t v = m;
    for (int i = k - 1; i >= 0; --i) {  // digit order: c_0 most significant
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(Errc::internal, "no irreducible polynomial found");  // unreachable
}

}  // namespace

FieldPtr FiniteField::make(int p, int k, std::uint64_t budget) {
  if (!is_prime(p))
    throw Error(Errc::invalid_parameter, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::invalid_parameter, "field degree must be >= 1");
  if (k > 8)
    throw Error(Errc::invalid_parameter, "field degree capped at 8 (modulus search is a scan)");
  std::uint64_t q = saturating_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k));
  if (q > budget)
    throw_budget_exceeded(q, budget, "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<std::uint32_t>(q);
  if (k == 1)
    f->modulus_ = {0, 1};  // t - 0 convention: elements are residues mod p
  else
    f->modulus_ = canonical_modulus(p, k);
  f->pow_p_.resize(k + 1);
  f->pow_p_[0] = 1;
  for (int i = 1; i <= k; ++i) f->pow_p_[i] = f->pow_p_[i - 1] * static_cast<std::uint32_t>(p);
  return f;
}

FieldPtr make_field(int p, int k, std::uint64_t budget) { return FiniteField::make(p, k, budget); }

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) return (a + b) % static_cast<Elem>(p_);
  Elem r = 0;
  for (int i = 0; i < k_; ++i) {
    Elem da = a / pow_p_[i] % p_, db = b / pow_p_[i] % p_;
    r += (da + db) % p_ * pow_p_[i];
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : static_cast<Elem>(p_) - a;
  Elem r = 0;
  for (int i = 0; i < k_; ++i) {
    Elem d = a / pow_p_[i] % p_;
    r += (d == 0 ? 0 : static_cast<Elem>(p_) - d) * pow_p_[i];
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (k_ == 1) return a * b % static_cast<Elem>(p_);
  // Schoolbook product of the two coefficient vectors, then reduction.
  int digits[2 * 16];
  std::fill(digits, digits + 2 * k_, 0);
  for (int i = 0; i < k_; ++i) {
    int da = static_cast<int>(a / pow_p_[i] % p_);
    if (da == 0) continue;
    for (int j = 0; j < k_; ++j) {
      int db = static_cast<int>(b / pow_p_[j] % p_);
      digits[i + j] = (digits[i + j] + da * db) % p_;
    }
  }
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    int lead = digits[d];
    if (lead == 0) continue;
    digits[d] = 0;
    for (int i = 0; i < k_; ++i) {
      int v = digits[d - k_ + i] - lead * modulus_[i] % p_;
      digits[d - k_ + i] = ((v % p_) + p_) % p_;
    }
  }
  Elem r = 0;
  for (int i = 0; i < k_; ++i) r += static_cast<Elem>(digits[i]) * pow_p_[i];
  return r;
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(Errc::invalid_parameter, "inverse of zero");
  return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

FiniteField::Elem FiniteField::frobenius(Elem x, std::uint64_t m) const {
  m %= static_cast<std::uint64_t>(k_);  // the Frobenius automorphism has order k
  Elem r = x;
  for (std::uint64_t i = 0; i < m; ++i) r = pow(r, static_cast<std::uint64_t>(p_));
  return r;
}

std::vector<int> FiniteField::coeffs(Elem a) const {
  std::vector<int> c(k_);
  for (int i = 0; i < k_; ++i) c[i] = static_cast<int>(a / pow_p_[i] % p_);
  return c;
}

FiniteField::Elem FiniteField::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > k_)
    throw Error(Errc::invalid_parameter, "coefficient vector longer than field degree");
  Elem r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int v = ((c[i] % p_) + p_) % p_;
    r += static_cast<Elem>(v) * pow_p_[i];
  }
  return r;
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long m = v % p_;
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

std::string FiniteField::str(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    int c = static_cast<int>(a / pow_p_[i] % p_);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += i == 1 ? "t" : "t" + std::to_string(i);
    }
  }
  return out;
}

std::vector<FiniteField::Elem> fixed_subfield(const FieldPtr& f, std::uint64_t m) {
  std::vector<FiniteField::Elem> out;
  for (FiniteField::Elem x = 0; x < f->size(); ++x)
    if (f->frobenius(x, m) == x) out.push_back(x);
  return out;
}

Embedding embed(const FieldPtr& small, const FieldPtr& big) {
  if (small->characteristic() != big->characteristic())
    throw Error(Errc::no_embedding, "characteristic mismatch: " +
                                        std::to_string(small->characteristic()) + " vs " +
                                        std::to_string(big->characteristic()));
  if (big->degree() % small->degree() != 0)
    throw Error(Errc::no_embedding,
                "degree " + std::to_string(small->degree()) + " does not divide " +
                    std::to_string(big->degree()));
  // Root of the small modulus in the big field with lexicographically
  // smallest coefficient vector (constant term compared first).
  const auto& mod = small->modulus();
  FiniteField::Elem root = 0;
  bool found = false;
  std::vector<int> best;
  for (FiniteField::Elem x = 0; x < big->size(); ++x) {
    FiniteField::Elem acc = big->zero(), xp = big->one();
    for (std::size_t i = 0; i < mod.size(); ++i) {
      acc = big->add(acc, big->mul(big->from_int(mod[i]), xp));
      xp = big->mul(xp, x);
    }
    if (acc != 0) continue;
    std::vector<int> c = big->coeffs(x);
    if (!found || c < best) {
      found = true;
      best = c;
      root = x;
    }
  }
  if (!found) throw Error(Errc::internal, "no root of subfield modulus found");  // cannot happen
  std::vector<FiniteField::Elem> map(small->size());
  for (FiniteField::Elem a = 0; a < small->size(); ++a) {
    std::vector<int> c = small->coeffs(a);
    FiniteField::Elem acc = big->zero(), rp = big->one();
    for (int ci : c) {
      acc = big->add(acc, big->mul(big->from_int(ci), rp));
      rp = big->mul(rp, root);
    }
    map[a] = acc;
  }
  return Embedding(small, big, std::move(map));
}

FieldPtr parse_field_spec(const std::string& text) {
  auto fail = [&](const std::string& msg) -> void {
    Error e(Errc::parse_error, "field spec \"" + text + "\": " + msg);
    e.line = 1;
    e.column = 1;
    throw e;
  };
  if (text.size() < 5 || text.substr(0, 3) != "GF(" || text.back() != ')')
    fail("expected GF(p) or GF(p^k)");
  std::string inner = text.substr(3, text.size() - 4);
  std::size_t caret = inner.find('^');
  int p = 0, k = 1;
  try {
    if (caret == std::string::npos) {
      p = std::stoi(inner);
    } else {
      p = std::stoi(inner.substr(0, caret));
      k = std::stoi(inner.substr(caret + 1));
    }
  } catch (const std::exception&) {
    fail("malformed number");
  }
  return make_field(p, k);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
  if (!same_field(a, b))
    throw Error(Errc::invalid_parameter, std::string(where) + ": operands over different fields");
}

}  // namespace kgring
