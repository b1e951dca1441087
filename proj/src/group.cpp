#include "kgring/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kgring {

int FiniteGroup::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

bool FiniteGroup::same_structure(const FiniteGroup& other) const {
  return n_ == other.n_ && mul_ == other.mul_ && labels_ == other.labels_;
}

void FiniteGroup::validate() const {
  if (n_ <= 0) throw Error(Errc::invalid_parameter, "group order must be positive");
  for (int i = 0; i < n_; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i)
      throw Error(Errc::invalid_group,
                  "element 0 is not a two-sided identity at element " + std::to_string(i));
  }
  for (int i = 0; i < n_; ++i) {
    int j = inv_[i];
    if (j < 0 || j >= n_ || mul(i, j) != 0 || mul(j, i) != 0)
      throw Error(Errc::invalid_group, "no two-sided inverse for element " + std::to_string(i));
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(Errc::invalid_group, "associativity fails at triple (" + std::to_string(a) +
                                               "," + std::to_string(b) + "," + std::to_string(c) +
                                               ")");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != n_)
    throw Error(Errc::invalid_group, "element labels are not unique");
  if (labels_[0] != "e") throw Error(Errc::invalid_group, "identity label must be \"e\"");
}

void FiniteGroup::finalize(std::string name) {
  name_ = std::move(name);
  inv_.assign(n_, -1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (mul(i, j) == 0 && mul(j, i) == 0) {
        inv_[i] = j;
        break;
      }
  abelian_ = true;
  for (int a = 0; a < n_ && abelian_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
  validate();
}

GroupPtr make_cyclic(int n) {
  if (n <= 0) throw Error(Errc::invalid_parameter, "cyclic group order must be >= 1");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->mul_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g->mul_[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  g->labels_.resize(n);
  for (int i = 0; i < n; ++i)
    g->labels_[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
  g->finalize("C_" + std::to_string(n));
  return g;
}

GroupPtr make_dihedral(int n) {
  if (n <= 0) throw Error(Errc::invalid_parameter, "dihedral parameter must be >= 1");
  int order = 2 * n;
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = order;
  g->mul_.resize(static_cast<std::size_t>(order) * order);
  // Element (eps, k) = s^eps r^k at index eps*n + k, with s r^k s = r^{-k}.
  auto idx = [n](int eps, int k) { return eps * n + ((k % n) + n) % n; };
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2) {
          // (s^e1 r^k1)(s^e2 r^k2) = s^(e1+e2) r^(k2 + (-1)^e2 k1)
          int eps = (e1 + e2) % 2;
          int k = e2 == 0 ? k1 + k2 : k2 - k1;
          g->mul_[static_cast<std::size_t>(idx(e1, k1)) * order + idx(e2, k2)] = idx(eps, k);
        }
  g->labels_.resize(order);
  for (int k = 0; k < n; ++k) {
    g->labels_[idx(0, k)] = k == 0 ? "e" : (k == 1 ? "r" : "r" + std::to_string(k));
    g->labels_[idx(1, k)] = k == 0 ? "s" : (k == 1 ? "sr" : "sr" + std::to_string(k));
  }
  g->finalize("D_" + std::to_string(n));
  return g;
}

GroupPtr make_symmetric(int n) {
  if (n <= 0) throw Error(Errc::invalid_parameter, "symmetric group parameter must be >= 1");
  if (n > 4)
    throw Error(Errc::invalid_parameter,
                "symmetric groups are capped at n <= 4 (exhaustive searches downstream)");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int order = static_cast<int>(perms.size());
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = order;
  g->mul_.resize(static_cast<std::size_t>(order) * order);
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> q(n);
      for (int x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];  // (ab)(x) = a(b(x))
      g->mul_[static_cast<std::size_t>(a) * order + b] = find(q);
    }
  g->labels_.resize(order);
  for (int a = 0; a < order; ++a) {
    if (a == 0) {
      g->labels_[a] = "e";
      continue;
    }
    std::string s;
    for (int x : perms[a]) s += static_cast<char>('0' + x);
    g->labels_[a] = s;
  }
  g->finalize("S_" + std::to_string(n));
  return g;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  if (!a || !b) throw Error(Errc::invalid_parameter, "direct_product: null group");
  int na = a->order(), nb = b->order();
  int order = na * nb;
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = order;
  g->mul_.resize(static_cast<std::size_t>(order) * order);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          int lhs = i1 * nb + j1, rhs = i2 * nb + j2;
          g->mul_[static_cast<std::size_t>(lhs) * order + rhs] =
              a->mul(i1, i2) * nb + b->mul(j1, j2);
        }
  g->labels_.resize(order);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      g->labels_[i * nb + j] = (i == 0 && j == 0) ? "e" : a->label(i) + "." + b->label(j);
  g->finalize(a->name() + " x " + b->name());
  return g;
}

GroupPtr from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw Error(Errc::invalid_parameter, "from_table: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(Errc::invalid_group, "from_table: table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw Error(Errc::invalid_group,
                    "from_table: entry " + std::to_string(v) + " out of range 0.." +
                        std::to_string(n - 1));
  }
  // Locate the two-sided identity, then re-index so it sits at 0.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw Error(Errc::invalid_group, "from_table: no two-sided identity element");
  std::vector<int> old_of_new(n), new_of_old(n);
  std::iota(old_of_new.begin(), old_of_new.end(), 0);
  std::swap(old_of_new[0], old_of_new[e]);
  for (int i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->mul_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g->mul_[static_cast<std::size_t>(i) * n + j] =
          new_of_old[table[old_of_new[i]][old_of_new[j]]];
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(Errc::invalid_parameter, "from_table: wrong number of labels");
  g->labels_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (labels.empty())
      g->labels_[i] = i == 0 ? "e" : "x" + std::to_string(i);
    else
      g->labels_[i] = labels[old_of_new[i]];
  }
  if (!labels.empty() && g->labels_[0] != "e") g->labels_[0] = "e";
  g->finalize("table[" + std::to_string(n) + "]");
  return g;
}

namespace {

// Recursive-descent parser for the group spec grammar.
struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit SpecParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) {
    Error e(Errc::parse_error,
            "group spec error at position " + std::to_string(pos + 1) + ": " + msg);
    e.line = 1;
    e.column = static_cast<int>(pos) + 1;
    throw e;
  }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }

  int nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stoi(s.substr(start, pos - start));
  }

  GroupPtr parse() {
    GroupPtr g = parse_spec();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return g;
  }

  GroupPtr parse_spec() {
    std::string head = ident();
    if (head == "product") {
      expect('(');
      GroupPtr a = parse_spec();
      expect(',');
      GroupPtr b = parse_spec();
      expect(')');
      return direct_product(a, b);
    }
    expect(':');
    if (head == "cyclic") return make_cyclic(nat());
    if (head == "dihedral") return make_dihedral(nat());
    if (head == "symmetric") return make_symmetric(nat());
    if (head == "table") return from_table(parse_table());
    throw Error(Errc::unsupported_spec, "unsupported group family \"" + head + "\"");
  }

  std::vector<std::vector<int>> parse_table() {
    std::vector<std::vector<int>> rows;
    expect('[');
    do {
      expect('[');
      std::vector<int> row;
      do {
        row.push_back(nat());
      } while (eat(','));
      expect(']');
      rows.push_back(std::move(row));
    } while (eat(','));
    expect(']');
    return rows;
  }
};

}  // namespace

GroupPtr parse_group_spec(const std::string& text) { return SpecParser(text).parse(); }

Subset::Subset(GroupPtr group, std::vector<int> elements)
    : group_(std::move(group)), elems_(std::move(elements)) {
  if (!group_) throw Error(Errc::invalid_parameter, "Subset: null group");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  for (int idx : elems_)
    if (idx < 0 || idx >= group_->order())
      throw Error(Errc::invalid_parameter,
                  "Subset: element index " + std::to_string(idx) + " out of range");
}

Subset Subset::all(const GroupPtr& group) {
  std::vector<int> v(group->order());
  std::iota(v.begin(), v.end(), 0);
  return Subset(group, std::move(v));
}

Subset Subset::identity_only(const GroupPtr& group) { return Subset(group, {0}); }

Subset Subset::from_labels(const GroupPtr& group, const std::string& labels) {
  std::vector<int> v;
  std::stringstream ss(labels);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // trim
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error(Errc::parse_error, "empty element label in support list");
    item = item.substr(b, e - b + 1);
    int idx = group->index_of(item);
    if (idx < 0)
      throw Error(Errc::parse_error,
                  "unknown element label \"" + item + "\" in group " + group->name());
    v.push_back(idx);
  }
  if (v.empty()) throw Error(Errc::parse_error, "empty support list");
  return Subset(group, std::move(v));
}

bool Subset::contains(int idx) const {
  return std::binary_search(elems_.begin(), elems_.end(), idx);
}

std::string Subset::describe() const {
  std::string out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += group_->label(elems_[i]);
  }
  return out;
}

Subset product_set(const Subset& s, const Subset& t) {
  require_same_group(s.group(), t.group(), "product_set");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.size()) * t.size());
  for (int a : s.elements())
    for (int b : t.elements()) out.push_back(s.group()->mul(a, b));
  return Subset(s.group(), std::move(out));
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* where) {
  if (!same_group(a, b))
    throw Error(Errc::invalid_parameter, std::string(where) + ": operands over different groups");
}

}  // namespace kgring
