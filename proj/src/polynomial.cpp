#include "gramholes/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace gramholes {

using u64 = std::uint64_t;

namespace {

constexpr u64 kHigh = 0x8000800080008000ULL;
constexpr u64 kLaneMax = 0x7FFF;

std::size_t words_for(std::size_t nvars) { return (nvars + 1 + 3) / 4; }

inline unsigned lane_of_var(std::size_t nvars, std::size_t v) {
  return static_cast<unsigned>(1 + (nvars - 1 - v));
}

inline u64 get_lane(const u64* k, unsigned lane) {
  return (k[lane / 4] >> (48 - 16 * (lane % 4))) & 0xFFFF;
}

inline void set_lane(u64* k, unsigned lane, u64 val) {
  const unsigned sh = 48 - 16 * (lane % 4);
  k[lane / 4] = (k[lane / 4] & ~(u64{0xFFFF} << sh)) | (val << sh);
}

inline unsigned key_degree(const u64* k) { return static_cast<unsigned>(k[0] >> 48); }

// >0 when a is the larger monomial. Equal degrees make word 0's top lane
// equal, so the remaining lanes compare as plain words: smaller wins.
inline int cmp_keys(const u64* a, const u64* b, std::size_t w) {
  const u64 da = a[0] >> 48, db = b[0] >> 48;
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = 0; i < w; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

inline bool keys_equal(const u64* a, const u64* b, std::size_t w) {
  for (std::size_t i = 0; i < w; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Caller guarantees the total degree fits; lanes then never carry.
inline void add_keys(u64* out, const u64* a, const u64* b, std::size_t w) {
  for (std::size_t i = 0; i < w; ++i) out[i] = a[i] + b[i];
}

inline bool key_divides(const u64* a, const u64* b, std::size_t w) {
  for (std::size_t i = 0; i < w; ++i)
    if ((((b[i] | kHigh) - a[i]) & kHigh) != kHigh) return false;
  return true;
}

inline void sub_keys(u64* out, const u64* b, const u64* a, std::size_t w) {
  for (std::size_t i = 0; i < w; ++i) out[i] = b[i] - a[i];
}

void pack(const Monomial& m, std::size_t nvars, u64* out, std::size_t w) {
  if (m.size() != nvars) throw std::invalid_argument("monomial length does not match variable set");
  std::fill(out, out + w, 0);
  const u64 deg = m.degree();
  if (deg > kLaneMax) throw std::overflow_error("exponent overflow: total degree exceeds 32767");
  set_lane(out, 0, deg);
  for (std::size_t v = 0; v < nvars; ++v) set_lane(out, lane_of_var(nvars, v), m[v]);
}

void check_degree_sum(int a, int b) {
  if (a >= 0 && b >= 0 && static_cast<u64>(a) + static_cast<u64>(b) > kLaneMax)
    throw std::overflow_error("exponent overflow: total degree exceeds 32767");
}

const VarSetPtr& join_rings(const Polynomial& a, const Polynomial& b) {
  if (!a.vars()) return b.vars();
  if (!b.vars()) return a.vars();
  if (!same_ring(a.vars(), b.vars())) throw std::invalid_argument("variable set mismatch");
  return a.vars();
}

// Binary max-heap of stream ids; keys live in a flat buffer owned here.
class KeyHeap {
 public:
  explicit KeyHeap(std::size_t w) : w_(w) {}

  u64* key(std::uint32_t s) { return keys_.data() + static_cast<std::size_t>(s) * w_; }
  void ensure_streams(std::size_t n) {
    if (keys_.size() < n * w_) keys_.resize(n * w_);
  }
  bool empty() const { return heap_.empty(); }
  std::uint32_t top() const { return heap_.front(); }
  void push(std::uint32_t s) {
    heap_.push_back(s);
    sift_up(heap_.size() - 1);
  }
  void pop() {
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) sift_down(0);
  }
  void top_changed() { sift_down(0); }

 private:
  bool above(std::uint32_t a, std::uint32_t b) { return cmp_keys(key(a), key(b), w_) > 0; }
  void sift_up(std::size_t i) {
    const std::uint32_t s = heap_[i];
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!above(s, heap_[parent])) break;
      heap_[i] = heap_[parent];
      i = parent;
    }
    heap_[i] = s;
  }
  void sift_down(std::size_t i) {
    const std::uint32_t s = heap_[i];
    const std::size_t n = heap_.size();
    for (;;) {
      std::size_t c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && above(heap_[c + 1], heap_[c])) ++c;
      if (!above(heap_[c], s)) break;
      heap_[i] = heap_[c];
      i = c;
    }
    heap_[i] = s;
  }

  std::size_t w_;
  std::vector<u64> keys_;
  std::vector<std::uint32_t> heap_;
};

}  // namespace

// ---- Monomial

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial& Monomial::operator*=(const Monomial& o) {
  if (o.exps_.size() != exps_.size()) throw std::invalid_argument("monomial length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t s = std::uint64_t{exps_[i]} + o.exps_[i];
    if (s > 0xFFFFFFFFULL) throw std::overflow_error("monomial exponent overflow");
    exps_[i] = static_cast<std::uint32_t>(s);
  }
  return *this;
}

std::string Monomial::to_string(const VarSet& vars) const {
  std::string s;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars.name(v);
    if (exps_[v] > 1) s += '^' + std::to_string(exps_[v]);
  }
  return s.empty() ? "1" : s;
}

// ---- SignedPermutation

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation m;
  m.target.resize(n);
  std::iota(m.target.begin(), m.target.end(), std::size_t{0});
  m.sign.assign(n, 1);
  return m;
}

bool SignedPermutation::is_involution() const {
  const std::size_t n = target.size();
  if (sign.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (target[i] >= n || (sign[i] != 1 && sign[i] != -1)) return false;
    const std::size_t j = target[i];
    if (target[j] != i || sign[j] != sign[i]) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::then(const SignedPermutation& next) const {
  SignedPermutation r;
  r.target.resize(target.size());
  r.sign.resize(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    r.target[i] = next.target.at(target[i]);
    r.sign[i] = sign[i] * next.sign.at(target[i]);
  }
  return r;
}

// ---- builder

class PolyBuilder {
 public:
  explicit PolyBuilder(const VarSetPtr& vars) : p_(vars) {}
  void reserve(std::size_t n) {
    p_.keys_.reserve(n * p_.words_);
    p_.coeffs_.reserve(n);
  }
  void push(const u64* key, Int c) {
    p_.keys_.insert(p_.keys_.end(), key, key + p_.words_);
    p_.coeffs_.push_back(std::move(c));
  }
  std::size_t size() const { return p_.coeffs_.size(); }
  const u64* key(std::size_t i) const { return p_.key(i); }
  const Int& coeff(std::size_t i) const { return p_.coeffs_[i]; }
  Polynomial finish() { return std::move(p_); }

  static const u64* key(const Polynomial& p, std::size_t i) { return p.key(i); }
  static std::size_t words(const Polynomial& p) { return p.words_; }
  static const std::vector<Int>& coeffs(const Polynomial& p) { return p.coeffs_; }
  static std::vector<Int>& coeffs(Polynomial& p) { return p.coeffs_; }
  static std::vector<u64>& keys(Polynomial& p) { return p.keys_; }

  // Sorts arbitrary (key, coeff) pairs and merges duplicates.
  static Polynomial from_unsorted(const VarSetPtr& vars, std::vector<u64>&& keys,
                                  std::vector<Int>&& coeffs) {
    Polynomial out(vars);
    const std::size_t w = out.words_;
    const std::size_t n = coeffs.size();
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0U);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return cmp_keys(keys.data() + a * w, keys.data() + b * w, w) > 0;
    });
    PolyBuilder b(vars);
    b.reserve(n);
    std::size_t i = 0;
    while (i < n) {
      const u64* k = keys.data() + static_cast<std::size_t>(idx[i]) * w;
      Int acc = std::move(coeffs[idx[i]]);
      std::size_t j = i + 1;
      while (j < n && keys_equal(keys.data() + static_cast<std::size_t>(idx[j]) * w, k, w)) {
        acc += coeffs[idx[j]];
        ++j;
      }
      if (!acc.is_zero()) b.push(k, std::move(acc));
      i = j;
    }
    return b.finish();
  }

 private:
  Polynomial p_;
};

// ---- Polynomial

Polynomial::Polynomial(VarSetPtr vars) { bind(vars); }

void Polynomial::bind(const VarSetPtr& vars) {
  vars_ = vars;
  words_ = vars ? words_for(vars->size()) : 0;
}

Polynomial Polynomial::constant(VarSetPtr vars, const Int& c) {
  Polynomial p(vars);
  if (c.is_zero()) return p;
  p.keys_.assign(p.words_, 0);
  p.coeffs_.push_back(c);
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index) {
  Monomial m(vars->size());
  m[index] = 1;
  return monomial(vars, m);
}

Polynomial Polynomial::variable(VarSetPtr vars, std::string_view name) {
  auto idx = vars->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable " + std::string(name));
  return variable(vars, *idx);
}

Polynomial Polynomial::monomial(VarSetPtr vars, const Monomial& m, const Int& c) {
  Polynomial p(vars);
  if (c.is_zero()) return p;
  p.keys_.resize(p.words_);
  pack(m, vars->size(), p.keys_.data(), p.words_);
  p.coeffs_.push_back(c);
  return p;
}

Polynomial Polynomial::from_terms(VarSetPtr vars, std::vector<std::pair<Monomial, Int>> terms) {
  const std::size_t w = words_for(vars->size());
  std::vector<u64> keys(terms.size() * w);
  std::vector<Int> coeffs;
  coeffs.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    pack(terms[i].first, vars->size(), keys.data() + i * w, w);
    coeffs.push_back(std::move(terms[i].second));
  }
  return PolyBuilder::from_unsorted(vars, std::move(keys), std::move(coeffs));
}

bool Polynomial::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && key_degree(key(0)) == 0);
}

int Polynomial::total_degree() const { return coeffs_.empty() ? -1 : static_cast<int>(key_degree(key(0))); }

int Polynomial::min_total_degree() const {
  if (coeffs_.empty()) return -1;
  return static_cast<int>(key_degree(key(coeffs_.size() - 1)));
}

Monomial Polynomial::monomial_at(std::size_t i) const {
  const std::size_t nv = vars_->size();
  Monomial m(nv);
  for (std::size_t v = 0; v < nv; ++v)
    m[v] = static_cast<std::uint32_t>(get_lane(key(i), lane_of_var(nv, v)));
  return m;
}

std::uint32_t Polynomial::exponent_at(std::size_t i, std::size_t var) const {
  return static_cast<std::uint32_t>(get_lane(key(i), lane_of_var(vars_->size(), var)));
}

std::uint32_t Polynomial::degree_at(std::size_t i) const { return key_degree(key(i)); }

std::vector<std::pair<Monomial, Int>> Polynomial::terms() const {
  std::vector<std::pair<Monomial, Int>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(monomial_at(i), coeffs_[i]);
  return out;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  if (!vars_) return out;
  const std::size_t nv = vars_->size();
  std::vector<bool> seen(nv, false);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t v = 0; v < nv; ++v)
      if (!seen[v] && get_lane(key(i), lane_of_var(nv, v)) != 0) seen[v] = true;
  for (std::size_t v = 0; v < nv; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::size_t Polynomial::max_coeff_bits() const {
  std::size_t best = 0;
  mpz_t z;
  mpz_init(z);
  for (const Int& c : coeffs_) {
    c.to_mpz(z);
    best = std::max<std::size_t>(best, c.is_zero() ? 0 : mpz_sizeinbase(z, 2));
  }
  mpz_clear(z);
  return best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Int& c : r.coeffs_) c.negate();
  return r;
}

namespace {

// a + sign*b by linear merge
Polynomial merge_add(const Polynomial& a, const Polynomial& b, bool subtract) {
  const VarSetPtr& vars = join_rings(a, b);
  if (b.is_zero()) {
    Polynomial r = a;
    if (!r.vars()) r = Polynomial(vars);
    return r;
  }
  if (a.is_zero()) {
    Polynomial r = subtract ? -b : b;
    return r;
  }
  const std::size_t w = PolyBuilder::words(a);
  const auto& ca = PolyBuilder::coeffs(a);
  const auto& cb = PolyBuilder::coeffs(b);
  PolyBuilder out(vars);
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = cmp_keys(PolyBuilder::key(a, i), PolyBuilder::key(b, j), w);
    if (c > 0) {
      out.push(PolyBuilder::key(a, i), ca[i]);
      ++i;
    } else if (c < 0) {
      out.push(PolyBuilder::key(b, j), subtract ? -cb[j] : cb[j]);
      ++j;
    } else {
      Int s = ca[i];
      if (subtract)
        s -= cb[j];
      else
        s += cb[j];
      if (!s.is_zero()) out.push(PolyBuilder::key(a, i), std::move(s));
      ++i;
      ++j;
    }
  }
  return out.finish();
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = merge_add(*this, o, false); }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = merge_add(*this, o, true); }
Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge_add(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge_add(a, b, true); }

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::sum_of_products(const VarSetPtr& vars, std::span<const Product> products) {
  // Each stream walks one term of the shorter factor across the longer one.
  struct Stream {
    const Int* coeff;
    const u64* akey;
    const Polynomial* other;
    std::uint32_t pos;
    bool negate;
  };
  std::vector<Stream> streams;
  for (const Product& pr : products) {
    if (pr.a->is_zero() || pr.b->is_zero()) continue;
    if (!same_ring(vars, pr.a->vars()) || !same_ring(vars, pr.b->vars()))
      throw std::invalid_argument("variable set mismatch");
    check_degree_sum(pr.a->total_degree(), pr.b->total_degree());
    const Polynomial* s = pr.a;
    const Polynomial* l = pr.b;
    if (s->size() > l->size()) std::swap(s, l);
    for (std::size_t i = 0; i < s->size(); ++i)
      streams.push_back({&s->coeffs_[i], s->key(i), l, 0, pr.negate});
  }
  Polynomial zero(vars);
  if (streams.empty()) return zero;
  const std::size_t w = zero.words_;
  KeyHeap heap(w);
  heap.ensure_streams(streams.size());
  for (std::uint32_t s = 0; s < streams.size(); ++s) {
    add_keys(heap.key(s), streams[s].akey, streams[s].other->key(0), w);
    heap.push(s);
  }
  PolyBuilder out(vars);
  std::vector<u64> cur(w);
  while (!heap.empty()) {
    std::copy_n(heap.key(heap.top()), w, cur.begin());
    Int acc;
    do {
      const std::uint32_t s = heap.top();
      Stream& st = streams[s];
      const Int& oc = st.other->coeffs_[st.pos];
      if (st.negate)
        acc.sub_mul(*st.coeff, oc);
      else
        acc.add_mul(*st.coeff, oc);
      if (++st.pos < st.other->size()) {
        add_keys(heap.key(s), st.akey, st.other->key(st.pos), w);
        heap.top_changed();
      } else {
        heap.pop();
      }
    } while (!heap.empty() && keys_equal(heap.key(heap.top()), cur.data(), w));
    if (!acc.is_zero()) out.push(cur.data(), std::move(acc));
  }
  return out.finish();
}

namespace {

// Open addressing table from packed monomial to coefficient.
class TermTable {
 public:
  explicit TermTable(std::size_t w) : w_(w) { rehash(std::size_t{1} << 12); }

  Int& slot(const u64* key) {
    if (2 * (count_ + 1) > cap_) rehash(cap_ * 2);
    std::size_t i = hash(key) & (cap_ - 1);
    for (;;) {
      if (!used_[i]) {
        used_[i] = 1;
        std::copy_n(key, w_, keys_.data() + i * w_);
        ++count_;
        return vals_[i];
      }
      if (keys_equal(keys_.data() + i * w_, key, w_)) return vals_[i];
      i = (i + 1) & (cap_ - 1);
    }
  }

  void drain(std::vector<u64>& keys, std::vector<Int>& coeffs) {
    for (std::size_t i = 0; i < cap_; ++i) {
      if (!used_[i] || vals_[i].is_zero()) continue;
      keys.insert(keys.end(), keys_.data() + i * w_, keys_.data() + (i + 1) * w_);
      coeffs.push_back(std::move(vals_[i]));
    }
  }

 private:
  std::size_t hash(const u64* key) const {
    u64 h = 0x9E3779B97F4A7C15ULL;
    for (std::size_t i = 0; i < w_; ++i) {
      h ^= key[i] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
  void rehash(std::size_t cap) {
    std::vector<u64> keys(cap * w_);
    std::vector<Int> vals(cap);
    std::vector<char> used(cap, 0);
    for (std::size_t i = 0; i < cap_; ++i) {
      if (!used_[i]) continue;
      const u64* k = keys_.data() + i * w_;
      std::size_t j = hash(k) & (cap - 1);
      while (used[j]) j = (j + 1) & (cap - 1);
      used[j] = 1;
      std::copy_n(k, w_, keys.data() + j * w_);
      vals[j] = std::move(vals_[i]);
    }
    keys_ = std::move(keys);
    vals_ = std::move(vals);
    used_ = std::move(used);
    cap_ = cap;
  }

  std::size_t w_;
  std::size_t cap_ = 0;
  std::size_t count_ = 0;
  std::vector<u64> keys_;
  std::vector<Int> vals_;
  std::vector<char> used_;
};

}  // namespace

Polynomial Polynomial::sum_of_products_hashed(const VarSetPtr& vars, std::span<const Product> products) {
  Polynomial zero(vars);
  const std::size_t w = zero.words_;
  TermTable table(w);
  std::vector<u64> k(w);
  for (const Product& pr : products) {
    if (pr.a->is_zero() || pr.b->is_zero()) continue;
    if (!same_ring(vars, pr.a->vars()) || !same_ring(vars, pr.b->vars()))
      throw std::invalid_argument("variable set mismatch");
    check_degree_sum(pr.a->total_degree(), pr.b->total_degree());
    const Polynomial& a = *pr.a;
    const Polynomial& b = *pr.b;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const u64* ak = a.key(i);
      const Int& ac = a.coeffs_[i];
      for (std::size_t j = 0; j < b.size(); ++j) {
        add_keys(k.data(), ak, b.key(j), w);
        Int& v = table.slot(k.data());
        if (pr.negate)
          v.sub_mul(ac, b.coeffs_[j]);
        else
          v.add_mul(ac, b.coeffs_[j]);
      }
    }
  }
  std::vector<u64> keys;
  std::vector<Int> coeffs;
  table.drain(keys, coeffs);
  return PolyBuilder::from_unsorted(vars, std::move(keys), std::move(coeffs));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const VarSetPtr& vars = join_rings(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(vars);
  if (a.size() == 1) return b.times_monomial(a.monomial_at(0), a.coeffs_[0]);
  if (b.size() == 1) return a.times_monomial(b.monomial_at(0), b.coeffs_[0]);
  Product pr{&a, &b, false};
  return Polynomial::sum_of_products(vars, std::span<const Product>(&pr, 1));
}

Polynomial Polynomial::scaled(const Int& c) const {
  if (c.is_zero()) return Polynomial(vars_);
  Polynomial r(*this);
  if (c.is_one()) return r;
  for (Int& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Int& c) const {
  if (is_zero() || c.is_zero()) return Polynomial(vars_);
  std::vector<u64> mk(words_);
  pack(m, vars_->size(), mk.data(), words_);
  check_degree_sum(total_degree(), static_cast<int>(key_degree(mk.data())));
  Polynomial r(vars_);
  r.keys_.resize(keys_.size());
  for (std::size_t i = 0; i < size(); ++i) add_keys(r.keys_.data() + i * words_, key(i), mk.data(), words_);
  r.coeffs_ = coeffs_;
  if (!c.is_one())
    for (Int& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  if (!vars_) throw std::invalid_argument("pow of a ring-less zero");
  Polynomial result = constant(vars_, Int(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  const VarSetPtr& vars = join_rings(p, q);
  if (p.is_zero()) return Polynomial(vars);
  const std::size_t w = q.words_;
  const u64* q0 = q.key(0);
  const Int& lc = q.coeffs_[0];

  PolyBuilder quot(vars);
  std::vector<u64> tmp(w);
  if (q.size() == 1) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!key_divides(q0, p.key(i), w) || !p.coeffs_[i].divisible_by(lc)) return std::nullopt;
      sub_keys(tmp.data(), p.key(i), q0, w);
      quot.push(tmp.data(), p.coeffs_[i].div_exact(lc));
    }
    return quot.finish();
  }

  // Stream 0 walks p; stream s >= 1 walks quotient term s-1 times q[1..].
  KeyHeap heap(w);
  std::vector<std::uint32_t> pos{0};
  heap.ensure_streams(1);
  std::copy_n(p.key(0), w, heap.key(0));
  heap.push(0);
  std::vector<u64> cur(w);
  while (!heap.empty()) {
    std::copy_n(heap.key(heap.top()), w, cur.begin());
    Int acc;
    do {
      const std::uint32_t s = heap.top();
      if (s == 0) {
        acc += p.coeffs_[pos[0]];
        if (++pos[0] < p.size()) {
          std::copy_n(p.key(pos[0]), w, heap.key(0));
          heap.top_changed();
        } else {
          heap.pop();
        }
      } else {
        acc.sub_mul(quot.coeff(s - 1), q.coeffs_[pos[s]]);
        if (++pos[s] < q.size()) {
          add_keys(heap.key(s), quot.key(s - 1), q.key(pos[s]), w);
          heap.top_changed();
        } else {
          heap.pop();
        }
      }
    } while (!heap.empty() && keys_equal(heap.key(heap.top()), cur.data(), w));
    if (acc.is_zero()) continue;
    if (!key_divides(q0, cur.data(), w) || !acc.divisible_by(lc)) return std::nullopt;
    sub_keys(tmp.data(), cur.data(), q0, w);
    quot.push(tmp.data(), acc.div_exact(lc));
    const auto s = static_cast<std::uint32_t>(quot.size());
    pos.push_back(1);
    heap.ensure_streams(s + 1);
    add_keys(heap.key(s), quot.key(s - 1), q.key(1), w);
    heap.push(s);
  }
  return quot.finish();
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  std::map<std::size_t, Polynomial> by_index;
  for (const auto& [name, value] : bindings) {
    auto idx = vars_ ? vars_->index_of(name) : std::nullopt;
    if (!idx) throw std::invalid_argument("unknown variable " + name);
    by_index.emplace(*idx, value);
  }
  return substitute_index(by_index);
}

Polynomial Polynomial::substitute_index(const std::map<std::size_t, Polynomial>& bindings) const {
  if (bindings.empty() || is_zero()) return *this;
  const std::size_t nv = vars_->size();
  std::vector<const Polynomial*> bound(nv, nullptr);
  for (const auto& [v, value] : bindings) {
    if (v >= nv) throw std::invalid_argument("variable index out of range");
    if (value.vars() && !same_ring(value.vars(), vars_))
      throw std::invalid_argument("substitution value lives in a different ring");
    bound[v] = &value;
  }
  // Constant bindings fold into the coefficient; others are expanded.
  std::vector<std::pair<Monomial, Int>> simple;
  std::vector<Polynomial> expanded;
  std::map<std::pair<std::size_t, std::uint32_t>, Polynomial> powers;
  auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto it = powers.find({v, e});
    if (it != powers.end()) return it->second;
    Polynomial base = bound[v]->vars() ? *bound[v] : Polynomial(vars_);
    return powers.emplace(std::make_pair(v, e), base.pow(e)).first->second;
  };
  for (std::size_t i = 0; i < size(); ++i) {
    Monomial m = monomial_at(i);
    Int c = coeffs_[i];
    std::vector<const Polynomial*> factors;
    for (std::size_t v = 0; v < nv && !c.is_zero(); ++v) {
      if (!bound[v] || m[v] == 0) continue;
      const std::uint32_t e = m[v];
      m[v] = 0;
      const Polynomial& b = *bound[v];
      if (b.is_constant()) {
        if (b.is_zero())
          c = Int(0);
        else
          c *= b.coeffs_[0].pow(e);
      } else {
        factors.push_back(&power_of(v, e));
      }
    }
    if (c.is_zero()) continue;
    if (factors.empty()) {
      simple.emplace_back(std::move(m), std::move(c));
      continue;
    }
    Polynomial t = factors[0]->times_monomial(m, c);
    for (std::size_t f = 1; f < factors.size(); ++f) t = t * *factors[f];
    expanded.push_back(std::move(t));
  }
  Polynomial result = from_terms(vars_, std::move(simple));
  // balanced summation keeps merges cheap
  while (expanded.size() > 1) {
    std::vector<Polynomial> next;
    for (std::size_t i = 0; i + 1 < expanded.size(); i += 2) next.push_back(expanded[i] + expanded[i + 1]);
    if (expanded.size() % 2) next.push_back(std::move(expanded.back()));
    expanded = std::move(next);
  }
  if (!expanded.empty()) result += expanded[0];
  return result;
}

Polynomial Polynomial::var_map(const SignedPermutation& m) const {
  if (!vars_) return *this;
  const std::size_t nv = vars_->size();
  if (m.target.size() != nv || !m.is_involution())
    throw std::invalid_argument("variable map is not a signed involution of this ring");
  std::vector<u64> keys(keys_.size());
  std::vector<Int> coeffs;
  coeffs.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    u64* k = keys.data() + i * words_;
    set_lane(k, 0, key_degree(key(i)));
    int sign = 1;
    for (std::size_t v = 0; v < nv; ++v) {
      const u64 e = get_lane(key(i), lane_of_var(nv, v));
      if (e == 0) continue;
      set_lane(k, lane_of_var(nv, m.target[v]), e);
      if (m.sign[v] < 0 && (e & 1U)) sign = -sign;
    }
    coeffs.push_back(sign < 0 ? -coeffs_[i] : coeffs_[i]);
  }
  return PolyBuilder::from_unsorted(vars_, std::move(keys), std::move(coeffs));
}

Polynomial Polynomial::h_truncate(unsigned degree) const {
  Polynomial r(vars_);
  for (std::size_t i = 0; i < size(); ++i) {
    if (key_degree(key(i)) != degree) continue;
    r.keys_.insert(r.keys_.end(), key(i), key(i) + words_);
    r.coeffs_.push_back(coeffs_[i]);
  }
  return r;
}

Polynomial Polynomial::rebase(const VarSetPtr& target) const {
  if (!vars_ || same_ring(vars_, target)) {
    Polynomial r = *this;
    r.bind(target);
    if (!vars_) r.keys_.clear();
    return r;
  }
  std::vector<std::size_t> map(vars_->size());
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    auto idx = target->index_of(vars_->name(v));
    if (!idx) throw std::invalid_argument("variable " + vars_->name(v) + " missing from target ring");
    map[v] = *idx;
  }
  std::vector<std::pair<Monomial, Int>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    Monomial m(target->size());
    for (std::size_t v = 0; v < vars_->size(); ++v) m[map[v]] = exponent_at(i, v);
    out.emplace_back(std::move(m), coeffs_[i]);
  }
  return from_terms(target, std::move(out));
}

Int Polynomial::evaluate(std::span<const Int> point) const {
  if (is_zero()) return Int(0);
  const std::size_t nv = vars_->size();
  if (point.size() != nv) throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<std::vector<Int>> pw(nv, std::vector<Int>{Int(1)});
  auto power = [&](std::size_t v, std::uint32_t e) -> const Int& {
    auto& tab = pw[v];
    while (tab.size() <= e) tab.push_back(tab.back() * point[v]);
    return tab[e];
  };
  mpz_t acc, t, f;
  mpz_inits(acc, t, f, nullptr);
  for (std::size_t i = 0; i < size(); ++i) {
    coeffs_[i].to_mpz(t);
    for (std::size_t v = 0; v < nv && mpz_sgn(t) != 0; ++v) {
      const std::uint32_t e = exponent_at(i, v);
      if (e == 0) continue;
      power(v, e).to_mpz(f);
      mpz_mul(t, t, f);
    }
    mpz_add(acc, acc, t);
  }
  Int r(acc);
  mpz_clears(acc, t, f, nullptr);
  return r;
}

namespace {
inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
}  // namespace

std::uint64_t Polynomial::evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const {
  if (is_zero()) return 0;
  const std::size_t nv = vars_->size();
  if (point.size() != nv) throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<std::vector<u64>> pw(nv, std::vector<u64>{1 % p});
  u64 acc = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    u64 t = coeffs_[i].mod(p);
    for (std::size_t v = 0; v < nv && t != 0; ++v) {
      const std::uint32_t e = exponent_at(i, v);
      if (e == 0) continue;
      auto& tab = pw[v];
      while (tab.size() <= e) tab.push_back(mulmod(tab.back(), point[v] % p, p));
      t = mulmod(t, tab[e], p);
    }
    acc += t;
    if (acc >= p) acc -= p;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    const Int& c = coeffs_[i];
    if (i > 0 && c.sign() > 0) s += '+';
    s += c.to_string();
    if (key_degree(key(i)) == 0) continue;
    for (std::size_t v = 0; v < vars_->size(); ++v) {
      const std::uint32_t e = exponent_at(i, v);
      if (e == 0) continue;
      s += '*';
      s += vars_->name(v);
      if (e > 1) s += '^' + std::to_string(e);
    }
  }
  return s;
}

std::string Polynomial::to_pretty_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    Int c = coeffs_[i];
    if (i == 0) {
      if (c.sign() < 0) s += '-';
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    c = c.abs();
    const bool unit = c.is_one();
    const bool has_vars = key_degree(key(i)) > 0;
    if (!unit || !has_vars) s += c.to_string();
    bool first = unit;
    if (!has_vars) continue;
    for (std::size_t v = 0; v < vars_->size(); ++v) {
      const std::uint32_t e = exponent_at(i, v);
      if (e == 0) continue;
      if (!first) s += '*';
      first = false;
      s += vars_->name(v);
      if (e > 1) s += '^' + std::to_string(e);
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(const VarSetPtr& vars, std::string_view text) : vars_(vars), s_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(vars_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++i_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    if (peek() == '-') {
      ++i_;
      return -factor();
    }
    Polynomial base = primary();
    if (peek() == '^') {
      ++i_;
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      const unsigned long e = std::stoul(std::string(s_.substr(start, i_ - start)));
      if (e > kLaneMax) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Polynomial::constant(vars_, Int::parse(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return Polynomial::variable(vars_, resolve(identifier()));
    fail("expected a term");
  }

  std::string identifier() {
    std::string name;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) name += s_[i_++];
    if (i_ < s_.size() && s_[i_] == '{') {
      while (i_ < s_.size() && s_[i_] != '}') {
        if (!std::isspace(static_cast<unsigned char>(s_[i_]))) name += s_[i_];
        ++i_;
      }
      if (i_ == s_.size()) fail("unterminated '{'");
      name += s_[i_++];
    }
    return name;
  }

  std::size_t resolve(const std::string& name) {
    if (auto idx = vars_->index_of(name)) return *idx;
    std::string plain;
    for (char ch : name)
      if (ch != '_') plain += ch;
    if (auto idx = vars_->index_of(plain)) return *idx;
    // x{1} style for a singleton is spelled x1 when such a name exists
    if (plain.size() > 3 && plain[1] == '{' && plain.back() == '}') {
      std::string flat = plain.substr(0, 1) + plain.substr(2, plain.size() - 3);
      if (auto idx = vars_->index_of(flat)) return *idx;
    }
    fail("unknown variable '" + name + "'");
  }

  VarSetPtr vars_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const VarSetPtr& vars, std::string_view text) {
  if (!vars) throw std::invalid_argument("parse needs a variable set");
  return Parser(vars, text).run();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (!same_ring(a.vars_, b.vars_)) return false;
  return a.keys_ == b.keys_ && a.coeffs_ == b.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace gramholes
