#include "gramholes/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace gramholes {

namespace {

bool in_small_range(std::int64_t v) {
  return v >= (-(std::int64_t{1} << 62)) && v <= ((std::int64_t{1} << 62) - 1);
}

// mpz view of a small value without allocating limbs on the heap.
struct SmallMpz {
  mp_limb_t limb;
  __mpz_struct z;
  explicit SmallMpz(std::int64_t v) {
    std::uint64_t mag = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    limb = static_cast<mp_limb_t>(mag);
    z._mp_alloc = 1;
    z._mp_size = v == 0 ? 0 : (v < 0 ? -1 : 1);
    z._mp_d = &limb;
  }
  mpz_srcptr get() const { return &z; }
};

}  // namespace

void Int::release() noexcept {
  if (!is_small()) {
    mpz_ptr p = big();
    mpz_clear(p);
    delete p;
  }
  raw_ = 0;
}

void Int::copy_from(const Int& o) {
  if (o.is_small()) {
    raw_ = o.raw_;
  } else {
    auto* p = new __mpz_struct;
    mpz_init_set(p, o.big());
    raw_ = static_cast<std::int64_t>(reinterpret_cast<std::uintptr_t>(p) | 1);
  }
}

void Int::assign_si(std::int64_t v) {
  if (in_small_range(v)) {
    set_small(v);
    return;
  }
  release();
  auto* p = new __mpz_struct;
  mpz_init_set_si(p, v);
  raw_ = static_cast<std::int64_t>(reinterpret_cast<std::uintptr_t>(p) | 1);
}

void Int::assign_mpz(mpz_srcptr v) {
  if (mpz_fits_slong_p(v)) {
    assign_si(mpz_get_si(v));
    return;
  }
  release();
  auto* p = new __mpz_struct;
  mpz_init_set(p, v);
  raw_ = static_cast<std::int64_t>(reinterpret_cast<std::uintptr_t>(p) | 1);
}

mpz_ptr Int::make_big() {
  if (!is_small()) return big();
  std::int64_t v = small();
  auto* p = new __mpz_struct;
  mpz_init_set_si(p, v);
  raw_ = static_cast<std::int64_t>(reinterpret_cast<std::uintptr_t>(p) | 1);
  return p;
}

void Int::normalize() {
  if (is_small()) return;
  mpz_ptr p = big();
  if (mpz_fits_slong_p(p)) {
    long v = mpz_get_si(p);
    if (in_small_range(v)) {
      mpz_clear(p);
      delete p;
      raw_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(v) << 1);
    }
  }
}

Int Int::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer literal: " + s);
  if (s[0] == '+') s.erase(0, 1);
  mpz_t z;
  mpz_init_set_str(z, s.c_str(), 10);
  Int r(z);
  mpz_clear(z);
  return r;
}

std::string Int::to_string() const {
  if (is_small()) return std::to_string(small());
  char* buf = mpz_get_str(nullptr, 10, big());
  std::string s(buf);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(buf, s.size() + 1);
  return s;
}

int Int::sign() const noexcept {
  if (is_small()) return raw_ > 0 ? 1 : (raw_ < 0 ? -1 : 0);
  return mpz_sgn(big());
}

bool Int::fits_int64() const noexcept { return is_small() || mpz_fits_slong_p(big()); }

std::int64_t Int::to_int64() const {
  if (is_small()) return small();
  if (!mpz_fits_slong_p(big())) throw std::overflow_error("integer does not fit in 64 bits");
  return mpz_get_si(big());
}

std::uint64_t Int::mod(std::uint64_t p) const {
  if (is_small()) {
    std::int64_t v = small();
    if (v >= 0) return static_cast<std::uint64_t>(v) % p;
    std::uint64_t r = (0 - static_cast<std::uint64_t>(v)) % p;
    return r == 0 ? 0 : p - r;
  }
  return mpz_fdiv_ui(big(), p);
}

void Int::to_mpz(mpz_t out) const {
  if (is_small())
    mpz_set_si(out, small());
  else
    mpz_set(out, big());
}

Int Int::operator-() const {
  Int r(*this);
  r.negate();
  return r;
}

void Int::negate() {
  if (is_small()) {
    std::int64_t v = small();
    if (v == kSmallMin) {
      assign_si(-static_cast<std::int64_t>(v));  // 2^62 goes big
    } else {
      raw_ = -raw_;
    }
    return;
  }
  mpz_neg(big(), big());
}

Int& Int::operator+=(const Int& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r = small() + o.small();  // cannot overflow int64
    assign_si(r);
    return *this;
  }
  if (o.is_small()) {
    std::int64_t v = o.small();
    if (v >= 0)
      mpz_add_ui(big(), big(), static_cast<unsigned long>(v));
    else
      mpz_sub_ui(big(), big(), static_cast<unsigned long>(-v));
  } else {
    mpz_ptr self = make_big();
    mpz_add(self, self, o.big());
  }
  normalize();
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (is_small() && o.is_small()) {
    assign_si(small() - o.small());
    return *this;
  }
  if (o.is_small()) {
    std::int64_t v = o.small();
    if (v >= 0)
      mpz_sub_ui(big(), big(), static_cast<unsigned long>(v));
    else
      mpz_add_ui(big(), big(), static_cast<unsigned long>(-v));
  } else {
    mpz_ptr self = make_big();
    mpz_sub(self, self, o.big());
  }
  normalize();
  return *this;
}

Int& Int::operator*=(const Int& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small(), o.small(), &r)) {
      assign_si(r);
      return *this;
    }
  }
  mpz_ptr self = make_big();
  if (o.is_small())
    mpz_mul_si(self, self, o.small());
  else
    mpz_mul(self, self, o.big());
  normalize();
  return *this;
}

void Int::add_mul(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small() && is_small()) {
    std::int64_t prod, sum;
    if (!__builtin_mul_overflow(a.small(), b.small(), &prod) &&
        !__builtin_add_overflow(small(), prod, &sum)) {
      assign_si(sum);
      return;
    }
  }
  mpz_ptr self = make_big();
  SmallMpz sa(a.is_small() ? a.small() : 0), sb(b.is_small() ? b.small() : 0);
  mpz_addmul(self, a.is_small() ? sa.get() : a.big(), b.is_small() ? sb.get() : b.big());
  normalize();
}

void Int::sub_mul(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small() && is_small()) {
    std::int64_t prod, diff;
    if (!__builtin_mul_overflow(a.small(), b.small(), &prod) &&
        !__builtin_sub_overflow(small(), prod, &diff)) {
      assign_si(diff);
      return;
    }
  }
  mpz_ptr self = make_big();
  SmallMpz sa(a.is_small() ? a.small() : 0), sb(b.is_small() ? b.small() : 0);
  mpz_submul(self, a.is_small() ? sa.get() : a.big(), b.is_small() ? sb.get() : b.big());
  normalize();
}

Int Int::div_exact(const Int& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_small() && d.is_small()) {
    std::int64_t dv = d.small();
    if (dv == -1) return -*this;
    return Int(static_cast<long long>(small() / dv));
  }
  mpz_t q, a, b;
  mpz_inits(q, a, b, nullptr);
  to_mpz(a);
  d.to_mpz(b);
  mpz_divexact(q, a, b);
  Int r(q);
  mpz_clears(q, a, b, nullptr);
  return r;
}

bool Int::divisible_by(const Int& d) const {
  if (d.is_zero()) return is_zero();
  if (is_small() && d.is_small()) return small() % d.small() == 0;
  mpz_t a, b;
  mpz_inits(a, b, nullptr);
  to_mpz(a);
  d.to_mpz(b);
  bool r = mpz_divisible_p(a, b) != 0;
  mpz_clears(a, b, nullptr);
  return r;
}

Int Int::pow(unsigned e) const {
  mpz_t a;
  mpz_init(a);
  to_mpz(a);
  mpz_pow_ui(a, a, e);
  Int r(a);
  mpz_clear(a);
  return r;
}

bool operator==(const Int& a, const Int& b) noexcept {
  if (a.is_small() || b.is_small()) return a.raw_ == b.raw_;
  return mpz_cmp(a.big(), b.big()) == 0;
}

std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept {
  if (a.is_small() && b.is_small()) return a.small() <=> b.small();
  int c;
  if (a.is_small())
    c = -mpz_cmp_si(b.big(), a.small());
  else if (b.is_small())
    c = mpz_cmp_si(a.big(), b.small());
  else
    c = mpz_cmp(a.big(), b.big());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

}  // namespace gramholes
