#include "fpppart/finite_field.hpp"

#include <string>
#include <utility>

#include "fpppart/errors.hpp"

namespace fpp {
namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

// Remainder of f modulo a monic divisor g.
Poly poly_mod(Poly f, const Poly& g, uint32_t p) {
  const size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const uint32_t c = f.back();
    const size_t shift = f.size() - 1 - dg;
    if (c != 0) {
      for (size_t i = 0; i < dg; ++i) {
        const uint64_t sub = static_cast<uint64_t>(c) * g[i] % p;
        f[shift + i] = static_cast<uint32_t>((f[shift + i] + p - sub) % p);
      }
    }
    f.pop_back();
    trim(f);
  }
  return f;
}

// Exhaustive trial division by every monic polynomial of degree <= k/2.
bool poly_is_irreducible(const Poly& f, uint32_t p) {
  const size_t k = f.size() - 1;
  if (k == 1) return true;
  if (f[0] == 0) return false;  // x divides f
  Poly g;
  for (size_t d = 1; d <= k / 2; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t m = 0; m < count; ++m) {
      g.assign(d + 1, 0);
      uint64_t rest = m;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

uint64_t checked_pow(uint32_t p, uint32_t k) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > GaloisField::kMaxOrder) {
      throw ConfigError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                        " exceeds supported maximum 2^16");
    }
  }
  return q;
}

}  // namespace

bool is_prime(uint32_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

bool is_prime_power(uint32_t q, uint32_t* p_out, uint32_t* k_out) {
  if (q < 2) return false;
  uint32_t p = 0;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  uint32_t k = 0;
  uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

Poly find_irreducible(uint32_t p, uint32_t k) {
  if (!is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw ConfigError("extension degree must be >= 1");
  if (k == 1) return Poly{0, 1};  // sentinel x
  const uint64_t count = checked_pow(p, k);
  Poly f(k + 1, 0);
  // Ascending m enumerates coefficient tuples (c_{k-1}, ..., c_0) in
  // lexicographic order, so the first hit is the canonical modulus.
  for (uint64_t m = 0; m < count; ++m) {
    uint64_t rest = m;
    for (uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<uint32_t>(rest % p);
      rest /= p;
    }
    f[k] = 1;
    if (poly_is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

GaloisField GaloisField::make(uint32_t p, uint32_t k) {
  FieldSpec spec;
  spec.p = p;
  spec.k = k;
  spec.modulus = find_irreducible(p, k);  // validates p prime, k >= 1
  spec.q = static_cast<uint32_t>(checked_pow(p, k));
  return GaloisField(std::move(spec));
}

GaloisField GaloisField::from_spec(FieldSpec spec) {
  if (!is_prime(spec.p)) throw ConfigError("FieldSpec: p is not prime");
  if (spec.k == 0) throw ConfigError("FieldSpec: k must be >= 1");
  if (spec.q != checked_pow(spec.p, spec.k)) throw ConfigError("FieldSpec: q != p^k");
  if (spec.modulus.size() != spec.k + 1 || spec.modulus.back() != 1) {
    throw ConfigError("FieldSpec: modulus must be monic of degree k");
  }
  for (uint32_t c : spec.modulus) {
    if (c >= spec.p) throw ConfigError("FieldSpec: modulus coefficient not reduced mod p");
  }
  if (spec.k > 1 && !poly_is_irreducible(spec.modulus, spec.p)) {
    throw ConfigError("FieldSpec: modulus is reducible");
  }
  return GaloisField(std::move(spec));
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  const uint32_t q = spec_.q;
  if (q > kTableMaxOrder) return;
  mul_table_.resize(static_cast<size_t>(q) * q);
  for (uint32_t a = 0; a < q; ++a) {
    for (uint32_t b = a; b < q; ++b) {
      const uint32_t r = mul_slow(a, b);
      mul_table_[static_cast<size_t>(a) * q + b] = r;
      mul_table_[static_cast<size_t>(b) * q + a] = r;
    }
  }
  // Inverses by exhaustive row scan; every nonzero row contains a 1.
  inv_table_.assign(q, 0);
  for (uint32_t a = 1; a < q; ++a) {
    for (uint32_t b = 1; b < q; ++b) {
      if (mul_table_[static_cast<size_t>(a) * q + b] == 1) {
        inv_table_[a] = b;
        break;
      }
    }
  }
}

void GaloisField::check_elem(uint32_t a) const {
  if (a >= spec_.q) {
    throw DomainError("element " + std::to_string(a) + " outside GF(" + std::to_string(spec_.q) + ")");
  }
}

uint32_t GaloisField::add(uint32_t a, uint32_t b) const {
  check_elem(a);
  check_elem(b);
  if (spec_.p == 2) return a ^ b;
  if (spec_.k == 1) return (a + b) % spec_.p;
  uint32_t out = 0;
  uint32_t place = 1;
  while (a != 0 || b != 0) {
    out += (a % spec_.p + b % spec_.p) % spec_.p * place;
    a /= spec_.p;
    b /= spec_.p;
    place *= spec_.p;
  }
  return out;
}

uint32_t GaloisField::sub(uint32_t a, uint32_t b) const {
  check_elem(a);
  check_elem(b);
  if (spec_.p == 2) return a ^ b;
  if (spec_.k == 1) return (a + spec_.p - b) % spec_.p;
  uint32_t out = 0;
  uint32_t place = 1;
  while (a != 0 || b != 0) {
    out += (a % spec_.p + spec_.p - b % spec_.p) % spec_.p * place;
    a /= spec_.p;
    b /= spec_.p;
    place *= spec_.p;
  }
  return out;
}

uint32_t GaloisField::neg(uint32_t a) const { return sub(0, a); }

uint32_t GaloisField::mul(uint32_t a, uint32_t b) const {
  check_elem(a);
  check_elem(b);
  if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * spec_.q + b];
  return mul_slow(a, b);
}

uint32_t GaloisField::mul_slow(uint32_t a, uint32_t b) const {
  if (spec_.k == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % spec_.p);
  return encode(poly_mod(poly_mul(decode(a), decode(b), spec_.p), spec_.modulus, spec_.p));
}

uint32_t GaloisField::pow(uint32_t a, uint64_t e) const {
  check_elem(a);
  uint32_t base = a;
  uint32_t out = 1;
  while (e != 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

uint32_t GaloisField::inv(uint32_t a) const {
  check_elem(a);
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, spec_.q - 2);  // Fermat: a^(q-1) = 1
}

uint32_t GaloisField::encode(const Poly& coeffs) const {
  if (coeffs.size() > spec_.k) {
    throw DomainError("coefficient vector longer than extension degree");
  }
  uint32_t value = 0;
  uint32_t place = 1;
  for (size_t i = 0; i < spec_.k; ++i) {
    const uint32_t c = i < coeffs.size() ? coeffs[i] : 0;
    if (c >= spec_.p) throw DomainError("coefficient not reduced mod p");
    value += c * place;
    place *= spec_.p;
  }
  return value;
}

Poly GaloisField::decode(uint32_t a) const {
  check_elem(a);
  Poly coeffs(spec_.k, 0);
  for (uint32_t i = 0; i < spec_.k; ++i) {
    coeffs[i] = a % spec_.p;
    a /= spec_.p;
  }
  return coeffs;
}

}  // namespace fpp
