#pragma once

#include <cstdint>
#include <vector>

namespace fpp {

// Polynomial over Z_p as a coefficient vector, ascending degree:
// coeffs[0] is the constant term.
using Poly = std::vector<uint32_t>;

bool is_prime(uint32_t x);

// True iff q = p^k for a prime p and k >= 1; reports p and k when asked.
bool is_prime_power(uint32_t q, uint32_t* p_out = nullptr, uint32_t* k_out = nullptr);

// Smallest monic irreducible polynomial of degree k over Z_p, where
// candidates are ordered by their coefficient tuple (c_{k-1}, ..., c_0).
// k = 1 returns the sentinel x; prime-field arithmetic never consults it.
// Irreducibility is decided by exhaustive trial division, which is fine for
// the supported range p^k <= 2^16.
Poly find_irreducible(uint32_t p, uint32_t k);

struct FieldSpec {
  uint32_t p = 0;  // prime characteristic
  uint32_t k = 0;  // extension degree
  uint32_t q = 0;  // p^k
  Poly modulus;    // monic, degree exactly k
};

// Arithmetic in GF(p^k) on canonically encoded elements: the element with
// coefficients c_0..c_{k-1} is the integer sum c_i * p^i, giving a bijection
// with [0, q). Small fields get a multiplication/inverse lookup table;
// larger ones go through polynomial arithmetic on every call.
class GaloisField {
 public:
  // Builds GF(p^k) with the canonical (smallest) irreducible modulus.
  static GaloisField make(uint32_t p, uint32_t k);
  // Builds from an explicit spec; validates every FieldSpec invariant.
  static GaloisField from_spec(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  uint32_t p() const { return spec_.p; }
  uint32_t k() const { return spec_.k; }
  uint32_t q() const { return spec_.q; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  // Multiplicative inverse; DomainError on a == 0.
  uint32_t inv(uint32_t a) const;

  // Coefficient view of an element. encode accepts up to k coefficients in
  // [0, p); decode always yields exactly k.
  uint32_t encode(const Poly& coeffs) const;
  Poly decode(uint32_t a) const;

  static constexpr uint32_t kMaxOrder = 1u << 16;
  static constexpr uint32_t kTableMaxOrder = 512;

 private:
  explicit GaloisField(FieldSpec spec);

  void check_elem(uint32_t a) const;
  uint32_t mul_slow(uint32_t a, uint32_t b) const;

  FieldSpec spec_;
  std::vector<uint32_t> mul_table_;  // q*q entries when q <= kTableMaxOrder
  std::vector<uint32_t> inv_table_;  // q entries, slot 0 unused
};

}  // namespace fpp
