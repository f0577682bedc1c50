#pragma once

#include <cstdint>
#include <stdexcept>

namespace msb {

using FieldElem = std::uint32_t;

bool is_prime(std::uint64_t p);

/// Arithmetic in Z/p for a prime p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t characteristic() const { return p_; }

  FieldElem reduce(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    return static_cast<FieldElem>(r < 0 ? r + p : r);
  }
  FieldElem add(FieldElem a, FieldElem b) const { return static_cast<FieldElem>((std::uint64_t{a} + b) % p_); }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const { return a == 0 ? 0 : p_ - a; }
  FieldElem mul(FieldElem a, FieldElem b) const { return static_cast<FieldElem>((std::uint64_t{a} * b) % p_); }
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace msb
