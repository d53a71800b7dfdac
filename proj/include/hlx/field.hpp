#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hlx/errors.hpp"

namespace hlx {

/// Ground field descriptor: the rationals (p == 0) or F_p with p prime, p < 2^16.
struct Field {
  uint32_t p = 0;

  Field() = default;
  explicit Field(uint32_t prime);

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  std::string name() const;                     // "Q" or "Fp:<p>"
  static Field parse(const std::string& name);  // accepts "Q", "Fp:<p>"
};

inline Field rationals() { return Field{}; }
inline Field prime_field(uint32_t p) { return Field(p); }

/// Exact scalar: a reduced fraction over Q or a residue in [0, p) over F_p.
class FieldElement {
 public:
  FieldElement() = default;  // rational zero
  explicit FieldElement(Field f) : field_(f) {}
  FieldElement(Field f, long value);
  FieldElement(Field f, long num, long den);

  static FieldElement from_mpq(mpq_class q);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  bool operator==(const FieldElement& o) const;

  FieldElement inverse() const;

  const mpq_class& rat() const { return rat_; }  // meaningful over Q only
  uint32_t residue() const { return res_; }      // meaningful over F_p only

  std::string str() const;  // "a", "a/b" over Q; decimal residue over F_p
  static FieldElement parse(Field f, const std::string& text);

  /// Total order used only for canonical tie-breaking, not field structure.
  int cmp(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  Field field_;
  mpq_class rat_;
  uint32_t res_ = 0;
};

}  // namespace hlx
