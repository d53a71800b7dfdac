#include "hlx/field.hpp"

#include <cstdlib>

namespace hlx {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidField: return "InvalidField";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotContained: return "NotContained";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::NotASubalgebra: return "NotASubalgebra";
    case Errc::DoesNotCover: return "DoesNotCover";
    case Errc::NotIso: return "NotIso";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::InvalidWitness: return "InvalidWitness";
    case Errc::InvalidFactorSet: return "InvalidFactorSet";
    case Errc::NoInvariantComplement: return "NoInvariantComplement";
    case Errc::NotStem: return "NotStem";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::InconsistentD: return "InconsistentD";
    case Errc::TwistObstructed: return "TwistObstructed";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Error";
}

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t mod_pow(uint64_t base, uint64_t exp, uint32_t p) {
  uint64_t acc = 1, b = base % p;
  while (exp) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

}  // namespace

Field::Field(uint32_t prime) : p(prime) {
  require(prime != 0, Errc::InvalidField, "characteristic 0 is spelled Field{} / rationals()");
  require(prime < (1u << 16), Errc::InvalidField, "prime must be < 2^16, got " + std::to_string(prime));
  require(is_prime_u32(prime), Errc::InvalidField, std::to_string(prime) + " is not prime");
}

std::string Field::name() const { return p == 0 ? "Q" : "Fp:" + std::to_string(p); }

Field Field::parse(const std::string& name) {
  if (name == "Q") return Field{};
  if (name.rfind("Fp:", 0) == 0) {
    const std::string digits = name.substr(3);
    require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
            Errc::InvalidField, "bad field descriptor '" + name + "'");
    unsigned long v = std::strtoul(digits.c_str(), nullptr, 10);
    require(v < (1u << 16), Errc::InvalidField, "prime must be < 2^16 in '" + name + "'");
    return Field(static_cast<uint32_t>(v));
  }
  fail(Errc::InvalidField, "field descriptor must be 'Q' or 'Fp:<p>', got '" + name + "'");
}

FieldElement::FieldElement(Field f, long value) : field_(f) {
  if (f.is_rational()) {
    rat_ = value;
  } else {
    long r = value % static_cast<long>(f.p);
    if (r < 0) r += f.p;
    res_ = static_cast<uint32_t>(r);
  }
}

FieldElement::FieldElement(Field f, long num, long den) : field_(f) {
  require(den != 0, Errc::InvalidField, "zero denominator");
  if (f.is_rational()) {
    rat_ = mpq_class(num, den);
    rat_.canonicalize();
  } else {
    *this = FieldElement(f, num) / FieldElement(f, den);
  }
}

FieldElement FieldElement::from_mpq(mpq_class q) {
  FieldElement e;
  q.canonicalize();
  e.rat_ = std::move(q);
  return e;
}

bool FieldElement::is_zero() const { return field_.is_rational() ? rat_ == 0 : res_ == 0; }

bool FieldElement::is_one() const { return field_.is_rational() ? rat_ == 1 : res_ == 1; }

void FieldElement::check_same(const FieldElement& o) const {
  require(field_ == o.field_, Errc::FieldMismatch,
          "mixing scalars over " + field_.name() + " and " + o.field_.name());
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  if (field_.is_rational())
    r.rat_ = -rat_;
  else
    r.res_ = res_ == 0 ? 0 : field_.p - res_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  if (field_.is_rational()) {
    rat_ += o.rat_;
  } else {
    uint64_t s = static_cast<uint64_t>(res_) + o.res_;
    res_ = static_cast<uint32_t>(s % field_.p);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  if (field_.is_rational())
    rat_ *= o.rat_;
  else
    res_ = static_cast<uint32_t>(static_cast<uint64_t>(res_) * o.res_ % field_.p);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
  require(!is_zero(), Errc::InvalidField, "division by zero");
  FieldElement r(*this);
  if (field_.is_rational())
    r.rat_ = 1 / rat_;
  else
    r.res_ = mod_pow(res_, field_.p - 2, field_.p);
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && (field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_);
}

int FieldElement::cmp(const FieldElement& o) const {
  check_same(o);
  if (field_.is_rational()) return ::cmp(rat_, o.rat_);
  return res_ < o.res_ ? -1 : res_ > o.res_ ? 1 : 0;
}

std::string FieldElement::str() const {
  if (!field_.is_rational()) return std::to_string(res_);
  if (rat_.get_den() == 1) return rat_.get_num().get_str();
  return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

FieldElement FieldElement::parse(Field f, const std::string& text) {
  require(!text.empty(), Errc::SchemaError, "empty scalar");
  const auto check_int = [&](const std::string& s) {
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos,
            Errc::SchemaError, "bad integer '" + s + "' in scalar '" + text + "'");
  };
  mpq_class q;
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    check_int(text);
    q = mpq_class(mpz_class(text));
  } else {
    const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    require(d != 0, Errc::SchemaError, "zero denominator in '" + text + "'");
    q = mpq_class(mpz_class(num), d);
    q.canonicalize();
  }
  if (f.is_rational()) return from_mpq(std::move(q));
  // Residue of a rational: only well defined when the denominator is a unit mod p.
  mpz_class den = q.get_den(), num = q.get_num(), pz(f.p);
  require(mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()) == 0, Errc::SchemaError,
          "denominator of '" + text + "' vanishes mod " + std::to_string(f.p));
  mpz_class nr = num % pz, dr = den % pz;
  long n = nr.get_si(), d = dr.get_si();
  return FieldElement(f, n) / FieldElement(f, d);
}

}  // namespace hlx
