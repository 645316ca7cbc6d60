#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nullcert/errors.hpp"

namespace nullcert {

enum class FieldKind { prime, extension, rationals };
enum class ArithOp { add, sub, mul, div };

// Coefficient vector of a univariate polynomial over GF(p), c[i] is the
// coefficient of t^i. Used both for extension-field elements (fixed length k)
// and for modulus polynomials (length k+1, monic).
using PrimePoly = std::vector<std::uint32_t>;

// One exact field element. The active alternative matches the field kind:
// prime fields store the residue in [0,p), extensions a coefficient vector of
// length k over GF(p), rationals a canonical GMP fraction (den > 0, gcd 1).
class FieldElem {
 public:
  FieldElem() : rep_(std::uint64_t{0}) {}

  static FieldElem residue(std::uint64_t r) { return FieldElem(Rep(r)); }
  static FieldElem ext_coeffs(PrimePoly c) { return FieldElem(Rep(std::move(c))); }
  static FieldElem rational(mpq_class q) { return FieldElem(Rep(std::move(q))); }

  FieldKind kind() const {
    switch (rep_.index()) {
      case 0: return FieldKind::prime;
      case 1: return FieldKind::extension;
      default: return FieldKind::rationals;
    }
  }

  std::uint64_t res() const { return std::get<std::uint64_t>(rep_); }
  const PrimePoly& coeffs() const { return std::get<PrimePoly>(rep_); }
  const mpq_class& rat() const { return std::get<mpq_class>(rep_); }

  bool operator==(const FieldElem& o) const { return rep_ == o.rep_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  using Rep = std::variant<std::uint64_t, PrimePoly, mpq_class>;
  explicit FieldElem(Rep r) : rep_(std::move(r)) {}
  Rep rep_;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// --- dense univariate arithmetic over GF(p), desk scale ---

inline void pp_trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly pp_mul(const PrimePoly& a, const PrimePoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  pp_trim(r);
  return r;
}

// Remainder of a modulo the monic polynomial m.
inline PrimePoly pp_mod(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
  pp_trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t j = 0; j < dm; ++j) {
        std::uint64_t sub = (lead * m[j]) % p;
        std::uint64_t cur = a[shift + j];
        a[shift + j] = static_cast<std::uint32_t>((cur + p - sub) % p);
      }
    }
    a.pop_back();
    pp_trim(a);
    if (a.size() <= dm) break;
  }
  return a;
}

inline std::uint64_t pp_eval(const PrimePoly& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p;
  return acc;
}

// Irreducibility over GF(p): no roots, and no monic factor of degree
// 2..deg/2 found by trial division.
inline bool pp_irreducible(const PrimePoly& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::uint64_t x = 0; x < p; ++x)
    if (pp_eval(f, x, p) == 0) return false;
  if (deg == 1) return true;
  for (std::size_t e = 2; 2 * e <= deg; ++e) {
    PrimePoly div(e + 1, 0);
    div[e] = 1;
    while (true) {
      PrimePoly rem = pp_mod(f, div, p);
      if (rem.empty()) return false;
      std::size_t i = 0;
      while (i < e && div[i] + 1 == p) div[i++] = 0;
      if (i == e) break;
      ++div[i];
    }
  }
  return true;
}

}  // namespace detail

// Exact field context. Immutable after construction; all element operations
// are pure, so values and the field itself can be shared freely.
class Field {
 public:
  static constexpr std::uint64_t kMaxCardinality = 1u << 20;

  static Field prime(std::uint64_t p) {
    Field f;
    f.kind_ = FieldKind::prime;
    f.p_ = p;
    f.k_ = 1;
    f.q_ = p;
    f.validate();
    return f;
  }

  static Field extension(std::uint64_t p, unsigned k,
                         std::optional<PrimePoly> modulus = std::nullopt) {
    Field f;
    f.kind_ = FieldKind::extension;
    f.p_ = p;
    f.k_ = k;
    if (k < 2)
      throw std::invalid_argument("extension field requires k >= 2; use a prime field for k = 1");
    f.q_ = checked_pow(p, k);
    if (modulus) {
      f.modulus_ = canonical_modulus(*modulus, p, k);
    } else {
      f.modulus_ = auto_modulus(p, k);
    }
    f.validate();
    return f;
  }

  static Field rationals() {
    Field f;
    f.kind_ = FieldKind::rationals;
    return f;
  }

  static Field make(FieldKind kind, std::uint64_t p = 0, unsigned k = 1,
                    std::optional<PrimePoly> modulus = std::nullopt) {
    switch (kind) {
      case FieldKind::prime:
        if (modulus) throw std::invalid_argument("prime field takes no modulus");
        if (k != 1) throw std::invalid_argument("prime field requires k = 1");
        return prime(p);
      case FieldKind::extension:
        return extension(p, k, std::move(modulus));
      default:
        return rationals();
    }
  }

  FieldKind kind() const { return kind_; }
  bool finite() const { return kind_ != FieldKind::rationals; }
  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }  // cardinality, finite fields only
  const PrimePoly& modulus() const { return modulus_; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // --- element construction ---

  FieldElem zero() const { return from_integer(0); }
  FieldElem one() const { return from_integer(1); }

  FieldElem from_integer(long long v) const {
    switch (kind_) {
      case FieldKind::prime: {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return FieldElem::residue(static_cast<std::uint64_t>(r));
      }
      case FieldKind::extension: {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        PrimePoly c(k_, 0);
        c[0] = static_cast<std::uint32_t>(r);
        return FieldElem::ext_coeffs(std::move(c));
      }
      default:
        return FieldElem::rational(mpq_class(static_cast<long>(v)));
    }
  }

  FieldElem from_mpz(const mpz_class& v) const {
    if (kind_ == FieldKind::rationals) return FieldElem::rational(mpq_class(v));
    mpz_class r = v % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return from_integer(r.get_si());
  }

  FieldElem from_rational(mpq_class v) const {
    if (kind_ != FieldKind::rationals)
      throw std::invalid_argument("rational literal in a finite field");
    v.canonicalize();
    return FieldElem::rational(std::move(v));
  }

  // Generator t of the extension; error elsewhere.
  FieldElem generator() const {
    if (kind_ != FieldKind::extension)
      throw std::invalid_argument("t is reserved for extension fields");
    PrimePoly c(k_, 0);
    c[1] = 1;
    return FieldElem::ext_coeffs(std::move(c));
  }

  // i-th element under the canonical enumeration, 0 <= i < q. Element 0 is
  // zero; extensions read i in base p, low coefficient first.
  FieldElem element_at(std::uint64_t i) const {
    require_finite("element_at");
    if (i >= q_) throw std::invalid_argument("element index out of range");
    if (kind_ == FieldKind::prime) return FieldElem::residue(i);
    PrimePoly c(k_, 0);
    for (unsigned j = 0; j < k_; ++j) {
      c[j] = static_cast<std::uint32_t>(i % p_);
      i /= p_;
    }
    return FieldElem::ext_coeffs(std::move(c));
  }

  std::uint64_t index_of(const FieldElem& a) const {
    require_finite("index_of");
    check(a);
    if (kind_ == FieldKind::prime) return a.res();
    std::uint64_t i = 0;
    const PrimePoly& c = a.coeffs();
    for (unsigned j = k_; j-- > 0;) i = i * p_ + c[j];
    return i;
  }

  // --- element predicates ---

  bool contains(const FieldElem& a) const {
    switch (kind_) {
      case FieldKind::prime:
        return a.kind() == FieldKind::prime && a.res() < p_;
      case FieldKind::extension: {
        if (a.kind() != FieldKind::extension) return false;
        const PrimePoly& c = a.coeffs();
        if (c.size() != k_) return false;
        for (auto v : c)
          if (v >= p_) return false;
        return true;
      }
      default:
        return a.kind() == FieldKind::rationals;
    }
  }

  bool is_zero(const FieldElem& a) const {
    check(a);
    switch (kind_) {
      case FieldKind::prime: return a.res() == 0;
      case FieldKind::extension: {
        for (auto v : a.coeffs())
          if (v != 0) return false;
        return true;
      }
      default: return a.rat() == 0;
    }
  }

  bool is_one(const FieldElem& a) const { return a == one(); }

  // --- arithmetic ---

  FieldElem add(const FieldElem& a, const FieldElem& b) const {
    check(a); check(b);
    switch (kind_) {
      case FieldKind::prime: return FieldElem::residue((a.res() + b.res()) % p_);
      case FieldKind::extension: {
        PrimePoly c(k_);
        for (unsigned i = 0; i < k_; ++i)
          c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.coeffs()[i]) + b.coeffs()[i]) % p_);
        return FieldElem::ext_coeffs(std::move(c));
      }
      default: {
        mpq_class r = a.rat() + b.rat();
        r.canonicalize();
        return FieldElem::rational(std::move(r));
      }
    }
  }

  FieldElem sub(const FieldElem& a, const FieldElem& b) const {
    check(a); check(b);
    switch (kind_) {
      case FieldKind::prime:
        return FieldElem::residue((a.res() + p_ - b.res()) % p_);
      case FieldKind::extension: {
        PrimePoly c(k_);
        for (unsigned i = 0; i < k_; ++i)
          c[i] = static_cast<std::uint32_t>((a.coeffs()[i] + p_ - b.coeffs()[i]) % p_);
        return FieldElem::ext_coeffs(std::move(c));
      }
      default: {
        mpq_class r = a.rat() - b.rat();
        r.canonicalize();
        return FieldElem::rational(std::move(r));
      }
    }
  }

  FieldElem neg(const FieldElem& a) const { return sub(zero(), a); }

  FieldElem mul(const FieldElem& a, const FieldElem& b) const {
    check(a); check(b);
    switch (kind_) {
      case FieldKind::prime: return FieldElem::residue((a.res() * b.res()) % p_);
      case FieldKind::extension: {
        PrimePoly r = detail::pp_mod(detail::pp_mul(a.coeffs(), b.coeffs(), p_), modulus_, p_);
        r.resize(k_, 0);
        return FieldElem::ext_coeffs(std::move(r));
      }
      default: {
        mpq_class r = a.rat() * b.rat();
        r.canonicalize();
        return FieldElem::rational(std::move(r));
      }
    }
  }

  FieldElem inv(const FieldElem& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (kind_ == FieldKind::rationals) {
      mpq_class r = 1 / a.rat();
      r.canonicalize();
      return FieldElem::rational(std::move(r));
    }
    return pow(a, q_ - 2);
  }

  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

  // Square-and-multiply; 0^0 = 1 by convention.
  FieldElem pow(const FieldElem& a, std::uint64_t e) const {
    check(a);
    FieldElem acc = one();
    FieldElem base = a;
    while (e != 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op) const {
    switch (op) {
      case ArithOp::add: return add(a, b);
      case ArithOp::sub: return sub(a, b);
      case ArithOp::mul: return mul(a, b);
      default: return div(a, b);
    }
  }

  // --- canonical text form ---

  // GF(7) -> "4"; GF(3^3) -> "2*t^2+1"; QQ -> "-5/6". Inverse lives in the
  // sysio expression reader.
  std::string to_string(const FieldElem& a) const {
    check(a);
    switch (kind_) {
      case FieldKind::prime:
        return std::to_string(a.res());
      case FieldKind::extension: {
        const PrimePoly& c = a.coeffs();
        std::string s;
        for (unsigned j = k_; j-- > 0;) {
          if (c[j] == 0) continue;
          if (!s.empty()) s += '+';
          if (j == 0) {
            s += std::to_string(c[j]);
          } else {
            if (c[j] != 1) {
              s += std::to_string(c[j]);
              s += '*';
            }
            s += 't';
            if (j > 1) {
              s += '^';
              s += std::to_string(j);
            }
          }
        }
        return s.empty() ? "0" : s;
      }
      default:
        return a.rat().get_str();
    }
  }

  // Field descriptor in wire syntax: GF(7), GF(3^3) mod t^3+2*t^2+1, QQ.
  std::string describe() const {
    switch (kind_) {
      case FieldKind::prime:
        return "GF(" + std::to_string(p_) + ")";
      case FieldKind::extension: {
        std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ") mod ";
        std::string body;
        for (std::size_t j = modulus_.size(); j-- > 0;) {
          if (modulus_[j] == 0) continue;
          if (!body.empty()) body += '+';
          if (j == 0) {
            body += std::to_string(modulus_[j]);
          } else {
            if (modulus_[j] != 1) {
              body += std::to_string(modulus_[j]);
              body += '*';
            }
            body += 't';
            if (j > 1) {
              body += '^';
              body += std::to_string(j);
            }
          }
        }
        return s + body;
      }
      default:
        return "QQ";
    }
  }

 private:
  Field() = default;

  static std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (q > kMaxCardinality / p)
        throw std::invalid_argument("field cardinality exceeds the supported limit 2^20");
      q *= p;
    }
    return q;
  }

  static PrimePoly canonical_modulus(PrimePoly m, std::uint64_t p, unsigned k) {
    for (auto& c : m) c = static_cast<std::uint32_t>(c % p);
    detail::pp_trim(m);
    if (m.size() != k + 1)
      throw std::invalid_argument("modulus degree must equal the extension degree k");
    if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!detail::pp_irreducible(m, p))
      throw std::invalid_argument("modulus is reducible over GF(p)");
    return m;
  }

  // Lexicographically least monic irreducible of degree k, coefficients
  // compared low-degree-first. Deterministic across runs.
  static PrimePoly auto_modulus(std::uint64_t p, unsigned k) {
    PrimePoly f(k + 1, 0);
    f[k] = 1;
    while (true) {
      if (detail::pp_irreducible(f, p)) return f;
      unsigned i = k;
      for (i = k; i-- > 0;) {
        if (f[i] + 1 < p) {
          ++f[i];
          break;
        }
        f[i] = 0;
      }
      if (i == static_cast<unsigned>(-1))
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }
  }

  void validate() const {
    if (kind_ == FieldKind::rationals) return;
    if (p_ >= (1ull << 32) || !detail::is_prime_u64(p_))
      throw std::invalid_argument("field characteristic must be a prime < 2^32");
    if (q_ > kMaxCardinality)
      throw std::invalid_argument("field cardinality exceeds the supported limit 2^20");
  }

  void require_finite(const char* what) const {
    if (!finite()) throw std::domain_error(std::string(what) + " requires a finite field");
  }

  void check(const FieldElem& a) const {
    if (!contains(a)) throw std::invalid_argument("element does not belong to this field");
  }

  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;
  PrimePoly modulus_;
};

}  // namespace nullcert
