#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace csmlap {

struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("ring values belong to different ring contexts") {}
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct NonExactDivision : std::domain_error {
  NonExactDivision() : std::domain_error("division is not exact") {}
};

struct NotIntegralDomain : std::domain_error {
  explicit NotIntegralDomain(const std::string& what) : std::domain_error(what) {}
};

struct LiteralError : std::invalid_argument {
  explicit LiteralError(const std::string& what) : std::invalid_argument(what) {}
};

enum class RingKind { integer, rational, modular, polynomial };

class RingValue;

// Exact commutative-ring context: arbitrary-precision integers, exact
// rationals, integers mod m (m >= 2), or multivariate polynomials over
// the integers with a fixed list of named indeterminates. Values from
// different contexts must never be mixed in one operation.
class Ring {
 public:
  Ring() = default;  // integers

  static Ring integers();
  static Ring rationals();
  static Ring modular(std::uint64_t modulus);
  static Ring polynomials(std::vector<std::string> indeterminates);

  // "integer" | "rational" | "mod:M" | "poly:x,y,z"
  static Ring parse(const std::string& spec);
  std::string spec() const;

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const;
  const std::vector<std::string>& indeterminates() const;

  // Integers, rationals and polynomial rings always; modular only for prime m.
  bool is_integral_domain() const;

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(long x) const;
  RingValue from_mpz(const mpz_class& x) const;

  // Entry literal: optional-sign decimal (integer, modular), p/q (rational),
  // +-c*name^e*... sums (polynomial). Throws LiteralError.
  RingValue parse_value(const std::string& literal) const;

  // Polynomial ring only: the value of one named indeterminate.
  RingValue indeterminate(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  RingKind kind_ = RingKind::integer;
  std::uint64_t modulus_ = 0;
  std::shared_ptr<const std::vector<std::string>> vars_;
};

bool is_prime_u64(std::uint64_t n);

// Sparse multivariate polynomial over arbitrary-precision integers.
// Canonical form: terms sorted in descending lexicographic order of their
// exponent vectors (exponent slots follow the declared indeterminate list)
// with nonzero coefficients only.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Term = std::pair<Exponents, mpz_class>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, mpz_class c);
  static Polynomial indeterminate(std::size_t nvars, std::size_t index, std::uint32_t exponent = 1);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const mpz_class& constant_value() const;  // valid when is_constant()

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  bool operator==(const Polynomial&) const = default;

  // Exact quotient; throws NonExactDivision when divisor does not divide,
  // DivisionByZero when divisor is the zero polynomial.
  Polynomial divide_exact(const Polynomial& divisor) const;

  mpz_class eval(const std::vector<mpz_class>& values) const;

  static Polynomial parse(const std::string& text, const std::vector<std::string>& vars);
  std::string str(const std::vector<std::string>& vars) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// One exact ring element. Immutable value semantics; all operations are
// pure and check that both operands share one context.
class RingValue {
 public:
  RingValue();  // integer zero

  const Ring& ring() const { return ring_; }
  RingKind kind() const { return ring_.kind(); }

  bool is_zero() const;
  bool is_one() const;

  const mpz_class& integer() const;
  const mpq_class& rational() const;
  std::uint64_t residue() const;
  const Polynomial& poly() const;

  // Canonical literal; parse_value on the same ring yields an equal value.
  std::string str() const;

  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue operator-() const;
  RingValue& operator+=(const RingValue& o);
  RingValue& operator-=(const RingValue& o);
  RingValue& operator*=(const RingValue& o);

  friend bool operator==(const RingValue& a, const RingValue& b);
  friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }

 private:
  friend class Ring;
  friend RingValue exact_div(const RingValue&, const RingValue&);
  friend RingValue eval_poly(const RingValue&, const std::map<std::string, mpz_class>&);

  using Payload = std::variant<mpz_class, mpq_class, std::uint64_t, Polynomial>;
  RingValue(Ring r, Payload v) : ring_(std::move(r)), v_(std::move(v)) {}

  Ring ring_;
  Payload v_;
};

// q with q*b == a. Requires an integral domain; throws DivisionByZero,
// NonExactDivision or NotIntegralDomain.
RingValue exact_div(const RingValue& a, const RingValue& b);

// Evaluates a polynomial-ring value at an integer point; the result lives
// in the integer ring. Every indeterminate occurring in p must be bound.
RingValue eval_poly(const RingValue& p, const std::map<std::string, mpz_class>& assignment);

inline std::string to_string(const RingValue& v) { return v.str(); }
std::ostream& operator<<(std::ostream& os, const RingValue& v);

}  // namespace csmlap
