#include "csmlap/ring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace csmlap {

namespace {

void require_same(const Ring& a, const Ring& b) {
  if (a != b) throw RingMismatch();
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool valid_decimal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_mpz(const std::string& s) {
  if (!valid_decimal(s)) throw LiteralError("bad integer literal: '" + s + "'");
  return mpz_class(s);
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// ---- modular arithmetic on uint64 residues ----

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : m - (b - a);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& x, std::uint64_t m) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  mpz_class mm(static_cast<unsigned long>(m));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
  return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin witness set for n < 2^64
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---- Ring ----

Ring Ring::integers() { return Ring(); }

Ring Ring::rationals() {
  Ring r;
  r.kind_ = RingKind::rational;
  return r;
}

Ring Ring::modular(std::uint64_t modulus) {
  if (modulus < 2) throw LiteralError("modulus must be >= 2");
  Ring r;
  r.kind_ = RingKind::modular;
  r.modulus_ = modulus;
  return r;
}

Ring Ring::polynomials(std::vector<std::string> indeterminates) {
  if (indeterminates.empty()) throw LiteralError("polynomial ring needs at least one indeterminate");
  for (const auto& v : indeterminates)
    if (!valid_identifier(v)) throw LiteralError("bad indeterminate name: '" + v + "'");
  for (std::size_t i = 0; i < indeterminates.size(); ++i)
    for (std::size_t j = i + 1; j < indeterminates.size(); ++j)
      if (indeterminates[i] == indeterminates[j])
        throw LiteralError("duplicate indeterminate: '" + indeterminates[i] + "'");
  Ring r;
  r.kind_ = RingKind::polynomial;
  r.vars_ = std::make_shared<const std::vector<std::string>>(std::move(indeterminates));
  return r;
}

Ring Ring::parse(const std::string& spec) {
  std::string s = trimmed(spec);
  if (s == "integer") return integers();
  if (s == "rational") return rationals();
  if (s.rfind("mod:", 0) == 0) {
    std::string m = s.substr(4);
    if (!valid_decimal(m) || m[0] == '-' || m[0] == '+')
      throw LiteralError("bad modulus in ring spec: '" + s + "'");
    mpz_class mm(m);
    if (!mm.fits_ulong_p()) throw LiteralError("modulus too large: '" + m + "'");
    return modular(mm.get_ui());
  }
  if (s.rfind("poly:", 0) == 0) {
    std::vector<std::string> vars;
    std::string rest = s.substr(5);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      std::string name = trimmed(comma == std::string::npos ? rest.substr(start)
                                                            : rest.substr(start, comma - start));
      vars.push_back(name);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return polynomials(std::move(vars));
  }
  throw LiteralError("bad ring spec: '" + spec + "'");
}

std::string Ring::spec() const {
  switch (kind_) {
    case RingKind::integer:
      return "integer";
    case RingKind::rational:
      return "rational";
    case RingKind::modular:
      return "mod:" + std::to_string(modulus_);
    case RingKind::polynomial: {
      std::string s = "poly:";
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (i) s += ',';
        s += (*vars_)[i];
      }
      return s;
    }
  }
  return "";
}

std::uint64_t Ring::modulus() const {
  if (kind_ != RingKind::modular) throw std::logic_error("not a modular ring");
  return modulus_;
}

const std::vector<std::string>& Ring::indeterminates() const {
  if (kind_ != RingKind::polynomial) throw std::logic_error("not a polynomial ring");
  return *vars_;
}

bool Ring::is_integral_domain() const {
  return kind_ != RingKind::modular || is_prime_u64(modulus_);
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case RingKind::modular:
      return a.modulus_ == b.modulus_;
    case RingKind::polynomial:
      return *a.vars_ == *b.vars_;
    default:
      return true;
  }
}

RingValue Ring::zero() const { return from_int(0); }

RingValue Ring::one() const { return from_int(1); }

RingValue Ring::from_int(long x) const {
  switch (kind_) {
    case RingKind::integer:
      return RingValue(*this, mpz_class(x));
    case RingKind::rational:
      return RingValue(*this, mpq_class(x));
    case RingKind::modular: {
      __int128 mm = static_cast<__int128>(modulus_);
      __int128 r = (static_cast<__int128>(x) % mm + mm) % mm;
      return RingValue(*this, static_cast<std::uint64_t>(r));
    }
    case RingKind::polynomial:
      return RingValue(*this, Polynomial::constant(vars_->size(), mpz_class(x)));
  }
  throw std::logic_error("bad ring kind");
}

RingValue Ring::from_mpz(const mpz_class& x) const {
  switch (kind_) {
    case RingKind::integer:
      return RingValue(*this, x);
    case RingKind::rational:
      return RingValue(*this, mpq_class(x));
    case RingKind::modular:
      return RingValue(*this, reduce_mpz(x, modulus_));
    case RingKind::polynomial:
      return RingValue(*this, Polynomial::constant(vars_->size(), x));
  }
  throw std::logic_error("bad ring kind");
}

RingValue Ring::parse_value(const std::string& literal) const {
  std::string s = trimmed(literal);
  if (s.empty()) throw LiteralError("empty entry literal");
  switch (kind_) {
    case RingKind::integer:
      return RingValue(*this, parse_mpz(s));
    case RingKind::rational: {
      std::size_t slash = s.find('/');
      if (slash == std::string::npos) return RingValue(*this, mpq_class(parse_mpz(s)));
      mpz_class num = parse_mpz(trimmed(s.substr(0, slash)));
      mpz_class den = parse_mpz(trimmed(s.substr(slash + 1)));
      if (den == 0) throw LiteralError("zero denominator: '" + s + "'");
      mpq_class q(num, den);
      q.canonicalize();
      return RingValue(*this, std::move(q));
    }
    case RingKind::modular:
      return RingValue(*this, reduce_mpz(parse_mpz(s), modulus_));
    case RingKind::polynomial:
      return RingValue(*this, Polynomial::parse(s, *vars_));
  }
  throw std::logic_error("bad ring kind");
}

RingValue Ring::indeterminate(const std::string& name) const {
  const auto& vars = indeterminates();
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return RingValue(*this, Polynomial::indeterminate(vars.size(), i));
  throw LiteralError("unknown indeterminate: '" + name + "'");
}

// ---- Polynomial ----

namespace {

// descending lexicographic term order on exponent vectors
bool lex_greater(const Polynomial::Exponents& a, const Polynomial::Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

struct LexGreater {
  bool operator()(const Polynomial::Exponents& a, const Polynomial::Exponents& b) const {
    return lex_greater(a, b);
  }
};

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, mpz_class c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Exponents(nvars, 0), std::move(c));
  return p;
}

Polynomial Polynomial::indeterminate(std::size_t nvars, std::size_t index, std::uint32_t exponent) {
  if (index >= nvars) throw std::logic_error("indeterminate index out of range");
  Polynomial p(nvars);
  if (exponent == 0) return constant(nvars, 1);
  Exponents e(nvars, 0);
  e[index] = exponent;
  p.terms_.emplace_back(std::move(e), mpz_class(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (auto e : terms_[0].first)
    if (e) return false;
  return true;
}

const mpz_class& Polynomial::constant_value() const {
  static const mpz_class kZero(0);
  if (terms_.empty()) return kZero;
  return terms_[0].second;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch();
  Polynomial r(a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[j];
    if (ta.first == tb.first) {
      mpz_class c = ta.second + tb.second;
      if (c != 0) r.terms_.emplace_back(ta.first, std::move(c));
      ++i;
      ++j;
    } else if (lex_greater(ta.first, tb.first)) {
      r.terms_.push_back(ta);
      ++i;
    } else {
      r.terms_.push_back(tb);
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first, mpz_class(-t.second));
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch();
  Polynomial r(a.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::map<Polynomial::Exponents, mpz_class, LexGreater> acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Polynomial::Exponents e(a.nvars_);
      for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = ta.first[k] + tb.first[k];
      acc[std::move(e)] += ta.second * tb.second;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (nvars_ != divisor.nvars_) throw RingMismatch();
  if (divisor.is_zero()) throw DivisionByZero();
  Polynomial quotient(nvars_);
  Polynomial rem = *this;
  const auto& [de, dc] = divisor.terms_.front();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.terms_.front();
    Exponents qe(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (re[k] < de[k]) throw NonExactDivision();
      qe[k] = re[k] - de[k];
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) throw NonExactDivision();
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
    Polynomial t(nvars_);
    t.terms_.emplace_back(std::move(qe), std::move(qc));
    quotient = quotient + t;
    rem = rem - t * divisor;  // cancels the leading term, so this terminates
  }
  return quotient;
}

mpz_class Polynomial::eval(const std::vector<mpz_class>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
  mpz_class acc(0);
  for (const auto& [e, c] : terms_) {
    mpz_class t = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), values[k].get_mpz_t(), e[k]);
      t *= p;
    }
    acc += t;
  }
  return acc;
}

namespace {

struct PolyParser {
  const std::string& s;
  const std::vector<std::string>& vars;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }

  [[noreturn]] void fail(const std::string& why) {
    throw LiteralError("bad polynomial literal '" + s + "': " + why);
  }

  mpz_class digits() {
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) fail("expected digits");
    return mpz_class(s.substr(b, i - b));
  }

  std::string ident() {
    std::size_t b = i;
    if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      ++i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    }
    if (b == i) fail("expected indeterminate name");
    return s.substr(b, i - b);
  }

  void var_factor(Polynomial::Exponents& exps) {
    std::string name = ident();
    std::size_t idx = vars.size();
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == name) {
        idx = k;
        break;
      }
    if (idx == vars.size()) fail("unknown indeterminate '" + name + "'");
    std::uint32_t e = 1;
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws();
      mpz_class d = digits();
      if (!d.fits_uint_p()) fail("exponent too large");
      e = static_cast<std::uint32_t>(d.get_ui());
    }
    exps[idx] += e;
  }

};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& vars) {
  PolyParser p{text, vars};
  Polynomial result(vars.size());
  bool first = true;
  if (p.eof()) p.fail("empty literal");
  while (!p.eof()) {
    int sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++p.i;
      p.skip_ws();
    } else if (!first) {
      p.fail("expected '+' or '-' between terms");
    }
    // one term: optional coefficient, then *-joined name^exp factors
    Exponents exps(vars.size(), 0);
    mpz_class coef(1);
    if (p.eof()) p.fail("dangling sign");
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      coef = p.digits();
      p.skip_ws();
      while (p.i < p.s.size() && p.s[p.i] == '*') {
        ++p.i;
        p.skip_ws();
        p.var_factor(exps);
        p.skip_ws();
      }
    } else {
      p.var_factor(exps);
      p.skip_ws();
      while (p.i < p.s.size() && p.s[p.i] == '*') {
        ++p.i;
        p.skip_ws();
        p.var_factor(exps);
        p.skip_ws();
      }
    }
    if (sign < 0) coef = -coef;
    Polynomial t(vars.size());
    if (coef != 0) t.terms_.emplace_back(std::move(exps), std::move(coef));
    result = result + t;
    first = false;
  }
  return result;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    bool any_var = false;
    for (auto x : e)
      if (x) any_var = true;
    if (!any_var) {
      out += mag.get_str();
    } else {
      bool first_factor = true;
      if (mag != 1) {
        out += mag.get_str();
        first_factor = false;
      }
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        if (!first_factor) out += '*';
        out += vars[k];
        out += '^';
        out += std::to_string(e[k]);
        first_factor = false;
      }
    }
    first = false;
  }
  return out;
}

// ---- RingValue ----

RingValue::RingValue() : ring_(Ring::integers()), v_(mpz_class(0)) {}

bool RingValue::is_zero() const {
  switch (kind()) {
    case RingKind::integer:
      return std::get<mpz_class>(v_) == 0;
    case RingKind::rational:
      return std::get<mpq_class>(v_) == 0;
    case RingKind::modular:
      return std::get<std::uint64_t>(v_) == 0;
    case RingKind::polynomial:
      return std::get<Polynomial>(v_).is_zero();
  }
  return false;
}

bool RingValue::is_one() const { return *this == ring_.one(); }

const mpz_class& RingValue::integer() const {
  if (kind() != RingKind::integer) throw std::logic_error("not an integer value");
  return std::get<mpz_class>(v_);
}

const mpq_class& RingValue::rational() const {
  if (kind() != RingKind::rational) throw std::logic_error("not a rational value");
  return std::get<mpq_class>(v_);
}

std::uint64_t RingValue::residue() const {
  if (kind() != RingKind::modular) throw std::logic_error("not a modular value");
  return std::get<std::uint64_t>(v_);
}

const Polynomial& RingValue::poly() const {
  if (kind() != RingKind::polynomial) throw std::logic_error("not a polynomial value");
  return std::get<Polynomial>(v_);
}

std::string RingValue::str() const {
  switch (kind()) {
    case RingKind::integer:
      return std::get<mpz_class>(v_).get_str();
    case RingKind::rational:
      return std::get<mpq_class>(v_).get_str();
    case RingKind::modular:
      return std::to_string(std::get<std::uint64_t>(v_));
    case RingKind::polynomial:
      return std::get<Polynomial>(v_).str(ring_.indeterminates());
  }
  return "";
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same(a.ring_, b.ring_);
  switch (a.kind()) {
    case RingKind::integer:
      return RingValue(a.ring_, mpz_class(std::get<mpz_class>(a.v_) + std::get<mpz_class>(b.v_)));
    case RingKind::rational:
      return RingValue(a.ring_, mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
    case RingKind::modular:
      return RingValue(a.ring_, add_mod(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                                        a.ring_.modulus()));
    case RingKind::polynomial:
      return RingValue(a.ring_, std::get<Polynomial>(a.v_) + std::get<Polynomial>(b.v_));
  }
  throw std::logic_error("bad ring kind");
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  require_same(a.ring_, b.ring_);
  switch (a.kind()) {
    case RingKind::integer:
      return RingValue(a.ring_, mpz_class(std::get<mpz_class>(a.v_) - std::get<mpz_class>(b.v_)));
    case RingKind::rational:
      return RingValue(a.ring_, mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_)));
    case RingKind::modular:
      return RingValue(a.ring_, sub_mod(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                                        a.ring_.modulus()));
    case RingKind::polynomial:
      return RingValue(a.ring_, std::get<Polynomial>(a.v_) - std::get<Polynomial>(b.v_));
  }
  throw std::logic_error("bad ring kind");
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same(a.ring_, b.ring_);
  switch (a.kind()) {
    case RingKind::integer:
      return RingValue(a.ring_, mpz_class(std::get<mpz_class>(a.v_) * std::get<mpz_class>(b.v_)));
    case RingKind::rational:
      return RingValue(a.ring_, mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
    case RingKind::modular:
      return RingValue(a.ring_, mul_mod(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                                        a.ring_.modulus()));
    case RingKind::polynomial:
      return RingValue(a.ring_, std::get<Polynomial>(a.v_) * std::get<Polynomial>(b.v_));
  }
  throw std::logic_error("bad ring kind");
}

RingValue RingValue::operator-() const {
  switch (kind()) {
    case RingKind::integer:
      return RingValue(ring_, mpz_class(-std::get<mpz_class>(v_)));
    case RingKind::rational:
      return RingValue(ring_, mpq_class(-std::get<mpq_class>(v_)));
    case RingKind::modular: {
      std::uint64_t v = std::get<std::uint64_t>(v_);
      return RingValue(ring_, v == 0 ? 0 : ring_.modulus() - v);
    }
    case RingKind::polynomial:
      return RingValue(ring_, -std::get<Polynomial>(v_));
  }
  throw std::logic_error("bad ring kind");
}

RingValue& RingValue::operator+=(const RingValue& o) { return *this = *this + o; }
RingValue& RingValue::operator-=(const RingValue& o) { return *this = *this - o; }
RingValue& RingValue::operator*=(const RingValue& o) { return *this = *this * o; }

bool operator==(const RingValue& a, const RingValue& b) {
  require_same(a.ring_, b.ring_);
  return a.v_ == b.v_;
}

RingValue exact_div(const RingValue& a, const RingValue& b) {
  require_same(a.ring_, b.ring_);
  const Ring& ring = a.ring_;
  if (!ring.is_integral_domain())
    throw NotIntegralDomain("exact division needs an integral domain, got " + ring.spec());
  if (b.is_zero()) throw DivisionByZero();
  switch (a.kind()) {
    case RingKind::integer: {
      const auto& x = std::get<mpz_class>(a.v_);
      const auto& y = std::get<mpz_class>(b.v_);
      if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) throw NonExactDivision();
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      return RingValue(ring, std::move(q));
    }
    case RingKind::rational:
      return RingValue(ring, mpq_class(std::get<mpq_class>(a.v_) / std::get<mpq_class>(b.v_)));
    case RingKind::modular: {
      std::uint64_t m = ring.modulus();
      std::uint64_t inv = pow_mod(std::get<std::uint64_t>(b.v_), m - 2, m);
      return RingValue(ring, mul_mod(std::get<std::uint64_t>(a.v_), inv, m));
    }
    case RingKind::polynomial:
      return RingValue(ring, std::get<Polynomial>(a.v_).divide_exact(std::get<Polynomial>(b.v_)));
  }
  throw std::logic_error("bad ring kind");
}

RingValue eval_poly(const RingValue& p, const std::map<std::string, mpz_class>& assignment) {
  if (p.kind() != RingKind::polynomial)
    throw std::invalid_argument("eval_poly needs a polynomial-ring value");
  const auto& vars = p.ring_.indeterminates();
  const Polynomial& poly = std::get<Polynomial>(p.v_);
  // indeterminates that actually occur must be bound
  std::vector<bool> occurs(vars.size(), false);
  for (const auto& [e, c] : poly.terms())
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (e[k]) occurs[k] = true;
  std::vector<mpz_class> values(vars.size(), mpz_class(0));
  for (std::size_t k = 0; k < vars.size(); ++k) {
    auto it = assignment.find(vars[k]);
    if (it != assignment.end())
      values[k] = it->second;
    else if (occurs[k])
      throw std::invalid_argument("unbound indeterminate: '" + vars[k] + "'");
  }
  return Ring::integers().from_mpz(poly.eval(values));
}

std::ostream& operator<<(std::ostream& os, const RingValue& v) { return os << v.str(); }

}  // namespace csmlap
