#include "clusterseed/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "clusterseed/errors.hpp"

namespace clusterseed {

namespace {

void require_same_ambient(const LaurentPoly& p, const LaurentPoly& q, const char* op) {
  if (p.ambient() != q.ambient()) {
    std::ostringstream os;
    os << op << ": ambient variable counts differ (" << p.ambient() << " vs " << q.ambient()
       << ")";
    throw AmbientMismatch(os.str());
  }
}

int checked_add(int a, int b) {
  int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("Laurent exponent overflow");
  return r;
}

int checked_mul(int a, long b) {
  long r = 0;
  if (__builtin_mul_overflow(static_cast<long>(a), b, &r) ||
      r > std::numeric_limits<int>::max() || r < std::numeric_limits<int>::min()) {
    throw InvalidArgument("Laurent exponent overflow");
  }
  return static_cast<int>(r);
}

// Grlex key: total degree prepended, so plain lexicographic comparison of the
// key is graded-lexicographic comparison of the exponents.
ExponentVector grlex_key(const ExponentVector& e) {
  ExponentVector key;
  key.reserve(e.size() + 1);
  long deg = 0;
  for (int x : e) deg += x;
  key.push_back(static_cast<int>(deg));
  key.insert(key.end(), e.begin(), e.end());
  return key;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t m, const mpz_class& c) {
  LaurentPoly p(m);
  p.add_term(ExponentVector(m, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t m, std::size_t index) {
  if (index >= m) throw InvalidArgument("variable index out of range");
  ExponentVector e(m, 0);
  e[index] = 1;
  return monomial(m, std::move(e));
}

LaurentPoly LaurentPoly::monomial(std::size_t m, ExponentVector exponents, const mpz_class& c) {
  if (exponents.size() != m) throw InvalidArgument("exponent vector length differs from ambient");
  LaurentPoly p(m);
  p.add_term(exponents, c);
  return p;
}

bool LaurentPoly::is_unit() const {
  if (!is_monomial()) return false;
  const mpz_class& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

mpz_class LaurentPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

ExponentVector LaurentPoly::min_exponents() const {
  if (terms_.empty()) return ExponentVector(m_, 0);
  ExponentVector out = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m_; ++i) out[i] = std::min(out[i], e[i]);
  return out;
}

ExponentVector LaurentPoly::max_exponents() const {
  if (terms_.empty()) return ExponentVector(m_, 0);
  ExponentVector out = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m_; ++i) out[i] = std::max(out[i], e[i]);
  return out;
}

void LaurentPoly::add_term(const ExponentVector& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  require_same_ambient(*this, q, "add");
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  require_same_ambient(*this, q, "subtract");
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  *this = *this * q;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_ambient(p, q, "multiply");
  LaurentPoly out(p.m_);
  ExponentVector e(p.m_);
  mpz_class c;
  for (const auto& [pe, pc] : p.terms_) {
    for (const auto& [qe, qc] : q.terms_) {
      for (std::size_t i = 0; i < p.m_; ++i) e[i] = checked_add(pe[i], qe[i]);
      c = pc * qc;
      out.add_term(e, c);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& shift) const {
  if (shift.size() != m_) throw InvalidArgument("shift length differs from ambient");
  LaurentPoly out(m_);
  for (const auto& [e, c] : terms_) {
    ExponentVector f(e);
    for (std::size_t i = 0; i < m_; ++i) f[i] = checked_add(f[i], shift[i]);
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(long k) const {
  if (k < 0) {
    if (!is_unit()) {
      throw InexactDivision("negative power of a non-unit Laurent polynomial");
    }
    const auto& [e, c] = *terms_.begin();
    ExponentVector f(m_);
    for (std::size_t i = 0; i < m_; ++i) f[i] = checked_mul(e[i], k);
    mpz_class sign = (c == -1 && (k % 2 != 0)) ? -1 : 1;
    return monomial(m_, std::move(f), sign);
  }
  if (is_monomial()) {
    const auto& [e, c] = *terms_.begin();
    ExponentVector f(m_);
    for (std::size_t i = 0; i < m_; ++i) f[i] = checked_mul(e[i], k);
    mpz_class ck;
    mpz_pow_ui(ck.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    return monomial(m_, std::move(f), ck);
  }
  LaurentPoly result = constant(m_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::uint64_t LaurentPoly::digest() const {
  Fnv1a h;
  h.u64(m_);
  for (const auto& [e, c] : terms_) {
    for (int x : e) h.i64(x);
    h.str(c.get_str(16));
    h.u64(0xffu);
  }
  return h.value();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    mpz_class mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < m_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i + 1);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = mono;
    } else {
      term = mag.get_str() + '*' + mono;
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  require_same_ambient(p, d, "exact_div");
  if (d.is_zero()) throw InexactDivision("division by zero");
  const std::size_t m = p.ambient();
  if (p.is_zero()) return LaurentPoly(m);

  if (d.is_monomial()) {
    const auto& [de, dc] = *d.terms().begin();
    LaurentPoly::TermMap out;
    for (const auto& [e, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) {
        throw InexactDivision("coefficient " + c.get_str() + " not divisible by " + dc.get_str());
      }
      ExponentVector f(e);
      for (std::size_t i = 0; i < m; ++i) f[i] -= de[i];
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
      out.emplace(std::move(f), std::move(q));
    }
    LaurentPoly result(m);
    for (auto& [e, c] : out) result += LaurentPoly::monomial(m, e, c);
    return result;
  }

  // Clear negative exponents: with e = min exponents of p and f = min
  // exponents of d, P = p x^{-e} and D = d x^{-f} are polynomials that no
  // variable divides, so a Laurent quotient exists iff D divides P in Z[x].
  const ExponentVector pmin = p.min_exponents();
  const ExponentVector dmin = d.min_exponents();

  using Rem = std::map<ExponentVector, mpz_class, std::greater<>>;
  Rem rem;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f(e);
    for (std::size_t i = 0; i < m; ++i) f[i] -= pmin[i];
    rem.emplace(grlex_key(f), c);
  }
  std::vector<std::pair<ExponentVector, mpz_class>> divisor;
  divisor.reserve(d.size());
  for (const auto& [e, c] : d.terms()) {
    ExponentVector f(e);
    for (std::size_t i = 0; i < m; ++i) f[i] -= dmin[i];
    divisor.emplace_back(grlex_key(f), c);
  }
  std::sort(divisor.begin(), divisor.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  const ExponentVector& lead_e = divisor.front().first;
  const mpz_class& lead_c = divisor.front().second;

  LaurentPoly quotient(m);
  ExponentVector qkey(m + 1);
  ExponentVector key(m + 1);
  mpz_class qc;
  mpz_class prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    const ExponentVector& te = top->first;
    for (std::size_t i = 0; i <= m; ++i) {
      qkey[i] = te[i] - lead_e[i];
      if (i > 0 && qkey[i] < 0) {
        throw InexactDivision("leading term not divisible while dividing " + p.to_string() +
                              " by " + d.to_string());
      }
    }
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t())) {
      throw InexactDivision("leading coefficient not divisible while dividing " + p.to_string() +
                            " by " + d.to_string());
    }
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
    for (const auto& [de, dc] : divisor) {
      for (std::size_t i = 0; i <= m; ++i) key[i] = de[i] + qkey[i];
      prod = dc * qc;
      auto [it, inserted] = rem.try_emplace(key);
      it->second -= prod;
      if (it->second == 0) rem.erase(it);
    }
    ExponentVector qe(qkey.begin() + 1, qkey.end());
    for (std::size_t i = 0; i < m; ++i) qe[i] += pmin[i] - dmin[i];
    quotient += LaurentPoly::monomial(m, std::move(qe), qc);
  }
  return quotient;
}

LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images) {
  if (images.size() != p.ambient()) {
    throw InvalidArgument("substitute: expected " + std::to_string(p.ambient()) + " images, got " +
                          std::to_string(images.size()));
  }
  if (images.empty()) {
    // Constants only; the target ring is undetermined, keep zero variables.
    return p;
  }
  const std::size_t target = images.front().ambient();
  for (const auto& img : images) {
    if (img.ambient() != target) throw AmbientMismatch("substitute: images in different rings");
    if (img.is_zero()) throw InvalidArgument("substitute: zero image");
  }

  const std::size_t m = p.ambient();
  // Non-unit images with negative exponents go into a common denominator.
  std::vector<int> denom_power(m, 0);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m; ++i)
      if (!images[i].is_unit() && e[i] < 0) denom_power[i] = std::max(denom_power[i], -e[i]);

  std::map<std::pair<std::size_t, long>, LaurentPoly> power_cache;
  auto power = [&](std::size_t i, long k) -> const LaurentPoly& {
    auto key = std::make_pair(i, k);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, images[i].pow(k)).first;
    return it->second;
  };

  LaurentPoly numerator(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < m; ++i) {
      long k = static_cast<long>(e[i]) + denom_power[i];
      if (k != 0) term = term * power(i, k);
    }
    numerator += term;
  }
  LaurentPoly denominator = LaurentPoly::constant(target, 1);
  for (std::size_t i = 0; i < m; ++i)
    if (denom_power[i] > 0) denominator = denominator * power(i, denom_power[i]);
  if (denominator.is_unit() && denominator.coefficient(ExponentVector(target, 0)) == 1) {
    return numerator;
  }
  return exact_div(numerator, denominator);
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view s, std::size_t m) : s_(s), m_(m) {}

  LaurentPoly parse() {
    LaurentPoly out(m_);
    skip_ws();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    out += signed_term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      out += signed_term(op == '-');
    }
    return out;
  }

 private:
  LaurentPoly signed_term(bool negative) {
    mpz_class coeff = 1;
    ExponentVector e(m_, 0);
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= integer();
      } else if (peek() == 'x') {
        ++pos_;
        std::size_t idx = static_cast<std::size_t>(natural());
        if (idx == 0 || idx > m_) fail("variable index out of range");
        long k = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          bool neg = false;
          if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
          }
          k = natural();
          if (neg) k = -k;
        }
        e[idx - 1] = checked_add(e[idx - 1], static_cast<int>(k));
      } else {
        fail("unexpected character");
      }
      any = true;
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    if (negative) coeff = -coeff;
    return LaurentPoly::monomial(m_, std::move(e), coeff);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  long natural() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected a small integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("Laurent polynomial: " + what + " at offset " + std::to_string(pos_) +
                     " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t m_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t m) {
  return LaurentParser(text, m).parse();
}

void Fnv1a::bytes(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h_ ^= p[i];
    h_ *= 1099511628211ULL;
  }
}

void Fnv1a::u64(std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  bytes(buf, 8);
}

void Fnv1a::str(std::string_view s) {
  u64(s.size());
  bytes(s.data(), s.size());
}

std::string hex_digest(std::uint64_t d) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[d & 0xf];
    d >>= 4;
  }
  return out;
}

}  // namespace clusterseed
