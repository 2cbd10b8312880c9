#include "gsw/fields.hpp"

#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gsw/error.hpp"
#include "gsw/polynomial.hpp"

namespace gsw {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // size n + 1, monic
  std::vector<std::uint64_t> pow_p;    // p^i, i = 0..n

  // Log/antilog tables relative to a primitive element; populated for small q.
  bool tables = false;
  std::vector<std::uint32_t> log;   // indexed by code, log[0] unused
  std::vector<std::uint64_t> exp;   // exp[k] = code of g^k, k < q - 1
  std::vector<std::int64_t> zech;   // zech[k] = log(1 + g^k), -1 if zero
  std::uint64_t log_minus_one = 0;
};

}  // namespace detail

namespace {

using detail::FieldData;

constexpr std::uint64_t kTableLimit = 1u << 16;

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 62) / base) throw InvalidInput("field order exceeds 2^62");
    r *= base;
  }
  return r;
}

void decode(const FieldData& d, std::uint64_t code, std::uint32_t* out) {
  for (unsigned i = 0; i < d.n; ++i) {
    out[i] = static_cast<std::uint32_t>(code % d.p);
    code /= d.p;
  }
}

std::uint64_t encode(const FieldData& d, const std::uint32_t* digits) {
  std::uint64_t code = 0;
  for (unsigned i = d.n; i-- > 0;) code = code * d.p + digits[i];
  return code;
}

std::uint64_t raw_add(const FieldData& d, std::uint64_t a, std::uint64_t b) {
  if (d.n == 1) {
    const std::uint64_t s = a + b;
    return s >= d.p ? s - d.p : s;
  }
  std::uint64_t result = 0;
  for (unsigned i = 0; i < d.n; ++i) {
    std::uint64_t s = a % d.p + b % d.p;
    if (s >= d.p) s -= d.p;
    result += s * d.pow_p[i];
    a /= d.p;
    b /= d.p;
  }
  return result;
}

std::uint64_t raw_neg(const FieldData& d, std::uint64_t a) {
  if (d.n == 1) return a == 0 ? 0 : d.p - a;
  std::uint64_t result = 0;
  for (unsigned i = 0; i < d.n; ++i) {
    const std::uint64_t c = a % d.p;
    result += (c == 0 ? 0 : d.p - c) * d.pow_p[i];
    a /= d.p;
  }
  return result;
}

std::uint64_t raw_mul(const FieldData& d, std::uint64_t a, std::uint64_t b) {
  if (d.n == 1) return (a * b) % d.p;
  std::array<std::uint32_t, Fq::kMaxDegree> x{}, y{};
  std::array<std::uint64_t, 2 * Fq::kMaxDegree> prod{};
  decode(d, a, x.data());
  decode(d, b, y.data());
  const unsigned n = d.n;
  for (unsigned i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (unsigned j = 0; j < n; ++j) prod[i + j] += std::uint64_t{x[i]} * y[j];
  }
  for (unsigned k = 2 * n - 1; k-- > n;) {
    const std::uint64_t c = prod[k] % d.p;
    if (!c) continue;
    for (unsigned i = 0; i < n; ++i) {
      if (d.modulus[i]) prod[k - n + i] += c * (d.p - d.modulus[i]);
    }
  }
  std::array<std::uint32_t, Fq::kMaxDegree> out{};
  for (unsigned i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % d.p);
  return encode(d, out.data());
}

std::uint64_t raw_pow(const FieldData& d, std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = raw_mul(d, r, a);
    e >>= 1;
    if (e) a = raw_mul(d, a, a);
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      f.push_back(k);
      while (n % k == 0) n /= k;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

void build_tables(FieldData& d) {
  const std::uint64_t order = d.q - 1;
  const auto factors = prime_factors(order);
  std::uint64_t g = 0;
  for (std::uint64_t cand = 1; cand < d.q; ++cand) {
    bool primitive = true;
    for (auto f : factors) {
      if (raw_pow(d, cand, order / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  d.exp.resize(order);
  d.log.assign(d.q, 0);
  std::uint64_t cur = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    d.exp[k] = cur;
    d.log[cur] = static_cast<std::uint32_t>(k);
    cur = raw_mul(d, cur, g);
  }
  d.zech.resize(order);
  for (std::uint64_t k = 0; k < order; ++k) {
    const std::uint64_t s = raw_add(d, 1, d.exp[k]);
    d.zech[k] = s == 0 ? -1 : static_cast<std::int64_t>(d.log[s]);
  }
  d.log_minus_one = d.p == 2 ? 0 : order / 2;
  d.tables = true;
}

std::shared_ptr<FieldData> make_data(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->n = static_cast<unsigned>(modulus.size() - 1);
  d->q = checked_pow(p, d->n);
  d->modulus = std::move(modulus);
  for (unsigned i = 0; i <= d->n; ++i) d->pow_p.push_back(checked_pow(p, i));
  if (d->n > 1 && d->q <= kTableLimit) build_tables(*d);
  return d;
}

// Rabin's test over F_p.
bool is_irreducible_over_prime(const Polynomial& f) {
  const Fq& F = f.field();
  const std::uint64_t p = F.characteristic();
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n == 0) return false;
  if (n == 1) return true;
  const Polynomial t = Polynomial::variable(F);
  std::vector<Polynomial> frob;  // T^{p^k} mod f, k = 0..n
  frob.push_back(t % f);
  for (unsigned k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, f));
  if (!(frob[n] == t % f)) return false;
  for (auto l : prime_factors(n)) {
    const Polynomial g = gcd(frob[n / l] - t, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned n) {
  const Fq F = Fq::prime(p);
  const std::uint64_t count = checked_pow(p, n);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> coeffs(n + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      coeffs[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    coeffs[n] = 1;
    if (n > 1 && coeffs[0] == 0) continue;
    std::vector<FqElement> pc;
    for (auto v : coeffs) pc.push_back(FqElement{v});
    if (is_irreducible_over_prime(Polynomial(F, pc))) return coeffs;
  }
  throw VerificationError("no irreducible polynomial found");
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const FieldData>>& registry() {
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const FieldData>> r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

Fq Fq::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw InvalidInput("characteristic must be a prime below 2^31");
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[{p, 1}];
  if (!slot) slot = make_data(p, {0, 1});
  return Fq(slot);
}

Fq Fq::extension(std::uint32_t p, unsigned degree) {
  if (degree == 0 || degree > kMaxDegree) throw InvalidInput("extension degree out of range");
  if (degree == 1) return prime(p);
  if (!is_prime(p) || p >= kMaxExtensionPrime) {
    throw InvalidInput("extension fields need a prime characteristic below 2^16");
  }
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find({p, degree});
    if (it != registry().end()) return Fq(it->second);
  }
  checked_pow(p, degree);
  auto modulus = smallest_irreducible(p, degree);
  std::shared_ptr<const FieldData> data = make_data(p, std::move(modulus));
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[{p, degree}];
  if (!slot) slot = std::move(data);
  return Fq(slot);
}

Fq Fq::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidInput("modulus must be monic of degree >= 1");
  if (modulus.size() - 1 > kMaxDegree) throw InvalidInput("extension degree out of range");
  if (modulus.size() > 2 && p >= kMaxExtensionPrime) {
    throw InvalidInput("extension fields need a prime characteristic below 2^16");
  }
  const Fq Fp = prime(p);
  for (auto c : modulus) {
    if (c >= p) throw InvalidInput("modulus coefficient out of range");
  }
  std::vector<FqElement> pc;
  for (auto v : modulus) pc.push_back(FqElement{v});
  if (!is_irreducible_over_prime(Polynomial(Fp, pc))) throw InvalidInput("modulus is not irreducible");
  if (modulus.size() == 2) {
    // Every degree-one modulus gives the same prime field.
    return Fp;
  }
  return Fq(make_data(p, std::move(modulus)));
}

std::uint32_t Fq::characteristic() const { return d_->p; }
unsigned Fq::degree() const { return d_->n; }
std::uint64_t Fq::order() const { return d_->q; }
const std::vector<std::uint32_t>& Fq::modulus() const { return d_->modulus; }
bool Fq::uses_tables() const { return d_->tables; }

FqElement Fq::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(d_->p);
  if (r < 0) r += d_->p;
  return {static_cast<std::uint64_t>(r)};
}

FqElement Fq::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > d_->n) throw InvalidInput("too many coefficient digits for field");
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= d_->p) throw InvalidInput("coefficient digit out of range");
    code = code * d_->p + digits[i];
  }
  return {code};
}

FqElement Fq::element(std::uint64_t code) const {
  if (code >= d_->q) throw InvalidInput("element code out of range");
  return {code};
}

std::vector<std::uint32_t> Fq::digits(FqElement x) const {
  std::vector<std::uint32_t> out(d_->n);
  decode(*d_, x.code, out.data());
  return out;
}

FqElement Fq::generator() const {
  if (d_->n == 1) return {(d_->p - d_->modulus[0]) % d_->p};
  return {d_->p};
}

FqElement Fq::add(FqElement a, FqElement b) const {
  const FieldData& d = *d_;
  if (d.n == 1 || !d.tables) return {raw_add(d, a.code, b.code)};
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint64_t order = d.q - 1;
  const std::uint64_t la = d.log[a.code], lb = d.log[b.code];
  const std::uint64_t k = (lb + order - la) % order;
  const std::int64_t z = d.zech[k];
  if (z < 0) return {0};
  return {d.exp[(la + static_cast<std::uint64_t>(z)) % order]};
}

FqElement Fq::neg(FqElement a) const {
  const FieldData& d = *d_;
  if (d.n == 1 || !d.tables || a.code == 0) return {raw_neg(d, a.code)};
  return {d.exp[(d.log[a.code] + d.log_minus_one) % (d.q - 1)]};
}

FqElement Fq::sub(FqElement a, FqElement b) const { return add(a, neg(b)); }

FqElement Fq::mul(FqElement a, FqElement b) const {
  const FieldData& d = *d_;
  if (a.code == 0 || b.code == 0) return {0};
  if (d.tables) return {d.exp[(std::uint64_t{d.log[a.code]} + d.log[b.code]) % (d.q - 1)]};
  return {raw_mul(d, a.code, b.code)};
}

FqElement Fq::inv(FqElement a) const {
  if (a.code == 0) throw InvalidInput("inverse of zero");
  const FieldData& d = *d_;
  if (d.tables) return {d.exp[(d.q - 1 - d.log[a.code]) % (d.q - 1)]};
  return {raw_pow(d, a.code, d.q - 2)};
}

FqElement Fq::div(FqElement a, FqElement b) const { return mul(a, inv(b)); }

FqElement Fq::pow(FqElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const FieldData& d = *d_;
  if (d.tables) {
    const std::uint64_t order = d.q - 1;
    // order < 2^16 whenever tables exist, so the product cannot overflow.
    const std::uint64_t l = static_cast<std::uint64_t>(d.log[a.code]) * (e % order);
    return {d.exp[l % order]};
  }
  FqElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

FqElement Fq::frobenius(FqElement x, unsigned k) const {
  k %= d_->n;
  for (unsigned i = 0; i < k; ++i) x = pow(x, d_->p);
  return x;
}

FqElement Fq::pth_root(FqElement x) const { return frobenius(x, d_->n - 1); }

std::string Fq::to_string(FqElement x) const {
  if (d_->n == 1) return std::to_string(x.code);
  std::ostringstream os;
  const auto dg = digits(x);
  for (std::size_t i = 0; i < dg.size(); ++i) os << (i ? "," : "") << dg[i];
  return os.str();
}

FqElement Fq::parse(std::string_view text) const {
  std::vector<std::uint32_t> dg;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw InvalidInput("malformed coefficient string '" + std::string(text) + "'");
    }
    dg.push_back(static_cast<std::uint32_t>(from_int(v).code));
    pos = end + 1;
  }
  return from_digits(dg);
}

bool operator==(const Fq& a, const Fq& b) {
  return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
}

}  // namespace gsw
