#include "gsw/extension.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "gsw/error.hpp"

namespace gsw {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 4096;

struct EmbeddingKey {
  std::uint32_t p;
  std::vector<std::uint32_t> from, to;
  auto operator<=>(const EmbeddingKey&) const = default;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<EmbeddingKey, FqElement>& generator_cache() {
  static std::map<EmbeddingKey, FqElement> c;
  return c;
}

Polynomial lift_prime_poly(const std::vector<std::uint32_t>& coeffs, const Fq& to) {
  std::vector<FqElement> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(FqElement{c});
  return Polynomial(to, std::move(v));
}

// T^{q^k} mod f for k = 1..upto, q the order of f's field.
Polynomial frobenius_power_of_t(const Polynomial& f, const Polynomial& prev) {
  return powmod(prev, f.field().order(), f);
}

void split_linear(const Polynomial& f, std::mt19937_64& rng, std::vector<FqElement>& out) {
  const Fq& F = f.field();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    const Polynomial m = f.monic();
    out.push_back(F.neg(m.coeff(0)));
    return;
  }
  const std::uint64_t q = F.order();
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  for (;;) {
    Polynomial candidate(F);
    const Polynomial shift(F, {F.element(dist(rng)), F.one()});
    if (F.characteristic() == 2) {
      // Trace map Tr(delta*T) = sum_{i < n} (delta*T)^{2^i} over F_{2^n}.
      const Polynomial base = Polynomial(F, {F.zero(), F.element(std::max<std::uint64_t>(1, dist(rng)))}) % f;
      Polynomial term = base, acc = base;
      for (unsigned i = 1; i < F.degree(); ++i) {
        term = (term * term) % f;
        acc = acc + term;
      }
      candidate = acc;
    } else {
      candidate = powmod(shift, (q - 1) / 2, f) - Polynomial::constant(F, F.one());
    }
    const Polynomial g = gcd(candidate, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_linear(g, rng, out);
      split_linear(divmod(f, g).first, rng, out);
      return;
    }
  }
}

}  // namespace

Embedding::Embedding(const Fq& from, const Fq& to) : from_(from), to_(to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0) {
    throw InvalidInput("no embedding between fields of these degrees");
  }
  FqElement gen_image = to.zero();
  if (from == to) {
    gen_image = to.generator();
  } else if (from.degree() == 1) {
    gen_image = to.zero();
  } else {
    EmbeddingKey key{from.characteristic(), from.modulus(), to.modulus()};
    std::unique_lock lock(cache_mutex());
    auto it = generator_cache().find(key);
    if (it != generator_cache().end()) {
      gen_image = it->second;
    } else {
      lock.unlock();
      const auto roots = roots_in_field(lift_prime_poly(from.modulus(), to));
      if (roots.empty()) throw VerificationError("source modulus has no root in target field");
      gen_image = roots.front().root;
      lock.lock();
      generator_cache().emplace(key, gen_image);
    }
  }
  basis_image_.push_back(to.one());
  for (unsigned i = 1; i < from.degree(); ++i) basis_image_.push_back(to.mul(basis_image_.back(), gen_image));
}

FqElement Embedding::operator()(FqElement x) const {
  if (from_ == to_) return x;
  const auto dg = from_.digits(x);
  FqElement acc = to_.zero();
  for (std::size_t i = 0; i < dg.size(); ++i) {
    if (dg[i]) acc = to_.add(acc, to_.mul(to_.from_int(dg[i]), basis_image_[i]));
  }
  return acc;
}

Polynomial Embedding::operator()(const Polynomial& f) const {
  std::vector<FqElement> v;
  v.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) v.push_back((*this)(c));
  return Polynomial(to_, std::move(v));
}

FqElement embed(FqElement x, const Fq& from, const Fq& to) { return Embedding(from, to)(x); }

Fq compositum(const Fq& a, const Fq& b) {
  if (a.characteristic() != b.characteristic()) throw InvalidInput("fields of different characteristic");
  if (a.degree() % b.degree() == 0) return a;
  if (b.degree() % a.degree() == 0) return b;
  return Fq::extension(a.characteristic(), std::lcm(a.degree(), b.degree()));
}

std::vector<FqElement> distinct_roots_exhaustive(const Polynomial& f) {
  const Fq& F = f.field();
  std::vector<FqElement> roots;
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    if (F.is_zero(f.eval(FqElement{c}))) roots.push_back(FqElement{c});
  }
  return roots;
}

std::vector<FqElement> distinct_roots_by_splitting(const Polynomial& f) {
  const Fq& F = f.field();
  if (f.degree() <= 0) return {};
  const Polynomial t = Polynomial::variable(F);
  const Polynomial tq = powmod(t, F.order(), f);
  Polynomial linear = gcd(tq - t, f);
  std::vector<FqElement> roots;
  std::mt19937_64 rng(0x5eed);
  split_linear(linear, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<RootMultiplicity> roots_in_field(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  const Fq& F = f.field();
  const auto distinct =
      F.order() <= kExhaustiveLimit ? distinct_roots_exhaustive(f) : distinct_roots_by_splitting(f);
  std::vector<RootMultiplicity> out;
  for (auto r : distinct) {
    const Polynomial lin(F, {F.neg(r), F.one()});
    Polynomial rest = f;
    unsigned mult = 0;
    for (;;) {
      auto [quo, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      ++mult;
      rest = std::move(quo);
    }
    out.push_back({r, mult});
  }
  return out;
}

unsigned splitting_degree(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("splitting degree of the zero polynomial");
  const Fq& F = f.field();
  Polynomial rest = f.monic();
  const Polynomial t = Polynomial::variable(F);
  unsigned k = 1;
  Polynomial tpow = t;
  for (unsigned i = 1; rest.degree() > 0; ++i) {
    tpow = frobenius_power_of_t(rest, tpow % rest);
    const Polynomial g = gcd(tpow - t, rest);
    if (g.degree() > 0) {
      k = std::lcm(k, i);
      // Strip every factor of degree dividing i, with multiplicity.
      Polynomial common = g;
      while (common.degree() > 0) {
        rest = divmod(rest, common).first;
        common = gcd(rest, common);
      }
    }
  }
  return k;
}

SplitResult roots_in_splitting_field(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  const Fq& F = f.field();
  const unsigned k = splitting_degree(f);
  const Fq target = k == 1 ? F : Fq::extension(F.characteristic(), F.degree() * k);
  const Polynomial g = Embedding(F, target)(f);
  SplitResult result{target, roots_in_field(g)};
  unsigned total = 0;
  for (const auto& r : result.roots) total += r.multiplicity;
  if (total != static_cast<unsigned>(f.degree())) {
    throw VerificationError("polynomial did not split in the computed extension");
  }
  return result;
}

ArtinSchreierRoot artin_schreier_root(const Fq& field, FqElement c) {
  const std::uint32_t p = field.characteristic();
  std::vector<FqElement> coeffs(p + 1, field.zero());
  coeffs[0] = field.neg(c);
  coeffs[1] = field.neg(field.one());
  coeffs[p] = field.add(coeffs[p], field.one());
  const Polynomial f(field, std::move(coeffs));
  const auto split = roots_in_splitting_field(f);
  return {split.field, split.roots.front().root};
}

}  // namespace gsw
