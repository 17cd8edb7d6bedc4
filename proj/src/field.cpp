#include "rigid/field.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>

namespace rigid {

namespace {

struct ModulusEntry {
  unsigned q;
  std::vector<Elem> coeffs;  // low degree first, monic
};

// Fixed irreducible polynomials; changing any of these changes the element
// encoding of every file written by this library.
const std::vector<ModulusEntry>& modulus_table() {
  static const std::vector<ModulusEntry> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 0, 0, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
      {256, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {9, {1, 0, 1}},
      {27, {1, 2, 0, 1}},
      {81, {2, 1, 0, 0, 1}},
      {243, {1, 2, 0, 0, 0, 1}},
      {25, {2, 0, 1}},
      {125, {1, 1, 0, 1}},
      {49, {1, 0, 1}},
      {121, {1, 0, 1}},
      {169, {2, 0, 1}},
  };
  return table;
}

std::vector<unsigned> digits(unsigned v, unsigned p, unsigned k) {
  std::vector<unsigned> out(k);
  for (unsigned i = 0; i < k; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Product of two residues modulo the monic modulus, coefficients in F_p.
unsigned poly_mulmod(unsigned a, unsigned b, unsigned p, unsigned k,
                     const std::vector<Elem>& modulus) {
  const auto da = digits(a, p, k);
  const auto db = digits(b, p, k);
  std::vector<unsigned> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (unsigned deg = 2 * k - 1; deg >= k; --deg) {
    const unsigned c = prod[deg];
    if (c == 0) continue;
    // x^deg = x^(deg-k) * x^k and x^k = -(modulus lower terms)
    for (unsigned i = 0; i <= k; ++i)
      prod[deg - k + i] = (prod[deg - k + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(k);
  return undigits(prod, p);
}

}  // namespace

std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) {
  if (q < 2) throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
  return {p, k};
}

bool is_prime_power(unsigned q) {
  try {
    prime_power_decomposition(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<unsigned> prime_powers_up_to(unsigned limit) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= limit; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

std::shared_ptr<const Field::Tables> Field::build(unsigned q) {
  const auto [p, k] = prime_power_decomposition(q);
  if (q > kMaxFieldOrder)
    throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q) + " exceeds 256");
  auto t = std::make_shared<Tables>();
  t->q = q;
  t->p = p;
  t->k = k;
  if (k > 1) {
    for (const auto& e : modulus_table())
      if (e.q == q) t->modulus = e.coeffs;
  }
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const auto da = digits(a, p, k);
    std::vector<unsigned> dn(k);
    for (unsigned i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    t->neg[a] = static_cast<Elem>(undigits(dn, p));
    for (unsigned b = 0; b < q; ++b) {
      const auto db = digits(b, p, k);
      std::vector<unsigned> ds(k);
      for (unsigned i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      t->add[a * q + b] = static_cast<Elem>(undigits(ds, p));
      t->mul[a * q + b] = static_cast<Elem>(k == 1 ? (a * b) % p : poly_mulmod(a, b, p, k, t->modulus));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<Elem>(b);
  return t;
}

Field Field::make(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const Tables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build(q)).first;
  return Field(it->second);
}

Elem Field::inv(Elem a) const {
  if (a == 0 || a >= q()) throw Error(ErrorCode::DivideByZero, "inverse of zero");
  return t_->inv[a];
}

Elem Field::pow(Elem a, unsigned e) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::from_integer(long long v) const noexcept {
  const long long pp = p();
  return static_cast<Elem>(((v % pp) + pp) % pp);
}

bool check_field_axioms(const Field& f) {
  const unsigned q = f.q();
  for (unsigned a = 0; a < q; ++a) {
    const Elem ea = static_cast<Elem>(a);
    if (f.add(ea, 0) != ea || f.mul(ea, 1) != ea || f.mul(ea, 0) != 0) return false;
    if (f.add(ea, f.neg(ea)) != 0) return false;
    if (a != 0 && (f.mul(ea, f.inv(ea)) != 1 || f.inv(f.inv(ea)) != ea)) return false;
    for (unsigned b = 0; b < q; ++b) {
      const Elem eb = static_cast<Elem>(b);
      if (f.add(ea, eb) != f.add(eb, ea) || f.mul(ea, eb) != f.mul(eb, ea)) return false;
      for (unsigned c = 0; c < q; ++c) {
        const Elem ec = static_cast<Elem>(c);
        if (f.add(f.add(ea, eb), ec) != f.add(ea, f.add(eb, ec))) return false;
        if (f.mul(f.mul(ea, eb), ec) != f.mul(ea, f.mul(eb, ec))) return false;
        if (f.mul(ea, f.add(eb, ec)) != f.add(f.mul(ea, eb), f.mul(ea, ec))) return false;
      }
    }
  }
  Elem acc = 0;
  for (unsigned i = 0; i < f.p(); ++i) {
    acc = f.add(acc, 1);
    if (acc == 0 && i + 1 < f.p()) return false;
  }
  return acc == 0;
}

}  // namespace rigid
