#include "fga/ff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fga::ff {

// ---------------------------------------------------------------------------
// integer helpers

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for all 64-bit n
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
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

namespace {

// Pollard-Brent with a fixed seed sequence; n composite and odd.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n == 0) throw FieldError("prime_factors: zero has no factorization");
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw FieldError("field size exceeds 64 bits");
    r *= base;
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t k) {
  if (k == 0) throw FieldError("multiplicative_order: modulus must be positive");
  if (k == 1) return 1;
  if (std::gcd(base % k, k) != 1) {
    throw FieldError("multiplicative_order: base " + std::to_string(base) +
                     " is not a unit modulo " + std::to_string(k));
  }
  std::uint64_t x = base % k;
  std::uint64_t o = 1;
  while (x != 1) {
    x = mul_mod(x, base, k);
    ++o;
  }
  return o;
}

// ---------------------------------------------------------------------------
// polynomial helpers over F_q for modulus search and irreducibility

namespace {

using Wide = std::vector<std::uint64_t>;

void trim(Wide& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t q) { return pow_mod(a, q - 2, q); }

// a mod b, b non-zero
Wide poly_rem(Wide a, const Wide& b, std::uint64_t q) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(b.back(), q);
  while (a.size() >= b.size()) {
    const std::uint64_t coef = a.back() * lead_inv % q;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + q - coef * b[i] % q) % q;
    }
    trim(a);
  }
  return a;
}

Wide poly_gcd(Wide a, Wide b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Wide r = poly_rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Wide poly_mulmod(const Wide& a, const Wide& b, const Wide& f, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Wide prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
  }
  return poly_rem(std::move(prod), f, q);
}

Wide poly_powmod(Wide a, std::uint64_t e, const Wide& f, std::uint64_t q) {
  Wide r{1};
  r = poly_rem(r, f, q);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, a, f, q);
    a = poly_mulmod(a, a, f, q);
    e >>= 1;
  }
  return r;
}

Wide widen(const Poly& p) { return Wide(p.begin(), p.end()); }

}  // namespace

bool is_irreducible(const Poly& f, std::uint32_t q) {
  Wide fw = widen(f);
  trim(fw);
  if (fw.size() < 2) return false;
  const std::size_t d = fw.size() - 1;
  if (d == 1) return true;
  if (fw[0] == 0) return false;
  Wide h = poly_rem(Wide{0, 1}, fw, q);
  for (std::size_t i = 1; i <= d / 2; ++i) {
    h = poly_powmod(h, q, fw, q);
    Wide diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + q - 1) % q;
    trim(diff);
    const Wide g = poly_gcd(diff, fw, q);
    if (g.size() > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr owner, Poly coeffs) : owner_(std::move(owner)), coeffs_(std::move(coeffs)) {
  if (!owner_) throw FieldError("FieldElement: missing field");
  if (coeffs_.size() != owner_->degree()) throw FieldError("FieldElement: wrong coefficient count");
  for (auto c : coeffs_) {
    if (c >= owner_->characteristic()) throw FieldError("FieldElement: coefficient out of range");
  }
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!owner_ || !rhs.owner_) throw FieldError("FieldElement: uninitialised operand");
  if (owner_ != rhs.owner_ && !owner_->same_as(*rhs.owner_)) {
    throw FieldError("FieldElement: operands belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {owner_, owner_->add(coeffs_, rhs.coeffs_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {owner_, owner_->sub(coeffs_, rhs.coeffs_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {owner_, owner_->mul(coeffs_, rhs.coeffs_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::operator-() const { return {owner_, owner_->neg(coeffs_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {owner_, owner_->pow(coeffs_, e)}; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("FieldElement: inverse of zero");
  return pow(owner_->size() - 2);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  require_same_field(rhs);
  return coeffs_ == rhs.coeffs_;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// ExtensionField

ExtensionField::ExtensionField(std::uint32_t q, std::uint32_t degree, Poly modulus)
    : q_(q), degree_(degree), modulus_(std::move(modulus)), size_(checked_pow(q, degree)) {}

FieldElement ExtensionField::zero() const { return {shared_from_this(), Poly(degree_, 0)}; }

FieldElement ExtensionField::one() const { return from_int(1); }

FieldElement ExtensionField::from_int(std::int64_t v) const {
  Poly c(degree_, 0);
  const std::int64_t q = q_;
  c[0] = static_cast<std::uint32_t>(((v % q) + q) % q);
  return {shared_from_this(), std::move(c)};
}

FieldElement ExtensionField::from_coeffs(Poly coeffs) const { return {shared_from_this(), std::move(coeffs)}; }

FieldElement ExtensionField::x() const {
  Poly c(degree_, 0);
  if (degree_ == 1) {
    c[0] = (q_ - modulus_[0]) % q_;
  } else {
    c[1] = 1;
  }
  return {shared_from_this(), std::move(c)};
}

std::uint64_t ExtensionField::code(const FieldElement& a) const {
  std::uint64_t c = 0;
  const auto coeffs = a.coeffs();
  for (std::size_t i = coeffs.size(); i-- > 0;) c = c * q_ + coeffs[i];
  return c;
}

FieldElement ExtensionField::from_code(std::uint64_t code) const {
  if (code >= size_) throw FieldError("from_code: code out of range");
  Poly c(degree_, 0);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    c[i] = static_cast<std::uint32_t>(code % q_);
    code /= q_;
  }
  return {shared_from_this(), std::move(c)};
}

FieldElement ExtensionField::nth_canonical(std::uint64_t t) const {
  if (t >= size_) throw FieldError("nth_canonical: index out of range");
  Poly c(degree_, 0);
  for (std::uint32_t i = degree_; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(t % q_);
    t /= q_;
  }
  return {shared_from_this(), std::move(c)};
}

std::uint64_t ExtensionField::canonical_rank(const FieldElement& a) const {
  std::uint64_t t = 0;
  for (auto c : a.coeffs()) t = t * q_ + c;
  return t;
}

Poly ExtensionField::add(const Poly& a, const Poly& b) const {
  Poly r(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    const std::uint32_t s = a[i] + b[i];
    r[i] = s >= q_ ? s - q_ : s;
  }
  return r;
}

Poly ExtensionField::sub(const Poly& a, const Poly& b) const {
  Poly r(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) r[i] = (a[i] + q_ - b[i]) % q_;
  return r;
}

Poly ExtensionField::neg(const Poly& a) const {
  Poly r(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) r[i] = (q_ - a[i]) % q_;
  return r;
}

Poly ExtensionField::mul(const Poly& a, const Poly& b) const {
  const std::uint64_t q = q_;
  const std::size_t d = degree_;
  std::vector<std::uint64_t> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % q;
  }
  // reduce by the monic modulus, top down
  for (std::size_t k = prod.size(); k-- > d;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < d; ++i) {
      prod[k - d + i] = (prod[k - d + i] + (q - c) * modulus_[i]) % q;
    }
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
}

Poly ExtensionField::pow(const Poly& a, std::uint64_t e) const {
  Poly result(degree_, 0);
  result[0] = 1;
  Poly base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

std::uint64_t ExtensionField::element_order(const FieldElement& a) const {
  if (a.is_zero()) throw FieldError("element_order: zero has no multiplicative order");
  std::uint64_t order = size_ - 1;
  for (auto p : order_primes_) {
    while (order % p == 0 && a.pow(order / p).is_one()) order /= p;
  }
  return order;
}

void ExtensionField::choose_generator() {
  order_primes_ = prime_factors(size_ - 1);
  for (std::uint64_t t = 1; t < size_; ++t) {
    FieldElement cand = nth_canonical(t);
    bool full = true;
    for (auto p : order_primes_) {
      if (cand.pow((size_ - 1) / p).is_one()) {
        full = false;
        break;
      }
    }
    if (full) {
      generator_ = std::move(cand);
      return;
    }
  }
  throw FieldError("no multiplicative generator found; modulus not irreducible?");
}

FieldPtr make_field(std::uint32_t q, std::uint32_t d, std::optional<Poly> modulus) {
  if (!is_prime(q)) throw FieldError("make_field: q = " + std::to_string(q) + " is not prime");
  if (q >= (1u << 16)) throw FieldError("make_field: characteristic must be below 2^16");
  if (d < 1) throw FieldError("make_field: degree must be positive");
  checked_pow(q, d);
  Poly f;
  if (modulus) {
    f = *modulus;
    if (f.size() != d + 1 || f.back() != 1) throw FieldError("make_field: modulus must be monic of degree d");
    for (auto c : f) {
      if (c >= q) throw FieldError("make_field: modulus coefficient out of range");
    }
    if (!is_irreducible(f, q)) throw FieldError("make_field: supplied modulus is reducible");
  } else if (d == 1) {
    f = {0, 1};
  } else {
    // odometer over (c0, ..., c_{d-1}) with c0 most significant; c0 = 0 gives x | f
    Poly digits(d, 0);
    digits[0] = 1;
    for (;;) {
      Poly cand = digits;
      cand.push_back(1);
      if (is_irreducible(cand, q)) {
        f = std::move(cand);
        break;
      }
      std::size_t i = d;
      while (i-- > 0) {
        if (++digits[i] < q) break;
        digits[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) throw FieldError("make_field: no irreducible polynomial found");
    }
  }
  auto field = std::shared_ptr<ExtensionField>(new ExtensionField(q, d, std::move(f)));
  field->choose_generator();
  return field;
}

// ---------------------------------------------------------------------------

FieldElement primitive_root_of_unity(const FieldPtr& field, std::uint64_t k) {
  if (k == 0 || (field->size() - 1) % k != 0) {
    throw FieldError("primitive_root_of_unity: " + std::to_string(k) + " does not divide " +
                     std::to_string(field->size() - 1));
  }
  return field->generator().pow((field->size() - 1) / k);
}

FieldElement frobenius(const FieldElement& a, std::uint32_t m) {
  FieldElement r = a;
  const std::uint32_t q = a.field().characteristic();
  for (std::uint32_t i = 0; i < m; ++i) r = r.pow(q);
  return r;
}

FieldElement galois_trace(const FieldElement& a, std::uint32_t m) {
  const std::uint32_t deg = a.field().degree();
  if (m == 0 || deg % m != 0) {
    throw FieldError("galois_trace: " + std::to_string(m) + " does not divide " + std::to_string(deg));
  }
  FieldElement sum = a.field().zero();
  FieldElement cur = a;
  for (std::uint32_t i = 0; i < deg / m; ++i) {
    sum += cur;
    cur = frobenius(cur, m);
  }
  return sum;
}

std::pair<FieldElement, FieldElement> sum_of_two_squares_minus_one(const FieldPtr& field) {
  if (field->characteristic() == 2) throw FieldError("x^2 + y^2 = -1 solver needs odd characteristic");
  const FieldElement minus_one = field->from_int(-1);
  for (std::uint64_t tx = 0; tx < field->size(); ++tx) {
    const FieldElement x = field->nth_canonical(tx);
    const FieldElement target = minus_one - x * x;
    if (target.is_zero()) continue;
    for (std::uint64_t ty = 1; ty < field->size(); ++ty) {
      const FieldElement y = field->nth_canonical(ty);
      if (y * y == target) return {x, y};
    }
  }
  throw FieldError("x^2 + y^2 = -1 has no solution with y != 0");
}

std::optional<FieldElement> sqrt(const FieldElement& a) {
  const ExtensionField& f = a.field();
  if (a.is_zero()) return a;
  const std::uint64_t n1 = f.size() - 1;
  if (f.characteristic() == 2) return a.pow((f.size()) / 2);
  if (!a.pow(n1 / 2).is_one()) return std::nullopt;
  std::uint64_t t = n1;
  int s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  // least non-residue in canonical order
  FieldElement z = f.one();
  for (std::uint64_t i = 1; i < f.size(); ++i) {
    z = f.nth_canonical(i);
    if (!z.pow(n1 / 2).is_one()) break;
  }
  FieldElement c = z.pow(t);
  FieldElement r = a.pow((t + 1) / 2);
  FieldElement u = a.pow(t);
  int m = s;
  while (!u.is_one()) {
    int i = 0;
    FieldElement w = u;
    while (!w.is_one()) {
      w = w * w;
      ++i;
    }
    FieldElement b = c;
    for (int j = 0; j < m - i - 1; ++j) b = b * b;
    r = r * b;
    c = b * b;
    u = u * c;
    m = i;
  }
  return r;
}

std::optional<std::pair<FieldElement, FieldElement>> sum_of_two_squares_fast(const FieldPtr& field) {
  const std::uint32_t q = field->characteristic();
  if (q == 2) return std::nullopt;
  const FieldElement minus_one = field->from_int(-1);
  if (field->size() % 4 == 1) {
    auto y = sqrt(minus_one);
    if (y && !y->is_zero()) return std::make_pair(field->zero(), *y);
    return std::nullopt;
  }
  // q = 3 mod 4 and odd degree: scan the prime field for a with a and -1-a squares
  for (std::uint32_t a = 0; a < q; ++a) {
    const FieldElement fa = field->from_int(a);
    const FieldElement fb = minus_one - fa;
    if (fb.is_zero()) continue;
    auto x = sqrt(fa);
    auto y = sqrt(fb);
    if (x && y) return std::make_pair(*x, *y);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FieldEmbedding

FieldEmbedding::FieldEmbedding(FieldPtr source, FieldPtr target, FieldElement image_of_x)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image_of_x)) {
  if (target_->degree() % source_->degree() != 0) throw FieldError("FieldEmbedding: degree mismatch");
  // image must be a root of the source modulus
  FieldElement acc = target_->zero();
  const Poly& f = source_->modulus();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * image_ + target_->from_int(f[i]);
  if (!acc.is_zero()) throw FieldError("FieldEmbedding: image is not a root of the source modulus");
  FieldElement p = target_->one();
  for (std::uint32_t i = 0; i < source_->degree(); ++i) {
    basis_.emplace_back(p.coeffs().begin(), p.coeffs().end());
    p = p * image_;
  }
}

FieldElement FieldEmbedding::embed(const FieldElement& a) const {
  if (!a.field().same_as(*source_)) throw FieldError("embed: element outside the source field");
  const auto c = a.coeffs();
  // a prime-field constant needs no root of the modulus
  if (source_->degree() == 1) return target_->from_int(c[0]);
  FieldElement r = target_->zero();
  FieldElement p = target_->one();
  for (std::size_t i = 0; i < c.size(); ++i) {
    r += target_->from_int(c[i]) * p;
    p = p * image_;
  }
  return r;
}

FieldElement FieldEmbedding::section(const FieldElement& b) const {
  if (!b.field().same_as(*target_)) throw FieldError("section: element outside the target field");
  const std::uint64_t q = target_->characteristic();
  const std::size_t m = source_->degree();
  const std::size_t D = target_->degree();
  // rows: D equations, columns: m unknowns + rhs
  std::vector<std::vector<std::uint64_t>> a(D, std::vector<std::uint64_t>(m + 1, 0));
  for (std::size_t r = 0; r < D; ++r) {
    for (std::size_t j = 0; j < m; ++j) a[r][j] = basis_[j][r];
    a[r][m] = b.coeffs()[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < m && row < D; ++col) {
    std::size_t piv = row;
    while (piv < D && a[piv][col] == 0) ++piv;
    if (piv == D) continue;
    std::swap(a[piv], a[row]);
    const std::uint64_t inv = inv_mod_prime(a[row][col], q);
    for (auto& v : a[row]) v = v * inv % q;
    for (std::size_t r = 0; r < D; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col];
      for (std::size_t j = 0; j <= m; ++j) a[r][j] = (a[r][j] + q * q - f * a[row][j]) % q;
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < D; ++r) {
    if (a[r][m] != 0) throw FieldError("section: element is not in the image of the embedding");
  }
  Poly c(m, 0);
  for (std::size_t r = 0; r < row; ++r) c[pivot_col[r]] = static_cast<std::uint32_t>(a[r][m]);
  return source_->from_coeffs(std::move(c));
}

FieldEmbedding make_embedding(const FieldPtr& source, const FieldPtr& target) {
  if (source->characteristic() != target->characteristic()) throw FieldError("make_embedding: characteristic mismatch");
  if (target->degree() % source->degree() != 0) throw FieldError("make_embedding: degree does not divide");
  const Poly& f = source->modulus();
  auto eval = [&](const FieldElement& r) {
    FieldElement acc = target->zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * r + target->from_int(f[i]);
    return acc;
  };
  std::optional<FieldElement> best;
  auto consider = [&](const FieldElement& r) {
    if (!eval(r).is_zero()) return;
    if (!best || target->canonical_rank(r) < target->canonical_rank(*best)) best = r;
  };
  consider(target->zero());
  const std::uint64_t sub_order = source->size() - 1;
  const FieldElement eta = target->generator().pow((target->size() - 1) / sub_order);
  FieldElement p = target->one();
  for (std::uint64_t s = 0; s < sub_order; ++s) {
    consider(p);
    p = p * eta;
  }
  if (!best) throw FieldError("make_embedding: source modulus has no root in target");
  return FieldEmbedding(source, target, *best);
}

// ---------------------------------------------------------------------------
// SmallField

SmallField::SmallField(FieldPtr field) : field_(std::move(field)) {
  if (field_->size() > kMaxSize) throw FieldError("SmallField: field larger than 2^16 elements");
  q_ = field_->characteristic();
  degree_ = field_->degree();
  size_ = static_cast<std::uint32_t>(field_->size());
  exp_.assign(size_ == 1 ? 1 : size_ - 1, 0);
  log_.assign(size_, 0);
  FieldElement p = field_->one();
  for (std::uint32_t i = 0; i + 1 < size_; ++i) {
    const auto c = static_cast<std::uint32_t>(field_->code(p));
    exp_[i] = c;
    log_[c] = i;
    p = p * field_->generator();
  }
  neg_table_.resize(size_);
  for (std::uint32_t c = 0; c < size_; ++c) {
    std::uint32_t r = 0, mult = 1, v = c;
    for (std::uint32_t i = 0; i < degree_; ++i) {
      r += ((q_ - v % q_) % q_) * mult;
      v /= q_;
      mult *= q_;
    }
    neg_table_[c] = r;
  }
  if (degree_ > 1 && size_ <= 256) {
    add_table_.resize(std::size_t{size_} * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      for (std::uint32_t b = 0; b < size_; ++b) add_table_[a * size_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
    }
  }
}

SmallField::Code SmallField::add_digits(Code a, Code b) const {
  Code r = 0, mult = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    r += ((a % q_ + b % q_) % q_) * mult;
    a /= q_;
    b /= q_;
    mult *= q_;
  }
  return r;
}

SmallField::Code SmallField::from_int(std::int64_t v) const {
  const std::int64_t q = q_;
  return static_cast<Code>(((v % q) + q) % q);
}

SmallField::Code SmallField::inv(Code a) const {
  if (a == 0) throw FieldError("SmallField: inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : size_ - 1 - l];
}

SmallField::Code SmallField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (std::uint64_t{log_[a]} * (e % (size_ - 1))) % (size_ - 1);
  return exp_[l];
}

SmallField::Code SmallField::from_element(const FieldElement& a) const {
  if (!a.field().same_as(*field_)) throw FieldError("SmallField: element from a different field");
  return static_cast<Code>(field_->code(a));
}

std::vector<std::uint32_t> SmallField::digits(Code c) const {
  std::vector<std::uint32_t> d(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    d[i] = c % q_;
    c /= q_;
  }
  return d;
}

SmallField::Code SmallField::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != degree_) throw FieldError("SmallField: wrong digit count");
  Code c = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= q_) throw FieldError("SmallField: digit out of range");
    c = c * q_ + digits[i];
  }
  return c;
}

SmallFieldPtr make_small_field(FieldPtr field) { return std::make_shared<const SmallField>(std::move(field)); }

}  // namespace fga::ff
