#pragma once

// Exact arithmetic in finite fields F_{q^d} = F_q[x]/(f).
//
// Two representations live here:
//  * FieldElement: a coefficient vector owned by an ExtensionField. Used for
//    the large splitting fields F(xi_k) where traces are evaluated.
//  * SmallField codes: an element of a field with at most 2^16 elements is
//    packed as sum c_i q^i and multiplied through log/exp tables. Group
//    algebra coefficients use this form.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fga::ff {

/// Polynomial over F_q, ascending powers.
using Poly = std::vector<std::uint32_t>;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// integer helpers

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
bool is_prime(std::uint64_t n);
/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

/// Least o >= 1 with base^o = 1 (mod k). Throws when gcd(base, k) != 1.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t k);

// ---------------------------------------------------------------------------

class ExtensionField;
using FieldPtr = std::shared_ptr<const ExtensionField>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr owner, Poly coeffs);

  const ExtensionField& field() const { return *owner_; }
  const FieldPtr& owner() const { return owner_; }
  std::span<const std::uint32_t> coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement pow(std::uint64_t e) const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& rhs) const;

  FieldPtr owner_;
  Poly coeffs_;
};

/// F_q[x]/(modulus) with a fixed multiplicative generator.
class ExtensionField : public std::enable_shared_from_this<ExtensionField> {
 public:
  std::uint32_t characteristic() const { return q_; }
  std::uint32_t degree() const { return degree_; }
  const Poly& modulus() const { return modulus_; }
  /// q^degree.
  std::uint64_t size() const { return size_; }
  /// Least element (canonical order) of full multiplicative order.
  const FieldElement& generator() const { return generator_; }
  /// Distinct primes dividing size() - 1.
  const std::vector<std::uint64_t>& order_primes() const { return order_primes_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(Poly coeffs) const;
  /// The residue class of x.
  FieldElement x() const;

  /// Packed form sum c_i q^i.
  std::uint64_t code(const FieldElement& a) const;
  FieldElement from_code(std::uint64_t code) const;

  /// t-th element in canonical order: coefficient sequences (c0, c1, ...)
  /// compared lexicographically, c0 most significant.
  FieldElement nth_canonical(std::uint64_t t) const;
  std::uint64_t canonical_rank(const FieldElement& a) const;

  bool same_as(const ExtensionField& other) const {
    return q_ == other.q_ && modulus_ == other.modulus_;
  }

  std::uint64_t element_order(const FieldElement& a) const;

  // raw polynomial kernels (inputs reduced, length degree())
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly pow(const Poly& a, std::uint64_t e) const;

 private:
  friend FieldPtr make_field(std::uint32_t, std::uint32_t, std::optional<Poly>);
  ExtensionField(std::uint32_t q, std::uint32_t degree, Poly modulus);
  void choose_generator();

  std::uint32_t q_;
  std::uint32_t degree_;
  Poly modulus_;
  std::uint64_t size_;
  std::vector<std::uint64_t> order_primes_;
  FieldElement generator_;
};

/// Builds F_{q^d}. Without a modulus, picks the lexicographically least monic
/// irreducible polynomial of degree d (ascending coefficient sequence).
FieldPtr make_field(std::uint32_t q, std::uint32_t d,
                    std::optional<Poly> modulus = std::nullopt);

/// Ben-Or test: gcd(x^{q^i} - x, f) = 1 for all 1 <= i <= deg/2.
bool is_irreducible(const Poly& f, std::uint32_t q);

/// g^{(|F|-1)/k} for the stored generator g.
FieldElement primitive_root_of_unity(const FieldPtr& field, std::uint64_t k);

/// a -> a^{q^m}.
FieldElement frobenius(const FieldElement& a, std::uint32_t m);

/// sum_{i<o} a^{(q^m)^i} where o = deg/m. Result lies in the subfield of
/// order q^m.
FieldElement galois_trace(const FieldElement& a, std::uint32_t m);

/// Least (x, y) in canonical order with x^2 + y^2 = -1 and y != 0.
std::pair<FieldElement, FieldElement> sum_of_two_squares_minus_one(const FieldPtr& field);

/// Shortcut used when -1 is a square (q = 1 mod 4, or even degree): returns
/// (0, y) with y^2 = -1, located by a deterministic scan for a non-residue.
/// Empty when the shortcut does not apply.
std::optional<std::pair<FieldElement, FieldElement>> sum_of_two_squares_fast(
    const FieldPtr& field);

/// Square root by Tonelli-Shanks in the multiplicative group of the field.
std::optional<FieldElement> sqrt(const FieldElement& a);

/// A ring embedding source -> target sending x to a root of source.modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr source, FieldPtr target, FieldElement image_of_x);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  const FieldElement& image_of_generator() const { return image_; }

  FieldElement embed(const FieldElement& a) const;
  /// Inverse of embed on its image. Throws when b is outside the image.
  FieldElement section(const FieldElement& b) const;

 private:
  FieldPtr source_;
  FieldPtr target_;
  FieldElement image_;
  // powers image^i as rows, used by section()
  std::vector<Poly> basis_;
};

/// Embedding that sends x to the canonically least root of source.modulus in
/// target. Requires deg(source) | deg(target).
FieldEmbedding make_embedding(const FieldPtr& source, const FieldPtr& target);

// ---------------------------------------------------------------------------

/// Table-driven arithmetic on packed codes for fields of size <= 2^16.
class SmallField {
 public:
  using Code = std::uint32_t;
  static constexpr std::uint64_t kMaxSize = 1u << 16;

  explicit SmallField(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  std::uint32_t characteristic() const { return q_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t size() const { return size_; }
  bool is_prime_field() const { return degree_ == 1; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code from_int(std::int64_t v) const;

  Code add(Code a, Code b) const {
    if (degree_ == 1) {
      const Code s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return add_digits(a, b);
  }
  Code neg(Code a) const { return neg_table_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  /// Throws on zero.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;

  FieldElement to_element(Code c) const { return field_->from_code(c); }
  Code from_element(const FieldElement& a) const;
  /// Coefficients c_0..c_{d-1}.
  std::vector<std::uint32_t> digits(Code c) const;
  Code from_digits(std::span<const std::uint32_t> digits) const;

 private:
  Code add_digits(Code a, Code b) const;

  FieldPtr field_;
  std::uint32_t q_;
  std::uint32_t degree_;
  std::uint32_t size_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Code> neg_table_;
  std::vector<std::uint16_t> add_table_;
};

using SmallFieldPtr = std::shared_ptr<const SmallField>;
SmallFieldPtr make_small_field(FieldPtr field);

}  // namespace fga::ff
