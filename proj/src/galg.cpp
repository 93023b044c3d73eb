#include "fga/galg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <omp.h>

#include "fga/linalg.hpp"

namespace fga::galg {

using groups::FiniteGroup;
using groups::Subgroup;

bool Algebra::semisimple() const { return group.order() % static_cast<int>(field->characteristic()) != 0; }

AlgebraPtr make_algebra(groups::FiniteGroup group, ff::SmallFieldPtr field) {
  if (!field) throw AlgebraError("make_algebra: missing field");
  return std::make_shared<const Algebra>(Algebra{std::move(group), std::move(field)});
}

// ---------------------------------------------------------------------------
// kernels

namespace kernels {

void convolve_serial(const Algebra& alg, std::span<const Code> a, std::span<const Code> b, std::span<Code> out) {
  const FiniteGroup& g = alg.group;
  const ff::SmallField& f = *alg.field;
  const int n = g.order();
  if (f.is_prime_field()) {
    const std::uint64_t q = f.characteristic();
    std::vector<std::uint64_t> acc(n, 0);
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      const auto row = g.row(i);
      for (int j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        std::uint64_t& slot = acc[row[j]];
        slot += std::uint64_t{a[i]} * b[j];
        if (slot >= (1ull << 62)) slot %= q;
      }
    }
    for (int x = 0; x < n; ++x) out[x] = static_cast<Code>(acc[x] % q);
    return;
  }
  std::fill(out.begin(), out.end(), 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    const auto row = g.row(i);
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      out[row[j]] = f.add(out[row[j]], f.mul(a[i], b[j]));
    }
  }
}

void convolve_omp(const Algebra& alg, std::span<const Code> a, std::span<const Code> b, std::span<Code> out) {
  const FiniteGroup& g = alg.group;
  const ff::SmallField& f = *alg.field;
  const int n = g.order();
  std::vector<int> nz;
  for (int h = 0; h < n; ++h)
    if (a[h] != 0) nz.push_back(h);
  const bool prime = f.is_prime_field();
  const std::uint64_t q = f.characteristic();
#pragma omp parallel for schedule(static)
  for (int x = 0; x < n; ++x) {
    if (prime) {
      std::uint64_t acc = 0;
      for (int h : nz) acc += std::uint64_t{a[h]} * b[g.mul(g.inv(h), x)];
      out[x] = static_cast<Code>(acc % q);
    } else {
      Code acc = 0;
      for (int h : nz) acc = f.add(acc, f.mul(a[h], b[g.mul(g.inv(h), x)]));
      out[x] = acc;
    }
  }
}

}  // namespace kernels

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw AlgebraError("AlgebraElement: missing algebra");
  coeffs_.assign(alg_->dim(), 0);
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<Code> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (!alg_) throw AlgebraError("AlgebraElement: missing algebra");
  if (static_cast<int>(coeffs_.size()) != alg_->dim()) throw AlgebraError("AlgebraElement: wrong length");
  for (Code c : coeffs_)
    if (c >= alg_->field->size()) throw AlgebraError("AlgebraElement: coefficient outside the field");
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& alg) { return basis(alg, 0, 1); }

AlgebraElement AlgebraElement::basis(const AlgebraPtr& alg, int g, Code c) {
  AlgebraElement e(alg);
  e.coeffs_.at(g) = c;
  return e;
}

void AlgebraElement::require_same(const AlgebraElement& rhs) const {
  if (!alg_ || !rhs.alg_) throw AlgebraError("AlgebraElement: uninitialised operand");
  if (alg_ != rhs.alg_ && !(alg_->group == rhs.alg_->group && alg_->field->field()->same_as(*rhs.alg_->field->field())))
    throw AlgebraError("AlgebraElement: operands from different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  AlgebraElement r = *this;
  r += rhs;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same(rhs);
  const auto& f = *alg_->field;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = f.add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  require_same(rhs);
  AlgebraElement r = *this;
  const auto& f = *alg_->field;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = f.sub(coeffs_[i], rhs.coeffs_[i]);
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  require_same(rhs);
  AlgebraElement r(alg_);
  if (alg_->dim() >= kernels::kParallelThreshold && !omp_in_parallel() && omp_get_max_threads() > 1)
    kernels::convolve_omp(*alg_, coeffs_, rhs.coeffs_, r.coeffs_);
  else
    kernels::convolve_serial(*alg_, coeffs_, rhs.coeffs_, r.coeffs_);
  return r;
}

AlgebraElement AlgebraElement::scale(Code c) const {
  AlgebraElement r = *this;
  const auto& f = *alg_->field;
  for (auto& v : r.coeffs_) v = f.mul(v, c);
  return r;
}

AlgebraElement AlgebraElement::conjugate(int g) const {
  AlgebraElement r(alg_);
  const auto& grp = alg_->group;
  for (int h = 0; h < grp.order(); ++h)
    if (coeffs_[h] != 0) r.coeffs_[grp.conj(h, g)] = coeffs_[h];
  return r;
}

AlgebraElement AlgebraElement::left_mul(int g) const {
  AlgebraElement r(alg_);
  const auto& grp = alg_->group;
  for (int h = 0; h < grp.order(); ++h) r.coeffs_[grp.mul(g, h)] = coeffs_[h];
  return r;
}

AlgebraElement AlgebraElement::right_mul(int g) const {
  AlgebraElement r(alg_);
  const auto& grp = alg_->group;
  for (int h = 0; h < grp.order(); ++h) r.coeffs_[grp.mul(h, g)] = coeffs_[h];
  return r;
}

std::vector<int> AlgebraElement::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Code c) { return c == 0; });
}

// ---------------------------------------------------------------------------
// idempotent building blocks

namespace {

Code inverse_of_order(const Algebra& alg, int order, const char* what) {
  const auto q = static_cast<int>(alg.field->characteristic());
  if (order % q == 0) {
    throw AlgebraError(std::string(what) + ": order " + std::to_string(order) +
                       " is not invertible in characteristic " + std::to_string(q));
  }
  return alg.field->inv(alg.field->from_int(order));
}

}  // namespace

AlgebraElement averaging_idempotent(const AlgebraPtr& alg, const Subgroup& h) {
  const Code c = inverse_of_order(*alg, h.order(), "averaging_idempotent");
  AlgebraElement r(alg);
  for (int x : h.elements()) r.set(x, c);
  return r;
}

AlgebraElement epsilon(const AlgebraPtr& alg, const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& g = alg->group;
  if (!k.is_subset_of(h) || !groups::is_normal_in(g, k, h)) throw AlgebraError("epsilon: K is not normal in H");
  inverse_of_order(*alg, h.order(), "epsilon");
  const AlgebraElement kt = averaging_idempotent(alg, k);
  if (h == k) return kt;
  const auto quo = groups::section_quotient(g, h, k);
  AlgebraElement result = AlgebraElement::one(alg);
  for (const auto& m : groups::minimal_normal_subgroups(quo.quotient)) {
    result = result * (kt - averaging_idempotent(alg, quo.preimage(g, m)));
  }
  return result;
}

TraceTable make_trace_table(const ff::SmallField& base, int k) {
  if (k < 1) throw AlgebraError("make_trace_table: k must be positive");
  const ff::FieldPtr& f = base.field();
  const std::uint32_t q = f->characteristic();
  const std::uint32_t m = f->degree();
  TraceTable t;
  t.k = k;
  t.o = ff::multiplicative_order(f->size() % static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(k));
  const ff::FieldPtr big = ff::make_field(q, static_cast<std::uint32_t>(m * t.o));
  const ff::FieldEmbedding emb = ff::make_embedding(f, big);
  const ff::FieldElement xi = ff::primitive_root_of_unity(big, static_cast<std::uint64_t>(k));
  ff::FieldElement p = big->one();
  t.values.reserve(k);
  for (int i = 0; i < k; ++i) {
    t.values.push_back(base.from_element(emb.section(ff::galois_trace(p, m))));
    p = p * xi;
  }
  return t;
}

AlgebraElement epsilon_C(const AlgebraPtr& alg, const Subgroup& h, const Subgroup& k, int generator, int exponent,
                         const TraceTable& traces) {
  const FiniteGroup& g = alg->group;
  const auto quo = groups::section_quotient(g, h, k);
  const int kk = quo.quotient.order();
  if (traces.k != kk) throw AlgebraError("epsilon_C: trace table built for a different [H:K]");
  if (!h.contains(generator)) throw AlgebraError("epsilon_C: generator outside H");
  const int abar = quo.projection[generator];
  if (quo.quotient.element_order(abar) != kk) throw AlgebraError("epsilon_C: H/K is not generated by the given element");
  if (std::gcd(exponent, kk) != 1 && kk != 1) throw AlgebraError("epsilon_C: exponent is not a unit modulo [H:K]");
  std::vector<int> dlog(kk, 0);
  int x = 0;
  for (int i = 0; i < kk; ++i) {
    dlog[x] = i;
    x = quo.quotient.mul(x, abar);
  }
  const Code inv_h = inverse_of_order(*alg, h.order(), "epsilon_C");
  AlgebraElement r(alg);
  const auto& f = *alg->field;
  for (int y : h.elements()) {
    const long long idx = (static_cast<long long>(exponent) * dlog[quo.projection[y]]) % kk;
    r.set(g.inv(y), f.mul(inv_h, traces.values[static_cast<std::size_t>((idx + kk) % kk)]));
  }
  return r;
}

AlgebraElement sum_of_conjugates(const AlgebraElement& a) {
  std::set<std::vector<Code>> seen;
  AlgebraElement sum(a.context());
  for (int x = 0; x < a.algebra().group.order(); ++x) {
    AlgebraElement c = a.conjugate(x);
    if (seen.emplace(c.coeffs().begin(), c.coeffs().end()).second) sum += c;
  }
  return sum;
}

AlgebraElement e_C(const AlgebraPtr& alg, const Subgroup& h, const Subgroup& k, int generator, int exponent,
                   const TraceTable& traces) {
  return sum_of_conjugates(epsilon_C(alg, h, k, generator, exponent, traces));
}

bool is_idempotent(const AlgebraElement& a) { return a * a == a; }

bool is_central(const AlgebraElement& a) {
  for (int x : a.algebra().group.generators())
    if (a.conjugate(x) != a) return false;
  return true;
}

groups::Subgroup centralizer_in_G(const AlgebraElement& a) {
  std::vector<int> out;
  for (int x = 0; x < a.algebra().group.order(); ++x)
    if (a.conjugate(x) == a) out.push_back(x);
  return Subgroup(a.algebra().group, std::move(out));
}

int ideal_dimension(const AlgebraElement& a, Side side) {
  const Algebra& alg = a.algebra();
  const auto& f = *alg.field;
  const int n = alg.dim();
  linalg::Matrix m(0, static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) m.append_row(a.left_mul(x).coeffs());
  linalg::Echelon e = linalg::row_reduce(f, std::move(m));
  if (side == Side::left) return static_cast<int>(e.rank());
  // close the left ideal under right multiplication by generators
  for (std::size_t at = 0; at < e.rank(); ++at) {
    bool grew = false;
    for (int x : alg.group.generators()) {
      const AlgebraElement row(a.context(), std::vector<Code>(e.rows.row(at).begin(), e.rows.row(at).end()));
      if (linalg::extend(f, e, row.right_mul(x).coeffs())) grew = true;
    }
    if (grew) at = static_cast<std::size_t>(-1);
  }
  return static_cast<int>(e.rank());
}

// ---------------------------------------------------------------------------
// rationals

IntVector int_convolve(const FiniteGroup& g, const IntVector& a, const IntVector& b) {
  const int n = g.order();
  IntVector out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    const auto row = g.row(i);
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      std::int64_t p = 0;
      if (__builtin_mul_overflow(a[i], b[j], &p) || __builtin_add_overflow(out[row[j]], p, &out[row[j]]))
        throw AlgebraError("int_convolve: integer overflow");
    }
  }
  return out;
}

IntVector int_conjugate(const FiniteGroup& g, const IntVector& a, int x) {
  IntVector out(a.size(), 0);
  for (int h = 0; h < g.order(); ++h) out[g.conj(h, x)] = a[h];
  return out;
}

IntVector scaled_rational_epsilon(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  const int n = g.order();
  IntVector sum_k(n, 0);
  for (int x : k.elements()) sum_k[x] = 1;
  if (h == k) return sum_k;
  const auto quo = groups::section_quotient(g, h, k);
  IntVector result(n, 0);
  result[0] = 1;
  for (const auto& mbar : groups::minimal_normal_subgroups(quo.quotient)) {
    // [M:K] (sum K) - (sum M) is a positive multiple of K~ - M~
    const Subgroup m = quo.preimage(g, mbar);
    IntVector factor(n, 0);
    const std::int64_t index = m.order() / k.order();
    for (int x : k.elements()) factor[x] += index;
    for (int x : m.elements()) factor[x] -= 1;
    result = int_convolve(g, result, factor);
  }
  return result;
}

}  // namespace fga::galg
