#include "fga/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fga/linalg.hpp"

namespace fga::verify {

using galg::Code;

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back(Check{std::move(name), ok, std::move(detail)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back(Check{prefix + c.name, c.passed, c.detail});
}

std::string Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.detail.empty() ? c.name : c.name + ": " + c.detail;
  return {};
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  std::vector<Code> out(a.algebra().dim());
  galg::kernels::convolve_serial(a.algebra(), a.coeffs(), b.coeffs(), out);
  return AlgebraElement(a.context(), std::move(out));
}

namespace {

bool commutes_with_generators(const AlgebraElement& a) {
  for (int x : a.algebra().group.generators())
    if (a.left_mul(x) != a.right_mul(x)) return false;
  return true;
}

linalg::Echelon left_span(const AlgebraElement& a) {
  const int n = a.algebra().dim();
  linalg::Matrix m(0, static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) m.append_row(a.left_mul(g).coeffs());
  return linalg::row_reduce(*a.algebra().field, std::move(m));
}

AlgebraElement row_element(const AlgebraElement& like, std::span<const Code> row) {
  return AlgebraElement(like.context(), std::vector<Code>(row.begin(), row.end()));
}

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

Shape measure_shape(const AlgebraElement& e) {
  const auto& alg = e.algebra();
  const auto& f = *alg.field;
  const auto basis = left_span(e);
  Shape s;
  s.D = static_cast<int>(basis.rank());
  const auto& gens = alg.group.generators();
  const std::size_t n = static_cast<std::size_t>(alg.dim());
  linalg::Matrix comm(0, n * std::max<std::size_t>(gens.size(), 1));
  std::vector<Code> row(comm.cols(), 0);
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    const AlgebraElement v = row_element(e, basis.rows.row(i));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const AlgebraElement c = v.right_mul(gens[j]) - v.left_mul(gens[j]);
      std::copy(c.coeffs().begin(), c.coeffs().end(), row.begin() + static_cast<std::ptrdiff_t>(j * n));
    }
    comm.append_row(row);
  }
  s.Z = s.D - static_cast<int>(linalg::rank(f, comm));
  if (s.Z <= 0 || s.D % s.Z != 0) return s;
  s.d = s.Z;
  const int sq = s.D / s.Z;
  const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sq))));
  s.N = root;
  s.exact = root * root == sq;
  return s;
}

Report check_central_decomposition(const galg::AlgebraPtr& alg, const std::vector<AlgebraElement>& es) {
  Report r;
  AlgebraElement sum(alg);
  int dims = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& e = es[i];
    r.add("component " + idx(i) + " non-zero", !e.is_zero());
    r.add("component " + idx(i) + " idempotent", multiply(e, e) == e);
    r.add("component " + idx(i) + " central", commutes_with_generators(e));
    dims += static_cast<int>(left_span(e).rank());
    sum += e;
  }
  bool orthogonal = true;
  std::string offending;
  for (std::size_t i = 0; i < es.size() && orthogonal; ++i) {
    for (std::size_t j = 0; j < es.size() && orthogonal; ++j) {
      if (i != j && !multiply(es[i], es[j]).is_zero()) {
        orthogonal = false;
        offending = "components " + idx(i) + " and " + idx(j);
      }
    }
  }
  r.add("pairwise orthogonal", orthogonal, offending);
  r.add("sum is 1", sum == AlgebraElement::one(alg));
  r.add("dimensions sum to |G|", dims == alg->dim(),
        std::to_string(dims) + " vs " + std::to_string(alg->dim()));
  return r;
}

Report check_idempotent_set(const AlgebraElement& e_C, const std::vector<AlgebraElement>& idempotents,
                            const Shape& shape) {
  Report r;
  r.add("set size equals matrix size", static_cast<int>(idempotents.size()) == shape.N,
        std::to_string(idempotents.size()) + " vs " + std::to_string(shape.N));
  AlgebraElement sum(e_C.context());
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    const auto& b = idempotents[i];
    r.add("idempotent " + idx(i) + " non-zero", !b.is_zero());
    r.add("idempotent " + idx(i) + " idempotent", multiply(b, b) == b);
    r.add("idempotent " + idx(i) + " inside the component", multiply(b, e_C) == b);
    sum += b;
  }
  bool orthogonal = true;
  std::string offending;
  for (std::size_t i = 0; i < idempotents.size() && orthogonal; ++i) {
    for (std::size_t j = 0; j < idempotents.size() && orthogonal; ++j) {
      if (i != j && !multiply(idempotents[i], idempotents[j]).is_zero()) {
        orthogonal = false;
        offending = idx(i) + ", " + idx(j);
      }
    }
  }
  r.add("pairwise orthogonal", orthogonal, offending);
  r.add("sum equals e_C", sum == e_C);
  return r;
}

Report check_matrix_units(const AlgebraElement& e_C, const std::vector<AlgebraElement>& units, std::size_t n,
                          std::size_t exhaustive_limit, int samples) {
  Report r;
  if (units.size() != n * n) {
    r.add("unit count", false, std::to_string(units.size()) + " vs " + std::to_string(n * n));
    return r;
  }
  AlgebraElement diag(e_C.context());
  for (std::size_t i = 0; i < n; ++i) diag += units[i * n + i];
  r.add("diagonal sums to e_C", diag == e_C);

  const AlgebraElement zero(e_C.context());
  auto check = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const AlgebraElement lhs = multiply(units[a * n + b], units[c * n + d]);
    const AlgebraElement& rhs = b == c ? units[a * n + d] : zero;
    return lhs == rhs;
  };
  bool ok = true;
  std::string offending;
  if (n <= exhaustive_limit) {
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t c = 0; c < n && ok; ++c)
          for (std::size_t d = 0; d < n && ok; ++d)
            if (!check(a, b, c, d)) {
              ok = false;
              offending = "(" + idx(a) + "," + idx(b) + ")(" + idx(c) + "," + idx(d) + ")";
            }
    r.add("relations E_ab E_cd = delta_bc E_ad (all quadruples)", ok, offending);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < samples && ok; ++s) {
      const std::size_t a = pick(rng), b = pick(rng), d = pick(rng);
      // half the samples on the non-vanishing diagonal b = c
      const std::size_t c = (s % 2 == 0) ? b : pick(rng);
      if (!check(a, b, c, d)) {
        ok = false;
        offending = "(" + idx(a) + "," + idx(b) + ")(" + idx(c) + "," + idx(d) + ")";
      }
    }
    r.add("relations E_ab E_cd = delta_bc E_ad (" + std::to_string(samples) + " samples)", ok, offending);
  }
  return r;
}

CornerRing corner_ring(const AlgebraElement& f, std::uint64_t exhaustive_limit) {
  const auto& alg = f.algebra();
  const auto& field = *alg.field;
  const int n = alg.dim();
  linalg::Matrix m(0, static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) m.append_row(multiply(f.right_mul(g), f).coeffs());
  const auto basis = linalg::row_reduce(field, std::move(m));
  CornerRing out;
  out.dimension = static_cast<int>(basis.rank());
  std::vector<AlgebraElement> b;
  for (std::size_t i = 0; i < basis.rank(); ++i) b.push_back(row_element(f, basis.rows.row(i)));

  out.commutative = true;
  for (std::size_t i = 0; i < b.size() && out.commutative; ++i)
    for (std::size_t j = i + 1; j < b.size() && out.commutative; ++j)
      out.commutative = multiply(b[i], b[j]) == multiply(b[j], b[i]);

  // x is a unit iff y -> x y is injective on the corner
  auto invertible = [&](const std::vector<Code>& coords) {
    AlgebraElement x(f.context());
    for (std::size_t i = 0; i < b.size(); ++i)
      if (coords[i] != 0) x += b[i].scale(coords[i]);
    linalg::Matrix mm(0, static_cast<std::size_t>(n));
    for (const auto& y : b) mm.append_row(multiply(x, y).coeffs());
    return linalg::rank(field, mm) == b.size();
  };

  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < b.size() && small; ++i) {
    total *= field.size();
    small = total <= exhaustive_limit;
  }
  out.exhaustive = small;
  out.units_ok = true;
  std::vector<Code> coords(b.size(), 0);
  if (small) {
    for (std::uint64_t t = 1; t < total && out.units_ok; ++t) {
      std::uint64_t v = t;
      for (auto& c : coords) {
        c = static_cast<Code>(v % field.size());
        v /= field.size();
      }
      out.units_ok = invertible(coords);
    }
  } else {
    std::mt19937 rng(0xc0de);
    std::uniform_int_distribution<Code> pick(0, field.size() - 1);
    for (int s = 0; s < 64 && out.units_ok; ++s) {
      bool nonzero = false;
      for (auto& c : coords) {
        c = pick(rng);
        nonzero = nonzero || c != 0;
      }
      if (nonzero) out.units_ok = invertible(coords);
    }
  }
  return out;
}

Report check_corner_rings(const std::vector<AlgebraElement>& idempotents, const Shape& shape) {
  Report r;
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    const CornerRing c = corner_ring(idempotents[i]);
    const std::string p = "corner " + idx(i) + " ";
    r.add(p + "dimension equals d", c.dimension == shape.d,
          std::to_string(c.dimension) + " vs " + std::to_string(shape.d));
    r.add(p + "commutative", c.commutative);
    r.add(p + (c.exhaustive ? "non-zero elements invertible (exhaustive)" : "non-zero elements invertible (sampled)"),
          c.units_ok);
  }
  return r;
}

Report check_epsilon_projection(const galg::AlgebraPtr& alg, const shoda::StrongShodaPair& pair,
                                const std::vector<shoda::CyclotomicClass>& classes, const galg::TraceTable& traces) {
  Report r;
  const auto& g = alg->group;
  const AlgebraElement eps = galg::epsilon(alg, pair.H, pair.K);
  std::vector<AlgebraElement> eps_c;
  AlgebraElement sum(alg);
  for (const auto& c : classes) {
    eps_c.push_back(shoda::epsilon_C(alg, pair, c, traces));
    sum += eps_c.back();
  }
  r.add("epsilon equals the sum of epsilon_C", eps == sum);

  // orbits of N_G(K) on the classes
  const int k = pair.index();
  std::vector<int> orbit(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) orbit[i] = static_cast<int>(i);
  auto find = [&](int i) {
    while (orbit[i] != i) i = orbit[i] = orbit[orbit[i]];
    return i;
  };
  if (k > 1) {
    for (int x : pair.normalizer_of_K.elements()) {
      const int s = shoda::conjugation_exponent(g, pair, x);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const int image = static_cast<int>(static_cast<long long>(classes[i].representative()) * s % k);
        for (std::size_t j = 0; j < classes.size(); ++j) {
          if (classes[j].contains(image)) {
            const int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
            orbit[std::max(a, b)] = std::min(a, b);
          }
        }
      }
    }
  }
  AlgebraElement rhs(alg);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) rhs += galg::sum_of_conjugates(eps_c[i]);
  r.add("e equals the sum of e_C over orbit representatives", galg::sum_of_conjugates(eps) == rhs);
  return r;
}

}  // namespace fga::verify
