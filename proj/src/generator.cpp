#include "hlx/generator.hpp"

#include <random>

#include "hlx/catalog.hpp"

namespace hlx {

FactorSet plane_cocycle(Field f, long c) {
  HomLieAlgebra l = HomLieAlgebra::abelian(f, 2);
  HomLieAlgebra k = HomLieAlgebra::abelian(f, 1);
  FactorSet fs = zero_factorset(std::move(l), std::move(k), Subspace::full(f, 2));
  fs.set_t(0, 1, 0, FieldElement(f, c));
  fs.set_t(1, 0, 0, FieldElement(f, -c));
  return fs;
}

namespace {

long unit_in(Field f, uint64_t draw) {
  if (f.is_rational()) return 1 + static_cast<long>(draw % 3);
  return 1 + static_cast<long>(draw % (f.p - 1));
}

// Valid inclusion pairs (ambient, ideal) over the field: identity-twist
// algebras with any ideal, plus the solvable weight line.
std::vector<Pair> inclusion_pool(Field f) {
  std::vector<Pair> pool;
  auto add = [&](const HomLieAlgebra& l, const Subspace& m) {
    Pair p{l, m};
    RelCentralExt e = inclusion_extension(p);
    if (rce_validate(e).ok()) pool.push_back(p);
  };
  for (size_t n = 1; n <= 3; ++n) {
    HomLieAlgebra ab = HomLieAlgebra::abelian(f, n);
    add(ab, Subspace::full(f, n));
    add(ab, Subspace::span(f, n, {unit_vec(f, n, 0)}));
  }
  HomLieAlgebra h3 = heisenberg(f);
  add(h3, Subspace::full(f, 3));
  add(h3, center(h3));
  add(h3, Subspace::span(f, 3, {unit_vec(f, 3, 1), unit_vec(f, 3, 2)}));
  if (f.is_rational() || f.p > 2) {
    HomLieAlgebra s2 = solvable2(f, 2);
    add(s2, Subspace::span(f, 2, {unit_vec(f, 2, 1)}));
  }
  return pool;
}

RelCentralExt base_extension(std::mt19937_64& rng, Field f, const GeneratorBounds& bounds) {
  const uint64_t path = rng() % 3;
  if (path == 0) {
    std::vector<Pair> pool = inclusion_pool(f);
    Pair p = pool[rng() % pool.size()];
    return inclusion_extension(p);
  }
  if (path == 1) {
    // The plane cocycle at a random unit, occasionally the zero map.
    long c = (rng() % 4 == 0) ? 0 : unit_in(f, rng());
    FactorSet fs = plane_cocycle(f, c);
    return extension_from_factorset(fs, Pair{fs.base, fs.support});
  }
  // Random skew factor set on an abelian base (cyclic identity is vacuous),
  // or the bracket-composed map on h3.
  if (rng() % 2 == 0) {
    HomLieAlgebra l = HomLieAlgebra::abelian(f, 3);
    HomLieAlgebra k = HomLieAlgebra::abelian(f, (rng() % 2) + 1);
    FactorSet fs = zero_factorset(l, k, Subspace::full(f, 3));
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j)
        for (size_t c = 0; c < fs.kernel_space.dim(); ++c) {
          FieldElement v(f, static_cast<long>(rng() % (f.is_rational() ? 3 : f.p)));
          fs.set_t(i, j, c, v);
          fs.set_t(j, i, c, -v);
        }
    (void)bounds;
    return extension_from_factorset(fs, Pair{fs.base, fs.support});
  }
  HomLieAlgebra h3 = heisenberg(f);
  HomLieAlgebra k = HomLieAlgebra::abelian(f, 1);
  FactorSet fs = zero_factorset(h3, k, Subspace::full(f, 3));
  // f = mu([x,y]) for a random mu on the derived line: only (e1,e2) survives.
  FieldElement mu(f, static_cast<long>(rng() % (f.is_rational() ? 3 : f.p)));
  fs.set_t(0, 1, 0, mu);
  fs.set_t(1, 0, 0, -mu);
  return extension_from_factorset(fs, Pair{fs.base, fs.support});
}

HomLieAlgebra random_abelian(std::mt19937_64& rng, Field f, size_t max_dim) {
  const size_t n = max_dim == 0 ? 0 : 1 + rng() % max_dim;
  Matrix alpha = Matrix::identity(f, n);
  for (size_t i = 0; i < n; ++i)
    if (rng() % 3 == 0) alpha.at(i, i) = FieldElement(f, unit_in(f, rng()));
  return HomLieAlgebra::abelian_twisted(f, n, std::move(alpha));
}

}  // namespace

RelCentralExt generate_extension(uint64_t seed, const GeneratorBounds& bounds, Field field) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  RelCentralExt e = base_extension(rng, field, bounds);

  const uint64_t shape = rng() % 4;
  if (shape >= 1 && e.domain.dim() < bounds.max_dim_mstar) {
    // Pad with an abelian factor.
    size_t room = bounds.max_dim_mstar - e.domain.dim();
    HomLieAlgebra a = random_abelian(rng, field, std::min<size_t>(room, 2));
    if (a.dim() > 0) e = product_with_abelian(e, a).ext;
  }
  if (shape >= 2) {
    // Quotient by the twist-closure of a random kernel vector.
    Subspace ker = rce_kernel(e);
    if (ker.dim() > 0) {
      Vec coeffs = zero_vec(field, ker.dim());
      for (auto& c : coeffs)
        c = FieldElement(field, static_cast<long>(rng() % (field.is_rational() ? 2 : field.p)));
      Vec v = ker.from_coords(coeffs);
      if (!is_zero_vec(v)) {
        Subspace n = cyclic_closure(v, e.domain.alpha());
        if (ker.contains(n) && is_ideal(e.domain, n).yes) e = quotient_ext(e, n).ext;
      }
    }
  }

  ValidationReport check = rce_validate(e);
  require(check.ok(), Errc::CertificationFailed,
          "generator produced an invalid extension: " + check.summary());
  require(e.domain.dim() <= bounds.max_dim_mstar && e.codomain.dim() <= bounds.max_dim_l,
          Errc::CertificationFailed, "generator exceeded the configured bounds");
  return e;
}

const std::vector<std::pair<std::string, RelCentralExt>>& stem_pool_f2() {
  static const auto pool = [] {
    const Field f2 = prime_field(2);
    std::vector<std::pair<std::string, RelCentralExt>> v;

    v.emplace_back("identity_ab1",
                   inclusion_extension(Pair{HomLieAlgebra::abelian(f2, 1), Subspace::full(f2, 1)}));
    v.emplace_back("identity_ab2",
                   inclusion_extension(Pair{HomLieAlgebra::abelian(f2, 2), Subspace::full(f2, 2)}));
    v.emplace_back("identity_solvable2",
                   inclusion_extension(Pair{solvable2(f2, 1), Subspace::full(f2, 2)}));

    HomLieAlgebra plane = HomLieAlgebra::abelian(f2, 2);
    HomLieAlgebra line = HomLieAlgebra::abelian(f2, 1);
    auto line_into = [&](size_t axis, const char* name) {
      Matrix sigma(f2, 2, 1);
      sigma.at(axis, 0) = FieldElement(f2, 1);
      RelCentralExt e{line, plane, sigma, HomAction::zero(plane, line),
                      Subspace::span(f2, 2, {unit_vec(f2, 2, axis)})};
      v.emplace_back(name, std::move(e));
    };
    line_into(0, "plane_line_x");
    line_into(1, "plane_line_y");

    FactorSet fs = plane_cocycle(f2, 1);
    RelCentralExt cocycle = extension_from_factorset(fs, Pair{fs.base, fs.support});
    v.emplace_back("h3_cocycle", cocycle);
    Matrix p = Matrix(f2, 3, 3);
    p.at(0, 2) = FieldElement(f2, 1);  // relabel (k,x,y) -> (y,x,k)
    p.at(1, 1) = FieldElement(f2, 1);
    p.at(2, 0) = FieldElement(f2, 1);
    v.emplace_back("h3_cocycle_relabeled",
                   conjugate_extension(cocycle, p, Matrix::identity(f2, 2)).ext);

    v.emplace_back("zero_into_plane",
                   RelCentralExt{HomLieAlgebra::abelian(f2, 0), plane, Matrix(f2, 2, 0),
                                 HomAction::zero(plane, HomLieAlgebra::abelian(f2, 0)),
                                 Subspace::zero(f2, 2)});
    return v;
  }();
  return pool;
}

}  // namespace hlx
