#include "hlx/factorset.hpp"

namespace hlx {

namespace {

// Projection matrix onto M along the pivot-greedy complement.
Matrix support_projection(const Subspace& support, Field f, size_t n) {
  Subspace comp = complement(support, Subspace::full(f, n));
  Matrix cb = support.basis().transpose().hstack(comp.basis().transpose());
  auto inv = inverse(cb);
  require(inv.has_value(), Errc::CertificationFailed, "support basis did not complete");
  return inv->submatrix(0, 0, support.dim(), n);
}

}  // namespace

void FactorSet::set_t(size_t i, size_t j, size_t k, FieldElement v) {
  require(v.field() == base.field(), Errc::FieldMismatch, "entry over wrong field");
  tensor[(i * base.dim() + j) * kernel_space.dim() + k] = std::move(v);
}

Vec FactorSet::value(size_t i, size_t j) const {
  Vec v = zero_vec(base.field(), kernel_space.dim());
  for (size_t k = 0; k < kernel_space.dim(); ++k) v[k] = t(i, j, k);
  return v;
}

Vec FactorSet::value_vec(const Vec& x, const Vec& y) const {
  require(x.size() == base.dim() && y.size() == base.dim(), Errc::DimensionMismatch,
          "factor set arguments must live in the base algebra");
  Vec v = zero_vec(base.field(), kernel_space.dim());
  for (size_t i = 0; i < base.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < base.dim(); ++j) {
      if (y[j].is_zero()) continue;
      FieldElement xy = x[i] * y[j];
      for (size_t k = 0; k < kernel_space.dim(); ++k) v[k] += xy * t(i, j, k);
    }
  }
  return v;
}

FactorSet zero_factorset(HomLieAlgebra base, HomLieAlgebra kernel_space, Subspace support) {
  const size_t n = base.dim(), k = kernel_space.dim();
  std::vector<FieldElement> tensor(n * n * k, FieldElement(base.field()));
  return {std::move(base), std::move(kernel_space), std::move(support), std::move(tensor)};
}

FactorSet factorset_from_support_tensor(HomLieAlgebra base, HomLieAlgebra kernel_space,
                                        Subspace support,
                                        const std::vector<FieldElement>& fm) {
  const size_t n = base.dim(), m = support.dim(), k = kernel_space.dim();
  require(fm.size() == m * m * k, Errc::DimensionMismatch,
          "support tensor must have dimM^2 * dimK entries");
  Matrix proj = support_projection(support, base.field(), n);
  FactorSet f = zero_factorset(std::move(base), std::move(kernel_space), std::move(support));
  for (size_t i = 0; i < n; ++i) {
    Vec pi = proj.col(i);
    for (size_t j = 0; j < n; ++j) {
      Vec pj = proj.col(j);
      for (size_t a = 0; a < m; ++a) {
        if (pi[a].is_zero()) continue;
        for (size_t b = 0; b < m; ++b) {
          if (pj[b].is_zero()) continue;
          FieldElement w = pi[a] * pj[b];
          for (size_t c = 0; c < k; ++c)
            f.set_t(i, j, c, f.t(i, j, c) + w * fm[(a * m + b) * k + c]);
        }
      }
    }
  }
  return f;
}

ValidationReport factorset_validate(const FactorSet& f) {
  const size_t n = f.base.dim(), k = f.kernel_space.dim();
  ValidationReport r;

  Check shape{"kernel_space", true, ""};
  if (!validate(f.kernel_space).ok())
    shape = {"kernel_space", false, "kernel space fails the algebra axioms"};
  else if (derived(f.kernel_space).dim() != 0)
    shape = {"kernel_space", false, "kernel space is not abelian"};
  r.checks.push_back(shape);

  Check skew{"skew", true, ""};
  for (size_t i = 0; i < n && skew.ok; ++i)
    for (size_t j = i; j < n; ++j) {
      bool bad = (i == j) ? !is_zero_vec(f.value(i, i))
                          : !(f.value(i, j) == neg(f.value(j, i)));
      if (bad) {
        skew.ok = false;
        skew.witness = "(" + basis_name(i) + "," + basis_name(j) + ")";
        break;
      }
    }
  r.checks.push_back(skew);

  Check supp{"support", true, ""};
  {
    Subspace comp = complement(f.support, Subspace::full(f.base.field(), n));
    for (size_t c = 0; c < comp.dim() && supp.ok; ++c) {
      Vec cv = comp.basis_vector(c);
      for (size_t i = 0; i < n; ++i) {
        Vec ei = unit_vec(f.base.field(), n, i);
        if (!is_zero_vec(f.value_vec(cv, ei)) || !is_zero_vec(f.value_vec(ei, cv))) {
          supp.ok = false;
          supp.witness = "complement vector c" + std::to_string(c + 1);
          break;
        }
      }
    }
  }
  r.checks.push_back(supp);

  Check cyc{"cyclic", true, ""};
  for (size_t i = 0; i < n && cyc.ok; ++i)
    for (size_t j = 0; j < n && cyc.ok; ++j)
      for (size_t l = 0; l < n; ++l) {
        Vec s = f.value_vec(f.base.bracket_basis(i, j), f.base.alpha().col(l));
        s = add(s, f.value_vec(f.base.bracket_basis(j, l), f.base.alpha().col(i)));
        s = add(s, f.value_vec(f.base.bracket_basis(l, i), f.base.alpha().col(j)));
        if (!is_zero_vec(s)) {
          cyc.ok = false;
          cyc.witness = "(" + basis_name(i) + "," + basis_name(j) + "," + basis_name(l) + ")";
          break;
        }
      }
  r.checks.push_back(cyc);

  Check eq{"aux_twist_equivariance", true, ""};
  for (size_t i = 0; i < n && eq.ok; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec lhs = f.value_vec(f.base.alpha().col(i), f.base.alpha().col(j));
      Vec rhs = f.kernel_space.alpha().apply(f.value(i, j));
      if (!(lhs == rhs)) {
        eq.ok = false;
        eq.witness = "(" + basis_name(i) + "," + basis_name(j) + ")";
        break;
      }
    }
  r.checks.push_back(eq);
  (void)k;
  return r;
}

RelCentralExt extension_from_factorset(const FactorSet& f, const Pair& pair) {
  require(pair.ambient == f.base, Errc::InvalidFactorSet,
          "pair ambient differs from the factor set base");
  require(pair.ideal == f.support, Errc::InvalidFactorSet,
          "pair ideal differs from the factor set support");
  ValidationReport fr = factorset_validate(f);
  require(fr.ok(), Errc::InvalidFactorSet, "factor set invalid: " + fr.summary());

  const Field fld = f.base.field();
  const size_t n = f.base.dim(), m = f.support.dim(), k = f.kernel_space.dim();
  const Subspace& msub = f.support;

  // Twist of M in support coordinates.
  Matrix alpha_m(fld, m, m);
  for (size_t j = 0; j < m; ++j) {
    auto c = msub.coords_of(f.base.alpha().apply(msub.basis_vector(j)));
    require(c.has_value(), Errc::InvalidFactorSet, "twist does not preserve the support");
    for (size_t i = 0; i < m; ++i) alpha_m.at(i, j) = (*c)[i];
  }

  Matrix alpha_total(fld, k + m, k + m);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) alpha_total.at(i, j) = f.kernel_space.alpha().at(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) alpha_total.at(k + i, k + j) = alpha_m.at(i, j);

  std::vector<FieldElement> tensor((k + m) * (k + m) * (k + m), FieldElement(fld));
  HomLieAlgebra total(fld, k + m, std::move(tensor), std::move(alpha_total));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      Vec kv = f.value_vec(msub.basis_vector(a), msub.basis_vector(b));
      Vec br = f.base.bracket(msub.basis_vector(a), msub.basis_vector(b));
      auto bc = msub.coords_of(br);
      require(bc.has_value(), Errc::InvalidFactorSet, "support is not an ideal");
      for (size_t c = 0; c < k; ++c) total.set_c(k + a, k + b, c, kv[c]);
      for (size_t c = 0; c < m; ++c) total.set_c(k + a, k + b, k + c, (*bc)[c]);
    }

  Matrix sigma = Matrix(fld, n, k).hstack(msub.basis().transpose());

  HomAction act = HomAction::zero(f.base, total);
  for (size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(fld, n, i);
    for (size_t j = 0; j < m; ++j) {
      Vec kv = f.value_vec(ei, msub.basis_vector(j));
      Vec br = f.base.bracket(ei, msub.basis_vector(j));
      auto bc = msub.coords_of(br);
      require(bc.has_value(), Errc::InvalidFactorSet, "support is not an ideal");
      for (size_t c = 0; c < k; ++c) act.set_a(i, k + j, c, kv[c]);
      for (size_t c = 0; c < m; ++c) act.set_a(i, k + j, k + c, (*bc)[c]);
    }
  }

  RelCentralExt ext{std::move(total), f.base, std::move(sigma), std::move(act), msub};
  ValidationReport check = rce_validate(ext);
  require(check.ok(), Errc::InvalidFactorSet,
          "constructed extension fails validation (twisted bases do this): " + check.summary());
  return ext;
}

FactorSetExtraction factorset_from_extension(const RelCentralExt& e) {
  const Field fld = e.domain.field();
  const size_t nm = e.domain.dim();
  Subspace ker = rce_kernel(e);
  auto tsub = invariant_complement(ker, Subspace::full(fld, nm), e.domain.alpha());
  require(tsub.has_value(), Errc::NoInvariantComplement,
          "no twist-invariant transversal of Ker sigma");

  // t_m: the unique preimage of m in T.
  Matrix onto = e.sigma * tsub->basis().transpose();
  auto transversal = [&](const Vec& m_ambient) {
    auto c = solve(onto, m_ambient);
    require(c.has_value(), Errc::CertificationFailed, "transversal solve failed");
    return tsub->from_coords(*c);
  };

  Restriction kernel_alg = restrict_to_subalgebra(e.domain, ker);
  const Subspace& msub = e.target;
  const size_t m = msub.dim(), k = ker.dim();

  std::vector<FieldElement> fm(m * m * k, FieldElement(fld));
  std::vector<Vec> tvecs;
  for (size_t a = 0; a < m; ++a) tvecs.push_back(transversal(msub.basis_vector(a)));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      Vec br = e.codomain.bracket(msub.basis_vector(a), msub.basis_vector(b));
      Vec w = sub(e.domain.bracket(tvecs[a], tvecs[b]), transversal(br));
      auto kc = ker.coords_of(w);
      require(kc.has_value(), Errc::CertificationFailed, "factor set value escaped the kernel");
      for (size_t c = 0; c < k; ++c) fm[(a * m + b) * k + c] = (*kc)[c];
    }

  FactorSet fs =
      factorset_from_support_tensor(e.codomain, kernel_alg.algebra, msub, fm);
  RelCentralExt rec = extension_from_factorset(fs, Pair{e.codomain, msub});

  Matrix beta(fld, nm, k + m);
  for (size_t j = 0; j < k; ++j) {
    Vec kv = ker.basis_vector(j);
    for (size_t i = 0; i < nm; ++i) beta.at(i, j) = kv[i];
  }
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < nm; ++i) beta.at(i, k + j) = tvecs[j][i];

  ExtMorphism iso{rec, e, Matrix::identity(fld, e.codomain.dim()), std::move(beta)};
  MorphismCheck mc = morphism_validate(iso);
  require(mc.yes && mc.cls == MorphClass::iso, Errc::CertificationFailed,
          "reconstruction map failed validation: " + mc.witness);
  return {std::move(fs), std::move(rec), std::move(iso)};
}

TransportedFactorSet transport_factorset(const FactorSet& h, const IsoclinismWitness& w) {
  const RelCentralExt& e1 = w.source;
  const RelCentralExt& e2 = w.dest;
  require(is_stem(e1) && is_stem(e2), Errc::NotStem,
          "factor set transport needs stem extensions");
  YesNo ok = witness_validate(w);
  require(ok.yes, Errc::InvalidWitness, ok.witness);
  require(h.base == e2.codomain && h.support == e2.target, Errc::InvalidWitness,
          "factor set does not belong to the witness destination");
  Subspace ker1 = rce_kernel(e1), ker2 = rce_kernel(e2);
  require(h.kernel_space.dim() == ker2.dim(), Errc::InvalidWitness,
          "factor set kernel space does not match Ker sigma2");

  const Field fld = e1.domain.field();
  Subspace c1 = l_commutator(e1), c2 = l_commutator(e2);
  auto bp_inv = inverse(w.beta_prime);
  require(bp_inv.has_value(), Errc::InvalidWitness, "beta_prime not invertible");

  // h-value (K2 coords) -> ambient M2* -> back through beta_prime -> K1 coords.
  auto pull_value = [&](const Vec& hv) {
    Vec amb2 = ker2.from_coords(hv);
    auto cc2 = c2.coords_of(amb2);
    require(cc2.has_value(), Errc::NotStem, "kernel vector outside the commutator");
    Vec amb1 = c1.from_coords(bp_inv->apply(*cc2));
    auto k1c = ker1.coords_of(amb1);
    require(k1c.has_value(), Errc::InvalidWitness,
            "transported value escaped Ker sigma1 (kernel correspondence fails)");
    return *k1c;
  };

  Restriction k1alg = restrict_to_subalgebra(e1.domain, ker1);
  const Subspace& m1 = e1.target;
  const size_t m = m1.dim(), k = ker1.dim();
  std::vector<FieldElement> gm(m * m * k, FieldElement(fld));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      Vec hv = h.value_vec(w.gamma.apply(m1.basis_vector(a)), w.gamma.apply(m1.basis_vector(b)));
      Vec gv = pull_value(hv);
      for (size_t c = 0; c < k; ++c) gm[(a * m + b) * k + c] = gv[c];
    }
  FactorSet g = factorset_from_support_tensor(e1.codomain, k1alg.algebra, m1, gm);

  RelCentralExt src = extension_from_factorset(g, Pair{e1.codomain, e1.target});
  RelCentralExt dst = extension_from_factorset(h, Pair{e2.codomain, e2.target});

  // theta(x, m) = (beta'(x), gamma m) blockwise on (K x M) coordinates.
  Subspace m2 = e2.target;
  const size_t k2 = h.kernel_space.dim(), mm2 = m2.dim();
  Matrix theta(fld, k2 + mm2, k + m);
  for (size_t j = 0; j < k; ++j) {
    Vec amb1 = ker1.basis_vector(j);
    auto cc1 = c1.coords_of(amb1);
    require(cc1.has_value(), Errc::NotStem, "kernel vector outside the commutator");
    Vec amb2 = c2.from_coords(w.beta_prime.apply(*cc1));
    auto k2c = ker2.coords_of(amb2);
    require(k2c.has_value(), Errc::InvalidWitness, "kernel correspondence fails");
    for (size_t i = 0; i < k2; ++i) theta.at(i, j) = (*k2c)[i];
  }
  for (size_t j = 0; j < m; ++j) {
    auto c = m2.coords_of(w.gamma.apply(m1.basis_vector(j)));
    require(c.has_value(), Errc::InvalidWitness, "gamma does not carry M1 into M2");
    for (size_t i = 0; i < mm2; ++i) theta.at(k2 + i, k + j) = (*c)[i];
  }
  ExtMorphism theta_m{src, dst, w.gamma, std::move(theta)};
  MorphismCheck mc = morphism_validate(theta_m);
  require(mc.yes && mc.cls == MorphClass::iso, Errc::CertificationFailed,
          "transport map failed validation: " + mc.witness);
  return {std::move(g), std::move(src), std::move(dst), std::move(theta_m)};
}

ExtMorphism factorset_iso(const FactorSet& f, const FactorSet& g, const IsoclinismWitness& w) {
  require(f.base.dim() == g.base.dim() &&
              f.kernel_space.dim() + f.support.dim() ==
                  g.kernel_space.dim() + g.support.dim(),
          Errc::DimMismatch, "total spaces have different dimensions");
  const RelCentralExt& ef = w.source;
  const RelCentralExt& eg = w.dest;
  require(is_stem(ef), Errc::NotStem, "sigma_f must be stem");
  YesNo ok = witness_validate(w);
  require(ok.yes, Errc::InvalidWitness, ok.witness);

  const Field fld = f.base.field();
  const size_t kf = f.kernel_space.dim(), mf = f.support.dim();
  const size_t kg = g.kernel_space.dim(), mg = g.support.dim();
  Subspace cf = l_commutator(ef), cg = l_commutator(eg);

  // beta' applied to a sigma_f-total-space vector inside the commutator.
  auto through = [&](const Vec& v) {
    auto c = cf.coords_of(v);
    require(c.has_value(), Errc::NotStem, "vector outside the commutator");
    return cg.from_coords(w.beta_prime.apply(*c));
  };

  // Solve d on the commutator [M,L] of the base pair.
  Pair base_pair{f.base, f.support};
  Subspace cml = pair_commutator(base_pair);
  std::vector<Vec> xs, ys;
  for (size_t i = 0; i < f.base.dim(); ++i) {
    Vec li = unit_vec(fld, f.base.dim(), i);
    for (size_t j = 0; j < mf; ++j) {
      Vec amj = f.base.alpha().apply(f.support.basis_vector(j));
      Vec wij = f.base.bracket(li, amj);
      auto wc = cml.coords_of(wij);
      require(wc.has_value(), Errc::CertificationFailed, "bracket escaped [M,L]");
      Vec emb = f.value_vec(li, amj);  // (f-value, 0) in sigma_f coordinates
      emb.resize(kf + mf, FieldElement(fld));
      Vec img = through(emb);  // lands in Ker sigma_g = K x 0
      Vec rho(img.begin(), img.begin() + kg);
      Vec gv = g.value_vec(w.gamma.apply(li), f.base.alpha().apply(w.gamma.apply(
                                                  f.support.basis_vector(j))));
      xs.push_back(*wc);
      ys.push_back(sub(gv, rho));
    }
  }
  Matrix d(fld, kg, cml.dim());
  if (cml.dim() > 0) {
    Matrix xrows = Matrix::from_rows(fld, cml.dim(), xs);
    Matrix yrows = Matrix::from_rows(fld, kg, ys);
    auto dt = solve_matrix(xrows, yrows);
    require(dt.has_value(), Errc::InconsistentD,
            "no linear d matches the witness on the spanning set");
    d = dt->transpose();
  }

  // Extend d by zero on the pivot-greedy complement of [M,L] in M.
  Subspace cml_comp = complement(cml, f.support);
  Matrix cb = cml.basis().transpose().hstack(cml_comp.basis().transpose());
  Matrix to_parts;  // coordinates (cml part; complement part) of an M-ambient vector
  {
    // Solve [cml^T | comp^T] parts = m for each support basis vector.
    auto inv_ok = solve_matrix(cb, f.support.basis().transpose());
    require(inv_ok.has_value(), Errc::CertificationFailed, "split of M failed");
    to_parts = *inv_ok;
  }

  Matrix lambda(fld, kg + mg, kf + mf);
  for (size_t j = 0; j < kf; ++j) {
    Vec emb = unit_vec(fld, kf + mf, j);
    Vec img = through(emb);
    for (size_t i = 0; i < kg + mg; ++i) lambda.at(i, j) = img[i];
  }
  for (size_t j = 0; j < mf; ++j) {
    Vec parts = to_parts.col(j);
    Vec dm = zero_vec(fld, kg);
    for (size_t a = 0; a < cml.dim(); ++a)
      for (size_t i = 0; i < kg; ++i) dm[i] += d.at(i, a) * parts[a];
    Vec gm = w.gamma.apply(f.support.basis_vector(j));
    auto gc = g.support.coords_of(gm);
    require(gc.has_value(), Errc::InvalidWitness, "gamma does not carry M onto itself");
    for (size_t i = 0; i < kg; ++i) lambda.at(i, kf + j) = dm[i];
    for (size_t i = 0; i < mg; ++i) lambda.at(kg + i, kf + j) = (*gc)[i];
  }

  ExtMorphism iso{ef, eg, w.gamma, std::move(lambda)};
  MorphismCheck mc = morphism_validate(iso);
  require(mc.yes && mc.cls == MorphClass::iso, Errc::CertificationFailed,
          "induced map failed validation: " + mc.witness);
  return iso;
}

}  // namespace hlx
