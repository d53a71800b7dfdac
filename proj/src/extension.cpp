#include "hlx/extension.hpp"

namespace hlx {

namespace {

std::string pair_witness(size_t i, size_t j) {
  return "(" + basis_name(i) + "," + basis_name(j) + ")";
}

// Greedy invariant-complement sweep that also reports partial results.
struct GreedySplit {
  Subspace found;
  bool complete = false;
};

GreedySplit greedy_invariant_complement(const Subspace& u, const Subspace& v, const Matrix& a) {
  Subspace fixed = complement(u, v);
  Subspace w = Subspace::zero(v.field(), v.ambient_dim());
  Subspace uw = u;
  for (size_t i = 0; i < fixed.dim(); ++i) {
    Subspace closure = cyclic_closure(fixed.basis_vector(i), a);
    if (sum(uw, closure).dim() == uw.dim() + closure.dim()) {
      w = sum(w, closure);
      uw = sum(uw, closure);
    }
  }
  return {w, uw.dim() == v.dim()};
}

}  // namespace

ValidationReport rce_validate(const RelCentralExt& e) {
  const HomLieAlgebra& M = e.domain;
  const HomLieAlgebra& L = e.codomain;
  const size_t nl = L.dim(), nm = M.dim();
  ValidationReport r;

  require(e.sigma.rows() == nl && e.sigma.cols() == nm, Errc::DimensionMismatch,
          "sigma shape mismatch");
  require(e.action.actor() == L && e.action.acted() == M, Errc::DimensionMismatch,
          "action must be of the codomain on the domain");
  require(e.target.ambient_dim() == nl, Errc::DimensionMismatch, "target/codomain mismatch");

  {
    YesNo m = is_morphism(e.sigma_map());
    r.checks.push_back({"sigma_morphism", m.yes, m.witness});
  }
  for (const Check& c : action_validate(e.action).checks) r.checks.push_back(c);
  {
    YesNo p = is_ideal(L, e.target);
    r.checks.push_back({"target_ideal", p.yes, p.witness});
  }
  r.checks.push_back({"image_is_target", column_space(e.sigma) == e.target, ""});

  Check compat{"action_sigma_compat", true, ""};
  for (size_t i = 0; i < nl && compat.ok; ++i)
    for (size_t j = 0; j < nm; ++j) {
      Vec am = M.alpha().col(j);
      Vec lhs = e.sigma.apply(e.action.act_basis(i, am));
      Vec rhs = L.bracket(L.alpha().col(i), e.sigma.apply(am));
      if (!(lhs == rhs)) {
        compat.ok = false;
        compat.witness = pair_witness(i, j);
        break;
      }
    }
  r.checks.push_back(compat);

  Check inner{"action_bracket_compat", true, ""};
  for (size_t i = 0; i < nm && inner.ok; ++i)
    for (size_t j = 0; j < nm; ++j) {
      Vec lhs = e.action.act(e.sigma.col(i), M.alpha().col(j));
      Vec rhs = M.bracket_basis(i, j);
      if (!(lhs == rhs)) {
        inner.ok = false;
        inner.witness = pair_witness(i, j);
        break;
      }
    }
  r.checks.push_back(inner);

  Subspace ker = rce_kernel(e);
  Check kc{"kernel_in_l_center", true, ""};
  for (size_t k = 0; k < ker.dim() && kc.ok; ++k) {
    Vec ak = M.alpha().apply(ker.basis_vector(k));
    for (size_t i = 0; i < nl; ++i)
      if (!is_zero_vec(e.action.act_basis(i, ak))) {
        kc.ok = false;
        kc.witness = "(k" + std::to_string(k + 1) + "," + basis_name(i) + ")";
        break;
      }
  }
  r.checks.push_back(kc);

  Check kz{"kernel_central", true, ""};
  for (size_t k = 0; k < ker.dim() && kz.ok; ++k)
    for (size_t j = 0; j < nm; ++j)
      if (!is_zero_vec(M.bracket(ker.basis_vector(k), unit_vec(M.field(), nm, j)))) {
        kz.ok = false;
        kz.witness = "(k" + std::to_string(k + 1) + "," + basis_name(j) + ")";
        break;
      }
  r.checks.push_back(kz);

  return r;
}

Subspace rce_kernel(const RelCentralExt& e) { return kernel(e.sigma); }

Subspace l_commutator(const RelCentralExt& e) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < e.codomain.dim(); ++i)
    for (size_t j = 0; j < e.domain.dim(); ++j)
      rows.push_back(e.action.act_basis(i, e.domain.alpha().col(j)));
  return Subspace::span(e.domain.field(), e.domain.dim(), rows);
}

Subspace l_center(const RelCentralExt& e) {
  const size_t nl = e.codomain.dim(), nm = e.domain.dim();
  Matrix stacked(e.domain.field(), nl * nm, nm);
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < nm; ++j) {
      Vec v = e.action.act_basis(i, e.domain.alpha().col(j));
      for (size_t k = 0; k < nm; ++k) stacked.at(i * nm + k, j) = v[k];
    }
  return kernel(stacked);
}

bool is_stem(const RelCentralExt& e) { return l_commutator(e).contains(rce_kernel(e)); }

MorphismCheck morphism_validate(const ExtMorphism& m) {
  const RelCentralExt& s = m.source;
  const RelCentralExt& d = m.dest;
  require(s.domain.field() == d.domain.field(), Errc::FieldMismatch,
          "morphism between extensions over different fields");
  require(m.gamma.rows() == d.codomain.dim() && m.gamma.cols() == s.codomain.dim() &&
              m.beta.rows() == d.domain.dim() && m.beta.cols() == s.domain.dim(),
          Errc::DimensionMismatch, "morphism matrix shapes");

  YesNo g = is_morphism(LinearMap{s.codomain, d.codomain, m.gamma});
  if (!g.yes) return {false, MorphClass::general, "gamma: " + g.witness};
  YesNo b = is_morphism(LinearMap{s.domain, d.domain, m.beta});
  if (!b.yes) return {false, MorphClass::general, "beta: " + b.witness};

  if (!(m.gamma * s.sigma == d.sigma * m.beta))
    return {false, MorphClass::general, "gamma sigma1 != sigma2 beta"};
  if (!(map_subspace(m.gamma, s.target) == d.target))
    return {false, MorphClass::general, "gamma does not carry the target onto its counterpart"};
  if (!(map_subspace(m.beta, l_commutator(s)) == l_commutator(d)))
    return {false, MorphClass::general, "beta does not carry the commutator onto its counterpart"};

  bool mono = rank(m.beta) == s.domain.dim() && rank(m.gamma) == s.codomain.dim();
  bool epi = rank(m.beta) == d.domain.dim() && rank(m.gamma) == d.codomain.dim();
  MorphClass cls = mono && epi ? MorphClass::iso
                   : mono      ? MorphClass::mono
                   : epi       ? MorphClass::epi
                               : MorphClass::general;
  return {true, cls, ""};
}

ExtMorphism identity_morphism(const RelCentralExt& e) {
  return {e, e, Matrix::identity(e.codomain.field(), e.codomain.dim()),
          Matrix::identity(e.domain.field(), e.domain.dim())};
}

RelCentralExt inclusion_extension(const Pair& p) {
  Restriction r = restrict_to_subalgebra(p.ambient, p.ideal);
  HomAction act = multiplication_action(p.ambient, p.ideal);
  return {r.algebra, p.ambient, p.ideal.basis().transpose(), std::move(act), p.ideal};
}

StemReduction stem_reduce(const RelCentralExt& e, bool use_derived_split) {
  const Subspace ker = rce_kernel(e);
  const Subspace dsub = use_derived_split ? derived(e.domain) : l_commutator(e);
  const Subspace meet = intersect(ker, dsub);
  GreedySplit split = greedy_invariant_complement(meet, ker, e.domain.alpha());

  QuotientExt q = quotient_ext(e, split.found);
  Restriction removed = restrict_to_subalgebra(e.domain, split.found);

  bool cert = true;
  Subspace comm = l_commutator(q.ext);
  Subspace kbar = rce_kernel(q.ext);
  for (size_t i = 0; i < kbar.dim() && cert; ++i) {
    Subspace closure = cyclic_closure(kbar.basis_vector(i), q.ext.domain.alpha());
    cert = intersect(closure, comm).dim() > 0;
  }

  return {std::move(q.ext), std::move(q.epi), std::move(removed.algebra), split.found,
          !split.complete, cert};
}

ProductExt product_with_abelian(const RelCentralExt& e, const HomLieAlgebra& a) {
  require(a.field() == e.domain.field(), Errc::FieldMismatch, "product over different fields");
  require(derived(a).dim() == 0, Errc::NotAbelian, "second factor must be abelian");
  const size_t nm = e.domain.dim(), na = a.dim(), nl = e.codomain.dim();
  const Field f = e.domain.field();

  HomLieAlgebra total = direct_sum(e.domain, a);
  Matrix sigma = e.sigma.hstack(Matrix(f, nl, na));
  HomAction act = HomAction::zero(e.codomain, total);
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < nm; ++j)
      for (size_t k = 0; k < nm; ++k) act.set_a(i, j, k, e.action.a(i, j, k));
  RelCentralExt prod{total, e.codomain, std::move(sigma), std::move(act), e.target};

  Matrix id_l = Matrix::identity(f, nl);
  Matrix proj = Matrix::identity(f, nm).hstack(Matrix(f, nm, na));
  Matrix incl = proj.transpose();
  ExtMorphism epi{prod, e, id_l, std::move(proj)};
  ExtMorphism mono{e, prod, id_l, std::move(incl)};
  return {std::move(prod), std::move(epi), std::move(mono)};
}

QuotientExt quotient_ext(const RelCentralExt& e, const Subspace& n) {
  require(rce_kernel(e).contains(n), Errc::NotInKernel, "subspace is not inside Ker sigma");
  YesNo ideal = is_ideal(e.domain, n);
  require(ideal.yes, Errc::NotAnIdeal, "quotient_ext by a non-ideal: " + ideal.witness);

  Quotient q = quotient(e.domain, n);
  const size_t nl = e.codomain.dim(), nq = q.algebra.dim();
  Matrix sigma = e.sigma * q.section;
  HomAction act = HomAction::zero(e.codomain, q.algebra);
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < nq; ++j) {
      Vec v = q.projection.matrix.apply(e.action.act_basis(i, q.section.col(j)));
      for (size_t k = 0; k < nq; ++k) act.set_a(i, j, k, v[k]);
    }
  RelCentralExt ext{q.algebra, e.codomain, std::move(sigma), std::move(act), e.target};
  ValidationReport check = rce_validate(ext);
  require(check.ok(), Errc::CertificationFailed,
          "quotient extension failed re-validation: " + check.summary());
  ExtMorphism epi{e, ext, Matrix::identity(e.codomain.field(), nl), q.projection.matrix};
  return {std::move(ext), std::move(epi)};
}

SubalgebraExt subalgebra_ext(const RelCentralExt& e, const Subspace& t) {
  Restriction r = restrict_to_subalgebra(e.domain, t);  // NotASubalgebra on failure
  require(sum(t, rce_kernel(e)) == Subspace::full(e.domain.field(), e.domain.dim()),
          Errc::DoesNotCover, "T + Ker sigma must be all of M*");
  require(map_subspace(e.sigma, t) == e.target, Errc::DoesNotCover, "sigma(T) must equal M");

  const size_t nl = e.codomain.dim(), nt = t.dim();
  HomAction act = HomAction::zero(e.codomain, r.algebra);
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < nt; ++j) {
      Vec v = e.action.act_basis(i, t.basis_vector(j));
      auto coords = t.coords_of(v);
      require(coords.has_value(), Errc::NotASubalgebra, "action does not close on T");
      for (size_t k = 0; k < nt; ++k) act.set_a(i, j, k, (*coords)[k]);
    }
  Matrix sigma = e.sigma * t.basis().transpose();
  RelCentralExt ext{r.algebra, e.codomain, std::move(sigma), std::move(act), e.target};
  ValidationReport check = rce_validate(ext);
  require(check.ok(), Errc::CertificationFailed,
          "restricted extension failed re-validation: " + check.summary());
  ExtMorphism mono{ext, e, Matrix::identity(e.codomain.field(), nl), t.basis().transpose()};
  return {std::move(ext), std::move(mono)};
}

PullbackExt pullback(const RelCentralExt& e1, const RelCentralExt& e2, const Matrix& gamma) {
  require(e1.domain.field() == e2.domain.field(), Errc::FieldMismatch,
          "pullback over different fields");
  YesNo g = is_morphism(LinearMap{e1.codomain, e2.codomain, gamma});
  require(g.yes && inverse(gamma).has_value(), Errc::NotIso,
          "gamma must be an isomorphism of the base algebras" +
              (g.witness.empty() ? std::string() : ": " + g.witness));
  require(map_subspace(gamma, e1.target) == e2.target, Errc::TargetMismatch,
          "gamma must carry the first target onto the second");

  const Field f = e1.domain.field();
  const size_t m1 = e1.domain.dim(), m2 = e2.domain.dim(), nl = e1.codomain.dim();
  Matrix left = gamma * e1.sigma * e1.domain.alpha();
  Matrix right = e2.sigma * e2.domain.alpha();
  Matrix cond(f, right.rows(), m1 + m2);
  for (size_t i = 0; i < right.rows(); ++i) {
    for (size_t j = 0; j < m1; ++j) cond.at(i, j) = left.at(i, j);
    for (size_t j = 0; j < m2; ++j) cond.at(i, m1 + j) = -right.at(i, j);
  }
  Subspace joint = kernel(cond);

  HomLieAlgebra prod = direct_sum(e1.domain, e2.domain);
  Restriction r = restrict_to_subalgebra(prod, joint);

  Matrix embed = joint.basis().transpose();  // (m1+m2) x dim
  Matrix proj1 = embed.submatrix(0, 0, m1, joint.dim());
  Matrix proj2 = embed.submatrix(m1, 0, m2, joint.dim());
  Matrix sigma_hat = e1.sigma * proj1;

  Matrix alpha2_inv = *inverse(e2.codomain.alpha());
  HomAction act = HomAction::zero(e1.codomain, r.algebra);
  for (size_t i = 0; i < nl; ++i) {
    Vec l2 = alpha2_inv.apply(gamma.apply(e1.codomain.alpha().col(i)));
    for (size_t j = 0; j < joint.dim(); ++j) {
      Vec v1 = e1.action.act_basis(i, proj1.col(j));
      Vec v2 = e2.action.act(l2, proj2.col(j));
      Vec v = v1;
      v.insert(v.end(), v2.begin(), v2.end());
      auto coords = joint.coords_of(v);
      require(coords.has_value(), Errc::CertificationFailed,
              "joint action escaped the pullback space");
      for (size_t k = 0; k < joint.dim(); ++k) act.set_a(i, j, k, (*coords)[k]);
    }
  }

  RelCentralExt ext{r.algebra, e1.codomain, std::move(sigma_hat), std::move(act), e1.target};
  ValidationReport check = rce_validate(ext);
  require(check.ok(), Errc::CertificationFailed,
          "pullback extension failed re-validation: " + check.summary());

  ExtMorphism onto1{ext, e1, Matrix::identity(f, nl), proj1};
  ExtMorphism onto2{ext, e2, gamma, proj2};
  return {std::move(ext), std::move(onto1), std::move(onto2)};
}

ExtMorphism compose_morphisms(const ExtMorphism& outer, const ExtMorphism& inner) {
  require(outer.source.domain.dim() == inner.dest.domain.dim() &&
              outer.source.codomain.dim() == inner.dest.codomain.dim(),
          Errc::DomainMismatch, "morphism composition does not line up");
  return {inner.source, outer.dest, outer.gamma * inner.gamma, outer.beta * inner.beta};
}

ExtMorphism invert_morphism(const ExtMorphism& m) {
  auto gi = inverse(m.gamma);
  auto bi = inverse(m.beta);
  require(gi.has_value() && bi.has_value(), Errc::NotIso, "morphism is not invertible");
  return {m.dest, m.source, std::move(*gi), std::move(*bi)};
}

ConjugatedExt conjugate_extension(const RelCentralExt& e, const Matrix& p, const Matrix& q) {
  auto pi = inverse(p);
  auto qi = inverse(q);
  require(pi.has_value() && qi.has_value(), Errc::NotIso, "coordinate changes must be invertible");
  const Field f = e.domain.field();
  const size_t nm = e.domain.dim(), nl = e.codomain.dim();

  std::vector<FieldElement> tensor(nm * nm * nm, FieldElement(f));
  HomLieAlgebra dom(f, nm, std::move(tensor), p * e.domain.alpha() * *pi);
  for (size_t i = 0; i < nm; ++i)
    for (size_t j = 0; j < nm; ++j) {
      Vec br = p.apply(e.domain.bracket(pi->col(i), pi->col(j)));
      for (size_t k = 0; k < nm; ++k) dom.set_c(i, j, k, br[k]);
    }

  std::vector<FieldElement> ltensor(nl * nl * nl, FieldElement(f));
  HomLieAlgebra cod(f, nl, std::move(ltensor), q * e.codomain.alpha() * *qi);
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < nl; ++j) {
      Vec br = q.apply(e.codomain.bracket(qi->col(i), qi->col(j)));
      for (size_t k = 0; k < nl; ++k) cod.set_c(i, j, k, br[k]);
    }

  HomAction act = HomAction::zero(cod, dom);
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < nm; ++j) {
      Vec v = p.apply(e.action.act(qi->col(i), pi->col(j)));
      for (size_t k = 0; k < nm; ++k) act.set_a(i, j, k, v[k]);
    }

  RelCentralExt ext{std::move(dom), std::move(cod), q * e.sigma * *pi, std::move(act),
                    map_subspace(q, e.target)};
  ValidationReport check = rce_validate(ext);
  require(check.ok(), Errc::CertificationFailed,
          "rewritten extension failed re-validation: " + check.summary());
  ExtMorphism iso{e, ext, q, p};
  return {std::move(ext), std::move(iso)};
}

}  // namespace hlx
