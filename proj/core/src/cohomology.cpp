#include "lefschetz/cohomology.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>

namespace lefschetz {

namespace {

std::size_t space_dim(int dim, int k) { return binomial(dim, k); }

/// Image of `op` landing in degree `target`.
Subspace image_into(const GradedOperator &op, int target) {
  const int source = target - op.shift();
  if (source < 0 || source > op.dim()) return Subspace::zero(space_dim(op.dim(), target));
  return image(op.block(source));
}

Subspace kernel_at(const GradedOperator &op, int k) { return kernel(op.block(k)); }

/// A quotient of spaces that must nest by theory; a failure is our bug.
QuotientStructure nested_quotient(const Subspace &w, const Subspace &v, const std::string &what) {
  if (!v.contains(w)) throw InternalInconsistency(what + ": denominator not contained in numerator");
  return QuotientStructure(w, v);
}

std::size_t quotient_dim(const Subspace &w, const Subspace &v, const std::string &what) {
  if (!v.contains(w)) throw InternalInconsistency(what + ": denominator not contained in numerator");
  return v.dim() - w.dim();
}

bool is_bijective(const QMatrix &m) { return m.rows() == m.cols() && rank(m) == m.cols(); }

} // namespace

CohomologySpace::CohomologySpace(int dim, int degree, const Subspace &cycles, const Subspace &boundaries)
    : dim_(dim), degree_(degree), quotient_(nested_quotient(boundaries, cycles, "de Rham cohomology")) {
  for (const auto &v : quotient_.representatives()) representatives_.push_back(Form::from_coordinates(dim, degree, v));
}

QVector CohomologySpace::class_of(const Form &a) const {
  if (a.dim() != dim_) throw DimMismatch("form of wrong dimension");
  if (!a.is_zero() && a.degree() != degree_) throw MixedDegree("form of wrong degree for this cohomology group");
  if (a.is_zero()) return QVector(dim());
  return quotient_.coordinates(a.coordinates());
}

Form CohomologySpace::representative(std::span<const Rational> class_coords) const {
  return Form::from_coordinates(dim_, degree_, quotient_.lift(class_coords));
}

std::vector<CohomologySpace> de_rham_cohomology(const LieAlgebra &g) {
  std::vector<CohomologySpace> out;
  for (int k = 0; k <= g.dim(); ++k) out.emplace_back(g.dim(), k, kernel_at(g.d(), k), image_into(g.d(), k));
  return out;
}

SymplecticCohomology::SymplecticCohomology(SymplecticStructure s) : s_(std::move(s)) {
  const int dim = s_.dim();
  de_rham_ = de_rham_cohomology(s_.algebra());
  const auto &d = s_.d();
  const auto &dl = s_.d_lambda();
  const auto &ddl = s_.dd_lambda();
  for (int k = 0; k <= dim; ++k) {
    const Subspace ker_d = kernel_at(d, k);
    const Subspace ker_dl = kernel_at(dl, k);
    const Subspace ker_both = subspace_intersect(ker_d, ker_dl);
    const Subspace im_d = image_into(d, k);
    const Subspace im_dl = image_into(dl, k);
    const Subspace im_ddl = image_into(ddl, k);

    dlambda_dims_.push_back(quotient_dim(im_dl, ker_dl, "d^Λ cohomology"));
    dpd_.push_back(nested_quotient(im_ddl, ker_both, "d+d^Λ cohomology"));
    ddlambda_dims_.push_back(quotient_dim(subspace_sum(im_d, im_dl), kernel_at(ddl, k), "dd^Λ cohomology"));

    const Subspace &p = s_.primitive(k);
    PrimitiveCohomologyDims ph;
    ph.degree = k;
    ph.by_intersection = quotient_dim(subspace_intersect(im_ddl, p), subspace_intersect(ker_both, p), "PH_{d+d^Λ}");
    const Subspace closed_primitive = subspace_intersect(ker_d, p);
    const Subspace ddl_of_p = image_of(ddl.block(k), p);
    ph_plus_quotients_.push_back(nested_quotient(ddl_of_p, closed_primitive, "PH_{d+d^Λ}"));
    ph.by_image = ph_plus_quotients_.back().dim();
    if (!ph.agree()) throw InternalInconsistency("the two PH_{d+d^Λ} formulas disagree in degree " + std::to_string(k));
    ph_plus_.push_back(ph);

    Subspace exact_part = Subspace::zero(space_dim(dim, k));
    if (k >= 1) {
      const Subspace source = subspace_intersect(s_.primitive(k - 1), kernel_at(dl, k - 1));
      exact_part = image_of(d.block(k - 1), source);
    }
    ph_d_.push_back(quotient_dim(exact_part, subspace_intersect(ker_both, p), "PH_d"));
  }
  for (int k = 0; k <= dim; ++k)
    for (int r = 0; 2 * r <= k; ++r) hrs_.emplace(std::pair{r, k - 2 * r}, compute_hrs(r, k - 2 * r));
  for (int k = 0; k <= dim; ++k) verdicts_.push_back(compute_decomposition(k));
}

std::vector<std::size_t> SymplecticCohomology::betti() const {
  std::vector<std::size_t> b;
  for (const auto &h : de_rham_) b.push_back(h.dim());
  return b;
}

std::vector<std::size_t> SymplecticCohomology::d_plus_dlambda_dims() const {
  std::vector<std::size_t> out;
  for (const auto &q : dpd_) out.push_back(q.dim());
  return out;
}

const HrsGroup &SymplecticCohomology::hrs(int r, int s) const {
  static const HrsGroup empty{0, 0, Subspace::zero(0), {}};
  const auto it = hrs_.find({r, s});
  return it == hrs_.end() ? empty : it->second;
}

HrsGroup SymplecticCohomology::compute_hrs(int r, int s) const {
  HrsGroup g;
  g.r = r;
  g.s = s;
  const int k = 2 * r + s;
  const CohomologySpace &h = de_rham(k);
  const Subspace lp = image_of(s_.L_power(r).block(s), s_.primitive(s));
  const Subspace closed = subspace_intersect(lp, h.cycles());
  std::vector<QVector> classes;
  std::size_t rank_so_far = 0;
  for (const auto &v : closed.vectors()) {
    classes.push_back(h.class_of(v));
    const std::size_t next = Subspace::span(classes, h.dim()).dim();
    if (next > rank_so_far) {
      rank_so_far = next;
      g.representatives.push_back(Form::from_coordinates(dim(), k, v));
    }
  }
  g.classes = Subspace::span(classes, h.dim());
  return g;
}

DecompositionVerdict SymplecticCohomology::compute_decomposition(int k) const {
  DecompositionVerdict v;
  v.degree = k;
  v.betti = de_rham(k).dim();
  v.sum = Subspace::zero(v.betti);
  std::size_t total = 0;
  for (int r = 0; 2 * r <= k; ++r) {
    const HrsGroup &g = hrs(r, k - 2 * r);
    v.summand_dims[{r, k - 2 * r}] = g.dim();
    total += g.dim();
    v.sum = subspace_sum(v.sum, g.classes);
  }
  v.sum_dim = v.sum.dim();
  v.direct = v.sum_dim == total;
  v.full = v.sum_dim == v.betti;
  return v;
}

QMatrix SymplecticCohomology::cohomology_map(const QMatrix &form_map, int source, int target) const {
  const CohomologySpace &hs = de_rham(source);
  const CohomologySpace &ht = de_rham(target);
  if (!ht.boundaries().contains(image_of(form_map, hs.boundaries())))
    throw InternalInconsistency("map does not send exact forms to exact forms");
  if (!ht.cycles().contains(image_of(form_map, hs.cycles())))
    throw InternalInconsistency("map does not send closed forms to closed forms");
  std::vector<QVector> columns;
  for (const auto &rep : hs.quotient().representatives()) columns.push_back(ht.class_of(form_map.apply(rep)));
  return QMatrix::from_columns(columns, ht.dim());
}

QMatrix SymplecticCohomology::lefschetz_power_map(int r, int s) const {
  return cohomology_map(s_.L_power(r).block(s), s, s + 2 * r);
}

QMatrix SymplecticCohomology::lefschetz_map(int k) const { return lefschetz_power_map(k, n() - k); }

HlcVerdict SymplecticCohomology::hlc() const {
  HlcVerdict v;
  v.holds = true;
  for (int k = 0; k <= n(); ++k) {
    const bool ok = is_bijective(lefschetz_map(k));
    v.per_k.push_back(ok);
    v.holds = v.holds && ok;
  }
  return v;
}

std::vector<bool> SymplecticCohomology::dd_lemma_per_degree() const {
  std::vector<bool> out;
  for (int k = 0; k <= dim(); ++k) {
    const QuotientStructure &q = dpd_[static_cast<std::size_t>(k)];
    // Kernel of H_{d+d^Λ} → H_dR is (ker d ∩ ker d^Λ ∩ im d) / im dd^Λ.
    const Subspace in_kernel = subspace_intersect(q.numerator(), de_rham(k).boundaries());
    out.push_back(in_kernel.dim() == q.denominator().dim());
  }
  return out;
}

bool SymplecticCohomology::dd_lemma() const {
  const auto per = dd_lemma_per_degree();
  return std::all_of(per.begin(), per.end(), [](bool b) { return b; });
}

Rational SymplecticCohomology::cup_pairing(int k, std::span<const Rational> a, std::span<const Rational> b) const {
  const Form fa = de_rham(k).representative(a);
  const Form fb = de_rham(dim() - k).representative(b);
  return top_coefficient(wedge(fa, fb));
}

QMatrix SymplecticCohomology::pairing_matrix(int k) const {
  const auto &ra = de_rham(k).representatives();
  const auto &rb = de_rham(dim() - k).representatives();
  QMatrix m(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i)
    for (std::size_t j = 0; j < rb.size(); ++j) m(i, j) = top_coefficient(wedge(ra[i], rb[j]));
  return m;
}

bool SymplecticCohomology::pairing_well_defined() const { return s_.d().block(dim() - 1).is_zero(); }

std::vector<TheoremCheck> SymplecticCohomology::lr_equals_hr_check() const {
  std::vector<TheoremCheck> out;
  for (int s = 0; s <= n(); ++s) {
    const HrsGroup base = hrs(0, s);
    for (int r = 0; 2 * r + s <= n(); ++r) {
      const Subspace mapped = image_of(lefschetz_power_map(r, s), base.classes);
      out.push_back({"H^(" + std::to_string(r) + "," + std::to_string(s) + ") = L^" + std::to_string(r) + " H^(0," +
                         std::to_string(s) + ")",
                     mapped == hrs(r, s).classes});
    }
  }
  return out;
}

std::vector<TheoremCheck> SymplecticCohomology::pure_intersection_check() const {
  std::vector<TheoremCheck> out;
  for (int k = 1; k <= n() / 2; ++k) {
    const Subspace meet = subspace_intersect(hrs(k, 0).classes, hrs(0, 2 * k).classes);
    out.push_back({"H^(" + std::to_string(k) + ",0) ∩ H^(0," + std::to_string(2 * k) + ") = 0", meet.is_zero()});
  }
  return out;
}

std::vector<TheoremCheck> SymplecticCohomology::duality_implication_check() const {
  std::vector<TheoremCheck> out;
  for (int k = 0; k <= dim(); ++k) {
    const bool full = decomposition(k).full;
    const bool holds = !full || decomposition(dim() - k).direct;
    out.push_back({"full in degree " + std::to_string(k) + " => direct in degree " + std::to_string(dim() - k), holds});
  }
  return out;
}

bool SymplecticCohomology::d_plus_dlambda_hard_lefschetz() const {
  for (int k = 0; k <= n(); ++k) {
    const QuotientStructure &src = d_plus_dlambda(n() - k);
    const QuotientStructure &dst = d_plus_dlambda(n() + k);
    const QMatrix lk = s_.L_power(k).block(n() - k);
    if (!dst.denominator().contains(image_of(lk, src.denominator())) ||
        !dst.numerator().contains(image_of(lk, src.numerator())))
      throw InternalInconsistency("L^k does not preserve the d+d^Λ complex");
    std::vector<QVector> columns;
    for (const auto &rep : src.representatives()) columns.push_back(dst.coordinates(lk.apply(rep)));
    if (!is_bijective(QMatrix::from_columns(columns, dst.dim()))) return false;
  }
  return true;
}

bool SymplecticCohomology::d_plus_dlambda_primitive_decomposition() const {
  for (int k = 0; k <= dim(); ++k) {
    const QuotientStructure &h = d_plus_dlambda(k);
    std::vector<QVector> classes;
    for (int r = std::max(k - n(), 0); 2 * r <= k; ++r) {
      const QMatrix lr = s_.L_power(r).block(k - 2 * r);
      for (const auto &rep : ph_plus_quotients_[static_cast<std::size_t>(k - 2 * r)].representatives())
        classes.push_back(h.coordinates(lr.apply(rep)));
    }
    if (Subspace::span(classes, h.dim()).dim() != h.dim() || classes.size() != h.dim()) return false;
  }
  return true;
}

} // namespace lefschetz
