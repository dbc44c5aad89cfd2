#include "btop/catalog.hpp"

#include <cmath>
#include <sstream>

namespace btop {

namespace {

// Scalar lacunary polynomial sum_{j=0}^{6} 2^{-j} z^{2^j}; its conjugate is
// the canonical stand-in for a function that is not of bounded type.
LaurentSymbol lacunary() {
  std::map<int, Cplx> c;
  for (int j = 0; j <= 6; ++j) c[1 << j] = std::ldexp(1.0, -j);
  return LaurentSymbol::scalar(c);
}

LaurentSymbol diag2(const LaurentSymbol& a, const LaurentSymbol& b) {
  LaurentSymbol s(2);
  int lo = std::min(a.minPower(), b.minPower());
  int hi = std::max(a.maxPower(), b.maxPower());
  for (int k = lo; k <= hi; ++k) {
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = a.coeff(k)(0, 0);
    m(1, 1) = b.coeff(k)(0, 0);
    s.setCoeff(k, m);
  }
  return s;
}

LaurentSymbol realPart(const LaurentSymbol& f) { return f + f.adjoint(); }

// diag(z^{d0}, z^{d1}) as a product of degree-one factors with zero alphas.
PotapovProduct diagMonomial(int d0, int d1) {
  std::vector<BlaschkeFactor> fs;
  for (int j = 0; j < std::max(d0, d1); ++j) {
    CMat p = CMat::Zero(2, 2);
    if (j < d0) p(0, 0) = 1.0;
    if (j < d1) p(1, 1) = 1.0;
    fs.emplace_back(Cplx(0.0, 0.0), p);
  }
  return PotapovProduct(CMat::Identity(2, 2), std::move(fs));
}

}  // namespace

std::vector<CatalogEntry> buildCatalog(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw PreconditionError("scalar entry parameter must lie in (0, 1)");

  std::vector<CatalogEntry> out;
  LaurentSymbol zShift = LaurentSymbol::scalar({{1, 1.0}});
  LaurentSymbol zero1 = LaurentSymbol::zero(1);

  {
    CatalogEntry e{"case2",
                   "diag(z + conj z, z): self-adjoint part plus a shift, "
                   "inner factor diag(1, z^2)",
                   diag2(realPart(zShift), zShift), diagMonomial(0, 2), {}};
    e.notes.hyponormal = true;
    e.notes.subnormalByConstruction = true;
    e.notes.expectedCommutatorRank = 1;
    e.notes.expectedModelSpaceDim = 2;
    e.notes.coprimeChecked = true;
    e.notes.expectCoprime = false;
    out.push_back(std::move(e));
  }
  {
    LaurentSymbol phi = diag2(realPart(lacunary()), zShift);
    phi.setBoundedType(BoundedType::not_bounded_type_standin);
    CatalogEntry e{"case3",
                   "diag(f + conj f, z) for the lacunary stand-in f, "
                   "inner factor diag(1, z^2)",
                   std::move(phi), diagMonomial(0, 2), {}};
    e.notes.hyponormal = true;
    e.notes.subnormalByConstruction = true;
    e.notes.expectedCommutatorRank = 1;
    e.notes.expectedModelSpaceDim = 2;
    out.push_back(std::move(e));
  }
  {
    LaurentSymbol phi = diag2(realPart(lacunary()), zShift);
    phi.setBoundedType(BoundedType::not_bounded_type_standin);
    CatalogEntry e{"remark3.4",
                   "the case3 symbol, carrying a conjugate-Hankel kernel "
                   "vector (0, z) and the commutator fixed point (0, 1)",
                   std::move(phi), diagMonomial(0, 2), {}};
    e.notes.hyponormal = true;
    e.notes.subnormalByConstruction = true;
    e.notes.expectedCommutatorRank = 1;
    e.notes.expectedModelSpaceDim = 2;
    e.notes.fixedPointComponent = 1;
    out.push_back(std::move(e));
  }
  {
    LaurentSymbol phi = diag2(realPart(lacunary()), zero1);
    phi.setBoundedType(BoundedType::not_bounded_type_standin);
    CatalogEntry e{"remark3.5",
                   "diag(f + conj f, 0): self-adjoint, inner factor "
                   "diag(1, z); adjoint-Toeplitz and conjugate-Hankel "
                   "kernels are both nontrivial",
                   std::move(phi), diagMonomial(0, 1), {}};
    e.notes.hyponormal = true;
    e.notes.normalOperator = true;
    e.notes.subnormalByConstruction = true;
    e.notes.expectedCommutatorRank = 0;
    e.notes.expectedModelSpaceDim = 1;
    out.push_back(std::move(e));
  }
  {
    LaurentSymbol phi = LaurentSymbol::scalar({{1, 1.0}, {-1, c}});
    double r = std::sqrt(c);
    CMat p1 = CMat::Identity(1, 1);
    std::vector<BlaschkeFactor> fs{BlaschkeFactor(Cplx(0.0, r), p1),
                                   BlaschkeFactor(Cplx(0.0, -r), p1)};
    CatalogEntry e{"scalar-czbar",
                   "z + c conj z with 0 < c < 1; the inner factor is the "
                   "two-zero Blaschke product (z^2 + c)/(1 + c z^2)",
                   std::move(phi),
                   PotapovProduct(CMat::Identity(1, 1), std::move(fs)),
                   {}};
    e.notes.hyponormal = true;
    e.notes.expectedCommutatorRank = 1;
    e.notes.expectedModelSpaceDim = 2;
    e.notes.expectedKUpTo = 1;
    e.notes.coprimeChecked = true;
    e.notes.expectCoprime = true;
    out.push_back(std::move(e));
  }
  return out;
}

const CatalogEntry* findEntry(const std::vector<CatalogEntry>& entries,
                              const std::string& id) {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

CatalogRunResult runCatalogEntry(const CatalogEntry& entry,
                                 const RunConfig& config) {
  RunConfig cfg = config;
  cfg.allowStandin = cfg.allowStandin || entry.phi.isStandin();

  CatalogRunResult result;
  result.id = entry.id;
  result.report = classify(entry.phi, entry.q, cfg);
  const ClassificationReport& r = result.report;
  const CatalogAnnotations& notes = entry.notes;

  auto expect = [&](bool ok, const std::string& what) {
    if (ok) return;
    result.annotationsMatch = false;
    result.mismatches.push_back(what);
  };

  expect(r.hyponormal == notes.hyponormal, "hyponormality flag");
  expect(r.normalOperator.normal == notes.normalOperator, "normality flag");
  expect(r.analytic == notes.analytic, "analyticity flag");
  if (notes.expectedCommutatorRank >= 0)
    expect(r.commutator.rank == notes.expectedCommutatorRank,
           "commutator rank");
  if (notes.expectedModelSpaceDim >= 0)
    expect(r.modelSpaceDim == notes.expectedModelSpaceDim,
           "model space dimension");
  if (notes.coprimeChecked && r.dichotomy)
    expect(r.dichotomy->coprime == notes.expectCoprime, "coprimality");
  if (notes.fixedPointComponent >= 0) {
    CommutatorResult cmt = selfCommutator(entry.phi, cfg.allowStandin);
    CVec x = CVec::Zero(cmt.matrix.rows());
    x(notes.fixedPointComponent) = 1.0;
    expect((cmt.matrix * x - x).norm() <= 1e-12, "commutator fixed point");
  }
  if (r.hyponormal) {
    int wantK = notes.expectedKUpTo >= 0
                    ? std::min(notes.expectedKUpTo, cfg.kMax)
                    : (notes.subnormalByConstruction ? cfg.kMax : -1);
    if (wantK >= 0)
      expect(r.kHyponormalUpTo == wantK, "ladder depth");
  }
  if (r.dichotomy) expect(r.dichotomy->consistent, "dichotomy consistency");
  return result;
}

}  // namespace btop
