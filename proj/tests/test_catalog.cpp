#include "btop/catalog.hpp"

#include <gtest/gtest.h>

#include "btop/report.hpp"

using namespace btop;

namespace {

TEST(Catalog, BuildValidation) {
  EXPECT_THROW(buildCatalog(0.0), PreconditionError);
  EXPECT_THROW(buildCatalog(1.0), PreconditionError);
  EXPECT_THROW(buildCatalog(-0.5), PreconditionError);
  EXPECT_EQ(buildCatalog(0.25).size(), 5u);
}

TEST(Catalog, EntriesAndLookup) {
  auto entries = buildCatalog();
  const char* ids[] = {"case2", "case3", "remark3.4", "remark3.5",
                       "scalar-czbar"};
  for (const char* id : ids) {
    const CatalogEntry* e = findEntry(entries, id);
    ASSERT_NE(e, nullptr) << id;
    EXPECT_EQ(e->id, id);
    EXPECT_FALSE(e->description.empty());
  }
  EXPECT_EQ(findEntry(entries, "case9"), nullptr);

  // The lacunary entries are declared stand-ins, the others are not.
  EXPECT_FALSE(findEntry(entries, "case2")->phi.isStandin());
  EXPECT_TRUE(findEntry(entries, "case3")->phi.isStandin());
  EXPECT_TRUE(findEntry(entries, "remark3.4")->phi.isStandin());
  EXPECT_TRUE(findEntry(entries, "remark3.5")->phi.isStandin());
  EXPECT_EQ(findEntry(entries, "scalar-czbar")->notes.expectedKUpTo, 1);
}

TEST(Catalog, ScalarEntryRunMatchesAnnotations) {
  auto entries = buildCatalog(0.5);
  RunConfig cfg;
  CatalogRunResult r = runCatalogEntry(*findEntry(entries, "scalar-czbar"), cfg);
  EXPECT_TRUE(r.annotationsMatch) << catalogRunsToCsv({r});
  EXPECT_EQ(r.report.verdict, Verdict::hyponormal_only);
  EXPECT_EQ(r.report.kHyponormalUpTo, 1);
  EXPECT_EQ(r.report.commutator.rank, 1);
  EXPECT_NEAR(r.report.commutator.minEigenvalue, 0.75, 1e-12);
  ASSERT_TRUE(r.report.dichotomy.has_value());
  EXPECT_TRUE(r.report.dichotomy->coprime);
  EXPECT_TRUE(r.report.dichotomy->applicable);
  EXPECT_TRUE(r.report.dichotomy->consistent);
}

TEST(Catalog, Case2RunMatchesAnnotations) {
  auto entries = buildCatalog();
  RunConfig cfg;
  CatalogRunResult r = runCatalogEntry(*findEntry(entries, "case2"), cfg);
  EXPECT_TRUE(r.annotationsMatch) << catalogRunsToCsv({r});
  EXPECT_EQ(r.report.verdict, Verdict::subnormal_evidence);
  EXPECT_EQ(r.report.kHyponormalUpTo, cfg.kMax);
  EXPECT_EQ(r.report.modelSpaceDim, 2);
  ASSERT_TRUE(r.report.dichotomy.has_value());
  EXPECT_FALSE(r.report.dichotomy->coprime);
}

TEST(Catalog, LacunaryStandinPinnedShape) {
  auto entries = buildCatalog();
  const CatalogEntry* e = findEntry(entries, "case3");
  // f = sum_{j=0}^{6} 2^{-j} z^{2^j} embedded as f + conj f in the first
  // diagonal entry: degree 64, coefficient of z^64 equal to 2^{-6}.
  EXPECT_EQ(e->phi.degPlus(), 64);
  EXPECT_EQ(e->phi.degMinus(), 64);
  EXPECT_EQ(e->phi.coeff(64)(0, 0).real(), std::ldexp(1.0, -6));
  EXPECT_EQ(e->phi.coeff(-64)(0, 0).real(), std::ldexp(1.0, -6));
  EXPECT_EQ(e->phi.coeff(1)(1, 1).real(), 1.0);
}

}  // namespace
