#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sft/constructions.hpp"
#include "sft/error.hpp"
#include "sft/random.hpp"
#include "sft/table_map.hpp"

using namespace sft;

namespace {

const TransitionMatrix kFull2 = TransitionMatrix::full_shift(2);
const TransitionMatrix kGolden = TransitionMatrix::validate({{1, 1}, {1, 0}});

TableMap table(const TransitionMatrix& A, std::vector<TableEntry> entries) {
  return TableMap::validate(A, std::move(entries));
}

TableMap worked() { return table(kFull2, {{{1, 1}, {1, 1, 1}}, {{1, 2}, {1, 1, 2}}, {{2, 1}, {1, 2}}, {{2, 2}, {2}}}); }
TableMap swap12() { return table(kFull2, {{{1}, {2}}, {{2}, {1}}}); }

EPPoint pt(const TransitionMatrix& A, Word pre, Word per) { return EPPoint::make(A, std::move(pre), std::move(per)); }

ErrorCode code_of(const TransitionMatrix& A, std::vector<TableEntry> entries) {
  try {
    TableMap::validate(A, std::move(entries));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

ClopenSet cyl(const TransitionMatrix& A, Word w) { return ClopenSet::cylinder(A, w); }

}  // namespace

TEST(TableMap, ValidateExamples) {
  EXPECT_NO_THROW(swap12());
  EXPECT_EQ(code_of(kGolden, {{{1}, {2}}, {{2}, {1}}}), ErrorCode::RowMismatch);
  EXPECT_NO_THROW(worked());
  EXPECT_EQ(worked().depth(), 2u);
}

TEST(TableMap, ValidateErrors) {
  EXPECT_EQ(code_of(kFull2, {{{1}, {1}}}), ErrorCode::BadDomain);
  EXPECT_EQ(code_of(kFull2, {{{1}, {1}}, {{2}, {1, 1}}}), ErrorCode::ImagesOverlap);
  EXPECT_EQ(code_of(kFull2, {{{1}, {1, 1}}, {{2}, {2}}}), ErrorCode::ImagesDontCover);
  EXPECT_EQ(code_of(kGolden, {{{1}, {1}}, {{2}, {2, 2}}}), ErrorCode::InadmissibleWord);
}

TEST(TableMap, ApplyExamples) {
  EXPECT_EQ(apply(swap12(), pt(kFull2, {}, {1})), pt(kFull2, {2}, {1}));
  EXPECT_EQ(apply(worked(), pt(kFull2, {}, {1})), pt(kFull2, {}, {1}));
  const auto x = pt(kFull2, {2, 1}, {1, 2});
  EXPECT_EQ(apply(TableMap::identity(kFull2), x), x);
}

TEST(TableMap, ComposeAndInverseExamples) {
  const auto id = compose(swap12(), swap12());
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.depth(), 0u);
  EXPECT_TRUE(compose(inverse(worked()), worked()).is_identity());
  EXPECT_TRUE(compose(worked(), inverse(worked())).is_identity());
  const auto expected = table(kFull2, {{{1, 1, 1}, {1, 1}}, {{1, 1, 2}, {1, 2}}, {{1, 2}, {2, 1}}, {{2}, {2, 2}}});
  EXPECT_TRUE(same_element(inverse(worked()), expected));
}

TEST(TableMap, CanonicalReduceExamples) {
  const auto deep_id = table(kFull2, {{{1, 1}, {1, 1}}, {{1, 2}, {1, 2}}, {{2, 1}, {2, 1}}, {{2, 2}, {2, 2}}});
  EXPECT_EQ(canonical_reduce(deep_id), TableMap::identity(kFull2));
  const auto deep_swap = table(kFull2, {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}, {{2, 1}, {1, 1}}, {{2, 2}, {1, 2}}});
  EXPECT_EQ(canonical_reduce(deep_swap), swap12());
  const auto reduced = canonical_reduce(worked());
  EXPECT_EQ(reduced, table(kFull2, {{{1}, {1, 1}}, {{2, 1}, {1, 2}}, {{2, 2}, {2}}}));
  EXPECT_EQ(canonical_reduce(reduced), reduced);
}

TEST(TableMap, OrderExamples) {
  EXPECT_EQ(power_order(swap12(), 64).order, std::optional<std::size_t>(2));
  EXPECT_EQ(power_order(TableMap::identity(kFull2), 64).order, std::optional<std::size_t>(1));
  EXPECT_FALSE(power_order(worked(), 64).order.has_value());
}

TEST(TableMap, SupportExamples) {
  const auto id = support_and_fixed_set(TableMap::identity(kFull2));
  EXPECT_TRUE(id.support.is_empty());
  EXPECT_TRUE(id.fixed.clopen_part.is_full());
  EXPECT_TRUE(id.fixed.isolated_points.empty());
  const auto sw = support_and_fixed_set(swap12());
  EXPECT_TRUE(sw.support.is_full());
  EXPECT_TRUE(sw.fixed.clopen_part.is_empty());
  EXPECT_TRUE(sw.fixed.isolated_points.empty());
  const auto w = support_and_fixed_set(worked());
  EXPECT_TRUE(w.support.is_full());
  EXPECT_TRUE(w.fixed.clopen_part.is_empty());
  EXPECT_EQ(w.fixed.isolated_points, (std::vector<EPPoint>{pt(kFull2, {}, {1}), pt(kFull2, {}, {2})}));
}

TEST(TableMap, CocycleExamples) {
  const auto id = cocycles(TableMap::identity(kFull2));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].k, 0u);
  EXPECT_EQ(id[0].l, 0u);
  for (const auto& c : cocycles(swap12())) {
    EXPECT_EQ(c.k, 1u);
    EXPECT_EQ(c.l, 1u);
  }
  const auto w = cocycles(worked());
  ASSERT_EQ(w.size(), 4u);
  const std::vector<std::pair<std::size_t, std::size_t>> kl{{3, 2}, {3, 2}, {2, 2}, {1, 2}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(w[i].k, kl[i].first);
    EXPECT_EQ(w[i].l, kl[i].second);
  }
}

TEST(TableMap, CommutesAndLocalMembership) {
  EXPECT_TRUE(commutes(worked(), TableMap::identity(kFull2)));
  EXPECT_TRUE(commutes(worked(), worked()));
  EXPECT_FALSE(commutes(worked(), swap12()));
  const auto a = involution_into(cyl(kFull2, {1}), cyl(kFull2, {1, 2}), pt(kFull2, {}, {1})).alpha;
  const auto b = involution_into(cyl(kFull2, {2}), cyl(kFull2, {2, 2}), pt(kFull2, {}, {2})).alpha;
  EXPECT_TRUE(are_disjoint(support(a), support(b)));
  EXPECT_TRUE(commutes(a, b));

  EXPECT_TRUE(in_local_subgroup(TableMap::identity(kFull2), ClopenSet::empty(kFull2)));
  EXPECT_FALSE(in_local_subgroup(swap12(), cyl(kFull2, {1})));
  const auto g = cylinder_swap(kGolden, {1, 1}, {2, 1});
  EXPECT_TRUE(in_local_subgroup(g, ClopenSet::from_words(kGolden, {{1, 1}, {2, 1}})));
  EXPECT_FALSE(in_local_subgroup(g, cyl(kGolden, {1})));
}

TEST(TableMap, SplitExamples) {
  const auto O = cyl(kFull2, {1});
  const auto [i1, i2] = split_invariant(TableMap::identity(kFull2), O);
  EXPECT_TRUE(i1.is_identity());
  EXPECT_TRUE(i2.is_identity());
  const auto s = cylinder_swap(kFull2, {1, 1}, {1, 2});
  const auto [s1, s2] = split_invariant(s, O);
  EXPECT_EQ(s1, canonical_reduce(s));
  EXPECT_TRUE(s2.is_identity());
  const auto t = cylinder_swap(kFull2, {2, 1}, {2, 2});
  const auto [p1, p2] = split_invariant(compose(s, t), O);
  EXPECT_TRUE(same_element(p1, s));
  EXPECT_TRUE(same_element(p2, t));
  try {
    split_invariant(swap12(), O);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvariant);
  }
}

TEST(TableMap, ImageExamples) {
  EXPECT_EQ(image_clopen(swap12(), cyl(kFull2, {1})), cyl(kFull2, {2}));
  EXPECT_TRUE(image_clopen(worked(), ClopenSet::full(kFull2)).is_full());
  EXPECT_EQ(image_clopen(worked(), cyl(kFull2, {1, 1})), cyl(kFull2, {1, 1, 1}));
}

TEST(TableMap, RandomGroupLawsAndPointwiseAgreement) {
  random::Engine rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const auto A = random::matrix(rng, 2 + trial % 3);
    const auto f = random::table(rng, A, 3, 5), g = random::table(rng, A, 3, 5), h = random::table(rng, A, 3, 5);
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    EXPECT_TRUE(compose(inverse(f), f).is_identity());
    EXPECT_EQ(canonical_reduce(canonical_reduce(f)), canonical_reduce(f));
    const auto fg = compose(f, g);
    for (const auto& p : oracle::all_points(A, 2, 2)) {
      const auto x = EPPoint::make(A, Word(p.pre), Word(p.per));
      EXPECT_TRUE(oracle::same_point(oracle::raw(apply(f, x)), oracle::apply(f.entries(), p)));
      EXPECT_TRUE(oracle::same_point(oracle::raw(apply(fg, x)),
                                     oracle::apply(f.entries(), oracle::apply(g.entries(), p))));
    }
  }
}

TEST(TableMap, RandomCocycleIdentity) {
  random::Engine rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto A = random::matrix(rng, 2 + trial % 3);
    const auto g = random::table(rng, A, 3, 4);
    const auto x = random::point(rng, A, 4, 4);
    for (const auto& c : cocycles(g)) {
      if (!oracle::point_in_cylinder(oracle::raw(x), c.domain.symbols())) continue;
      EXPECT_TRUE(oracle::same_point(oracle::shift(oracle::raw(apply(g, x)), c.k), oracle::shift(oracle::raw(x), c.l)));
    }
  }
}

TEST(TableMap, PermutationAndPiecewise) {
  const auto p = permutation_table(kFull2, {{{1, 1}, {2}}, {{2}, {1, 1}}});
  EXPECT_EQ(power_order(p, 8).order, std::optional<std::size_t>(2));
  EXPECT_EQ(image_clopen(p, cyl(kFull2, {1, 1})), cyl(kFull2, {2}));
  const auto pw = piecewise(kFull2, {{cyl(kFull2, {1}), TableMap::identity(kFull2)},
                                     {cyl(kFull2, {2}), cylinder_swap(kFull2, {2, 1}, {2, 2})}});
  EXPECT_EQ(support(pw), cyl(kFull2, {2}));
}
