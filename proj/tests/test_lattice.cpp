#include <gtest/gtest.h>

#include "cylwalk/error.hpp"
#include "cylwalk/formulas.hpp"
#include "cylwalk/genfunc.hpp"
#include "cylwalk/lattice.hpp"
#include "cylwalk/verify.hpp"

namespace cylwalk {
namespace {

const LaurentPoly2 X = LaurentPoly2::x();
const LaurentPoly2 Y = LaurentPoly2::y();
const LaurentPoly2 Yinv = LaurentPoly2::y(-1);
const LaurentPoly2 X2 = X * X;
const LaurentPoly2 X4 = X2 * X2;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::FormulaMismatch;
}

TEST(ValidateConfig, AcceptsWorkedInstance) {
  const CylinderConfig c = validate_config(4, 2, {0, 2}, {0, 2});
  EXPECT_EQ(c.r(), 2);
  EXPECT_EQ(c.M, 4);
  EXPECT_EQ(c.N, 2);
}

TEST(ValidateConfig, Errors) {
  EXPECT_EQ(kind_of([] { validate_config(4, 2, {0, 1}, {0, 2}); }), ErrorKind::ParityViolation);
  EXPECT_EQ(kind_of([] { validate_config(4, 2, {2, 0}, {0, 2}); }), ErrorKind::NotStrictlyIncreasing);
  EXPECT_EQ(kind_of([] { validate_config(4, 2, {0, 0}, {0, 2}); }), ErrorKind::NotStrictlyIncreasing);
  EXPECT_EQ(kind_of([] { validate_config(4, 2, {0, 4}, {0, 2}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { validate_config(4, 2, {-2, 0}, {0, 2}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { validate_config(4, 2, {0}, {0, 2}); }), ErrorKind::BadDimensions);
  EXPECT_EQ(kind_of([] { validate_config(4, 2, {}, {}); }), ErrorKind::BadDimensions);
  EXPECT_EQ(kind_of([] { validate_config(1, 2, {0}, {0}); }), ErrorKind::BadCylinder);
  EXPECT_EQ(kind_of([] { validate_config(4, -1, {0}, {1}); }), ErrorKind::BadCylinder);
}

TEST(EnumerateFamilies, WorkedInstance) {
  const auto cfg = validate_config(4, 2, {0, 2}, {0, 2});
  const FamilyEnumeration en = enumerate_families(cfg);
  EXPECT_EQ(en.family_count, 4U);
  ASSERT_EQ(en.families.size(), 4U);
  EXPECT_EQ(en.unsigned_gf, X4 * Yinv + 2 * X2 + Y);
  EXPECT_EQ(en.signed_gf, -X4 * Yinv + 2 * X2 - Y);

  // Families in index order: RR,RR / RL,RL / LR,LR / LL,LL.
  EXPECT_EQ(en.families[0].index, 0b0000U);
  EXPECT_EQ(en.families[1].index, 0b0101U);
  EXPECT_EQ(en.families[2].index, 0b1010U);
  EXPECT_EQ(en.families[3].index, 0b1111U);
}

TEST(EnumerateFamilies, EmptyPaths) {
  const auto en = enumerate_families(validate_config(4, 0, {0, 2}, {0, 2}));
  EXPECT_EQ(en.family_count, 1U);
  EXPECT_EQ(en.signed_gf, LaurentPoly2(1));
  EXPECT_EQ(en.unsigned_gf, LaurentPoly2(1));
}

TEST(EnumerateFamilies, SingleStepWrapsAround) {
  const auto en = enumerate_families(validate_config(2, 1, {0}, {1}));
  EXPECT_EQ(en.family_count, 2U);
  EXPECT_EQ(en.unsigned_gf, 1 + X * Yinv);
  EXPECT_EQ(en.signed_gf, en.unsigned_gf);
}

TEST(EnumerateFamilies, CapExceeded) {
  const auto cfg = validate_config(4, 14, {0, 2}, {0, 2});
  EXPECT_EQ(kind_of([&] { enumerate_families(cfg); }), ErrorKind::CapExceeded);
  EnumerationOptions opts;
  opts.max_total_steps = 8;
  EXPECT_EQ(kind_of([&] { enumerate_families(validate_config(4, 6, {0, 2}, {0, 2}), opts); }), ErrorKind::CapExceeded);
}

TEST(EnumerateFamilies, WorkerCountDoesNotChangeResult) {
  const auto cfg = validate_config(6, 6, {0, 2, 4}, {0, 2, 4});
  EnumerationOptions one;
  one.workers = 1;
  const auto base = enumerate_families(cfg, one);
  for (unsigned w : {2U, 3U, 7U}) {
    EnumerationOptions opts;
    opts.workers = w;
    const auto other = enumerate_families(cfg, opts);
    EXPECT_EQ(other.signed_gf, base.signed_gf);
    EXPECT_EQ(other.unsigned_gf, base.unsigned_gf);
    ASSERT_EQ(other.families.size(), base.families.size());
    for (std::size_t i = 0; i < base.families.size(); ++i) EXPECT_EQ(other.families[i].index, base.families[i].index);
  }
}

TEST(FamilySignature, WorkedInstanceFamilies) {
  const auto cfg = validate_config(4, 2, {0, 2}, {0, 2});
  const auto en = enumerate_families(cfg);

  const FamilySignature rr = family_signature(en.families[0], cfg);
  EXPECT_EQ(rr.shift, 1);
  EXPECT_EQ(rr.sign, -1);
  EXPECT_EQ(rr.offsets, (std::vector<int>{0, 1}));

  const FamilySignature ll = family_signature(en.families[3], cfg);
  EXPECT_EQ(ll.shift_mod(2), 1);
  EXPECT_EQ(ll.shift, -1);
  EXPECT_EQ(ll.sign, -1);
  EXPECT_EQ(ll.offsets, (std::vector<int>{-1, 0}));

  for (int i : {1, 2}) {
    const FamilySignature id = family_signature(en.families[static_cast<std::size_t>(i)], cfg);
    EXPECT_EQ(id.shift, 0);
    EXPECT_EQ(id.sign, 1);
  }
}

TEST(FamilySignature, NonCyclicAssignmentThrows) {
  // Three walkers whose ends swap only the first two: not a power of (1 2 3).
  const auto cfg = validate_config(6, 2, {0, 2, 4}, {0, 2, 4});
  WalkerFamily fam;
  fam.steps = {{Step::CounterClockwise, Step::CounterClockwise},
               {Step::Clockwise, Step::Clockwise},
               {Step::CounterClockwise, Step::Clockwise}};
  EXPECT_EQ(kind_of([&] { family_signature(fam, cfg); }), ErrorKind::NotCyclic);
}

TEST(EnumerateFamilies, InvariantsOnSmallGrid) {
  for (int M : {2, 3, 4, 5, 6}) {
    for (int N : {0, 1, 2, 3, 4}) {
      for (int r = 1; r <= 3; ++r) {
        for (const auto& cfg : valid_configs(M, N, r)) {
          const auto en = enumerate_families(cfg);
          if (r == 1) {
            EXPECT_EQ(en.signed_gf, q_poly(M, N, cfg.a[0], cfg.e[0]));
          }
          if (r % 2 == 1) {
            EXPECT_EQ(en.signed_gf, en.unsigned_gf);
          }
          for (const auto& fam : en.families) {
            // vertex-disjoint at every level, including 0 and N
            std::vector<int> pos(cfg.a);
            for (int s = 0; s <= N; ++s) {
              if (s > 0)
                for (int i = 0; i < r; ++i)
                  pos[static_cast<std::size_t>(i)] += fam.steps[static_cast<std::size_t>(i)][static_cast<std::size_t>(s - 1)] == Step::Clockwise ? -1 : 1;
              for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j)
                  EXPECT_NE(((pos[static_cast<std::size_t>(i)] % M) + M) % M, ((pos[static_cast<std::size_t>(j)] % M) + M) % M);
            }
            for (int i = 0; i < r; ++i) {
              const int target = cfg.e[static_cast<std::size_t>(((i + fam.shift) % r + r) % r)];
              EXPECT_EQ(N - 2 * fam.left_counts[static_cast<std::size_t>(i)],
                        target + fam.offsets[static_cast<std::size_t>(i)] * M - cfg.a[static_cast<std::size_t>(i)]);
            }
            EXPECT_EQ(fam.sign, cyclic_sign(r, fam.shift));
            if (M % 2 == 0) EXPECT_TRUE(fam.lift_consistent);
          }
        }
      }
    }
  }
}

// Two paths of opposite parity swap sides across an edge without sharing a
// vertex, so an odd cylinder can carry a non-identity assignment.
TEST(EnumerateFamilies, OddCylinderAdmitsTransposition) {
  const CylinderConfig cfg = validate_config(3, 4, {0, 2}, {0, 2});
  const auto en = enumerate_families(cfg);
  int swapped = 0;
  for (const auto& fam : en.families) {
    if (fam.shift % 2 != 0) {
      ++swapped;
      EXPECT_EQ(fam.sign, -1);
    }
  }
  EXPECT_EQ(swapped, 8);
  EXPECT_EQ(en.signed_gf, signed_gf_det(cfg));
}

TEST(EnumerateFamilies, OddCylinderIdentityWhileShort) {
  for (int M : {3, 5, 7})
    for (int N = 0; N < M; ++N)
      for (int r = 1; r <= 2; ++r)
        for (const auto& cfg : valid_configs(M, N, r))
          for (const auto& fam : enumerate_families(cfg).families) EXPECT_EQ((fam.shift % r + r) % r, 0);
}

TEST(CyclicSign, Values) {
  EXPECT_EQ(cyclic_sign(3, 1), 1);
  EXPECT_EQ(cyclic_sign(3, -2), 1);
  EXPECT_EQ(cyclic_sign(2, 1), -1);
  EXPECT_EQ(cyclic_sign(4, -1), -1);
  EXPECT_EQ(cyclic_sign(4, 2), 1);
}

}  // namespace
}  // namespace cylwalk
