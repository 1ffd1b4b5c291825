#include <gtest/gtest.h>

#include <bit>
#include <cstdlib>
#include <random>
#include <vector>

#include "psidet/fixtures.hpp"
#include "psidet/fqcount.hpp"
#include "psidet/motive.hpp"

using namespace psidet;

namespace {

RatMatrix span_of(const std::vector<std::vector<int>>& rows, size_t ell) {
  if (rows.empty()) return RatMatrix(0, ell);
  std::vector<std::vector<Rat>> q;
  for (const auto& r : rows) {
    std::vector<Rat> row(ell, Rat(0));
    for (size_t i = 0; i < r.size(); ++i) row[i] = Rat(r[i]);
    q.push_back(row);
  }
  return RatMatrix::from_rows(q);
}

SubspaceConfig config_of(const std::string& canonical_mask) {
  return config_from_selection(selection_from_mask(3, 0, canonical_mask));
}

unsigned long long pow_u(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::vector<uint32_t>> reduce_rows(const RatMatrix& m, uint32_t q) {
  std::vector<std::vector<uint32_t>> out;
  for (size_t r = 0; r < m.rows(); ++r) {
    std::vector<Int> w = primitive_int_row(m.row(r));
    std::vector<uint32_t> row(m.cols());
    for (size_t c = 0; c < m.cols(); ++c)
      row[c] = static_cast<uint32_t>(mpz_fdiv_ui(w[c].get_mpz_t(), q));
    out.push_back(row);
  }
  return out;
}

} // namespace

TEST(DetCount, Examples) {
  EXPECT_EQ(count_det_complement(2, 2), 6ULL);
  EXPECT_EQ(count_det_complement(3, 2), 168ULL);
  EXPECT_EQ(count_det_complement(1, 5), 4ULL);
}

TEST(DetCount, MatchesProductFormula) {
  for (size_t ell = 1; ell <= 4; ++ell) {
    for (uint32_t q : {2u, 3u}) {
      unsigned long long expected = pow_u(q, static_cast<unsigned>(ell * (ell - 1) / 2));
      for (unsigned i = 1; i <= ell; ++i) expected *= pow_u(q, i) - 1;
      EXPECT_EQ(count_det_complement(ell, q), expected) << "ell=" << ell << " q=" << q;
    }
  }
}

TEST(DetCount, BudgetRefusal) {
  try {
    count_det_complement(4, 2, 1000);
    FAIL() << "expected a resource error";
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), errkind::resource);
    EXPECT_NE(std::string(e.what()).find("65536"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
  EXPECT_THROW(count_det_complement(3, 2, 511), error);
  EXPECT_EQ(count_det_complement(3, 2, 512), 168ULL);
}

TEST(DetCount, EnvBudget) {
  setenv("PSIDET_ENUM_BUDGET", "100", 1);
  EXPECT_EQ(count_det_complement(2, 2), 6ULL);
  try {
    count_det_complement(3, 2);
    FAIL() << "expected a resource error";
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), errkind::resource);
  }
  setenv("PSIDET_ENUM_BUDGET", "junk", 1);
  try {
    count_det_complement(2, 2);
    FAIL() << "expected an input error";
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), errkind::input);
  }
  unsetenv("PSIDET_ENUM_BUDGET");
  EXPECT_EQ(count_det_complement(3, 2), 168ULL);
}

TEST(Frames, Examples) {
  SubspaceConfig whole = make_config(3, {});
  EXPECT_EQ(count_frames(whole, 2), 168ULL);
  EXPECT_EQ(count_frames(whole, 2), count_det_complement(3, 2));

  SubspaceConfig coplanar = make_config(
      3, {span_of({{1, 0, 0}}, 3), span_of({{0, 1, 0}}, 3), span_of({{1, 1, 0}}, 3)});
  EXPECT_EQ(count_frames(coplanar, 3), 0ULL);

  SubspaceConfig dead = make_config(3, {RatMatrix(0, 3)});
  for (uint32_t q : {2u, 3u, 5u}) EXPECT_EQ(count_frames(dead, q), 0ULL);

  SubspaceConfig axes = make_config(
      3, {span_of({{1, 0, 0}}, 3), span_of({{0, 1, 0}}, 3), span_of({{0, 0, 1}}, 3)});
  for (uint32_t q : {2u, 3u, 5u})
    EXPECT_EQ(count_frames(axes, q), static_cast<unsigned long long>(pow_u(q - 1, 3)));
}

TEST(Frames, SelectionSweepMatchesClasses) {
  for (unsigned m = 0; m < 64; ++m) {
    std::string mask(6, '0');
    for (unsigned i = 0; i < 6; ++i)
      if (m & (1u << i)) mask[i] = '1';
    SubspaceConfig cfg = config_of(mask);
    const LPoly cls = frame_class_r3(cfg);
    for (uint32_t q : {2u, 3u}) {
      EXPECT_EQ(Int(static_cast<unsigned long>(count_frames(cfg, q))), cls.eval(Int(q)))
          << "mask " << mask << " q " << q;
    }
  }
}

TEST(Frames, PermutationAndBasisChangeInvariance) {
  std::mt19937_64 rng(424243);
  std::uniform_int_distribution<int> pick(0, 2), shear(-2, 2);
  const char* masks[] = {"111011", "100101", "110001", "000000", "111111", "010110"};
  for (const char* mask : masks) {
    SubspaceConfig cfg = config_of(mask);
    for (uint32_t q : {2u, 3u}) {
      const unsigned long long base = count_frames(cfg, q);

      std::vector<RatMatrix> permuted = {cfg.spaces[2], cfg.spaces[0], cfg.spaces[1]};
      EXPECT_EQ(count_frames(make_config(3, permuted), q), base) << mask;

      // Integer row operations keep the row lattice, hence the point set.
      std::vector<RatMatrix> sheared;
      for (const RatMatrix& s : cfg.spaces) {
        std::vector<std::vector<Rat>> rows;
        for (size_t r = 0; r < s.rows(); ++r) rows.push_back(s.row(r));
        for (int t = 0; t < 4 && rows.size() > 1; ++t) {
          size_t a = static_cast<size_t>(pick(rng)) % rows.size();
          size_t b = static_cast<size_t>(pick(rng)) % rows.size();
          if (a == b) continue;
          int k = shear(rng);
          for (size_t c = 0; c < rows[a].size(); ++c) rows[a][c] += Rat(k) * rows[b][c];
        }
        sheared.push_back(rows.empty() ? RatMatrix(0, 3) : RatMatrix::from_rows(rows));
      }
      EXPECT_EQ(count_frames(make_config(3, sheared), q), base) << mask;
    }
  }
}

TEST(Frames, ThreadPartitionDeterminism) {
  SubspaceConfig whole = make_config(3, {});
  for (uint32_t q : {3u, 5u}) {
    const unsigned long long serial = count_frames(whole, q, 0, 1);
    EXPECT_EQ(count_frames(whole, q, 0, 3), serial);
    EXPECT_EQ(count_frames(whole, q, 0, 8), serial);
  }
  EXPECT_EQ(count_frames(whole, 5, 0, 4), 1488000ULL);
  EXPECT_EQ(count_det_complement(4, 2, 0, 3), count_det_complement(4, 2, 0, 1));
}

TEST(Frames, BadReductionRefused) {
  // Rational rank 2, but both rows collapse onto (0,0,1) modulo 2.
  SubspaceConfig cfg = make_config(3, {span_of({{2, 0, 1}, {0, 2, 1}}, 3)});
  try {
    count_frames(cfg, 2);
    FAIL() << "expected an input error";
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), errkind::input);
    EXPECT_NE(std::string(e.what()).find("modulo 2"), std::string::npos);
  }
  // At q=3 the reduction is fine and the count agrees with the class.
  EXPECT_EQ(Int(static_cast<unsigned long>(count_frames(cfg, 3))),
            frame_class_r3(cfg).eval(Int(3)));
}

TEST(Frames, RandomHyperplanesMatchClasses) {
  std::mt19937_64 rng(771177);
  std::uniform_int_distribution<int> entry(-2, 2);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<Rat>> normals;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rat> n(3);
      bool nonzero = false;
      do {
        nonzero = false;
        for (int c = 0; c < 3; ++c) {
          n[c] = Rat(entry(rng));
          if (n[c] != 0) nonzero = true;
        }
      } while (!nonzero);
      normals.push_back(n);
    }
    std::vector<RatMatrix> spaces;
    for (const auto& n : normals) spaces.push_back(RatMatrix::from_rows({n}).nullspace());
    SubspaceConfig cfg = make_config(3, spaces);
    const LPoly cls = frame_class_r3(cfg);

    for (uint32_t q : {2u, 3u}) {
      // Use the configuration only when its dimension profile survives
      // reduction; that is exactly when counts are comparable.
      RatMatrix nm = RatMatrix::from_rows(normals);
      bool stable = true;
      for (size_t a = 0; a < 3 && stable; ++a)
        for (size_t b = a + 1; b < 3 && stable; ++b) {
          RatMatrix pair = RatMatrix::from_rows({normals[a], normals[b]});
          stable = fq_rank(reduce_rows(pair, q), 3, q) == pair.rank();
        }
      stable = stable && fq_rank(reduce_rows(nm, q), 3, q) == nm.rank();
      // The rational nullspace basis may span a finer lattice than the
      // integer points of the hyperplane; the count is only defined when
      // the basis itself survives reduction.
      for (const RatMatrix& s : cfg.spaces)
        stable = stable && fq_rank(reduce_rows(s, q), 3, q) == s.rank();
      if (!stable) continue;
      EXPECT_EQ(Int(static_cast<unsigned long>(count_frames(cfg, q))), cls.eval(Int(q)))
          << "trial " << trial << " q " << q;
      ++checked;
    }
  }
  EXPECT_GE(checked, 30);
}

TEST(Strata, CountsMatchClasses) {
  const std::array<LPoly, 64> classes = inclusion_exclusion_strata();
  for (uint32_t q : {2u, 3u}) {
    const std::array<unsigned long long, 64> counts = count_strata(q);
    unsigned long long total = 0;
    for (unsigned i = 0; i < 64; ++i) {
      total += counts[i];
      EXPECT_EQ(Int(static_cast<unsigned long>(counts[i])), classes[i].eval(Int(q)))
          << "stratum " << i << " q " << q;
    }
    EXPECT_EQ(total, count_det_complement(3, q));
  }
  EXPECT_EQ(count_stratum(63, 2), 0ULL);
  EXPECT_EQ(count_stratum(0, 2), 2ULL);
}

TEST(Verify, MatchesAndReports) {
  CountRequest det;
  det.kind = CountKind::det_complement;
  det.ell = 3;
  VerifyReport rep = verify_class(det_complement_class(3, false), det, {2, 3});
  EXPECT_TRUE(rep.all_match);
  ASSERT_EQ(rep.primes.size(), 2u);
  EXPECT_EQ(rep.primes[0].q, 2u);
  EXPECT_TRUE(rep.primes[0].counted);
  EXPECT_EQ(rep.primes[0].actual, 168ULL);
  EXPECT_EQ(rep.primes[0].expected, Int(168));

  CountRequest empty_locus;
  empty_locus.kind = CountKind::frame_locus;
  empty_locus.config = make_config(
      3, {span_of({{1, 0, 0}}, 3), span_of({{0, 1, 0}}, 3), span_of({{1, 1, 0}}, 3)});
  EXPECT_TRUE(verify_class(LPoly::zero(), empty_locus, {2, 3}).all_match);
}

TEST(Verify, KnownDiscrepancyFixtures) {
  const std::vector<DiscrepancyFixture>& fixtures = known_discrepancies();
  ASSERT_EQ(fixtures.size(), 2u);

  for (const DiscrepancyFixture& f : fixtures) {
    CountRequest req;
    req.kind = CountKind::frame_locus;
    req.config = f.config;
    VerifyReport bad = verify_class(f.reported, req, {2, 3});
    EXPECT_FALSE(bad.all_match) << f.name;
    VerifyReport good = verify_class(f.actual, req, {2, 3});
    EXPECT_TRUE(good.all_match) << f.name;
    EXPECT_TRUE(is_known_discrepancy(f.config));
  }

  EXPECT_EQ(fixtures[0].name, "three-full-spaces");
  EXPECT_EQ(fixtures[0].reported.eval(2), Int(266));
  EXPECT_EQ(fixtures[0].actual.eval(2), Int(168));
  EXPECT_EQ(fixtures[1].reported, parse_lexpr("(L+2)*(L-1)^3"));
  EXPECT_EQ(fixtures[1].actual, parse_lexpr("L*(L-1)^3"));

  SubspaceConfig axes = make_config(
      3, {span_of({{1, 0, 0}}, 3), span_of({{0, 1, 0}}, 3), span_of({{0, 0, 1}}, 3)});
  EXPECT_FALSE(is_known_discrepancy(axes));
}

TEST(Verify, ResourceIsolation) {
  CountRequest det;
  det.kind = CountKind::det_complement;
  det.ell = 3;
  det.budget = 1000; // enough for q=2 (512), not for q=3 (19683)
  VerifyReport rep = verify_class(det_complement_class(3, false), det, {2, 3});
  ASSERT_EQ(rep.primes.size(), 2u);
  EXPECT_TRUE(rep.primes[0].counted);
  EXPECT_TRUE(rep.primes[0].match);
  EXPECT_FALSE(rep.primes[1].counted);
  EXPECT_FALSE(rep.primes[1].note.empty());
  EXPECT_FALSE(rep.all_match);
}

TEST(Verify, SelectionRequests) {
  CountRequest req;
  req.kind = CountKind::frame_locus;
  req.selection = selection_from_mask(3, 0, "111011");
  EXPECT_TRUE(verify_class(parse_lexpr("L*(L-1)^3"), req, {2, 3, 5}).all_match);

  CountRequest bare;
  bare.kind = CountKind::frame_locus;
  EXPECT_THROW(verify_class(LPoly::zero(), bare, {2}), error);

  CountRequest stratum;
  stratum.kind = CountKind::ie_stratum;
  stratum.stratum = 0;
  EXPECT_TRUE(verify_class(parse_lexpr("L*(L^2-L-1)*(L-1)^6"), stratum, {2, 3}).all_match);
}

TEST(Frames, GenericSpaceListOverload) {
  // one space: nonzero vectors of the subspace
  RatMatrix plane = span_of({{1, 0, 0}, {0, 1, 0}}, 3);
  for (uint32_t q : {2u, 3u, 5u})
    EXPECT_EQ(count_frames({plane}, 3, q), pow_u(q, 2) - 1);

  // two coordinate subspaces against the rank-two class formula
  for (uint32_t q : {2u, 3u}) {
    for (unsigned m1 = 1; m1 < 16; ++m1) {
      for (unsigned m2 = 1; m2 < 16; ++m2) {
        std::vector<std::vector<int>> r1, r2;
        for (unsigned i = 0; i < 4; ++i) {
          std::vector<int> axis(4, 0);
          axis[i] = 1;
          if (m1 & (1u << i)) r1.push_back(axis);
          if (m2 & (1u << i)) r2.push_back(axis);
        }
        const size_t d1 = r1.size(), d2 = r2.size();
        const size_t d12 = static_cast<size_t>(std::popcount(m1 & m2));
        const LPoly cls = frame_class_r2(d1, d2, d12);
        const unsigned long counted = count_frames({span_of(r1, 4), span_of(r2, 4)}, 4, q);
        EXPECT_EQ(Int(counted), cls.eval(q)) << m1 << "," << m2 << " at q=" << q;
      }
    }
  }

  // the three-space overload agrees with the configuration entry point
  SubspaceConfig cfg = config_of("110001");
  EXPECT_EQ(count_frames(cfg.spaces, cfg.ambient, 3), count_frames(cfg, 3));

  // four full spaces: tuples of independent rows of a 4x4 matrix
  std::vector<RatMatrix> quad(4, full_space(4));
  EXPECT_EQ(count_frames(quad, 4, 2), count_det_complement(4, 2));

  RatMatrix wide = span_of({{1, 0, 0, 0}}, 4);
  EXPECT_THROW(count_frames({wide}, 3, 2), error);
}
