#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "weylgraded/errors.hpp"
#include "weylgraded/graded_lattice.hpp"
#include "weylgraded/gwa_rings.hpp"

using namespace weylgraded;

namespace {

Polynomial zp(int offset) { return Polynomial::linear(Rational(offset)); }

std::vector<AdmissiblePair> admissible_up_to(Int max_n) {
  std::vector<AdmissiblePair> out;
  for (Int n = 1; n <= max_n; ++n) {
    for (const FinSet& J : oracle::all_subsets(0, n - 1)) out.push_back({J, n});
  }
  return out;
}

}  // namespace

TEST(GwaRings, PresentationExamples) {
  const GWAPresentation veronese = present({}, 2);
  EXPECT_EQ(veronese.f, Polynomial::z() * zp(1));
  EXPECT_EQ(veronese.idealizer_factor, Polynomial(1));
  const GWAPresentation idealizer = present({0}, 1);
  EXPECT_EQ(idealizer.f, Polynomial(1));
  EXPECT_EQ(idealizer.idealizer_factor, Polynomial::z());
  const GWAPresentation half = present({0}, 2);
  EXPECT_EQ(half.f, zp(1));
  EXPECT_EQ(half.idealizer_factor, Polynomial::z());
  ASSERT_EQ(half.relations.size(), 4U);
  EXPECT_EQ(half.relations[0], "X*z - z*X = 2*X");
  EXPECT_EQ(half.relations[3], "Y*X = (z-1)");
  EXPECT_THROW(present({2}, 2), InvalidArgument);
}

TEST(GwaRings, PresentationFactorsMultiplyToRisingProduct) {
  for (const auto& [J, n] : admissible_up_to(5)) {
    const GWAPresentation p = present(J, n);
    EXPECT_EQ(p.f * p.idealizer_factor, Polynomial::rising(0, n - 1));
    EXPECT_TRUE(gwa_simple_hereditary(p.f, n));
  }
}

TEST(GwaRings, SimpleHereditaryTest) {
  EXPECT_TRUE(gwa_simple_hereditary(Polynomial::z() * zp(1), 2));
  EXPECT_FALSE(gwa_simple_hereditary(Polynomial::z() * zp(2), 2));
  EXPECT_FALSE(gwa_simple_hereditary(Polynomial::z() * Polynomial::z(), 3));
  EXPECT_TRUE(gwa_simple_hereditary(Polynomial::z() * Polynomial::z() + 1, 1));
  EXPECT_FALSE(gwa_simple_hereditary((Polynomial::z() * Polynomial::z() + 1) *
                                         (zp(4) * zp(4) + 1),
                                     2));
}

TEST(GwaRings, ClosedFormExamples) {
  EXPECT_EQ(graded_piece_closed_form({0}, 1, -2), (GradedPiece{Polynomial::z(), 2}));
  EXPECT_EQ(graded_piece_closed_form({0}, 1, 1), (GradedPiece{Polynomial::z(), -1}));
  EXPECT_EQ(graded_piece_closed_form({0}, 2, 1), (GradedPiece{Polynomial::z() * zp(1), -2}));
  EXPECT_EQ(graded_piece_closed_form({0, 1}, 2, 0), (GradedPiece{Polynomial(1), 0}));
}

// S({0}, 1) has S_j = z y^{-j} k[z] for every j != 0 and S_0 = k[z].
TEST(GwaRings, IdealizerOfAPieces) {
  for (Int j = -4; j <= 4; ++j) {
    const GradedPiece expected = j == 0 ? GradedPiece{Polynomial(1), 0} : GradedPiece{Polynomial::z(), -j};
    EXPECT_EQ(graded_piece_closed_form({0}, 1, j), expected);
    EXPECT_EQ(twisted_endo_piece_oracle({0}, 1, j), expected);
  }
}

TEST(GwaRings, OracleExamples) {
  const GradedLattice A = GradedLattice::unit();
  for (Int j = -3; j <= 3; ++j) {
    EXPECT_EQ(twisted_endo_piece_oracle({}, 1, j), piece_from_x_form(A.generator(j), -j));
  }
  EXPECT_EQ(twisted_endo_piece_oracle({0, 1}, 2, -1), (GradedPiece{Polynomial::z() * zp(1), 2}));
}

TEST(GwaRings, OracleMatchesClosedForm) {
  for (const auto& [J, n] : admissible_up_to(3)) {
    for (Int j = -3; j <= 3; ++j) {
      EXPECT_EQ(twisted_endo_piece_oracle(J, n, j), graded_piece_closed_form(J, n, j))
          << J << " n=" << n << " j=" << j;
    }
  }
}

TEST(GwaRings, VeronesePieces) {
  const GradedLattice A = GradedLattice::unit();
  for (Int n = 1; n <= 4; ++n) {
    for (Int j = -4; j <= 4; ++j) {
      EXPECT_EQ(graded_piece_closed_form({}, n, j), piece_from_x_form(A.generator(n * j), -n * j));
    }
  }
  // A^(2): S_1 = x^2 k[z] = z(z+1) y^{-2} k[z].
  EXPECT_EQ(graded_piece_closed_form({}, 2, 1), (GradedPiece{Polynomial::z() * zp(1), -2}));
}

TEST(GwaRings, RingStructure) {
  for (const auto& [J, n] : admissible_up_to(4)) {
    EXPECT_TRUE(verify_ring_closure(J, n, 3)) << J << " n=" << n;
    EXPECT_TRUE(verify_gwa_embedding(J, n)) << J << " n=" << n;
  }
  EXPECT_TRUE(verify_ring_closure({0, 2}, 3, 2));
}

TEST(GwaRings, PieceElements) {
  const SkewElement u = piece_element({Polynomial::z(), 2});
  EXPECT_EQ(u, SkewElement(RationalFunction(Polynomial::z()), 0) * SkewElement::y_power(2));
  EXPECT_EQ(piece_from_x_form(u.coefficient(-2), 2), (GradedPiece{Polynomial::z(), 2}));
  EXPECT_THROW(piece_from_x_form(RationalFunction(1), 2), InvalidArgument);
}
