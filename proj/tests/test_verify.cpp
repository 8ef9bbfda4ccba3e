#include <gtest/gtest.h>

#include <set>

#include "gramholes/goldens.hpp"
#include "gramholes/gram.hpp"
#include "gramholes/verify.hpp"

using namespace gramholes;

namespace {

VarSetPtr R() { return VarSet::for_holes(2); }
Polynomial P(std::string_view s) { return Polynomial::parse(R(), s); }

Polynomial det_g1_from_factors() {
  return P("((d+z2)*(z1+z3)-(x1+y1)*(x2+y2))*((d-z2)*(z1-z3)-(x1-y1)*(x2-y2))");
}

}  // namespace

TEST(Delta, TableValues) {
  const std::pair<std::uint64_t, std::uint64_t> expect[] = {{2, 2}, {20, 16}, {144, 96}, {888, 512}};
  for (int n = 1; n <= 4; ++n) {
    const DiagonalExponents e = delta_diag(n);
    EXPECT_EQ(e.alpha, expect[n - 1].first);
    EXPECT_EQ(e.beta, expect[n - 1].second);
    EXPECT_TRUE(e.pure);
  }
}

TEST(Delta, ClosedFormAndTotalDegree) {
  for (int n = 1; n <= 7; ++n) {
    const DiagonalExponents e = delta_diag(n);
    EXPECT_EQ(e.beta, static_cast<std::uint64_t>(2 * n) << (2 * (n - 1)));
    // every diagonal entry has degree n
    EXPECT_EQ(e.alpha + e.beta, n * diagram_count(n, 2));
  }
}

TEST(Chebyshev, FirstValues) {
  const auto v = VarSet::for_holes(1);
  EXPECT_EQ(chebyshev_T(0, v), Polynomial::parse(v, "2"));
  EXPECT_EQ(chebyshev_T(1, v), Polynomial::parse(v, "d"));
  EXPECT_EQ(chebyshev_T(2, v), Polynomial::parse(v, "d^2 - 2"));
  EXPECT_EQ(chebyshev_T(3, v), Polynomial::parse(v, "d^3 - 3*d"));
  // T_i(2 cos t) = 2 cos(i t): d = 2, -2, 0, 1 give exact integer cycles
  const int at0[] = {2, 0, -2, 0}, at1[] = {2, 1, -1, -2, -1, 1};
  auto ev = [&](int i, int d) { return chebyshev_T(i, v).evaluate(std::vector<Int>{Int(d), Int(0)}); };
  for (int i = 0; i <= 12; ++i) {
    EXPECT_EQ(ev(i, 2), Int(2)) << i;
    EXPECT_EQ(ev(i, -2), Int(i % 2 ? -2 : 2)) << i;
    EXPECT_EQ(ev(i, 0), Int(at0[i % 4])) << i;
    EXPECT_EQ(ev(i, 1), Int(at1[i % 6])) << i;
  }
  EXPECT_THROW(chebyshev_T(-1, v), std::invalid_argument);
}

TEST(TypeB, SmallCases) {
  const auto v = VarSet::for_holes(1);
  const VerificationReport r1 = type_b_check(1);
  EXPECT_TRUE(r1.passed());
  EXPECT_EQ(r1.witness["det_text"], "1*d^2-1*a^2");
  EXPECT_TRUE(type_b_check(2).passed());
  // the 6x6 determinant directly against the expanded product
  const Polynomial det = determinant(gram_matrix(2, 1).to_poly()).det;
  EXPECT_EQ(det, Polynomial::parse(v, "(d^2-a^2)^4*((d^2-2)^2-a^2)"));
}

TEST(Involutions, NamedMapsAreInvolutions) {
  for (const auto& name : involution_names()) EXPECT_TRUE(involution(name).is_involution()) << name;
  EXPECT_THROW(involution("h9"), std::invalid_argument);
  EXPECT_EQ(P("x1*x2").var_map(involution("ht")), P("x1*x2"));
}

TEST(Involutions, OnDetG1) {
  const Polynomial det = det_g1_from_factors();
  EXPECT_EQ(det.var_map(involution("h1")), -det);
  EXPECT_EQ(det.var_map(involution("h2")), -det);
  EXPECT_EQ(det.var_map(involution("h3")), det);
  EXPECT_EQ(det.var_map(involution("ht")), det);
  for (const char* g : {"g1", "g2", "g3", "g1g2", "g1g3", "g2g3", "g1g2g3"})
    EXPECT_EQ(det.var_map(involution(g)), det) << g;
  Workbench wb;
  EXPECT_TRUE(involution_suite(1, wb).passed());
}

TEST(Matching, FindsPermutation) {
  const PolyMatrix g = gram_matrix(1, 2).to_poly();
  const std::vector<std::size_t> perm = {2, 0, 3, 1};
  const PolyMatrix shuffled = g.select(perm, perm);
  const auto p = match_simultaneous_permutation(shuffled, g);
  ASSERT_TRUE(p.has_value());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g.at((*p)[i], (*p)[j]), shuffled.at(i, j));
  PolyMatrix broken = shuffled;
  broken.at(0, 1) = P("d");
  EXPECT_FALSE(match_simultaneous_permutation(broken, g).has_value());
}

TEST(FactorOver, Exponents) {
  const std::vector<Polynomial> basis = {P("d"), P("d + z1"), P("x1 - y2")};
  const FactorExponents f = factor_over(P("-3") * P("d").pow(2) * P("x1 - y2").pow(3), basis);
  ASSERT_TRUE(f.complete);
  EXPECT_EQ(f.unit, Int(-3));
  EXPECT_EQ(f.exponents, (std::vector<unsigned>{2, 0, 3}));
  EXPECT_FALSE(factor_over(P("d + 1"), basis).complete);
}

TEST(Oracle, CatchesAWrongDeterminant) {
  const PolyMatrix g = gram_matrix(1, 2).to_poly();
  const Polynomial det = det_g1_from_factors();
  EXPECT_TRUE(evaluation_oracle(g, det, 20, 1).ok);
  const OracleResult bad = evaluation_oracle(g, det + P("d*x1*y1*z3"), 20, 1);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.failing_point.size(), 8u);
}

TEST(Goldens, DetG1AndHighestTermsOfG2) {
  EXPECT_EQ(expand(R(), printed_det_g1()), det_g1_from_factors());
  Workbench wb;
  const Polynomial& h2 = wb.h_det(2);
  EXPECT_EQ(h2, expand(R(), printed_h_det_g2()));
  EXPECT_TRUE(divides_check(h2, det_g1_from_factors(), 4).divides);
  EXPECT_EQ(h2.total_degree(), 36);
  EXPECT_EQ(h2.min_total_degree(), 36);
}

TEST(Goldens, PrintedDetG2SignDisagreesWithPrintedMatrix) {
  const PolyMatrix m = parse_matrix(R(), printed_g2());
  const Polynomial printed = expand(R(), printed_det_g2());
  EXPECT_FALSE(evaluation_oracle(m, printed, 5, 3).ok);
  EXPECT_TRUE(evaluation_oracle(m, -printed, 20, 3).ok);
}

TEST(Goldens, FactorsParse) {
  for (const GoldenProduct* g : {&printed_det_g2(), &printed_h_det_g3(), &printed_specialized_det_g3()})
    for (const auto& f : parse_factors(R(), *g)) EXPECT_FALSE(f.is_zero());
  EXPECT_EQ(printed_det_g2().sign, -1);
}

TEST(Claims, CheapOnesPass) {
  Workbench wb;
  EXPECT_TRUE(count_check().passed());
  EXPECT_TRUE(g1_check(wb).passed());
  EXPECT_TRUE(delta_check(4, 8).passed());
  EXPECT_TRUE(transpose_law(3).passed());
  EXPECT_TRUE(degree_criterion(3).passed());
  EXPECT_TRUE(embedding_laws(2).passed());
  EXPECT_TRUE(diagonal_purity(4).passed());
  EXPECT_TRUE(engine_agreement(1, wb).passed());
  EXPECT_TRUE(highest_terms_check(1, wb).passed());
  EXPECT_TRUE(conjecture_harness(Conjecture::kThreeHoleDiagonal, 1, {}, wb).passed());
  EXPECT_TRUE(conjecture_harness(Conjecture::kThreeHoleDiagonal, 2, {}, wb).passed());
}

TEST(Claims, ThreeHoleProductAsPrinted) {
  // the printed squared factor repeats x{1,-1,-2}; with x{1,-1,2} in its
  // place it agrees, and so does the printed matrix
  const VerificationReport r = three_holes_check();
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_FALSE(r.witness["det_matches"].get<bool>());
  EXPECT_TRUE(r.witness["printed_matrix_det_matches_computed"].get<bool>());
  EXPECT_TRUE(r.witness["det_matches_with_x{1,-1,2}_for_repeated_factor"].get<bool>());
}

TEST(Claims, EmbeddingLawsNeedTwoChords) {
  const VerificationReport r = embedding_laws(0);
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_TRUE(r.witness.contains("error"));
}

TEST(Claims, DifferenceOfSquaresAtOneChord) {
  // det G_1 changes sign under h1 while u^2 - v^2 cannot, so the printed
  // factors give a v outside R2 and the claim fails
  Workbench wb;
  const ConjectureCandidates c = det_g1_candidates();
  ASSERT_TRUE(c.u && c.v);
  EXPECT_EQ(*c.u * *c.u - *c.v * *c.v, det_g1_from_factors());
  EXPECT_EQ(c.u->var_map(involution("h1")), *c.v);
  const VerificationReport r = conjecture_harness(Conjecture::kDifferenceOfSquares, 1, c, wb);
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_TRUE(r.witness["difference_of_squares"].get<bool>());
  EXPECT_TRUE(r.witness["det_h1_odd"].get<bool>());
  EXPECT_FALSE(r.witness["u_in_R1"].get<bool>());
}

TEST(Claims, ConjectureInputsAndScope) {
  Workbench wb;
  EXPECT_EQ(conjecture_harness(Conjecture::kNewFactorPowers, 2, {}, wb).verdict, Verdict::kFail);
  EXPECT_EQ(conjecture_harness(Conjecture::kG1Powers, 4, {}, wb).verdict, Verdict::kSkipped);
  EXPECT_THROW(conjecture_harness(static_cast<Conjecture>(9), 1, {}, wb), std::invalid_argument);
}

TEST(Registry, IdsSortedUniqueAndFindable) {
  const auto& reg = claim_registry();
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    ids.insert(reg[i].id);
    if (i) EXPECT_LT(reg[i - 1].id, reg[i].id);
    EXPECT_EQ(find_claim(reg[i].id), &reg[i]);
  }
  EXPECT_EQ(ids.size(), reg.size());
  EXPECT_EQ(find_claim("nope"), nullptr);
  for (const char* id : {"diagram-counts", "det-g2", "diagonal-product", "reduction", "difference-of-squares"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Reports, JsonAndTable) {
  Workbench wb;
  const VerificationReport r = find_claim("diagram-counts")->run(0, wb);
  const nlohmann::json j = report_to_json(r);
  for (const char* key : {"claim", "statement", "scope", "verdict", "witness", "seconds"}) EXPECT_TRUE(j.contains(key));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(reports_to_json({r, r}).size(), 2u);
  const std::string t = summary_table({r});
  EXPECT_NE(t.find("diagram-counts"), std::string::npos);
  EXPECT_NE(t.find("pass"), std::string::npos);
  EXPECT_EQ(verdict_name(Verdict::kSkipped), "skipped-infeasible");
}
